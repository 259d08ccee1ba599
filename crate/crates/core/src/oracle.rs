//! Slow reference implementations used to cross-check the fast paths.

use std::collections::{HashSet, VecDeque};

use crate::connectivity::{classify, ConnectivityClass, ConnectivityTag};
use crate::diameter::{lattice_diameter_bruteforce, lattice_diameter_fast};
use crate::error::Result;
use crate::lattice::{convex_hull, is_digital_convex, AffineUnimodularMap, DigitalSet, LatticePoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Matrix entries range over `[−max_entry, max_entry]`.
    pub max_entry: i64,
    /// Maps whose normalizing translation exceeds this in either coordinate
    /// are skipped.
    pub max_translation: i64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_entry: 8, max_translation: 1 << 20 }
    }
}

/// Tries every integer matrix with entries in `[−B, B]` and determinant ±1,
/// in lexicographic order of `(a, b, c, d)`, translated so the image's
/// minimum corner is the origin. Returns the first one whose image classifies
/// at least as strongly as `target`.
pub fn exhaustive_unimodular_search(
    s: &DigitalSet,
    target: ConnectivityTag,
    budget: SearchBudget,
) -> Result<Option<AffineUnimodularMap>> {
    let b = budget.max_entry.max(1);
    for a in -b..=b {
        for bb in -b..=b {
            for c in -b..=b {
                for d in -b..=b {
                    let det = a * d - bb * c;
                    if det != 1 && det != -1 {
                        continue;
                    }
                    let lin = AffineUnimodularMap::new([[a, bb], [c, d]], [0, 0])?;
                    let img = lin.apply_set(s)?;
                    let Some((min_x, min_y, _, _)) = img.bounds() else { return Ok(None) };
                    if min_x.abs() > budget.max_translation || min_y.abs() > budget.max_translation {
                        continue;
                    }
                    if classify(&img)?.tag() >= target {
                        return Ok(Some(AffineUnimodularMap::new([[a, bb], [c, d]], [-min_x, -min_y])?));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub determinant_ok: bool,
    pub image_matches: bool,
    pub digital_convex: bool,
    pub connectivity: Option<ConnectivityClass>,
    pub connectivity_ok: bool,
    pub diameter_preserved: bool,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.determinant_ok && self.image_matches && self.digital_convex && self.connectivity_ok && self.diameter_preserved
    }

    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.determinant_ok, "determinant"),
            (self.image_matches, "image"),
            (self.digital_convex, "digital convexity"),
            (self.connectivity_ok, "connectivity"),
            (self.diameter_preserved, "diameter"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

/// Below this size diameters are recomputed by the quadratic pair scan.
const BRUTE_DIAMETER_MAX: usize = 1500;

fn diameter_count(s: &DigitalSet) -> Result<u64> {
    if s.len() <= BRUTE_DIAMETER_MAX {
        Ok(lattice_diameter_bruteforce(s)?.k)
    } else {
        Ok(lattice_diameter_fast(s, &convex_hull(s)?)?.0.k)
    }
}

/// Checks an output `c` claimed to be `m(s)`. Never fails: every check that
/// cannot be carried out is reported as failed.
pub fn verify_result(s: &DigitalSet, m: &AffineUnimodularMap, c: &DigitalSet) -> VerificationReport {
    let determinant_ok = m.determinant().abs() == 1;
    let image_matches = m.apply_set(s).map(|img| &img == c).unwrap_or(false);
    let digital_convex = !c.is_empty() && is_digital_convex(c).unwrap_or(false);
    let connectivity = classify(c).ok();
    let connectivity_ok = connectivity.as_ref().is_some_and(ConnectivityClass::is_almost_4);
    let diameter_preserved = digital_convex
        && is_digital_convex(s).unwrap_or(false)
        && matches!((diameter_count(s), diameter_count(c)), (Ok(a), Ok(b)) if a == b);
    VerificationReport { determinant_ok, image_matches, digital_convex, connectivity, connectivity_ok, diameter_preserved }
}

fn component_of(pts: &HashSet<LatticePoint>, start: LatticePoint, steps: &[(i64, i64)]) -> HashSet<LatticePoint> {
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for &(dx, dy) in steps {
            let q = p.offset(dx, dy);
            if pts.contains(&q) && seen.insert(q) {
                queue.push_back(q);
            }
        }
    }
    seen
}

const FOUR: [(i64, i64); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
const EIGHT: [(i64, i64); 8] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)];

fn connected(pts: &HashSet<LatticePoint>, steps: &[(i64, i64)]) -> bool {
    match pts.iter().next() {
        None => true,
        Some(&p) => component_of(pts, p, steps).len() == pts.len(),
    }
}

/// Classification straight from the definitions, by breadth-first search and
/// point removal. Quadratic; meant for small sets.
pub fn classify_by_definition(s: &DigitalSet) -> ConnectivityClass {
    let pts: HashSet<LatticePoint> = s.iter().copied().collect();
    if connected(&pts, &FOUR) {
        return ConnectivityClass::Connected4;
    }
    for &p in s {
        let mut rest = pts.clone();
        rest.remove(&p);
        let attached = EIGHT.iter().any(|&(dx, dy)| rest.contains(&p.offset(dx, dy)));
        if attached && connected(&rest, &FOUR) {
            return ConnectivityClass::Almost4 { witness: p };
        }
    }
    if connected(&pts, &EIGHT) {
        ConnectivityClass::Connected8Only
    } else {
        ConnectivityClass::Disconnected
    }
}
