//! Lattice diameter: the largest number of collinear lattice points inside
//! `conv(S)`.
//!
//! The fast search relies on one hull vertex lying on some lattice diameter.
//! For every hull vertex `v` and every triangle of the fan rooted at `v`, the
//! base edge is mapped onto the x-axis by a unimodular map, and the longest
//! lattice segment from the apex is read off the topmost lattice row below it:
//! a drop of `Δ` rows yields `⌊y/Δ⌋ + 1` points. Rows that can no longer beat
//! the current lower bound are never scanned.

use serde::{Deserialize, Serialize};

use crate::arith::{ceil_div, extended_gcd, floor_div, gcd, isqrt_ceil};
use crate::error::{Error, Result};
use crate::lattice::{
    convex_hull, pick_counts, polygon_lattice_count, segment_lattice_count, AffineUnimodularMap, DigitalSet,
    HullPolygon, LatticePoint,
};

/// A maximal collinear lattice segment of `conv(S)`.
///
/// `p_start` is the lexicographically smaller endpoint and
/// `p_end = p_start + (k − 1)·direction`. A singleton has direction `(0, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterResult {
    pub p_start: LatticePoint,
    pub p_end: LatticePoint,
    pub direction: [i64; 2],
    pub k: u64,
}

impl DiameterResult {
    fn singleton(p: LatticePoint) -> Self {
        Self { p_start: p, p_end: p, direction: [0, 0], k: 1 }
    }

    /// Canonical segment between two distinct endpoints.
    pub(crate) fn between(a: LatticePoint, b: LatticePoint) -> Self {
        let (p_start, p_end) = if a <= b { (a, b) } else { (b, a) };
        if p_start == p_end {
            return Self::singleton(p_start);
        }
        let k = segment_lattice_count(p_start, p_end);
        let g = (k - 1) as i64;
        Self { p_start, p_end, direction: [(p_end.x - p_start.x) / g, (p_end.y - p_start.y) / g], k }
    }

    /// Longer wins; ties go to the smaller `(p_start, direction)`.
    fn beats(&self, other: &Self) -> bool {
        self.k > other.k || (self.k == other.k && (self.p_start, self.direction) < (other.p_start, other.direction))
    }

    /// All `k` lattice points of the segment.
    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        (0..self.k as i64).map(|i| self.p_start.offset(i * self.direction[0], i * self.direction[1]))
    }
}

/// Work counters for one run of [`lattice_diameter_fast`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterSearchStats {
    pub triangles_scanned: u64,
    pub rows_scanned: u64,
    pub pruned_by_bound: u64,
    /// Lattice points in each fan triangle, in scan order.
    pub triangle_sizes: Vec<u64>,
    /// `Σ ⌈2·n_t / (λ − 1)⌉ + triangles`, with `λ` the bound in force for each
    /// triangle (`2·n_t` when pruning was off). `rows_scanned` never exceeds it.
    pub row_bound: u64,
    /// The static lower bound used at the start of the search.
    pub lower_bound: u64,
}

/// A unimodular `m` (determinant +1) with `m·v = (1, 0)`.
///
/// With `p·vx + q·vy = 1` the matrix is `[[p, q], [−vy, vx]]`. The Bézout
/// pair is normalized so that `1 ≤ p ≤ |vy|` when `vy ≠ 0` (and `q = 0` when
/// `vy = 0`), which makes the result canonical: `(1, 1) ↦ [[1, 0], [−1, 1]]`.
pub fn primitive_direction_map(v: [i64; 2]) -> Result<AffineUnimodularMap> {
    let [vx, vy] = v;
    if vx == 0 && vy == 0 {
        return Err(Error::ZeroVector);
    }
    let (g, mut p, mut q) = extended_gcd(vx as i128, vy as i128);
    if g != 1 {
        return Err(Error::NotPrimitive(vx, vy));
    }
    if vy != 0 {
        let m = (vy as i128).abs();
        let shift = floor_div(p - 1, m);
        // (p, q) ↦ (p − t·vy', q + t·vx') with t chosen so p lands in [1, |vy|].
        let t = shift * (vy as i128).signum();
        p -= t * vy as i128;
        q += t * vx as i128;
    } else {
        p = vx as i128;
        q = 0;
    }
    let entry = |v: i128| i64::try_from(v).map_err(|_| Error::Overflow("building a direction map"));
    AffineUnimodularMap::new([[entry(p)?, entry(q)?], [-vy, vx]], [0, 0])
}

/// `max(1, ⌈√n / 8⌉)`, a lower bound on the lattice diameter of any digital
/// convex set with `n` points.
pub fn diameter_lower_bound(n: u64) -> u64 {
    isqrt_ceil(n).div_ceil(8).max(1)
}

/// First lattice row below the apex of a triangle whose base lies on `y = 0`.
struct RowHit {
    y: i64,
    lo: i64,
    hi: i64,
}

/// Scans rows `apex.y − 1, apex.y − 2, …` of the triangle with base
/// `(base.0, 0)–(base.1, 0)`. Returns the first non-empty row and the number of
/// rows scanned; stops early after `stop_depth` rows.
fn scan_topmost(base: (i64, i64), apex: LatticePoint, stop_depth: Option<u64>) -> (Option<RowHit>, u64) {
    let (bl, br) = (base.0.min(base.1) as i128, base.0.max(base.1) as i128);
    let (x1, y1) = (apex.x as i128, apex.y as i128);
    let deepest = match stop_depth {
        Some(d) => (y1 - d as i128).max(0),
        None => 0,
    };
    let mut scanned = 0;
    let mut y = y1 - 1;
    while y >= deepest {
        scanned += 1;
        let lo = ceil_div(bl * y1 + (x1 - bl) * y, y1);
        let hi = floor_div(br * y1 + (x1 - br) * y, y1);
        if lo <= hi {
            return (Some(RowHit { y: y as i64, lo: lo as i64, hi: hi as i64 }), scanned);
        }
        y -= 1;
    }
    (None, scanned)
}

/// Topmost lattice point other than the apex in the triangle with base
/// `(base.0, 0)–(base.1, 0)` and apex above it; the leftmost point of that
/// row. `None` if `stop_depth` rows were scanned without success.
pub fn topmost_lattice_point_in_triangle(
    base: (i64, i64),
    apex: LatticePoint,
    stop_depth: Option<u64>,
) -> Result<Option<LatticePoint>> {
    if apex.y <= 0 {
        return Err(Error::PreconditionViolation("apex must lie strictly above the base".into()));
    }
    Ok(scan_topmost(base, apex, stop_depth).0.map(|hit| LatticePoint::new(hit.lo, hit.y)))
}

/// Maps the directed hull edge `a → b` onto `(0, 0) → (g, 0)`.
fn edge_frame(a: LatticePoint, b: LatticePoint) -> Result<(AffineUnimodularMap, i64)> {
    let g = (segment_lattice_count(a, b) - 1) as i64;
    let m = primitive_direction_map([(b.x - a.x) / g, (b.y - a.y) / g])?;
    let moved = m.apply(a)?;
    let frame = AffineUnimodularMap::translation(-moved.x, -moved.y).compose(&m)?;
    Ok((frame, g))
}

/// Fast lattice diameter given `hull = convex_hull(s)`.
pub fn lattice_diameter_fast(s: &DigitalSet, hull: &HullPolygon) -> Result<(DiameterResult, DiameterSearchStats)> {
    search(s, hull, true)
}

/// Same search with pruning disabled; exposed for soundness checks.
#[doc(hidden)]
pub fn lattice_diameter_unpruned(s: &DigitalSet, hull: &HullPolygon) -> Result<(DiameterResult, DiameterSearchStats)> {
    search(s, hull, false)
}

/// Convenience wrapper computing the hull first.
pub fn lattice_diameter(s: &DigitalSet) -> Result<DiameterResult> {
    let hull = convex_hull(s)?;
    Ok(lattice_diameter_fast(s, &hull)?.0)
}

fn search(s: &DigitalSet, hull: &HullPolygon, prune: bool) -> Result<(DiameterResult, DiameterSearchStats)> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = s.len() as u64;
    if polygon_lattice_count(hull) != n {
        return Err(Error::NotDigitalConvex);
    }
    let mut stats = DiameterSearchStats { lower_bound: diameter_lower_bound(n), ..Default::default() };
    let v = hull.vertices();
    match v.len() {
        1 => return Ok((DiameterResult::singleton(v[0]), stats)),
        2 => return Ok((DiameterResult::between(v[0], v[1]), stats)),
        _ => {}
    }
    let h = v.len();
    let frames = (0..h)
        .map(|i| {
            let (frame, g) = edge_frame(v[i], v[(i + 1) % h])?;
            Ok((frame, frame.invert()?, g))
        })
        .collect::<Result<Vec<_>>>()?;

    // Hull edges are lattice segments of conv(S) and seed the best-so-far.
    let mut best = DiameterResult::between(v[0], v[1]);
    for i in 1..h {
        let cand = DiameterResult::between(v[i], v[(i + 1) % h]);
        if cand.beats(&best) {
            best = cand;
        }
    }

    for (vi, &apex) in v.iter().enumerate() {
        for step in 1..h - 1 {
            let j = (vi + step) % h;
            let (frame, inverse, g) = &frames[j];
            let mut apex_img = frame.apply(apex)?;
            let mut to_frame = *inverse;
            if apex_img.y < 0 {
                // Not reachable for CCW hulls with determinant +1 frames.
                apex_img.y = -apex_img.y;
                to_frame = to_frame.compose(&AffineUnimodularMap::vertical_flip())?;
            }
            let y1 = apex_img.y as u64;
            let n_t = pick_counts([LatticePoint::new(0, 0), LatticePoint::new(*g, 0), apex_img]).total();
            stats.triangles_scanned += 1;
            stats.triangle_sizes.push(n_t);

            let lambda = stats.lower_bound.max(best.k);
            let stop_depth = (prune && lambda > 1).then(|| y1.div_ceil(lambda - 1));
            stats.row_bound += match stop_depth {
                Some(_) => (2 * n_t).div_ceil(lambda - 1) + 1,
                None => 2 * n_t + 1,
            };
            let (hit, scanned) = scan_topmost((0, *g), apex_img, stop_depth);
            stats.rows_scanned += scanned;
            let Some(hit) = hit else {
                stats.pruned_by_bound += 1;
                continue;
            };
            let drop = y1 - hit.y as u64;
            let k = y1 / drop + 1;
            if k < best.k {
                continue;
            }
            for x in hit.lo..=hit.hi {
                let step_x = x - apex_img.x;
                let far = apex_img.offset((k as i64 - 1) * step_x, -((k as i64 - 1) * drop as i64));
                let cand = DiameterResult::between(apex, to_frame.apply(far)?);
                debug_assert_eq!(cand.k, k);
                if cand.beats(&best) {
                    best = cand;
                }
            }
        }
    }
    Ok((best, stats))
}

/// Reference diameter by enumerating all point pairs of `s`. `O(n²)`.
pub fn lattice_diameter_bruteforce(s: &DigitalSet) -> Result<DiameterResult> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if !crate::lattice::is_digital_convex(s)? {
        return Err(Error::NotDigitalConvex);
    }
    let pts = s.points();
    let mut best = DiameterResult::singleton(pts[0]);
    for (i, &p) in pts.iter().enumerate() {
        for &q in &pts[i + 1..] {
            let dx = (q.x - p.x) as i128;
            let dy = (q.y - p.y) as i128;
            if (dx.abs().max(dy.abs()) + 1) < best.k as i128 {
                continue;
            }
            let k = gcd(dx, dy) as u64 + 1;
            if k < best.k {
                continue;
            }
            let cand = DiameterResult::between(p, q);
            if cand.beats(&best) {
                if !cand.points().all(|r| s.contains(r)) {
                    return Err(Error::NotDigitalConvex);
                }
                best = cand;
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    /// Topmost lattice point below the apex by scanning the whole bounding box.
    fn topmost_by_enumeration(base: (i64, i64), apex: LatticePoint) -> LatticePoint {
        let hull =
            HullPolygon::from_vertices(vec![pt(base.0.min(base.1), 0), pt(base.0.max(base.1), 0), apex]).unwrap();
        let mut best: Option<LatticePoint> = None;
        for y in (0..apex.y).rev() {
            for x in -50..50 {
                if hull.contains(pt(x, y)) {
                    best = Some(pt(x, y));
                    break;
                }
            }
            if best.is_some() {
                break;
            }
        }
        best.unwrap()
    }

    #[test]
    fn direction_map_examples() {
        assert_eq!(primitive_direction_map([1, 0]).unwrap(), AffineUnimodularMap::identity());
        assert_eq!(primitive_direction_map([1, 1]).unwrap().matrix(), [[1, 0], [-1, 1]]);
        assert_eq!(primitive_direction_map([3, 2]).unwrap().matrix(), [[1, -1], [-2, 3]]);
        assert_eq!(primitive_direction_map([0, 0]), Err(Error::ZeroVector));
        assert_eq!(primitive_direction_map([4, 6]), Err(Error::NotPrimitive(4, 6)));
    }

    #[test]
    fn direction_map_sends_vector_to_unit() {
        for vx in -12i64..=12 {
            for vy in -12i64..=12 {
                if gcd(vx as i128, vy as i128) != 1 {
                    continue;
                }
                let m = primitive_direction_map([vx, vy]).unwrap();
                assert_eq!(m.determinant(), 1);
                assert_eq!(m.apply(pt(vx, vy)).unwrap(), pt(1, 0), "v = ({vx}, {vy})");
                if vy != 0 {
                    let p = m.matrix()[0][0];
                    assert!(1 <= p && p <= vy.abs());
                }
            }
        }
    }

    #[test]
    fn lower_bound_formula() {
        assert_eq!(diameter_lower_bound(1), 1);
        assert_eq!(diameter_lower_bound(64), 1);
        assert_eq!(diameter_lower_bound(65), 2);
        assert_eq!(diameter_lower_bound(6400), 10);
        assert_eq!(diameter_lower_bound(6401), 11);
    }

    #[test]
    fn topmost_examples() {
        let apex = pt(2, 3);
        assert_eq!(topmost_by_enumeration((0, 4), apex), pt(2, 2));
        assert_eq!(topmost_lattice_point_in_triangle((0, 4), apex, None).unwrap(), Some(pt(2, 2)));

        let apex = pt(0, 5);
        assert_eq!(topmost_by_enumeration((0, 1), apex), pt(0, 4));
        assert_eq!(topmost_lattice_point_in_triangle((0, 1), apex, None).unwrap(), Some(pt(0, 4)));
        assert_eq!(topmost_lattice_point_in_triangle((0, 1), apex, Some(1)).unwrap(), Some(pt(0, 4)));
    }

    #[test]
    fn topmost_stops_at_depth() {
        // Apex (3, 7) over base 0..1: the first rows below the apex are empty.
        let apex = pt(3, 7);
        let expected = topmost_by_enumeration((0, 1), apex);
        assert!(expected.y < 6);
        assert_eq!(topmost_lattice_point_in_triangle((0, 1), apex, Some(1)).unwrap(), None);
        assert_eq!(topmost_lattice_point_in_triangle((0, 1), apex, None).unwrap().map(|p| p.y), Some(expected.y));
    }

    #[test]
    fn topmost_matches_enumeration_sweep() {
        for b in 1..6 {
            for ax in -8..12 {
                for ay in 1..12 {
                    let apex = pt(ax, ay);
                    let got = topmost_lattice_point_in_triangle((0, b), apex, None).unwrap().unwrap();
                    assert_eq!(got, topmost_by_enumeration((0, b), apex));
                }
            }
        }
    }

    #[test]
    fn small_diameters() {
        let row = DigitalSet::from_pairs(&[(0, 0), (1, 0), (2, 0)]);
        let d = lattice_diameter(&row).unwrap();
        assert_eq!((d.k, d.direction), (3, [1, 0]));

        let grid: Vec<_> = (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).collect();
        let grid = DigitalSet::from_pairs(&grid);
        assert_eq!(lattice_diameter(&grid).unwrap().k, 3);
        assert_eq!(lattice_diameter_bruteforce(&grid).unwrap().k, 3);

        let pompom = DigitalSet::from_pairs(&[(0, 0), (1, 0), (0, 1), (-1, 3)]);
        assert_eq!(lattice_diameter(&pompom).unwrap().k, 2);
        assert_eq!(lattice_diameter_bruteforce(&pompom).unwrap().k, 2);

        let one = DigitalSet::from_pairs(&[(4, 4)]);
        assert_eq!(lattice_diameter(&one).unwrap(), DiameterResult::singleton(pt(4, 4)));
        assert_eq!(lattice_diameter_bruteforce(&one).unwrap().k, 1);
        assert_eq!(lattice_diameter_bruteforce(&DigitalSet::from_pairs(&[(0, 0), (1, 0), (0, 1)])).unwrap().k, 2);
    }

    #[test]
    fn rejects_non_convex() {
        let gap = DigitalSet::from_pairs(&[(0, 0), (2, 0), (0, 1)]);
        assert_eq!(lattice_diameter(&gap), Err(Error::NotDigitalConvex));
        assert_eq!(lattice_diameter_bruteforce(&gap), Err(Error::NotDigitalConvex));
    }

    #[test]
    fn result_segment_lies_in_set() {
        let disc: Vec<_> =
            (-6i64..=6).flat_map(|x| (-6i64..=6).map(move |y| (x, y))).filter(|(x, y)| x * x + y * y <= 30).collect();
        let disc = DigitalSet::from_pairs(&disc);
        let d = lattice_diameter(&disc).unwrap();
        assert!(d.points().all(|p| disc.contains(p)));
        assert_eq!(d.k, lattice_diameter_bruteforce(&disc).unwrap().k);
    }
}
