use crate::arith::{ceil_div, floor_div, gcd};
use crate::error::{Error, Result};

use super::cross;
use super::hull::{convex_hull, HullPolygon};
use super::point::LatticePoint;
use super::set::DigitalSet;

/// Pick's quantities for a lattice triangle.
///
/// For a nondegenerate triangle `twice_area = 2·interior + boundary − 2`.
/// A degenerate triangle has `twice_area = 0`, `interior = 0` and `boundary`
/// equal to the number of lattice points on the segment it spans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PickCounts {
    pub twice_area: u128,
    pub boundary: u64,
    pub interior: u64,
}

impl PickCounts {
    pub fn total(&self) -> u64 {
        self.boundary + self.interior
    }
}

/// Number of lattice points on the closed segment `pq`.
pub fn segment_lattice_count(p: LatticePoint, q: LatticePoint) -> u64 {
    let dx = q.x as i128 - p.x as i128;
    let dy = q.y as i128 - p.y as i128;
    (gcd(dx, dy) + 1) as u64
}

pub fn pick_counts(t: [LatticePoint; 3]) -> PickCounts {
    let [a, b, c] = t;
    let twice_area = cross(a, b, c).unsigned_abs();
    if twice_area == 0 {
        // Collinear: the lattice points of the spanning segment.
        let (lo, hi) = [(a, b), (b, c), (a, c)]
            .into_iter()
            .max_by_key(|(p, q)| segment_lattice_count(*p, *q))
            .expect("three candidate segments");
        return PickCounts { twice_area: 0, boundary: segment_lattice_count(lo, hi), interior: 0 };
    }
    let boundary = segment_lattice_count(a, b) + segment_lattice_count(b, c) + segment_lattice_count(c, a) - 3;
    let interior = ((twice_area + 2 - boundary as u128) / 2) as u64;
    PickCounts { twice_area, boundary, interior }
}

/// `|p ∩ Z²|` from Pick's theorem, in `O(h)`.
pub fn polygon_lattice_count(p: &HullPolygon) -> u64 {
    let v = p.vertices();
    match v.len() {
        0 => 0,
        1 => 1,
        2 => segment_lattice_count(v[0], v[1]),
        _ => {
            let origin = v[0];
            let twice_area: u128 = v.windows(2).skip(1).map(|w| cross(origin, w[0], w[1]) as u128).sum();
            let boundary: u128 = p.edges().map(|(a, b)| segment_lattice_count(a, b) as u128 - 1).sum();
            let interior = (twice_area + 2 - boundary) / 2;
            (interior + boundary) as u64
        }
    }
}

/// Inclusive x-range of lattice points of a CCW convex polygon on row `y`,
/// or `None` if the row misses it. Each edge contributes one exact half-plane
/// bound, rounded inward.
pub(crate) fn row_span(vertices: &[LatticePoint], y: i64) -> Option<(i64, i64)> {
    let h = vertices.len();
    let mut lo = i128::MIN;
    let mut hi = i128::MAX;
    let y = y as i128;
    for i in 0..h {
        let p = vertices[i];
        let q = vertices[(i + 1) % h];
        let dx = q.x as i128 - p.x as i128;
        let dy = q.y as i128 - p.y as i128;
        // dx·(y − py) − dy·(x − px) ≥ 0
        let rhs = dx * (y - p.y as i128) + dy * p.x as i128;
        match dy.signum() {
            1 => hi = hi.min(floor_div(rhs, dy)),
            -1 => lo = lo.max(ceil_div(rhs, dy)),
            _ => {
                if dx * (y - p.y as i128) < 0 {
                    return None;
                }
            }
        }
    }
    (lo <= hi).then_some((lo as i64, hi as i64))
}

/// All lattice points inside or on `p`, by row scanline.
pub fn lattice_points_in_polygon(p: &HullPolygon) -> DigitalSet {
    let v = p.vertices();
    match v.len() {
        0 => DigitalSet::default(),
        1 => DigitalSet::from_sorted_unchecked(vec![v[0]]),
        2 => {
            let (a, b) = if v[0] < v[1] { (v[0], v[1]) } else { (v[1], v[0]) };
            let steps = segment_lattice_count(a, b) as i64 - 1;
            let (sx, sy) = ((b.x - a.x) / steps, (b.y - a.y) / steps);
            DigitalSet::from_sorted_unchecked((0..=steps).map(|i| a.offset(i * sx, i * sy)).collect())
        }
        _ => {
            let ymin = v.iter().map(|p| p.y).min().expect("nonempty");
            let ymax = v.iter().map(|p| p.y).max().expect("nonempty");
            let mut rows = Vec::with_capacity((ymax - ymin + 1) as usize);
            for y in ymin..=ymax {
                if let Some(span) = row_span(v, y) {
                    rows.push((y, span));
                }
            }
            let xmin = rows.iter().map(|r| r.1 .0).min().unwrap_or(0);
            let xmax = rows.iter().map(|r| r.1 .1).max().unwrap_or(0);
            // Transpose row spans into columns so output comes out sorted.
            let mut columns: Vec<Vec<i64>> = vec![Vec::new(); (xmax - xmin + 1) as usize];
            for &(y, (lo, hi)) in &rows {
                for x in lo..=hi {
                    columns[(x - xmin) as usize].push(y);
                }
            }
            let points = columns
                .into_iter()
                .enumerate()
                .flat_map(|(i, ys)| ys.into_iter().map(move |y| LatticePoint::new(xmin + i as i64, y)))
                .collect();
            DigitalSet::from_sorted_unchecked(points)
        }
    }
}

/// `conv(s) ∩ Z² = s`, decided by comparing `|s|` with the Pick count of the
/// hull (`s` is always a subset of its hull's lattice points).
pub fn is_digital_convex(s: &DigitalSet) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let hull = convex_hull(s)?;
    Ok(polygon_lattice_count(&hull) == s.len() as u64)
}
