use crate::error::{Error, Result};

use super::cross;
use super::point::LatticePoint;
use super::set::DigitalSet;

/// Convex hull vertices in counter-clockwise order with no three consecutive
/// collinear, starting at the lexicographically smallest vertex.
///
/// Degenerate hulls are encoded by vertex count: one vertex for a single
/// point, two (the segment endpoints) for a collinear set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullPolygon {
    vertices: Vec<LatticePoint>,
}

impl HullPolygon {
    /// Wraps an already-valid vertex list. Returns `None` unless the sequence
    /// is a strictly convex CCW polygon or a valid degenerate encoding.
    pub fn from_vertices(vertices: Vec<LatticePoint>) -> Option<Self> {
        let h = vertices.len();
        let valid = match h {
            0 => false,
            1 => true,
            2 => vertices[0] != vertices[1],
            _ => (0..h).all(|i| cross(vertices[i], vertices[(i + 1) % h], vertices[(i + 2) % h]) > 0),
        };
        valid.then_some(Self { vertices })
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges `(v[i], v[i+1])`, closing back to the first vertex.
    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let h = self.vertices.len();
        (0..h).filter(move |_| h >= 3).map(move |i| (self.vertices[i], self.vertices[(i + 1) % h]))
    }

    /// Whether `p` is inside or on the polygon.
    pub fn contains(&self, p: LatticePoint) -> bool {
        match self.vertices.as_slice() {
            [] => false,
            [v] => *v == p,
            [a, b] => {
                cross(*a, *b, p) == 0
                    && p.x >= a.x.min(b.x)
                    && p.x <= a.x.max(b.x)
                    && p.y >= a.y.min(b.y)
                    && p.y <= a.y.max(b.y)
            }
            _ => self.edges().all(|(a, b)| cross(a, b, p) >= 0),
        }
    }
}

/// Andrew's monotone chain over the already-sorted points of `s`: linear time.
pub fn convex_hull(s: &DigitalSet) -> Result<HullPolygon> {
    let pts = s.points();
    match pts.len() {
        0 => return Err(Error::EmptySet),
        1 => return Ok(HullPolygon { vertices: vec![pts[0]] }),
        _ => {}
    }
    let mut lower: Vec<LatticePoint> = Vec::new();
    for &p in pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Ok(HullPolygon { vertices: lower })
}
