//! Exact lattice primitives: points, finite sets, unimodular maps, hulls and
//! lattice-point enumeration.

mod hull;
mod map;
mod point;
mod polygon;
mod set;

pub use hull::{convex_hull, HullPolygon};
pub use map::{apply_map, AffineUnimodularMap};
pub use point::{LatticePoint, COORD_LIMIT, INPUT_LIMIT};
pub use polygon::{
    is_digital_convex, lattice_points_in_polygon, pick_counts, polygon_lattice_count,
    segment_lattice_count, PickCounts,
};
pub use set::DigitalSet;

/// Twice the signed area of triangle `o, a, b`; positive when counter-clockwise.
#[inline]
pub(crate) fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i128 {
    let (ax, ay) = (a.x as i128 - o.x as i128, a.y as i128 - o.y as i128);
    let (bx, by) = (b.x as i128 - o.x as i128, b.y as i128 - o.y as i128);
    ax * by - ay * bx
}
