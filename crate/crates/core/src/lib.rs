//! Exact integer geometry for digital convex sets in Z².
//!
//! The crate recognizes digital convex sets (`conv(S) ∩ Z² = S`), computes
//! their lattice diameter, and builds a unimodular affine map that carries
//! any digital convex set onto an almost 4-connected one: a set that is
//! 4-connected except for at most one point, which is itself 8-adjacent to
//! the rest.
//!
//! No floating point is used anywhere in the library. Coordinates are `i64`
//! and every predicate is evaluated in `i128`.
//!
//! ```
//! use latnorm::{generate, to_almost_4_connected, GeneratorSpec};
//!
//! let pompom = generate(&GeneratorSpec::Pompom { k: 2 }).unwrap();
//! let out = to_almost_4_connected(&pompom).unwrap();
//! assert!(out.class.is_almost_4());
//! assert!(!out.trace.fallback_used);
//! ```

mod arith;
pub mod bench;
pub mod connectivity;
pub mod diameter;
mod error;
pub mod instances;
pub mod lattice;
pub mod normalize;
pub mod oracle;

pub use connectivity::{classify, is_4_connected, is_8_connected, ConnectivityClass, ConnectivityTag};
pub use diameter::{
    diameter_lower_bound, lattice_diameter, lattice_diameter_bruteforce, lattice_diameter_fast,
    primitive_direction_map, topmost_lattice_point_in_triangle, DiameterResult, DiameterSearchStats,
};
pub use error::{Error, Result};
pub use instances::{generate, parse_points, serialize_result, GeneratorSpec, SplitMix64};
pub use lattice::{
    apply_map, convex_hull, is_digital_convex, lattice_points_in_polygon, pick_counts,
    segment_lattice_count, AffineUnimodularMap, DigitalSet, HullPolygon, LatticePoint, PickCounts,
    COORD_LIMIT, INPUT_LIMIT,
};
pub use normalize::{to_almost_4_connected, CaseLabel, Normalized, NormalizationTrace};
pub use oracle::{exhaustive_unimodular_search, verify_result, SearchBudget, VerificationReport};
