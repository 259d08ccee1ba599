//! Seeded generators of digital convex test families and the text/JSON
//! formats used by the CLI and golden files.

mod generate;
mod io;
mod rng;

pub use generate::{generate, random_unimodular_map, GeneratorSpec};
pub use io::{format_points, parse_points, serialize_result, ResultDocument, TraceEntry};
pub use rng::SplitMix64;
