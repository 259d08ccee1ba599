use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest coordinate magnitude accepted from callers (files, CLI, pipeline entry).
pub const INPUT_LIMIT: i64 = 1 << 31;

/// Largest coordinate magnitude any set may hold. Keeps every cross product of
/// coordinate differences inside `i128`.
pub const COORD_LIMIT: i64 = 1 << 61;

/// A point of Z². Ordering is lexicographic on `(x, y)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub(crate) fn within(self, limit: i64) -> bool {
        self.x.unsigned_abs() <= limit as u64 && self.y.unsigned_abs() <= limit as u64
    }

    /// Whether the two points are distinct king-move neighbors.
    pub fn is_8_adjacent(self, other: Self) -> bool {
        self != other && self.x.abs_diff(other.x) <= 1 && self.y.abs_diff(other.y) <= 1
    }

    pub fn is_4_adjacent(self, other: Self) -> bool {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y) == 1
    }

    pub(crate) fn offset(self, dx: i64, dy: i64) -> Self {
        Self::new(self.x + dx, self.y + dy)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self::new(x, y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}
