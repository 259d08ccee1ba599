use crate::error::{Error, Result};

use super::point::{LatticePoint, COORD_LIMIT};

/// A finite set of lattice points, stored sorted and deduplicated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DigitalSet {
    points: Vec<LatticePoint>,
}

impl DigitalSet {
    /// Builds a set, rejecting coordinates beyond [`COORD_LIMIT`].
    pub fn new(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut points: Vec<LatticePoint> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| !p.within(COORD_LIMIT)) {
            return Err(Error::CoordinateOutOfRange(*p));
        }
        points.sort_unstable();
        points.dedup();
        Ok(Self { points })
    }

    /// Convenience constructor for literal coordinates.
    ///
    /// Panics if a coordinate exceeds [`COORD_LIMIT`].
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        Self::new(pairs.iter().map(|&p| LatticePoint::from(p))).expect("coordinates within COORD_LIMIT")
    }

    /// `points` must already be strictly increasing and within range.
    pub(crate) fn from_sorted_unchecked(points: Vec<LatticePoint>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        Self { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in lexicographic order.
    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LatticePoint> {
        self.points.iter()
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    pub fn index_of(&self, p: LatticePoint) -> Option<usize> {
        self.points.binary_search(&p).ok()
    }

    /// Copy of the set with one point removed.
    pub fn without(&self, p: LatticePoint) -> Self {
        Self { points: self.points.iter().copied().filter(|&q| q != p).collect() }
    }

    pub fn filter(&self, mut keep: impl FnMut(LatticePoint) -> bool) -> Self {
        Self { points: self.points.iter().copied().filter(|&q| keep(q)).collect() }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.points.iter().all(|&p| other.contains(p))
    }

    /// `(min_x, min_y, max_x, max_y)`, or `None` when empty.
    pub fn bounds(&self) -> Option<(i64, i64, i64, i64)> {
        let first = self.points.first()?;
        let mut b = (first.x, first.y, first.x, first.y);
        for p in &self.points {
            b.0 = b.0.min(p.x);
            b.1 = b.1.min(p.y);
            b.2 = b.2.max(p.x);
            b.3 = b.3.max(p.y);
        }
        Some(b)
    }

    pub fn into_points(self) -> Vec<LatticePoint> {
        self.points
    }
}

impl<'a> IntoIterator for &'a DigitalSet {
    type Item = &'a LatticePoint;
    type IntoIter = std::slice::Iter<'a, LatticePoint>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}
