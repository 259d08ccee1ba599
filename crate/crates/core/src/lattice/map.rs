use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::point::{LatticePoint, COORD_LIMIT};
use super::set::DigitalSet;

/// `p ↦ M·p + t` with `M = [[a, b], [c, d]]` integral and `det M = ±1`.
///
/// Reflections (determinant −1) are allowed; connectivity and digital
/// convexity are invariant under the whole affine group of Z².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineUnimodularMap {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    tx: i64,
    ty: i64,
}

impl AffineUnimodularMap {
    pub const IDENTITY: Self = Self { a: 1, b: 0, c: 0, d: 1, tx: 0, ty: 0 };

    pub fn new(matrix: [[i64; 2]; 2], translation: [i64; 2]) -> Result<Self> {
        let [[a, b], [c, d]] = matrix;
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det != 1 && det != -1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(Self { a, b, c, d, tx: translation[0], ty: translation[1] })
    }

    /// Builds a map without the determinant check; used only to exercise
    /// verification code on deliberately broken maps.
    #[doc(hidden)]
    pub fn new_unchecked(matrix: [[i64; 2]; 2], translation: [i64; 2]) -> Self {
        let [[a, b], [c, d]] = matrix;
        Self { a, b, c, d, tx: translation[0], ty: translation[1] }
    }

    pub const fn identity() -> Self {
        Self::IDENTITY
    }

    pub const fn translation(tx: i64, ty: i64) -> Self {
        Self { a: 1, b: 0, c: 0, d: 1, tx, ty }
    }

    /// `(x, y) ↦ (x + s·y, y)`.
    pub const fn horizontal_shear(s: i64) -> Self {
        Self { a: 1, b: s, c: 0, d: 1, tx: 0, ty: 0 }
    }

    /// `(x, y) ↦ (x, y + s·x)`.
    pub const fn vertical_shear(s: i64) -> Self {
        Self { a: 1, b: 0, c: s, d: 1, tx: 0, ty: 0 }
    }

    /// `(x, y) ↦ (x, −y)`.
    pub const fn vertical_flip() -> Self {
        Self { a: 1, b: 0, c: 0, d: -1, tx: 0, ty: 0 }
    }

    /// `(x, y) ↦ (−x, y)`.
    pub const fn horizontal_flip() -> Self {
        Self { a: -1, b: 0, c: 0, d: 1, tx: 0, ty: 0 }
    }

    /// Reflection about the vertical line `x = axis_twice / 2`.
    pub const fn mirror_x(axis_twice: i64) -> Self {
        Self { a: -1, b: 0, c: 0, d: 1, tx: axis_twice, ty: 0 }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn translation_vector(&self) -> [i64; 2] {
        [self.tx, self.ty]
    }

    pub fn determinant(&self) -> i128 {
        self.a as i128 * self.d as i128 - self.b as i128 * self.c as i128
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn apply(&self, p: LatticePoint) -> Result<LatticePoint> {
        let x = self.a as i128 * p.x as i128 + self.b as i128 * p.y as i128 + self.tx as i128;
        let y = self.c as i128 * p.x as i128 + self.d as i128 * p.y as i128 + self.ty as i128;
        let limit = COORD_LIMIT as i128;
        if x.abs() > limit || y.abs() > limit {
            return Err(Error::Overflow("applying a map"));
        }
        Ok(LatticePoint::new(x as i64, y as i64))
    }

    /// `self ∘ inner`: applies `inner` first.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let mul = |p: i64, q: i64| (p as i128) * (q as i128);
        let entries = [
            mul(self.a, inner.a) + mul(self.b, inner.c),
            mul(self.a, inner.b) + mul(self.b, inner.d),
            mul(self.c, inner.a) + mul(self.d, inner.c),
            mul(self.c, inner.b) + mul(self.d, inner.d),
            mul(self.a, inner.tx) + mul(self.b, inner.ty) + self.tx as i128,
            mul(self.c, inner.tx) + mul(self.d, inner.ty) + self.ty as i128,
        ];
        let mut out = [0i64; 6];
        for (slot, v) in out.iter_mut().zip(entries) {
            *slot = i64::try_from(v).map_err(|_| Error::Overflow("composing maps"))?;
        }
        let [a, b, c, d, tx, ty] = out;
        Ok(Self { a, b, c, d, tx, ty })
    }

    /// Exact inverse; integral because `det = ±1`.
    pub fn invert(&self) -> Result<Self> {
        let det = self.determinant();
        let sign = if det < 0 { -1i128 } else { 1 };
        let ia = sign * self.d as i128;
        let ib = -sign * self.b as i128;
        let ic = -sign * self.c as i128;
        let id = sign * self.a as i128;
        let itx = -(ia * self.tx as i128 + ib * self.ty as i128);
        let ity = -(ic * self.tx as i128 + id * self.ty as i128);
        let mut out = [0i64; 6];
        for (slot, v) in out.iter_mut().zip([ia, ib, ic, id, itx, ity]) {
            *slot = i64::try_from(v).map_err(|_| Error::Overflow("inverting a map"))?;
        }
        let [a, b, c, d, tx, ty] = out;
        Ok(Self { a, b, c, d, tx, ty })
    }

    pub fn apply_set(&self, s: &DigitalSet) -> Result<DigitalSet> {
        let image = s.iter().map(|&p| self.apply(p)).collect::<Result<Vec<_>>>()?;
        DigitalSet::new(image)
    }
}

impl Default for AffineUnimodularMap {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl fmt::Display for AffineUnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]] + ({}, {})", self.a, self.b, self.c, self.d, self.tx, self.ty)
    }
}

/// Pointwise image of `s` under `m`.
pub fn apply_map(m: &AffineUnimodularMap, s: &DigitalSet) -> Result<DigitalSet> {
    m.apply_set(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn rejects_non_unimodular() {
        assert_eq!(AffineUnimodularMap::new([[2, 0], [0, 1]], [0, 0]), Err(Error::NotUnimodular(2)));
        assert!(AffineUnimodularMap::new([[0, 1], [1, 0]], [3, 4]).is_ok());
    }

    #[test]
    fn shear_examples() {
        let s = DigitalSet::from_pairs(&[(0, 0), (0, 1)]);
        let m = AffineUnimodularMap::horizontal_shear(1);
        assert_eq!(apply_map(&m, &s).unwrap(), DigitalSet::from_pairs(&[(0, 0), (1, 1)]));

        let pompom = DigitalSet::from_pairs(&[(0, 0), (1, 0), (0, 1), (-1, 3)]);
        let v = AffineUnimodularMap::vertical_shear(1);
        assert_eq!(
            apply_map(&v, &pompom).unwrap(),
            DigitalSet::from_pairs(&[(0, 0), (1, 1), (0, 1), (-1, 2)])
        );
    }

    #[test]
    fn algebra() {
        let id = AffineUnimodularMap::identity();
        assert_eq!(id.invert().unwrap(), id);
        for k in -5..=5 {
            let h = AffineUnimodularMap::horizontal_shear(k);
            assert_eq!(h.invert().unwrap(), AffineUnimodularMap::horizontal_shear(-k));
        }
        let h1 = AffineUnimodularMap::horizontal_shear(1);
        let h2 = AffineUnimodularMap::horizontal_shear(2);
        assert_eq!(h1.compose(&h2).unwrap(), AffineUnimodularMap::horizontal_shear(3));

        let m = AffineUnimodularMap::new([[2, 1], [1, 1]], [4, -7]).unwrap();
        assert_eq!(m.compose(&m.invert().unwrap()).unwrap(), id);
        assert_eq!(m.invert().unwrap().compose(&m).unwrap(), id);
    }

    #[test]
    fn compose_order_applies_inner_first() {
        let shift = AffineUnimodularMap::translation(1, 0);
        let flip = AffineUnimodularMap::horizontal_flip();
        let p = pt(2, 3);
        assert_eq!(flip.compose(&shift).unwrap().apply(p).unwrap(), pt(-3, 3));
        assert_eq!(shift.compose(&flip).unwrap().apply(p).unwrap(), pt(-1, 3));
    }

    #[test]
    fn reflection_inverse() {
        let m = AffineUnimodularMap::mirror_x(5).compose(&AffineUnimodularMap::vertical_flip()).unwrap();
        assert_eq!(m.determinant(), 1);
        let r = AffineUnimodularMap::mirror_x(5);
        assert_eq!(r.determinant(), -1);
        assert_eq!(r.compose(&r).unwrap(), AffineUnimodularMap::identity());
        assert_eq!(r.invert().unwrap(), r);
    }

    #[test]
    fn overflow_detected() {
        let m = AffineUnimodularMap::horizontal_shear(1 << 40);
        let err = m.apply(pt(0, 1 << 30)).unwrap_err();
        assert!(matches!(err, Error::Overflow(_)));
    }
}
