use crate::error::{Error, Result};
use crate::lattice::{
    convex_hull, lattice_points_in_polygon, AffineUnimodularMap, DigitalSet, HullPolygon, LatticePoint,
};

/// The quadrilateral part ◇ of a set whose lattice diameter `d₁` runs from
/// `(0,0)` to `(k−1,0)`: lattice points of `conv(d₁ ∪ {top, bottom})`, split
/// into the part on or above the axis (△) and on or below it (▽).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadDecomposition {
    pub k: u64,
    pub top: LatticePoint,
    pub bottom: LatticePoint,
    pub quad: DigitalSet,
    pub upper: DigitalSet,
    pub lower: DigitalSet,
    /// `k − 1`, i.e. twice the midpoint abscissa of `d₁`.
    pub x_mid_twice: i64,
}

impl QuadDecomposition {
    pub fn from_extremes(k: u64, top: LatticePoint, bottom: LatticePoint) -> Result<Self> {
        let l = k as i64 - 1;
        let corners = [LatticePoint::new(0, 0), LatticePoint::new(l, 0), top, bottom];
        let quad = lattice_points_in_polygon(&convex_hull(&DigitalSet::new(corners)?)?);
        let upper = quad.filter(|p| p.y >= 0);
        let lower = quad.filter(|p| p.y <= 0);
        Ok(Self { k, top, bottom, quad, upper, lower, x_mid_twice: l })
    }

    /// Image under a map that preserves the axis row `{(0,0)…(k−1,0)}` as a set
    /// and keeps `top` above it (horizontal shears, the mirror about `x_mid`).
    pub fn mapped(&self, m: &AffineUnimodularMap) -> Result<Self> {
        Self::from_extremes(self.k, m.apply(self.top)?, m.apply(self.bottom)?)
    }

    pub(crate) fn l(&self) -> i64 {
        self.k as i64 - 1
    }

    /// `0 ≤ x ≤ k−1`.
    pub(crate) fn in_band(&self, p: LatticePoint) -> bool {
        (0..=self.l()).contains(&p.x)
    }
}

/// Finds `top` and `bottom` of `s1` (lexicographically smallest among the
/// extreme rows) and, when the bottom is strictly further from the axis,
/// flips `y ↦ −y`. Returns the flip (or identity) and the decomposition in
/// flipped coordinates.
pub fn orient_and_decompose(s1: &DigitalSet, k: u64) -> Result<(AffineUnimodularMap, QuadDecomposition)> {
    if s1.is_empty() {
        return Err(Error::EmptySet);
    }
    let (top, bottom) = extremes(s1.points());
    orient_extremes(k, top, bottom)
}

pub(crate) fn extremes(pts: &[LatticePoint]) -> (LatticePoint, LatticePoint) {
    let top = *pts.iter().min_by_key(|p| (-p.y, p.x)).expect("nonempty");
    let bottom = *pts.iter().min_by_key(|p| (p.y, p.x)).expect("nonempty");
    (top, bottom)
}

pub(crate) fn orient_extremes(
    k: u64,
    top: LatticePoint,
    bottom: LatticePoint,
) -> Result<(AffineUnimodularMap, QuadDecomposition)> {
    if -bottom.y > top.y {
        let flip = AffineUnimodularMap::vertical_flip();
        // After the flip the old bottom row is the top row; `top` picks the
        // smallest x on it, which is the old `bottom`.
        let quad = QuadDecomposition::from_extremes(k, flip.apply(bottom)?, flip.apply(top)?)?;
        Ok((flip, quad))
    } else {
        Ok((AffineUnimodularMap::identity(), QuadDecomposition::from_extremes(k, top, bottom)?))
    }
}

/// Horizontal shear `[[1, s], [0, 1]]` moving `top = (x_t, b)` as close as
/// possible to `((k−1)/2, b)`: minimizes `|2x_t + 2sb − (k−1)|`, ties to the
/// smaller `|s|`, then the smaller `s`. The result satisfies
/// `|(k−1)/2 − top′.x| ≤ b/2`.
pub fn center_top_shear(q: &QuadDecomposition) -> Result<AffineUnimodularMap> {
    let b = q.top.y as i128;
    if b <= 0 {
        return Err(Error::DegenerateTop);
    }
    let target = q.x_mid_twice as i128 - 2 * q.top.x as i128;
    let lo = crate::arith::floor_div(target, 2 * b);
    let best = [lo, lo + 1]
        .into_iter()
        .min_by_key(|&s| ((target - 2 * s * b).abs(), s.abs(), s))
        .expect("two candidates");
    let s = i64::try_from(best).map_err(|_| Error::Overflow("centering the top point"))?;
    Ok(AffineUnimodularMap::horizontal_shear(s))
}

/// Reflection about `x = (k−1)/2`, taking `d₁` to itself.
pub fn mirror_about_mid(q: &QuadDecomposition) -> AffineUnimodularMap {
    AffineUnimodularMap::mirror_x(q.x_mid_twice)
}

/// The residual case of top centering: `top′ = (−1, k+1)` and △′ is exactly the
/// lattice triangle `(0,0), (k−1,0), (−1,k+1)`. Expects the mirror case
/// (`top′ = (k, k+1)`) to have been reflected already.
pub fn detect_pompom(q: &QuadDecomposition) -> bool {
    let k = q.k as i64;
    if q.top != LatticePoint::new(-1, k + 1) {
        return false;
    }
    let tri = HullPolygon::from_vertices(vec![LatticePoint::new(0, 0), LatticePoint::new(k - 1, 0), q.top])
        .expect("counter-clockwise triangle");
    q.upper == lattice_points_in_polygon(&tri)
}

/// Vertical shear sending `d₁` onto the diagonal `y = x`.
pub fn pompom_transform() -> AffineUnimodularMap {
    AffineUnimodularMap::vertical_shear(1)
}

/// In the pompom case the bottom point must lie directly below `d₁`.
pub fn pompom_bottom_guard(q: &QuadDecomposition) -> Result<()> {
    if q.in_band(q.bottom) {
        Ok(())
    } else {
        Err(Error::InvariantViolation(format!(
            "pompom case with bottom {} outside 0 ≤ x ≤ {}",
            q.bottom,
            q.l()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{classify, ConnectivityClass};

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn quad_example() {
        let q = QuadDecomposition::from_extremes(3, pt(1, 1), pt(1, -1)).unwrap();
        assert_eq!(q.quad.len(), 5);
        assert_eq!(q.upper.len(), 4);
        assert_eq!(q.lower.len(), 4);
        assert_eq!(q.x_mid_twice, 2);
    }

    #[test]
    fn flat_set_is_its_own_quad() {
        let s = DigitalSet::from_pairs(&[(0, 0), (1, 0), (2, 0), (3, 0)]);
        let (m, q) = orient_and_decompose(&s, 4).unwrap();
        assert!(m.is_identity());
        assert_eq!(q.top, q.bottom);
        assert_eq!(q.quad, s);
    }

    #[test]
    fn flips_when_bottom_is_deeper() {
        let s = DigitalSet::from_pairs(&[(0, 0), (1, 0), (2, 0), (1, 1), (1, 2), (1, -1), (1, -2), (1, -3)]);
        let (m, q) = orient_and_decompose(&s, 3).unwrap();
        assert_eq!(m, AffineUnimodularMap::vertical_flip());
        assert_eq!(q.top, pt(1, 3));
        assert_eq!(q.bottom, pt(1, -2));
    }

    #[test]
    fn centering_examples() {
        let q = QuadDecomposition::from_extremes(4, pt(5, 2), pt(0, 0)).unwrap();
        let m = center_top_shear(&q).unwrap();
        assert_eq!(m, AffineUnimodularMap::horizontal_shear(-2));
        assert_eq!(m.apply(q.top).unwrap(), pt(1, 2));

        let q = QuadDecomposition::from_extremes(3, pt(1, 3), pt(0, 0)).unwrap();
        assert!(center_top_shear(&q).unwrap().is_identity());

        let q = QuadDecomposition::from_extremes(3, pt(0, 1), pt(0, 0)).unwrap();
        assert_eq!(center_top_shear(&q).unwrap(), AffineUnimodularMap::horizontal_shear(1));

        let q = QuadDecomposition::from_extremes(3, pt(2, 0), pt(0, 0)).unwrap();
        assert_eq!(center_top_shear(&q), Err(Error::DegenerateTop));
    }

    #[test]
    fn centering_bound_holds() {
        // |(k−1)/2 − a| ≤ b/2, checked against a scan over a window of shears.
        for k in 2..8u64 {
            for x in -20..20 {
                for b in 1..6 {
                    let q = QuadDecomposition::from_extremes(k, pt(x, b), pt(0, 0)).unwrap();
                    let m = center_top_shear(&q).unwrap();
                    let a = m.apply(q.top).unwrap().x;
                    assert!((k as i64 - 1 - 2 * a).abs() <= b, "k={k} top=({x},{b})");
                    let best = (-40..40).map(|s| (k as i64 - 1 - 2 * (x + s * b)).abs()).min().unwrap();
                    assert_eq!((k as i64 - 1 - 2 * a).abs(), best);
                }
            }
        }
    }

    #[test]
    fn pompom_detection() {
        let q = QuadDecomposition::from_extremes(2, pt(-1, 3), pt(0, 0)).unwrap();
        assert_eq!(q.upper, DigitalSet::from_pairs(&[(0, 0), (1, 0), (0, 1), (-1, 3)]));
        assert!(detect_pompom(&q));
        let q = QuadDecomposition::from_extremes(3, pt(1, 2), pt(0, 0)).unwrap();
        assert!(!detect_pompom(&q));
    }

    #[test]
    fn pompom_images_are_almost4() {
        let k2 = pompom_transform()
            .apply_set(&DigitalSet::from_pairs(&[(0, 0), (1, 0), (0, 1), (-1, 3)]))
            .unwrap();
        assert_eq!(k2, DigitalSet::from_pairs(&[(0, 0), (1, 1), (0, 1), (-1, 2)]));
        assert_eq!(classify(&k2).unwrap(), ConnectivityClass::Almost4 { witness: pt(-1, 2) });
        for k in 2..10 {
            let q = QuadDecomposition::from_extremes(k, pt(-1, k as i64 + 1), pt(0, 0)).unwrap();
            let img = pompom_transform().apply_set(&q.upper).unwrap();
            assert_eq!(classify(&img).unwrap(), ConnectivityClass::Almost4 { witness: pt(-1, k as i64) });
        }
    }

    #[test]
    fn pompom_guard() {
        let q = QuadDecomposition::from_extremes(2, pt(-1, 3), pt(1, -1)).unwrap();
        assert!(pompom_bottom_guard(&q).is_ok());
        let q = QuadDecomposition::from_extremes(2, pt(-1, 3), pt(3, -1)).unwrap();
        assert!(matches!(pompom_bottom_guard(&q), Err(Error::InvariantViolation(_))));
    }
}
