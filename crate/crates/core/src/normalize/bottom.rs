use crate::connectivity::classify;
use crate::error::{Error, Result};
use crate::lattice::{AffineUnimodularMap, DigitalSet, LatticePoint};

use super::quad::QuadDecomposition;

fn check_domain(l: i64, p: LatticePoint, min_y: i64) -> Result<()> {
    if l > 1 && p.y < 0 && p.x > l && p.y >= min_y {
        Ok(())
    } else {
        Err(Error::PreconditionViolation(format!("point {p} outside the region for l = {l}")))
    }
}

/// Triangle `(0,0), (l,0), p` contains the diagonal through `p` and the one
/// just left of it when `−x/2 ≤ y ≤ l − x`.
///
/// Domain: `l > 1`, `y < 0`, `x > l`.
pub fn lemma2_region(l: i64, p: LatticePoint) -> Result<bool> {
    check_domain(l, p, i64::MIN)?;
    Ok(lemma2_holds(l, p))
}

/// Triangle `(0,0), (l,0), p` contains the diagonal through `p` and the one
/// just above it when `y ≤ 2l − 2x`.
///
/// Domain: `l > 1`, `−l ≤ y < 0`, `x > l`. The row `y = −l` is included:
/// the predicate is exact there as well (checked exhaustively in the tests).
pub fn lemma3_region(l: i64, p: LatticePoint) -> Result<bool> {
    check_domain(l, p, -l)?;
    Ok(lemma3_holds(l, p))
}

pub(crate) fn lemma2_holds(l: i64, p: LatticePoint) -> bool {
    let (l, x, y) = (l as i128, p.x as i128, p.y as i128);
    -x <= 2 * y && y <= l - x
}

pub(crate) fn lemma3_holds(l: i64, p: LatticePoint) -> bool {
    let (l, x, y) = (l as i128, p.x as i128, p.y as i128);
    y <= 2 * l - 2 * x
}

/// Strictly below `y = −x/2` and strictly above `y = 2l − 2x`.
pub(crate) fn in_wedge(l: i64, p: LatticePoint) -> bool {
    let (l, x, y) = (l as i128, p.x as i128, p.y as i128);
    2 * y < -x && y > 2 * l - 2 * x
}

/// Which branch of the bottom construction fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BottomCase {
    /// `bot′` directly below `d₁`, or inside a lemma region.
    Direct,
    /// `bot′` was right of `x + y = k − 1` and has been sheared back.
    RightShear,
    /// `bot′` in the wedge with `top′` below `x + y = k − 1`.
    Wedge,
}

/// The maps applied while connecting the bottom, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BottomPlan {
    pub steps: Vec<(&'static str, AffineUnimodularMap)>,
    pub case: BottomCase,
}

impl BottomPlan {
    pub fn total(&self) -> Result<AffineUnimodularMap> {
        self.steps
            .iter()
            .try_fold(AffineUnimodularMap::identity(), |acc, (_, m)| m.compose(&acc))
    }
}

/// Horizontal shears (and possibly the mirror about `x = (k−1)/2`) taking ◇′,
/// whose `top′` is directly above `d₁`, to an almost 4-connected ◇″.
///
/// The bottom point is first moved to the right of `d₁` by the mirror when it
/// sits on the left. Every branch re-checks `top″` against the band and the
/// resulting ◇″ with [`classify`].
pub fn connect_bottom(q: &QuadDecomposition) -> Result<BottomPlan> {
    let l = q.l();
    let mut steps = Vec::new();
    let mut q = q.clone();
    if !q.in_band(q.top) {
        return Err(Error::InvariantViolation(format!("top {} not directly above d1", q.top)));
    }
    if q.bottom.y >= 0 || q.in_band(q.bottom) {
        return Ok(BottomPlan { steps, case: BottomCase::Direct });
    }
    if q.bottom.x < 0 {
        let m = AffineUnimodularMap::mirror_x(l);
        q = q.mapped(&m)?;
        steps.push(("bottom_mirror", m));
    }

    let mut case = BottomCase::Direct;
    if q.bottom.x as i128 + q.bottom.y as i128 > l as i128 {
        let m = right_shear(&q)?;
        q = q.mapped(&m)?;
        steps.push(("bottom_right_shear", m));
        case = BottomCase::RightShear;
    }

    if !(q.bottom.y >= 0 || q.in_band(q.bottom) || lemma2_holds(l, q.bottom) || lemma3_holds(l, q.bottom)) {
        if !in_wedge(l, q.bottom) {
            return Err(Error::InvariantViolation(format!("bottom {} in no known region", q.bottom)));
        }
        if q.top.x as i128 + q.top.y as i128 >= l as i128 {
            return Err(Error::InvariantViolation(if q.top.y >= q.top.x {
                format!("bottom {} in the wedge with top {} above both diagonals", q.bottom, q.top)
            } else {
                format!("bottom {} in the wedge with top {} right of y = x", q.bottom, q.top)
            }));
        }
        // Sends x + y = k − 1 to x = k − 1, so the wedge lands below d₁.
        let m = AffineUnimodularMap::horizontal_shear(1);
        q = q.mapped(&m)?;
        steps.push(("wedge_shear", m));
        case = BottomCase::Wedge;
        if !q.in_band(q.bottom) {
            return Err(Error::FallbackEngaged("wedge shear left the bottom outside the band"));
        }
    }

    if !q.in_band(q.top) {
        return Err(Error::FallbackEngaged("bottom shear moved the top out of the band"));
    }
    if !classify(&q.quad)?.is_almost_4() {
        return Err(Error::FallbackEngaged("bottom construction did not almost 4-connect the quad"));
    }
    Ok(BottomPlan { steps, case })
}

/// For `bot′ = (k + λ, y_b)` right of `x + y = k − 1`, with `d = |y_b|`:
/// the first of `m = ⌈λ/d⌉ − 1` and `m + 1` that brings `bot′` back onto or
/// left of that line while keeping `top′` directly above `d₁`.
fn right_shear(q: &QuadDecomposition) -> Result<AffineUnimodularMap> {
    let l = q.l() as i128;
    let lambda = q.bottom.x as i128 - q.k as i128;
    let depth = -(q.bottom.y as i128);
    let m = crate::arith::ceil_div(lambda, depth) - 1;
    for s in [m, m + 1] {
        let s = i64::try_from(s).map_err(|_| Error::Overflow("bottom shear parameter"))?;
        let shear = AffineUnimodularMap::horizontal_shear(s);
        let (top, bot) = (shear.apply(q.top)?, shear.apply(q.bottom)?);
        if q.in_band(top) && bot.x as i128 + bot.y as i128 <= l {
            return Ok(shear);
        }
    }
    Err(Error::FallbackEngaged("no bottom shear candidate verified"))
}

/// Last step on the whole set: if `S″` is not yet almost 4-connected and
/// `bot″ + (1,0)` lies in `S″` on `x + y = k`, the horizontal shear taking
/// that line to `x = k` finishes the job.
pub fn finalize_general(s2: &DigitalSet, k: u64, bot2: LatticePoint) -> Result<AffineUnimodularMap> {
    if classify(s2)?.is_almost_4() {
        return Ok(AffineUnimodularMap::identity());
    }
    let pa = bot2.offset(1, 0);
    if s2.contains(pa) && pa.x as i128 + pa.y as i128 == k as i128 {
        let m = AffineUnimodularMap::horizontal_shear(1);
        if classify(&m.apply_set(s2)?)?.is_almost_4() {
            return Ok(m);
        }
    }
    Err(Error::FallbackEngaged("set is not almost 4-connected after the quad construction"))
}
