use crate::connectivity::classify;
use crate::error::{Error, Result};
use crate::lattice::{AffineUnimodularMap, DigitalSet};

/// Deterministic search over shear words for a map whose image of `s` is
/// almost 4-connected.
///
/// Order: for each reflection in `[identity, x ↦ −x]`, the reflection alone,
/// then single shears `H(s)`, `V(s)` for `s = 1, −1, 2, −2, …, ±budget`, then
/// the two-letter words `H(s)·V(t)` and `V(s)·H(t)` over the same range.
/// Never reached on valid inputs; exists so that a gap in the construction
/// shows up as a flag in the trace rather than a wrong answer.
pub fn fallback_shear_search(s: &DigitalSet, budget: u64) -> Result<AffineUnimodularMap> {
    let budget = i64::try_from(budget).map_err(|_| Error::Overflow("fallback budget"))?;
    let params: Vec<i64> = (1..=budget).flat_map(|v| [v, -v]).collect();
    let reflections = [AffineUnimodularMap::identity(), AffineUnimodularMap::horizontal_flip()];

    let accept = |m: &AffineUnimodularMap| -> Result<bool> { Ok(classify(&m.apply_set(s)?)?.is_almost_4()) };

    for r in reflections {
        if accept(&r)? {
            return Ok(r);
        }
        for &p in &params {
            for shear in [AffineUnimodularMap::horizontal_shear(p), AffineUnimodularMap::vertical_shear(p)] {
                let m = shear.compose(&r)?;
                if accept(&m)? {
                    return Ok(m);
                }
            }
        }
        for &p in &params {
            for &t in &params {
                let hv = AffineUnimodularMap::horizontal_shear(p).compose(&AffineUnimodularMap::vertical_shear(t))?;
                let vh = AffineUnimodularMap::vertical_shear(p).compose(&AffineUnimodularMap::horizontal_shear(t))?;
                for w in [hv, vh] {
                    let m = w.compose(&r)?;
                    if accept(&m)? {
                        return Ok(m);
                    }
                }
            }
        }
    }
    Err(Error::NormalizationFailed)
}
