//! Unimodular normalization of digital convex sets.
//!
//! The pipeline lays a lattice diameter `d₁` on the x-axis from `(0,0)` to
//! `(k−1,0)`, studies the quadrilateral ◇ spanned by `d₁` and the extreme
//! rows, and applies a handful of shears so that ◇ and then the whole set
//! become almost 4-connected. Each claimed property is checked as it is
//! established; a failed check hands the current image to a bounded shear
//! search and marks the trace.

mod bottom;
mod fallback;
mod quad;

use std::fmt;

use serde::Serialize;

pub use bottom::{connect_bottom, finalize_general, lemma2_region, lemma3_region, BottomCase, BottomPlan};
pub use fallback::fallback_shear_search;
pub use quad::{
    center_top_shear, detect_pompom, mirror_about_mid, orient_and_decompose, pompom_bottom_guard, pompom_transform,
    QuadDecomposition,
};

use crate::connectivity::{classify, is_4_connected, ConnectivityClass};
use crate::diameter::{lattice_diameter_fast, primitive_direction_map, DiameterResult};
use crate::error::{Error, Result};
use crate::lattice::{convex_hull, is_digital_convex, AffineUnimodularMap, DigitalSet, LatticePoint, INPUT_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseLabel {
    Direct4,
    TopCentered,
    Pompom,
    BottomRightShear,
    WedgeCase1,
    GeneralFix,
    FallbackSearch,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StepCheck {
    Skipped,
    Passed,
    Failed,
}

impl StepCheck {
    pub fn as_str(self) -> &'static str {
        match self {
            StepCheck::Skipped => "skipped",
            StepCheck::Passed => "passed",
            StepCheck::Failed => "failed",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            StepCheck::Passed
        } else {
            StepCheck::Failed
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub name: String,
    pub map: AffineUnimodularMap,
    pub check: StepCheck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationTrace {
    pub steps: Vec<TraceStep>,
    pub case_label: CaseLabel,
    pub top_prime: Option<LatticePoint>,
    pub bot_prime: Option<LatticePoint>,
    pub fallback_used: bool,
    pub fallback_reason: Option<String>,
}

impl NormalizationTrace {
    fn new() -> Self {
        Self {
            steps: Vec::new(),
            case_label: CaseLabel::Direct4,
            top_prime: None,
            bot_prime: None,
            fallback_used: false,
            fallback_reason: None,
        }
    }

    fn push(&mut self, name: &str, map: AffineUnimodularMap, check: StepCheck) {
        self.steps.push(TraceStep { name: name.to_string(), map, check });
    }

    /// Composition of all step maps, first step innermost.
    pub fn total_map(&self) -> Result<AffineUnimodularMap> {
        self.steps
            .iter()
            .try_fold(AffineUnimodularMap::identity(), |acc, st| st.map.compose(&acc))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub map: AffineUnimodularMap,
    pub image: DigitalSet,
    pub class: ConnectivityClass,
    pub diameter: DiameterResult,
    pub trace: NormalizationTrace,
}

/// Map taking `d.p_start` to `(0,0)` and `d.p_end` to `(k−1,0)`.
pub fn diameter_frame(d: &DiameterResult) -> Result<AffineUnimodularMap> {
    let rot = if d.k <= 1 { AffineUnimodularMap::identity() } else { primitive_direction_map(d.direction)? };
    let start = rot.apply(d.p_start)?;
    AffineUnimodularMap::translation(-start.x, -start.y).compose(&rot)
}

pub fn normalize_diameter_to_horizontal(s: &DigitalSet, d: &DiameterResult) -> Result<(AffineUnimodularMap, DigitalSet)> {
    let m = diameter_frame(d)?;
    let image = m.apply_set(s)?;
    Ok((m, image))
}

/// Carries a digital convex set onto an almost 4-connected one.
///
/// The returned map has determinant ±1, `image` is exactly `map(s)`, and the
/// trace lists every map applied, with the outcome of the check made right
/// after it. `trace.fallback_used` is set only if some check failed and the
/// shear search had to take over.
pub fn to_almost_4_connected(s: &DigitalSet) -> Result<Normalized> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&p) = s.iter().find(|p| !p.within(INPUT_LIMIT)) {
        return Err(Error::CoordinateOutOfRange(p));
    }
    if !is_digital_convex(s)? {
        return Err(Error::NotDigitalConvex);
    }
    let hull = convex_hull(s)?;
    let (d, _) = lattice_diameter_fast(s, &hull)?;

    let mut trace = NormalizationTrace::new();
    let frame = diameter_frame(&d)?;
    let on_axis = frame.apply(d.p_start)? == LatticePoint::new(0, 0)
        && frame.apply(d.p_end)? == LatticePoint::new(d.k as i64 - 1, 0);
    trace.push("diameter_to_horizontal", frame, StepCheck::from_bool(on_axis));
    if !on_axis {
        return Err(Error::InvariantViolation("diameter frame misplaced d1".into()));
    }

    if hull.len() > 2 {
        let hull1: Vec<LatticePoint> = hull.vertices().iter().map(|&v| frame.apply(v)).collect::<Result<_>>()?;
        match construct(s, d.k, &hull1, &mut trace) {
            Ok(()) => {}
            Err(e @ (Error::InvariantViolation(_) | Error::FallbackEngaged(_))) => {
                let current = trace.total_map()?.apply_set(s)?;
                let m = fallback_shear_search(&current, 2 * d.k)?;
                trace.push("fallback_search", m, StepCheck::Passed);
                trace.case_label = CaseLabel::FallbackSearch;
                trace.fallback_used = true;
                trace.fallback_reason = Some(e.to_string());
            }
            Err(e) => return Err(e),
        }
    }

    let map = trace.total_map()?;
    let image = map.apply_set(s)?;
    let class = classify(&image)?;
    if !class.is_almost_4() {
        return Err(Error::NormalizationFailed);
    }
    Ok(Normalized { map, image, class, diameter: d, trace })
}

/// The case analysis proper, on a set whose diameter already lies on the
/// axis. `hull1` is the hull of that image. Appends to `trace` as it goes.
fn construct(s: &DigitalSet, k: u64, hull1: &[LatticePoint], trace: &mut NormalizationTrace) -> Result<()> {
    let (top, bottom) = quad::extremes(hull1);
    let (flip, mut q) = quad::orient_extremes(k, top, bottom)?;
    if !flip.is_identity() {
        trace.push("orient_vertical_flip", flip, StepCheck::Skipped);
    }

    let shear = center_top_shear(&q)?;
    q = q.mapped(&shear)?;
    let l = q.l();
    let centered = (l - 2 * q.top.x).unsigned_abs() <= q.top.y.unsigned_abs();
    trace.push("center_top_shear", shear, StepCheck::from_bool(centered));
    if !centered {
        return Err(Error::InvariantViolation(format!("top {} not centered", q.top)));
    }
    if q.top.x > l {
        let m = mirror_about_mid(&q);
        q = q.mapped(&m)?;
        trace.push("mirror_about_mid", m, StepCheck::Skipped);
    }
    trace.top_prime = Some(q.top);
    trace.bot_prime = Some(q.bottom);
    trace.case_label = CaseLabel::TopCentered;

    if detect_pompom(&q) {
        pompom_bottom_guard(&q)?;
        trace.case_label = CaseLabel::Pompom;
        let m = pompom_transform();
        let image = m.compose(&trace.total_map()?)?.apply_set(s)?;
        let ok = classify(&image)?.is_almost_4();
        trace.push("pompom_vertical_shear", m, StepCheck::from_bool(ok));
        return if ok { Ok(()) } else { Err(Error::FallbackEngaged("pompom image is not almost 4-connected")) };
    }

    if !q.in_band(q.top) {
        return Err(Error::InvariantViolation(format!("top {} outside the band of d1", q.top)));
    }
    if !is_4_connected(&q.upper)? {
        return Err(Error::FallbackEngaged("upper triangle is not 4-connected"));
    }

    let plan = connect_bottom(&q)?;
    for &(name, m) in &plan.steps {
        q = q.mapped(&m)?;
        trace.push(name, m, StepCheck::Passed);
    }
    trace.case_label = match plan.case {
        BottomCase::Direct => CaseLabel::TopCentered,
        BottomCase::RightShear => CaseLabel::BottomRightShear,
        BottomCase::Wedge => CaseLabel::WedgeCase1,
    };

    let s2 = trace.total_map()?.apply_set(s)?;
    let fix = finalize_general(&s2, k, q.bottom)?;
    if !fix.is_identity() {
        trace.case_label = CaseLabel::GeneralFix;
    }
    trace.push("general_fix", fix, StepCheck::Passed);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diameter::lattice_diameter;

    fn run(pairs: &[(i64, i64)]) -> Normalized {
        to_almost_4_connected(&DigitalSet::from_pairs(pairs)).unwrap()
    }

    #[test]
    fn frame_examples() {
        let s = DigitalSet::from_pairs(&[(0, 0), (1, 1), (2, 2)]);
        let (_, img) = normalize_diameter_to_horizontal(&s, &lattice_diameter(&s).unwrap()).unwrap();
        assert_eq!(img, DigitalSet::from_pairs(&[(0, 0), (1, 0), (2, 0)]));

        let s = DigitalSet::from_pairs(&[(5, 5), (6, 5)]);
        let (m, _) = normalize_diameter_to_horizontal(&s, &lattice_diameter(&s).unwrap()).unwrap();
        assert_eq!(m, AffineUnimodularMap::translation(-5, -5));

        let s = DigitalSet::from_pairs(&[(0, 0), (1, 0), (2, 0)]);
        let (m, _) = normalize_diameter_to_horizontal(&s, &lattice_diameter(&s).unwrap()).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn single_point_and_collinear() {
        let out = run(&[(7, -3)]);
        assert_eq!(out.class, ConnectivityClass::Connected4);
        assert_eq!(out.trace.case_label, CaseLabel::Direct4);

        let out = run(&[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(out.image, DigitalSet::from_pairs(&[(0, 0), (1, 0), (2, 0)]));
        assert_eq!(out.class, ConnectivityClass::Connected4);
    }

    #[test]
    fn grid_stays_connected() {
        let pts: Vec<(i64, i64)> = (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).collect();
        let out = run(&pts);
        assert_eq!(out.class, ConnectivityClass::Connected4);
        assert!(!out.trace.fallback_used);
    }

    #[test]
    fn pompom_k2() {
        let out = run(&[(0, 0), (1, 0), (0, 1), (-1, 3)]);
        assert!(matches!(out.class, ConnectivityClass::Almost4 { .. }));
        assert_eq!(out.trace.case_label, CaseLabel::Pompom);
        assert_eq!(out.image.len(), 4);
        assert!(!out.trace.fallback_used);
    }

    #[test]
    fn trace_composes_to_total() {
        let out = run(&[(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (1, 2), (3, -1)]);
        assert_eq!(out.trace.total_map().unwrap(), out.map);
        assert!(out.map.determinant().abs() == 1);
    }

    #[test]
    fn rejects_bad_input() {
        let s = DigitalSet::from_pairs(&[(0, 0), (2, 0)]);
        assert_eq!(to_almost_4_connected(&s).unwrap_err(), Error::NotDigitalConvex);
        let s = DigitalSet::from_pairs(&[(0, 0), (1 << 32, 0)]);
        assert!(matches!(to_almost_4_connected(&s), Err(Error::CoordinateOutOfRange(_))));
    }
}
