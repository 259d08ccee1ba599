use serde::{Deserialize, Serialize};

use crate::arith::{extended_gcd, gcd};
use crate::error::{Error, Result};
use crate::lattice::{convex_hull, lattice_points_in_polygon, AffineUnimodularMap, DigitalSet, HullPolygon, LatticePoint};

use super::rng::SplitMix64;

/// Coordinate clamp for sampled generators.
const SAMPLE_LIMIT: i64 = 1_000_000;

/// A reproducible family of digital convex sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    /// Lattice points with `x² + y² ≤ R²`.
    Disc { radius: i64 },
    /// Lattice points of the hull of `samples` uniform points in `[−half_width, half_width]²`.
    RandomHull { samples: u32, half_width: i64, seed: u64 },
    /// Lattice points between two near-parallel lines along a random primitive
    /// direction with components up to `max_slope`.
    ThinSlab { length: i64, width: i64, max_slope: i64, seed: u64 },
    /// Lattice points of the triangle `(0,0), (k−1,0), (−1,k+1)`.
    Pompom { k: i64 },
    /// `(0,0), (1,0), …, (n−1,0)`.
    Rows { n: i64 },
}

impl GeneratorSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Disc { .. } => "disc",
            Self::RandomHull { .. } => "random_hull",
            Self::ThinSlab { .. } => "thin_slab",
            Self::Pompom { .. } => "pompom",
            Self::Rows { .. } => "rows",
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}

pub fn generate(spec: &GeneratorSpec) -> Result<DigitalSet> {
    match *spec {
        GeneratorSpec::Disc { radius } => disc(radius),
        GeneratorSpec::RandomHull { samples, half_width, seed } => random_hull(samples, half_width, seed),
        GeneratorSpec::ThinSlab { length, width, max_slope, seed } => thin_slab(length, width, max_slope, seed),
        GeneratorSpec::Pompom { k } => pompom(k),
        GeneratorSpec::Rows { n } => rows(n),
    }
}

fn disc(radius: i64) -> Result<DigitalSet> {
    if !(0..=SAMPLE_LIMIT).contains(&radius) {
        return Err(bad(format!("disc radius {radius} outside [0, {SAMPLE_LIMIT}]")));
    }
    let r2 = radius * radius;
    let mut pts = Vec::new();
    // Column by column keeps the output sorted.
    for x in -radius..=radius {
        let half = num_integer::Roots::sqrt(&(r2 - x * x));
        pts.extend((-half..=half).map(|y| LatticePoint::new(x, y)));
    }
    Ok(DigitalSet::from_sorted_unchecked(pts))
}

fn random_hull(samples: u32, half_width: i64, seed: u64) -> Result<DigitalSet> {
    if samples == 0 {
        return Err(bad("random_hull needs at least one sample"));
    }
    if !(0..=SAMPLE_LIMIT).contains(&half_width) {
        return Err(bad(format!("half width {half_width} outside [0, {SAMPLE_LIMIT}]")));
    }
    let mut rng = SplitMix64::new(seed);
    let pts: Vec<LatticePoint> = (0..samples)
        .map(|_| {
            let x = rng.range_inclusive(-half_width, half_width);
            let y = rng.range_inclusive(-half_width, half_width);
            LatticePoint::new(x, y)
        })
        .collect();
    let hull = convex_hull(&DigitalSet::new(pts)?)?;
    Ok(lattice_points_in_polygon(&hull))
}

/// In slab coordinates `(i, j)` the region is `0 ≤ i ≤ length`,
/// `0 ≤ j·length ≤ width·length + tilt·i`; the unimodular map
/// `(i, j) ↦ i·u + j·w` with `cross(u, w) = 1` carries it into place.
fn thin_slab(length: i64, width: i64, max_slope: i64, seed: u64) -> Result<DigitalSet> {
    if !(1..=SAMPLE_LIMIT).contains(&length) || !(0..=SAMPLE_LIMIT).contains(&width) {
        return Err(bad("thin_slab needs 1 ≤ length and 0 ≤ width, both ≤ 10⁶"));
    }
    if !(1..=1000).contains(&max_slope) {
        return Err(bad("thin_slab max_slope must be in [1, 1000]"));
    }
    let mut rng = SplitMix64::new(seed);
    let (ux, uy) = loop {
        let ux = rng.range_inclusive(1, max_slope);
        let uy = rng.range_inclusive(-max_slope, max_slope);
        if gcd(ux as i128, uy as i128) == 1 {
            break (ux, uy);
        }
    };
    let tilt = rng.range_inclusive(0, width + 1);
    let (_, a, b) = extended_gcd(ux as i128, uy as i128);
    let (wx, wy) = (-(b as i64), a as i64);
    let span = |v: i64| v.unsigned_abs() as i128;
    if (span(ux) + span(wx) * (width + tilt) as i128) * length as i128 > SAMPLE_LIMIT as i128
        || (span(uy) + span(wy) * (width + tilt) as i128) * length as i128 > SAMPLE_LIMIT as i128
    {
        return Err(bad("thin_slab coordinates would exceed 10⁶"));
    }
    let mut pts = Vec::new();
    for i in 0..=length {
        let jmax = (width * length + tilt * i) / length;
        for j in 0..=jmax {
            pts.push(LatticePoint::new(i * ux + j * wx, i * uy + j * wy));
        }
    }
    DigitalSet::new(pts)
}

fn pompom(k: i64) -> Result<DigitalSet> {
    if !(2..=SAMPLE_LIMIT).contains(&k) {
        return Err(bad(format!("pompom needs 2 ≤ k ≤ {SAMPLE_LIMIT}, got {k}")));
    }
    let tri = HullPolygon::from_vertices(vec![
        LatticePoint::new(0, 0),
        LatticePoint::new(k - 1, 0),
        LatticePoint::new(-1, k + 1),
    ])
    .expect("counter-clockwise triangle");
    Ok(lattice_points_in_polygon(&tri))
}

fn rows(n: i64) -> Result<DigitalSet> {
    if !(1..=SAMPLE_LIMIT).contains(&n) {
        return Err(bad(format!("rows needs 1 ≤ n ≤ {SAMPLE_LIMIT}, got {n}")));
    }
    Ok(DigitalSet::from_sorted_unchecked((0..n).map(|x| LatticePoint::new(x, 0)).collect()))
}

/// A random unimodular map built as a product of `depth` alternating shears
/// with parameters in `[−max_param, max_param]`, an optional reflection and a
/// translation in `[−max_shift, max_shift]²`.
pub fn random_unimodular_map(rng: &mut SplitMix64, depth: u32, max_param: i64, max_shift: i64) -> Result<AffineUnimodularMap> {
    let mut m = if rng.below(2) == 1 { AffineUnimodularMap::horizontal_flip() } else { AffineUnimodularMap::identity() };
    for i in 0..depth {
        let s = rng.range_inclusive(-max_param, max_param);
        let shear =
            if i % 2 == 0 { AffineUnimodularMap::horizontal_shear(s) } else { AffineUnimodularMap::vertical_shear(s) };
        m = shear.compose(&m)?;
    }
    let shift = AffineUnimodularMap::translation(
        rng.range_inclusive(-max_shift, max_shift),
        rng.range_inclusive(-max_shift, max_shift),
    );
    shift.compose(&m)
}
