//! Jump/Still segment statistics and the space-to-linear ratio of a curve.
//!
//! Segment ratios are exact fractions so they can be compared against the
//! closed forms without tolerance. Normalisation is by `D * (cells - 1)`.
//!
//! A segment is a *jump* when its endpoints are more than one cell apart
//! (Euclidean). It is *still* in dimension `k` when coordinate `k` does not
//! change. The jump ratio counts jumps per dimension the same way the still
//! ratio does: a jump that moves along `m` axes weighs `max(m - 1, 1)`.
//! For row-major scans on 3D grids this is what separates a slice wrap
//! (weight 2) from a row wrap (weight 1); [`SegmentStats::jump_count`] keeps
//! the plain segment count.

use num_rational::Ratio;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::curves::{CurveKind, CurvePath, CurvePoint};
use crate::error::{Error, Result};

pub type Fraction = Ratio<u64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentStats {
    pub dimensionality: usize,
    pub total_segments: usize,
    /// Segments whose endpoints are more than one cell apart.
    pub jump_count: usize,
    /// Jumps weighted by the number of extra axes they move along.
    pub jump_dim_count: usize,
    pub still_count_per_dim: Vec<usize>,
    pub jump_ratio: Fraction,
    pub still_ratio: Fraction,
}

impl SegmentStats {
    pub fn jump_ratio_f64(&self) -> f64 {
        to_f64(self.jump_ratio)
    }

    pub fn still_ratio_f64(&self) -> f64 {
        to_f64(self.still_ratio)
    }
}

pub fn to_f64(r: Fraction) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn segment_stats(path: &CurvePath) -> Result<SegmentStats> {
    if path.len() < 2 {
        return Err(Error::InvalidArgument(
            "segment statistics need a path with at least two points".into(),
        ));
    }
    let d = path.dims().dimensionality();
    let total = path.len() - 1;
    let mut jump_count = 0;
    let mut jump_dim_count = 0;
    let mut still = vec![0usize; d];
    for w in path.points().windows(2) {
        let (a, b) = (w[0].coords(), w[1].coords());
        let mut moved = 0usize;
        for k in 0..d {
            if a[k] == b[k] {
                still[k] += 1;
            } else {
                moved += 1;
            }
        }
        if w[0].squared_distance(&w[1]) > 1 {
            jump_count += 1;
            jump_dim_count += moved.saturating_sub(1).max(1);
        }
    }
    let denom = (d * total) as u64;
    Ok(SegmentStats {
        dimensionality: d,
        total_segments: total,
        jump_count,
        jump_dim_count,
        jump_ratio: Fraction::new(jump_dim_count as u64, denom),
        still_ratio: Fraction::new(still.iter().sum::<usize>() as u64, denom),
        still_count_per_dim: still,
    })
}

/// Closed-form `(jump_ratio, still_ratio)` of the row-major scan and the
/// Hilbert curve on an `n^d` grid.
pub fn closed_form_stats(n: u64, d: u32, kind: CurveKind) -> Result<(Fraction, Fraction)> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("grid side {n} must be at least 2")));
    }
    if !(2..=3).contains(&d) {
        return Err(Error::InvalidArgument(format!("dimensionality {d} must be 2 or 3")));
    }
    let cells = n.pow(d);
    let segments = cells - 1;
    let denom = d as u64 * segments;
    match kind {
        CurveKind::Reshape => {
            // 1 + n + ... + n^(d-1)
            let geometric = segments / (n - 1);
            let jump = geometric - d as u64;
            let still = d as u64 * cells - n * geometric;
            Ok((Fraction::new(jump, denom), Fraction::new(still, denom)))
        }
        CurveKind::Hilbert => Ok((
            Fraction::new(0, 1),
            Fraction::new((d as u64 - 1) * segments, denom),
        )),
        other => Err(Error::InvalidArgument(format!(
            "no closed form for the {other} curve"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SlrResult {
    pub max_ratio: f64,
    /// Curve parameters `(t, tau)` of the maximising pair, `t < tau`.
    pub argmax_pair: (f64, f64),
    /// Path positions of the maximising pair.
    pub argmax_positions: (usize, usize),
    /// The maximum as an exact fraction `numer / denom`.
    pub exact: (u128, u128),
    pub exhaustive: bool,
    pub pairs_evaluated: u64,
}

/// Seed of the pair sampler used when the exhaustive search exceeds the budget.
pub const SLR_SAMPLING_SEED: u64 = 0x51_72_2d_73_6c_72;

#[derive(Debug, Clone, Copy)]
struct Candidate {
    numer: u128,
    denom: u128,
    i: usize,
    j: usize,
}

impl Candidate {
    /// Larger ratio wins; ties go to the earlier pair.
    fn better(self, other: Candidate) -> Candidate {
        let lhs = self.numer * other.denom;
        let rhs = other.numer * self.denom;
        if lhs > rhs || (lhs == rhs && (self.i, self.j) < (other.i, other.j)) {
            self
        } else {
            other
        }
    }
}

struct SlrScale {
    w2: u128,
    h2: u128,
    wh: u128,
}

impl SlrScale {
    /// Ratio for path positions `i < j` as an exact fraction.
    ///
    /// Cell `(x, y)` sits at `((x + 1/2) / W, (y + 1/2) / H)` and path
    /// position `k` at parameter `k / (W H)`, so
    /// `|p(t) - p(tau)|^2 / |t - tau| = (dx^2 H^2 + dy^2 W^2) / (W H (j - i))`.
    fn candidate(&self, points: &[CurvePoint], i: usize, j: usize) -> Candidate {
        let (a, b) = (points[i], points[j]);
        let dx = a.x.abs_diff(b.x) as u128;
        let dy = a.y.abs_diff(b.y) as u128;
        Candidate {
            numer: dx * dx * self.h2 + dy * dy * self.w2,
            denom: self.wh * (j - i) as u128,
            i,
            j,
        }
    }
}

fn gap_best(scale: &SlrScale, points: &[CurvePoint], gap: usize, starts: Option<&[usize]>) -> Candidate {
    let mut best = scale.candidate(points, 0, gap);
    match starts {
        None => {
            for i in 1..points.len() - gap {
                best = best.better(scale.candidate(points, i, i + gap));
            }
        }
        Some(starts) => {
            for &i in starts {
                best = best.better(scale.candidate(points, i, i + gap));
            }
        }
    }
    best
}

/// Gaps 1, 2, 3, 4, 6, 9, 13, ... up to `len - 1`.
fn geometric_gaps(len: usize) -> Vec<usize> {
    let mut gaps = Vec::new();
    let mut g = 1usize;
    while g < len {
        gaps.push(g);
        g = (g + 1).max(g * 3 / 2);
    }
    gaps
}

/// Maximum space-to-linear ratio of a planar curve.
///
/// All pairs are evaluated when `cells^2 <= pair_budget`; otherwise a
/// deterministic subset is used: geometrically spaced index gaps, each with
/// an equal share of the budget of seeded random start positions.
pub fn empirical_slr(path: &CurvePath, pair_budget: u64) -> Result<SlrResult> {
    let dims = path.dims();
    if !dims.is_planar() {
        return Err(Error::InvalidArgument(
            "the space-to-linear ratio is defined for planar curves only".into(),
        ));
    }
    if path.len() < 2 {
        return Err(Error::InvalidArgument(
            "the space-to-linear ratio needs at least two points".into(),
        ));
    }
    let (w, h) = (dims.width() as u128, dims.height() as u128);
    let scale = SlrScale {
        w2: w * w,
        h2: h * h,
        wh: w * h,
    };
    let points = path.points();
    let len = points.len();
    let cells = len as u128;
    let exhaustive = cells * cells <= pair_budget as u128;

    let (best, evaluated) = if exhaustive {
        let best = (1..len)
            .into_par_iter()
            .map(|gap| gap_best(&scale, points, gap, None))
            .reduce_with(Candidate::better)
            .expect("at least one gap");
        (best, (len as u64 * (len as u64 - 1)) / 2)
    } else {
        let gaps = geometric_gaps(len);
        let per_gap = (pair_budget / gaps.len() as u64).max(1) as usize;
        let picks: Vec<(usize, Option<Vec<usize>>)> = gaps
            .iter()
            .map(|&gap| {
                let available = len - gap;
                if available <= per_gap {
                    (gap, None)
                } else {
                    let mut rng = ChaCha8Rng::seed_from_u64(SLR_SAMPLING_SEED ^ gap as u64);
                    let mut starts = sample(&mut rng, available, per_gap).into_vec();
                    starts.sort_unstable();
                    (gap, Some(starts))
                }
            })
            .collect();
        let evaluated = picks
            .iter()
            .map(|(gap, s)| s.as_ref().map_or(len - gap, Vec::len) as u64)
            .sum();
        let best = picks
            .par_iter()
            .map(|(gap, starts)| gap_best(&scale, points, *gap, starts.as_deref()))
            .reduce_with(Candidate::better)
            .expect("at least one gap");
        (best, evaluated)
    };

    Ok(SlrResult {
        max_ratio: best.numer as f64 / best.denom as f64,
        argmax_pair: (best.i as f64 / cells as f64, best.j as f64 / cells as f64),
        argmax_positions: (best.i, best.j),
        exact: (best.numer, best.denom),
        exhaustive,
        pairs_evaluated: evaluated,
    })
}

/// One row of the locality CSV report.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalityRow {
    pub kind: CurveKind,
    pub side: usize,
    pub dimensionality: usize,
    pub stats: SegmentStats,
    /// Only computed for planar grids.
    pub slr: Option<f64>,
}

pub const CSV_HEADER: &str = "kind,N,D,jump_ratio,still_ratio,slr";

impl LocalityRow {
    pub fn measure(kind: CurveKind, side: usize, dimensionality: usize, pair_budget: u64) -> Result<Self> {
        let depth = match dimensionality {
            2 => 1,
            3 => side,
            d => {
                return Err(Error::InvalidArgument(format!(
                    "dimensionality {d} must be 2 or 3"
                )))
            }
        };
        let dims = crate::curves::GridDims::new(side, side, depth)?;
        let path = crate::curves::generate(kind, dims)?;
        let stats = segment_stats(&path)?;
        let slr = if dimensionality == 2 {
            Some(empirical_slr(&path, pair_budget)?.max_ratio)
        } else {
            None
        };
        Ok(Self {
            kind,
            side,
            dimensionality,
            stats,
            slr,
        })
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.kind,
            self.side,
            self.dimensionality,
            self.stats.jump_ratio_f64(),
            self.stats.still_ratio_f64(),
            self.slr.map(|v| v.to_string()).unwrap_or_default()
        )
    }
}
