use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::offset::{OffsetStream, WindowOffset};
use super::partition::{partition, reassemble};
use crate::error::{Error, Result};
use crate::volume::FeatureVolume;

/// A deterministic map whose output depends on one window offset per RWO
/// layer.
pub trait WindowedPipeline: Sync {
    /// Number of independently offset layers.
    fn layers(&self) -> usize {
        1
    }

    /// `offsets.len() == self.layers()`.
    fn apply(&self, vol: &FeatureVolume, offsets: &[WindowOffset]) -> Result<FeatureVolume>;
}

impl<F> WindowedPipeline for F
where
    F: Fn(&FeatureVolume, WindowOffset) -> Result<FeatureVolume> + Sync,
{
    fn apply(&self, vol: &FeatureVolume, offsets: &[WindowOffset]) -> Result<FeatureVolume> {
        self(vol, offsets[0])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sampling {
    /// i.i.d. offsets, the plain Monte-Carlo estimator.
    #[default]
    WithReplacement,
    /// Distinct joint offsets, evaluated in canonical (ordinal) order.
    WithoutReplacement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub win_size: usize,
    pub samples: usize,
    pub seed: u64,
    pub sampling: Sampling,
}

impl McConfig {
    /// Eight i.i.d. samples.
    pub fn new(win_size: usize, seed: u64) -> Self {
        Self {
            win_size,
            samples: 8,
            seed,
            sampling: Sampling::WithReplacement,
        }
    }

    pub fn samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn sampling(mut self, sampling: Sampling) -> Self {
        self.sampling = sampling;
        self
    }
}

fn joint_space(win_size: usize, layers: usize) -> Result<usize> {
    (win_size * win_size)
        .checked_pow(layers as u32)
        .ok_or_else(|| Error::InvalidArgument(format!("{layers} layers of window size {win_size} overflow the offset space")))
}

fn decode_joint(mut index: usize, win_size: usize, layers: usize) -> Result<Vec<WindowOffset>> {
    let per_layer = win_size * win_size;
    let mut offsets = Vec::with_capacity(layers);
    for _ in 0..layers {
        offsets.push(WindowOffset::from_ordinal(index % per_layer, win_size)?);
        index /= per_layer;
    }
    Ok(offsets)
}

/// Offsets for each of `cfg.samples` pipeline evaluations, one per layer.
///
/// With replacement, sample `i` of layer `l` is the `i`-th draw of
/// [`OffsetStream`] `l`. Without replacement, distinct joint offsets are
/// drawn from stream `layers` and sorted by joint ordinal.
pub fn draw_offsets(layers: usize, cfg: &McConfig) -> Result<Vec<Vec<WindowOffset>>> {
    if cfg.samples == 0 {
        return Err(Error::InvalidArgument("Monte-Carlo sample count must be at least 1".into()));
    }
    if layers == 0 {
        return Err(Error::InvalidArgument("pipeline must have at least one layer".into()));
    }
    match cfg.sampling {
        Sampling::WithReplacement => {
            let mut streams = (0..layers)
                .map(|l| OffsetStream::new(cfg.seed, l as u64, cfg.win_size))
                .collect::<Result<Vec<_>>>()?;
            Ok((0..cfg.samples)
                .map(|_| streams.iter_mut().map(OffsetStream::next_offset).collect())
                .collect())
        }
        Sampling::WithoutReplacement => {
            if cfg.win_size == 0 {
                return Err(Error::InvalidArgument("window size must be at least 1".into()));
            }
            let space = joint_space(cfg.win_size, layers)?;
            if cfg.samples > space {
                return Err(Error::InvalidArgument(format!(
                    "{} distinct samples requested from {space} offsets",
                    cfg.samples
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(layers as u64);
            let mut picks = sample(&mut rng, space, cfg.samples).into_vec();
            picks.sort_unstable();
            picks
                .into_iter()
                .map(|k| decode_joint(k, cfg.win_size, layers))
                .collect()
        }
    }
}

/// Pairwise (tree) sum in index order, then divided by the count.
fn pairwise_mean(outputs: &[FeatureVolume]) -> Result<FeatureVolume> {
    fn sum(outs: &[FeatureVolume]) -> Vec<f64> {
        if outs.len() == 1 {
            return outs[0].values().to_vec();
        }
        let (l, r) = outs.split_at(outs.len() / 2);
        let mut acc = sum(l);
        for (a, b) in acc.iter_mut().zip(sum(r)) {
            *a += b;
        }
        acc
    }
    let (c, h, w) = outputs[0].shape();
    if let Some(bad) = outputs.iter().find(|o| o.shape() != (c, h, w)) {
        return Err(Error::mismatch(format!("{:?}", (c, h, w)), format!("{:?}", bad.shape())));
    }
    let n = outputs.len() as f64;
    let values = sum(outputs).into_iter().map(|v| v / n).collect();
    FeatureVolume::new(c, h, w, values)
}

fn evaluate<P: WindowedPipeline + ?Sized>(
    pipeline: &P,
    vol: &FeatureVolume,
    draws: &[Vec<WindowOffset>],
) -> Result<FeatureVolume> {
    let outputs = draws
        .par_iter()
        .map(|offsets| pipeline.apply(vol, offsets))
        .collect::<Result<Vec<_>>>()?;
    pairwise_mean(&outputs)
}

/// Monte-Carlo estimate of the offset expectation of `pipeline(vol)`.
pub fn mc_average<P: WindowedPipeline + ?Sized>(
    pipeline: &P,
    vol: &FeatureVolume,
    cfg: &McConfig,
) -> Result<FeatureVolume> {
    let draws = draw_offsets(pipeline.layers(), cfg)?;
    evaluate(pipeline, vol, &draws)
}

/// Exact expectation over every joint offset, `(s^2)^layers` evaluations.
pub fn full_enumeration<P: WindowedPipeline + ?Sized>(
    pipeline: &P,
    vol: &FeatureVolume,
    win_size: usize,
) -> Result<FeatureVolume> {
    if win_size == 0 {
        return Err(Error::InvalidArgument("window size must be at least 1".into()));
    }
    let layers = pipeline.layers();
    if layers == 0 {
        return Err(Error::InvalidArgument("pipeline must have at least one layer".into()));
    }
    let draws = (0..joint_space(win_size, layers)?)
        .map(|k| decode_joint(k, win_size, layers))
        .collect::<Result<Vec<_>>>()?;
    evaluate(pipeline, vol, &draws)
}

/// Replaces every window by its per-channel mean: a linear, strongly
/// offset-dependent pipeline.
#[derive(Debug, Clone, Copy, Default)]
pub struct WindowMeanPool;

impl WindowMeanPool {
    pub fn pool(vol: &FeatureVolume, offset: WindowOffset) -> Result<FeatureVolume> {
        let ws = partition(vol, offset)?.map_windows(|w| {
            let (c, s, _) = w.shape();
            let area = (s * s) as f64;
            let means: Vec<f64> = w.values().chunks(s * s).map(|ch| ch.iter().sum::<f64>() / area).collect();
            FeatureVolume::from_fn(c, s, s, |ch, _, _| means[ch])
        })?;
        reassemble(&ws)
    }
}

impl WindowedPipeline for WindowMeanPool {
    fn apply(&self, vol: &FeatureVolume, offsets: &[WindowOffset]) -> Result<FeatureVolume> {
        Self::pool(vol, offsets[0])
    }
}
