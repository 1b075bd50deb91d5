//! The dual Hilbert / trans-Hilbert scan block.
//!
//! A volume is serialized along both curves, each sequence is scanned by
//! the same SSM, and the two de-serialized outputs are averaged. The
//! average stands in for the learned projection that would normally merge
//! the two branches. With a window size set, the block runs per window and
//! is wrapped in random-window-offset Monte-Carlo averaging.

use crate::curves::{deserialize, generate, serialize, CurveKind, CurvePath, GridDims};
use crate::error::{Error, Result};
use crate::ssm::{discretize, scan_recurrent, DiscreteSsm, SsmParams};
use crate::volume::FeatureVolume;
use crate::windowing::{full_enumeration, mc_average, partition, reassemble, McConfig, Sampling, WindowOffset};

/// Either continuous parameters (discretized with ZOH) or an already
/// discrete system.
#[derive(Debug, Clone)]
pub enum ScanSsm {
    Continuous(SsmParams),
    Discrete(DiscreteSsm),
}

impl ScanSsm {
    pub fn discrete(&self) -> Result<DiscreteSsm> {
        match self {
            ScanSsm::Continuous(p) => discretize(p),
            ScanSsm::Discrete(d) => Ok(d.clone()),
        }
    }
}

impl From<SsmParams> for ScanSsm {
    fn from(p: SsmParams) -> Self {
        ScanSsm::Continuous(p)
    }
}

impl From<DiscreteSsm> for ScanSsm {
    fn from(d: DiscreteSsm) -> Self {
        ScanSsm::Discrete(d)
    }
}

#[derive(Debug, Clone)]
pub struct ScanBlockConfig {
    /// `W×H` for channel-as-feature scans, `W×H×C` to scan the channel axis
    /// as the third curve dimension.
    pub dims: GridDims,
    pub ssm: ScanSsm,
    /// `None` scans the whole volume once.
    pub win_size: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    /// Average over every offset instead of sampling.
    pub enumerate: bool,
    pub sampling: Sampling,
}

impl ScanBlockConfig {
    pub fn new(dims: GridDims, ssm: impl Into<ScanSsm>) -> Self {
        Self {
            dims,
            ssm: ssm.into(),
            win_size: None,
            samples: 8,
            seed: 0,
            enumerate: false,
            sampling: Sampling::WithReplacement,
        }
    }

    pub fn windowed(mut self, win_size: usize, samples: usize, seed: u64) -> Self {
        self.win_size = Some(win_size);
        self.samples = samples;
        self.seed = seed;
        self
    }

    fn validate(&self, vol: &FeatureVolume) -> Result<()> {
        let (c, h, w) = vol.shape();
        let d = self.dims;
        if d.width() != w || d.height() != h || !(d.is_planar() || d.depth() == c) {
            let expect = if d.is_planar() {
                format!("{}x{} volume", d.width(), d.height())
            } else {
                format!("{d} volume (W x H x channels)")
            };
            return Err(Error::mismatch(expect, format!("{w}x{h}x{c}")));
        }
        if self.samples == 0 {
            return Err(Error::InvalidArgument("sample count must be at least 1".into()));
        }
        if let Some(s) = self.win_size {
            if s == 0 || s > h || s > w {
                return Err(Error::InvalidArgument(format!(
                    "window size {s} must lie in 1..={}",
                    h.min(w)
                )));
            }
        }
        Ok(())
    }
}

struct DualScan {
    paths: [CurvePath; 2],
    ssm: DiscreteSsm,
}

impl DualScan {
    fn new(dims: GridDims, ssm: DiscreteSsm) -> Result<Self> {
        Ok(Self {
            paths: [
                generate(CurveKind::Hilbert, dims)?,
                generate(CurveKind::TransHilbert, dims)?,
            ],
            ssm,
        })
    }

    fn branch(&self, path: &CurvePath, vol: &FeatureVolume) -> Result<FeatureVolume> {
        let mut seq = serialize(path, vol)?;
        for f in 0..seq.features() {
            let y = scan_recurrent(&self.ssm, &seq.feature(f))?;
            seq.set_feature(f, &y)?;
        }
        deserialize(path, &seq)
    }

    fn run(&self, vol: &FeatureVolume) -> Result<FeatureVolume> {
        let mut out = self.branch(&self.paths[0], vol)?;
        let other = self.branch(&self.paths[1], vol)?;
        for (a, b) in out.values_mut().iter_mut().zip(other.values()) {
            *a = 0.5 * (*a + b);
        }
        Ok(out)
    }
}

/// Runs the dual-scan block. Output has the input's shape and is a pure
/// function of `(cfg, vol)`.
pub fn run_hsfc_block(cfg: &ScanBlockConfig, vol: &FeatureVolume) -> Result<FeatureVolume> {
    cfg.validate(vol)?;
    let ssm = cfg.ssm.discrete()?;
    let Some(s) = cfg.win_size else {
        return DualScan::new(cfg.dims, ssm)?.run(vol);
    };
    let depth = cfg.dims.depth();
    let scan = DualScan::new(GridDims::new(s, s, depth)?, ssm)?;
    let pipeline = |v: &FeatureVolume, off: WindowOffset| -> Result<FeatureVolume> {
        reassemble(&partition(v, off)?.map_windows(|w| scan.run(w))?)
    };
    if cfg.enumerate {
        full_enumeration(&pipeline, vol, s)
    } else {
        let mc = McConfig::new(s, cfg.seed)
            .samples(cfg.samples)
            .sampling(cfg.sampling);
        mc_average(&pipeline, vol, &mc)
    }
}
