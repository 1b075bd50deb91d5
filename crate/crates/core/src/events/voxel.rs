use super::EventGroup;
use crate::error::{Error, Result};
use crate::volume::FeatureVolume;

pub const DEFAULT_BINS: usize = 5;

/// `bins × height × width` accumulation of signed polarities.
///
/// Values are accumulated and kept in `f64`; only the on-disk container
/// narrows them to `f32`.
#[derive(Debug, Clone, PartialEq)]
pub struct VoxelGrid {
    bins: usize,
    height: usize,
    width: usize,
    values: Vec<f64>,
}

impl VoxelGrid {
    pub fn zeros(bins: usize, height: usize, width: usize) -> Result<Self> {
        Self::new(bins, height, width, vec![0.0; bins * height * width])
    }

    pub fn new(bins: usize, height: usize, width: usize, values: Vec<f64>) -> Result<Self> {
        if bins == 0 || height == 0 || width == 0 {
            return Err(Error::InvalidDims(format!(
                "voxel grid {bins}x{height}x{width} has an empty axis"
            )));
        }
        if values.len() != bins * height * width {
            return Err(Error::mismatch(bins * height * width, values.len()));
        }
        Ok(Self {
            bins,
            height,
            width,
            values,
        })
    }

    pub fn bins(&self) -> usize {
        self.bins
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Bin-major, row-major.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, bin: usize, y: usize, x: usize) -> f64 {
        self.values[(bin * self.height + y) * self.width + x]
    }

    /// Sum of all cells, accumulated sequentially.
    pub fn total(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn into_volume(self) -> FeatureVolume {
        FeatureVolume::new(self.bins, self.height, self.width, self.values)
            .expect("voxel grid shape is valid by construction")
    }

    pub fn from_volume(vol: FeatureVolume) -> Self {
        let (c, h, w) = vol.shape();
        Self {
            bins: c,
            height: h,
            width: w,
            values: vol.into_values(),
        }
    }
}

/// Splats each event's polarity over the two temporal bins nearest to its
/// normalized timestamp `t* = (B-1)(t - T)/ΔT`.
pub fn voxelize(group: &EventGroup, bins: usize, height: usize, width: usize) -> Result<VoxelGrid> {
    let mut grid = VoxelGrid::zeros(bins, height, width)?;
    let start = group.window_start();
    let span = group.window_end() - start;
    if span.is_nan() || span <= 0.0 {
        return Err(Error::InvalidArgument(format!("zero-length window (ΔT = {span})")));
    }
    let scale = (bins - 1) as f64 / span;
    let plane = height * width;
    for e in group.events() {
        let (x, y) = (e.x as usize, e.y as usize);
        if x >= width || y >= height {
            return Err(Error::InvalidArgument(format!(
                "event pixel ({x}, {y}) outside {width}x{height} sensor"
            )));
        }
        let ts = (e.t - start) * scale;
        let lo = ts.floor();
        let frac = ts - lo;
        let lo = lo as isize;
        let p = e.p.sign();
        let cell = y * width + x;
        for (bin, w) in [(lo, 1.0 - frac), (lo + 1, frac)] {
            if w > 0.0 && bin >= 0 && (bin as usize) < bins {
                grid.values[bin as usize * plane + cell] += p * w;
            }
        }
    }
    Ok(grid)
}
