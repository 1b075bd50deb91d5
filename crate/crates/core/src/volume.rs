use crate::error::{Error, Result};

/// Dense `channels x height x width` feature map stored channel-major,
/// then row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVolume {
    channels: usize,
    height: usize,
    width: usize,
    values: Vec<f64>,
}

impl FeatureVolume {
    pub fn new(channels: usize, height: usize, width: usize, values: Vec<f64>) -> Result<Self> {
        if channels == 0 || height == 0 || width == 0 {
            return Err(Error::InvalidDims(format!(
                "volume {channels}x{height}x{width} has an empty axis"
            )));
        }
        let expected = channels
            .checked_mul(height)
            .and_then(|n| n.checked_mul(width))
            .ok_or_else(|| Error::InvalidDims("volume cell count overflows".into()))?;
        if values.len() != expected {
            return Err(Error::mismatch(
                format!("{expected} values"),
                format!("{} values", values.len()),
            ));
        }
        Ok(Self {
            channels,
            height,
            width,
            values,
        })
    }

    pub fn zeros(channels: usize, height: usize, width: usize) -> Result<Self> {
        let len = channels.saturating_mul(height).saturating_mul(width);
        Self::new(channels, height, width, vec![0.0; len])
    }

    /// Builds a volume by evaluating `f(channel, row, col)` for every cell.
    pub fn from_fn(
        channels: usize,
        height: usize,
        width: usize,
        mut f: impl FnMut(usize, usize, usize) -> f64,
    ) -> Result<Self> {
        let mut values = Vec::with_capacity(channels.saturating_mul(height).saturating_mul(width));
        for c in 0..channels {
            for y in 0..height {
                for x in 0..width {
                    values.push(f(c, y, x));
                }
            }
        }
        Self::new(channels, height, width, values)
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.channels, self.height, self.width)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    #[inline]
    pub fn index(&self, c: usize, y: usize, x: usize) -> usize {
        debug_assert!(c < self.channels && y < self.height && x < self.width);
        (c * self.height + y) * self.width + x
    }

    #[inline]
    pub fn get(&self, c: usize, y: usize, x: usize) -> f64 {
        self.values[self.index(c, y, x)]
    }

    #[inline]
    pub fn set(&mut self, c: usize, y: usize, x: usize, v: f64) {
        let i = self.index(c, y, x);
        self.values[i] = v;
    }

    /// Largest absolute elementwise difference; `None` when shapes differ.
    pub fn max_abs_diff(&self, other: &FeatureVolume) -> Option<f64> {
        if self.shape() != other.shape() {
            return None;
        }
        Some(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }

    /// Cyclic translation: the value at `(y, x)` moves to `(y + dy, x + dx)`.
    pub fn roll(&self, dy: isize, dx: isize) -> FeatureVolume {
        let (h, w) = (self.height as isize, self.width as isize);
        let mut out = self.clone();
        for c in 0..self.channels {
            for y in 0..self.height {
                for x in 0..self.width {
                    let ty = (y as isize + dy).rem_euclid(h) as usize;
                    let tx = (x as isize + dx).rem_euclid(w) as usize;
                    out.set(c, ty, tx, self.get(c, y, x));
                }
            }
        }
        out
    }
}
