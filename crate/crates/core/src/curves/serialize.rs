use super::CurvePath;
use crate::error::{Error, Result};
use crate::volume::FeatureVolume;

/// A volume flattened along a curve: `tokens` rows of `features` values.
#[derive(Debug, Clone, PartialEq)]
pub struct FlatSequence {
    tokens: usize,
    features: usize,
    values: Vec<f64>,
}

impl FlatSequence {
    pub fn new(tokens: usize, features: usize, values: Vec<f64>) -> Result<Self> {
        if tokens.checked_mul(features) != Some(values.len()) {
            return Err(Error::mismatch(
                format!("{tokens}x{features} values"),
                format!("{} values", values.len()),
            ));
        }
        Ok(Self {
            tokens,
            features,
            values,
        })
    }

    pub fn tokens(&self) -> usize {
        self.tokens
    }

    pub fn features(&self) -> usize {
        self.features
    }

    /// Token-major storage: `values()[t * features + f]`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    /// The sequence of one feature across all tokens.
    pub fn feature(&self, f: usize) -> Vec<f64> {
        self.values
            .iter()
            .skip(f)
            .step_by(self.features)
            .copied()
            .collect()
    }

    pub fn set_feature(&mut self, f: usize, seq: &[f64]) -> Result<()> {
        if seq.len() != self.tokens || f >= self.features {
            return Err(Error::mismatch(
                format!("feature < {} with {} tokens", self.features, self.tokens),
                format!("feature {f} with {} tokens", seq.len()),
            ));
        }
        for (t, &v) in seq.iter().enumerate() {
            self.values[t * self.features + f] = v;
        }
        Ok(())
    }
}

/// How a path's grid lines up with a volume.
enum Layout {
    /// Planar path over (x, y); every channel becomes a token feature.
    Planar,
    /// 3D path whose z axis is the channel axis; one scalar per token.
    Volumetric,
}

fn layout(path: &CurvePath, vol: (usize, usize, usize)) -> Result<Layout> {
    let dims = path.dims();
    let (channels, height, width) = vol;
    if dims.width() != width || dims.height() != height {
        return Err(Error::mismatch(
            format!("volume width x height {}x{}", dims.width(), dims.height()),
            format!("{width}x{height}"),
        ));
    }
    if dims.is_planar() {
        Ok(Layout::Planar)
    } else if dims.depth() == channels {
        Ok(Layout::Volumetric)
    } else {
        Err(Error::mismatch(
            format!("{} channels (curve depth)", dims.depth()),
            format!("{channels} channels"),
        ))
    }
}

/// Reads the volume's cells in path order.
pub fn serialize(path: &CurvePath, vol: &FeatureVolume) -> Result<FlatSequence> {
    match layout(path, vol.shape())? {
        Layout::Planar => {
            let c = vol.channels();
            let mut values = Vec::with_capacity(path.len() * c);
            for p in path.points() {
                values.extend((0..c).map(|ch| vol.get(ch, p.y, p.x)));
            }
            FlatSequence::new(path.len(), c, values)
        }
        Layout::Volumetric => {
            let values = path.points().iter().map(|p| vol.get(p.z, p.y, p.x)).collect();
            FlatSequence::new(path.len(), 1, values)
        }
    }
}

/// Exact inverse of [`serialize`].
pub fn deserialize(path: &CurvePath, seq: &FlatSequence) -> Result<FeatureVolume> {
    let dims = path.dims();
    if seq.tokens() != path.len() {
        return Err(Error::mismatch(
            format!("{} tokens", path.len()),
            format!("{} tokens", seq.tokens()),
        ));
    }
    if dims.is_planar() {
        let c = seq.features();
        let mut vol = FeatureVolume::zeros(c, dims.height(), dims.width())?;
        for (t, p) in path.points().iter().enumerate() {
            for ch in 0..c {
                vol.set(ch, p.y, p.x, seq.values()[t * c + ch]);
            }
        }
        Ok(vol)
    } else {
        if seq.features() != 1 {
            return Err(Error::mismatch("1 feature per token", seq.features()));
        }
        let mut vol = FeatureVolume::zeros(dims.depth(), dims.height(), dims.width())?;
        for (p, &v) in path.points().iter().zip(seq.values()) {
            vol.set(p.z, p.y, p.x, v);
        }
        Ok(vol)
    }
}
