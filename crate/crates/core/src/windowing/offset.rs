use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Offset `(dh, dw)` of a window grid of size `s`, with `0 <= dh, dw < s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WindowOffset {
    dh: usize,
    dw: usize,
    size: usize,
}

impl WindowOffset {
    pub fn new(dh: usize, dw: usize, size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidArgument("window size must be at least 1".into()));
        }
        if dh >= size || dw >= size {
            return Err(Error::InvalidArgument(format!(
                "offset ({dh}, {dw}) outside [0, {size})"
            )));
        }
        Ok(Self { dh, dw, size })
    }

    pub fn zero(size: usize) -> Result<Self> {
        Self::new(0, 0, size)
    }

    pub fn dh(&self) -> usize {
        self.dh
    }

    pub fn dw(&self) -> usize {
        self.dw
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Position of this offset in row-major order over `{0..s-1}^2`.
    pub fn ordinal(&self) -> usize {
        self.dh * self.size + self.dw
    }

    pub fn from_ordinal(ordinal: usize, size: usize) -> Result<Self> {
        Self::new(ordinal / size.max(1), ordinal % size.max(1), size)
    }

    /// All `s^2` offsets in row-major order.
    pub fn all(size: usize) -> Result<Vec<WindowOffset>> {
        (0..size * size).map(|k| Self::from_ordinal(k, size)).collect()
    }
}

/// Seeded offset source for one RWO layer.
///
/// Every layer `l` draws from ChaCha8 stream `l` of the same seed, so the
/// offsets of different layers are independent while the whole set stays
/// reproducible. Each offset consumes two draws: `dh` then `dw`.
#[derive(Debug, Clone)]
pub struct OffsetStream {
    rng: ChaCha8Rng,
    size: usize,
}

impl OffsetStream {
    pub fn new(seed: u64, layer: u64, size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidArgument("window size must be at least 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(layer);
        Ok(Self { rng, size })
    }

    pub fn next_offset(&mut self) -> WindowOffset {
        let dh = self.rng.gen_range(0..self.size);
        let dw = self.rng.gen_range(0..self.size);
        WindowOffset {
            dh,
            dw,
            size: self.size,
        }
    }
}

impl Iterator for OffsetStream {
    type Item = WindowOffset;

    fn next(&mut self) -> Option<WindowOffset> {
        Some(self.next_offset())
    }
}

/// First offset of layer 0 for `seed`.
pub fn sample_offset(size: usize, seed: u64) -> Result<WindowOffset> {
    Ok(OffsetStream::new(seed, 0, size)?.next_offset())
}
