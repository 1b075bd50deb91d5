use std::fmt::Write as _;
use std::ops::Range;

use super::offset::{sample_offset, WindowOffset};
use crate::error::{Error, Result};

/// Region labels of a window-offset mask, row-major `height x width`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffsetMask {
    height: usize,
    width: usize,
    labels: Vec<u32>,
    region_count: usize,
}

impl OffsetMask {
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, y: usize, x: usize) -> u32 {
        self.labels[y * self.width + x]
    }

    pub fn region_count(&self) -> usize {
        self.region_count
    }

    /// One row per line, labels separated by single spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.labels.len() * 2);
        for row in self.labels.chunks(self.width) {
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{v}");
            }
            out.push('\n');
        }
        out
    }
}

/// Bands `[0, n-s)`, `[n-s, n-off)`, `[n-off, n)` for a non-zero offset,
/// otherwise the whole axis. Empty bands are dropped.
fn bands(n: usize, s: usize, off: usize) -> Vec<Range<usize>> {
    if off == 0 {
        return std::iter::once(0..n).collect();
    }
    [0..n - s, n - s..n - off, n - off..n]
        .into_iter()
        .filter(|r| !r.is_empty())
        .collect()
}

/// Labels the regions of an `height x width` map for a given offset:
/// row bands times column bands, numbered in row-major band order.
pub fn build_mask(height: usize, width: usize, offset: WindowOffset) -> Result<OffsetMask> {
    let s = offset.size();
    if height < s || width < s {
        return Err(Error::InvalidArgument(format!(
            "window size {s} exceeds the {height}x{width} map"
        )));
    }
    let rows = bands(height, s, offset.dh());
    let cols = bands(width, s, offset.dw());
    let mut labels = vec![0u32; height * width];
    let mut next = 0u32;
    for r in &rows {
        for c in &cols {
            for y in r.clone() {
                labels[y * width + c.start..y * width + c.end].fill(next);
            }
            next += 1;
        }
    }
    Ok(OffsetMask {
        height,
        width,
        labels,
        region_count: next as usize,
    })
}

/// [`build_mask`] with the offset drawn from `seed`.
pub fn build_random_mask(height: usize, width: usize, size: usize, seed: u64) -> Result<(OffsetMask, WindowOffset)> {
    let offset = sample_offset(size, seed)?;
    Ok((build_mask(height, width, offset)?, offset))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(h: usize, w: usize, s: usize, dh: usize, dw: usize) -> OffsetMask {
        build_mask(h, w, WindowOffset::new(dh, dw, s).unwrap()).unwrap()
    }

    #[test]
    fn zero_offset_is_one_region() {
        let m = mask(6, 5, 3, 0, 0);
        assert_eq!(m.region_count(), 1);
        assert!(m.labels().iter().all(|&l| l == 0));
    }

    #[test]
    fn row_offset_only() {
        let m = mask(8, 8, 4, 2, 0);
        assert_eq!(m.region_count(), 3);
        assert_eq!(m.label(3, 7), 0);
        assert_eq!(m.label(4, 0), 1);
        assert_eq!(m.label(6, 3), 2);
    }

    #[test]
    fn full_band_structure() {
        let m = mask(8, 8, 4, 2, 3);
        assert_eq!(m.region_count(), 9);
        assert_eq!(m.label(0, 0), 0);
        assert_eq!(m.label(0, 4), 1);
        assert_eq!(m.label(0, 5), 2);
        assert_eq!(m.label(7, 7), 8);
    }

    #[test]
    fn window_equal_to_map_skips_empty_band() {
        let m = mask(4, 4, 4, 2, 3);
        assert_eq!(m.region_count(), 4);
        assert_eq!(m.to_text(), "0 1 1 1\n0 1 1 1\n2 3 3 3\n2 3 3 3\n");
        let m = mask(4, 6, 4, 1, 0);
        assert_eq!(m.region_count(), 2);
        let m = mask(4, 6, 4, 1, 2);
        assert_eq!(m.region_count(), 6);
    }

    #[test]
    fn oversized_window_rejected() {
        assert!(build_mask(3, 8, WindowOffset::new(1, 1, 4).unwrap()).is_err());
    }
}
