use super::offset::WindowOffset;
use crate::error::{Error, Result};
use crate::volume::FeatureVolume;

/// Windows of a cyclically shifted (and, if needed, reflect-padded) volume.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowSet {
    offset: WindowOffset,
    height: usize,
    width: usize,
    padded_height: usize,
    padded_width: usize,
    windows: Vec<FeatureVolume>,
}

impl WindowSet {
    pub fn offset(&self) -> WindowOffset {
        self.offset
    }

    /// Window grid as `(rows, cols)`.
    pub fn grid(&self) -> (usize, usize) {
        let s = self.offset.size();
        (self.padded_height / s, self.padded_width / s)
    }

    /// Windows in row-major window order, each `channels x s x s`.
    pub fn windows(&self) -> &[FeatureVolume] {
        &self.windows
    }

    pub fn windows_mut(&mut self) -> &mut [FeatureVolume] {
        &mut self.windows
    }

    pub fn original_shape(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn padded_shape(&self) -> (usize, usize) {
        (self.padded_height, self.padded_width)
    }

    /// Applies `f` to every window, keeping the window shape.
    pub fn map_windows(
        mut self,
        mut f: impl FnMut(&FeatureVolume) -> Result<FeatureVolume>,
    ) -> Result<Self> {
        for w in &mut self.windows {
            let out = f(w)?;
            if out.shape() != w.shape() {
                return Err(Error::mismatch(
                    format!("window shape {:?}", w.shape()),
                    format!("{:?}", out.shape()),
                ));
            }
            *w = out;
        }
        Ok(self)
    }
}

/// Mirror index without repeating the edge sample (`n >= 2` when `i >= n`).
fn reflect(i: usize, n: usize) -> usize {
    if i < n {
        i
    } else {
        2 * (n - 1) - i
    }
}

/// Pads up to multiples of `s` (reflect), rolls by `(-dh, -dw)` and tiles
/// into `s x s` windows.
pub fn partition(vol: &FeatureVolume, offset: WindowOffset) -> Result<WindowSet> {
    let (channels, height, width) = vol.shape();
    let s = offset.size();
    if s > height || s > width {
        return Err(Error::InvalidArgument(format!(
            "window size {s} exceeds the {height}x{width} volume"
        )));
    }
    let ph = height.div_ceil(s) * s;
    let pw = width.div_ceil(s) * s;
    let (rows, cols) = (ph / s, pw / s);
    let mut windows = Vec::with_capacity(rows * cols);
    for wr in 0..rows {
        for wc in 0..cols {
            let win = FeatureVolume::from_fn(channels, s, s, |c, y, x| {
                let py = (wr * s + y + offset.dh()) % ph;
                let px = (wc * s + x + offset.dw()) % pw;
                vol.get(c, reflect(py, height), reflect(px, width))
            })?;
            windows.push(win);
        }
    }
    Ok(WindowSet {
        offset,
        height,
        width,
        padded_height: ph,
        padded_width: pw,
        windows,
    })
}

/// Inverse of [`partition`]: untiles, rolls back and crops the padding.
pub fn reassemble(ws: &WindowSet) -> Result<FeatureVolume> {
    let s = ws.offset.size();
    let (rows, cols) = ws.grid();
    if ws.windows.len() != rows * cols {
        return Err(Error::mismatch(format!("{} windows", rows * cols), ws.windows.len()));
    }
    let channels = ws.windows[0].channels();
    let mut out = FeatureVolume::zeros(channels, ws.height, ws.width)?;
    for (k, win) in ws.windows.iter().enumerate() {
        if win.shape() != (channels, s, s) {
            return Err(Error::mismatch(format!("{:?}", (channels, s, s)), format!("{:?}", win.shape())));
        }
        let (wr, wc) = (k / cols, k % cols);
        for c in 0..channels {
            for y in 0..s {
                let py = (wr * s + y + ws.offset.dh()) % ws.padded_height;
                if py >= ws.height {
                    continue;
                }
                for x in 0..s {
                    let px = (wc * s + x + ws.offset.dw()) % ws.padded_width;
                    if px < ws.width {
                        out.set(c, py, px, win.get(c, y, x));
                    }
                }
            }
        }
    }
    Ok(out)
}
