use std::io::{Read, Write};

use super::VoxelGrid;
use crate::error::{Error, Result};

pub const EVX_MAGIC: &[u8; 8] = b"EVXGRID1";

/// Writes the `EVXGRID1` container: magic, `B H W` as `u32` LE, then the
/// cells as `f32` LE in bin-major, row-major order.
pub fn write_evx<W: Write>(grid: &VoxelGrid, mut out: W) -> Result<()> {
    let dim = |n: usize| {
        u32::try_from(n).map_err(|_| Error::Format(format!("axis length {n} exceeds u32")))
    };
    let mut buf = Vec::with_capacity(20 + 4 * grid.values().len());
    buf.extend_from_slice(EVX_MAGIC);
    for n in [grid.bins(), grid.height(), grid.width()] {
        buf.extend_from_slice(&dim(n)?.to_le_bytes());
    }
    for &v in grid.values() {
        buf.extend_from_slice(&(v as f32).to_le_bytes());
    }
    out.write_all(&buf)?;
    Ok(())
}

pub fn read_evx<R: Read>(mut input: R) -> Result<VoxelGrid> {
    let mut bytes = Vec::new();
    input.read_to_end(&mut bytes)?;
    if bytes.len() < 20 || &bytes[..8] != EVX_MAGIC {
        return Err(Error::Format("missing EVXGRID1 header".into()));
    }
    let word = |i: usize| u32::from_le_bytes(bytes[8 + 4 * i..12 + 4 * i].try_into().unwrap()) as usize;
    let (b, h, w) = (word(0), word(1), word(2));
    let cells = b
        .checked_mul(h)
        .and_then(|n| n.checked_mul(w))
        .ok_or_else(|| Error::Format(format!("header {b}x{h}x{w} overflows")))?;
    let body = &bytes[20..];
    if body.len() != cells * 4 {
        return Err(Error::Format(format!(
            "header {b}x{h}x{w} needs {} payload bytes, found {}",
            cells * 4,
            body.len()
        )));
    }
    let values = body
        .chunks_exact(4)
        .map(|c| f32::from_le_bytes(c.try_into().unwrap()) as f64)
        .collect();
    VoxelGrid::new(b, h, w, values).map_err(|e| Error::Format(e.to_string()))
}

/// `bin,y,x,value` rows, nonzero cells only.
pub fn write_csv<W: Write>(grid: &VoxelGrid, mut out: W) -> Result<()> {
    let mut s = String::from("bin,y,x,value\n");
    for b in 0..grid.bins() {
        for y in 0..grid.height() {
            for x in 0..grid.width() {
                let v = grid.get(b, y, x);
                if v != 0.0 {
                    s.push_str(&format!("{b},{y},{x},{v}\n"));
                }
            }
        }
    }
    out.write_all(s.as_bytes())?;
    Ok(())
}
