use std::io::{BufRead, Write};

use super::{CurveKind, CurvePath, CurvePoint, GridDims};
use crate::error::{Error, Result};

/// One `x y z` line per point, in path order.
pub fn write_text<W: Write>(path: &CurvePath, mut out: W) -> Result<()> {
    for p in path.points() {
        writeln!(out, "{} {} {}", p.x, p.y, p.z)?;
    }
    Ok(())
}

/// Row-major linear indices as little-endian `u32`, in path order.
pub fn write_binary<W: Write>(path: &CurvePath, mut out: W) -> Result<()> {
    let dims = path.dims();
    if dims.cell_count() > u32::MAX as usize + 1 {
        return Err(Error::InvalidArgument(format!(
            "{dims} has too many cells for 32-bit indices"
        )));
    }
    let mut buf = Vec::with_capacity(path.len() * 4);
    for p in path.points() {
        buf.extend_from_slice(&(dims.linear_index(*p) as u32).to_le_bytes());
    }
    out.write_all(&buf)?;
    Ok(())
}

/// Reads a text export back, checking it is a bijection onto `dims`.
pub fn read_text<R: BufRead>(dims: GridDims, kind: CurveKind, input: R) -> Result<CurvePath> {
    let mut points = Vec::with_capacity(dims.cell_count());
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let coords = line
            .split_whitespace()
            .map(str::parse::<usize>)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })?;
        let [x, y, z] = coords[..] else {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected 3 coordinates, found {}", coords.len()),
            });
        };
        points.push(CurvePoint::new(x, y, z));
    }
    CurvePath::from_points(dims, kind, points)
}
