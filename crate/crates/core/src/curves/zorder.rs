use super::{CurveKind, CurvePath, CurvePoint, GridDims};
use crate::error::{Error, Result};

/// Morton order. Bits are interleaved from the least significant end with
/// x first, then y, then z; a side with fewer bits simply stops
/// contributing once its bits run out.
pub fn generate_zorder(dims: GridDims) -> Result<CurvePath> {
    if !CurveKind::ZOrder.supports(dims) {
        return Err(Error::UnsupportedSize {
            curve: "zorder",
            reason: format!("{dims}: every side must be a power of two"),
        });
    }
    let bits = dims.sides().map(|s| s.trailing_zeros());
    let max_bits = bits.iter().copied().max().unwrap_or(0);
    let points = (0..dims.cell_count())
        .map(|code| {
            let mut coords = [0usize; 3];
            let mut cursor = 0;
            for level in 0..max_bits {
                for (axis, &nbits) in bits.iter().enumerate() {
                    if level < nbits {
                        coords[axis] |= ((code >> cursor) & 1) << level;
                        cursor += 1;
                    }
                }
            }
            CurvePoint::new(coords[0], coords[1], coords[2])
        })
        .collect();
    Ok(CurvePath::new_unchecked(dims, CurveKind::ZOrder, points))
}
