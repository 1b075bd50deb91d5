use super::{is_power_of_three, CurveKind, CurvePath, CurvePoint, GridDims};
use crate::error::{Error, Result};

fn ternary_levels(mut n: usize) -> usize {
    let mut levels = 0;
    while n > 1 {
        n /= 3;
        levels += 1;
    }
    levels
}

/// Peano curve over grids whose sides are powers of three.
///
/// The path index is written in base 3 with one digit per (level, axis),
/// coarse levels first and x, y, z within a level. Axes with fewer levels
/// only take part in the coarsest levels. A coordinate digit equals the
/// index digit, complemented (`2 - digit`) when the index digits of the
/// *other* axes that precede it sum to an odd number.
pub fn generate_peano(dims: GridDims) -> Result<CurvePath> {
    if !dims.sides().iter().all(|&s| is_power_of_three(s)) {
        return Err(Error::UnsupportedSize {
            curve: "peano",
            reason: format!("{dims}: every side must be a power of three"),
        });
    }
    let levels = dims.sides().map(ternary_levels);
    let max_levels = levels.iter().copied().max().unwrap_or(0);
    let mut axis_order = Vec::new();
    for level in 0..max_levels {
        for (axis, &n) in levels.iter().enumerate() {
            if level < n {
                axis_order.push(axis);
            }
        }
    }

    let total = dims.cell_count();
    let mut digits = vec![0usize; axis_order.len()];
    let mut points = Vec::with_capacity(total);
    for index in 0..total {
        let mut rest = index;
        for slot in digits.iter_mut().rev() {
            *slot = rest % 3;
            rest /= 3;
        }
        let mut coords = [0usize; 3];
        // running digit sums per axis over the prefix
        let mut prefix = [0usize; 3];
        let mut prefix_total = 0usize;
        for (&axis, &digit) in axis_order.iter().zip(&digits) {
            let others = prefix_total - prefix[axis];
            let c = if others % 2 == 1 { 2 - digit } else { digit };
            coords[axis] = coords[axis] * 3 + c;
            prefix[axis] += digit;
            prefix_total += digit;
        }
        points.push(CurvePoint::new(coords[0], coords[1], coords[2]));
    }
    Ok(CurvePath::new_unchecked(dims, CurveKind::Peano, points))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_by_three_serpentine() {
        let p = generate_peano(GridDims::planar(3, 3).unwrap()).unwrap();
        let xy: Vec<_> = p.points().iter().map(|p| (p.x, p.y)).collect();
        assert_eq!(
            xy,
            vec![(0, 0), (0, 1), (0, 2), (1, 2), (1, 1), (1, 0), (2, 0), (2, 1), (2, 2)]
        );
    }

    #[test]
    fn unit_steps_on_native_sizes() {
        for (w, h, d) in [(9, 9, 1), (27, 27, 1), (9, 3, 1), (3, 27, 1), (3, 3, 3), (9, 9, 9), (1, 9, 1), (9, 3, 27)] {
            let p = generate_peano(GridDims::new(w, h, d).unwrap()).unwrap();
            assert!(p.is_bijective(), "{w}x{h}x{d}");
            assert_eq!(p.max_step(), 1, "{w}x{h}x{d}");
        }
    }

    #[test]
    fn single_cell_and_rejection() {
        let p = generate_peano(GridDims::new(1, 1, 1).unwrap()).unwrap();
        assert_eq!(p.len(), 1);
        assert!(generate_peano(GridDims::planar(4, 3).unwrap()).is_err());
    }
}
