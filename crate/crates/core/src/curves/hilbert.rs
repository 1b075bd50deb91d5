//! Generalized Hilbert curve for arbitrary 3D boxes.
//!
//! Port of the generalized Hilbert ("gilbert") construction by Jakub
//! Červený (BSD-2-Clause). The box is described by an origin and three
//! signed axis vectors: `a` (major, "right"), `b` ("forward") and `c`
//! ("up"). Each call either emits a straight run when two of the three
//! extents are 1, or splits the box and recurses:
//!
//! * wide boxes are halved along `a` only,
//! * boxes much taller than deep are split into three parts without
//!   cutting `c`,
//! * boxes much deeper than tall are split into three parts without
//!   cutting `b`,
//! * everything else is split into five parts along all three axes.
//!
//! Half-extents are rounded toward the direction of travel so that, where
//! possible, every sub-box has an even extent ("prefer even steps"). For
//! sides that are all powers of two this yields a curve whose consecutive
//! cells are always face neighbours.

use std::ops::{Add, Neg, Sub};

use super::{CurveKind, CurvePath, CurvePoint, GridDims};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct V3 {
    x: i64,
    y: i64,
    z: i64,
}

impl V3 {
    const fn new(x: i64, y: i64, z: i64) -> Self {
        Self { x, y, z }
    }

    /// Length of an axis vector (exactly one component is non-zero, or all are).
    fn extent(self) -> i64 {
        (self.x + self.y + self.z).abs()
    }

    fn signum(self) -> Self {
        Self::new(self.x.signum(), self.y.signum(), self.z.signum())
    }

    /// Componentwise floor division by two.
    fn half(self) -> Self {
        Self::new(self.x.div_euclid(2), self.y.div_euclid(2), self.z.div_euclid(2))
    }
}

impl Add for V3 {
    type Output = V3;
    fn add(self, o: V3) -> V3 {
        V3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for V3 {
    type Output = V3;
    fn sub(self, o: V3) -> V3 {
        V3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for V3 {
    type Output = V3;
    fn neg(self) -> V3 {
        V3::new(-self.x, -self.y, -self.z)
    }
}

struct Walker {
    out: Vec<CurvePoint>,
}

impl Walker {
    fn emit(&mut self, p: V3) {
        debug_assert!(p.x >= 0 && p.y >= 0 && p.z >= 0);
        self.out
            .push(CurvePoint::new(p.x as usize, p.y as usize, p.z as usize));
    }

    fn run(&mut self, mut p: V3, step: V3, n: i64) {
        for _ in 0..n {
            self.emit(p);
            p = p + step;
        }
    }

    fn fill(&mut self, p: V3, a: V3, b: V3, c: V3) {
        let (w, h, d) = (a.extent(), b.extent(), c.extent());
        let (da, db, dc) = (a.signum(), b.signum(), c.signum());

        if h == 1 && d == 1 {
            return self.run(p, da, w);
        }
        if w == 1 && d == 1 {
            return self.run(p, db, h);
        }
        if w == 1 && h == 1 {
            return self.run(p, dc, d);
        }

        let (mut a2, mut b2, mut c2) = (a.half(), b.half(), c.half());
        if a2.extent() % 2 == 1 && w > 2 {
            a2 = a2 + da;
        }
        if b2.extent() % 2 == 1 && h > 2 {
            b2 = b2 + db;
        }
        if c2.extent() % 2 == 1 && d > 2 {
            c2 = c2 + dc;
        }

        if 2 * w > 3 * h && 2 * w > 3 * d {
            // wide: split along a only
            self.fill(p, a2, b, c);
            self.fill(p + a2, a - a2, b, c);
        } else if 3 * h > 4 * d {
            // keep c whole
            self.fill(p, b2, c, a2);
            self.fill(p + b2, a, b - b2, c);
            self.fill(p + (a - da) + (b2 - db), -b2, c, -(a - a2));
        } else if 3 * d > 4 * h {
            // keep b whole
            self.fill(p, c2, a2, b);
            self.fill(p + c2, a, b, c - c2);
            self.fill(p + (a - da) + (c2 - dc), -c2, -(a - a2), b);
        } else {
            self.fill(p, b2, c2, a2);
            self.fill(p + b2, c, a2, b - b2);
            self.fill(p + (b2 - db) + (c - dc), a, -b2, -(c - c2));
            self.fill(p + (a - da) + b2 + (c - dc), -c, -(a - a2), b - b2);
            self.fill(p + (a - da) + (b2 - db), -b2, c2, -(a - a2));
        }
    }
}

fn hilbert_points(dims: GridDims) -> Vec<CurvePoint> {
    let (w, h, d) = (dims.width() as i64, dims.height() as i64, dims.depth() as i64);
    let (ax, ay, az) = (V3::new(w, 0, 0), V3::new(0, h, 0), V3::new(0, 0, d));
    let origin = V3::new(0, 0, 0);
    let mut walker = Walker {
        out: Vec::with_capacity(dims.cell_count()),
    };
    // the longest side becomes the major axis
    if w >= h && w >= d {
        walker.fill(origin, ax, ay, az);
    } else if h >= w && h >= d {
        walker.fill(origin, ay, ax, az);
    } else {
        walker.fill(origin, az, ax, ay);
    }
    walker.out
}

/// Generalized Hilbert traversal starting at `(0, 0, 0)`.
pub fn generate_hilbert(dims: GridDims) -> Result<CurvePath> {
    let dims = GridDims::new(dims.width(), dims.height(), dims.depth())?;
    Ok(CurvePath::new_unchecked(
        dims,
        CurveKind::Hilbert,
        hilbert_points(dims),
    ))
}

/// Hilbert traversal of the x/y-transposed grid, mapped back onto `dims`.
pub fn generate_trans_hilbert(dims: GridDims) -> Result<CurvePath> {
    let dims = GridDims::new(dims.width(), dims.height(), dims.depth())?;
    let points = hilbert_points(dims.transposed())
        .into_iter()
        .map(|p| CurvePoint::new(p.y, p.x, p.z))
        .collect();
    Ok(CurvePath::new_unchecked(dims, CurveKind::TransHilbert, points))
}
