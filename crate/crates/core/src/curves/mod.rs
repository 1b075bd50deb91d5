//! Space-filling-curve traversal orders over 2D and 3D grids.
//!
//! Every generator returns a [`CurvePath`]: an explicit list of cells that
//! visits each cell of the grid exactly once. 2D grids are 3D grids with
//! `depth == 1`.
//!
//! | kind            | supported sizes                  | unit steps                 |
//! |-----------------|----------------------------------|----------------------------|
//! | `Hilbert`       | any                              | power-of-two cubes/squares |
//! | `TransHilbert`  | any                              | power-of-two cubes/squares |
//! | `ZOrder`        | every side a power of two        | no                         |
//! | `Peano`         | every side a power of three      | always                     |
//! | `Reshape`       | any                              | no                         |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

mod export;
mod hilbert;
mod peano;
mod serialize;
mod zorder;

pub use export::{read_text, write_binary, write_text};
pub use hilbert::{generate_hilbert, generate_trans_hilbert};
pub use peano::generate_peano;
pub use serialize::{deserialize, serialize, FlatSequence};
pub use zorder::generate_zorder;

/// Grid extent in cells. Planar grids have `depth == 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridDims {
    width: usize,
    height: usize,
    depth: usize,
}

impl GridDims {
    pub fn new(width: usize, height: usize, depth: usize) -> Result<Self> {
        if width == 0 || height == 0 || depth == 0 {
            return Err(Error::InvalidDims(format!(
                "{width}x{height}x{depth}: every side must be at least 1"
            )));
        }
        width
            .checked_mul(height)
            .and_then(|n| n.checked_mul(depth))
            .ok_or_else(|| Error::InvalidDims(format!("{width}x{height}x{depth} overflows")))?;
        Ok(Self {
            width,
            height,
            depth,
        })
    }

    pub fn planar(width: usize, height: usize) -> Result<Self> {
        Self::new(width, height, 1)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn cell_count(&self) -> usize {
        self.width * self.height * self.depth
    }

    pub fn is_planar(&self) -> bool {
        self.depth == 1
    }

    /// 2 for planar grids, 3 otherwise.
    pub fn dimensionality(&self) -> usize {
        if self.is_planar() {
            2
        } else {
            3
        }
    }

    pub fn sides(&self) -> [usize; 3] {
        [self.width, self.height, self.depth]
    }

    /// Row-major linear index: x fastest, then y, then z.
    #[inline]
    pub fn linear_index(&self, p: CurvePoint) -> usize {
        p.x + self.width * (p.y + self.height * p.z)
    }

    #[inline]
    pub fn point_at(&self, index: usize) -> CurvePoint {
        let x = index % self.width;
        let rest = index / self.width;
        CurvePoint::new(x, rest % self.height, rest / self.height)
    }

    pub fn contains(&self, p: CurvePoint) -> bool {
        p.x < self.width && p.y < self.height && p.z < self.depth
    }

    /// Same grid with the first two axes exchanged.
    pub fn transposed(&self) -> Self {
        Self {
            width: self.height,
            height: self.width,
            depth: self.depth,
        }
    }
}

impl fmt::Display for GridDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_planar() {
            write!(f, "{}x{}", self.width, self.height)
        } else {
            write!(f, "{}x{}x{}", self.width, self.height, self.depth)
        }
    }
}

impl FromStr for GridDims {
    type Err = Error;

    /// Parses `WxH` or `WxHxD`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(['x', 'X'])
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidDims(format!("cannot parse {s:?}, expected WxH or WxHxD")))?;
        match parts.as_slice() {
            [w, h] => Self::new(*w, *h, 1),
            [w, h, d] => Self::new(*w, *h, *d),
            _ => Err(Error::InvalidDims(format!(
                "cannot parse {s:?}, expected WxH or WxHxD"
            ))),
        }
    }
}

/// One grid cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurvePoint {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl CurvePoint {
    pub const fn new(x: usize, y: usize, z: usize) -> Self {
        Self { x, y, z }
    }

    pub fn coords(&self) -> [usize; 3] {
        [self.x, self.y, self.z]
    }

    pub fn l1_distance(&self, other: &CurvePoint) -> usize {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y) + self.z.abs_diff(other.z)
    }

    pub fn squared_distance(&self, other: &CurvePoint) -> usize {
        let dx = self.x.abs_diff(other.x);
        let dy = self.y.abs_diff(other.y);
        let dz = self.z.abs_diff(other.z);
        dx * dx + dy * dy + dz * dz
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveKind {
    Hilbert,
    TransHilbert,
    ZOrder,
    Peano,
    Reshape,
}

impl CurveKind {
    pub const ALL: [CurveKind; 5] = [
        CurveKind::Hilbert,
        CurveKind::TransHilbert,
        CurveKind::ZOrder,
        CurveKind::Peano,
        CurveKind::Reshape,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CurveKind::Hilbert => "hilbert",
            CurveKind::TransHilbert => "trans-hilbert",
            CurveKind::ZOrder => "zorder",
            CurveKind::Peano => "peano",
            CurveKind::Reshape => "reshape",
        }
    }

    /// Whether `dims` is a size this kind can generate.
    pub fn supports(&self, dims: GridDims) -> bool {
        match self {
            CurveKind::ZOrder => dims.sides().iter().all(|s| s.is_power_of_two()),
            CurveKind::Peano => dims.sides().iter().all(|&s| is_power_of_three(s)),
            _ => true,
        }
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for CurveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "hilbert" => Ok(CurveKind::Hilbert),
            "trans-hilbert" | "transhilbert" | "trans_hilbert" => Ok(CurveKind::TransHilbert),
            "zorder" | "z-order" | "morton" => Ok(CurveKind::ZOrder),
            "peano" => Ok(CurveKind::Peano),
            "reshape" | "row-major" => Ok(CurveKind::Reshape),
            other => Err(Error::InvalidArgument(format!("unknown curve kind {other:?}"))),
        }
    }
}

pub(crate) fn is_power_of_three(mut n: usize) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(3) {
        n /= 3;
    }
    n == 1
}

/// Ordered traversal of every cell of a grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePath {
    dims: GridDims,
    kind: CurveKind,
    points: Vec<CurvePoint>,
}

impl CurvePath {
    /// Wraps an externally produced point list, checking that it is a
    /// bijection onto `dims`.
    pub fn from_points(dims: GridDims, kind: CurveKind, points: Vec<CurvePoint>) -> Result<Self> {
        let path = Self { dims, kind, points };
        if !path.is_bijective() {
            return Err(Error::InvalidArgument(format!(
                "point list does not visit every cell of {dims} exactly once"
            )));
        }
        Ok(path)
    }

    pub(crate) fn new_unchecked(dims: GridDims, kind: CurveKind, points: Vec<CurvePoint>) -> Self {
        debug_assert_eq!(points.len(), dims.cell_count());
        Self { dims, kind, points }
    }

    pub fn dims(&self) -> GridDims {
        self.dims
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Row-major linear index of each point, in path order.
    pub fn linear_indices(&self) -> Vec<usize> {
        self.points.iter().map(|&p| self.dims.linear_index(p)).collect()
    }

    /// Inverse permutation: `ranks()[linear_index] == position in path`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0; self.points.len()];
        for (pos, &p) in self.points.iter().enumerate() {
            ranks[self.dims.linear_index(p)] = pos;
        }
        ranks
    }

    pub fn is_bijective(&self) -> bool {
        if self.points.len() != self.dims.cell_count() {
            return false;
        }
        let mut seen = vec![false; self.points.len()];
        for &p in &self.points {
            if !self.dims.contains(p) {
                return false;
            }
            let i = self.dims.linear_index(p);
            if std::mem::replace(&mut seen[i], true) {
                return false;
            }
        }
        true
    }

    /// Largest L1 distance between consecutive points (0 for single cells).
    pub fn max_step(&self) -> usize {
        self.points
            .windows(2)
            .map(|w| w[0].l1_distance(&w[1]))
            .max()
            .unwrap_or(0)
    }
}

/// Generates a path of the requested kind.
pub fn generate(kind: CurveKind, dims: GridDims) -> Result<CurvePath> {
    match kind {
        CurveKind::Hilbert => generate_hilbert(dims),
        CurveKind::TransHilbert => generate_trans_hilbert(dims),
        CurveKind::ZOrder => generate_zorder(dims),
        CurveKind::Peano => generate_peano(dims),
        CurveKind::Reshape => Ok(generate_reshape(dims)),
    }
}

/// Row-major order: z outermost, then y, x innermost.
pub fn generate_reshape(dims: GridDims) -> CurvePath {
    let points = (0..dims.cell_count()).map(|i| dims.point_at(i)).collect();
    CurvePath::new_unchecked(dims, CurveKind::Reshape, points)
}
