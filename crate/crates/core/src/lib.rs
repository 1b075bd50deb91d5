//! Serialization, locality analysis, windowing and state-space scan
//! machinery for event-based video reconstruction.
//!
//! * [`curves`] — Hilbert, trans-Hilbert, Z-order, Peano and reshape
//!   traversals of 2D/3D grids, plus volume (de)serialization along them.
//! * [`locality`] — jump/still proportions and the segment-to-line ratio.
//! * [`ssm`] — zero-order-hold discretization and equivalent recurrent /
//!   convolutional scans.
//! * [`windowing`] — random window offsets, offset masks, window
//!   partitioning and Monte-Carlo averaging over offsets.
//! * [`events`] — event text parsing, grouping, voxel grids and the
//!   `EVXGRID1` container.
//! * [`block`] — the dual-curve scan block tying the above together.
//! * [`cli`] — the `evscan` command line.

pub mod block;
pub mod cli;
pub mod curves;
mod error;
pub mod events;
pub mod locality;
pub mod ssm;
mod volume;
pub mod windowing;

pub use block::{run_hsfc_block, ScanBlockConfig, ScanSsm};
pub use curves::{generate, CurveKind, CurvePath, CurvePoint, GridDims};
pub use error::{Error, ErrorClass, Result};
pub use volume::FeatureVolume;
