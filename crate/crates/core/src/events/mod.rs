//! Event streams: text parsing, grouping by frame timestamps, voxel grids
//! and the `EVXGRID1` container.

mod format;
mod group;
mod parse;
mod voxel;

pub use format::{read_evx, write_csv, write_evx, EVX_MAGIC};
pub use group::{group_events, EventGroup, Grouping};
pub use parse::{parse_events, read_events, ParsedEvents};
pub use voxel::{voxelize, VoxelGrid, DEFAULT_BINS};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Negative,
    Positive,
}

impl Polarity {
    pub fn sign(&self) -> f64 {
        match self {
            Polarity::Negative => -1.0,
            Polarity::Positive => 1.0,
        }
    }

    pub fn flipped(&self) -> Polarity {
        match self {
            Polarity::Negative => Polarity::Positive,
            Polarity::Positive => Polarity::Negative,
        }
    }
}

/// One brightness change at pixel `(x, y)` and time `t` (seconds).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Event {
    pub x: u32,
    pub y: u32,
    pub t: f64,
    pub p: Polarity,
}

impl Event {
    pub fn new(x: u32, y: u32, t: f64, p: Polarity) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::NonFinite("event timestamp"));
        }
        Ok(Self { x, y, t, p })
    }
}
