//! Random window offset (RWO) partitioning.
//!
//! A feature map is cyclically shifted by a random offset `(dh, dw)` drawn
//! uniformly from `{0..s-1}^2` and then tiled into non-overlapping `s x s`
//! windows. [`build_mask`] labels the regions that the cyclic shift glues
//! together, and [`mc_average`] averages any offset-dependent pipeline over
//! sampled offsets (or over all of them with [`full_enumeration`]).

mod mask;
mod mc;
mod offset;
mod partition;

pub use crate::volume::FeatureVolume;
pub use mask::{build_mask, build_random_mask, OffsetMask};
pub use mc::{
    draw_offsets, full_enumeration, mc_average, McConfig, Sampling, WindowMeanPool,
    WindowedPipeline,
};
pub use offset::{sample_offset, OffsetStream, WindowOffset};
pub use partition::{partition, reassemble, WindowSet};
