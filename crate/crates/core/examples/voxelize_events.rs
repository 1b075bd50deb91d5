//! Parses an event file, groups it by frame timestamps and prints the
//! per-bin mass of each voxel grid.
//!
//!     cargo run --example voxelize_events -- crates/core/tests/data/events_small.txt

use evscan::events::{group_events, read_events, voxelize, DEFAULT_BINS};

fn main() -> evscan::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/events_small.txt").into());
    let parsed = read_events(&path)?;
    let (w, h) = parsed.sensor.unwrap_or((8, 6));
    println!("{} events on a {w}x{h} sensor from {path}", parsed.events.len());
    if !parsed.is_monotonic() {
        println!("timestamps decrease at lines {:?}", parsed.nonmonotonic_lines);
    }

    let frames = [0.0, 0.1, 0.2, 0.3, 0.4];
    let grouping = group_events(&parsed.events, &frames)?;
    println!("dropped: {} before, {} after", grouping.dropped_before, grouping.dropped_after);
    for (k, group) in grouping.groups.iter().enumerate() {
        let grid = voxelize(group, DEFAULT_BINS, h as usize, w as usize)?;
        let per_bin: Vec<String> = (0..grid.bins())
            .map(|b| {
                let m: f64 = (0..grid.height())
                    .flat_map(|y| (0..grid.width()).map(move |x| (y, x)))
                    .map(|(y, x)| grid.get(b, y, x))
                    .sum();
                format!("{m:+.3}")
            })
            .collect();
        let polarity: f64 = group.events().iter().map(|e| e.p.sign()).sum();
        println!(
            "group {k} [{:.1}, {:.1}): {:>2} events, Σp = {polarity:+}, bins [{}]",
            group.window_start(),
            group.window_end(),
            group.len(),
            per_bin.join(" ")
        );
    }
    Ok(())
}
