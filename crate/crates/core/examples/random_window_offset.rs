//! Draws window offsets, prints the region mask and shows that
//! partition/reassemble is lossless.

use evscan::windowing::{build_mask, partition, reassemble, OffsetStream};
use evscan::FeatureVolume;

fn main() -> evscan::Result<()> {
    let (h, w, s) = (8, 12, 4);
    let vol = FeatureVolume::from_fn(1, h, w, |_, y, x| (y * w + x) as f64)?;
    for offset in OffsetStream::new(2024, 0, s)?.take(3) {
        let mask = build_mask(h, w, offset)?;
        println!("offset (dh={}, dw={}): {} regions", offset.dh(), offset.dw(), mask.region_count());
        print!("{}", mask.to_text());
        let windows = partition(&vol, offset)?;
        println!("first window: {:?}", windows.windows()[0].values());
        assert_eq!(reassemble(&windows)?, vol);
        println!();
    }
    Ok(())
}
