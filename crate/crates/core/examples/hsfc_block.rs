//! The dual Hilbert / trans-Hilbert scan block on an impulse, globally and
//! with random window offsets.

use evscan::ssm::SsmParams;
use evscan::{run_hsfc_block, FeatureVolume, GridDims, ScanBlockConfig};

fn show(vol: &FeatureVolume) {
    for y in 0..vol.height() {
        let row: Vec<String> = (0..vol.width()).map(|x| format!("{:6.3}", vol.get(0, y, x))).collect();
        println!("  {}", row.join(" "));
    }
}

fn main() -> evscan::Result<()> {
    let mut vol = FeatureVolume::zeros(1, 8, 8)?;
    vol.set(0, 3, 2, 1.0);
    let ssm = SsmParams::diagonal(vec![-2.0], vec![4.0], vec![1.0], 0.5)?;
    let dims = GridDims::planar(8, 8)?;

    println!("global dual scan:");
    show(&run_hsfc_block(&ScanBlockConfig::new(dims, ssm.clone()), &vol)?);

    println!("4x4 windows, 8 random offsets:");
    show(&run_hsfc_block(&ScanBlockConfig::new(dims, ssm).windowed(4, 8, 1), &vol)?);
    Ok(())
}
