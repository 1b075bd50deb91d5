//! Generates every curve kind on a small grid and prints its path, step
//! sizes and whether it is a bijection.
//!
//!     cargo run --example curves_tour -- 8x8

use evscan::{generate, CurveKind, GridDims};

fn main() -> evscan::Result<()> {
    let dims: GridDims = std::env::args().nth(1).as_deref().unwrap_or("4x4").parse()?;
    println!("grid {dims} ({} cells)", dims.cell_count());
    for kind in CurveKind::ALL {
        if !kind.supports(dims) {
            println!("{kind:>14}: unsupported size");
            continue;
        }
        let path = generate(kind, dims)?;
        let head: Vec<String> = path.points().iter().take(8).map(|p| format!("({},{},{})", p.x, p.y, p.z)).collect();
        println!(
            "{kind:>14}: bijective={} max_step={} start {}{}",
            path.is_bijective(),
            path.max_step(),
            head.join(" "),
            if path.len() > 8 { " ..." } else { "" }
        );
    }
    Ok(())
}
