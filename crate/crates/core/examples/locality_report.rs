//! Jump/still proportions against their closed forms, plus the exhaustive
//! space-to-linear ratio of Hilbert and row-major scans.

use evscan::curves::{generate_hilbert, generate_reshape};
use evscan::locality::{closed_form_stats, empirical_slr, segment_stats};
use evscan::{CurveKind, GridDims};

fn main() -> evscan::Result<()> {
    println!("{:<8} {:>3} {:>2} {:>12} {:>12} {:>12} {:>12}", "kind", "N", "D", "J", "J closed", "S", "S closed");
    for d in [2u32, 3] {
        for n in [2usize, 4, 8, 16] {
            let dims = GridDims::new(n, n, if d == 3 { n } else { 1 })?;
            for (kind, path) in [
                (CurveKind::Reshape, generate_reshape(dims)),
                (CurveKind::Hilbert, generate_hilbert(dims)?),
            ] {
                let s = segment_stats(&path)?;
                let (j, st) = closed_form_stats(n as u64, d, kind)?;
                println!(
                    "{:<8} {n:>3} {d:>2} {:>12} {:>12} {:>12} {:>12}",
                    kind.name(),
                    s.jump_ratio.to_string(),
                    j.to_string(),
                    s.still_ratio.to_string(),
                    st.to_string()
                );
            }
        }
    }

    println!("\norder  hilbert SLR  reshape SLR  4^n-2^(n+1)+2");
    for n in 1..=6u32 {
        let dims = GridDims::planar(1 << n, 1 << n)?;
        let h = empirical_slr(&generate_hilbert(dims)?, u64::MAX)?;
        let r = empirical_slr(&generate_reshape(dims), u64::MAX)?;
        println!("{n:>5}  {:>11.4}  {:>11}  {:>13}", h.max_ratio, r.max_ratio, 4u64.pow(n) - 2u64.pow(n + 1) + 2);
    }
    Ok(())
}
