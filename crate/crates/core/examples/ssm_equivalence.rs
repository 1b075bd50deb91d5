//! Discretizes a diagonal SSM and checks that the recurrent scan and the
//! convolution with the unrolled kernel agree.

use evscan::ssm::{build_kernel, discretize, scan_convolutional, scan_recurrent, SsmParams};

fn main() -> evscan::Result<()> {
    let params = SsmParams::diagonal(vec![-0.5, -1.0, -4.0], vec![1.0, 0.5, -0.25], vec![0.3, -1.0, 2.0], 0.1)?;
    let ssm = discretize(&params)?;
    println!("state dim {}, B̄ = {:?}", ssm.state_dim(), ssm.b_bar());

    let len = 48;
    let x: Vec<f64> = (0..len).map(|t| (t as f64 * 0.3).sin() + if t == 10 { 2.0 } else { 0.0 }).collect();
    let recurrent = scan_recurrent(&ssm, &x)?;
    let kernel = build_kernel(&ssm, len)?;
    let convolved = scan_convolutional(&kernel, &x)?;

    let worst = recurrent.iter().zip(&convolved).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    println!("first kernel taps: {:?}", &kernel.taps()[..5]);
    println!("max |recurrent - convolutional| = {worst:.3e}");
    for t in (0..len).step_by(8) {
        println!("t={t:>2}  x={:>8.4}  y={:>9.5}", x[t], recurrent[t]);
    }
    Ok(())
}
