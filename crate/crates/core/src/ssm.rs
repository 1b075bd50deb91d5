//! Linear state-space sequence model: zero-order-hold discretization, the
//! sequential recurrence, and the equivalent causal convolution.
//!
//! Diagonal state matrices are the fast path. Dense matrices are supported
//! through a matrix exponential and mainly serve as a cross-check.
//!
//! The recurrence starts from `h_0 = 0`:
//!
//! ```text
//! h_t = Ā h_{t-1} + B̄ x_t,    y_t = C h_t
//! ```
//!
//! and is inherently sequential in `t`. The convolution form
//! `y = x * K̄` with `K̄_j = C Ā^j B̄` trades that dependency for an
//! `O(M^2)` (or FFT) kernel application, but only applies when the
//! parameters do not vary over time.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Below this `|Δa|` the ZOH input gain uses its Taylor series.
pub const SMALL_ARGUMENT: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq)]
pub enum StateMatrix {
    Diagonal(Vec<f64>),
    Dense(DMatrix<f64>),
}

impl StateMatrix {
    pub fn dim(&self) -> usize {
        match self {
            StateMatrix::Diagonal(d) => d.len(),
            StateMatrix::Dense(m) => m.nrows(),
        }
    }

    fn apply(&self, h: &[f64], out: &mut [f64]) {
        match self {
            StateMatrix::Diagonal(d) => {
                for ((o, &a), &x) in out.iter_mut().zip(d).zip(h) {
                    *o = a * x;
                }
            }
            StateMatrix::Dense(m) => {
                let n = m.nrows();
                for (i, o) in out.iter_mut().enumerate() {
                    let mut acc = 0.0;
                    for j in 0..n {
                        acc += m[(i, j)] * h[j];
                    }
                    *o = acc;
                }
            }
        }
    }

    fn is_finite(&self) -> bool {
        match self {
            StateMatrix::Diagonal(d) => d.iter().all(|v| v.is_finite()),
            StateMatrix::Dense(m) => m.iter().all(|v| v.is_finite()),
        }
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        match self {
            StateMatrix::Diagonal(d) => DMatrix::from_diagonal(&DVector::from_column_slice(d)),
            StateMatrix::Dense(m) => m.clone(),
        }
    }
}

/// Continuous-time parameters `(A, B, C, Δ)` of a single-input,
/// single-output SSM.
#[derive(Debug, Clone, PartialEq)]
pub struct SsmParams {
    a: StateMatrix,
    b: Vec<f64>,
    c: Vec<f64>,
    delta: f64,
}

impl SsmParams {
    pub fn new(a: StateMatrix, b: Vec<f64>, c: Vec<f64>, delta: f64) -> Result<Self> {
        let n = a.dim();
        if n == 0 {
            return Err(Error::InvalidArgument("state dimension must be at least 1".into()));
        }
        if let StateMatrix::Dense(m) = &a {
            if !m.is_square() {
                return Err(Error::mismatch("square A", format!("{}x{}", m.nrows(), m.ncols())));
            }
        }
        if b.len() != n || c.len() != n {
            return Err(Error::mismatch(
                format!("B and C of length {n}"),
                format!("B of length {}, C of length {}", b.len(), c.len()),
            ));
        }
        if delta.is_nan() || delta <= 0.0 {
            return Err(Error::InvalidArgument(format!("time scale Δ = {delta} must be positive")));
        }
        Ok(Self { a, b, c, delta })
    }

    pub fn diagonal(a: Vec<f64>, b: Vec<f64>, c: Vec<f64>, delta: f64) -> Result<Self> {
        Self::new(StateMatrix::Diagonal(a), b, c, delta)
    }

    pub fn dense(a: DMatrix<f64>, b: Vec<f64>, c: Vec<f64>, delta: f64) -> Result<Self> {
        Self::new(StateMatrix::Dense(a), b, c, delta)
    }

    pub fn state_dim(&self) -> usize {
        self.a.dim()
    }

    pub fn a(&self) -> &StateMatrix {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn c(&self) -> &[f64] {
        &self.c
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }
}

/// Discrete parameters `(Ā, B̄, C)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteSsm {
    a_bar: StateMatrix,
    b_bar: Vec<f64>,
    c: Vec<f64>,
}

impl DiscreteSsm {
    /// Builds discrete parameters directly, bypassing discretization.
    pub fn new(a_bar: StateMatrix, b_bar: Vec<f64>, c: Vec<f64>) -> Result<Self> {
        let n = a_bar.dim();
        if n == 0 || b_bar.len() != n || c.len() != n {
            return Err(Error::mismatch(
                format!("B̄ and C of length {n} (n >= 1)"),
                format!("B̄ of length {}, C of length {}", b_bar.len(), c.len()),
            ));
        }
        Ok(Self { a_bar, b_bar, c })
    }

    pub fn a_bar(&self) -> &StateMatrix {
        &self.a_bar
    }

    pub fn b_bar(&self) -> &[f64] {
        &self.b_bar
    }

    pub fn c(&self) -> &[f64] {
        &self.c
    }

    pub fn state_dim(&self) -> usize {
        self.a_bar.dim()
    }
}

/// `(e^x - 1) / x`, continuous at 0.
pub fn expm1_over_x(x: f64) -> f64 {
    if x.abs() < SMALL_ARGUMENT {
        1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0
    } else {
        x.exp_m1() / x
    }
}

/// Matrix exponential by scaling and squaring with a degree-18 Taylor
/// polynomial on the scaled matrix (norm at most 1/2).
pub fn expm(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows();
    let norm = m
        .column_iter()
        .map(|col| col.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = m / 2f64.powi(squarings);
    let mut result = DMatrix::identity(n, n);
    let mut term = DMatrix::identity(n, n);
    for k in 1..=18 {
        term = &term * &scaled / k as f64;
        result += &term;
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

/// Zero-order hold: `Ā = exp(ΔA)`, `B̄ = (ΔA)^{-1} (exp(ΔA) - I) ΔB`.
pub fn discretize(params: &SsmParams) -> Result<DiscreteSsm> {
    let delta = params.delta;
    if !delta.is_finite()
        || !params.a.is_finite()
        || !params.b.iter().chain(&params.c).all(|v| v.is_finite())
    {
        return Err(Error::NonFinite("SSM parameters"));
    }
    let (a_bar, b_bar) = match &params.a {
        StateMatrix::Diagonal(a) => {
            let a_bar = a.iter().map(|&ai| (delta * ai).exp()).collect();
            let b_bar = a
                .iter()
                .zip(&params.b)
                .map(|(&ai, &bi)| expm1_over_x(delta * ai) * delta * bi)
                .collect();
            (StateMatrix::Diagonal(a_bar), b_bar)
        }
        StateMatrix::Dense(a) => {
            // exp([[ΔA, ΔB], [0, 0]]) = [[Ā, B̄], [0, 1]], defined for singular A
            let n = a.nrows();
            let mut aug = DMatrix::zeros(n + 1, n + 1);
            aug.view_mut((0, 0), (n, n)).copy_from(&(a * delta));
            for i in 0..n {
                aug[(i, n)] = delta * params.b[i];
            }
            let e = expm(&aug);
            let a_bar = e.view((0, 0), (n, n)).into_owned();
            let b_bar = (0..n).map(|i| e[(i, n)]).collect();
            (StateMatrix::Dense(a_bar), b_bar)
        }
    };
    let out = DiscreteSsm {
        a_bar,
        b_bar,
        c: params.c.clone(),
    };
    if !out.a_bar.is_finite() || !out.b_bar.iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite("discretized SSM"));
    }
    Ok(out)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Runs the recurrence from `h_0 = 0`.
pub fn scan_recurrent(ssm: &DiscreteSsm, x: &[f64]) -> Result<Vec<f64>> {
    if x.is_empty() {
        return Err(Error::InvalidArgument("input sequence is empty".into()));
    }
    let n = ssm.state_dim();
    let mut h = vec![0.0; n];
    let mut next = vec![0.0; n];
    let mut y = Vec::with_capacity(x.len());
    for &xt in x {
        ssm.a_bar.apply(&h, &mut next);
        for (hn, &b) in next.iter_mut().zip(&ssm.b_bar) {
            *hn += b * xt;
        }
        std::mem::swap(&mut h, &mut next);
        y.push(dot(&ssm.c, &h));
    }
    Ok(y)
}

/// `K̄ = (C B̄, C Ā B̄, ..., C Ā^{M-1} B̄)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanKernel(Vec<f64>);

impl ScanKernel {
    pub fn taps(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn build_kernel(ssm: &DiscreteSsm, len: usize) -> Result<ScanKernel> {
    if len == 0 {
        return Err(Error::InvalidArgument("kernel length must be at least 1".into()));
    }
    let mut v = ssm.b_bar.clone();
    let mut next = vec![0.0; v.len()];
    let mut taps = Vec::with_capacity(len);
    for j in 0..len {
        taps.push(dot(&ssm.c, &v));
        if j + 1 < len {
            ssm.a_bar.apply(&v, &mut next);
            std::mem::swap(&mut v, &mut next);
        }
    }
    Ok(ScanKernel(taps))
}

/// Causal convolution `y_t = Σ_{j<=t} K̄_j x_{t-j}`.
pub fn scan_convolutional(kernel: &ScanKernel, x: &[f64]) -> Result<Vec<f64>> {
    if x.is_empty() {
        return Err(Error::InvalidArgument("input sequence is empty".into()));
    }
    if kernel.len() != x.len() {
        return Err(Error::mismatch(
            format!("input of length {}", kernel.len()),
            format!("length {}", x.len()),
        ));
    }
    let k = kernel.taps();
    Ok((0..x.len())
        .map(|t| (0..=t).map(|j| k[j] * x[t - j]).sum())
        .collect())
}

/// Time-varying scan: each step discretizes its own parameters.
pub fn selective_scan(per_step: &[SsmParams], x: &[f64]) -> Result<Vec<f64>> {
    if x.is_empty() {
        return Err(Error::InvalidArgument("input sequence is empty".into()));
    }
    if per_step.len() != x.len() {
        return Err(Error::mismatch(
            format!("{} parameter sets", x.len()),
            per_step.len(),
        ));
    }
    let n = per_step[0].state_dim();
    if let Some(bad) = per_step.iter().find(|p| p.state_dim() != n) {
        return Err(Error::mismatch(format!("state dimension {n}"), bad.state_dim()));
    }
    let mut h = vec![0.0; n];
    let mut next = vec![0.0; n];
    let mut y = Vec::with_capacity(x.len());
    for (params, &xt) in per_step.iter().zip(x) {
        let d = discretize(params)?;
        d.a_bar.apply(&h, &mut next);
        for (hn, &b) in next.iter_mut().zip(&d.b_bar) {
            *hn += b * xt;
        }
        std::mem::swap(&mut h, &mut next);
        y.push(dot(&d.c, &h));
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar(a: f64, b: f64, c: f64, delta: f64) -> SsmParams {
        SsmParams::diagonal(vec![a], vec![b], vec![c], delta).unwrap()
    }

    fn diag(d: &DiscreteSsm) -> (&[f64], &[f64]) {
        match d.a_bar() {
            StateMatrix::Diagonal(a) => (a, d.b_bar()),
            StateMatrix::Dense(_) => panic!("expected diagonal"),
        }
    }

    #[test]
    fn scalar_ln2() {
        let d = discretize(&scalar(std::f64::consts::LN_2, 1.0, 1.0, 1.0)).unwrap();
        let (a, b) = diag(&d);
        assert!((a[0] - 2.0).abs() < 1e-15);
        assert!((b[0] - 1.0 / std::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn zero_a_uses_limit() {
        let d = discretize(&scalar(0.0, 3.0, 1.0, 0.5)).unwrap();
        let (a, b) = diag(&d);
        assert_eq!(a[0], 1.0);
        assert_eq!(b[0], 1.5);
    }

    #[test]
    fn taylor_branch_is_continuous() {
        for x in [1e-4f64 - 1e-12, 1e-4 + 1e-12, -1e-4 + 1e-12, -1e-4 - 1e-12] {
            let direct = x.exp_m1() / x;
            assert!((expm1_over_x(x) - direct).abs() < 1e-15, "{x}");
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(SsmParams::diagonal(vec![1.0], vec![1.0], vec![1.0], 0.0).is_err());
        assert!(SsmParams::diagonal(vec![1.0], vec![1.0, 2.0], vec![1.0], 1.0).is_err());
        assert!(SsmParams::diagonal(vec![], vec![], vec![], 1.0).is_err());
        let nan = SsmParams::diagonal(vec![f64::NAN], vec![1.0], vec![1.0], 1.0).unwrap();
        assert!(matches!(discretize(&nan), Err(Error::NonFinite(_))));
        let inf = SsmParams::diagonal(vec![1.0], vec![1.0], vec![1.0], f64::INFINITY);
        assert!(inf.is_err() || discretize(&inf.unwrap()).is_err());
    }

    #[test]
    fn kernel_geometric() {
        let d = DiscreteSsm::new(StateMatrix::Diagonal(vec![0.5]), vec![1.0], vec![1.0]).unwrap();
        assert_eq!(build_kernel(&d, 3).unwrap().taps(), &[1.0, 0.5, 0.25]);
        assert!(build_kernel(&d, 0).is_err());
    }

    #[test]
    fn impulse_gives_kernel() {
        let d = DiscreteSsm::new(StateMatrix::Diagonal(vec![0.7]), vec![0.3], vec![2.0]).unwrap();
        let mut x = vec![0.0; 6];
        x[0] = 1.0;
        let y = scan_recurrent(&d, &x).unwrap();
        let k = build_kernel(&d, 6).unwrap();
        for (a, b) in y.iter().zip(k.taps()) {
            assert!((a - b).abs() < 1e-15);
        }
        assert_eq!(scan_convolutional(&k, &x).unwrap(), k.taps());
    }

    #[test]
    fn memoryless_when_a_bar_zero() {
        let d = DiscreteSsm::new(StateMatrix::Diagonal(vec![0.0, 0.0]), vec![1.0, 2.0], vec![0.5, 0.25]).unwrap();
        let x = [1.0, -2.0, 3.5];
        let y = scan_recurrent(&d, &x).unwrap();
        assert_eq!(y, vec![1.0, -2.0, 3.5]);
    }

    #[test]
    fn empty_and_mismatched_inputs() {
        let d = DiscreteSsm::new(StateMatrix::Diagonal(vec![0.5]), vec![1.0], vec![1.0]).unwrap();
        assert!(scan_recurrent(&d, &[]).is_err());
        let k = build_kernel(&d, 3).unwrap();
        assert!(scan_convolutional(&k, &[1.0, 2.0]).is_err());
        assert!(selective_scan(&[], &[1.0]).is_err());
        assert!(selective_scan(&[scalar(-1.0, 1.0, 1.0, 0.1)], &[]).is_err());
    }

    #[test]
    fn selective_single_step() {
        let p = scalar(-0.3, 2.0, 1.5, 0.2);
        let y = selective_scan(std::slice::from_ref(&p), &[4.0]).unwrap();
        let d = discretize(&p).unwrap();
        assert!((y[0] - 1.5 * d.b_bar()[0] * 4.0).abs() < 1e-15);
    }

    #[test]
    fn dense_matches_diagonal() {
        let a = vec![-0.5, 0.0, 0.8, -3.0];
        let b = vec![1.0, -2.0, 0.5, 0.25];
        let c = vec![1.0, 1.0, 1.0, 1.0];
        let diag_p = SsmParams::diagonal(a.clone(), b.clone(), c.clone(), 0.7).unwrap();
        let dense_p = SsmParams::dense(DMatrix::from_diagonal(&DVector::from_vec(a)), b, c, 0.7).unwrap();
        let d1 = discretize(&diag_p).unwrap();
        let d2 = discretize(&dense_p).unwrap();
        let dense_a = d2.a_bar().to_dense();
        let diag_a = d1.a_bar().to_dense();
        assert!((dense_a - diag_a).abs().max() < 1e-13);
        for (x, y) in d1.b_bar().iter().zip(d2.b_bar()) {
            assert!((x - y).abs() < 1e-13);
        }
    }

    #[test]
    fn expm_of_rotation_generator() {
        let theta = 1.3;
        let m = DMatrix::from_row_slice(2, 2, &[0.0, -theta, theta, 0.0]);
        let e = expm(&m);
        let expected = DMatrix::from_row_slice(2, 2, &[theta.cos(), -theta.sin(), theta.sin(), theta.cos()]);
        assert!((e - expected).abs().max() < 1e-14);
    }
}
