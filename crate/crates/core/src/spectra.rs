//! Sequence generators and sparseness classifiers: pairwise lacunarity,
//! counting function, log² density, octave sparseness products, and the
//! interval witness for clustered points.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{cpairs, KahanSum, SignedLog, UNDERFLOW_FLOOR_LOG};

/// Ratio floor making the log² density verdict "divergent": the last-window
/// maximum of n_T(r)/ln²r must exceed this while window maxima are
/// nondecreasing. Calibrated so that n_T ≈ ln³r families pass at desk radii
/// while n_T = O(ln r) and n_T ≈ ln²r families fail.
pub const LOG2_DENSITY_DIVERGENCE_THRESHOLD: f64 = 2.0;

/// Finite ordered window of nonzero scalars sorted by increasing modulus.
///
/// Holds either the eigenvalues of a compact diagonal operator or their
/// inverses; all classifiers here are invariant under that choice.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumSequence {
    #[serde(with = "cpairs")]
    values: Vec<Complex64>,
    is_real: bool,
    origin: String,
}

impl SpectrumSequence {
    /// Sorts by modulus (ties by real then imaginary part) and validates:
    /// values nonzero and pairwise distinct.
    pub fn new(mut values: Vec<Complex64>, origin: impl Into<String>) -> Result<Self> {
        let origin = origin.into();
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        values.sort_by(|a, b| {
            a.norm()
                .total_cmp(&b.norm())
                .then(a.re.total_cmp(&b.re))
                .then(a.im.total_cmp(&b.im))
        });
        for (i, v) in values.iter().enumerate() {
            if v.norm() == 0.0 {
                return Err(Error::ZeroValue { index: i });
            }
        }
        for i in 1..values.len() {
            if values[i] == values[i - 1] {
                return Err(Error::DuplicateValue { first: i - 1, second: i });
            }
        }
        let is_real = values.iter().all(|v| v.im == 0.0);
        Ok(Self { values, is_real, origin })
    }

    pub fn from_real(values: Vec<f64>, origin: impl Into<String>) -> Result<Self> {
        Self::new(values.into_iter().map(|x| Complex64::new(x, 0.0)).collect(), origin)
    }

    /// `first * ratio^(n-1)` for n = 1..=count.
    pub fn geometric(first: f64, ratio: f64, count: usize) -> Result<Self> {
        let values = (0..count).map(|n| first * ratio.powi(n as i32)).collect();
        Self::from_real(values, format!("geometric r={ratio}"))
    }

    /// `shift + n` for n = 1..=count.
    pub fn integers(shift: f64, count: usize) -> Result<Self> {
        let values = (1..=count).map(|n| shift + n as f64).collect();
        Self::from_real(values, format!("integers shift={shift}"))
    }

    /// `exp(n^power)` for n = 1..=count.
    pub fn stretched_exponential(power: f64, count: usize) -> Result<Self> {
        let values = (1..=count).map(|n| ((n as f64).powf(power)).exp()).collect();
        Self::from_real(values, format!("exp(n^{power})"))
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.is_real
    }

    pub fn origin(&self) -> &str {
        &self.origin
    }

    pub fn modulus(&self, i: usize) -> f64 {
        self.values[i].norm()
    }

    /// Real parts, or an error when any value has an imaginary component.
    pub fn real_values(&self) -> Result<Vec<f64>> {
        if !self.is_real {
            return Err(Error::NonRealSequence { origin: self.origin.clone() });
        }
        Ok(self.values.iter().map(|v| v.re).collect())
    }

    /// Componentwise reciprocals, re-sorted by modulus.
    pub fn reciprocals(&self, origin: impl Into<String>) -> Result<Self> {
        Self::new(self.values.iter().map(|v| v.inv()).collect(), origin)
    }
}

/// Outcome of the pairwise separation scan.
#[derive(Debug, Clone, Serialize)]
pub struct LacunarityReport {
    pub is_lacunary: bool,
    /// Exact minimum over pairs of |tₙ−tₘ| / max(|tₙ|,|tₘ|).
    pub best_epsilon: f64,
    pub witness_pair: Option<(usize, usize)>,
}

/// Exact O(n²) pairwise scan for the separation constant.
///
/// The infinite-sequence property is a yes/no matter; on a finite window we
/// report the exact pairwise ε and threshold it (default 10⁻³ at call sites).
pub fn check_lacunary(seq: &SpectrumSequence, threshold: f64) -> Result<LacunarityReport> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let vs = seq.values();
    if vs.len() == 1 {
        return Ok(LacunarityReport { is_lacunary: true, best_epsilon: f64::INFINITY, witness_pair: None });
    }
    // Parallel over the first index; min-reduction is schedule independent.
    let (best, pair) = (0..vs.len() - 1)
        .into_par_iter()
        .map(|i| {
            let mut local_best = f64::INFINITY;
            let mut local_pair = (0usize, 0usize);
            for j in i + 1..vs.len() {
                let ratio = (vs[i] - vs[j]).norm() / vs[i].norm().max(vs[j].norm());
                if ratio < local_best {
                    local_best = ratio;
                    local_pair = (i, j);
                }
            }
            (local_best, local_pair)
        })
        .reduce(
            || (f64::INFINITY, (0, 0)),
            |a, b| {
                if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) {
                    b
                } else {
                    a
                }
            },
        );
    Ok(LacunarityReport {
        is_lacunary: best > threshold,
        best_epsilon: best,
        witness_pair: Some(pair),
    })
}

/// Number of window values with modulus strictly below `r`.
pub fn counting_function(seq: &SpectrumSequence, r: f64) -> usize {
    debug_assert!(r > 0.0);
    // Values are sorted by modulus.
    seq.values().partition_point(|v| v.norm() < r)
}

/// Verdict of the finite-window log² density test.
#[derive(Debug, Clone, Serialize)]
pub struct Log2DensityVerdict {
    /// n_T(rᵢ) / ln²(rᵢ) per grid radius.
    pub ratios: Vec<f64>,
    /// Maximum ratio over the last third of the grid.
    pub limsup_proxy: f64,
    pub satisfies_beglog2: bool,
}

/// Windowed proxy for `limsup n_T(r)/log²r = ∞`.
///
/// No finite procedure computes a limsup; the verdict requires the
/// per-third window maxima to be nondecreasing and the last one to clear
/// [`LOG2_DENSITY_DIVERGENCE_THRESHOLD`].
pub fn log2_density_test(seq: &SpectrumSequence, radii: &[f64]) -> Result<Log2DensityVerdict> {
    if radii.len() < 3 || radii.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::BadRadiusGrid { min_len: 3 });
    }
    if let Some(&r) = radii.iter().find(|&&r| r <= 1.0) {
        return Err(Error::DegenerateRadius { radius: r });
    }
    let ratios: Vec<f64> = radii
        .iter()
        .map(|&r| counting_function(seq, r) as f64 / r.ln().powi(2))
        .collect();
    let third = ratios.len().div_ceil(3);
    let windows: Vec<f64> = ratios
        .chunks(third)
        .map(|c| c.iter().cloned().fold(f64::NEG_INFINITY, f64::max))
        .collect();
    let nondecreasing = windows.windows(2).all(|w| w[1] >= w[0]);
    let limsup_proxy = *windows.last().unwrap();
    Ok(Log2DensityVerdict {
        ratios,
        limsup_proxy,
        satisfies_beglog2: nondecreasing && limsup_proxy > LOG2_DENSITY_DIVERGENCE_THRESHOLD,
    })
}

/// Log of `|tₙ|^N · ∏_{k≠n, ½ ≤ t_k/tₙ ≤ 2} |(t_k−tₙ)/t_k|`.
///
/// Stays in log space; the plain-value form underflows for clustered
/// octaves where the product reaches 2^(-M) with M in the hundreds.
pub fn sparseness_product_log(seq: &SpectrumSequence, n: usize, power: u32) -> Result<f64> {
    let ts = seq.real_values()?;
    if n >= ts.len() {
        return Err(Error::IndexOutOfRange { index: n, len: ts.len() });
    }
    let tn = ts[n];
    let mut log = KahanSum::new();
    log.add(f64::from(power) * tn.abs().ln());
    for (k, &tk) in ts.iter().enumerate() {
        if k == n {
            continue;
        }
        let ratio = tk / tn;
        if (0.5..=2.0).contains(&ratio) {
            log.add(((tk - tn) / tk).abs().ln());
        }
    }
    Ok(log.value())
}

/// Plain-value octave sparseness product, flushed to 0 below the
/// underflow floor.
pub fn sparseness_product(seq: &SpectrumSequence, n: usize, power: u32) -> Result<f64> {
    let log = sparseness_product_log(seq, n, power)?;
    Ok(if log < UNDERFLOW_FLOOR_LOG { 0.0 } else { log.exp() })
}

/// Witness point found inside `[R, 2R]`.
#[derive(Debug, Clone, Serialize)]
pub struct BonWitness {
    /// Index (into the sorted window) minimizing the product.
    pub index: usize,
    /// ∏_{k in [R,2R], k≠n} |(t_k−tₙ)/t_k|, 0 on underflow.
    pub product: f64,
    pub log2_product: f64,
    /// Half the number of interval points, rounded down.
    pub m: usize,
}

/// Scans `[R, 2R]` for the point whose deleted interval product is
/// smallest; with 2M points present the winner is at most 2^(1−M).
pub fn bon_witness(seq: &SpectrumSequence, r: f64) -> Result<Option<BonWitness>> {
    let ts = seq.real_values()?;
    let members: Vec<usize> = (0..ts.len()).filter(|&i| ts[i] >= r && ts[i] <= 2.0 * r).collect();
    if members.len() < 2 {
        return Ok(None);
    }
    let m = members.len() / 2;
    let mut best: Option<(usize, f64)> = None;
    for &n in &members {
        let mut log = KahanSum::new();
        for &k in &members {
            if k != n {
                log.add(((ts[k] - ts[n]) / ts[k]).abs().ln());
            }
        }
        let l = log.value();
        match best {
            Some((_, lb)) if lb <= l => {}
            _ => best = Some((n, l)),
        }
    }
    let (index, log) = best.unwrap();
    let product = if log < UNDERFLOW_FLOOR_LOG { 0.0 } else { log.exp() };
    Ok(Some(BonWitness { index, product, log2_product: log / std::f64::consts::LN_2, m }))
}

/// Fits the minimal envelope `|tₙ/tₘ| ≤ B g^(n−m)` (n < m) over the window.
///
/// Returns `(B, g)` with g the smallest consecutive modulus ratio; `None`
/// when the moduli are not strictly increasing. Diagnostic only: the
/// constants are existential, no canonical definition exists.
pub fn geometric_envelope(seq: &SpectrumSequence) -> Option<(f64, f64)> {
    let n = seq.len();
    if n < 2 {
        return None;
    }
    let mut g = f64::INFINITY;
    for i in 1..n {
        let ratio = seq.modulus(i) / seq.modulus(i - 1);
        if ratio <= 1.0 {
            return None;
        }
        g = g.min(ratio);
    }
    let mut b: f64 = 1.0;
    for i in 0..n {
        for j in i + 1..n {
            let need = (seq.modulus(i) / seq.modulus(j)) * g.powi((j - i) as i32);
            b = b.max(need);
        }
    }
    Some((b, g))
}

// ---------------------------------------------------------------------------
// Symmetric tridiagonal eigenvalues by Sturm bisection
// ---------------------------------------------------------------------------

/// Eigenvalues of a symmetric tridiagonal matrix strictly below `lambda`,
/// counted through the signs of the LDLᵀ pivots.
pub fn sturm_count(diag: &[f64], offdiag: &[f64], lambda: f64) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    let pivot_guard = f64::MIN_POSITIVE.sqrt();
    let mut count = 0usize;
    let mut q = diag[0] - lambda;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < pivot_guard {
            if q >= 0.0 {
                pivot_guard
            } else {
                -pivot_guard
            }
        } else {
            q
        };
        q = (diag[i] - lambda) - offdiag[i - 1] * offdiag[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues of the N×N symmetric tridiagonal truncation, sorted
/// ascending, via Sturm-sequence bisection inside Gershgorin bounds.
/// Absolute tolerance 10⁻¹² scaled by the matrix norm proxy.
pub fn tridiagonal_eigenvalues(diag: &[f64], offdiag: &[f64], n: usize) -> Result<Vec<f64>> {
    if n < 1 {
        return Err(Error::BadMatrixSize { n });
    }
    if diag.len() < n || offdiag.len() + 1 < n {
        return Err(Error::IndexOutOfRange { index: n, len: diag.len().min(offdiag.len() + 1) });
    }
    let d = &diag[..n];
    let e = &offdiag[..n.saturating_sub(1)];
    if n == 1 {
        return Ok(vec![d[0]]);
    }
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..n {
        let left = if i > 0 { e[i - 1].abs() } else { 0.0 };
        let right = if i < n - 1 { e[i].abs() } else { 0.0 };
        lo = lo.min(d[i] - left - right);
        hi = hi.max(d[i] + left + right);
    }
    let scale = lo.abs().max(hi.abs()).max(1.0);
    let tol = 1e-12 * scale;
    lo -= tol + 1.0;
    hi += tol + 1.0;
    let mut eigenvalues = Vec::with_capacity(n);
    for k in 0..n {
        let mut a = lo;
        let mut b = hi;
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if b - a < tol.max(2.0 * f64::EPSILON * mid.abs()) {
                break;
            }
            if sturm_count(d, e, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        eigenvalues.push(0.5 * (a + b));
    }
    Ok(eigenvalues)
}

/// Eigenvalues of the N×N symmetric tridiagonal truncation as a sequence.
///
/// Equal eigenvalues collapse to a single spectral point and near-zero
/// ones are dropped (a sequence value must be nonzero); both events are
/// noted in the origin label.
pub fn jacobi_truncated_eigenvalues(
    diag: &[f64],
    offdiag: &[f64],
    n: usize,
) -> Result<SpectrumSequence> {
    let eigs = tridiagonal_eigenvalues(diag, offdiag, n)?;
    let scale = eigs.iter().fold(1.0f64, |m, &x| m.max(x.abs()));
    let tol = 1e-12 * scale;
    let mut kept: Vec<f64> = Vec::with_capacity(eigs.len());
    let mut dropped = 0usize;
    let mut merged = 0usize;
    for x in eigs {
        if x.abs() <= tol {
            dropped += 1;
            continue;
        }
        if let Some(&last) = kept.last() {
            if (x - last).abs() <= tol {
                merged += 1;
                continue;
            }
        }
        kept.push(x);
    }
    let mut origin = format!("jacobi N={n}");
    if dropped > 0 {
        origin.push_str(&format!(" (dropped {dropped} near-zero)"));
    }
    if merged > 0 {
        origin.push_str(&format!(" (merged {merged} multiple)"));
    }
    SpectrumSequence::from_real(kept, origin)
}

/// Leading-order Fourier coefficients of the annulus convolution symbol:
/// `τ₁ R^(−a−n) n^(a−1)` for n > 0 and `τ₂ r^(a−n) |n|^(a−1)` for n < 0.
///
/// Requires τ₁/τ₂ off the positive real axis so the two branches stay
/// separated. Exactly coinciding values are merged into one spectral point
/// and magnitudes below 10⁻³⁰⁰ are dropped.
pub fn convolution_symbol_sequence(
    tau1: Complex64,
    tau2: Complex64,
    r: f64,
    big_r: f64,
    a: f64,
    n_max: usize,
) -> Result<SpectrumSequence> {
    if tau1.norm() == 0.0 || tau2.norm() == 0.0 {
        return Err(Error::ZeroValue { index: 0 });
    }
    let ratio = tau1 / tau2;
    if ratio.im == 0.0 && ratio.re > 0.0 {
        return Err(Error::BranchCollision);
    }
    debug_assert!((0.0..1.0).contains(&r) && big_r > 1.0 && a > 1.0);
    let mut values: Vec<Complex64> = Vec::with_capacity(2 * n_max);
    for n in 1..=n_max {
        let nf = n as f64;
        let pos = tau1 * big_r.powf(-a - nf) * nf.powf(a - 1.0);
        let neg = tau2 * r.powf(a + nf) * nf.powf(a - 1.0);
        for v in [pos, neg] {
            if v.norm() >= 1e-300 {
                values.push(v);
            }
        }
    }
    // Equal coefficients describe one spectral point of the multiplication
    // operator; keep a single copy.
    values.sort_by(|x, y| {
        x.norm().total_cmp(&y.norm()).then(x.re.total_cmp(&y.re)).then(x.im.total_cmp(&y.im))
    });
    values.dedup();
    SpectrumSequence::new(values, format!("convolution-symbol r={r} R={big_r} a={a}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric_pow2(count: usize) -> SpectrumSequence {
        SpectrumSequence::geometric(2.0, 2.0, count).unwrap()
    }

    /// Independent O(n²) scan, no parallelism, no early exits.
    fn brute_force_epsilon(vs: &[Complex64]) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..vs.len() {
            for j in 0..vs.len() {
                if i != j {
                    best = best.min((vs[i] - vs[j]).norm() / vs[i].norm().max(vs[j].norm()));
                }
            }
        }
        best
    }

    #[test]
    fn sequence_rejects_zero_and_duplicates() {
        assert!(matches!(
            SpectrumSequence::from_real(vec![1.0, 0.0], "t"),
            Err(Error::ZeroValue { .. })
        ));
        assert!(matches!(
            SpectrumSequence::from_real(vec![1.0, 2.0, 2.0], "t"),
            Err(Error::DuplicateValue { .. })
        ));
        assert!(SpectrumSequence::new(vec![], "t").is_err());
    }

    #[test]
    fn lacunary_powers_of_two() {
        // For m > n, 2^m − 2^n ≥ 2^(m−1) = max/2, so ε = 1/2 exactly.
        let seq = geometric_pow2(20);
        let rep = check_lacunary(&seq, 0.1).unwrap();
        assert!(rep.is_lacunary);
        assert_eq!(rep.best_epsilon, 0.5);
    }

    #[test]
    fn integers_are_not_lacunary() {
        let seq = SpectrumSequence::integers(0.0, 100).unwrap();
        let rep = check_lacunary(&seq, 0.1).unwrap();
        assert!(!rep.is_lacunary);
        // Consecutive gap ratio 1/(n+1) attained at the top pair.
        assert!((rep.best_epsilon - 1.0 / 100.0).abs() < 1e-15);
    }

    #[test]
    fn perturbed_geometric_matches_brute_force() {
        // Deterministic |δₙ| ≤ 0.1 perturbation.
        let values: Vec<f64> =
            (1..=20).map(|n| 2f64.powi(n) * (1.0 + 0.1 * ((n * n) as f64).sin())).collect();
        let seq = SpectrumSequence::from_real(values, "perturbed").unwrap();
        let rep = check_lacunary(&seq, 0.1).unwrap();
        assert!((rep.best_epsilon - brute_force_epsilon(seq.values())).abs() < 1e-15);
    }

    #[test]
    fn lacunarity_scale_invariant() {
        let values: Vec<Complex64> = (1..=15)
            .map(|n| Complex64::new(1.7f64.powi(n), 0.3 * n as f64))
            .collect();
        let seq = SpectrumSequence::new(values.clone(), "base").unwrap();
        let base = check_lacunary(&seq, 1e-3).unwrap().best_epsilon;
        for scale in [Complex64::new(3.5, 0.0), Complex64::new(0.0, -2.0)] {
            let scaled =
                SpectrumSequence::new(values.iter().map(|v| v * scale).collect(), "scaled").unwrap();
            let eps = check_lacunary(&scaled, 1e-3).unwrap().best_epsilon;
            assert!((eps - base).abs() <= 1e-12 * base);
        }
    }

    #[test]
    fn geometric_epsilon_closed_form() {
        for g in [1.5, 2.0, 3.0, 10.0] {
            let seq = SpectrumSequence::geometric(1.0, g, 12).unwrap();
            let rep = check_lacunary(&seq, 1e-3).unwrap();
            assert!((rep.best_epsilon - (1.0 - 1.0 / g)).abs() < 1e-12);
        }
    }

    #[test]
    fn counting_function_examples() {
        let seq = geometric_pow2(20);
        // 2, 4, ..., 512 are the nine values below 1000.
        assert_eq!(counting_function(&seq, 1000.0), 9);
        assert_eq!(counting_function(&seq, 1.0), 0);
        let ints = SpectrumSequence::integers(0.0, 100).unwrap();
        assert_eq!(counting_function(&ints, 50.5), 50);
    }

    #[test]
    fn counting_function_monotone() {
        let seq = SpectrumSequence::stretched_exponential(0.5, 200).unwrap();
        let mut prev = 0;
        let mut r = 1.1;
        while r < 1e6 {
            let c = counting_function(&seq, r);
            assert!(c >= prev);
            prev = c;
            r *= 1.7;
        }
    }

    fn decade_radii() -> Vec<f64> {
        (2..=8).map(|k| 10f64.powi(k)).collect()
    }

    #[test]
    fn log2_density_cube_root_family_diverges() {
        // t_n = exp(n^(1/3)) has n_T(r) ≈ ln³r, ratio ≈ ln r.
        let seq = SpectrumSequence::stretched_exponential(1.0 / 3.0, 7000).unwrap();
        let v = log2_density_test(&seq, &decade_radii()).unwrap();
        assert!(v.satisfies_beglog2, "ratios: {:?}", v.ratios);
    }

    #[test]
    fn log2_density_geometric_fails() {
        let seq = geometric_pow2(40);
        let v = log2_density_test(&seq, &decade_radii()).unwrap();
        assert!(!v.satisfies_beglog2);
        // n_T(r) = O(ln r) so the ratio decays.
        assert!(v.ratios.last().unwrap() < &0.5);
    }

    #[test]
    fn log2_density_square_root_family_borderline() {
        // t_n = exp(√n): n_T ≈ ln²r, ratios near constant 1.
        let seq = SpectrumSequence::stretched_exponential(0.5, 400).unwrap();
        let v = log2_density_test(&seq, &decade_radii()).unwrap();
        assert!(!v.satisfies_beglog2);
        for w in v.ratios.windows(1) {
            assert!(w[0] < 1.5, "ratio unexpectedly large: {}", w[0]);
        }
    }

    #[test]
    fn log2_density_rejects_bad_grids() {
        let seq = geometric_pow2(5);
        assert!(matches!(
            log2_density_test(&seq, &[10.0, 100.0]),
            Err(Error::BadRadiusGrid { .. })
        ));
        assert!(matches!(
            log2_density_test(&seq, &[0.5, 10.0, 100.0]),
            Err(Error::DegenerateRadius { .. })
        ));
    }

    /// Product over the octave computed directly in plain arithmetic.
    fn octave_product_oracle(ts: &[f64], n: usize, power: u32) -> f64 {
        let mut p = ts[n].abs().powi(power as i32);
        for (k, &tk) in ts.iter().enumerate() {
            if k != n && tk / ts[n] >= 0.5 && tk / ts[n] <= 2.0 {
                p *= ((tk - ts[n]) / tk).abs();
            }
        }
        p
    }

    #[test]
    fn sparseness_product_integers_vs_oracle() {
        let seq = SpectrumSequence::integers(0.0, 100).unwrap();
        let ts = seq.real_values().unwrap();
        let n = 39; // t_n = 40
        let got = sparseness_product(&seq, n, 3).unwrap();
        let want = octave_product_oracle(&ts, n, 3);
        assert!(got < 1.0);
        assert!((got - want).abs() <= 1e-9 * want.max(1e-300));
    }

    #[test]
    fn sparseness_product_isolated_octave() {
        // Octave of t=100 contains only itself: empty product.
        let seq = SpectrumSequence::from_real(vec![1.0, 10.0, 100.0, 1000.0], "iso").unwrap();
        let got = sparseness_product(&seq, 2, 3).unwrap();
        assert_eq!(got, 100f64.powi(3));
    }

    #[test]
    fn sparseness_product_geometric_hand_value() {
        // Octave neighbors of 2^n are 2^(n±1); factors 1/2 and 1.
        let seq = geometric_pow2(10);
        let n = 4; // t = 32, neighbors 16 and 64
        let got = sparseness_product(&seq, n, 1).unwrap();
        let want = 32.0 * ((16.0 - 32.0f64) / 16.0).abs() * ((64.0 - 32.0f64) / 64.0).abs();
        assert!((got - want).abs() < 1e-12 * want);
    }

    #[test]
    fn sparseness_rejects_complex() {
        let seq =
            SpectrumSequence::new(vec![Complex64::new(0.0, 1.0), Complex64::new(2.0, 0.0)], "c")
                .unwrap();
        assert!(matches!(sparseness_product(&seq, 0, 1), Err(Error::NonRealSequence { .. })));
    }

    #[test]
    fn bon_witness_arithmetic_cluster() {
        // 10 points in [100, 200]: M = 5, witness product ≤ 2^(1-5).
        let seq =
            SpectrumSequence::from_real((0..10).map(|k| 100.0 + 10.0 * k as f64).collect(), "b")
                .unwrap();
        let w = bon_witness(&seq, 100.0).unwrap().unwrap();
        assert_eq!(w.m, 5);
        assert!(w.product <= 2f64.powi(-4), "product {}", w.product);
    }

    #[test]
    fn bon_witness_single_point() {
        let seq = SpectrumSequence::from_real(vec![1.0, 150.0, 1000.0], "s").unwrap();
        assert!(bon_witness(&seq, 100.0).unwrap().is_none());
    }

    #[test]
    fn bon_witness_tight_cluster_proof_bound() {
        // 2M points within R/2 of each other: the proof bound (1/2)^(M−1).
        let r = 1000.0;
        let seq = SpectrumSequence::from_real(
            (0..8).map(|k| 1100.0 + 10.0 * k as f64).collect(),
            "cluster",
        )
        .unwrap();
        let w = bon_witness(&seq, r).unwrap().unwrap();
        assert_eq!(w.m, 4);
        assert!(w.product <= 0.5f64.powi(3));
    }

    #[test]
    fn tridiagonal_diagonal_matrix() {
        let eigs = tridiagonal_eigenvalues(&[1.0, 2.0, 3.0], &[0.0, 0.0], 3).unwrap();
        for (e, want) in eigs.iter().zip([1.0, 2.0, 3.0]) {
            assert!((e - want).abs() < 1e-10);
        }
        let single = jacobi_truncated_eigenvalues(&[5.0], &[], 1).unwrap();
        assert_eq!(single.values(), &[Complex64::new(5.0, 0.0)]);
    }

    #[test]
    fn tridiagonal_rejects_bad_sizes() {
        assert!(tridiagonal_eigenvalues(&[1.0], &[], 0).is_err());
        assert!(tridiagonal_eigenvalues(&[1.0, 2.0], &[], 2).is_err());
    }

    #[test]
    fn jacobi_q_oscillator_truncation_lacunary_tail() {
        // a_n = (2^n − 1)^(1/2), zero diagonal. Away from the origin cluster
        // the truncated spectrum separates like the q-oscillator levels.
        let n = 30;
        let off: Vec<f64> = (1..n as i32).map(|k| (2f64.powi(k) - 1.0).sqrt()).collect();
        let seq = jacobi_truncated_eigenvalues(&vec![0.0; n], &off, n).unwrap();
        let large: Vec<Complex64> = seq
            .values()
            .iter()
            .filter(|v| v.norm() > 0.05 * seq.modulus(seq.len() - 1))
            .cloned()
            .collect();
        assert!(large.len() >= 10);
        let tail = SpectrumSequence::new(large, "tail").unwrap();
        let rep = check_lacunary(&tail, 1e-3).unwrap();
        assert!(rep.is_lacunary, "eps = {}", rep.best_epsilon);
    }

    #[test]
    fn convolution_symbol_lacunary_example() {
        let seq = convolution_symbol_sequence(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            0.5,
            2.0,
            2.0,
            20,
        )
        .unwrap();
        let rep = check_lacunary(&seq, 1e-3).unwrap();
        assert!(rep.is_lacunary, "eps = {}", rep.best_epsilon);
        // n = 1 positive branch value is present.
        let v1 = Complex64::new(2f64.powf(-3.0), 0.0);
        assert!(seq.values().iter().any(|v| (v - v1).norm() < 1e-15));
    }

    #[test]
    fn convolution_symbol_rejects_positive_ratio() {
        assert!(matches!(
            convolution_symbol_sequence(
                Complex64::new(1.0, 0.0),
                Complex64::new(2.0, 0.0),
                0.5,
                2.0,
                2.0,
                10,
            ),
            Err(Error::BranchCollision)
        ));
    }

    #[test]
    fn geometric_envelope_fits_powers_of_two() {
        let seq = geometric_pow2(12);
        let (b, g) = geometric_envelope(&seq).unwrap();
        assert!((g - 2.0).abs() < 1e-12);
        assert!((b - 1.0).abs() < 1e-9);
    }
}
