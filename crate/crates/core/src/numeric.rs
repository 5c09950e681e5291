//! Compensated summation, signed log-space products, and deterministic
//! float formatting shared across the crate.

use num_complex::Complex64;

/// Magnitudes below `exp(UNDERFLOW_FLOOR_LOG)` collapse to zero when leaving
/// log space.
pub const UNDERFLOW_FLOOR_LOG: f64 = -700.0;

/// Kahan compensated accumulator for `f64`.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: f64) {
        let y = value - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }

    pub fn sum_iter<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
        let mut acc = Self::new();
        for v in iter {
            acc.add(v);
        }
        acc.value()
    }
}

/// Componentwise Kahan accumulator for complex values.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanComplex {
    re: KahanSum,
    im: KahanSum,
}

impl KahanComplex {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: Complex64) {
        self.re.add(value.re);
        self.im.add(value.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// A nonnegative magnitude stored as `sign * exp(log_abs)`.
///
/// Products whose factors span hundreds of orders of magnitude are
/// accumulated in log space; `value()` collapses to zero below the
/// underflow floor and to `sign * inf` above `-UNDERFLOW_FLOOR_LOG`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    pub log_abs: f64,
    pub sign: f64,
}

impl SignedLog {
    pub fn one() -> Self {
        Self { log_abs: 0.0, sign: 1.0 }
    }

    pub fn from_value(v: f64) -> Self {
        if v == 0.0 {
            Self { log_abs: f64::NEG_INFINITY, sign: 0.0 }
        } else {
            Self { log_abs: v.abs().ln(), sign: v.signum() }
        }
    }

    #[inline]
    pub fn mul_value(&mut self, factor: f64) {
        if factor == 0.0 {
            self.log_abs = f64::NEG_INFINITY;
            self.sign = 0.0;
        } else {
            self.log_abs += factor.abs().ln();
            self.sign *= factor.signum();
        }
    }

    #[inline]
    pub fn mul(&mut self, other: SignedLog) {
        self.log_abs += other.log_abs;
        self.sign *= other.sign;
    }

    /// Leaves log space, flushing denormal-range results to zero.
    pub fn value(&self) -> f64 {
        if self.log_abs < UNDERFLOW_FLOOR_LOG {
            0.0
        } else {
            self.sign * self.log_abs.exp()
        }
    }

    pub fn recip(&self) -> SignedLog {
        SignedLog { log_abs: -self.log_abs, sign: self.sign }
    }

    pub fn abs_value(&self) -> f64 {
        if self.log_abs < UNDERFLOW_FLOOR_LOG {
            0.0
        } else {
            self.log_abs.exp()
        }
    }
}

/// `ln(sum exp(x_i))` without overflow; `-inf` for an empty slice.
pub fn log_sum_exp(values: &[f64]) -> f64 {
    let m = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return m;
    }
    let mut acc = KahanSum::new();
    for &v in values {
        acc.add((v - m).exp());
    }
    m + acc.value().ln()
}

/// Formats with 17 significant digits, enough to round-trip any `f64`.
pub fn fmt_g17(x: f64) -> String {
    format!("{:.16e}", x)
}

/// Serde helpers mapping `Complex64` to `[re, im]` pairs.
pub mod cpair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [v.re, v.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

/// Serde helpers mapping `Vec<Complex64>` to a list of `[re, im]` pairs.
pub mod cpairs {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
        let pairs = Vec::<[f64; 2]>::deserialize(d)?;
        Ok(pairs.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
    }
}
