//! Truncated Hilbert series with exact integer coefficients.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Coefficients of a power series in `q`, stored through degree `trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    coeffs: Vec<BigUint>,
}

impl HilbertSeries {
    pub fn one(trunc: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); trunc + 1];
        coeffs[0] = BigUint::one();
        HilbertSeries { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> BigUint {
        self.coeffs.get(d).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Multiply in place by `1 / (1 - q^d)`, i.e. by `1 + q^d + q^{2d} + ...`.
    /// The forward sweep reuses already-updated entries, so one pass suffices.
    pub fn mul_free_generator(&mut self, d: usize) {
        assert!(d > 0, "generator degree must be positive");
        for i in d..self.coeffs.len() {
            let lower = self.coeffs[i - d].clone();
            self.coeffs[i] += lower;
        }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }
}

/// Hilbert series of a free commutative ring on generators of the given
/// degrees, truncated at `trunc`.  Degrees may repeat.
pub fn free_graded_hilbert(degrees: &[usize], trunc: usize) -> HilbertSeries {
    let mut s = HilbertSeries::one(trunc);
    for &d in degrees {
        s.mul_free_generator(d);
    }
    s
}
