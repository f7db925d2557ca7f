//! Compensated accumulators used by the product evaluators.

use num_complex::Complex64;
use std::ops::AddAssign;

/// Neumaier's variant of Kahan summation; also tracks `Σ|x|` so callers can
/// size a rounding allowance from the magnitudes actually added.
#[derive(Debug, Default, Clone, Copy)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
    abs: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// Sum of the magnitudes of every term added so far.
    pub fn abs_total(&self) -> f64 {
        self.abs
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs += x.abs();
    }
}

/// Component-wise [`NeumaierSum`] over complex terms.
#[derive(Debug, Default, Clone, Copy)]
pub struct ComplexNeumaierSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl ComplexNeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    pub fn abs_total(&self) -> f64 {
        self.re.abs_total() + self.im.abs_total()
    }
}

impl AddAssign<Complex64> for ComplexNeumaierSum {
    fn add_assign(&mut self, z: Complex64) {
        self.re += z.re;
        self.im += z.im;
    }
}
