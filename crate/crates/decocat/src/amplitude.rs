//! Coherent-state amplitude as a plain (re, im) pair.

use num_complex::Complex64;

/// Complex amplitude α of a coherent state |α⟩.
///
/// The mean position of |α⟩ is √2·re and the mean momentum is √2·im
/// (oscillator units, ħ = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexAmplitude {
    pub re: f64,
    pub im: f64,
}

impl ComplexAmplitude {
    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    /// Real amplitude (zero mean momentum).
    pub const fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// The opposite-phase amplitude −α.
    pub fn neg(&self) -> Self {
        Self {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl From<ComplexAmplitude> for Complex64 {
    fn from(a: ComplexAmplitude) -> Self {
        Complex64::new(a.re, a.im)
    }
}

impl From<Complex64> for ComplexAmplitude {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}
