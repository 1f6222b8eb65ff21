//! Coordinate/momentum duality of cat wavefunctions.
//!
//! Builds single- and two-mode cats, checks their quadrature norms in both
//! representations, and compares the discrete Fourier transform of the
//! coordinate wavefunction against the analytic momentum wavefunction.
//!
//! Run with: cargo run --release --example wavefunction_duality

use num_complex::Complex64;

use decocat::cat::{cat_wavefunction_p, cat_wavefunction_x, MultimodeCat};
use decocat::numerics::{dft_unitary, dual_grid_spacing, trapezoid_integral, GridSpec};
use decocat::ComplexAmplitude;

fn main() {
    println!("cat wavefunction norms and Fourier duality");
    println!();
    println!(
        "{:>12} {:>14} {:>14} {:>16}",
        "alpha", "norm defect x", "norm defect p", "duality (worst)"
    );

    for alpha in [
        ComplexAmplitude::real(0.5),
        ComplexAmplitude::real(1.0),
        ComplexAmplitude::real(3.4),
        ComplexAmplitude::new(0.0, 1.0),
        ComplexAmplitude::new(1.0, 1.0),
    ] {
        let cat = MultimodeCat::identical(alpha, 1, 0).expect("one mode");
        let reach = std::f64::consts::SQRT_2 * alpha.re.abs().max(alpha.im.abs()) + 8.0;
        let grid = GridSpec::symmetric(reach, 6001).expect("valid grid");

        let norm_defect = |momentum: bool| -> f64 {
            let values: Vec<f64> = grid
                .iter()
                .map(|c| {
                    if momentum {
                        cat_wavefunction_p(&cat, &[c]).unwrap().norm_sqr()
                    } else {
                        cat_wavefunction_x(&cat, &[c]).unwrap().norm_sqr()
                    }
                })
                .collect();
            (trapezoid_integral(&values, grid.spacing()).unwrap() - 1.0).abs()
        };

        let n = 1 << 12;
        let dx = 2.0 * reach / n as f64;
        let samples: Vec<Complex64> = (0..n)
            .map(|j| {
                let x = (j as f64 - n as f64 / 2.0) * dx;
                cat_wavefunction_x(&cat, &[x]).unwrap()
            })
            .collect();
        let transformed = dft_unitary(&samples, dx).expect("power-of-two length");
        let dp = dual_grid_spacing(n, dx);
        let duality_gap = transformed
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let p = (k as f64 - n as f64 / 2.0) * dp;
                (v - cat_wavefunction_p(&cat, &[p]).unwrap()).norm()
            })
            .fold(0.0, f64::max);

        println!(
            "{:>12} {:>14.3e} {:>14.3e} {:>16.3e}",
            format!("{}+{}i", alpha.re, alpha.im),
            norm_defect(false),
            norm_defect(true),
            duality_gap
        );
    }

    println!();
    println!("momentum fringe zeros for alpha = 3.4: spacing pi/(2*sqrt(2)*3.4) = {:.6}",
        std::f64::consts::PI / (2.0 * std::f64::consts::SQRT_2 * 3.4));
}
