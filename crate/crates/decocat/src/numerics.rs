//! Shared numerical kernels: uniform-grid trapezoid quadrature, a
//! continuum-normalized discrete Fourier transform, log-sum-exp, Gaussian
//! sampling, and seed mixing for reproducible parallel RNG streams.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rustfft::FftPlanner;

use crate::error::{Error, Result};

/// Name of the RNG scheme, recorded in output metadata so published CSV
/// files can be regenerated bit-for-bit.
pub const RNG_ALGORITHM: &str = "ChaCha8 seeded via SplitMix64(base + (index+1)*phi64)";

/// Minimum sample count accepted by the Fourier transform and by grid
/// densities.
pub const MIN_GRID_POINTS: usize = 16;

/// A uniform 1-D grid: `points` samples from `grid_min` to `grid_max`
/// inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    grid_min: f64,
    grid_max: f64,
    points: usize,
}

impl GridSpec {
    pub fn new(grid_min: f64, grid_max: f64, points: usize) -> Result<Self> {
        if !(grid_max > grid_min) || !grid_min.is_finite() || !grid_max.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "grid bounds must satisfy min < max, got [{grid_min}, {grid_max}]"
            )));
        }
        if points < MIN_GRID_POINTS {
            return Err(Error::TooFewSamples {
                min: MIN_GRID_POINTS,
                got: points,
            });
        }
        Ok(Self {
            grid_min,
            grid_max,
            points,
        })
    }

    /// Symmetric grid [-half_width, half_width].
    pub fn symmetric(half_width: f64, points: usize) -> Result<Self> {
        Self::new(-half_width, half_width, points)
    }

    pub fn min(&self) -> f64 {
        self.grid_min
    }

    pub fn max(&self) -> f64 {
        self.grid_max
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        (self.grid_max - self.grid_min) / (self.points - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        self.grid_min + self.spacing() * i as f64
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points).map(move |i| self.point(i))
    }
}

/// Neumaier-compensated sum; keeps the error near one ulp of the result
/// even for 10⁵–10⁶ terms, where a running sum drifts by ~n·eps.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut compensation = 0.0;
    for v in values {
        let t = sum + v;
        compensation += if sum.abs() >= v.abs() {
            (sum - t) + v
        } else {
            (v - t) + sum
        };
        sum = t;
    }
    sum + compensation
}

/// Composite trapezoid rule on a uniform grid.
pub fn trapezoid_integral(values: &[f64], spacing: f64) -> Result<f64> {
    if values.len() < 2 {
        return Err(Error::TooFewSamples {
            min: 2,
            got: values.len(),
        });
    }
    if !(spacing > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "spacing must be positive, got {spacing}"
        )));
    }
    let interior: f64 = values[1..values.len() - 1].iter().sum();
    Ok(spacing * (0.5 * (values[0] + values[values.len() - 1]) + interior))
}

/// Trapezoid rule on a uniform 2-D grid (rows indexed by the first axis).
pub fn trapezoid_integral_2d(rows: &[Vec<f64>], dx: f64, dy: f64) -> Result<f64> {
    if rows.len() < 2 {
        return Err(Error::TooFewSamples {
            min: 2,
            got: rows.len(),
        });
    }
    let row_integrals: Vec<f64> = rows
        .iter()
        .map(|row| trapezoid_integral(row, dy))
        .collect::<Result<_>>()?;
    trapezoid_integral(&row_integrals, dx)
}

/// Dual-grid spacing of the continuum transform: dp = 2π/(n·dx).
pub fn dual_grid_spacing(n: usize, spacing: f64) -> f64 {
    std::f64::consts::TAU / (n as f64 * spacing)
}

// Samples are taken at x_j = (j - n/2)·dx; the transform is returned on the
// dual grid p_k = (k - n/2)·dp with dp = 2π/(n·dx). With these conventions
// p0·dx = dp·x0 = -π exactly, which reduces the linear phase factors to
// alternating signs, and the constant phase e^{-i·p0·x0} to a quarter-turn
// determined by n mod 4.
fn dft_impl(samples: &[Complex64], spacing: f64, inverse: bool) -> Result<Vec<Complex64>> {
    let n = samples.len();
    if n < MIN_GRID_POINTS {
        return Err(Error::TooFewSamples {
            min: MIN_GRID_POINTS,
            got: n,
        });
    }
    if !(spacing > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "spacing must be positive, got {spacing}"
        )));
    }

    let mut buf: Vec<Complex64> = samples
        .iter()
        .enumerate()
        .map(|(j, &s)| if j % 2 == 0 { s } else { -s })
        .collect();

    let mut planner = FftPlanner::new();
    let fft = if inverse {
        planner.plan_fft_inverse(n)
    } else {
        planner.plan_fft_forward(n)
    };
    fft.process(&mut buf);

    // e^{∓i·n·π/2} evaluated exactly from n mod 4.
    let quarter_turns = if inverse { (4 - n % 4) % 4 } else { n % 4 };
    let constant_phase = match quarter_turns {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    };
    let scale = spacing / std::f64::consts::TAU.sqrt();

    Ok(buf
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            v * constant_phase * (scale * sign)
        })
        .collect())
}

/// Continuum-normalized Fourier transform
/// ψ̃(p) = (2π)^(-1/2) ∫ ψ(x) e^(-ipx) dx
/// for samples on a grid centered on zero (x_j = (j - n/2)·spacing).
/// The result lives on the dual grid p_k = (k - n/2)·dp, dp = 2π/(n·spacing).
pub fn dft_unitary(samples: &[Complex64], spacing: f64) -> Result<Vec<Complex64>> {
    dft_impl(samples, spacing, false)
}

/// Inverse of [`dft_unitary`]: takes momentum samples with their spacing dp
/// and returns coordinate samples on the dual grid (dx = 2π/(n·dp)).
pub fn idft_unitary(samples: &[Complex64], spacing: f64) -> Result<Vec<Complex64>> {
    dft_impl(samples, spacing, true)
}

/// Two-axis transform for the two-mode duality check: applies
/// [`dft_unitary`] along each axis in turn.
pub fn dft_unitary_2d(rows: &[Vec<Complex64>], dx: f64, dy: f64) -> Result<Vec<Vec<Complex64>>> {
    let transformed_rows: Vec<Vec<Complex64>> = rows
        .iter()
        .map(|row| dft_unitary(row, dy))
        .collect::<Result<_>>()?;
    let n_rows = transformed_rows.len();
    let n_cols = transformed_rows[0].len();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); n_cols]; n_rows];
    let mut column = vec![Complex64::new(0.0, 0.0); n_rows];
    for c in 0..n_cols {
        for r in 0..n_rows {
            column[r] = transformed_rows[r][c];
        }
        let transformed = dft_unitary(&column, dx)?;
        for r in 0..n_rows {
            out[r][c] = transformed[r];
        }
    }
    Ok(out)
}

/// log(e^a + e^b) without overflow; exact for infinite gaps.
pub fn log_sum_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY && b == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// One draw from Normal(mean, variance).
pub fn gaussian_sample<R: Rng + ?Sized>(rng: &mut R, mean: f64, variance: f64) -> Result<f64> {
    if !(variance > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "variance must be positive, got {variance}"
        )));
    }
    let normal = Normal::new(mean, variance.sqrt())
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    Ok(normal.sample(rng))
}

/// Deterministic per-stream seed: the (index+1)-th output of a SplitMix64
/// sequence started at `base`. Streams are independent of execution order.
pub fn stream_seed(base: u64, index: u64) -> u64 {
    const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;
    let mut z = base.wrapping_add(GOLDEN.wrapping_mul(index.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The RNG stream for trajectory `index` of a run seeded with `base`.
pub fn stream_rng(base: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(stream_seed(base, index))
}
