//! Sequential coordinate measurements of environment modes and the
//! resulting collapse of the cat superposition.
//!
//! Each measured coordinate y multiplies the two branch probabilities by
//! the Gaussian kernels exp(−(y ± α√2)²) and renormalizes. Probabilities
//! live in log space: after ~10⁴ measurements the suppressed branch falls
//! below e^(−16) and keeps shrinking, so raw products would eventually
//! underflow. The log-odds ("health") H = ln(p⁺/p⁻) stays exact in this
//! representation even when p⁻ underflows as a probability, and obeys the
//! closed form H = −4α√2·Σyⱼ.

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::{gaussian_sample, log_sum_exp, stream_rng, stream_seed};

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Branch state after k measured environment modes.
///
/// The "+" branch is the alternative whose kernel exp(−(y + α√2)²) peaks
/// at negative coordinates; the sign conventions follow the collapse
/// recurrence and its closed form, under which H → +∞ means collapse onto
/// the "+" branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollapseState {
    measured: usize,
    log_p_plus: f64,
    log_p_minus: f64,
    alpha: f64,
    sum_y: f64,
}

impl CollapseState {
    /// Symmetric initial state: p⁺ = p⁻ = 1/2, H = 0.
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "mode amplitude must be positive, got {alpha}"
            )));
        }
        let half = 0.5f64.ln();
        Ok(Self {
            measured: 0,
            log_p_plus: half,
            log_p_minus: half,
            alpha,
            sum_y: 0.0,
        })
    }

    pub fn measured(&self) -> usize {
        self.measured
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn sum_y(&self) -> f64 {
        self.sum_y
    }

    pub fn log_p_plus(&self) -> f64 {
        self.log_p_plus
    }

    pub fn log_p_minus(&self) -> f64 {
        self.log_p_minus
    }

    pub fn p_plus(&self) -> f64 {
        self.log_p_plus.exp()
    }

    pub fn p_minus(&self) -> f64 {
        self.log_p_minus.exp()
    }

    /// Log-odds H = ln(p⁺/p⁻) of the "+" branch; the collapse level.
    pub fn health(&self) -> f64 {
        self.log_p_plus - self.log_p_minus
    }

    /// Draws the next coordinate from the predictive mixture
    /// p⁺·N(−α√2, 1/2) + p⁻·N(+α√2, 1/2), the distribution the state
    /// itself assigns to the upcoming measurement.
    pub fn sample_next<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let center = self.alpha * SQRT_2;
        let mean = if rng.gen::<f64>() < self.p_plus() {
            -center
        } else {
            center
        };
        gaussian_sample(rng, mean, 0.5).expect("variance 1/2 is positive")
    }

    /// Absorbs one measured coordinate: multiplies each branch by its
    /// Gaussian kernel and renormalizes in log space. Equivalent closed
    /// form: H ← H − 4√2·α·y.
    pub fn bayes_update(&self, y: f64) -> Self {
        let center = self.alpha * SQRT_2;
        let plus = self.log_p_plus - (y + center) * (y + center);
        let minus = self.log_p_minus - (y - center) * (y - center);
        let norm = log_sum_exp(plus, minus);
        Self {
            measured: self.measured + 1,
            log_p_plus: plus - norm,
            log_p_minus: minus - norm,
            alpha: self.alpha,
            sum_y: self.sum_y + y,
        }
    }
}

/// One collapse experiment: the measured coordinates plus the p⁺ and
/// health series, both including the pristine m = 0 point.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    seed: u64,
    ys: Vec<f64>,
    p_plus: Vec<f64>,
    health: Vec<f64>,
}

impl Trajectory {
    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    /// p⁺ after each measurement; entry 0 is the initial 1/2.
    pub fn p_plus(&self) -> &[f64] {
        &self.p_plus
    }

    /// Health after each measurement; entry 0 is the initial 0.
    pub fn health(&self) -> &[f64] {
        &self.health
    }

    pub fn steps(&self) -> usize {
        self.ys.len()
    }

    pub fn final_p_plus(&self) -> f64 {
        *self.p_plus.last().expect("series holds the m = 0 point")
    }

    pub fn final_health(&self) -> f64 {
        *self.health.last().expect("series holds the m = 0 point")
    }

    /// First measurement count at which max(p⁺, p⁻) reaches `threshold`,
    /// if it ever does.
    pub fn collapse_time(&self, threshold: f64) -> Option<usize> {
        self.p_plus
            .iter()
            .position(|&p| p.max(1.0 - p) >= threshold)
    }
}

/// Runs one trajectory of `m_max` sample-and-update steps; fully
/// deterministic given the seed.
pub fn run_trajectory(alpha: f64, m_max: usize, seed: u64) -> Result<Trajectory> {
    let mut state = CollapseState::new(alpha)?;
    let mut rng = stream_rng(seed, 0);
    let mut ys = Vec::with_capacity(m_max);
    let mut p_plus = Vec::with_capacity(m_max + 1);
    let mut health = Vec::with_capacity(m_max + 1);
    p_plus.push(state.p_plus());
    health.push(state.health());
    for _ in 0..m_max {
        let y = state.sample_next(&mut rng);
        state = state.bayes_update(y);
        ys.push(y);
        p_plus.push(state.p_plus());
        health.push(state.health());
    }
    Ok(Trajectory {
        seed,
        ys,
        p_plus,
        health,
    })
}

/// Runs `count` independent trajectories in parallel. Trajectory i uses
/// the stream seed derived from (seed, i), so the result is identical for
/// any thread schedule; the returned order follows the index.
pub fn ensemble(alpha: f64, m_max: usize, count: usize, seed: u64) -> Result<Vec<Trajectory>> {
    if count == 0 {
        return Err(Error::InvalidParameter(
            "ensemble needs at least one trajectory".into(),
        ));
    }
    CollapseState::new(alpha)?;
    (0..count)
        .into_par_iter()
        .map(|i| run_trajectory(alpha, m_max, stream_seed(seed, i as u64)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_state_is_symmetric() {
        let state = CollapseState::new(0.01).unwrap();
        assert_eq!(state.p_plus(), 0.5);
        assert_eq!(state.p_minus(), 0.5);
        assert_eq!(state.health(), 0.0);
        assert_eq!(state.measured(), 0);
        // Closed form agrees at the base point: sum_y = 0.
        assert_eq!(-4.0 * 0.01 * SQRT_2 * state.sum_y(), 0.0);
    }

    #[test]
    fn initial_state_rejects_nonpositive_alpha() {
        assert!(CollapseState::new(0.0).is_err());
        assert!(CollapseState::new(-0.01).is_err());
        assert!(CollapseState::new(f64::NAN).is_err());
    }

    #[test]
    fn update_at_symmetric_point_changes_nothing() {
        let state = CollapseState::new(0.01).unwrap();
        let updated = state.bayes_update(0.0);
        assert_eq!(updated.p_plus(), 0.5);
        assert_eq!(updated.health(), 0.0);
        assert_eq!(updated.measured(), 1);
    }

    #[test]
    fn update_from_even_odds_matches_logistic_increment() {
        let state = CollapseState::new(0.01).unwrap();
        let updated = state.bayes_update(-1.0);
        // ΔH = −4√2·0.01·(−1) ≈ 0.0565685; p⁺ = logistic(ΔH).
        assert!((updated.health() - 0.05656854249492381).abs() < 1e-15);
        assert!((updated.p_plus() - 0.5141383655939695).abs() < 1e-12);
    }

    #[test]
    fn update_from_skewed_odds_matches_closed_form() {
        // Reach p = (0.9, 0.1) exactly by one engineered update, then
        // check the next update against H = ln 9 − 4√2·α·y.
        let alpha = 0.01;
        let state = CollapseState::new(alpha).unwrap();
        let y_star = -(9.0f64.ln()) / (4.0 * SQRT_2 * alpha);
        let skewed = state.bayes_update(y_star);
        assert!((skewed.p_plus() - 0.9).abs() < 1e-12);

        let updated = skewed.bayes_update(0.5);
        assert!((updated.health() - 2.1689403060887575).abs() < 1e-12);
        assert!((updated.p_plus() - 0.8974254596221108).abs() < 1e-12);
    }

    #[test]
    fn health_from_running_sum() {
        let alpha = 0.01;
        let mut state = CollapseState::new(alpha).unwrap();
        let mut rng = stream_rng(11, 0);
        for _ in 0..2000 {
            let y = state.sample_next(&mut rng);
            state = state.bayes_update(y);
        }
        let closed_form = -4.0 * alpha * SQRT_2 * state.sum_y();
        assert!(
            (state.health() - closed_form).abs() <= 1e-9,
            "gap {}",
            state.health() - closed_form
        );
        // Branch probabilities stay normalized.
        assert!((state.p_plus() + state.p_minus() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn health_twelve_corresponds_to_near_certainty() {
        let alpha = 0.01;
        let state = CollapseState::new(alpha).unwrap();
        // One engineered measurement carrying the whole sum Σy = −212.132.
        let collapsed = state.bayes_update(-212.132);
        assert!((collapsed.health() - 11.999998056533178).abs() < 1e-9);
        assert!((collapsed.p_plus() - 0.9999938558253978).abs() < 1e-9);
    }

    #[test]
    fn collapsed_plus_branch_samples_near_negative_center() {
        // Collapse hard onto "+" and check the sample moments of the
        // remaining pure kernel N(−α√2, 1/2).
        let alpha = 0.01;
        let mut state = CollapseState::new(alpha).unwrap();
        state = state.bayes_update(-1e6);
        assert_eq!(state.p_plus(), 1.0);

        let mut rng = stream_rng(3, 0);
        let n = 100_000;
        let draws: Vec<f64> = (0..n).map(|_| state.sample_next(&mut rng)).collect();
        let mean = draws.iter().sum::<f64>() / n as f64;
        let var = draws.iter().map(|y| (y - mean) * (y - mean)).sum::<f64>() / n as f64;
        assert!((mean + 0.014142135623730952).abs() < 0.01, "mean {mean}");
        assert!((var - 0.5).abs() < 0.02, "variance {var}");
    }

    #[test]
    fn zero_alpha_limit_mixture_is_a_single_gaussian() {
        // Branches coincide as α → 0: the mixture mean goes to 0 and the
        // variance to 1/2 regardless of the branch probabilities.
        let alpha = 1e-12;
        let state = CollapseState::new(alpha).unwrap();
        let mut rng = stream_rng(5, 0);
        let n = 100_000;
        let draws: Vec<f64> = (0..n).map(|_| state.sample_next(&mut rng)).collect();
        let mean = draws.iter().sum::<f64>() / n as f64;
        let var = draws.iter().map(|y| (y - mean) * (y - mean)).sum::<f64>() / n as f64;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 0.5).abs() < 0.02, "variance {var}");
    }

    #[test]
    fn trajectory_shape_and_determinism() {
        let a = run_trajectory(0.01, 500, 42).unwrap();
        assert_eq!(a.steps(), 500);
        assert_eq!(a.p_plus().len(), 501);
        assert_eq!(a.health().len(), 501);
        assert_eq!(a.p_plus()[0], 0.5);
        assert_eq!(a.health()[0], 0.0);

        let b = run_trajectory(0.01, 500, 42).unwrap();
        assert_eq!(a, b);

        let c = run_trajectory(0.01, 500, 43).unwrap();
        assert_ne!(a.ys(), c.ys());
    }

    #[test]
    fn empty_trajectory_is_the_initial_point() {
        let t = run_trajectory(0.01, 0, 7).unwrap();
        assert_eq!(t.steps(), 0);
        assert_eq!(t.p_plus(), &[0.5]);
        assert_eq!(t.health(), &[0.0]);
    }

    #[test]
    fn ensemble_matches_run_trajectory_and_is_order_independent() {
        let ens = ensemble(0.01, 200, 4, 42).unwrap();
        assert_eq!(ens.len(), 4);
        for (i, t) in ens.iter().enumerate() {
            let expected = run_trajectory(0.01, 200, stream_seed(42, i as u64)).unwrap();
            assert_eq!(*t, expected);
        }
        // Single-trajectory ensemble degenerates to run_trajectory.
        let single = ensemble(0.01, 200, 1, 42).unwrap();
        assert_eq!(single[0], run_trajectory(0.01, 200, stream_seed(42, 0)).unwrap());
    }

    #[test]
    fn ensemble_rejects_zero_count() {
        assert!(ensemble(0.01, 10, 0, 1).is_err());
    }

    #[test]
    fn martingale_one_step_mean_preserves_p_plus() {
        // p⁺ is a martingale under the predictive mixture.
        let alpha = 0.01;
        let base = CollapseState::new(alpha)
            .unwrap()
            .bayes_update(-(9.0f64.ln()) / (4.0 * SQRT_2 * alpha)); // p⁺ = 0.9
        let mut rng = stream_rng(17, 0);
        let n = 10_000;
        let updated: Vec<f64> = (0..n)
            .map(|_| {
                let y = base.sample_next(&mut rng);
                base.bayes_update(y).p_plus()
            })
            .collect();
        let mean = updated.iter().sum::<f64>() / n as f64;
        let sd = (updated.iter().map(|p| (p - mean) * (p - mean)).sum::<f64>() / n as f64).sqrt();
        let standard_error = sd / (n as f64).sqrt();
        assert!(
            (mean - base.p_plus()).abs() <= 3.0 * standard_error,
            "mean {mean} vs p⁺ {} (SE {standard_error})",
            base.p_plus()
        );
    }

    #[test]
    fn long_run_drift_and_spread_match_the_random_walk() {
        // |H(m_max)| concentrates near 8·m_max·α² = 16 with spread ≈ 5.7.
        let finals: Vec<f64> = (0..60)
            .map(|i| run_trajectory(0.01, 20_000, stream_seed(1000, i)).unwrap().final_health())
            .collect();
        let mean_abs = finals.iter().map(|h| h.abs()).sum::<f64>() / finals.len() as f64;
        assert!(
            (mean_abs - 16.0).abs() < 4.0,
            "mean |H| = {mean_abs}, expected near 16"
        );
        let plus_fraction =
            finals.iter().filter(|&&h| h > 0.0).count() as f64 / finals.len() as f64;
        assert!((0.25..=0.75).contains(&plus_fraction), "fraction {plus_fraction}");
    }

    proptest::proptest! {
        #[test]
        fn branch_probabilities_stay_normalized(ys in proptest::collection::vec(-3.0..3.0f64, 1..50)) {
            let mut state = CollapseState::new(0.05).unwrap();
            for y in ys {
                state = state.bayes_update(y);
                let total = state.p_plus() + state.p_minus();
                proptest::prop_assert!((total - 1.0).abs() <= 1e-12);
            }
        }

        #[test]
        fn negating_coordinates_mirrors_the_state(ys in proptest::collection::vec(-3.0..3.0f64, 1..50)) {
            let mut state = CollapseState::new(0.05).unwrap();
            let mut mirrored = CollapseState::new(0.05).unwrap();
            for y in ys {
                state = state.bayes_update(y);
                mirrored = mirrored.bayes_update(-y);
            }
            // The swap is exact: the kernels trade places bit-for-bit.
            proptest::prop_assert_eq!(state.log_p_plus(), mirrored.log_p_minus());
            proptest::prop_assert_eq!(state.log_p_minus(), mirrored.log_p_plus());
            proptest::prop_assert_eq!(state.health(), -mirrored.health());
            proptest::prop_assert_eq!(state.sum_y(), -mirrored.sum_y());
        }
    }
}
