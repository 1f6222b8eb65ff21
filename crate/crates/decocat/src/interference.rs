//! Two interfering alternatives entangled with an environment: overlap
//! amplitudes, the effective two-qubit representation, Schmidt spectrum,
//! Schmidt number, and interference visibility.
//!
//! For a superposition (|φ₁,ψ₁⟩ + |φ₂,ψ₂⟩)/√(2 + 2 Re(q₁q₂)) with
//! q₁ = ⟨φ₁|φ₂⟩ and q₂ = ⟨ψ₁|ψ₂⟩, every correlation quantity reduces to
//! closed forms in the single invariant Δ = (1−|q₁|²)(1−|q₂|²)/(2+2Re q₁q₂)².

use num_complex::Complex64;

use crate::amplitude::ComplexAmplitude;
use crate::error::{Error, Result};

/// Slack for |q| ≤ 1 and Δ ∈ [0, 1/4] checks; floating-point noise near the
/// boundaries must not raise domain errors.
const BOUNDARY_SLACK: f64 = 1e-12;

/// Normalizations at or below this are treated as destructive interference.
const DEGENERATE_NORM: f64 = 1e-300;

/// Overlap amplitudes of the two alternatives: `system` = ⟨φ₁|φ₂⟩ and
/// `environment` = ⟨ψ₁|ψ₂⟩. Both have magnitude at most 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapPair {
    system: Complex64,
    environment: Complex64,
}

impl OverlapPair {
    pub fn new(system: Complex64, environment: Complex64) -> Result<Self> {
        for q in [system, environment] {
            let magnitude = q.norm();
            if !(magnitude <= 1.0 + BOUNDARY_SLACK) {
                return Err(Error::InvalidOverlap(magnitude));
            }
        }
        Ok(Self {
            system,
            environment,
        })
    }

    /// Both overlaps real, as for opposite-phase coherent states.
    pub fn real(system: f64, environment: f64) -> Result<Self> {
        Self::new(Complex64::new(system, 0.0), Complex64::new(environment, 0.0))
    }

    pub fn system(&self) -> Complex64 {
        self.system
    }

    pub fn environment(&self) -> Complex64 {
        self.environment
    }
}

/// Unnormalized amplitudes of the superposition in the orthogonalized
/// two-qubit basis, plus their squared norm 2 + 2·Re(q₁q₂).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitCoefficients {
    pub c00: Complex64,
    pub c01: Complex64,
    pub c10: Complex64,
    pub c11: Complex64,
    pub norm_sqr: f64,
}

impl TwoQubitCoefficients {
    pub fn coefficient_norm_sqr(&self) -> f64 {
        self.c00.norm_sqr() + self.c01.norm_sqr() + self.c10.norm_sqr() + self.c11.norm_sqr()
    }
}

/// Schmidt data of a two-alternative bipartite state: weights are returned
/// descending (λ₀ ≥ λ₁), so the visibility λ₀ − λ₁ is non-negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchmidtSummary {
    pub delta: f64,
    pub lambda0: f64,
    pub lambda1: f64,
    /// Effective mode count K = 1/(λ₀² + λ₁²) ∈ [1, 2].
    pub schmidt_number: f64,
    /// Fringe contrast V = λ₀ − λ₁ ∈ [0, 1].
    pub visibility: f64,
}

/// Overlap ⟨α|−α⟩ = exp(−2|α|²) of opposite-phase coherent states.
///
/// The overlap is real and positive for every complex α; it is returned as
/// a complex number because it enters [`OverlapPair`] slots.
pub fn coherent_overlap(alpha: ComplexAmplitude) -> Complex64 {
    Complex64::new((-2.0 * alpha.norm_sqr()).exp(), 0.0)
}

/// Amplitudes of the superposition in the orthogonalized two-qubit basis:
/// c₀₀ = 1 + q₁q₂, c₀₁ = q₁√(1−|q₂|²), c₁₀ = q₂√(1−|q₁|²),
/// c₁₁ = √((1−|q₁|²)(1−|q₂|²)).
pub fn two_qubit_coefficients(pair: &OverlapPair) -> TwoQubitCoefficients {
    let q1 = pair.system();
    let q2 = pair.environment();
    // Clamp guards the sqrt against |q| = 1 + ε inside the accepted slack.
    let r1 = (1.0 - q1.norm_sqr()).max(0.0);
    let r2 = (1.0 - q2.norm_sqr()).max(0.0);
    TwoQubitCoefficients {
        c00: Complex64::new(1.0, 0.0) + q1 * q2,
        c01: q1 * r2.sqrt(),
        c10: q2 * r1.sqrt(),
        c11: Complex64::new((r1 * r2).sqrt(), 0.0),
        norm_sqr: 2.0 + 2.0 * (q1 * q2).re,
    }
}

/// The entanglement invariant Δ = (1−|q₁|²)(1−|q₂|²)/(2 + 2·Re(q₁q₂))²,
/// always in [0, 1/4].
///
/// Fails when the normalization vanishes (q₁q₂ → −1): the two branches
/// interfere destructively and no state exists.
pub fn delta(pair: &OverlapPair) -> Result<f64> {
    let q1 = pair.system();
    let q2 = pair.environment();
    let norm_sqr = 2.0 + 2.0 * (q1 * q2).re;
    if norm_sqr <= DEGENERATE_NORM {
        return Err(Error::DegenerateNormalization);
    }
    let r1 = (1.0 - q1.norm_sqr()).max(0.0);
    let r2 = (1.0 - q2.norm_sqr()).max(0.0);
    Ok((r1 * r2 / (norm_sqr * norm_sqr)).min(0.25))
}

/// Schmidt weights, Schmidt number and visibility from Δ:
/// λ = (1 ± √(1−4Δ))/2, K = 1/(1−2Δ), V = λ₀ − λ₁ = √(1−4Δ).
pub fn schmidt_summary(delta: f64) -> Result<SchmidtSummary> {
    if !(-BOUNDARY_SLACK..=0.25 + BOUNDARY_SLACK).contains(&delta) {
        return Err(Error::DeltaOutOfRange(delta));
    }
    let delta = delta.clamp(0.0, 0.25);
    let visibility = (1.0 - 4.0 * delta).max(0.0).sqrt();
    Ok(SchmidtSummary {
        delta,
        lambda0: 0.5 * (1.0 + visibility),
        lambda1: 0.5 * (1.0 - visibility),
        schmidt_number: 1.0 / (1.0 - 2.0 * delta),
        visibility,
    })
}

/// Visibility in the clearly-distinguishable regime (system overlap ≈ 0):
/// V = |q₂|, the magnitude of the environment overlap.
pub fn environment_visibility(environment_overlap: Complex64) -> f64 {
    environment_overlap.norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn real_pair(q1: f64, q2: f64) -> OverlapPair {
        OverlapPair::real(q1, q2).unwrap()
    }

    #[test]
    fn coherent_overlap_values() {
        assert_eq!(coherent_overlap(ComplexAmplitude::real(0.0)).re, 1.0);
        let near_one = coherent_overlap(ComplexAmplitude::real(0.01));
        assert!((near_one.re - 0.9998000199986667).abs() < 1e-15);
        assert_eq!(near_one.im, 0.0);
        let tiny = coherent_overlap(ComplexAmplitude::real(3.4));
        assert!((tiny.re - 9.101470764487935e-11).abs() < 1e-24);
        // |α|² drives the overlap regardless of phase.
        let rotated = coherent_overlap(ComplexAmplitude::new(0.0, 3.4));
        assert_eq!(rotated, tiny);
    }

    #[test]
    fn two_qubit_coefficients_orthogonal_alternatives() {
        let c = two_qubit_coefficients(&real_pair(0.0, 0.0));
        assert_eq!(c.c00, Complex64::new(1.0, 0.0));
        assert_eq!(c.c01, Complex64::new(0.0, 0.0));
        assert_eq!(c.c10, Complex64::new(0.0, 0.0));
        assert_eq!(c.c11, Complex64::new(1.0, 0.0));
        assert_eq!(c.norm_sqr, 2.0);
    }

    #[test]
    fn two_qubit_coefficients_identical_alternatives() {
        let c = two_qubit_coefficients(&real_pair(1.0, 1.0));
        assert_eq!(c.c00, Complex64::new(2.0, 0.0));
        assert_eq!(c.c01.norm(), 0.0);
        assert_eq!(c.c10.norm(), 0.0);
        assert_eq!(c.c11.norm(), 0.0);
        assert_eq!(c.norm_sqr, 4.0);
    }

    #[test]
    fn two_qubit_coefficients_half_overlap() {
        let c = two_qubit_coefficients(&real_pair(0.5, 0.0));
        assert_eq!(c.c00, Complex64::new(1.0, 0.0));
        assert_eq!(c.c01, Complex64::new(0.5, 0.0));
        assert_eq!(c.c10, Complex64::new(0.0, 0.0));
        assert!((c.c11.re - 0.8660254037844386).abs() < 1e-15);
        assert_eq!(c.norm_sqr, 2.0);
    }

    #[test]
    fn overlap_pair_rejects_magnitude_above_one() {
        assert!(OverlapPair::real(1.0 + 1e-6, 0.0).is_err());
        assert!(OverlapPair::new(Complex64::new(0.8, 0.8), Complex64::new(0.0, 0.0)).is_err());
        // Slack admits boundary noise.
        assert!(OverlapPair::real(1.0 + 1e-13, 0.0).is_ok());
    }

    #[test]
    fn delta_known_values() {
        assert_eq!(delta(&real_pair(0.0, 0.0)).unwrap(), 0.25);
        assert_eq!(delta(&real_pair(1.0, 0.3)).unwrap(), 0.0);
        assert_eq!(delta(&real_pair(0.5, 0.0)).unwrap(), 0.1875);
    }

    #[test]
    fn delta_rejects_destructive_interference() {
        let pair = OverlapPair::new(Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)).unwrap();
        assert!(matches!(delta(&pair), Err(Error::DegenerateNormalization)));
    }

    #[test]
    fn schmidt_summary_known_values() {
        let pure = schmidt_summary(0.0).unwrap();
        assert_eq!((pure.lambda0, pure.lambda1), (1.0, 0.0));
        assert_eq!(pure.schmidt_number, 1.0);
        assert_eq!(pure.visibility, 1.0);

        let maximal = schmidt_summary(0.25).unwrap();
        assert_eq!((maximal.lambda0, maximal.lambda1), (0.5, 0.5));
        assert_eq!(maximal.schmidt_number, 2.0);
        assert_eq!(maximal.visibility, 0.0);

        let mid = schmidt_summary(0.1875).unwrap();
        assert!((mid.lambda0 - 0.75).abs() < 1e-15);
        assert!((mid.lambda1 - 0.25).abs() < 1e-15);
        assert!((mid.schmidt_number - 1.6).abs() < 1e-15);
        assert!((mid.visibility - 0.5).abs() < 1e-15);
        // Internal consistency V = sqrt(1 - 4Δ).
        assert!((mid.visibility - (1.0f64 - 0.75).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn schmidt_summary_clamps_boundary_noise_and_rejects_beyond() {
        assert!(schmidt_summary(-5e-13).is_ok());
        assert!(schmidt_summary(0.25 + 5e-13).is_ok());
        assert!(matches!(schmidt_summary(-1e-9), Err(Error::DeltaOutOfRange(_))));
        assert!(matches!(schmidt_summary(0.2501), Err(Error::DeltaOutOfRange(_))));
    }

    #[test]
    fn environment_visibility_values() {
        assert_eq!(environment_visibility(Complex64::new(1.0, 0.0)), 1.0);
        assert_eq!(environment_visibility(Complex64::new(0.0, 0.0)), 0.0);
        let v = environment_visibility(Complex64::new((-2.2f64).exp(), 0.0));
        assert!((v - 0.11080315836233387).abs() < 1e-15);
    }

    #[test]
    fn three_route_visibility_agreement() {
        // With the system overlap suppressed, the Schmidt route reduces to
        // the environment-overlap magnitude.
        for k in 0..=100 {
            let q2 = k as f64 / 100.0;
            let pair = real_pair(1e-8, q2);
            let summary = schmidt_summary(delta(&pair).unwrap()).unwrap();
            assert!(
                (summary.visibility - q2).abs() <= 2e-8,
                "q2 = {q2}: Schmidt route {} vs overlap {q2}",
                summary.visibility
            );
        }
    }

    #[test]
    fn visibility_monotone_in_environment_overlap() {
        let mut last_v = -1.0;
        let mut last_k = 3.0;
        for k in 0..=50 {
            let q2 = k as f64 / 50.0;
            let summary = schmidt_summary(delta(&real_pair(0.0, q2)).unwrap()).unwrap();
            assert!(summary.visibility > last_v);
            assert!(summary.schmidt_number < last_k);
            last_v = summary.visibility;
            last_k = summary.schmidt_number;
        }
    }

    proptest! {
        #[test]
        fn coefficient_norm_identity_holds(
            r1 in 0.0..1.0f64, t1 in 0.0..std::f64::consts::TAU,
            r2 in 0.0..1.0f64, t2 in 0.0..std::f64::consts::TAU,
        ) {
            let q1 = Complex64::from_polar(r1, t1);
            let q2 = Complex64::from_polar(r2, t2);
            let pair = OverlapPair::new(q1, q2).unwrap();
            let c = two_qubit_coefficients(&pair);
            prop_assert!((c.coefficient_norm_sqr() - c.norm_sqr).abs() <= 1e-12);
        }

        #[test]
        fn schmidt_relations_hold(
            r1 in 0.0..1.0f64, t1 in 0.0..std::f64::consts::TAU,
            r2 in 0.0..1.0f64, t2 in 0.0..std::f64::consts::TAU,
        ) {
            let pair = OverlapPair::new(
                Complex64::from_polar(r1, t1),
                Complex64::from_polar(r2, t2),
            ).unwrap();
            let d = delta(&pair).unwrap();
            let s = schmidt_summary(d).unwrap();
            prop_assert!((s.lambda0 + s.lambda1 - 1.0).abs() <= 1e-12);
            prop_assert!(s.lambda0 >= s.lambda1 && s.lambda1 >= 0.0);
            // Effective mode count recomputed from the weights.
            let k_from_weights = 1.0 / (s.lambda0 * s.lambda0 + s.lambda1 * s.lambda1);
            prop_assert!((k_from_weights - s.schmidt_number).abs() <= 1e-12);
            prop_assert!((s.visibility - (s.lambda0 - s.lambda1)).abs() <= 1e-12);
            prop_assert!((1.0..=2.0 + 1e-12).contains(&s.schmidt_number));
            prop_assert!((0.0..=1.0 + 1e-12).contains(&s.visibility));
        }
    }
}
