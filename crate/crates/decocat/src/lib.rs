//! decocat — coherence, interference visibility, and measurement-induced
//! collapse of multimode Schrödinger-cat states.
//!
//! A Schrödinger-cat state is the normalized superposition of two
//! opposite-phase product coherent states. This crate provides:
//!
//! - [`interference`]: the two-alternative machinery — overlap amplitudes,
//!   the effective two-qubit representation, Schmidt weights, Schmidt
//!   number, and interference visibility, all in closed form.
//! - [`cat`]: coordinate/momentum wavefunctions of n-mode cats, fringe
//!   marginals with an environment overlap, the effective two-mode
//!   reduction (a, b), and the visibility law V = exp(−2mα²) for
//!   identical modes.
//! - [`measurement`]: sequential coordinate measurements of environment
//!   modes, log-space branch probabilities, the health (log-odds)
//!   parameter, and reproducible trajectory ensembles.
//! - [`numerics`]: trapezoid quadrature, a continuum-normalized DFT,
//!   log-sum-exp, Gaussian sampling, and seed mixing for parallel RNG
//!   streams.
//! - [`verify`]: self-checks bundling the quadrature, duality, visibility
//!   route-equivalence, health closed-form, and martingale oracles.
//! - [`cli`] and [`output`]: the `decocat` command-line front end and its
//!   CSV writers.
//!
//! Every quantity is dimensionless (oscillator units, ħ = 1). Start with
//! the runnable examples: `cargo run --example fringes`,
//! `--example visibility_dynamics`, `--example collapse`,
//! `--example schmidt_relations`, `--example wavefunction_duality`.

pub mod amplitude;
pub mod cat;
pub mod cli;
pub mod error;
pub mod interference;
pub mod measurement;
pub mod numerics;
pub mod output;
pub mod verify;

pub use amplitude::ComplexAmplitude;
pub use cat::{
    cat_wavefunction_p, cat_wavefunction_x, coherent_wavefunction_p, coherent_wavefunction_x,
    effective_params, effective_summary, env_visibility_identical, fringe_marginal,
    fringe_visibility, total_momentum_marginal, EffectiveCat, GridDensity, MultimodeCat,
};
pub use error::{Error, Result};
pub use interference::{
    coherent_overlap, delta, environment_visibility, schmidt_summary, two_qubit_coefficients,
    OverlapPair, SchmidtSummary, TwoQubitCoefficients,
};
pub use measurement::{ensemble, run_trajectory, CollapseState, Trajectory};
pub use numerics::GridSpec;
