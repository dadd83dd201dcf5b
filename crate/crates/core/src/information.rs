//! Entropies and mutual information, all in bits.

use crate::error::{Error, Result};
use crate::qstate::XState;

/// Largest overshoot of `theta` above one that is still clamped rather than rejected.
pub const THETA_SLACK: f64 = 1e-9;

/// Largest negative probability accepted (and treated as zero).
pub const PROBABILITY_SLACK: f64 = 1e-12;

/// `-x log2 x`, with `0 log 0 = 0`.
pub(crate) fn neg_xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

/// Entropy of a qubit whose Bloch vector has length `theta`, without domain checks.
pub(crate) fn binary_entropy_clamped(theta: f64) -> f64 {
    let t = theta.clamp(0.0, 1.0);
    neg_xlog2x(0.5 * (1.0 + t)) + neg_xlog2x(0.5 * (1.0 - t))
}

/// `H((1 + theta) / 2)`: the entropy of a qubit with eigenvalues `(1 ± theta) / 2`.
pub fn binary_entropy_theta(theta: f64) -> Result<f64> {
    if !(-THETA_SLACK..=1.0 + THETA_SLACK).contains(&theta) {
        return Err(Error::Domain {
            what: "theta",
            value: theta,
        });
    }
    Ok(binary_entropy_clamped(theta))
}

/// Shannon entropy `-Σ p log2 p` of a probability vector.
pub fn shannon_entropy(p: &[f64]) -> Result<f64> {
    if let Some(&bad) = p
        .iter()
        .find(|&&x| !x.is_finite() || x < -PROBABILITY_SLACK)
    {
        return Err(Error::Domain {
            what: "probability",
            value: bad,
        });
    }
    Ok(p.iter().map(|&x| neg_xlog2x(x)).sum())
}

/// Entropies of the two single-qubit marginals, `(S(rho_A), S(rho_B))`.
pub fn marginal_entropies(state: &XState) -> (f64, f64) {
    let [r11, r22, r33, r44] = state.populations();
    let s_a = neg_xlog2x(r11 + r22) + neg_xlog2x(r33 + r44);
    let s_b = neg_xlog2x(r11 + r33) + neg_xlog2x(r22 + r44);
    (s_a, s_b)
}

/// Von Neumann entropy of the full two-qubit state.
pub fn joint_entropy(state: &XState) -> f64 {
    state
        .spectrum()
        .values()
        .iter()
        .map(|&l| neg_xlog2x(l))
        .sum()
}

/// `I = S(rho_A) + S(rho_B) - S(rho)`.
pub fn mutual_information(state: &XState) -> f64 {
    let (s_a, s_b) = marginal_entropies(state);
    s_a + s_b - joint_entropy(state)
}
