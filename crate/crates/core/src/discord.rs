//! Classical correlation and quantum discord from the analytic minimization.
//!
//! The conditional entropy `p0 H(θ) + p1 H(θ')` is even in `k - l`, so it is
//! compared at the endpoint `k = 1` (measuring B in the computational basis)
//! and at `k = 1/2`. At `k = 1/2` both outcomes share `θ`, and the entropy is
//! smallest where Θ is largest; over the circle of transverse directions
//! `4m = sin²φ`, `8n = -sin 2φ` that maximum is `(|rho14| + |rho23|)^2`.

use std::fmt;

use crate::error::{Error, Result};
use crate::information::{binary_entropy_clamped, marginal_entropies, mutual_information};
use crate::measurement::{self, Kmn, ThetaPair, DEGENERATE_PROBABILITY};
use crate::qstate::XState;

/// Discord values in `[-DISCORD_FLOOR, 0)` are reported as zero.
pub const DISCORD_FLOOR: f64 = 1e-9;

/// Discord below `-NEGATIVE_DISCORD_LIMIT` is an error.
pub const NEGATIVE_DISCORD_LIMIT: f64 = 1e-6;

/// Tolerance for [`special_case_thetas`] preconditions.
pub const SYMMETRY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    ZBasis,
    XyPlane,
    SpecialThetaSup,
}

impl Branch {
    pub fn label(&self) -> &'static str {
        match self {
            Branch::ZBasis => "z-basis",
            Branch::XyPlane => "xy-plane",
            Branch::SpecialThetaSup => "special-theta-sup",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// An analytic candidate measurement together with the conditional entropy it attains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CandidateBranch {
    pub branch: Branch,
    pub kmn: Kmn,
    /// Azimuth of the transverse measurement direction, for [`Branch::XyPlane`].
    pub phi: Option<f64>,
    /// Conditional entropy in bits.
    pub value: f64,
}

/// θ-values of the restricted family `rho11 = rho44`, `rho22 = rho33`, real coherences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialThetas {
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
    pub theta4: f64,
}

impl SpecialThetas {
    pub fn theta_sup(&self) -> f64 {
        self.theta1.max(self.theta2).max(self.theta3)
    }

    pub fn min_conditional_entropy(&self) -> f64 {
        binary_entropy_clamped(self.theta_sup())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationReport {
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub quantum_discord: f64,
    pub concurrence: f64,
    /// The candidate attaining the minimal conditional entropy.
    pub branch: CandidateBranch,
    pub candidates: Vec<CandidateBranch>,
    /// θ, θ' at the winning measurement; `None` if one outcome has zero probability.
    pub thetas: Option<ThetaPair>,
}

fn z_basis_candidate(state: &XState) -> CandidateBranch {
    let [r11, r22, r33, r44] = state.populations();
    let term = |diff: f64, p: f64| {
        if p < DEGENERATE_PROBABILITY {
            0.0
        } else {
            p * binary_entropy_clamped(diff.abs() / p)
        }
    };
    CandidateBranch {
        branch: Branch::ZBasis,
        kmn: Kmn::z_basis(),
        phi: None,
        value: term(r11 - r33, r11 + r33) + term(r22 - r44, r22 + r44),
    }
}

fn xy_plane_candidate(state: &XState) -> CandidateBranch {
    let [r11, r22, r33, r44] = state.populations();
    let w = state.rho14();
    let x = state.rho23();
    let big_theta = (w.norm() + x.norm()).powi(2);
    let a3 = r11 + r22 - r33 - r44;
    let theta = (a3 * a3 + 4.0 * big_theta).sqrt();
    // Θ(φ) = |w|² + |x|² + 2 Re(w x̄ e^{2iφ}) peaks where the phase cancels.
    let product = w * x.conj();
    let phi = if product.norm() > 0.0 {
        -0.5 * product.arg()
    } else {
        0.0
    };
    CandidateBranch {
        branch: Branch::XyPlane,
        kmn: Kmn::xy_plane(phi),
        phi: Some(phi),
        value: binary_entropy_clamped(theta),
    }
}

/// The two analytic candidates: z-basis first, then the best transverse measurement.
pub fn candidate_set(state: &XState) -> [CandidateBranch; 2] {
    [z_basis_candidate(state), xy_plane_candidate(state)]
}

/// Smallest candidate value; exact ties go to the z-basis branch.
pub fn min_conditional_entropy(state: &XState) -> CandidateBranch {
    let [z, xy] = candidate_set(state);
    if z.value <= xy.value {
        z
    } else {
        xy
    }
}

/// `C = S(rho_A) - min S(rho | {B_i})`.
pub fn classical_correlation(state: &XState) -> f64 {
    let (s_a, _) = marginal_entropies(state);
    s_a - min_conditional_entropy(state).value
}

pub fn quantum_discord(state: &XState) -> Result<f64> {
    floor_discord(mutual_information(state) - classical_correlation(state))
}

fn floor_discord(q: f64) -> Result<f64> {
    if q < -NEGATIVE_DISCORD_LIMIT {
        Err(Error::NegativeDiscord(q))
    } else if q < 0.0 {
        debug_assert!(q >= -DISCORD_FLOOR, "discord {q} below the rounding floor");
        Ok(0.0)
    } else {
        Ok(q)
    }
}

pub fn special_case_thetas(state: &XState) -> Result<SpecialThetas> {
    if !state.has_symmetric_form(SYMMETRY_TOL) {
        return Err(Error::NotSymmetric);
    }
    let w = state.rho14().re;
    let x = state.rho23().re;
    let [r11, r22, r33, r44] = state.populations();
    let theta3 = ((r11 + r44) - (r22 + r33)).abs().min(1.0);
    Ok(SpecialThetas {
        theta1: (2.0 * (w + x).abs()).min(1.0),
        theta2: (2.0 * (w - x).abs()).min(1.0),
        theta3,
        theta4: theta3,
    })
}

pub fn report(state: &XState) -> Result<CorrelationReport> {
    let candidates = candidate_set(state);
    let branch = min_conditional_entropy(state);
    let (s_a, _) = marginal_entropies(state);
    let mutual_information = mutual_information(state);
    let mut classical_correlation = s_a - branch.value;
    let raw_discord = mutual_information - classical_correlation;
    let quantum_discord = floor_discord(raw_discord)?;
    if quantum_discord != raw_discord {
        classical_correlation = mutual_information;
    }
    Ok(CorrelationReport {
        mutual_information,
        classical_correlation,
        quantum_discord,
        concurrence: state.concurrence(),
        branch,
        candidates: candidates.to_vec(),
        thetas: measurement::theta_pair(state, &branch.kmn).ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measurement::conditional_entropy_vn;
    use crate::qstate::{Bell, RawElements};
    use num_complex::Complex64;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() < tol, "{a} vs {b}");
    }

    fn state(pops: [f64; 4], rho14: f64, rho23: f64) -> XState {
        XState::new(RawElements {
            rho11: pops[0],
            rho22: pops[1],
            rho33: pops[2],
            rho44: pops[3],
            rho14: Complex64::new(rho14, 0.0),
            rho23: Complex64::new(rho23, 0.0),
        })
        .unwrap()
    }

    fn werner(a: f64) -> XState {
        let d = (1.0 - a) / 4.0;
        let o = (1.0 + a) / 4.0;
        state([d, o, o, d], 0.0, -a / 2.0)
    }

    #[test]
    fn phi_plus_candidates() {
        let [z, xy] = candidate_set(&XState::bell(Bell::PhiPlus));
        // measuring B in either basis leaves A pure
        assert_eq!(z.value, 0.0);
        assert_eq!(xy.value, 0.0);
        assert_eq!(
            min_conditional_entropy(&XState::bell(Bell::PhiPlus)).branch,
            Branch::ZBasis
        );
    }

    #[test]
    fn werner_candidates_coincide() {
        let a = 0.6;
        let [z, xy] = candidate_set(&werner(a));
        close(z.value, binary_entropy_clamped(a), 1e-14);
        close(xy.value, binary_entropy_clamped(a), 1e-14);
    }

    #[test]
    fn phi_plus_noise_minimum_is_z_basis() {
        for a in [0.1, 0.5, 0.9] {
            let s = state([a / 2.0, 0.0, 0.0, 1.0 - a / 2.0], a / 2.0, 0.0);
            let best = min_conditional_entropy(&s);
            assert_eq!(best.branch, Branch::ZBasis);
            assert_eq!(best.value, 0.0);
        }
    }

    #[test]
    fn psi_plus_noise_minimum_is_transverse() {
        let s = state([0.0, 0.25, 0.25, 0.5], 0.0, 0.25);
        let best = min_conditional_entropy(&s);
        assert_eq!(best.branch, Branch::XyPlane);
        close(best.value, 0.600_876_036_692_856, 1e-12);
    }

    #[test]
    fn maximally_mixed_ties_to_z_basis() {
        let best = min_conditional_entropy(&XState::maximally_mixed());
        assert_eq!(best.branch, Branch::ZBasis);
        assert_eq!(best.value, 1.0);
    }

    #[test]
    fn bell_values() {
        for bell in Bell::ALL {
            let r = report(&XState::bell(bell)).unwrap();
            close(r.mutual_information, 2.0, 1e-12);
            close(r.classical_correlation, 1.0, 1e-12);
            close(r.quantum_discord, 1.0, 1e-12);
            close(r.concurrence, 1.0, 1e-12);
        }
    }

    #[test]
    fn bell_mixture_keeps_unit_classical_correlation() {
        for i in 0..=10 {
            let a = i as f64 / 10.0;
            let s = state(
                [(1.0 - a) / 2.0, a / 2.0, a / 2.0, (1.0 - a) / 2.0],
                (1.0 - a) / 2.0,
                a / 2.0,
            );
            close(classical_correlation(&s), 1.0, 1e-12);
        }
    }

    #[test]
    fn werner_reference_values() {
        let r = report(&werner(0.5)).unwrap();
        close(r.mutual_information, 0.451_205_059_304_601_5, 1e-12);
        close(r.classical_correlation, 0.188_721_875_540_867_1, 1e-12);
        close(r.quantum_discord, 0.262_483_183_763_734_3, 1e-12);
        close(r.concurrence, 0.25, 1e-15);

        let s = werner(1.0 / 3.0);
        close(quantum_discord(&s).unwrap(), 0.125_814_583_693_911_4, 1e-12);
        assert!(s.concurrence() < 1e-15);
    }

    #[test]
    fn psi_plus_noise_report() {
        let r = report(&state([0.0, 0.25, 0.25, 0.5], 0.0, 0.25)).unwrap();
        close(r.mutual_information, 0.622_556_248_918_265_7, 1e-12);
        close(r.classical_correlation, 0.210_402_087_766_276_8, 1e-12);
        close(r.quantum_discord, 0.412_154_161_151_989, 1e-12);
        close(r.concurrence, 0.5, 1e-15);
        assert_eq!(r.branch.branch, Branch::XyPlane);
    }

    #[test]
    fn product_state_has_no_discord() {
        let (pa, pb) = (0.6, 0.7);
        let s = state(
            [
                pa * pb,
                pa * (1.0 - pb),
                (1.0 - pa) * pb,
                (1.0 - pa) * (1.0 - pb),
            ],
            0.0,
            0.0,
        );
        close(quantum_discord(&s).unwrap(), 0.0, 1e-12);
    }

    #[test]
    fn special_thetas() {
        let t = special_case_thetas(&werner(0.4)).unwrap();
        for v in [t.theta1, t.theta2, t.theta3, t.theta4] {
            close(v, 0.4, 1e-15);
        }
        let t = special_case_thetas(&XState::bell(Bell::PsiPlus)).unwrap();
        assert_eq!([t.theta1, t.theta2, t.theta3], [1.0, 1.0, 1.0]);
        assert_eq!(t.theta_sup(), 1.0);

        let w = 0.3;
        let s = state([0.0, 0.5, 0.5, 0.0], 0.0, 0.5 * (2.0 * w - 1.0));
        let t = special_case_thetas(&s).unwrap();
        close(
            t.min_conditional_entropy(),
            min_conditional_entropy(&s).value,
            1e-10,
        );

        let asym = state([0.4, 0.1, 0.1, 0.4], 0.1, 0.0);
        assert!(special_case_thetas(&asym).is_ok());
        let asym = state([0.5, 0.1, 0.1, 0.3], 0.1, 0.0);
        assert_eq!(special_case_thetas(&asym), Err(Error::NotSymmetric));
    }

    #[test]
    fn stored_parameters_reproduce_values() {
        let s = XState::new(RawElements {
            rho11: 0.3,
            rho22: 0.2,
            rho33: 0.1,
            rho44: 0.4,
            rho14: Complex64::from_polar(0.25, 1.1),
            rho23: Complex64::from_polar(0.12, -2.3),
        })
        .unwrap();
        for c in candidate_set(&s) {
            close(conditional_entropy_vn(&s, &c.kmn), c.value, 1e-12);
        }
    }

    #[test]
    fn negative_discord_is_rejected() {
        assert!(matches!(
            floor_discord(-1e-3),
            Err(Error::NegativeDiscord(_))
        ));
        assert_eq!(floor_discord(-1e-12).unwrap(), 0.0);
    }
}
