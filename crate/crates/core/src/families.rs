//! One-parameter state families with known closed-form correlations.
//!
//! | id | state |
//! |----|-------|
//! | `bell-mix` | `a |ψ+><ψ+| + (1-a) |φ+><φ+|` |
//! | `psi-plus-noise` | `a |ψ+><ψ+| + (1-a) |11><11|` |
//! | `phi-plus-noise` | `a |φ+><φ+| + (1-a) |11><11|`, `a > 0` |
//! | `werner` | `a |ψ-><ψ-| + (1-a) I/4` |
//! | `symmetric-noise` | `((1-a) |00><00| + 2 |ψ+><ψ+| + a |11><11|) / 3` |

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::discord::{self, Branch};
use crate::error::{Error, Result};
use crate::information::binary_entropy_clamped;
use crate::qstate::{RawElements, XState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    BellMix,
    PsiPlusNoise,
    PhiPlusNoise,
    Werner,
    SymmetricNoise,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::BellMix,
        Family::PsiPlusNoise,
        Family::PhiPlusNoise,
        Family::Werner,
        Family::SymmetricNoise,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Family::BellMix => "bell-mix",
            Family::PsiPlusNoise => "psi-plus-noise",
            Family::PhiPlusNoise => "phi-plus-noise",
            Family::Werner => "werner",
            Family::SymmetricNoise => "symmetric-noise",
        }
    }

    pub fn contains(&self, a: f64) -> bool {
        match self {
            Family::PhiPlusNoise => a > 0.0 && a <= 1.0,
            _ => (0.0..=1.0).contains(&a),
        }
    }

    /// `steps` uniformly spaced parameters covering the family's domain.
    ///
    /// `phi-plus-noise` excludes `a = 0` and runs over `1/steps, 2/steps, ..., 1`.
    pub fn grid(&self, steps: usize) -> Result<Vec<f64>> {
        if steps < 2 {
            return Err(Error::Domain {
                what: "steps",
                value: steps as f64,
            });
        }
        Ok(match self {
            Family::PhiPlusNoise => (1..=steps).map(|i| i as f64 / steps as f64).collect(),
            _ => (0..steps).map(|i| i as f64 / (steps - 1) as f64).collect(),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilySpec {
    family: Family,
    a: f64,
}

/// Closed-form correlations of a family member, in bits (concurrence dimensionless).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpectedCurves {
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub quantum_discord: f64,
    pub concurrence: f64,
}

/// `x log2 x`, zero at zero.
fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

impl FamilySpec {
    pub fn new(family: Family, a: f64) -> Result<Self> {
        if !family.contains(a) {
            return Err(Error::Domain {
                what: "a",
                value: a,
            });
        }
        Ok(Self { family, a })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn build(&self) -> Result<XState> {
        let a = self.a;
        let real = |x: f64| Complex64::new(x, 0.0);
        let raw = match self.family {
            Family::BellMix => RawElements {
                rho11: (1.0 - a) / 2.0,
                rho22: a / 2.0,
                rho33: a / 2.0,
                rho44: (1.0 - a) / 2.0,
                rho14: real((1.0 - a) / 2.0),
                rho23: real(a / 2.0),
            },
            Family::PsiPlusNoise => RawElements {
                rho11: 0.0,
                rho22: a / 2.0,
                rho33: a / 2.0,
                rho44: 1.0 - a,
                rho14: real(0.0),
                rho23: real(a / 2.0),
            },
            Family::PhiPlusNoise => RawElements {
                rho11: a / 2.0,
                rho22: 0.0,
                rho33: 0.0,
                rho44: 1.0 - a / 2.0,
                rho14: real(a / 2.0),
                rho23: real(0.0),
            },
            Family::Werner => RawElements {
                rho11: (1.0 - a) / 4.0,
                rho22: (1.0 + a) / 4.0,
                rho33: (1.0 + a) / 4.0,
                rho44: (1.0 - a) / 4.0,
                rho14: real(0.0),
                rho23: real(-a / 2.0),
            },
            Family::SymmetricNoise => RawElements {
                rho11: (1.0 - a) / 3.0,
                rho22: 1.0 / 3.0,
                rho33: 1.0 / 3.0,
                rho44: a / 3.0,
                rho14: real(0.0),
                rho23: real(1.0 / 3.0),
            },
        };
        XState::new(raw)
    }

    pub fn expected(&self) -> ExpectedCurves {
        let a = self.a;
        match self.family {
            Family::BellMix => {
                let mix = xlog2x(a) + xlog2x(1.0 - a);
                ExpectedCurves {
                    mutual_information: 2.0 + mix,
                    classical_correlation: 1.0,
                    quantum_discord: 1.0 + mix,
                    concurrence: (1.0 - 2.0 * a).abs(),
                }
            }
            Family::PsiPlusNoise => {
                let s_a = -xlog2x(a / 2.0) - xlog2x((2.0 - a) / 2.0);
                let s_rho = -xlog2x(a) - xlog2x(1.0 - a);
                let s1 = binary_entropy_clamped((a * a + (1.0 - a) * (1.0 - a)).sqrt());
                ExpectedCurves {
                    mutual_information: 2.0 * s_a - s_rho,
                    classical_correlation: s_a - s1,
                    quantum_discord: s_a + s1 - s_rho,
                    concurrence: a,
                }
            }
            Family::PhiPlusNoise => {
                let s_a = -xlog2x(a / 2.0) - xlog2x((2.0 - a) / 2.0);
                let s_rho = binary_entropy_clamped((a * a + (a - 1.0) * (a - 1.0)).sqrt());
                ExpectedCurves {
                    mutual_information: 2.0 * s_a - s_rho,
                    classical_correlation: s_a,
                    quantum_discord: s_a - s_rho,
                    concurrence: a,
                }
            }
            Family::Werner => {
                let (lm, lp, l3) = (xlog2x(1.0 - a), xlog2x(1.0 + a), xlog2x(1.0 + 3.0 * a));
                ExpectedCurves {
                    mutual_information: 0.75 * lm + 0.25 * l3,
                    classical_correlation: 0.5 * lm + 0.5 * lp,
                    quantum_discord: 0.25 * (lm + l3 - 2.0 * lp),
                    concurrence: ((3.0 * a - 1.0) / 2.0).max(0.0),
                }
            }
            Family::SymmetricNoise => {
                let theta1 = ((1.0 - 2.0 * a).powi(2) + 4.0).sqrt() / 3.0;
                let s1 = binary_entropy_clamped(theta1);
                let joint = xlog2x((1.0 - a) / 3.0) + xlog2x(a / 3.0) + xlog2x(2.0 / 3.0);
                let marg = xlog2x((2.0 - a) / 3.0) + xlog2x((1.0 + a) / 3.0);
                ExpectedCurves {
                    mutual_information: joint - 2.0 * marg,
                    classical_correlation: -s1 - marg,
                    quantum_discord: joint - marg + s1,
                    concurrence: (2.0 / 3.0 * (1.0 - (a * (1.0 - a)).sqrt())).max(0.0),
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub a: f64,
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub quantum_discord: f64,
    pub concurrence: f64,
    pub branch: Branch,
    pub expected: ExpectedCurves,
    /// Largest absolute difference between computed and expected values.
    pub delta_max: f64,
}

pub fn evaluate(spec: &FamilySpec) -> Result<SweepRow> {
    let state = spec.build()?;
    let report = discord::report(&state)?;
    let expected = spec.expected();
    let delta_max = [
        report.mutual_information - expected.mutual_information,
        report.classical_correlation - expected.classical_correlation,
        report.quantum_discord - expected.quantum_discord,
        report.concurrence - expected.concurrence,
    ]
    .iter()
    .map(|d| d.abs())
    .fold(0.0, f64::max);
    Ok(SweepRow {
        a: spec.a(),
        mutual_information: report.mutual_information,
        classical_correlation: report.classical_correlation,
        quantum_discord: report.quantum_discord,
        concurrence: report.concurrence,
        branch: report.branch.branch,
        expected,
        delta_max,
    })
}

/// Report and closed forms on the family's grid, ordered by ascending `a`.
pub fn sweep(family: Family, steps: usize) -> Result<Vec<SweepRow>> {
    family
        .grid(steps)?
        .into_par_iter()
        .map(|a| evaluate(&FamilySpec::new(family, a)?))
        .collect()
}

/// Bisects a sign change of `f` on `[lo, hi]` down to `width`.
pub fn bisect_sign_change<F: Fn(f64) -> f64>(
    f: F,
    mut lo: f64,
    mut hi: f64,
    width: f64,
) -> Option<(f64, f64)> {
    let mut f_lo = f(lo);
    if f_lo.signum() == f(hi).signum() {
        return None;
    }
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Some((lo, hi))
}

/// Bracket of the Werner parameter where discord and concurrence cross,
/// from the closed forms.
pub fn werner_crossover(width: f64) -> Option<(f64, f64)> {
    bisect_sign_change(
        |a| {
            let e = FamilySpec {
                family: Family::Werner,
                a,
            }
            .expected();
            e.quantum_discord - e.concurrence
        },
        0.34,
        0.99,
        width,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() < tol, "{a} vs {b}");
    }

    #[test]
    fn ids_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.id().parse::<Family>().unwrap(), f);
        }
        assert_eq!(
            "ghz".parse::<Family>(),
            Err(Error::UnknownFamily("ghz".into()))
        );
    }

    #[test]
    fn domains() {
        assert!(FamilySpec::new(Family::PhiPlusNoise, 0.0).is_err());
        assert!(FamilySpec::new(Family::Werner, 0.0).is_ok());
        assert!(FamilySpec::new(Family::Werner, 1.2).is_err());
        assert!(FamilySpec::new(Family::BellMix, f64::NAN).is_err());
    }

    #[test]
    fn pure_limits() {
        let w = FamilySpec::new(Family::Werner, 1.0)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(w.populations(), [0.0, 0.5, 0.5, 0.0]);
        assert_eq!(w.rho23(), Complex64::new(-0.5, 0.0));
        let p = FamilySpec::new(Family::PsiPlusNoise, 1.0)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(p, XState::bell(crate::qstate::Bell::PsiPlus));
    }

    #[test]
    fn symmetric_noise_elements() {
        let a = 0.3;
        let s = FamilySpec::new(Family::SymmetricNoise, a)
            .unwrap()
            .build()
            .unwrap();
        let pops = s.populations();
        let want = [(1.0 - a) / 3.0, 1.0 / 3.0, 1.0 / 3.0, a / 3.0];
        for (p, w) in pops.iter().zip(want) {
            close(*p, w, 1e-15);
        }
        close(s.rho23().re, 1.0 / 3.0, 1e-15);
        close(
            s.concurrence(),
            2.0 / 3.0 * (1.0 - (a * (1.0 - a)).sqrt()),
            1e-15,
        );
    }

    #[test]
    fn expected_reference_values() {
        let e = FamilySpec::new(Family::BellMix, 0.37).unwrap().expected();
        assert_eq!(e.classical_correlation, 1.0);
        let e = FamilySpec::new(Family::Werner, 1.0).unwrap().expected();
        close(e.mutual_information, 2.0, 1e-15);
        close(e.classical_correlation, 1.0, 1e-15);
        close(e.quantum_discord, 1.0, 1e-15);
        close(e.concurrence, 1.0, 1e-15);
        let e = FamilySpec::new(Family::PhiPlusNoise, 0.5)
            .unwrap()
            .expected();
        close(e.classical_correlation, 0.811_278_124_459_132_9, 1e-12);
        close(e.quantum_discord, 0.210_402_087_766_276_8, 1e-12);
        close(e.concurrence, 0.5, 1e-15);
        let e = FamilySpec::new(Family::SymmetricNoise, 0.5)
            .unwrap()
            .expected();
        close(e.concurrence, 1.0 / 3.0, 1e-15);
    }

    #[test]
    fn expected_curves_are_additive() {
        for family in Family::ALL {
            for a in family.grid(51).unwrap() {
                let e = FamilySpec::new(family, a).unwrap().expected();
                close(
                    e.mutual_information,
                    e.classical_correlation + e.quantum_discord,
                    1e-12,
                );
            }
        }
    }

    #[test]
    fn grids() {
        let g = Family::Werner.grid(201).unwrap();
        assert_eq!((g.len(), g[0], g[200]), (201, 0.0, 1.0));
        let g = Family::PhiPlusNoise.grid(10).unwrap();
        assert_eq!((g.len(), g[0], g[9]), (10, 0.1, 1.0));
        assert!(Family::Werner.grid(1).is_err());
    }

    #[test]
    fn werner_crossing_bracket() {
        let (lo, hi) = werner_crossover(1e-6).unwrap();
        assert!(lo > 0.52 && hi < 0.53, "({lo}, {hi})");
        assert!(hi - lo <= 1e-6);
    }
}
