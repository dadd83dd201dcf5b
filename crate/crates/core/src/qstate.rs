//! Two-qubit X-state density matrices.
//!
//! Basis ordering is `|1> = |00>`, `|2> = |01>`, `|3> = |10>`, `|4> = |11>`
//! with qubit A written first. Only `rho11..rho44`, `rho14` and `rho23` are
//! stored; `rho41` and `rho32` are their conjugates.

use num_complex::Complex64;

use crate::error::{Block, Error, Result};

/// Absolute tolerance applied to the trace and block-positivity checks.
pub const VALIDATION_TOL: f64 = 1e-10;

/// Eigenvalues in `[-EIGEN_CLAMP, 0)` are reported as zero.
pub const EIGEN_CLAMP: f64 = 1e-12;

/// Unvalidated matrix elements, as read from a file or typed by hand.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RawElements {
    pub rho11: f64,
    pub rho22: f64,
    pub rho33: f64,
    pub rho44: f64,
    pub rho14: Complex64,
    pub rho23: Complex64,
}

/// A validated X-state.
///
/// Values of this type always have unit trace, populations in `[0, 1]` and
/// coherences inside both 2x2 positivity bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    rho11: f64,
    rho22: f64,
    rho33: f64,
    rho44: f64,
    rho14: Complex64,
    rho23: Complex64,
}

/// The four Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bell {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl Bell {
    pub const ALL: [Bell; 4] = [Bell::PhiPlus, Bell::PhiMinus, Bell::PsiPlus, Bell::PsiMinus];
}

/// Eigenvalues of an X-state, one pair per 2x2 block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    /// Outer block (`rho11`, `rho44`, `rho14`), larger first.
    pub lambda0: f64,
    pub lambda1: f64,
    /// Inner block (`rho22`, `rho33`, `rho23`), larger first.
    pub lambda2: f64,
    pub lambda3: f64,
}

impl Spectrum {
    pub fn values(&self) -> [f64; 4] {
        [self.lambda0, self.lambda1, self.lambda2, self.lambda3]
    }

    pub fn sum(&self) -> f64 {
        self.values().iter().sum()
    }
}

/// Which of the two mutually exclusive entanglement conditions holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntanglementWitness {
    /// `rho22 * rho33 < |rho14|^2`
    OuterCoherence,
    /// `rho11 * rho44 < |rho23|^2`
    InnerCoherence,
}

/// Pauli-basis parametrization of an X-state.
///
/// `c1` and `c2` carry the coherences, `c3`, `a3`, `b3` the populations:
/// `a3` and `b3` are the z-components of the A and B Bloch vectors and `c3`
/// the zz correlation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationParams {
    pub c1: Complex64,
    pub c2: Complex64,
    pub c3: f64,
    pub a3: f64,
    pub b3: f64,
}

impl CorrelationParams {
    /// Diagonal offsets `d1..d4`, with `rho_ii = (1 + d_i) / 4`.
    pub fn diagonals(&self) -> [f64; 4] {
        let Self { c3, a3, b3, .. } = *self;
        [c3 + a3 + b3, -c3 + a3 - b3, -c3 - a3 + b3, c3 - a3 - b3]
    }

    pub fn to_state(&self) -> Result<XState> {
        XState::from_params(self)
    }
}

impl XState {
    /// Validates raw elements with the default tolerance.
    pub fn new(raw: RawElements) -> Result<Self> {
        Self::validate(raw, VALIDATION_TOL)
    }

    /// Checks trace and positivity within `tol` and returns the normalized state.
    ///
    /// Populations are clamped into `[0, 1]`, the trace is rescaled to exactly
    /// one, and a coherence that exceeds its block bound by less than `tol` is
    /// shrunk onto the bound so that the spectrum stays non-negative.
    pub fn validate(raw: RawElements, tol: f64) -> Result<Self> {
        let pops = [raw.rho11, raw.rho22, raw.rho33, raw.rho44];
        let finite = pops.iter().all(|p| p.is_finite())
            && [raw.rho14, raw.rho23]
                .iter()
                .all(|c| c.re.is_finite() && c.im.is_finite());
        if !finite {
            return Err(Error::NonFinite);
        }
        for (index, &value) in pops.iter().enumerate() {
            if value < -tol || value > 1.0 + tol {
                return Err(Error::Population {
                    index: index + 1,
                    value,
                });
            }
        }
        let trace: f64 = pops.iter().sum();
        if (trace - 1.0).abs() > tol {
            return Err(Error::Trace { trace });
        }
        let check = |block, p: f64, q: f64, c: Complex64| {
            let product = p * q;
            let coherence_sq = c.norm_sqr();
            if product < coherence_sq - tol {
                Err(Error::Positivity {
                    block,
                    product,
                    coherence_sq,
                })
            } else {
                Ok(())
            }
        };
        check(Block::Outer, raw.rho11, raw.rho44, raw.rho14)?;
        check(Block::Inner, raw.rho22, raw.rho33, raw.rho23)?;

        let [p11, p22, p33, p44] = pops.map(|p| p.clamp(0.0, 1.0) / trace);
        let clip = |c: Complex64, bound_sq: f64| {
            let n = c.norm();
            let bound = bound_sq.max(0.0).sqrt();
            if n > bound {
                if n > 0.0 {
                    c * (bound / n)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            } else {
                c
            }
        };
        let scale = 1.0 / trace;
        Ok(Self {
            rho11: p11,
            rho22: p22,
            rho33: p33,
            rho44: p44,
            rho14: clip(raw.rho14 * scale, p11 * p44),
            rho23: clip(raw.rho23 * scale, p22 * p33),
        })
    }

    pub fn maximally_mixed() -> Self {
        Self {
            rho11: 0.25,
            rho22: 0.25,
            rho33: 0.25,
            rho44: 0.25,
            rho14: Complex64::new(0.0, 0.0),
            rho23: Complex64::new(0.0, 0.0),
        }
    }

    pub fn bell(which: Bell) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let half = |sign: f64| Complex64::new(0.5 * sign, 0.0);
        let (pops, rho14, rho23) = match which {
            Bell::PhiPlus => ([0.5, 0.0, 0.0, 0.5], half(1.0), zero),
            Bell::PhiMinus => ([0.5, 0.0, 0.0, 0.5], half(-1.0), zero),
            Bell::PsiPlus => ([0.0, 0.5, 0.5, 0.0], zero, half(1.0)),
            Bell::PsiMinus => ([0.0, 0.5, 0.5, 0.0], zero, half(-1.0)),
        };
        Self {
            rho11: pops[0],
            rho22: pops[1],
            rho33: pops[2],
            rho44: pops[3],
            rho14,
            rho23,
        }
    }

    pub fn rho11(&self) -> f64 {
        self.rho11
    }
    pub fn rho22(&self) -> f64 {
        self.rho22
    }
    pub fn rho33(&self) -> f64 {
        self.rho33
    }
    pub fn rho44(&self) -> f64 {
        self.rho44
    }
    pub fn rho14(&self) -> Complex64 {
        self.rho14
    }
    pub fn rho23(&self) -> Complex64 {
        self.rho23
    }

    pub fn populations(&self) -> [f64; 4] {
        [self.rho11, self.rho22, self.rho33, self.rho44]
    }

    pub fn raw(&self) -> RawElements {
        RawElements {
            rho11: self.rho11,
            rho22: self.rho22,
            rho33: self.rho33,
            rho44: self.rho44,
            rho14: self.rho14,
            rho23: self.rho23,
        }
    }

    /// Full 4x4 matrix, row-major.
    pub fn density_matrix(&self) -> [[Complex64; 4]; 4] {
        let z = Complex64::new(0.0, 0.0);
        let r = |x: f64| Complex64::new(x, 0.0);
        [
            [r(self.rho11), z, z, self.rho14],
            [z, r(self.rho22), self.rho23, z],
            [z, self.rho23.conj(), r(self.rho33), z],
            [self.rho14.conj(), z, z, r(self.rho44)],
        ]
    }

    pub fn spectrum(&self) -> Spectrum {
        let block = |p: f64, q: f64, c: Complex64| {
            let root = ((p - q) * (p - q) + 4.0 * c.norm_sqr()).sqrt();
            let hi = 0.5 * ((p + q) + root);
            let lo = 0.5 * ((p + q) - root);
            (clamp_eigenvalue(hi), clamp_eigenvalue(lo))
        };
        let (lambda0, lambda1) = block(self.rho11, self.rho44, self.rho14);
        let (lambda2, lambda3) = block(self.rho22, self.rho33, self.rho23);
        Spectrum {
            lambda0,
            lambda1,
            lambda2,
            lambda3,
        }
    }

    /// Returns the entanglement condition that holds, if any.
    pub fn entanglement(&self) -> Option<EntanglementWitness> {
        let outer = self.rho22 * self.rho33 < self.rho14.norm_sqr();
        let inner = self.rho11 * self.rho44 < self.rho23.norm_sqr();
        debug_assert!(
            !(outer && inner),
            "both X-state entanglement conditions hold for {self:?}"
        );
        match (outer, inner) {
            (true, _) => Some(EntanglementWitness::OuterCoherence),
            (false, true) => Some(EntanglementWitness::InnerCoherence),
            (false, false) => None,
        }
    }

    pub fn is_entangled(&self) -> bool {
        self.entanglement().is_some()
    }

    /// Wootters concurrence, `2 max(0, |rho23| - sqrt(rho11 rho44), |rho14| - sqrt(rho22 rho33))`.
    pub fn concurrence(&self) -> f64 {
        let inner = self.rho23.norm() - (self.rho11 * self.rho44).sqrt();
        let outer = self.rho14.norm() - (self.rho22 * self.rho33).sqrt();
        (2.0 * inner.max(outer).max(0.0)).min(1.0)
    }

    pub fn to_params(&self) -> CorrelationParams {
        let Self {
            rho11,
            rho22,
            rho33,
            rho44,
            rho14,
            rho23,
        } = *self;
        CorrelationParams {
            c1: 2.0 * (rho23 + rho14),
            c2: 2.0 * (rho23 - rho14),
            c3: rho11 + rho44 - rho22 - rho33,
            a3: rho11 - rho44 + rho22 - rho33,
            b3: rho11 - rho44 - rho22 + rho33,
        }
    }

    pub fn from_params(params: &CorrelationParams) -> Result<Self> {
        let [d1, d2, d3, d4] = params.diagonals();
        Self::new(RawElements {
            rho11: 0.25 * (1.0 + d1),
            rho22: 0.25 * (1.0 + d2),
            rho33: 0.25 * (1.0 + d3),
            rho44: 0.25 * (1.0 + d4),
            rho14: 0.25 * (params.c1 - params.c2),
            rho23: 0.25 * (params.c1 + params.c2),
        })
    }

    /// Whether `rho11 = rho44`, `rho22 = rho33` and both coherences are real, within `tol`.
    pub fn has_symmetric_form(&self, tol: f64) -> bool {
        (self.rho11 - self.rho44).abs() <= tol
            && (self.rho22 - self.rho33).abs() <= tol
            && self.rho14.im.abs() <= tol
            && self.rho23.im.abs() <= tol
    }
}

fn clamp_eigenvalue(x: f64) -> f64 {
    debug_assert!(x >= -EIGEN_CLAMP, "eigenvalue {x} below clamp window");
    if x < 0.0 {
        0.0
    } else {
        x.min(1.0)
    }
}
