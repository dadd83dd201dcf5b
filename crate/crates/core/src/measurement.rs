//! Measurements on qubit B and the post-measurement ensembles they leave on A.
//!
//! A von Neumann measurement `{V |i><i| V^†}` is described at three levels:
//! the SU(2) element `V = t I + i y·σ` ([`Su2Params`]), the reduced variables
//! `(k, m, n)` the conditional entropy depends on ([`Kmn`]), and the Bloch
//! direction `z` of the first projector ([`Frame::z`]). They are related by
//! `k - l = z3`, `4m = z2^2` and `4n = -z1 z2`.
//!
//! Two independent routes to the conditional entropy live here: the `(k, m, n)`
//! route through [`theta_pair`] and the Bloch-vector route through
//! [`conditional_states_bloch`]. They must agree for every state and direction.

use crate::error::{Error, Result};
use crate::information::binary_entropy_clamped;
use crate::qstate::{CorrelationParams, XState};
use crate::vec3::{self, Vec3};

/// Outcomes whose probability falls below this are dropped from entropy sums.
pub const DEGENERATE_PROBABILITY: f64 = 1e-15;

const NORM_TOL: f64 = 1e-12;

/// Parameters of `V = t I + i (y1 σx + y2 σy + y3 σz)` in SU(2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2Params {
    pub t: f64,
    pub y1: f64,
    pub y2: f64,
    pub y3: f64,
}

impl Su2Params {
    pub fn new(t: f64, y1: f64, y2: f64, y3: f64) -> Result<Self> {
        let norm_sq = t * t + y1 * y1 + y2 * y2 + y3 * y3;
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::Domain {
                what: "t^2 + |y|^2",
                value: norm_sq,
            });
        }
        Ok(Self { t, y1, y2, y3 })
    }

    /// Scales an arbitrary non-zero 4-vector onto the unit sphere.
    pub fn normalized(t: f64, y1: f64, y2: f64, y3: f64) -> Result<Self> {
        let norm = (t * t + y1 * y1 + y2 * y2 + y3 * y3).sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::Domain {
                what: "|(t, y)|",
                value: norm,
            });
        }
        Ok(Self {
            t: t / norm,
            y1: y1 / norm,
            y2: y2 / norm,
            y3: y3 / norm,
        })
    }

    pub fn identity() -> Self {
        Self {
            t: 1.0,
            y1: 0.0,
            y2: 0.0,
            y3: 0.0,
        }
    }

    pub fn kmn(&self) -> Kmn {
        kmn_from_su2(self)
    }

    pub fn frame(&self) -> Frame {
        frame_from_su2(self)
    }
}

/// Reduced measurement variables; `l = 1 - k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kmn {
    k: f64,
    m: f64,
    n: f64,
}

impl Kmn {
    /// Checks the ranges `k ∈ [0,1]`, `m ∈ [0,1/4]`, `n ∈ [-1/8,1/8]` and the
    /// coupling `4m (4kl - 4m) >= (4n)^2` that any real measurement obeys.
    pub fn new(k: f64, m: f64, n: f64) -> Result<Self> {
        let in_range = |x: f64, lo: f64, hi: f64| x >= lo - NORM_TOL && x <= hi + NORM_TOL;
        if !in_range(k, 0.0, 1.0) {
            return Err(Error::Domain {
                what: "k",
                value: k,
            });
        }
        if !in_range(m, 0.0, 0.25) {
            return Err(Error::Domain {
                what: "m",
                value: m,
            });
        }
        if !in_range(n, -0.125, 0.125) {
            return Err(Error::Domain {
                what: "n",
                value: n,
            });
        }
        let slack = 4.0 * m * (4.0 * k * (1.0 - k) - 4.0 * m) - 16.0 * n * n;
        if slack < -NORM_TOL {
            return Err(Error::Domain {
                what: "kmn feasibility",
                value: slack,
            });
        }
        Ok(Self { k, m, n })
    }

    /// Projective measurement along the computational basis of B.
    pub fn z_basis() -> Self {
        Self {
            k: 1.0,
            m: 0.0,
            n: 0.0,
        }
    }

    /// Measurement along `(cos φ, sin φ, 0)` in the transverse plane.
    pub fn xy_plane(phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Self {
            k: 0.5,
            m: 0.25 * s * s,
            n: -0.25 * s * c,
        }
    }

    /// Measurement whose first projector points along the unit vector `z`.
    pub fn from_direction(z: &Vec3) -> Self {
        Self {
            k: 0.5 * (1.0 + z[2]),
            m: 0.25 * z[1] * z[1],
            n: -0.25 * z[0] * z[1],
        }
    }

    pub fn k(&self) -> f64 {
        self.k
    }
    pub fn l(&self) -> f64 {
        1.0 - self.k
    }
    pub fn m(&self) -> f64 {
        self.m
    }
    pub fn n(&self) -> f64 {
        self.n
    }

    /// The same measurement with its outcomes relabelled (`k <-> l`).
    pub fn swapped(&self) -> Self {
        Self {
            k: 1.0 - self.k,
            ..*self
        }
    }
}

/// Orthonormal Bloch triad of a measurement; `y` is derived as `z × x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    x: Vec3,
    z: Vec3,
}

impl Frame {
    pub fn new(x: Vec3, z: Vec3) -> Result<Self> {
        let nx = vec3::norm(&x);
        let nz = vec3::norm(&z);
        let d = vec3::dot(&x, &z);
        if (nx - 1.0).abs() > NORM_TOL || (nz - 1.0).abs() > NORM_TOL {
            return Err(Error::Domain {
                what: "frame axis norm",
                value: if (nx - 1.0).abs() > (nz - 1.0).abs() {
                    nx
                } else {
                    nz
                },
            });
        }
        if d.abs() > NORM_TOL {
            return Err(Error::Domain {
                what: "x·z",
                value: d,
            });
        }
        Ok(Self { x, z })
    }

    /// Gram-Schmidt: keeps the direction of `z`, makes `x` orthogonal to it.
    pub(crate) fn orthonormalized(x: &Vec3, z: &Vec3) -> Self {
        let z = vec3::normalize(z);
        let mut xo = vec3::add(x, &vec3::scale(&z, -vec3::dot(x, &z)));
        if vec3::norm(&xo) < 1e-8 {
            xo = vec3::orthogonal(&z);
        }
        Self {
            x: vec3::normalize(&xo),
            z,
        }
    }

    pub fn canonical() -> Self {
        Self {
            x: [1.0, 0.0, 0.0],
            z: [0.0, 0.0, 1.0],
        }
    }

    pub fn x(&self) -> Vec3 {
        self.x
    }
    pub fn z(&self) -> Vec3 {
        self.z
    }
    pub fn y(&self) -> Vec3 {
        vec3::cross(&self.z, &self.x)
    }
}

/// Eigenvalue asymmetries of the two conditional states of A.
///
/// Outcome 0 leaves A with eigenvalues `(1 ± theta) / 2`, outcome 1 with
/// `(1 ± theta_prime) / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaPair {
    pub theta: f64,
    pub theta_prime: f64,
    /// The transverse contribution Θ shared by both outcomes.
    pub big_theta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutcomePair {
    pub p0: f64,
    pub p1: f64,
}

/// One outcome of a measurement on B: its probability and the Bloch vector of A afterwards.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionalBloch {
    pub probability: f64,
    pub bloch: Vec3,
}

impl ConditionalBloch {
    /// Bloch length, i.e. the eigenvalue asymmetry of the conditional state.
    pub fn theta(&self) -> f64 {
        vec3::norm(&self.bloch)
    }

    pub fn entropy(&self) -> f64 {
        binary_entropy_clamped(self.theta())
    }
}

pub fn kmn_from_su2(v: &Su2Params) -> Kmn {
    let Su2Params { t, y1, y2, y3 } = *v;
    let a = t * y1 + y2 * y3;
    Kmn {
        k: t * t + y3 * y3,
        m: a * a,
        n: (t * y2 - y1 * y3) * a,
    }
}

pub fn frame_from_su2(v: &Su2Params) -> Frame {
    let Su2Params { t, y1, y2, y3 } = *v;
    let z = [
        2.0 * (-t * y2 + y1 * y3),
        2.0 * (t * y1 + y2 * y3),
        t * t + y3 * y3 - y1 * y1 - y2 * y2,
    ];
    let x = [
        t * t + y1 * y1 - y2 * y2 - y3 * y3,
        2.0 * (-t * y3 + y1 * y2),
        2.0 * (t * y2 + y1 * y3),
    ];
    Frame { x, z }
}

/// Θ, the transverse part of the squared Bloch length of either conditional state
/// (before dividing by the outcome probability).
///
/// The coherence product entering Θ is `rho14 · conj(rho23)`; for real
/// coherences this coincides with `rho14 · rho23`.
pub fn big_theta(state: &XState, kmn: &Kmn) -> f64 {
    let w = state.rho14();
    let x = state.rho23();
    let product = w * x.conj();
    let (k, l) = (kmn.k(), kmn.l());
    4.0 * k * l * (w.norm_sqr() + x.norm_sqr() + 2.0 * product.re) - 16.0 * kmn.m() * product.re
        + 16.0 * kmn.n() * product.im
}

pub fn outcome_probabilities(state: &XState, kmn: &Kmn) -> OutcomePair {
    let [r11, r22, r33, r44] = state.populations();
    let (k, l) = (kmn.k(), kmn.l());
    OutcomePair {
        p0: (r11 + r33) * k + (r22 + r44) * l,
        p1: (r11 + r33) * l + (r22 + r44) * k,
    }
}

/// `sqrt(longitudinal^2 + Θ) / probability`, clamped into `[0, 1]`.
fn asymmetry(longitudinal: f64, big_theta: f64, probability: f64) -> f64 {
    let num = (longitudinal * longitudinal + big_theta).max(0.0);
    (num.sqrt() / probability).clamp(0.0, 1.0)
}

/// Longitudinal parts of the two conditional Bloch vectors, times the probabilities.
fn longitudinal(state: &XState, kmn: &Kmn) -> (f64, f64) {
    let [r11, r22, r33, r44] = state.populations();
    let (k, l) = (kmn.k(), kmn.l());
    (
        (r11 - r33) * k + (r22 - r44) * l,
        (r11 - r33) * l + (r22 - r44) * k,
    )
}

pub fn theta_pair(state: &XState, kmn: &Kmn) -> Result<ThetaPair> {
    let OutcomePair { p0, p1 } = outcome_probabilities(state, kmn);
    if p0 <= DEGENERATE_PROBABILITY {
        return Err(Error::DegenerateOutcome { outcome: 0 });
    }
    if p1 <= DEGENERATE_PROBABILITY {
        return Err(Error::DegenerateOutcome { outcome: 1 });
    }
    let big = big_theta(state, kmn);
    let (z0, z1) = longitudinal(state, kmn);
    Ok(ThetaPair {
        theta: asymmetry(z0, big, p0),
        theta_prime: asymmetry(z1, big, p1),
        big_theta: big,
    })
}

/// `p0 H(theta) + p1 H(theta')`; a zero-probability outcome contributes nothing.
pub fn conditional_entropy_vn(state: &XState, kmn: &Kmn) -> f64 {
    let OutcomePair { p0, p1 } = outcome_probabilities(state, kmn);
    let big = big_theta(state, kmn);
    let (z0, z1) = longitudinal(state, kmn);
    let term = |z: f64, p: f64| {
        if p < DEGENERATE_PROBABILITY {
            0.0
        } else {
            p * binary_entropy_clamped(asymmetry(z, big, p))
        }
    };
    term(z0, p0) + term(z1, p1)
}

/// `(1 + b3 s3, unnormalized Bloch vector)` of the A state left by a B outcome along `s`.
fn branch(params: &CorrelationParams, s: &Vec3) -> (f64, Vec3) {
    let CorrelationParams {
        c1, c2, c3, a3, b3, ..
    } = *params;
    let a1 = s[0] * c1.re + s[1] * c2.im;
    let a2 = s[1] * c2.re - s[0] * c1.im;
    (1.0 + b3 * s[2], [a1, a2, a3 + c3 * s[2]])
}

/// Probability weight times conditional entropy for a rank-one outcome along `s`;
/// `weight` is `tr(E)/2`, so `1/2` for a projector and `1/3` for a trine element.
fn weighted_entropy(params: &CorrelationParams, s: &Vec3, weight: f64) -> f64 {
    let (w, numerator) = branch(params, s);
    let p = weight * w;
    if p < DEGENERATE_PROBABILITY {
        return 0.0;
    }
    p * binary_entropy_clamped(vec3::norm(&numerator) / w)
}

/// The two conditional states of A after measuring B along `±z`.
pub fn conditional_states_bloch(
    state: &XState,
    z: &Vec3,
) -> Result<(ConditionalBloch, ConditionalBloch)> {
    let params = state.to_params();
    let minus = vec3::scale(z, -1.0);
    let build = |s: &Vec3, outcome: usize| {
        let (w, numerator) = branch(&params, s);
        if 0.5 * w <= DEGENERATE_PROBABILITY {
            return Err(Error::DegenerateOutcome { outcome });
        }
        Ok(ConditionalBloch {
            probability: 0.5 * w,
            bloch: vec3::scale(&numerator, 1.0 / w),
        })
    };
    Ok((build(z, 0)?, build(&minus, 1)?))
}

/// Conditional entropy of the projective measurement along `±z`, via Bloch vectors.
pub fn conditional_entropy_direction(state: &XState, z: &Vec3) -> f64 {
    let params = state.to_params();
    conditional_entropy_direction_with(&params, z)
}

pub(crate) fn conditional_entropy_direction_with(params: &CorrelationParams, z: &Vec3) -> f64 {
    weighted_entropy(params, z, 0.5) + weighted_entropy(params, &vec3::scale(z, -1.0), 0.5)
}

/// `z` and `(-z ± sqrt(3) x) / 2`: three coplanar directions 120° apart.
pub fn trine_directions(frame: &Frame) -> [Vec3; 3] {
    let z = frame.z();
    let x = frame.x();
    let r3 = 3f64.sqrt();
    let side = |sign: f64| {
        [
            0.5 * (-z[0] + sign * r3 * x[0]),
            0.5 * (-z[1] + sign * r3 * x[1]),
            0.5 * (-z[2] + sign * r3 * x[2]),
        ]
    };
    [z, side(1.0), side(-1.0)]
}

/// Outcome probabilities `(1 + b3 s3) / 3` of the trine POVM built on `frame`.
pub fn trine_probabilities(state: &XState, frame: &Frame) -> [f64; 3] {
    let b3 = state.to_params().b3;
    trine_directions(frame).map(|s| (1.0 + b3 * s[2]) / 3.0)
}

/// Conditional entropy after the trine POVM `E_i = (I + s_i·σ) / 3` on B.
pub fn trine_conditional_entropy(state: &XState, frame: &Frame) -> f64 {
    let params = state.to_params();
    trine_conditional_entropy_with(&params, frame)
}

pub(crate) fn trine_conditional_entropy_with(params: &CorrelationParams, frame: &Frame) -> f64 {
    trine_directions(frame)
        .iter()
        .map(|s| weighted_entropy(params, s, 1.0 / 3.0))
        .sum()
}
