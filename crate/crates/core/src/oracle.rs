//! Numerical audit of the analytic minimization.
//!
//! The oracle never looks at the `(k, m, n)` formulas: it evaluates the
//! conditional entropy through the Bloch-vector route
//! ([`crate::measurement::conditional_entropy_direction`]) on a grid of measurement
//! directions, then polishes the best grid points with a Nelder-Mead simplex
//! in the tangent plane of the sphere.
//!
//! Directions come from a Halton sequence (bases 2 and 3) mapped
//! area-uniformly onto the upper hemisphere. The sequence is nested: the grid
//! at resolution `2n` contains the grid at resolution `n`, so raising the
//! resolution can only lower the grid minimum. Index 0 is the pole `+z`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::discord;
use crate::error::{Error, Result};
use crate::information::marginal_entropies;
use crate::measurement::{
    conditional_entropy_direction_with, trine_conditional_entropy_with, Frame,
};
use crate::qstate::{CorrelationParams, RawElements, XState};
use crate::vec3::{self, Vec3};

pub const DEFAULT_RESOLUTION: usize = 2048;
pub const DEFAULT_TOL: f64 = 1e-8;
pub const DEFAULT_MAX_ITERATIONS: usize = 200;
pub const MIN_RESOLUTION: usize = 8;

/// Numerical minima this far below the analytic one flag the analytic branch.
pub const SUBOPTIMAL_THRESHOLD: f64 = 1e-4;

/// Grid spread below which the entropy landscape is reported as flat.
pub const FLAT_SPREAD: f64 = 1e-12;

/// Angles between trine frames sharing the same `z`, sampled over `[0, π)`.
const TRINE_TWIST_STEPS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub resolution: usize,
    pub tol: f64,
    pub max_iterations: usize,
    /// Number of best grid points refined independently.
    pub starts: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            resolution: DEFAULT_RESOLUTION,
            tol: DEFAULT_TOL,
            max_iterations: DEFAULT_MAX_ITERATIONS,
            starts: 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionMin {
    pub value: f64,
    pub direction: Vec3,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Refinement {
    pub value: f64,
    pub direction: Vec3,
    pub iterations: usize,
    /// False when the iteration cap was hit before the simplex shrank below `tol`.
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flag {
    Agrees,
    AnalyticSuboptimal,
}

impl Flag {
    pub fn label(&self) -> &'static str {
        match self {
            Flag::Agrees => "agrees",
            Flag::AnalyticSuboptimal => "analytic_suboptimal",
        }
    }
}

impl std::fmt::Display for Flag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport {
    pub numeric: f64,
    pub direction: Vec3,
    pub analytic: f64,
    /// `analytic - numeric`; negative only through rounding.
    pub discrepancy: f64,
    pub resolution: usize,
    pub iterations: usize,
    pub converged: bool,
    /// `max - min` of the conditional entropy over the grid.
    pub grid_spread: f64,
    pub flag: Flag,
}

impl OracleReport {
    /// The conditional entropy does not depend on the measurement direction.
    pub fn is_flat(&self) -> bool {
        self.grid_spread < FLAT_SPREAD
    }
}

fn radical_inverse(mut i: usize, base: usize) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut r = 0.0;
    while i > 0 {
        r += f * (i % base) as f64;
        i /= base;
        f *= inv;
    }
    r
}

fn halton_direction(i: usize, full_sphere: bool) -> Vec3 {
    let u = radical_inverse(i, 2);
    let h = if full_sphere { 1.0 - 2.0 * u } else { 1.0 - u };
    let phi = 2.0 * std::f64::consts::PI * radical_inverse(i, 3);
    let r = (1.0 - h * h).max(0.0).sqrt();
    [r * phi.cos(), r * phi.sin(), h]
}

/// The first `count` directions of the nested hemisphere grid.
pub fn hemisphere_directions(count: usize) -> Vec<Vec3> {
    (0..count).map(|i| halton_direction(i, false)).collect()
}

/// The first `count` directions of the nested full-sphere grid.
pub fn sphere_directions(count: usize) -> Vec<Vec3> {
    (0..count).map(|i| halton_direction(i, true)).collect()
}

fn check_resolution(resolution: usize) -> Result<()> {
    if resolution < MIN_RESOLUTION {
        return Err(Error::Domain {
            what: "resolution",
            value: resolution as f64,
        });
    }
    Ok(())
}

/// Conditional entropy at every grid direction, in grid order.
pub fn grid_values(state: &XState, resolution: usize) -> Result<Vec<f64>> {
    check_resolution(resolution)?;
    let params = state.to_params();
    Ok(hemisphere_directions(resolution)
        .par_iter()
        .map(|z| conditional_entropy_direction_with(&params, z))
        .collect())
}

/// Indices of the `n` smallest values; ties resolved by index.
fn best_indices(values: &[f64], n: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
    idx.truncate(n.max(1));
    idx
}

pub fn grid_min(state: &XState, resolution: usize) -> Result<DirectionMin> {
    let values = grid_values(state, resolution)?;
    let best = best_indices(&values, 1)[0];
    Ok(DirectionMin {
        value: values[best],
        direction: halton_direction(best, false),
    })
}

struct SimplexResult {
    point: Vec<f64>,
    value: f64,
    iterations: usize,
    converged: bool,
}

/// Plain Nelder-Mead; stops once every vertex lies within `tol` of the best one.
fn nelder_mead<F: Fn(&[f64]) -> f64>(
    f: F,
    start: &[f64],
    step: f64,
    tol: f64,
    max_iterations: usize,
) -> SimplexResult {
    let dim = start.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    simplex.push((start.to_vec(), f(start)));
    for i in 0..dim {
        let mut p = start.to_vec();
        p[i] += step;
        let v = f(&p);
        simplex.push((p, v));
    }
    let along = |a: &[f64], b: &[f64], t: f64| -> Vec<f64> {
        a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect()
    };
    let mut iterations = 0;
    let mut converged = false;
    loop {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let diameter = simplex[1..]
            .iter()
            .map(|(p, _)| {
                p.iter()
                    .zip(&simplex[0].0)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max);
        if diameter < tol {
            converged = true;
            break;
        }
        if iterations >= max_iterations {
            break;
        }
        iterations += 1;

        let mut centroid = vec![0.0; dim];
        for (p, _) in &simplex[..dim] {
            for (c, x) in centroid.iter_mut().zip(p) {
                *c += x / dim as f64;
            }
        }
        let worst = simplex[dim].clone();
        let reflected = along(&centroid, &worst.0, -1.0);
        let fr = f(&reflected);
        if fr < simplex[0].1 {
            let expanded = along(&centroid, &worst.0, -2.0);
            let fe = f(&expanded);
            simplex[dim] = if fe < fr {
                (expanded, fe)
            } else {
                (reflected, fr)
            };
            continue;
        }
        if fr < simplex[dim - 1].1 {
            simplex[dim] = (reflected, fr);
            continue;
        }
        let (contracted, fc) = if fr < worst.1 {
            let p = along(&centroid, &worst.0, -0.5);
            let v = f(&p);
            (p, v)
        } else {
            let p = along(&centroid, &worst.0, 0.5);
            let v = f(&p);
            (p, v)
        };
        if fc < worst.1.min(fr) {
            simplex[dim] = (contracted, fc);
            continue;
        }
        let best = simplex[0].0.clone();
        for vertex in simplex.iter_mut().skip(1) {
            let p = along(&best, &vertex.0, 0.5);
            let v = f(&p);
            *vertex = (p, v);
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (point, value) = simplex.swap_remove(0);
    SimplexResult {
        point,
        value,
        iterations,
        converged,
    }
}

fn refine_with(
    params: &CorrelationParams,
    start: &Vec3,
    tol: f64,
    max_iterations: usize,
) -> Refinement {
    let start = vec3::normalize(start);
    let e1 = vec3::orthogonal(&start);
    let e2 = vec3::cross(&start, &e1);
    let chart = |uv: &[f64]| {
        vec3::normalize(&vec3::add(
            &start,
            &vec3::add(&vec3::scale(&e1, uv[0]), &vec3::scale(&e2, uv[1])),
        ))
    };
    let result = nelder_mead(
        |uv| conditional_entropy_direction_with(params, &chart(uv)),
        &[0.0, 0.0],
        0.07,
        tol,
        max_iterations,
    );
    Refinement {
        value: result.value,
        direction: chart(&result.point),
        iterations: result.iterations,
        converged: result.converged,
    }
}

/// Local descent on the sphere from `start`; never returns a value above the start value.
pub fn refine(state: &XState, start: &Vec3, tol: f64) -> Result<Refinement> {
    refine_bounded(state, start, tol, DEFAULT_MAX_ITERATIONS)
}

pub fn refine_bounded(
    state: &XState,
    start: &Vec3,
    tol: f64,
    max_iterations: usize,
) -> Result<Refinement> {
    let n = vec3::norm(start);
    if (n - 1.0).abs() > 1e-12 {
        return Err(Error::Domain {
            what: "|start|",
            value: n,
        });
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain {
            what: "tol",
            value: tol,
        });
    }
    Ok(refine_with(&state.to_params(), start, tol, max_iterations))
}

/// Grid search plus refinement, compared against the analytic minimum.
pub fn verify(state: &XState, config: &OracleConfig) -> Result<OracleReport> {
    let values = grid_values(state, config.resolution)?;
    let params = state.to_params();
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });

    let first = best_indices(&values, 1)[0];
    let mut best = DirectionMin {
        value: values[first],
        direction: halton_direction(first, false),
    };
    let mut iterations = 0;
    let mut converged = true;
    for i in best_indices(&values, config.starts) {
        let r = refine_with(
            &params,
            &halton_direction(i, false),
            config.tol,
            config.max_iterations,
        );
        iterations += r.iterations;
        converged &= r.converged;
        if r.value < best.value {
            best = DirectionMin {
                value: r.value,
                direction: r.direction,
            };
        }
    }

    let analytic = discord::min_conditional_entropy(state).value;
    let discrepancy = analytic - best.value;
    Ok(OracleReport {
        numeric: best.value,
        direction: best.direction,
        analytic,
        discrepancy,
        resolution: config.resolution,
        iterations,
        converged,
        grid_spread: hi - lo,
        flag: if discrepancy > SUBOPTIMAL_THRESHOLD {
            Flag::AnalyticSuboptimal
        } else {
            Flag::Agrees
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrineMin {
    pub value: f64,
    pub frame: Frame,
}

/// Rotates `v` by the rotation vector `omega` (Rodrigues).
fn rotate(v: &Vec3, omega: &[f64]) -> Vec3 {
    let w = [omega[0], omega[1], omega[2]];
    let angle = vec3::norm(&w);
    if angle < 1e-300 {
        return *v;
    }
    let axis = vec3::scale(&w, 1.0 / angle);
    let (s, c) = angle.sin_cos();
    let kxv = vec3::cross(&axis, v);
    let kdv = vec3::dot(&axis, v);
    vec3::add(
        &vec3::add(&vec3::scale(v, c), &vec3::scale(&kxv, s)),
        &vec3::scale(&axis, kdv * (1.0 - c)),
    )
}

fn trine_frames(resolution: usize) -> Vec<Frame> {
    let mut frames = Vec::with_capacity(resolution * TRINE_TWIST_STEPS);
    for z in sphere_directions(resolution) {
        let e1 = vec3::orthogonal(&z);
        let e2 = vec3::cross(&z, &e1);
        for j in 0..TRINE_TWIST_STEPS {
            let g = std::f64::consts::PI * j as f64 / TRINE_TWIST_STEPS as f64;
            let x = vec3::add(&vec3::scale(&e1, g.cos()), &vec3::scale(&e2, g.sin()));
            frames.push(Frame::orthonormalized(&x, &z));
        }
    }
    frames
}

/// Minimal conditional entropy over trine POVMs on B.
///
/// Frames are sampled as `resolution` full-sphere directions for `z` times a
/// fixed set of twists of `x` about `z`; the best few are refined by a
/// three-parameter simplex over rotations.
pub fn trine_min(state: &XState, resolution: usize) -> Result<TrineMin> {
    check_resolution(resolution)?;
    let params = state.to_params();
    let frames = trine_frames(resolution);
    let values: Vec<f64> = frames
        .par_iter()
        .map(|f| trine_conditional_entropy_with(&params, f))
        .collect();
    let mut best = TrineMin {
        value: f64::INFINITY,
        frame: Frame::canonical(),
    };
    for i in best_indices(&values, 3) {
        let base = frames[i];
        let moved = |omega: &[f64]| {
            Frame::orthonormalized(&rotate(&base.x(), omega), &rotate(&base.z(), omega))
        };
        let result = nelder_mead(
            |omega| trine_conditional_entropy_with(&params, &moved(omega)),
            &[0.0, 0.0, 0.0],
            0.1,
            DEFAULT_TOL,
            4 * DEFAULT_MAX_ITERATIONS,
        );
        let (value, frame) = if result.value < values[i] {
            (result.value, moved(&result.point))
        } else {
            (values[i], base)
        };
        if value < best.value {
            best = TrineMin { value, frame };
        }
    }
    Ok(best)
}

/// Trine-POVM classical correlation set against the von Neumann one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrineComparison {
    pub trine: TrineMin,
    pub trine_classical_correlation: f64,
    pub vn_classical_correlation: f64,
    /// `vn - trine`; positive when the trine measurement extracts less.
    pub gap: f64,
}

pub fn trine_comparison(state: &XState, resolution: usize) -> Result<TrineComparison> {
    let trine = trine_min(state, resolution)?;
    let (s_a, _) = marginal_entropies(state);
    let trine_c = s_a - trine.value;
    let vn_c = discord::classical_correlation(state);
    Ok(TrineComparison {
        trine,
        trine_classical_correlation: trine_c,
        vn_classical_correlation: vn_c,
        gap: vn_c - trine_c,
    })
}

/// Random X-state: diagonal uniform on the simplex, coherence moduli uniform
/// within their positivity bounds, phases uniform.
pub fn sample_state<R: Rng + ?Sized>(rng: &mut R) -> XState {
    let mut cuts = [rng.gen::<f64>(), rng.gen::<f64>(), rng.gen::<f64>()];
    cuts.sort_by(f64::total_cmp);
    let pops = [cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], 1.0 - cuts[2]];
    let tau = 2.0 * std::f64::consts::PI;
    let r14 = rng.gen::<f64>() * (pops[0] * pops[3]).sqrt();
    let r23 = rng.gen::<f64>() * (pops[1] * pops[2]).sqrt();
    let rho14 = num_complex::Complex64::from_polar(r14, tau * rng.gen::<f64>());
    let rho23 = num_complex::Complex64::from_polar(r23, tau * rng.gen::<f64>());
    XState::new(RawElements {
        rho11: pops[0],
        rho22: pops[1],
        rho33: pops[2],
        rho44: pops[3],
        rho14,
        rho23,
    })
    .expect("sampler produces valid states")
}

/// Random state with `rho11 = rho44`, `rho22 = rho33` and real coherences.
pub fn sample_symmetric_state<R: Rng + ?Sized>(rng: &mut R) -> XState {
    let outer = rng.gen::<f64>();
    let (p, q) = (0.5 * outer, 0.5 * (1.0 - outer));
    let rho14 = (2.0 * rng.gen::<f64>() - 1.0) * p;
    let rho23 = (2.0 * rng.gen::<f64>() - 1.0) * q;
    XState::new(RawElements {
        rho11: p,
        rho22: q,
        rho33: q,
        rho44: p,
        rho14: num_complex::Complex64::new(rho14, 0.0),
        rho23: num_complex::Complex64::new(rho23, 0.0),
    })
    .expect("sampler produces valid states")
}

/// `count` states from [`sample_state`], reproducible from `seed`.
pub fn random_states(count: usize, seed: u64) -> Vec<XState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| sample_state(&mut rng)).collect()
}

pub fn random_symmetric_states(count: usize, seed: u64) -> Vec<XState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| sample_symmetric_state(&mut rng))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditSummary {
    pub reports: Vec<OracleReport>,
    pub max_discrepancy: f64,
    pub min_discrepancy: f64,
    pub suboptimal: usize,
}

/// Runs [`verify`] on every state, in parallel; reports keep the input order.
pub fn audit(states: &[XState], config: &OracleConfig) -> Result<AuditSummary> {
    let reports = states
        .par_iter()
        .map(|s| verify(s, config))
        .collect::<Result<Vec<_>>>()?;
    let max_discrepancy = reports
        .iter()
        .map(|r| r.discrepancy)
        .fold(f64::NEG_INFINITY, f64::max);
    let min_discrepancy = reports
        .iter()
        .map(|r| r.discrepancy)
        .fold(f64::INFINITY, f64::min);
    let suboptimal = reports
        .iter()
        .filter(|r| r.flag == Flag::AnalyticSuboptimal)
        .count();
    Ok(AuditSummary {
        reports,
        max_discrepancy,
        min_discrepancy,
        suboptimal,
    })
}
