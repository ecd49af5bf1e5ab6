//! Oracle + diffusion iteration, the exact two-dimensional model, query-count
//! formulas, amplitude amplification and the threshold-triggered run.
//!
//! Angle convention: the overlap between the initial state and the target
//! subspace is `cos θ`. Success formulas are written with the complementary
//! angle `α = π/2 − θ`, so `sin α = overlap` and the success probability after
//! `k` iterations is `sin²((2k+1)α)`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::statevec::StateVector;

/// Relative slack under which two success probabilities count as tied.
const TIE_TOLERANCE: f64 = 1e-12;

/// One Grover search problem.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpec {
    n: usize,
    targets: Vec<usize>,
    oracle_phase: f64,
    diffusion_phase: f64,
    initial: StateVector,
}

impl SearchSpec {
    /// Uniform initial state, both phases `π`.
    pub fn new(n: usize, targets: &[usize]) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n, 2));
        }
        let targets = validate_targets(n, targets)?;
        Ok(Self {
            n,
            targets,
            oracle_phase: PI,
            diffusion_phase: PI,
            initial: StateVector::uniform(n)?,
        })
    }

    pub fn with_oracle_phase(mut self, phase: f64) -> Result<Self> {
        self.oracle_phase = validate_phase("oracle_phase", phase)?;
        Ok(self)
    }

    pub fn with_diffusion_phase(mut self, phase: f64) -> Result<Self> {
        self.diffusion_phase = validate_phase("diffusion_phase", phase)?;
        Ok(self)
    }

    /// Replaces the initial state (and diffusion axis) by a generic state.
    pub fn with_initial(mut self, initial: StateVector) -> Result<Self> {
        if initial.dim() != self.n {
            return Err(Error::DimensionMismatch(initial.dim(), self.n));
        }
        let norm = initial.norm_sqr();
        if (norm - 1.0).abs() > crate::statevec::AXIS_NORM_TOLERANCE {
            return Err(Error::NotNormalized(norm));
        }
        self.initial = initial;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn oracle_phase(&self) -> f64 {
        self.oracle_phase
    }

    pub fn diffusion_phase(&self) -> f64 {
        self.diffusion_phase
    }

    pub fn initial(&self) -> &StateVector {
        &self.initial
    }

    /// Norm of the initial state's projection onto the target subspace.
    pub fn target_overlap(&self) -> f64 {
        self.success_probability(&self.initial).sqrt()
    }

    /// Probability of `state` on the target set.
    pub fn success_probability(&self, state: &StateVector) -> f64 {
        let a = state.amplitudes();
        self.targets.iter().map(|&t| a[t].norm_sqr()).sum()
    }

    fn is_reflection_diffusion(&self) -> bool {
        self.diffusion_phase.abs() == PI
    }
}

fn validate_targets(n: usize, targets: &[usize]) -> Result<Vec<usize>> {
    if targets.is_empty() {
        return Err(Error::param("targets", "target set must be non-empty"));
    }
    if targets.len() >= n {
        return Err(Error::param(
            "targets",
            format!("need fewer targets than items ({} >= {n})", targets.len()),
        ));
    }
    let mut sorted = targets.to_vec();
    sorted.sort_unstable();
    if let Some(&bad) = sorted.iter().find(|&&t| t >= n) {
        return Err(Error::IndexOutOfRange { index: bad, dim: n });
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::param("targets", "duplicate target index"));
    }
    Ok(sorted)
}

/// Phases are accepted on `(−2π, 2π)` minus zero, so that `−π` and `π` can
/// both be expressed.
fn validate_phase(name: &'static str, phase: f64) -> Result<f64> {
    if !phase.is_finite() || phase == 0.0 || phase.abs() >= 2.0 * PI {
        return Err(Error::param(
            name,
            format!("{phase} must be nonzero and strictly inside (-2pi, 2pi)"),
        ));
    }
    Ok(phase)
}

/// One application of the search operator.
///
/// The oracle multiplies every target amplitude by `e^{iφ}`; the diffusion
/// reflects about the initial state with the diffusion phase. When the
/// diffusion phase is `π` the result is `−R_s R_t · state`; otherwise the
/// leading sign is dropped.
pub fn grover_step(state: &StateVector, spec: &SearchSpec) -> Result<StateVector> {
    if state.dim() != spec.n {
        return Err(Error::DimensionMismatch(state.dim(), spec.n));
    }
    let mut next = state.clone();
    step_in_place(&mut next, spec)?;
    Ok(next)
}

fn step_in_place(state: &mut StateVector, spec: &SearchSpec) -> Result<()> {
    state.phase_indices_in_place(&spec.targets, spec.oracle_phase);
    state.reflect_about_in_place(&spec.initial, spec.diffusion_phase)?;
    if spec.is_reflection_diffusion() {
        state.scale_in_place(Complex64::new(-1.0, 0.0));
    }
    Ok(())
}

/// Why a trajectory ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    /// The requested number of steps was completed.
    FixedSteps,
    /// The success probability reached the trigger level.
    Threshold,
    /// The trigger level was never reached before the step cap.
    StepCap,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrajectoryPoint {
    pub step: usize,
    pub success_probability: f64,
}

/// Success probability after each iteration, starting at step 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub points: Vec<TrajectoryPoint>,
    pub spec: SearchSpec,
    pub stop_reason: StopReason,
    pub final_state: StateVector,
}

impl Trajectory {
    pub fn probabilities(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.success_probability).collect()
    }

    pub fn last(&self) -> TrajectoryPoint {
        *self.points.last().expect("trajectory always holds step 0")
    }

    /// Highest success probability; ties go to the earlier step.
    pub fn peak(&self) -> TrajectoryPoint {
        let mut best = self.points[0];
        for p in &self.points[1..] {
            if p.success_probability > best.success_probability * (1.0 + TIE_TOLERANCE) {
                best = *p;
            }
        }
        best
    }
}

/// Applies the search operator `steps` times from the spec's initial state.
pub fn run(spec: &SearchSpec, steps: usize) -> Result<Trajectory> {
    iterate(spec, steps, None)
}

/// Iterates until the success probability reaches `tau`, or until
/// `ceil(10·√N)` steps have been taken.
pub fn run_until_threshold(spec: &SearchSpec, tau: f64) -> Result<Trajectory> {
    if !(tau > 0.0 && tau <= 1.0) {
        return Err(Error::param("tau", format!("{tau} is outside (0, 1]")));
    }
    iterate(spec, threshold_step_cap(spec.n), Some(tau))
}

/// Step cap used by the threshold-triggered runs.
pub fn threshold_step_cap(n: usize) -> usize {
    (10.0 * (n as f64).sqrt()).ceil() as usize
}

fn iterate(spec: &SearchSpec, max_steps: usize, tau: Option<f64>) -> Result<Trajectory> {
    let mut state = spec.initial.clone();
    let mut points = Vec::with_capacity(max_steps + 1);
    let p0 = spec.success_probability(&state);
    points.push(TrajectoryPoint {
        step: 0,
        success_probability: p0,
    });
    let reached = |p: f64| tau.is_some_and(|t| p >= t);
    let mut stop_reason = if tau.is_some() {
        StopReason::StepCap
    } else {
        StopReason::FixedSteps
    };
    if reached(p0) {
        stop_reason = StopReason::Threshold;
    } else {
        for step in 1..=max_steps {
            step_in_place(&mut state, spec)?;
            let p = spec.success_probability(&state);
            points.push(TrajectoryPoint {
                step,
                success_probability: p,
            });
            if reached(p) {
                stop_reason = StopReason::Threshold;
                break;
            }
        }
    }
    Ok(Trajectory {
        points,
        spec: spec.clone(),
        stop_reason,
        final_state: state,
    })
}

/// The exact two-dimensional description of the iteration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TwoDModel {
    /// `cos θ`: overlap between the initial state and the target subspace.
    pub overlap: f64,
    /// `θ = arccos(overlap)`.
    pub theta: f64,
    /// `α = π/2 − θ = arcsin(overlap)`.
    pub alpha: f64,
    /// Rotation angle per iteration in the search plane, `π − 2θ`.
    pub rotation_per_iteration: f64,
    /// Eigenvalues of the effective Hamiltonian generator `H_G τ`, ordered
    /// as `[2θ − π, π − 2θ]`.
    pub hg_eigenvalues: [f64; 2],
    /// Iteration count that maximizes the success probability.
    pub optimal_q: usize,
}

impl TwoDModel {
    /// `sin²((2k+1)α)`.
    pub fn success_probability(&self, k: usize) -> f64 {
        ((2 * k + 1) as f64 * self.alpha).sin().powi(2)
    }
}

pub fn two_d_model(overlap: f64) -> Result<TwoDModel> {
    if !(overlap > 0.0 && overlap <= 1.0) {
        return Err(Error::param("overlap", format!("{overlap} is outside (0, 1]")));
    }
    let theta = overlap.acos();
    let alpha = overlap.asin();
    let mut model = TwoDModel {
        overlap,
        theta,
        alpha,
        rotation_per_iteration: PI - 2.0 * theta,
        hg_eigenvalues: [2.0 * theta - PI, PI - 2.0 * theta],
        optimal_q: 0,
    };
    let mut best = model.success_probability(0);
    for k in 1..=first_period_limit(alpha) {
        let p = model.success_probability(k);
        if p > best * (1.0 + TIE_TOLERANCE) {
            best = p;
            model.optimal_q = k;
        }
    }
    Ok(model)
}

/// Optimal iteration count for `m` marked items among `n`.
/// Last iteration count before the success probability starts its second
/// rise: `floor(π/(2α) − 1/2)`. The argmax over `[0, limit]` is the first peak.
///
/// Later revivals can land closer to one than the first peak; they cost
/// about three times as many queries and are not considered.
pub fn first_period_limit(alpha: f64) -> usize {
    (FRAC_PI_2 / alpha - 0.5 + 1e-9).floor().max(0.0) as usize
}

pub fn optimal_queries(n: usize, m: usize) -> Result<usize> {
    if m < 1 || m >= n {
        return Err(Error::param("m", format!("need 1 <= m < n, got m={m}, n={n}")));
    }
    Ok(two_d_model((m as f64 / n as f64).sqrt())?.optimal_q)
}

/// Database size searched exactly with `q` queries:
/// `N = 1 / sin²(π / (2(2q+1)))`, rounded to 12 significant digits.
pub fn database_size_for_queries(q: u32) -> Result<f64> {
    if q < 1 {
        return Err(Error::param("q", "need at least one query"));
    }
    let x = PI / (2.0 * (2.0 * q as f64 + 1.0));
    Ok(round_significant(1.0 / x.sin().powi(2), 12))
}

/// Largest database a binary search resolves with `q` Boolean queries, `2^q`.
pub fn boolean_search_size(q: u32) -> Result<u64> {
    if q < 1 {
        return Err(Error::param("q", "need at least one query"));
    }
    if q > 62 {
        return Err(Error::Overflow(format!("2^{q} exceeds the supported range")));
    }
    Ok(1u64 << q)
}

pub fn round_significant(x: f64, digits: i32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(digits - 1 - magnitude);
    (x * scale).round() / scale
}

/// An eigenpair of the effective Hamiltonian in the basis `{|t⟩, |t⊥⟩}`.
#[derive(Debug, Clone, PartialEq)]
pub struct HgEigenpair {
    pub eigenvalue: f64,
    pub eigenvector: StateVector,
}

/// The search operator restricted to the plane, in the basis `{|t⟩, |t⊥⟩}`.
pub fn plane_operator(theta: f64) -> [[Complex64; 2]; 2] {
    let (s, c) = theta.sin_cos();
    let r = |x: f64| Complex64::new(x, 0.0);
    [
        [r(1.0 - 2.0 * c * c), r(2.0 * c * s)],
        [r(-2.0 * c * s), r(2.0 * s * s - 1.0)],
    ]
}

/// Both eigenpairs of `H_G τ = (2θ − π)σ₂`.
///
/// Each pair is checked against the plane operator: `U_G v = e^{−iλ} v`
/// within `1e-10`.
pub fn hg_spectrum(overlap: f64) -> Result<Vec<HgEigenpair>> {
    if !(0.0..=1.0).contains(&overlap) {
        return Err(Error::param("overlap", format!("{overlap} is outside (0, 1)")));
    }
    if overlap == 0.0 || overlap == 1.0 {
        return Err(Error::DegenerateGeometry(format!(
            "overlap {overlap} collapses the search plane"
        )));
    }
    let theta = overlap.acos();
    let u = plane_operator(theta);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let pairs = [
        (2.0 * theta - PI, Complex64::new(0.0, h)),
        (PI - 2.0 * theta, Complex64::new(0.0, -h)),
    ];
    pairs
        .into_iter()
        .map(|(lambda, second)| {
            let v = [Complex64::new(h, 0.0), second];
            let expected = Complex64::from_polar(1.0, -lambda);
            for row in 0..2 {
                let uv = u[row][0] * v[0] + u[row][1] * v[1];
                let residual = (uv - expected * v[row]).norm();
                if residual > 1e-10 {
                    return Err(Error::NoConvergence(format!(
                        "eigenpair check failed with residual {residual:e}"
                    )));
                }
            }
            Ok(HgEigenpair {
                eigenvalue: lambda,
                eigenvector: StateVector::from_amplitudes(v.to_vec())?,
            })
        })
        .collect()
}

/// Eigenphases of the simulated search operator restricted to the plane
/// spanned by the initial state and its target-subspace projection.
///
/// The full N-dimensional step is applied to an orthonormal basis of that
/// plane, the 2×2 restriction is read back off, and its eigenvalues are
/// returned as phases in `(−π, π]`, sorted ascending.
pub fn plane_eigenphases(spec: &SearchSpec) -> Result<[f64; 2]> {
    let n = spec.n;
    let init = spec.initial.amplitudes();
    let zero = Complex64::new(0.0, 0.0);
    let mut t = vec![zero; n];
    for &i in &spec.targets {
        t[i] = init[i];
    }
    let overlap = spec.target_overlap();
    if overlap == 0.0 || (1.0 - overlap).abs() < 1e-15 {
        return Err(Error::DegenerateGeometry(format!(
            "target overlap {overlap} does not span a plane"
        )));
    }
    t.iter_mut().for_each(|a| *a /= overlap);
    let mut perp: Vec<Complex64> = init.iter().zip(&t).map(|(s, t)| s - t * overlap).collect();
    let perp_norm = perp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    perp.iter_mut().for_each(|a| *a /= perp_norm);
    let basis = [
        StateVector::from_amplitudes(t)?,
        StateVector::from_amplitudes(perp)?,
    ];
    let mut m = [[zero; 2]; 2];
    for (col, b) in basis.iter().enumerate() {
        let image = grover_step(b, spec)?;
        for (row, e) in basis.iter().enumerate() {
            m[row][col] = e.inner_product(&image)?;
        }
    }
    let trace = m[0][0] + m[1][1];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let disc = (trace * trace - 4.0 * det).sqrt();
    let mut phases = [((trace + disc) / 2.0).arg(), ((trace - disc) / 2.0).arg()];
    phases.sort_by(f64::total_cmp);
    Ok(phases)
}

/// Result of amplitude amplification from a generic initial state.
#[derive(Debug, Clone, PartialEq)]
pub struct Amplification {
    pub trajectory: Trajectory,
    pub best_step: usize,
    pub best_probability: f64,
    pub overlap: f64,
}

/// Grover iteration with the diffusion taken about `initial`, run for
/// `ceil(3/overlap)` steps; reports the best step within the first
/// oscillation period.
pub fn amplitude_amplify(initial: &StateVector, targets: &[usize]) -> Result<Amplification> {
    let spec = SearchSpec::new(initial.dim(), targets)?.with_initial(initial.clone())?;
    let overlap = spec.target_overlap();
    if overlap < 1e-12 {
        return Err(Error::NoConvergence(
            "initial state has no overlap with the target subspace".into(),
        ));
    }
    let steps = (3.0 / overlap).ceil() as usize;
    let trajectory = run(&spec, steps)?;
    let window = first_period_limit(overlap.min(1.0).asin()).min(steps);
    let peak = Trajectory {
        points: trajectory.points[..=window].to_vec(),
        ..trajectory.clone()
    }
    .peak();
    debug_assert!(peak.step <= (2.0 / overlap).ceil() as usize);
    Ok(Amplification {
        best_step: peak.step,
        best_probability: peak.success_probability,
        overlap,
        trajectory,
    })
}

/// `α` for a database of size `n` with `m` marked items.
pub fn search_angle(n: usize, m: usize) -> f64 {
    (m as f64 / n as f64).sqrt().asin()
}

/// `π/(2α)`: the number of iterations between consecutive success peaks.
pub fn revival_period(alpha: f64) -> f64 {
    FRAC_PI_2 / alpha
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn spec(n: usize, targets: &[usize]) -> SearchSpec {
        SearchSpec::new(n, targets).unwrap()
    }

    /// Dense N×N matrix for `−R_s R_t`, built entry by entry.
    fn explicit_operator(n: usize, target: usize) -> Vec<Vec<f64>> {
        let inv = 1.0 / n as f64;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let r_s = if i == j { 1.0 } else { 0.0 } - 2.0 * inv;
                        let r_t = if j == target { -1.0 } else { 1.0 };
                        -r_s * r_t
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn spec_validation() {
        assert!(SearchSpec::new(1, &[0]).is_err());
        assert!(SearchSpec::new(4, &[]).is_err());
        assert!(SearchSpec::new(4, &[0, 1, 2, 3]).is_err());
        assert!(SearchSpec::new(4, &[1, 1]).is_err());
        assert_eq!(
            SearchSpec::new(4, &[4]),
            Err(Error::IndexOutOfRange { index: 4, dim: 4 })
        );
        assert!(spec(4, &[0]).with_oracle_phase(0.0).is_err());
        assert!(spec(4, &[0]).with_oracle_phase(2.0 * PI).is_err());
        assert!(spec(4, &[0]).with_diffusion_phase(f64::NAN).is_err());
        assert!(spec(4, &[0]).with_oracle_phase(-PI).is_ok());
        let bad_init = StateVector::from_real(&[1.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(spec(4, &[0]).with_initial(bad_init).is_err());
    }

    #[test]
    fn single_step_finds_one_of_four() {
        let s = spec(4, &[0]);
        let out = grover_step(s.initial(), &s).unwrap();
        assert_abs_diff_eq!(out.probability(0).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(out.amplitudes()[0].re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn step_matches_explicit_operator() {
        let s = spec(4, &[0]);
        let op = explicit_operator(4, 0);
        let t = StateVector::basis(4, 0).unwrap();
        let out = grover_step(&t, &s).unwrap();
        for i in 0..4 {
            assert_abs_diff_eq!(out.amplitudes()[i].re, op[i][0], epsilon = 1e-15);
        }
        // The explicit operator moves the target on by one more rotation of π/3.
        assert_abs_diff_eq!(out.probability(0).unwrap(), 0.25, epsilon = 1e-15);
        let u = StateVector::uniform(4).unwrap();
        let via_matrix: Vec<f64> = (0..4).map(|i| (0..4).map(|j| op[i][j] * 0.5).sum()).collect();
        let via_step = grover_step(&u, &s).unwrap();
        for i in 0..4 {
            assert_abs_diff_eq!(via_step.amplitudes()[i].re, via_matrix[i], epsilon = 1e-15);
        }
    }

    #[test]
    fn sixteen_items_three_steps() {
        let t = run(&spec(16, &[0]), 3).unwrap();
        let expected = (7.0 * 0.25f64.asin()).sin().powi(2);
        assert_abs_diff_eq!(t.last().success_probability, expected, epsilon = 1e-12);
        assert_abs_diff_eq!(expected, 0.9613, epsilon = 1e-4);
    }

    #[test]
    fn run_examples() {
        let s = spec(4, &[0]);
        assert_eq!(run(&s, 0).unwrap().probabilities(), vec![0.25]);
        let one = run(&s, 1).unwrap().probabilities();
        assert_eq!(one.len(), 2);
        assert_abs_diff_eq!(one[1], 1.0, epsilon = 1e-12);
        let three = run(&s, 3).unwrap();
        assert_eq!(three.stop_reason, StopReason::FixedSteps);
        for (p, e) in three.probabilities().iter().zip([0.25, 1.0, 0.25, 0.25]) {
            assert_abs_diff_eq!(*p, e, epsilon = 1e-12);
        }
    }

    #[test]
    fn threshold_examples() {
        let t = run_until_threshold(&spec(4, &[0]), 0.2).unwrap();
        assert_eq!(t.last().step, 0);
        assert_eq!(t.stop_reason, StopReason::Threshold);

        // sin²(5·asin(1/4)) ≈ 0.9084 already clears 0.9 at step 2.
        let t = run_until_threshold(&spec(16, &[0]), 0.9).unwrap();
        assert_eq!(t.last().step, 2);
        assert_abs_diff_eq!(t.last().success_probability, 0.9084, epsilon = 1e-4);
        let t = run_until_threshold(&spec(16, &[0]), 0.95).unwrap();
        assert_eq!(t.last().step, 3);
        assert_abs_diff_eq!(t.last().success_probability, 0.9613, epsilon = 1e-4);

        let t = run_until_threshold(&spec(4, &[0]), 0.999).unwrap();
        assert_eq!(t.last().step, 1);
        assert_abs_diff_eq!(t.last().success_probability, 1.0, epsilon = 1e-12);

        assert!(run_until_threshold(&spec(4, &[0]), 0.0).is_err());
        assert!(run_until_threshold(&spec(4, &[0]), 1.5).is_err());
    }

    #[test]
    fn threshold_cap_is_recorded() {
        // N = 8 never exceeds ~0.95, so tau = 1 runs to the cap.
        let t = run_until_threshold(&spec(8, &[3]), 1.0).unwrap();
        assert_eq!(t.stop_reason, StopReason::StepCap);
        assert_eq!(t.last().step, threshold_step_cap(8));
        assert_eq!(threshold_step_cap(8), 29);
    }

    #[test]
    fn two_d_model_examples() {
        let m = two_d_model(0.5).unwrap();
        assert_abs_diff_eq!(m.theta, PI / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m.rotation_per_iteration, PI / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m.hg_eigenvalues[0], -PI / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m.hg_eigenvalues[1], PI / 3.0, epsilon = 1e-15);
        assert_eq!(m.optimal_q, 1);

        let m = two_d_model(1.0).unwrap();
        assert_eq!(m.theta, 0.0);
        assert_eq!(m.rotation_per_iteration, PI);
        assert_eq!(m.optimal_q, 0);

        let m = two_d_model(0.1).unwrap();
        assert_eq!(m.optimal_q, 7);
        assert_abs_diff_eq!(m.success_probability(7), (15.0 * 0.1f64.asin()).sin().powi(2), epsilon = 1e-15);
        assert_abs_diff_eq!(m.success_probability(7), 0.99534, epsilon = 1e-5);

        assert!(two_d_model(0.0).is_err());
        assert!(two_d_model(1.01).is_err());
    }

    #[test]
    fn two_d_model_q_matches_simulated_argmax() {
        let p = run(&spec(100, &[42]), 30).unwrap().probabilities();
        let first_max = (0..p.len() - 1).find(|&k| p[k] >= p[k + 1]).unwrap();
        assert_eq!(first_max, two_d_model(0.1).unwrap().optimal_q);
    }

    #[test]
    fn optimal_q_ties_prefer_fewer_queries() {
        // N = 2: every step gives probability 1/2.
        assert_eq!(two_d_model(std::f64::consts::FRAC_1_SQRT_2).unwrap().optimal_q, 0);
    }

    #[test]
    fn optimal_queries_examples() {
        assert_eq!(optimal_queries(4, 1).unwrap(), 1);
        assert_eq!(optimal_queries(16, 4).unwrap(), 1);
        assert_eq!(optimal_queries(1024, 1).unwrap(), 25);
        assert_eq!(optimal_queries(16, 1).unwrap(), 3);
        assert!(optimal_queries(4, 4).is_err());
        assert!(optimal_queries(4, 0).is_err());
        let t = run(&spec(16, &[0, 5, 9, 11]), 2).unwrap();
        assert_eq!(t.peak().step, 1);
    }

    #[test]
    fn database_sizes() {
        assert_eq!(database_size_for_queries(1).unwrap(), 4.0);
        assert_abs_diff_eq!(database_size_for_queries(2).unwrap(), 10.47213595500, epsilon = 1e-10);
        assert_abs_diff_eq!(database_size_for_queries(3).unwrap(), 20.1956693581, epsilon = 1e-9);
        assert!(database_size_for_queries(0).is_err());
    }

    #[test]
    fn boolean_sizes() {
        assert_eq!(boolean_search_size(1).unwrap(), 2);
        assert_eq!(boolean_search_size(2).unwrap(), 4);
        assert_eq!(boolean_search_size(3).unwrap(), 8);
        assert_eq!(boolean_search_size(62).unwrap(), 1 << 62);
        assert!(matches!(boolean_search_size(63), Err(Error::Overflow(_))));
        assert!(boolean_search_size(0).is_err());
    }

    #[test]
    fn hg_spectrum_examples() {
        let pairs = hg_spectrum(0.5).unwrap();
        assert_abs_diff_eq!(pairs[0].eigenvalue, -PI / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(pairs[1].eigenvalue, PI / 3.0, epsilon = 1e-15);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let v0 = pairs[0].eigenvector.amplitudes();
        let v1 = pairs[1].eigenvector.amplitudes();
        assert_abs_diff_eq!(v0[0].re, h, epsilon = 1e-15);
        assert_abs_diff_eq!(v0[1].im, h, epsilon = 1e-15);
        assert_abs_diff_eq!(v1[1].im, -h, epsilon = 1e-15);

        for overlap in [0.01, 0.2, 0.5, 0.9] {
            let p = hg_spectrum(overlap).unwrap();
            assert_abs_diff_eq!(p[0].eigenvalue + p[1].eigenvalue, 0.0, epsilon = 1e-15);
        }
        let p = hg_spectrum(std::f64::consts::FRAC_1_SQRT_2).unwrap();
        assert_abs_diff_eq!(p[0].eigenvalue, -PI / 2.0, epsilon = 1e-12);

        assert!(matches!(hg_spectrum(0.0), Err(Error::DegenerateGeometry(_))));
        assert!(matches!(hg_spectrum(1.0), Err(Error::DegenerateGeometry(_))));
    }

    #[test]
    fn plane_eigenphases_match_rotation() {
        let s = spec(4, &[2]);
        let phases = plane_eigenphases(&s).unwrap();
        assert_abs_diff_eq!(phases[0], -PI / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(phases[1], PI / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn amplification_examples() {
        let init = StateVector::from_real(&[0.6, 0.8, 0.0]).unwrap();
        let a = amplitude_amplify(&init, &[0]).unwrap();
        assert_eq!(a.best_step, 1);
        let expected = (3.0 * 0.6f64.asin()).sin().powi(2);
        assert_abs_diff_eq!(a.best_probability, expected, epsilon = 1e-12);
        assert_abs_diff_eq!(a.best_probability, 0.876, epsilon = 1e-3);

        let init = StateVector::basis(5, 2).unwrap();
        let a = amplitude_amplify(&init, &[2]).unwrap();
        assert_eq!(a.best_step, 0);
        assert_eq!(a.best_probability, 1.0);

        let a = amplitude_amplify(&StateVector::uniform(4).unwrap(), &[0]).unwrap();
        let r = run(&spec(4, &[0]), a.trajectory.points.len() - 1).unwrap();
        assert_eq!(a.trajectory.probabilities(), r.probabilities());

        let init = StateVector::basis(4, 1).unwrap();
        assert!(matches!(
            amplitude_amplify(&init, &[0]),
            Err(Error::NoConvergence(_))
        ));
    }

    #[test]
    fn standard_and_generalized_step_agree_bitwise() {
        let s = spec(32, &[3, 17]);
        let g = s.clone().with_oracle_phase(PI).unwrap().with_diffusion_phase(PI).unwrap();
        let mut a = s.initial().clone();
        // Textbook form: negate targets, invert about the mean.
        for _ in 0..5 {
            let mut amps = a.amplitudes().to_vec();
            for &t in s.targets() {
                amps[t] = -amps[t];
            }
            let mean: Complex64 = s.initial().amplitudes().iter().zip(&amps).map(|(x, y)| x.conj() * y).sum();
            let coeff = Complex64::new(2.0, 0.0) * mean;
            let reflected: Vec<Complex64> = amps
                .iter()
                .zip(s.initial().amplitudes())
                .map(|(y, x)| -(y - coeff * x))
                .collect();
            let next = StateVector::from_amplitudes(reflected).unwrap();
            assert_eq!(grover_step(&a, &g).unwrap(), next);
            a = next;
        }
    }

    #[test]
    fn attractive_and_repulsive_oracles_coincide() {
        let plus = run(&spec(64, &[7]).with_oracle_phase(PI).unwrap(), 40).unwrap();
        let minus = run(&spec(64, &[7]).with_oracle_phase(-PI).unwrap(), 40).unwrap();
        for (a, b) in plus.probabilities().iter().zip(minus.probabilities()) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-12);
        }
    }
}
