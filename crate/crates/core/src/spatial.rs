//! Spatial search: continuous-time walks on the complete graph, coined
//! discrete-time walks on tori, and multi-target revivals.
//!
//! Coined walk convention: Grover coin `2|u⟩⟨u| − I` on unmarked vertices,
//! `−I` on marked ones, then the flip-flop shift, which moves the amplitude
//! along its edge and relabels it with the direction pointing back.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grover::{self, SearchSpec, Trajectory};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GraphKind {
    Complete,
    Torus1d { length: usize },
    Torus2d { width: usize, height: usize },
    Custom,
}

/// Undirected, connected, loop-free graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    kind: GraphKind,
    vertex_count: usize,
    // Left empty for complete graphs; neighbours are generated on demand.
    lists: Vec<Vec<usize>>,
}

impl Graph {
    pub fn complete(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n, 2));
        }
        Ok(Self {
            kind: GraphKind::Complete,
            vertex_count: n,
            lists: Vec::new(),
        })
    }

    /// Cycle of `length` vertices; directions are `[+1, −1]`.
    pub fn torus1d(length: usize) -> Result<Self> {
        if length < 3 {
            return Err(Error::InvalidDimension(length, 3));
        }
        let lists = (0..length)
            .map(|v| vec![(v + 1) % length, (v + length - 1) % length])
            .collect();
        Ok(Self {
            kind: GraphKind::Torus1d { length },
            vertex_count: length,
            lists,
        })
    }

    /// `width × height` torus, vertex `y·width + x`; directions are
    /// `[+x, −x, +y, −y]`.
    pub fn torus2d(width: usize, height: usize) -> Result<Self> {
        if width < 3 || height < 3 {
            return Err(Error::InvalidDimension(width.min(height), 3));
        }
        let at = |x: usize, y: usize| y * width + x;
        let mut lists = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                lists.push(vec![
                    at((x + 1) % width, y),
                    at((x + width - 1) % width, y),
                    at(x, (y + 1) % height),
                    at(x, (y + height - 1) % height),
                ]);
            }
        }
        Ok(Self {
            kind: GraphKind::Torus2d { width, height },
            vertex_count: width * height,
            lists,
        })
    }

    pub fn from_neighbor_lists(lists: Vec<Vec<usize>>) -> Result<Self> {
        let n = lists.len();
        if n < 2 {
            return Err(Error::InvalidDimension(n, 2));
        }
        for (v, nbrs) in lists.iter().enumerate() {
            for &u in nbrs {
                if u >= n {
                    return Err(Error::IndexOutOfRange { index: u, dim: n });
                }
                if u == v {
                    return Err(Error::param("graph", format!("self-loop at {v}")));
                }
                if lists[u].iter().filter(|&&w| w == v).count()
                    != nbrs.iter().filter(|&&w| w == u).count()
                {
                    return Err(Error::param("graph", format!("edge {v}-{u} is not symmetric")));
                }
            }
            let mut sorted = nbrs.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::param("graph", format!("repeated edge at {v}")));
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &lists[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::param("graph", "graph is not connected"));
        }
        Ok(Self {
            kind: GraphKind::Custom,
            vertex_count: n,
            lists,
        })
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        match self.kind {
            GraphKind::Complete => (0..self.vertex_count).filter(|&u| u != v).collect(),
            _ => self.lists[v].clone(),
        }
    }

    /// Common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.kind == GraphKind::Complete {
            return Some(self.vertex_count - 1);
        }
        let d = self.lists[0].len();
        self.lists.iter().all(|l| l.len() == d).then_some(d)
    }
}

fn validate_targets(n: usize, targets: &[usize], allow_empty: bool) -> Result<Vec<usize>> {
    if targets.is_empty() && !allow_empty {
        return Err(Error::param("targets", "need at least one marked vertex"));
    }
    let mut sorted = targets.to_vec();
    sorted.sort_unstable();
    if let Some(&bad) = sorted.iter().find(|&&t| t >= n) {
        return Err(Error::IndexOutOfRange { index: bad, dim: n });
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::param("targets", "duplicate marked vertex"));
    }
    Ok(sorted)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WalkSample {
    pub time: f64,
    pub probability: f64,
}

/// Target probability sampled along a continuous-time walk.
#[derive(Debug, Clone, PartialEq)]
pub struct CtqwTrajectory {
    pub samples: Vec<WalkSample>,
    pub dt: f64,
    pub steps: usize,
    /// Number of steps after which the norm drifted by more than `1e-12`
    /// and the state was rescaled.
    pub renormalizations: usize,
    pub max_norm_drift: f64,
}

impl CtqwTrajectory {
    /// First sample of maximal probability.
    pub fn peak(&self) -> WalkSample {
        let mut best = self.samples[0];
        for s in &self.samples[1..] {
            if s.probability > best.probability {
                best = *s;
            }
        }
        best
    }
}

/// Largest step accepted by [`ctqw_search`] for `n` vertices.
pub fn ctqw_max_dt(n: usize) -> f64 {
    0.05 / (n as f64).sqrt()
}

/// Continuous-time search on the complete graph under
/// `H = −γA − Σ_w |w⟩⟨w|`, starting from the uniform state.
///
/// Integrated with classical fourth-order Runge–Kutta at a step `≤ dt` that
/// divides `total_time` evenly. Samples are taken every `max(dt, T/1000)`
/// (rounded to whole steps) and at the final time.
pub fn ctqw_search(
    graph: &Graph,
    gamma: f64,
    targets: &[usize],
    total_time: f64,
    dt: f64,
) -> Result<CtqwTrajectory> {
    if graph.kind != GraphKind::Complete {
        return Err(Error::Unsupported(
            "continuous-time search is only implemented on the complete graph".into(),
        ));
    }
    let n = graph.vertex_count;
    let targets = validate_targets(n, targets, false)?;
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Error::param("gamma", format!("{gamma} must be positive")));
    }
    if !(total_time >= 0.0 && total_time.is_finite()) {
        return Err(Error::param("time", format!("{total_time} must be non-negative")));
    }
    if !(dt > 0.0 && dt <= ctqw_max_dt(n) * (1.0 + 1e-12)) {
        return Err(Error::param(
            "dt",
            format!("{dt} must lie in (0, {}]", ctqw_max_dt(n)),
        ));
    }
    let steps = (total_time / dt).ceil() as usize;
    let h = if steps == 0 { 0.0 } else { total_time / steps as f64 };
    let stride = if steps == 0 {
        1
    } else {
        ((dt.max(total_time / 1000.0) / h).round() as usize).max(1)
    };

    let apply_h = |psi: &[Complex64], out: &mut [Complex64]| {
        let sum: Complex64 = psi.iter().sum();
        for (o, p) in out.iter_mut().zip(psi) {
            *o = -gamma * (sum - p);
        }
        for &t in &targets {
            out[t] -= psi[t];
        }
    };
    // dψ/dt = −iHψ
    let deriv = |psi: &[Complex64], out: &mut [Complex64]| {
        apply_h(psi, out);
        let minus_i = Complex64::new(0.0, -1.0);
        out.iter_mut().for_each(|o| *o *= minus_i);
    };

    let target_prob = |psi: &[Complex64]| targets.iter().map(|&t| psi[t].norm_sqr()).sum::<f64>();
    let mut psi = vec![Complex64::new(1.0 / (n as f64).sqrt(), 0.0); n];
    let mut samples = vec![WalkSample {
        time: 0.0,
        probability: target_prob(&psi),
    }];
    let zero = Complex64::new(0.0, 0.0);
    let (mut k1, mut k2, mut k3, mut k4, mut tmp) =
        (vec![zero; n], vec![zero; n], vec![zero; n], vec![zero; n], vec![zero; n]);
    let mut renormalizations = 0;
    let mut max_norm_drift = 0.0f64;
    for step in 1..=steps {
        deriv(&psi, &mut k1);
        for i in 0..n {
            tmp[i] = psi[i] + k1[i] * (0.5 * h);
        }
        deriv(&tmp, &mut k2);
        for i in 0..n {
            tmp[i] = psi[i] + k2[i] * (0.5 * h);
        }
        deriv(&tmp, &mut k3);
        for i in 0..n {
            tmp[i] = psi[i] + k3[i] * h;
        }
        deriv(&tmp, &mut k4);
        for i in 0..n {
            psi[i] += (k1[i] + (k2[i] + k3[i]) * 2.0 + k4[i]) * (h / 6.0);
        }
        let norm: f64 = psi.iter().map(|a| a.norm_sqr()).sum();
        let drift = (norm - 1.0).abs();
        max_norm_drift = max_norm_drift.max(drift);
        if drift > 1e-12 {
            let s = norm.sqrt();
            psi.iter_mut().for_each(|a| *a /= s);
            renormalizations += 1;
        }
        if step % stride == 0 || step == steps {
            samples.push(WalkSample {
                time: step as f64 * h,
                probability: target_prob(&psi),
            });
        }
    }
    Ok(CtqwTrajectory {
        samples,
        dt: h,
        steps,
        renormalizations,
        max_norm_drift,
    })
}

/// A coined walk on a degree-regular graph. Amplitudes are indexed by
/// `vertex · degree + direction`.
#[derive(Debug, Clone)]
pub struct CoinedWalk {
    vertex_count: usize,
    degree: usize,
    /// Where the flip-flop shift sends each (vertex, direction) slot.
    destination: Vec<usize>,
    marked: Vec<bool>,
}

impl CoinedWalk {
    pub fn new(graph: &Graph, marked: &[usize]) -> Result<Self> {
        let degree = graph
            .regular_degree()
            .ok_or_else(|| Error::param("graph", "coined walk needs a degree-regular graph"))?;
        let n = graph.vertex_count;
        let marked_list = validate_targets(n, marked, true)?;
        let mut destination = vec![0; n * degree];
        for v in 0..n {
            for (d, &u) in graph.neighbors(v).iter().enumerate() {
                let back = graph
                    .neighbors(u)
                    .iter()
                    .position(|&w| w == v)
                    .expect("adjacency is symmetric");
                destination[v * degree + d] = u * degree + back;
            }
        }
        let mut flags = vec![false; n];
        marked_list.iter().for_each(|&m| flags[m] = true);
        Ok(Self {
            vertex_count: n,
            degree,
            destination,
            marked: flags,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.vertex_count * self.degree
    }

    /// Uniform over all vertices and directions.
    pub fn uniform_state(&self) -> Vec<Complex64> {
        vec![Complex64::new(1.0 / (self.dim() as f64).sqrt(), 0.0); self.dim()]
    }

    /// Uniform coin state on a single vertex.
    pub fn localized_state(&self, vertex: usize) -> Result<Vec<Complex64>> {
        if vertex >= self.vertex_count {
            return Err(Error::IndexOutOfRange {
                index: vertex,
                dim: self.vertex_count,
            });
        }
        let mut psi = vec![Complex64::new(0.0, 0.0); self.dim()];
        let a = Complex64::new(1.0 / (self.degree as f64).sqrt(), 0.0);
        psi[vertex * self.degree..(vertex + 1) * self.degree].fill(a);
        Ok(psi)
    }

    /// Coin (with marking) followed by the flip-flop shift.
    pub fn step(&self, psi: &[Complex64]) -> Vec<Complex64> {
        let d = self.degree;
        let mut out = vec![Complex64::new(0.0, 0.0); psi.len()];
        for (v, coin) in psi.chunks_exact(d).enumerate() {
            let base = v * d;
            if self.marked[v] {
                for (k, a) in coin.iter().enumerate() {
                    out[self.destination[base + k]] = -a;
                }
            } else {
                let twice_mean = coin.iter().sum::<Complex64>() * (2.0 / d as f64);
                for (k, a) in coin.iter().enumerate() {
                    out[self.destination[base + k]] = twice_mean - a;
                }
            }
        }
        out
    }

    pub fn vertex_probabilities(&self, psi: &[Complex64]) -> Vec<f64> {
        psi.chunks_exact(self.degree)
            .map(|c| c.iter().map(|a| a.norm_sqr()).sum())
            .collect()
    }

    pub fn marked_probability(&self, psi: &[Complex64]) -> f64 {
        psi.chunks_exact(self.degree)
            .zip(&self.marked)
            .filter(|(_, &m)| m)
            .map(|(c, _)| c.iter().map(|a| a.norm_sqr()).sum::<f64>())
            .sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StepSample {
    pub step: usize,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DtqwTrajectory {
    pub samples: Vec<StepSample>,
    pub max_norm_drift: f64,
}

impl DtqwTrajectory {
    pub fn peak(&self) -> StepSample {
        let mut best = self.samples[0];
        for s in &self.samples[1..] {
            if s.probability > best.probability {
                best = *s;
            }
        }
        best
    }
}

/// Coined-walk search on a torus from the uniform state; records the
/// probability on the marked set after each step.
pub fn dtqw_search(graph: &Graph, targets: &[usize], steps: usize) -> Result<DtqwTrajectory> {
    if !matches!(
        graph.kind,
        GraphKind::Torus1d { .. } | GraphKind::Torus2d { .. } | GraphKind::Custom
    ) {
        return Err(Error::Unsupported(
            "coined search runs on tori and custom regular graphs".into(),
        ));
    }
    let walk = CoinedWalk::new(graph, targets)?;
    let mut psi = walk.uniform_state();
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(StepSample {
        step: 0,
        probability: walk.marked_probability(&psi),
    });
    let mut max_norm_drift = 0.0f64;
    for step in 1..=steps {
        psi = walk.step(&psi);
        let norm: f64 = psi.iter().map(|a| a.norm_sqr()).sum();
        max_norm_drift = max_norm_drift.max((norm - 1.0).abs());
        samples.push(StepSample {
            step,
            probability: walk.marked_probability(&psi),
        });
    }
    Ok(DtqwTrajectory {
        samples,
        max_norm_drift,
    })
}

/// Peak marked probability and its step for a single marked vertex on
/// `side × side` tori, one row per side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HittingRow {
    pub side: usize,
    pub vertices: usize,
    pub peak_probability: f64,
    pub peak_step: usize,
}

pub fn torus_hitting_study(sides: &[usize]) -> Result<Vec<HittingRow>> {
    sides
        .iter()
        .map(|&side| {
            let g = Graph::torus2d(side, side)?;
            let v = side * side;
            let budget = (4.0 * (v as f64 * (v as f64).log2()).sqrt()).ceil() as usize;
            let peak = dtqw_search(&g, &[0], budget)?.peak();
            Ok(HittingRow {
                side,
                vertices: v,
                peak_probability: peak.probability,
                peak_step: peak.step,
            })
        })
        .collect()
}

/// Grover iteration with several marked items, with the spacing of the first
/// two success peaks.
#[derive(Debug, Clone, PartialEq)]
pub struct Revival {
    pub trajectory: Trajectory,
    pub first_peak: (usize, f64),
    pub second_peak: (usize, f64),
    pub period_estimate: usize,
    /// `π/(2α)` with `sin α = √(M/V)`.
    pub predicted_period: f64,
    /// Second peak reaches at least 95% of the first.
    pub revived: bool,
}

pub fn multi_target_revival(graph: &Graph, targets: &[usize], steps: usize) -> Result<Revival> {
    if graph.kind != GraphKind::Complete {
        return Err(Error::Unsupported(
            "revival study runs on the complete graph".into(),
        ));
    }
    let v = graph.vertex_count;
    let m = targets.len();
    if m < 2 || 2 * m >= v {
        return Err(Error::param(
            "targets",
            format!("need 2 <= M < V/2, got M={m}, V={v}"),
        ));
    }
    let spec = SearchSpec::new(v, targets)?;
    let trajectory = grover::run(&spec, steps)?;
    let p = trajectory.probabilities();
    let window = steps.min((10.0 * (v as f64 / m as f64).sqrt()).ceil() as usize);
    let peaks: Vec<usize> = (1..window.min(p.len().saturating_sub(1)))
        .filter(|&k| p[k] > p[k - 1] && p[k] >= p[k + 1])
        .take(2)
        .collect();
    if peaks.len() < 2 {
        return Err(Error::PeaksNotFound(format!(
            "found {} of 2 peaks within {window} steps",
            peaks.len()
        )));
    }
    let first = (peaks[0], p[peaks[0]]);
    let second = (peaks[1], p[peaks[1]]);
    Ok(Revival {
        first_peak: first,
        second_peak: second,
        period_estimate: second.0 - first.0,
        predicted_period: grover::revival_period(grover::search_angle(v, m)),
        revived: second.1 >= 0.95 * first.1,
        trajectory,
    })
}

/// Least-squares slope and intercept of `ln y` against `ln x`:
/// returns `(exponent, prefactor)` for `y ≈ prefactor · x^exponent`.
pub fn power_law_fit(xs: &[f64], ys: &[f64]) -> Result<(f64, f64)> {
    if xs.len() != ys.len() {
        return Err(Error::DimensionMismatch(xs.len(), ys.len()));
    }
    if xs.len() < 2 || xs.iter().chain(ys).any(|&v| v.is_nan() || v <= 0.0) {
        return Err(Error::param("fit", "need at least two positive points"));
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::param("fit", "abscissae are all equal"));
    }
    let slope = sxy / sxx;
    Ok((slope, (my - slope * mx).exp()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn graph_construction() {
        let g = Graph::torus2d(4, 3).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.neighbors(0), vec![1, 3, 4, 8]);
        assert_eq!(g.regular_degree(), Some(4));
        assert_eq!(Graph::torus1d(5).unwrap().neighbors(0), vec![1, 4]);
        assert_eq!(Graph::complete(4).unwrap().neighbors(2), vec![0, 1, 3]);
        assert!(Graph::torus2d(2, 5).is_err());
        assert!(Graph::torus1d(2).is_err());
        assert!(Graph::complete(1).is_err());
    }

    #[test]
    fn custom_graph_validation() {
        assert!(Graph::from_neighbor_lists(vec![vec![1], vec![]]).is_err());
        assert!(Graph::from_neighbor_lists(vec![vec![0], vec![]]).is_err());
        assert!(Graph::from_neighbor_lists(vec![vec![1], vec![0], vec![3], vec![2]]).is_err());
        let star = Graph::from_neighbor_lists(vec![vec![1, 2], vec![0], vec![0]]).unwrap();
        assert_eq!(star.regular_degree(), None);
        assert!(dtqw_search(&star, &[0], 3).is_err());
    }

    #[test]
    fn ctqw_rejects_bad_input() {
        let torus = Graph::torus1d(8).unwrap();
        assert!(matches!(
            ctqw_search(&torus, 0.1, &[0], 1.0, 0.01),
            Err(Error::Unsupported(_))
        ));
        let g = Graph::complete(16).unwrap();
        assert!(ctqw_search(&g, 1.0 / 16.0, &[0], 1.0, 0.1).is_err());
        assert!(ctqw_search(&g, 0.0, &[0], 1.0, 0.01).is_err());
        assert!(ctqw_search(&g, 1.0 / 16.0, &[], 1.0, 0.01).is_err());
    }

    #[test]
    fn ctqw_starts_uniform() {
        let g = Graph::complete(64).unwrap();
        let t = ctqw_search(&g, 1.0 / 64.0, &[3], 0.0, ctqw_max_dt(64)).unwrap();
        assert_eq!(t.samples.len(), 1);
        assert_abs_diff_eq!(t.samples[0].probability, 1.0 / 64.0, epsilon = 1e-15);
    }

    #[test]
    fn ctqw_full_period_returns() {
        let n = 64;
        let g = Graph::complete(n).unwrap();
        let t_peak = PI * (n as f64).sqrt() / 2.0;
        let t = ctqw_search(&g, 1.0 / n as f64, &[0], 2.0 * t_peak, ctqw_max_dt(n)).unwrap();
        assert!(t.peak().probability >= 0.99);
        assert_abs_diff_eq!(t.samples.last().unwrap().probability, 1.0 / n as f64, epsilon = 1e-6);
    }

    #[test]
    fn dtqw_examples() {
        let g = Graph::torus2d(16, 16).unwrap();
        let t = dtqw_search(&g, &[0], 0).unwrap();
        assert_abs_diff_eq!(t.samples[0].probability, 1.0 / 256.0, epsilon = 1e-15);

        let budget = (4.0 * (256.0 * 8.0f64).sqrt()).floor() as usize;
        let t = dtqw_search(&g, &[37], budget).unwrap();
        assert!(t.peak().probability >= 10.0 / 256.0);
    }

    #[test]
    fn unmarked_walk_keeps_uniform_state() {
        let g = Graph::torus2d(16, 16).unwrap();
        let walk = CoinedWalk::new(&g, &[]).unwrap();
        let mut psi = walk.uniform_state();
        let mut avg = 0.0;
        for _ in 0..200 {
            psi = walk.step(&psi);
            avg += walk.vertex_probabilities(&psi)[100] / 200.0;
        }
        assert!(avg <= 5.0 / 256.0);
        assert_abs_diff_eq!(avg, 1.0 / 256.0, epsilon = 1e-12);
    }

    #[test]
    fn unmarked_walk_spreads_from_a_vertex() {
        let g = Graph::torus2d(16, 16).unwrap();
        let walk = CoinedWalk::new(&g, &[]).unwrap();
        let mut psi = walk.localized_state(0).unwrap();
        let mut avg = 0.0;
        for _ in 0..200 {
            psi = walk.step(&psi);
            avg += walk.vertex_probabilities(&psi)[8 * 16 + 8] / 200.0;
        }
        assert!(avg <= 5.0 / 256.0, "average {avg}");
    }

    #[test]
    fn one_dimensional_search_runs() {
        let g = Graph::torus1d(32).unwrap();
        let t = dtqw_search(&g, &[5], 200).unwrap();
        assert!(t.max_norm_drift < 1e-10);
        assert!(t.samples.iter().all(|s| (0.0..=1.0 + 1e-12).contains(&s.probability)));
    }

    #[test]
    fn revival_examples() {
        let g = Graph::complete(64).unwrap();
        let r = multi_target_revival(&g, &[0, 1, 2, 3], 30).unwrap();
        assert_eq!(r.period_estimate, 6);
        assert!(r.revived);
        assert!((r.period_estimate as f64 - r.predicted_period).abs() <= 1.0);

        let small = Graph::complete(4).unwrap();
        assert!(multi_target_revival(&small, &[0, 1], 10).is_err());
        assert!(multi_target_revival(&g, &[0], 10).is_err());
        assert!(matches!(
            multi_target_revival(&g, &[0, 1, 2, 3], 3),
            Err(Error::PeaksNotFound(_))
        ));
    }

    #[test]
    fn power_law_recovers_exponent() {
        let xs = [1.0, 2.0, 4.0, 8.0];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 3.0 * x.powf(0.5)).collect();
        let (e, c) = power_law_fit(&xs, &ys).unwrap();
        assert_abs_diff_eq!(e, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(c, 3.0, epsilon = 1e-12);
        assert!(power_law_fit(&[1.0], &[1.0]).is_err());
    }
}
