//! Dispatch from an [`ExperimentConfig`] to the library routines.

use std::f64::consts::PI;
use std::time::Instant;

use serde_json::{json, Map, Value};
use wavesearch_core::grover::{self, SearchSpec};
use wavesearch_core::lattice::{self, Boundary};
use wavesearch_core::spatial::{self, Graph};
use wavesearch_core::wavemech::{self, FocusMode, OscillatorBank};

use crate::config::ExperimentConfig;
use crate::error::CliError;
use crate::record::{Cell, ExperimentRecord, Series};

/// Phases swept by the `grover --mode sweep` experiment.
pub const SWEEP_PHASES: [f64; 4] = [PI / 4.0, PI / 2.0, 3.0 * PI / 4.0, PI];

type Outcome = (Vec<Series>, Map<String, Value>, Option<String>);

pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentRecord, CliError> {
    let started = Instant::now();
    let (series, summary, text) = match config.experiment.as_str() {
        "grover" => grover_experiment(config)?,
        "wave" => wave_experiment(config)?,
        "lattice" => lattice_experiment(config)?,
        "spatial" => spatial_experiment(config)?,
        "solve-n" => solve_n_experiment(config)?,
        "table" => table_experiment(),
        other => return Err(CliError::UnknownExperiment(other.to_string())),
    };
    Ok(ExperimentRecord {
        config: config.clone(),
        series,
        summary,
        version: env!("CARGO_PKG_VERSION").to_string(),
        wall_clock_seconds: started.elapsed().as_secs_f64(),
        text,
    })
}

fn unknown_mode(config: &ExperimentConfig, mode: &str) -> CliError {
    CliError::UnknownMode {
        experiment: config.experiment.clone(),
        mode: mode.to_string(),
    }
}

fn object(value: Value) -> Map<String, Value> {
    match value {
        Value::Object(m) => m,
        _ => unreachable!("summaries are objects"),
    }
}

fn search_spec(config: &ExperimentConfig) -> Result<SearchSpec, CliError> {
    let n = config.n.ok_or(CliError::MissingParameter("n"))?;
    let targets = config.targets.clone().unwrap_or_else(|| vec![0]);
    let mut spec = SearchSpec::new(n, &targets)?;
    if let Some(phase) = config.oracle_phase {
        spec = spec.with_oracle_phase(phase)?;
    }
    if let Some(phase) = config.diffusion_phase {
        spec = spec.with_diffusion_phase(phase)?;
    }
    Ok(spec)
}

fn grover_experiment(config: &ExperimentConfig) -> Result<Outcome, CliError> {
    let spec = search_spec(config)?;
    let (n, m) = (spec.n(), spec.targets().len());
    let optimal = grover::optimal_queries(n, m)?;
    let model = grover::two_d_model(spec.target_overlap())?;
    match config.mode.as_deref().unwrap_or("run") {
        mode @ ("run" | "threshold") => {
            let trajectory = if mode == "threshold" {
                let tau = config.threshold.ok_or(CliError::MissingParameter("threshold"))?;
                grover::run_until_threshold(&spec, tau)?
            } else {
                grover::run(&spec, config.steps.unwrap_or(optimal))?
            };
            let mut series = Series::new("trajectory", &["step", "success_probability"]);
            for p in &trajectory.points {
                series.push(vec![p.step.into(), p.success_probability.into()]);
            }
            let peak = trajectory.peak();
            let last = trajectory.last();
            let summary = json!({
                "n": n,
                "targets": spec.targets(),
                "oracle_phase": spec.oracle_phase(),
                "diffusion_phase": spec.diffusion_phase(),
                "peak_value": peak.success_probability,
                "peak_step": peak.step,
                "final_step": last.step,
                "final_probability": last.success_probability,
                "stop_reason": trajectory.stop_reason,
                "Q": optimal,
                "theta": model.theta,
                "rotation_per_iteration": model.rotation_per_iteration,
            });
            Ok((vec![series], object(summary), None))
        }
        "sweep" => {
            let budget = config.steps.unwrap_or(grover::optimal_queries(n, 1)?);
            let peak_of = |oracle: f64, diffusion: f64| -> Result<(usize, f64), CliError> {
                let s = search_spec(config)?
                    .with_oracle_phase(oracle)?
                    .with_diffusion_phase(diffusion)?;
                let p = grover::run(&s, budget)?.peak();
                Ok((p.step, p.success_probability))
            };
            let mut series = Series::new(
                "phase_sweep",
                &["phase", "matched_peak", "matched_peak_step", "mismatched_peak", "mismatched_peak_step"],
            );
            let mut best = (0.0, f64::NEG_INFINITY);
            for phase in SWEEP_PHASES {
                let matched = peak_of(phase, phase)?;
                let mismatched = peak_of(phase, PI)?;
                if matched.1 > best.1 {
                    best = (phase, matched.1);
                }
                series.push(vec![
                    phase.into(),
                    matched.1.into(),
                    matched.0.into(),
                    mismatched.1.into(),
                    mismatched.0.into(),
                ]);
            }
            let summary = json!({
                "n": n,
                "query_budget": budget,
                "best_matched_phase": best.0,
                "best_matched_peak": best.1,
            });
            Ok((vec![series], object(summary), None))
        }
        "spectrum" => {
            let pairs = grover::hg_spectrum(spec.target_overlap())?;
            let phases = grover::plane_eigenphases(&spec)?;
            let mut series = Series::new(
                "hg_spectrum",
                &["eigenvalue", "t_re", "t_im", "t_perp_re", "t_perp_im", "simulated_eigenphase"],
            );
            // U_G v = e^{-iλ} v, so the simulated phase of the λ-pair is −λ.
            let mut simulated = phases;
            simulated.reverse();
            for (pair, phase) in pairs.iter().zip(simulated) {
                let v = pair.eigenvector.amplitudes();
                series.push(vec![
                    pair.eigenvalue.into(),
                    v[0].re.into(),
                    v[0].im.into(),
                    v[1].re.into(),
                    v[1].im.into(),
                    phase.into(),
                ]);
            }
            let summary = json!({
                "n": n,
                "theta": model.theta,
                "hg_eigenvalues": model.hg_eigenvalues,
                "simulated_eigenphases": phases,
            });
            Ok((vec![series], object(summary), None))
        }
        other => Err(unknown_mode(config, other)),
    }
}

fn wave_experiment(config: &ExperimentConfig) -> Result<Outcome, CliError> {
    let n = config.n.ok_or(CliError::MissingParameter("n"))?;
    let target = config.targets.as_ref().and_then(|t| t.first().copied()).unwrap_or(0);
    let energy = config.energy.unwrap_or(1.0);
    // Validates the energy scale; trajectories are in units of it.
    OscillatorBank::new(n, energy)?;
    let report = wavemech::resource_report(n)?;
    let forward = match (config.threshold, config.steps) {
        (Some(tau), _) if config.mode.as_deref() != Some("disperse") => FocusMode::Threshold(tau),
        (_, Some(k)) => FocusMode::Steps(k),
        _ => FocusMode::Steps(report.queries_classical),
    };
    let mode = config.mode.as_deref().unwrap_or("focus");
    let trajectory = match mode {
        "focus" => wavemech::run_focus(n, target, forward)?,
        "disperse" => {
            let k = config.steps.unwrap_or(report.queries_classical);
            let focused = wavemech::run_focus(n, target, FocusMode::Steps(k))?;
            wavemech::run_disperse(&focused.final_bank, target, k)?
        }
        other => return Err(unknown_mode(config, other)),
    };
    let mut series = Series::new("energy", &["step", "energy_fraction", "target_energy"]);
    for p in &trajectory.points {
        series.push(vec![
            p.step.into(),
            p.energy_fraction.into(),
            (p.energy_fraction * energy).into(),
        ]);
    }
    let last = trajectory.last();
    let summary = json!({
        "n": n,
        "target": target,
        "total_energy": energy,
        "final_step": last.step,
        "final_energy_fraction": last.energy_fraction,
        "stop_reason": trajectory.stop_reason,
        "final_energy_drift": (trajectory.final_bank.energy() - 1.0).abs(),
        "resources": report,
    });
    Ok((vec![series], object(summary), None))
}

fn lattice_experiment(config: &ExperimentConfig) -> Result<Outcome, CliError> {
    let length = config.length.ok_or(CliError::MissingParameter("length"))?;
    let hopping = config.hopping.unwrap_or(1.0);
    let default_mode = if config.impurity.is_some() {
        "bound"
    } else if config.disorder.is_some() {
        "disorder"
    } else {
        "spectrum"
    };
    match config.mode.as_deref().unwrap_or(default_mode) {
        "spectrum" => {
            let boundary = match config.boundary.as_deref().unwrap_or("open") {
                "open" => Boundary::Open,
                "periodic" => Boundary::Periodic,
                other => {
                    return Err(CliError::InvalidConfig(format!("unknown boundary `{other}`")))
                }
            };
            let on_site = match config.disorder {
                Some(w) => lattice::disorder_on_site(length, w, config.seed, 0),
                None => vec![0.0; length],
            };
            let spec = lattice::build_chain(length, hopping, &on_site, boundary)?;
            let spectrum = lattice::spectrum(&spec)?;
            let mut series = Series::new("spectrum", &["index", "eigenvalue", "ipr"]);
            for (k, e) in spectrum.eigenvalues.iter().enumerate() {
                let ipr = lattice::ipr(&spectrum.eigenvector(k))?;
                series.push(vec![k.into(), (*e).into(), ipr.into()]);
            }
            let summary = json!({
                "length": length,
                "hopping": hopping,
                "band_edges": [spectrum.band_edges.0, spectrum.band_edges.1],
            });
            Ok((vec![series], object(summary), None))
        }
        "bound" => {
            let v = config.impurity.ok_or(CliError::MissingParameter("impurity"))?;
            let bound = lattice::bound_state(length, hopping, v)?;
            let spec = lattice::impurity_chain(length, hopping, v)?;
            let tri = spec.tridiagonal()?;
            let vector = tri.eigenvector(bound.energy)?;
            let mut series = Series::new("bound_state", &["site", "amplitude"]);
            for (i, a) in vector.iter().enumerate() {
                series.push(vec![i.into(), (*a).into()]);
            }
            let median = lattice::median_band_ipr(&spec)?;
            let analytic = -v.signum() * (4.0 * hopping * hopping + v * v).sqrt();
            let summary = json!({
                "length": length,
                "hopping": hopping,
                "impurity": v,
                "energy": bound.energy,
                "infinite_chain_energy": analytic,
                "gap_below_band": bound.gap_below_band,
                "ipr": bound.ipr,
                "median_band_ipr": median,
                "impurity_site": bound.impurity_site,
            });
            Ok((vec![series], object(summary), None))
        }
        "disorder" => {
            let w = config.disorder.ok_or(CliError::MissingParameter("disorder"))?;
            let trials = config.trials.unwrap_or(50);
            let stats = lattice::disorder_ensemble(length, hopping, w, trials, config.seed)?;
            let mut series = Series::new("disorder_trials", &["trial", "band_center_ipr"]);
            for (k, ipr) in stats.iprs.iter().enumerate() {
                series.push(vec![k.into(), (*ipr).into()]);
            }
            let summary = json!({
                "length": length,
                "hopping": hopping,
                "disorder": w,
                "trials": trials,
                "seed": config.seed,
                "mean_ipr": stats.mean_ipr,
                "std_ipr": stats.std_ipr,
            });
            Ok((vec![series], object(summary), None))
        }
        other => Err(unknown_mode(config, other)),
    }
}

fn parse_dims(dims: &str) -> Result<Graph, CliError> {
    let parts: Vec<usize> = dims
        .split(['x', 'X'])
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::InvalidConfig(format!("bad dims `{dims}`")))?;
    match parts.as_slice() {
        [l] => Ok(Graph::torus1d(*l)?),
        [w, h] => Ok(Graph::torus2d(*w, *h)?),
        _ => Err(CliError::InvalidConfig(format!("bad dims `{dims}`"))),
    }
}

fn spatial_experiment(config: &ExperimentConfig) -> Result<Outcome, CliError> {
    let default_mode = if config.dims.is_some() { "dtqw" } else { "ctqw" };
    let targets = config.targets.clone().unwrap_or_else(|| vec![0]);
    match config.mode.as_deref().unwrap_or(default_mode) {
        "ctqw" => {
            let n = config.n.ok_or(CliError::MissingParameter("n"))?;
            let graph = Graph::complete(n)?;
            let gamma = config.gamma.unwrap_or(1.0 / n as f64);
            let time = config.time.unwrap_or(PI * (n as f64).sqrt());
            let dt = config.dt.unwrap_or(spatial::ctqw_max_dt(n));
            let t = spatial::ctqw_search(&graph, gamma, &targets, time, dt)?;
            let mut series = Series::new("ctqw", &["time", "target_probability"]);
            for s in &t.samples {
                series.push(vec![s.time.into(), s.probability.into()]);
            }
            let peak = t.peak();
            let summary = json!({
                "n": n,
                "gamma": gamma,
                "time": time,
                "dt": t.dt,
                "steps": t.steps,
                "peak_value": peak.probability,
                "peak_time": peak.time,
                "renormalizations": t.renormalizations,
                "max_norm_drift": t.max_norm_drift,
            });
            Ok((vec![series], object(summary), None))
        }
        "dtqw" => {
            let dims = config.dims.as_deref().ok_or(CliError::MissingParameter("dims"))?;
            let graph = parse_dims(dims)?;
            let v = graph.vertex_count() as f64;
            let steps = config
                .steps
                .unwrap_or((4.0 * (v * v.log2()).sqrt()).ceil() as usize);
            let t = spatial::dtqw_search(&graph, &targets, steps)?;
            let mut series = Series::new("dtqw", &["step", "marked_probability"]);
            for s in &t.samples {
                series.push(vec![s.step.into(), s.probability.into()]);
            }
            let peak = t.peak();
            let summary = json!({
                "dims": dims,
                "vertices": graph.vertex_count(),
                "steps": steps,
                "peak_value": peak.probability,
                "peak_step": peak.step,
                "max_norm_drift": t.max_norm_drift,
            });
            Ok((vec![series], object(summary), None))
        }
        "revival" => {
            let n = config.n.ok_or(CliError::MissingParameter("n"))?;
            let graph = Graph::complete(n)?;
            let m = targets.len().max(1);
            let steps = config
                .steps
                .unwrap_or((10.0 * (n as f64 / m as f64).sqrt()).ceil() as usize);
            let r = spatial::multi_target_revival(&graph, &targets, steps)?;
            let mut series = Series::new("revival", &["step", "success_probability"]);
            for p in &r.trajectory.points {
                series.push(vec![p.step.into(), p.success_probability.into()]);
            }
            let summary = json!({
                "n": n,
                "targets": targets,
                "first_peak_step": r.first_peak.0,
                "first_peak": r.first_peak.1,
                "second_peak_step": r.second_peak.0,
                "second_peak": r.second_peak.1,
                "period_estimate": r.period_estimate,
                "predicted_period": r.predicted_period,
                "revived": r.revived,
            });
            Ok((vec![series], object(summary), None))
        }
        "hitting" => {
            let sides: Vec<usize> = config
                .dims
                .as_deref()
                .unwrap_or("8,16,32")
                .split(',')
                .map(|s| s.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::InvalidConfig("hitting dims must be a list of sides".into()))?;
            let rows = spatial::torus_hitting_study(&sides)?;
            let mut series = Series::new("hitting", &["side", "vertices", "peak_probability", "peak_step"]);
            for r in &rows {
                series.push(vec![
                    r.side.into(),
                    r.vertices.into(),
                    r.peak_probability.into(),
                    r.peak_step.into(),
                ]);
            }
            Ok((vec![series], object(json!({ "sides": sides })), None))
        }
        other => Err(unknown_mode(config, other)),
    }
}

fn solve_n_experiment(config: &ExperimentConfig) -> Result<Outcome, CliError> {
    let q = config.queries.ok_or(CliError::MissingParameter("queries"))?;
    let row = QueryTableRow::new(q)?;
    let mut series = Series::new("solve_n", &["queries", "n_exact", "n_rounded", "boolean_n"]);
    series.push(row.cells());
    let summary = json!({
        "Q": q,
        "N_exact": row.n_exact,
        "N_rounded": row.n_rounded,
        "boolean_N": row.boolean_n,
    });
    Ok((vec![series], object(summary), None))
}

fn table_experiment() -> Outcome {
    let rows = query_table_rows();
    let mut series = Series::new("table", &["queries", "n_exact", "n_rounded", "boolean_n"]);
    rows.iter().for_each(|r| series.push(r.cells()));
    (vec![series], Map::new(), Some(format_table(&rows)))
}

/// One line of the smallest-solutions table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QueryTableRow {
    pub queries: u32,
    pub n_exact: f64,
    /// `n_exact` to three significant digits.
    pub n_rounded: f64,
    pub boolean_n: u64,
}

impl QueryTableRow {
    pub fn new(q: u32) -> Result<Self, CliError> {
        let n_exact = grover::database_size_for_queries(q)?;
        Ok(Self {
            queries: q,
            n_exact,
            n_rounded: grover::round_significant(n_exact, 3),
            boolean_n: grover::boolean_search_size(q)?,
        })
    }

    fn cells(&self) -> Vec<Cell> {
        vec![
            (self.queries as u64).into(),
            self.n_exact.into(),
            self.n_rounded.into(),
            self.boolean_n.into(),
        ]
    }
}

pub fn query_table_rows() -> Vec<QueryTableRow> {
    (1..=3).map(|q| QueryTableRow::new(q).expect("q >= 1")).collect()
}

/// The database sizes solved exactly by `Q ∈ {1, 2, 3}` queries, next to
/// the binary-search size `2^Q`.
pub fn table_eq7() -> String {
    format_table(&query_table_rows())
}

fn format_table(rows: &[QueryTableRow]) -> String {
    let mut out = String::from("Q  N (exact)      N (3 s.f.)  Boolean 2^Q\n");
    for r in rows {
        out.push_str(&format!(
            "{:<2} {:<16.10} {:<11} {}\n",
            r.queries,
            r.n_exact,
            format!("{}", r.n_rounded),
            r.boolean_n
        ));
    }
    out
}
