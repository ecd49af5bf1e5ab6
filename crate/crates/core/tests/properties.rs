use std::f64::consts::PI;

use wavesearch_core::grover::{self, SearchSpec};
use wavesearch_core::lattice;
use wavesearch_core::spatial::{self, CoinedWalk, Graph};

fn first_local_max(p: &[f64]) -> usize {
    (1..p.len() - 1)
        .find(|&k| p[k] > p[k - 1] && p[k] >= p[k + 1])
        .unwrap()
}

#[test]
fn optimal_queries_match_simulated_first_peak() {
    for n in (2..=10).map(|e| 1usize << e) {
        let steps = (3.0 * (n as f64).sqrt()) as usize + 2;
        let p = grover::run(&SearchSpec::new(n, &[0]).unwrap(), steps)
            .unwrap()
            .probabilities();
        assert_eq!(grover::optimal_queries(n, 1).unwrap(), first_local_max(&p), "N={n}");
    }
}

#[test]
fn two_d_exactness_across_sizes() {
    for n in [4usize, 8, 32, 128, 512, 1024] {
        let model = grover::two_d_model(1.0 / (n as f64).sqrt()).unwrap();
        let trajectory = grover::run(&SearchSpec::new(n, &[3]).unwrap(), 40).unwrap();
        for p in &trajectory.points {
            assert!((p.success_probability - model.success_probability(p.step)).abs() < 1e-10);
        }
    }
}

#[test]
fn hg_eigenvectors_split_evenly_on_target() {
    for overlap in [0.05, 0.25, 0.5, 0.9] {
        for pair in grover::hg_spectrum(overlap).unwrap() {
            let on_target = pair.eigenvector.probability(0).unwrap();
            assert!((on_target - 0.5).abs() < 1e-10);
        }
    }
}

#[test]
fn walks_preserve_norm_over_long_runs() {
    let torus = Graph::torus2d(16, 16).unwrap();
    let d = spatial::dtqw_search(&torus, &[37], 2000).unwrap();
    assert!(d.max_norm_drift < 1e-10, "{}", d.max_norm_drift);
    let cycle = Graph::torus1d(64).unwrap();
    let d = spatial::dtqw_search(&cycle, &[5], 2000).unwrap();
    assert!(d.max_norm_drift < 1e-10);
    let n = 64;
    let c = spatial::ctqw_search(&Graph::complete(n).unwrap(), 1.0 / n as f64, &[0], 40.0, 0.005).unwrap();
    assert!(c.steps >= 1000);
    assert!(c.max_norm_drift < 1e-10, "{}", c.max_norm_drift);
}

#[test]
fn unmarked_dtqw_is_translation_covariant() {
    let (w, h) = (8usize, 8usize);
    let graph = Graph::torus2d(w, h).unwrap();
    let walk = CoinedWalk::new(&graph, &[]).unwrap();
    let evolve = |start: usize| {
        let mut psi = walk.localized_state(start).unwrap();
        for _ in 0..50 {
            psi = walk.step(&psi);
        }
        walk.vertex_probabilities(&psi)
    };
    let base = evolve(2 * w + 1);
    let (dx, dy) = (3, 5);
    let shifted = evolve(((2 + dy) % h) * w + (1 + dx) % w);
    for y in 0..h {
        for x in 0..w {
            let moved = ((y + dy) % h) * w + (x + dx) % w;
            assert!((base[y * w + x] - shifted[moved]).abs() < 1e-10);
        }
    }
}

#[test]
fn unmarked_dtqw_spreads_on_average() {
    let graph = Graph::torus2d(16, 16).unwrap();
    let walk = CoinedWalk::new(&graph, &[]).unwrap();
    let mut psi = walk.localized_state(0).unwrap();
    let mut total = vec![0.0; 256];
    for _ in 0..200 {
        psi = walk.step(&psi);
        for (t, p) in total.iter_mut().zip(walk.vertex_probabilities(&psi)) {
            *t += p / 200.0;
        }
    }
    let far = 8 * 16 + 8;
    assert!(total[far] <= 5.0 / 256.0, "{}", total[far]);
}

#[test]
fn ctqw_peak_time_scales_as_sqrt_n() {
    let sizes = [16usize, 64, 256, 1024];
    let times: Vec<f64> = sizes
        .iter()
        .map(|&n| {
            let t = PI * (n as f64).sqrt();
            spatial::ctqw_search(&Graph::complete(n).unwrap(), 1.0 / n as f64, &[0], t, spatial::ctqw_max_dt(n))
                .unwrap()
                .peak()
                .time
        })
        .collect();
    let xs: Vec<f64> = sizes.iter().map(|&n| n as f64).collect();
    let (exponent, _) = spatial::power_law_fit(&xs, &times).unwrap();
    assert!((0.45..=0.55).contains(&exponent), "{exponent}");
}

#[test]
fn ctqw_returns_to_baseline_after_full_oscillation() {
    for n in [16usize, 64] {
        let t = PI * (n as f64).sqrt();
        let run = spatial::ctqw_search(&Graph::complete(n).unwrap(), 1.0 / n as f64, &[0], t, spatial::ctqw_max_dt(n))
            .unwrap();
        assert!((run.samples[0].probability - 1.0 / n as f64).abs() < 1e-12);
        let end = run.samples.last().unwrap();
        assert!((end.time - t).abs() < 1e-9);
        assert!((end.probability - 1.0 / n as f64).abs() < 1e-4, "{}", end.probability);
    }
}

#[test]
fn one_impurity_level_outside_band() {
    let l = 400;
    for v in [0.25f64, 0.5, 1.0, 2.0] {
        for strength in [v, -v] {
            let spec = lattice::impurity_chain(l, 1.0, strength).unwrap();
            let dense = lattice::spectrum(&spec).unwrap();
            let outside: Vec<f64> = dense
                .eigenvalues
                .iter()
                .copied()
                .filter(|e| e.abs() > 2.0)
                .collect();
            assert_eq!(outside.len(), 1, "V={strength}");
            let expected = -strength.signum() * (4.0 + strength * strength).sqrt();
            assert!((outside[0] - expected).abs() < 1e-9, "V={strength}");
            let bound = lattice::bound_state(l, 1.0, strength).unwrap();
            assert!((bound.energy - outside[0]).abs() < 1e-10);
        }
    }
}

#[test]
fn disorder_ensemble_is_reproducible() {
    let a = lattice::disorder_ensemble(256, 1.0, 2.0, 20, 11).unwrap();
    let b = lattice::disorder_ensemble(256, 1.0, 2.0, 20, 11).unwrap();
    assert_eq!(a.iprs, b.iprs);
    let c = lattice::disorder_ensemble(256, 1.0, 2.0, 20, 12).unwrap();
    assert_ne!(a.iprs, c.iprs);
}
