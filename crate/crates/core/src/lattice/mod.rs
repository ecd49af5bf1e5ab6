//! One-particle tight-binding chains: spectra, single-impurity bound states
//! and localization under on-site disorder, measured by the inverse
//! participation ratio.
//!
//! The Hamiltonian has on-site energies `E_i` on the diagonal and `−t` between
//! nearest neighbours (wrapping around for periodic chains).

mod tridiag;

use faer::{Mat, Side};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use tridiag::SymTridiagonal;

/// Largest chain handed to the dense eigensolver.
pub const MAX_DENSE_SITES: usize = 4096;

const NORM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Open,
    Periodic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TightBindingSpec {
    hopping: f64,
    on_site: Vec<f64>,
    boundary: Boundary,
}

impl TightBindingSpec {
    pub fn len(&self) -> usize {
        self.on_site.len()
    }

    pub fn is_empty(&self) -> bool {
        self.on_site.is_empty()
    }

    pub fn hopping(&self) -> f64 {
        self.hopping
    }

    pub fn on_site(&self) -> &[f64] {
        &self.on_site
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn matrix(&self) -> DMatrix<f64> {
        let l = self.len();
        let mut h = DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(&self.on_site));
        for i in 0..l - 1 {
            h[(i, i + 1)] = -self.hopping;
            h[(i + 1, i)] = -self.hopping;
        }
        if self.boundary == Boundary::Periodic {
            h[(0, l - 1)] = -self.hopping;
            h[(l - 1, 0)] = -self.hopping;
        }
        h
    }

    /// `H v` without forming `H`.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        let l = self.len();
        let t = self.hopping;
        let mut out: Vec<f64> = self.on_site.iter().zip(v).map(|(e, x)| e * x).collect();
        for i in 0..l - 1 {
            out[i] -= t * v[i + 1];
            out[i + 1] -= t * v[i];
        }
        if self.boundary == Boundary::Periodic {
            out[0] -= t * v[l - 1];
            out[l - 1] -= t * v[0];
        }
        out
    }

    /// The chain as a tridiagonal matrix; only open chains have one.
    pub fn tridiagonal(&self) -> Result<SymTridiagonal> {
        if self.boundary != Boundary::Open {
            return Err(Error::Unsupported(
                "periodic chains are not tridiagonal".into(),
            ));
        }
        SymTridiagonal::new(self.on_site.clone(), vec![-self.hopping; self.len() - 1])
    }
}

pub fn build_chain(
    length: usize,
    hopping: f64,
    on_site: &[f64],
    boundary: Boundary,
) -> Result<TightBindingSpec> {
    if length < 3 {
        return Err(Error::InvalidDimension(length, 3));
    }
    if on_site.len() != length {
        return Err(Error::DimensionMismatch(on_site.len(), length));
    }
    if !(hopping > 0.0 && hopping.is_finite()) {
        return Err(Error::param("hopping", format!("{hopping} must be positive")));
    }
    if on_site.iter().any(|e| !e.is_finite()) {
        return Err(Error::param("on_site", "non-finite on-site energy"));
    }
    Ok(TightBindingSpec {
        hopping,
        on_site: on_site.to_vec(),
        boundary,
    })
}

/// Full eigendecomposition, eigenvalues ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    pub eigenvalues: Vec<f64>,
    /// Column `k` belongs to `eigenvalues[k]`.
    pub eigenvectors: DMatrix<f64>,
    /// Lowest and highest eigenvalue.
    pub band_edges: (f64, f64),
}

impl SpectrumResult {
    pub fn eigenvector(&self, k: usize) -> Vec<f64> {
        self.eigenvectors.column(k).iter().copied().collect()
    }
}

pub fn spectrum(spec: &TightBindingSpec) -> Result<SpectrumResult> {
    let l = spec.len();
    if l > MAX_DENSE_SITES {
        return Err(Error::param(
            "length",
            format!("{l} sites exceeds the dense limit of {MAX_DENSE_SITES}"),
        ));
    }
    let h_norm = spec
        .on_site
        .iter()
        .map(|e| e.abs() + 2.0 * spec.hopping.abs())
        .fold(0.0, f64::max);
    let dense = spec.matrix();
    let h = Mat::<f64>::from_fn(l, l, |i, j| dense[(i, j)]);
    let eig = h.self_adjoint_eigen(Side::Lower).map_err(|e| {
        Error::NoConvergence(format!(
            "symmetric eigensolver failed on a {l}x{l} matrix with norm {h_norm:e}: {e:?}"
        ))
    })?;
    let values = eig.S().column_vector();
    let u = eig.U();
    let mut order: Vec<usize> = (0..l).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| values[k]).collect();
    let mut vectors = DMatrix::zeros(l, l);
    let mut residual = 0.0f64;
    for (col, &k) in order.iter().enumerate() {
        let mut v: Vec<f64> = (0..l).map(|i| u[(i, k)]).collect();
        tridiag::fix_sign(&mut v);
        let hv = spec.apply(&v);
        let r = hv
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - eigenvalues[col] * b).powi(2))
            .sum::<f64>()
            .sqrt();
        residual = residual.max(r);
        vectors.set_column(col, &nalgebra::DVector::from_vec(v));
    }
    if residual > 1e-8 * h_norm.max(1.0) {
        return Err(Error::NoConvergence(format!(
            "eigenpair residual {residual:e} for matrix norm {h_norm:e}"
        )));
    }
    Ok(SpectrumResult {
        band_edges: (eigenvalues[0], eigenvalues[l - 1]),
        eigenvalues,
        eigenvectors: vectors,
    })
}

/// Inverse participation ratio `Σ vᵢ⁴` of a unit vector.
pub fn ipr(vector: &[f64]) -> Result<f64> {
    let norm: f64 = vector.iter().map(|v| v * v).sum();
    if vector.is_empty() || (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::NotNormalized(norm));
    }
    Ok(vector.iter().map(|v| v.powi(4)).sum())
}

/// The isolated level created by one impurity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundState {
    pub energy: f64,
    /// Distance from the nearest clean band edge `±2t`.
    pub gap_below_band: f64,
    pub ipr: f64,
    pub impurity_site: usize,
    /// Position of the level in the ascending spectrum.
    pub rank: usize,
}

/// Open chain of `length` sites with a single impurity of on-site energy
/// `−strength` at site `⌊L/2⌋`.
pub fn impurity_chain(length: usize, hopping: f64, strength: f64) -> Result<TightBindingSpec> {
    if length < 3 {
        return Err(Error::InvalidDimension(length, 3));
    }
    let mut on_site = vec![0.0; length];
    on_site[length / 2] = -strength;
    build_chain(length, hopping, &on_site, Boundary::Open)
}

/// Finds the level split off the band by a single impurity.
///
/// A positive `strength` is attractive and binds a state below `−2t`; a
/// negative one is repulsive and binds above `+2t`.
pub fn bound_state(length: usize, hopping: f64, strength: f64) -> Result<BoundState> {
    if strength == 0.0 || !strength.is_finite() {
        return Err(Error::NoBoundState(
            "a clean chain has no isolated level".into(),
        ));
    }
    let spec = impurity_chain(length, hopping, strength)?;
    let tri = spec.tridiagonal()?;
    let edge = 2.0 * hopping;
    let (outside, rank) = if strength > 0.0 {
        (tri.count_below(-edge), 0)
    } else {
        (length - tri.count_below(edge), length - 1)
    };
    if outside != 1 {
        return Err(Error::NoBoundState(format!(
            "{outside} levels outside the band for V={strength} on {length} sites; \
             the impurity may be too weak for this chain length"
        )));
    }
    let energy = tri.eigenvalue(rank)?;
    let vector = tri.eigenvector(energy)?;
    Ok(BoundState {
        energy,
        gap_below_band: energy.abs() - edge,
        ipr: ipr(&vector)?,
        impurity_site: length / 2,
        rank,
    })
}

/// Median IPR of the eigenstates whose energies lie inside `[−2t, 2t]`.
pub fn median_band_ipr(spec: &TightBindingSpec) -> Result<f64> {
    let tri = spec.tridiagonal()?;
    let edge = 2.0 * spec.hopping;
    let mut iprs = Vec::new();
    for k in 0..tri.len() {
        let e = tri.eigenvalue(k)?;
        if e.abs() <= edge {
            iprs.push(ipr(&tri.eigenvector(e)?)?);
        }
    }
    if iprs.is_empty() {
        return Err(Error::param("spec", "no in-band states"));
    }
    iprs.sort_by(f64::total_cmp);
    let mid = iprs.len() / 2;
    Ok(if iprs.len() % 2 == 1 {
        iprs[mid]
    } else {
        0.5 * (iprs[mid - 1] + iprs[mid])
    })
}

/// On-site energies uniform on `[−W/2, W/2]` for one ensemble member.
///
/// The generator is ChaCha8 keyed by `seed` with `trial` selecting the
/// stream, so each draw depends only on `(seed, trial)`.
pub fn disorder_on_site(length: usize, width: f64, seed: u64, trial: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    (0..length)
        .map(|_| width * (rng.random::<f64>() - 0.5))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DisorderStats {
    pub length: usize,
    pub hopping: f64,
    pub width: f64,
    pub trials: usize,
    pub seed: u64,
    pub mean_ipr: f64,
    /// Sample standard deviation (zero for a single trial).
    pub std_ipr: f64,
    /// Per-trial band-centre IPR, in trial order.
    pub iprs: Vec<f64>,
}

/// IPR of the eigenstate nearest zero energy; ties go to the lower index.
pub fn band_center_ipr(spec: &TightBindingSpec) -> Result<f64> {
    let tri = spec.tridiagonal()?;
    let below = tri.count_below(0.0);
    let mut best: Option<f64> = None;
    for k in below.saturating_sub(1)..(below + 1).min(tri.len()) {
        let e = tri.eigenvalue(k)?;
        if best.is_none_or(|b| e.abs() < b.abs()) {
            best = Some(e);
        }
    }
    let e = best.expect("chain has at least one level");
    ipr(&tri.eigenvector(e)?)
}

/// Band-centre IPR statistics over `trials` open disordered chains.
pub fn disorder_ensemble(
    length: usize,
    hopping: f64,
    width: f64,
    trials: usize,
    seed: u64,
) -> Result<DisorderStats> {
    if trials == 0 {
        return Err(Error::param("trials", "need at least one trial"));
    }
    if !(width >= 0.0 && width.is_finite()) {
        return Err(Error::param("width", format!("{width} must be non-negative")));
    }
    // Validate once up front so the parallel section only sees good input.
    build_chain(length, hopping, &vec![0.0; length], Boundary::Open)?;
    let iprs = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let on_site = disorder_on_site(length, width, seed, trial as u64);
            band_center_ipr(&build_chain(length, hopping, &on_site, Boundary::Open)?)
        })
        .collect::<Result<Vec<f64>>>()?;
    let mean = iprs.iter().sum::<f64>() / trials as f64;
    let std = if trials > 1 {
        (iprs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (trials - 1) as f64).sqrt()
    } else {
        0.0
    };
    Ok(DisorderStats {
        length,
        hopping,
        width,
        trials,
        seed,
        mean_ipr: mean,
        std_ipr: std,
        iprs,
    })
}
