//! Selected eigenpairs of a real symmetric tridiagonal matrix.
//!
//! Eigenvalues come from Sturm-sequence bisection, so any single one can be
//! located by its rank in O(L) per bisection step. Eigenvectors come from
//! inverse iteration with a pivoted tridiagonal LU.

use crate::error::{Error, Result};

const MAX_BISECTIONS: usize = 200;
const INVERSE_ITERATIONS: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiagonal {
    /// `off[i]` couples rows `i` and `i+1`.
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::InvalidDimension(0, 1));
        }
        if off.len() + 1 != diag.len() {
            return Err(Error::DimensionMismatch(off.len() + 1, diag.len()));
        }
        Ok(Self { diag, off })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Gershgorin enclosure of the spectrum.
    pub fn bounds(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    fn scale(&self) -> f64 {
        let (lo, hi) = self.bounds();
        lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE)
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn count_below(&self, x: f64) -> usize {
        let tiny = f64::EPSILON * self.scale() * 1e-3;
        let mut count = 0;
        let mut q = self.diag[0] - x;
        for i in 0..self.len() {
            if i > 0 {
                q = self.diag[i] - x - self.off[i - 1] * self.off[i - 1] / q;
            }
            if q == 0.0 {
                q = -tiny;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `k`-th smallest eigenvalue (0-based).
    pub fn eigenvalue(&self, k: usize) -> Result<f64> {
        if k >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                dim: self.len(),
            });
        }
        let (mut lo, mut hi) = self.bounds();
        let pad = f64::EPSILON * self.scale() * 4.0;
        lo -= pad;
        hi += pad;
        for _ in 0..MAX_BISECTIONS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        (0..self.len())
            .map(|k| self.eigenvalue(k).expect("rank in range"))
            .collect()
    }

    /// Unit eigenvector for an (accurately known) eigenvalue.
    ///
    /// The sign is fixed so that the largest-magnitude component is positive.
    pub fn eigenvector(&self, eigenvalue: f64) -> Result<Vec<f64>> {
        let n = self.len();
        let mut x: Vec<f64> = (0..n)
            .map(|i| 1.0 + 0.5 * ((i as f64 + 1.0) * 0.618_033_988_749_895).fract())
            .collect();
        normalize(&mut x)?;
        for _ in 0..INVERSE_ITERATIONS {
            x = self.solve_shifted(eigenvalue, &x);
            normalize(&mut x)?;
        }
        fix_sign(&mut x);
        Ok(x)
    }

    /// Solves `(T − shift·I) x = rhs` by LU with partial pivoting; exactly
    /// zero pivots are replaced by a tiny multiple of the matrix scale.
    fn solve_shifted(&self, shift: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.len();
        let tiny = f64::EPSILON * self.scale();
        let mut d: Vec<f64> = self.diag.iter().map(|v| v - shift).collect();
        if n == 1 {
            let p = if d[0] == 0.0 { tiny } else { d[0] };
            return vec![rhs[0] / p];
        }
        let mut dl = self.off.clone();
        let mut du = self.off.clone();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut b = rhs.to_vec();
        for i in 0..n - 1 {
            if d[i].abs() >= dl[i].abs() {
                if d[i] == 0.0 {
                    d[i] = tiny;
                }
                let fact = dl[i] / d[i];
                d[i + 1] -= fact * du[i];
                b[i + 1] -= fact * b[i];
            } else {
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                let temp = d[i + 1];
                d[i + 1] = du[i] - fact * temp;
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du2[i];
                }
                du[i] = temp;
                let tb = b[i];
                b[i] = b[i + 1];
                b[i + 1] = tb - fact * b[i + 1];
            }
            dl[i] = 0.0;
        }
        if d[n - 1] == 0.0 {
            d[n - 1] = tiny;
        }
        let mut x = vec![0.0; n];
        x[n - 1] = b[n - 1] / d[n - 1];
        x[n - 2] = (b[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
        for i in (0..n.saturating_sub(2)).rev() {
            x[i] = (b[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
        }
        x
    }
}

fn normalize(x: &mut [f64]) -> Result<()> {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if !(norm.is_finite() && norm > 0.0) {
        return Err(Error::NoConvergence(format!(
            "inverse iteration produced norm {norm}"
        )));
    }
    x.iter_mut().for_each(|v| *v /= norm);
    Ok(())
}

/// Makes the first component of (near-)maximal magnitude positive.
pub(crate) fn fix_sign(x: &mut [f64]) {
    let max = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if let Some(lead) = x.iter().find(|v| v.abs() >= max - 1e-9) {
        if *lead < 0.0 {
            x.iter_mut().for_each(|v| *v = -*v);
        }
    }
}
