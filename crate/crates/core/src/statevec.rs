//! Dense complex state vectors and the rank-1 reflections that the search
//! iterations are built from.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest deviation of ‖axis‖² from one accepted by [`StateVector::reflect_about`].
pub const AXIS_NORM_TOLERANCE: f64 = 1e-9;

/// A sequence of complex amplitudes over `N` basis states.
///
/// Basis states are addressed by flat index; there is no qubit structure.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Wraps raw amplitudes without normalizing them.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidDimension(0, 1));
        }
        if amplitudes.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::param("amplitudes", "non-finite amplitude"));
        }
        Ok(Self { amplitudes })
    }

    /// Real amplitudes, taken as given.
    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::from_amplitudes(amplitudes.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Builds a state and rescales it to unit norm.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let mut state = Self::from_amplitudes(amplitudes)?;
        let norm = state.norm_sqr().sqrt();
        if norm == 0.0 {
            return Err(Error::NotNormalized(0.0));
        }
        state.amplitudes.iter_mut().for_each(|a| *a /= norm);
        Ok(state)
    }

    /// The uniform superposition: every amplitude equals `1/√N`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(0, 1));
        }
        let a = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
        Ok(Self {
            amplitudes: vec![a; n],
        })
    }

    /// The computational basis vector `|index⟩`.
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(0, 1));
        }
        if index >= n {
            return Err(Error::IndexOutOfRange { index, dim: n });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); n];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner_product(&self, other: &StateVector) -> Result<Complex64> {
        self.check_dim(other)?;
        Ok(dot(&self.amplitudes, &other.amplitudes))
    }

    /// `|amplitude_index|²`.
    pub fn probability(&self, index: usize) -> Result<f64> {
        self.amplitudes
            .get(index)
            .map(|a| a.norm_sqr())
            .ok_or(Error::IndexOutOfRange {
                index,
                dim: self.dim(),
            })
    }

    /// Total probability carried by a set of basis indices.
    pub fn probability_on(&self, indices: &[usize]) -> Result<f64> {
        indices.iter().map(|&i| self.probability(i)).sum()
    }

    /// Returns `(I − (1 − e^{iφ})|axis⟩⟨axis|)·self`.
    ///
    /// With `phase = π` this is the reflection `I − 2|axis⟩⟨axis|`. Applied as
    /// a rank-1 update in O(N); `axis` must be normalized.
    pub fn reflect_about(&self, axis: &StateVector, phase: f64) -> Result<StateVector> {
        let mut out = self.clone();
        out.reflect_about_in_place(axis, phase)?;
        Ok(out)
    }

    pub(crate) fn reflect_about_in_place(&mut self, axis: &StateVector, phase: f64) -> Result<()> {
        self.check_dim(axis)?;
        let axis_norm = axis.norm_sqr();
        if (axis_norm - 1.0).abs() > AXIS_NORM_TOLERANCE {
            return Err(Error::NotNormalized(axis_norm));
        }
        let factor = phase_factor(phase);
        let overlap = dot(&axis.amplitudes, &self.amplitudes);
        let coeff = (Complex64::new(1.0, 0.0) - factor) * overlap;
        for (a, x) in self.amplitudes.iter_mut().zip(&axis.amplitudes) {
            *a -= coeff * x;
        }
        Ok(())
    }

    /// Multiplies the listed amplitudes by `e^{iφ}`.
    ///
    /// Equivalent to the product of the commuting rank-1 phase reflections
    /// about each listed basis vector.
    pub(crate) fn phase_indices_in_place(&mut self, indices: &[usize], phase: f64) {
        let factor = phase_factor(phase);
        for &i in indices {
            self.amplitudes[i] *= factor;
        }
    }

    pub(crate) fn scale_in_place(&mut self, factor: Complex64) {
        self.amplitudes.iter_mut().for_each(|a| *a *= factor);
    }

    fn check_dim(&self, other: &StateVector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(())
    }
}

/// `e^{iφ}`, snapped to exactly `-1` at `φ = ±π` so the standard reflection
/// carries no rounding residue in its imaginary part.
pub(crate) fn phase_factor(phase: f64) -> Complex64 {
    if (phase.abs() - std::f64::consts::PI).abs() < 1e-15 {
        Complex64::new(-1.0, 0.0)
    } else {
        Complex64::from_polar(1.0, phase)
    }
}

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Convenience constructor for the uniform state.
pub fn uniform_state(n: usize) -> Result<StateVector> {
    StateVector::uniform(n)
}
