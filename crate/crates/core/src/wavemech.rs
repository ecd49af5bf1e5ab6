//! Classical wave realization of the search: `N` real mode amplitudes whose
//! squares are energies. The oracle is a sign flip of one mode and the
//! diffusion is inversion about the mean amplitude (over-relaxation).
//!
//! Modeled at the level of normal-mode amplitudes; no mass-spring ODE is
//! integrated.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grover::{optimal_queries, threshold_step_cap, StopReason};
use crate::statevec::StateVector;

#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorBank {
    amplitudes: Vec<f64>,
    total_energy: f64,
}

impl OscillatorBank {
    /// The synchronized state: every mode carries `total_energy / N`.
    pub fn new(n: usize, total_energy: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n, 2));
        }
        if !(total_energy > 0.0 && total_energy.is_finite()) {
            return Err(Error::param(
                "total_energy",
                format!("{total_energy} must be positive"),
            ));
        }
        let a = (total_energy / n as f64).sqrt();
        Ok(Self {
            amplitudes: vec![a; n],
            total_energy,
        })
    }

    pub fn from_amplitudes(amplitudes: Vec<f64>) -> Result<Self> {
        if amplitudes.len() < 2 {
            return Err(Error::InvalidDimension(amplitudes.len(), 2));
        }
        if amplitudes.iter().any(|a| !a.is_finite()) {
            return Err(Error::param("amplitudes", "non-finite amplitude"));
        }
        let total_energy = amplitudes.iter().map(|a| a * a).sum();
        if total_energy == 0.0 {
            return Err(Error::param("amplitudes", "bank carries no energy"));
        }
        Ok(Self {
            amplitudes,
            total_energy,
        })
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    /// Energy the bank was created with.
    pub fn total_energy(&self) -> f64 {
        self.total_energy
    }

    /// Energy recomputed from the current amplitudes.
    pub fn energy(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum()
    }

    pub fn energy_fraction(&self, mode: usize) -> Result<f64> {
        let a = self.mode(mode)?;
        Ok(a * a / self.total_energy)
    }

    /// Sign flip of one mode: the reflection off the marked oscillator.
    pub fn reflect_target(&self, target: usize) -> Result<Self> {
        self.mode(target)?;
        let mut out = self.clone();
        out.amplitudes[target] = -out.amplitudes[target];
        Ok(out)
    }

    /// `aᵢ ← 2·mean(a) − aᵢ`.
    pub fn invert_about_mean(&self) -> Self {
        let mut out = self.clone();
        out.invert_in_place();
        out
    }

    /// The same amplitudes as a quantum state, scaled to unit norm.
    pub fn to_state(&self) -> Result<StateVector> {
        let scale = self.total_energy.sqrt();
        let amps: Vec<f64> = self.amplitudes.iter().map(|a| a / scale).collect();
        StateVector::from_real(&amps)
    }

    fn invert_in_place(&mut self) {
        let mean = self.amplitudes.iter().sum::<f64>() / self.len() as f64;
        let twice = 2.0 * mean;
        self.amplitudes.iter_mut().for_each(|a| *a = twice - *a);
    }

    fn mode(&self, index: usize) -> Result<f64> {
        self.amplitudes
            .get(index)
            .copied()
            .ok_or(Error::IndexOutOfRange {
                index,
                dim: self.len(),
            })
    }
}

pub fn init_bank(n: usize, total_energy: f64) -> Result<OscillatorBank> {
    OscillatorBank::new(n, total_energy)
}

/// How long a focusing run goes on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FocusMode {
    Steps(usize),
    /// Stop once the target holds at least this fraction of the energy.
    Threshold(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyPoint {
    pub step: usize,
    pub energy_fraction: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnergyTrajectory {
    pub points: Vec<EnergyPoint>,
    pub stop_reason: StopReason,
    pub final_bank: OscillatorBank,
}

impl EnergyTrajectory {
    pub fn fractions(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.energy_fraction).collect()
    }

    pub fn last(&self) -> EnergyPoint {
        *self.points.last().expect("trajectory always holds step 0")
    }
}

/// Focuses energy onto `target` starting from the synchronized bank of unit
/// energy. One step is a sign flip of the target followed by inversion about
/// the mean.
pub fn run_focus(n: usize, target: usize, mode: FocusMode) -> Result<EnergyTrajectory> {
    let bank = OscillatorBank::new(n, 1.0)?;
    let (steps, tau) = match mode {
        FocusMode::Steps(k) => (k, None),
        FocusMode::Threshold(tau) => {
            if !(tau > 0.0 && tau <= 1.0) {
                return Err(Error::param("tau", format!("{tau} is outside (0, 1]")));
            }
            (threshold_step_cap(n), Some(tau))
        }
    };
    evolve(bank, target, steps, tau, |b, t| {
        b.amplitudes[t] = -b.amplitudes[t];
        b.invert_in_place();
    })
}

/// Runs the focusing map backwards from `bank`: inversion about the mean,
/// then the sign flip. Each map is its own inverse, so `k` reverse steps undo
/// `k` forward steps.
pub fn run_disperse(bank: &OscillatorBank, target: usize, steps: usize) -> Result<EnergyTrajectory> {
    evolve(bank.clone(), target, steps, None, |b, t| {
        b.invert_in_place();
        b.amplitudes[t] = -b.amplitudes[t];
    })
}

fn evolve(
    mut bank: OscillatorBank,
    target: usize,
    steps: usize,
    tau: Option<f64>,
    step: impl Fn(&mut OscillatorBank, usize),
) -> Result<EnergyTrajectory> {
    let f0 = bank.energy_fraction(target)?;
    let mut points = vec![EnergyPoint {
        step: 0,
        energy_fraction: f0,
    }];
    let reached = |f: f64| tau.is_some_and(|t| f >= t);
    let mut stop_reason = if tau.is_some() {
        StopReason::StepCap
    } else {
        StopReason::FixedSteps
    };
    if reached(f0) {
        stop_reason = StopReason::Threshold;
    } else {
        for k in 1..=steps {
            step(&mut bank, target);
            let f = bank.energy_fraction(target)?;
            points.push(EnergyPoint {
                step: k,
                energy_fraction: f,
            });
            if reached(f) {
                stop_reason = StopReason::Threshold;
                break;
            }
        }
    }
    Ok(EnergyTrajectory {
        points,
        stop_reason,
        final_bank: bank,
    })
}

/// Resources needed to search `N` items by wave focusing, next to the qubit
/// count a quantum register would need and the Boolean comparators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResourceReport {
    pub wave_modes: usize,
    /// `ceil(log₂ N)`.
    pub qubits: u32,
    /// Oracle calls made by the wave (or quantum) search.
    pub queries_classical: usize,
    /// Binary-search queries, `ceil(log₂ N)`, each answering one bit.
    pub boolean_queries: u32,
    /// Worst-case one-item-at-a-time membership queries, `N − 1`.
    pub membership_queries: usize,
}

pub fn resource_report(n: usize) -> Result<ResourceReport> {
    if n < 2 {
        return Err(Error::InvalidDimension(n, 2));
    }
    let bits = usize::BITS - (n - 1).leading_zeros();
    Ok(ResourceReport {
        wave_modes: n,
        qubits: bits,
        queries_classical: optimal_queries(n, 1)?,
        boolean_queries: bits,
        membership_queries: n - 1,
    })
}
