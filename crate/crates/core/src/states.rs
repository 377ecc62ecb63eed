//! Proof states: unit-norm amplitude vectors over the n encoding modes.
//!
//! Proper states encode an assignment as (-1)^{x_i}/sqrt(n) amplitudes.
//! The improper family interpolates between pairs of modes, and the cheat
//! constructor concentrates amplitude on one mode so that every clause
//! containing that mode projects to zero.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sat::Assignment;

const NORM_TOL: f64 = 1e-12;

/// A pure state on `n` modes; amplitudes are kept at unit norm.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Wraps amplitudes that are already unit norm (within 1e-12).
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() < 2 {
            return Err(Error::Input(format!(
                "state needs at least 2 modes, got {}",
                amps.len()
            )));
        }
        let norm_sq: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::Input(format!(
                "state norm^2 = {norm_sq}, expected 1 within {NORM_TOL}"
            )));
        }
        Ok(StateVector { amps })
    }

    /// Rescales arbitrary amplitudes to unit norm.
    pub fn normalized(amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() < 2 {
            return Err(Error::Input(format!(
                "state needs at least 2 modes, got {}",
                amps.len()
            )));
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-300 {
            return Err(Error::Input("cannot normalize the zero vector".into()));
        }
        Ok(StateVector {
            amps: amps.into_iter().map(|a| a / norm).collect(),
        })
    }

    pub fn from_reals(re: &[f64]) -> Result<Self> {
        Self::normalized(re.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Amplitude of mode `m` (1-based).
    pub fn amp(&self, m: usize) -> Complex64 {
        self.amps[m - 1]
    }

    /// Element-wise negation (a global phase flip).
    pub fn negated(&self) -> Self {
        StateVector {
            amps: self.amps.iter().map(|a| -a).collect(),
        }
    }
}

/// The proper state of an assignment: amplitude (-1)^{x_i}/sqrt(n) on mode i.
pub fn proper_state(a: &Assignment) -> Result<StateVector> {
    let n = a.n_vars();
    if n < 2 {
        return Err(Error::Input("proper state needs n >= 2".into()));
    }
    let scale = 1.0 / (n as f64).sqrt();
    StateVector::new(
        a.bits()
            .iter()
            .map(|&x| Complex64::new(if x { -scale } else { scale }, 0.0))
            .collect(),
    )
}

/// The improper family: amplitudes alternate (cos t, sin t, cos t, ...),
/// renormalized to unit norm.
pub fn improper_theta(theta: f64, n: usize) -> Result<StateVector> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::Input(format!("n must be even and >= 2, got {n}")));
    }
    let (s, c) = theta.sin_cos();
    StateVector::normalized(
        (0..n)
            .map(|i| Complex64::new(if i % 2 == 0 { c } else { s }, 0.0))
            .collect(),
    )
}

/// Cheat state against clauses containing variable `v`: amplitude
/// -3/sqrt(n+8) on mode v and 1/sqrt(n+8) elsewhere, which zeroes the
/// clause projection of every clause containing v.
pub fn cheat_common_var(v: usize, n: usize) -> Result<StateVector> {
    if n < 2 {
        return Err(Error::Input("cheat state needs n >= 2".into()));
    }
    if v == 0 || v > n {
        return Err(Error::Input(format!("mode {v} out of range 1..={n}")));
    }
    let scale = 1.0 / ((n + 8) as f64).sqrt();
    StateVector::new(
        (1..=n)
            .map(|i| Complex64::new(if i == v { -3.0 * scale } else { scale }, 0.0))
            .collect(),
    )
}

/// Inner product, conjugate-linear in the first argument.
pub fn overlap(a: &StateVector, b: &StateVector) -> Result<Complex64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    Ok(a.amps
        .iter()
        .zip(&b.amps)
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Parses the CLI state literal grammar: `proper:110000`, `improper:<theta>`,
/// `cheat:<v>` (n = 6), or a JSON array of `[re, im]` pairs.
pub fn parse_state_literal(text: &str) -> Result<StateVector> {
    let text = text.trim();
    if let Some(bits) = text.strip_prefix("proper:") {
        return proper_state(&Assignment::parse(bits)?);
    }
    if let Some(theta) = text.strip_prefix("improper:") {
        let theta: f64 = theta
            .parse()
            .map_err(|_| Error::Input(format!("bad improper angle '{theta}'")))?;
        return improper_theta(theta, 6);
    }
    if let Some(v) = text.strip_prefix("cheat:") {
        let v: usize = v
            .parse()
            .map_err(|_| Error::Input(format!("bad cheat mode '{v}'")))?;
        return cheat_common_var(v, 6);
    }
    if text.starts_with('[') {
        let pairs: Vec<[f64; 2]> = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("bad state JSON: {e}")))?;
        return StateVector::normalized(
            pairs
                .into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect(),
        );
    }
    Err(Error::Input(format!("unrecognized state literal '{text}'")))
}
