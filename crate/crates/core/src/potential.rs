//! Catalog of central potentials U(r).
//!
//! With the convention `ħ²/2μ = 1` the reduced potential U(r) carries
//! units of inverse length squared and is numerically equal to the
//! physical V(r). Every potential declares an effective range beyond
//! which `|U| < range_epsilon`, which the integrators use to switch to
//! analytic free-motion tails.

use crate::error::{Error, Result};
use std::fmt;
use std::path::Path;
use std::sync::Arc;

/// Default threshold defining the effective range: below quadrature tolerance.
pub const DEFAULT_RANGE_EPSILON: f64 = 1e-10;

/// Slowly decaying potentials are truncated at this multiple of their
/// matching radius; the neglected tail shifts deflection angles by
/// O(A b / (2 k² r_cut²)).
pub const SLOW_DECAY_CUTOFF_FACTOR: f64 = 1e3;

type Evaluator = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// An evaluable central potential with effective-range metadata.
///
/// Immutable after construction; cheap to clone and safe to share across
/// worker threads.
#[derive(Clone)]
pub struct RadialPotential {
    evaluator: Evaluator,
    r_range: f64,
    range_epsilon: f64,
    slow_decay: bool,
    label: String,
}

impl fmt::Debug for RadialPotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialPotential")
            .field("label", &self.label)
            .field("r_range", &self.r_range)
            .field("range_epsilon", &self.range_epsilon)
            .field("slow_decay", &self.slow_decay)
            .finish()
    }
}

/// Parameters of the piecewise Coulomb-parabolic model: a 1/r tail matched
/// at r = R_c onto a parabolic core, continuous at the seam.
#[derive(Debug, Clone, Copy)]
pub struct AppendixBParams {
    /// Strength times length: the tail is A/r.
    pub strength: f64,
    /// Matching radius between core and tail.
    pub r_c: f64,
}

impl RadialPotential {
    /// U(r) = U0 exp(-r²/a²).
    pub fn gaussian(u0: f64, a: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() || !u0.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "gaussian potential: width a = {a} must be positive and finite"
            )));
        }
        let eps = DEFAULT_RANGE_EPSILON;
        let r_range = if u0.abs() <= eps {
            a
        } else {
            a * (u0.abs() / eps).ln().sqrt()
        };
        Ok(Self {
            evaluator: Arc::new(move |r: f64| u0 * (-(r * r) / (a * a)).exp()),
            r_range,
            range_epsilon: eps,
            slow_decay: false,
            label: format!("gaussian(U0={u0}, a={a})"),
        })
    }

    /// The piecewise model: U = A/r for r > R_c and
    /// U = A/(2 R_c) [3 - (r/R_c)²] for r <= R_c.
    ///
    /// The 1/r tail decays too slowly for a finite range at
    /// `range_epsilon`, so the potential is marked `slow_decay` and
    /// truncated at `1e3 R_c` by the integrators.
    pub fn appendix_b(params: AppendixBParams) -> Result<Self> {
        let AppendixBParams { strength, r_c } = params;
        if !(r_c > 0.0) || !r_c.is_finite() || !strength.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "piecewise Coulomb-parabolic potential: R_c = {r_c} must be positive"
            )));
        }
        let r_range = SLOW_DECAY_CUTOFF_FACTOR * r_c;
        Ok(Self {
            evaluator: Arc::new(move |r: f64| {
                if r > r_c {
                    strength / r
                } else {
                    strength / (2.0 * r_c) * (3.0 - (r / r_c) * (r / r_c))
                }
            }),
            r_range,
            range_epsilon: strength.abs() / r_range,
            slow_decay: strength != 0.0,
            label: format!("appendix_b(A={strength}, R_c={r_c})"),
        })
    }

    /// Monotone-cubic interpolant through (r, U) samples; zero beyond the
    /// last r, clamped to the first sample below the first r.
    ///
    /// The r values must be strictly increasing and everything finite.
    pub fn tabulated(samples: &[(f64, f64)]) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "tabulated potential needs >= 2 samples, got {}",
                samples.len()
            )));
        }
        for w in samples.windows(2) {
            if !(w[1].0 > w[0].0) {
                return Err(Error::InvalidArgument(format!(
                    "tabulated potential: r grid must be strictly increasing ({} then {})",
                    w[0].0, w[1].0
                )));
            }
        }
        if samples.iter().any(|(r, u)| !r.is_finite() || !u.is_finite()) {
            return Err(Error::InvalidArgument(
                "tabulated potential: NaN or infinite sample".into(),
            ));
        }
        let rs: Vec<f64> = samples.iter().map(|s| s.0).collect();
        let us: Vec<f64> = samples.iter().map(|s| s.1).collect();
        let slopes = crate::numerics::pchip_slopes(&rs, &us);
        let eps = DEFAULT_RANGE_EPSILON;
        // effective range: last grid point, trimmed backwards over a
        // negligible tail
        let mut r_range = *rs.last().unwrap();
        for i in (0..rs.len()).rev() {
            if us[i].abs() >= eps {
                break;
            }
            r_range = rs[i];
        }
        let label = format!("tabulated({} samples)", samples.len());
        Ok(Self {
            evaluator: Arc::new(move |r: f64| crate::numerics::pchip_eval(&rs, &us, &slopes, r)),
            r_range,
            range_epsilon: eps,
            slow_decay: false,
            label,
        })
    }

    /// Loads a tabulated potential from a two-column CSV (columns r, U;
    /// header row optional).
    pub fn tabulated_from_csv(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
        })?;
        let mut samples = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut cols = line.split(',').map(str::trim);
            let (a, b) = (cols.next(), cols.next());
            match (a.map(str::parse::<f64>), b.map(str::parse::<f64>)) {
                (Some(Ok(r)), Some(Ok(u))) => samples.push((r, u)),
                _ if idx == 0 => continue, // header row
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "{}:{}: expected two numeric columns",
                        path.display(),
                        idx + 1
                    )))
                }
            }
        }
        Self::tabulated(&samples)
    }

    /// The free particle, U = 0 everywhere.
    pub fn free() -> Self {
        Self {
            evaluator: Arc::new(|_| 0.0),
            r_range: 1.0,
            range_epsilon: DEFAULT_RANGE_EPSILON,
            slow_decay: false,
            label: "free".into(),
        }
    }

    /// Evaluates U(r).
    #[inline]
    pub fn eval(&self, r: f64) -> f64 {
        (self.evaluator)(r)
    }

    /// Radius beyond which |U| < range_epsilon (or, for slow-decay
    /// potentials, the declared truncation cutoff).
    pub fn r_range(&self) -> f64 {
        self.r_range
    }

    pub fn range_epsilon(&self) -> f64 {
        self.range_epsilon
    }

    /// True when the tail decays too slowly for a genuine finite range and
    /// integrals are truncated at [`Self::r_range`] instead.
    pub fn slow_decay(&self) -> bool {
        self.slow_decay
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}
