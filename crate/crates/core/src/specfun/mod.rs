//! Self-contained special functions: integer-order Bessel `J_m` and
//! Neumann `Y_m`, and the Airy function `Ai`.
//!
//! Each function offers a power-series path, a large-argument asymptotic
//! path, and an [`EvaluationPath::Auto`] selector that routes to whichever
//! is accurate. The two explicit paths overlap in a documented crossover
//! band where they agree to better than 1e-8; the property tests pin that
//! band down.

mod airy;
mod bessel;

pub use airy::airy_ai;
pub use bessel::{bessel_j, bessel_j_path, bessel_y, bessel_y_path};

/// Which evaluation route to take for a special function.
///
/// `Auto` selects the series for small argument and the asymptotic
/// expansion for large argument. Crossovers: `x = 12` for `J_0`, `J_1`,
/// `Y_0`, `Y_1` (higher orders route through recurrences built on these),
/// and `|x| = 6` for `Ai`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvaluationPath {
    /// Power / Maclaurin series about the origin.
    Series,
    /// Large-argument asymptotic expansion, truncated at its smallest term.
    Asymptotic,
    /// Pick automatically based on the argument.
    Auto,
}
