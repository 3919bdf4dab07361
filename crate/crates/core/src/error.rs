//! Error type shared by all scattering layers.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A constructor or operation was handed an argument outside its domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Evaluation requested outside a function's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The radial kinetic function stays positive down to `r_min`: the
    /// trajectory plunges to the center and has no classical turning point.
    #[error("no turning point: F(r) > 0 down to r = {r_min:.3e} (plunging orbit)")]
    NoTurningPoint { r_min: f64 },

    /// The outermost turning point is a double root: the orbiting condition
    /// is met and the deflection integral diverges.
    #[error("degenerate turning point near r = {r0:.6e} (orbiting)")]
    OrbitingDegenerate { r0: f64 },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature did not converge: {0}")]
    QuadratureNonConvergent(String),

    /// The outward radial integration produced non-finite values.
    #[error("radial integration did not converge: {0}")]
    IntegrationNonConvergent(String),

    /// The two-point matching system is singular at the matching radius.
    #[error("matching determinant near zero at r = {r:.6e}")]
    MatchingDegenerate { r: f64 },

    /// A stationary point sits too close to a caustic for the
    /// stationary-phase prefactor to make sense; use the Airy form instead.
    #[error("caustic proximity: |dTheta/dm| = {slope:.3e} below the slope floor")]
    CausticProximity { slope: f64 },

    /// No interior extremum of the deflection function in the bracket.
    #[error("no extremum of the deflection function in [{lo:.4}, {hi:.4}]")]
    NoExtremum { lo: f64, hi: f64 },

    /// Too few usable samples for a stable fit.
    #[error("ill-conditioned fit: {0}")]
    IllConditionedFit(String),

    /// Truncating an integral at the configured cutoff leaves too large a tail.
    #[error("truncation tail estimate {estimate:.3e} exceeds tolerance {tol:.3e}")]
    TruncationTail { estimate: f64, tol: f64 },
}
