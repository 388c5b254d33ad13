//! The moment table of `ν`, Hankel determinants and the enclosure of the
//! radius of convergence of a moment series.

mod decimal;
mod hankel;
mod radius;
mod table;

pub use decimal::{parse_decimal, render_decimal, render_decimal_directed, Rounding};
pub use hankel::{bareiss_determinant, hankel_determinant};
pub use radius::{
    c_irr_constant, c_irr_from_radius, catalan_squared_moments, irreducible_radius_target,
    pi_interval, radius_estimate, RationalInterval, TailBound, PI_50, RADIUS_TRUNCATION,
};
pub use table::{build_table1, table1_csv, Table1Row, TABLE1_ROWS};

use thiserror::Error;

use crate::freeprob::FreeProbError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("meander table has {got} entries, need at least {needed}")]
    TableTooShort { needed: usize, got: usize },
    #[error("need moments up to order {needed}, only {available} available")]
    InsufficientMoments { needed: usize, available: usize },
    #[error("moment of order {0} is not an integer")]
    NonIntegerMoment(usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("tail exponent must exceed 1, got {0}")]
    DivergentTail(u32),
    #[error("moment of order {0} is negative")]
    NegativeMoment(usize),
    #[error("radius parameter must be positive")]
    NonPositiveRadius,
    #[error("cannot parse decimal {0:?}")]
    Decimal(String),
    #[error(transparent)]
    FreeProb(#[from] FreeProbError),
}
