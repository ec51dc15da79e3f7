//! Exact construction of Bell-type polynomial families, certified real-root
//! isolation, and closed-form predictors for their rightmost zeros.
//!
//! Everything is computed in exact rational arithmetic. Zero finding is
//! certified end to end: isolation by Descartes bisection with variation
//! counts of zero or one, counting by Sturm chains, refinement by dyadic
//! bisection with exact sign checks, and decimal output rendered only once
//! the bracketing interval pins every printed digit.
//!
//! All values are immutable after construction and all operations are pure;
//! the library is safe to call from multiple threads, and refinements of
//! distinct zeros may run in parallel with no coordination.

pub mod decimal;
pub mod error;
pub mod isolate;
pub mod poly;
pub mod rational;
pub mod sturm;

pub use decimal::{decimal_of, Decimal};
pub use error::{Error, Result};
pub use isolate::{
    interlaces, isolate_real_roots, refine_root, IsolatingInterval, RootEstimate, Side,
};
pub use poly::{cauchy_bound, Polynomial};
pub use rational::{parse_rational, Dyadic, Integer, Rational};
pub use sturm::{count_real_roots, SturmChain};
