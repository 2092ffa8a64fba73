//! Exact commutative algebra for multiple structures: polynomial rings over
//! the rationals and rational function fields, Gröbner bases, ideal
//! arithmetic, Hilbert series, and the filtrations and constructions built on
//! them.

pub mod coeff;
pub mod construct;
pub mod error;
pub mod forms;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod multistruct;
pub mod poly;
pub mod report;
pub mod script;

pub use coeff::{Field, RatFunc, Rational};
pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Ideal};
pub use poly::{MonomialOrder, PolyRing, Polynomial, QPoly, RingMap};
