//! Computational substrate: exact rationals, coefficient rings, graded
//! quotient rings with normal forms, truncated power series, and the
//! symmetric-function engine.

pub mod coeff;
pub mod rational;
pub mod ring;
pub mod series;
pub mod symmetric;

pub use coeff::{Coeff, CoeffRing};
pub use rational::Rational;
pub use ring::{CohRing, MonomialEmbed, RingElem, RingMap};
pub use series::Series;
pub use symmetric::SymPoly;
