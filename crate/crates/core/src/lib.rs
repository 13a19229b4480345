//! Section rings of rational divisors on elliptic curves supported at one
//! or two points: closed-form presentations, a curve-level oracle that
//! recomputes them from Riemann–Roch spaces, and an explorer for divisors
//! whose difference of points is non-torsion.

pub mod approx;
pub mod curve;
pub mod curve_oracle;
pub mod divisor;
pub mod error;
pub mod explorer;
pub mod field;
pub mod linalg;
pub mod local;
pub mod monoid;
pub mod order;
pub mod plot;
pub mod poly;
pub mod presentation;
pub mod rational;
pub mod registry;
pub mod report;
pub mod section;
pub mod series;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;
