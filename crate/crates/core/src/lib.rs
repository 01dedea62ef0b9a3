//! Exact computation of counting polynomials, Betti numbers and existence
//! criteria for moduli spaces of quiver representations.
//!
//! Every closed formula is paired with an independent route to the same
//! number: two evaluations of the Harder–Narasimhan kernel, two
//! non-emptiness criteria, three descriptions of Hilbert-scheme Euler
//! characteristics, and a brute-force enumeration over small prime fields
//! ([`oracle`]) that certifies the point counts directly.

pub mod cli;
pub mod counting;
pub mod error;
pub mod exactq;
pub mod existence;
pub mod framed;
pub mod hn;
pub mod oracle;
pub mod quiver;
pub mod roots;
pub mod series;

pub use error::{Error, Result};
pub use exactq::{Poly, RatFunc};
pub use quiver::{DimVector, Quiver, Slope, SlopeClass, StandardQuiver, Stability};
pub use series::{Product, SeriesShape, TwistedSeries};
