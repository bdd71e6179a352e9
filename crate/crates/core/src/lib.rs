//! Higher-order matching polynomials of paths, cycles, complete and complete
//! bipartite graphs, with exact tools for their moments, orthogonality,
//! bijections, sign-reversing involutions and generating functions.

pub mod bijections;
pub mod cli;
pub mod coverings;
pub mod error;
pub mod exact;
pub mod family;
pub mod gfcheck;
pub mod involutions;
pub mod moments;
pub mod poly;
pub mod report;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use family::{Family, FamilyKind};
pub use poly::{Polynomial, RationalPolynomial};
pub use series::TruncatedSeries;
