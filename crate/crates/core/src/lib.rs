//! Exact computations on multicomplexes: the Rumin complex, the
//! spectral-sequence complexes of the weight filtration, an independent
//! filtered-complex oracle, Hodge star duality, and a Carnot-group
//! polynomial de Rham frontend.

#![allow(clippy::needless_range_loop)]

pub mod carnot;
pub mod format;
pub mod hodge;
pub mod linalg;
pub mod multicomplex;
pub mod oracle;
pub mod random;
pub mod report;
pub mod rumin;
pub mod spectral;
pub mod star;

pub use linalg::{Matrix, Scalar, Subspace};
pub use multicomplex::{Bidegree, Multicomplex};
