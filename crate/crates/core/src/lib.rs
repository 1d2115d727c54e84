//! Exact computations around the compositional shuffle theorem.
//!
//! The crate is organised bottom-up: [`qtring`] provides the coefficient field `Q(q,t)`,
//! [`symfn`] symmetric functions with plethystic operators, [`dyck`] and [`charfn`] the
//! combinatorics of Dyck paths, [`dpa`] the Dyck path algebra acting on the spaces `V_k`,
//! and [`shuffle`] ties everything together into the three routes to `D_alpha`.

pub mod charfn;
pub mod dpa;
pub mod dyck;
pub mod error;
pub mod json;
pub mod linalg;
pub mod qtring;
pub mod report;
pub mod shapes;
pub mod shuffle;
pub mod symfn;

pub use error::{Error, Result};
pub use qtring::{qt, QtScalar};
