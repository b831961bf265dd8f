//! Exact arithmetic on genus-2 Jacobians over their own function fields.

pub mod counting;
pub mod curve;
pub mod error;
pub mod extension;
pub mod field;
pub mod hyper;
pub mod jacobian;
pub mod kappa;
pub mod manin;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod report;
pub mod traits;

pub use error::{Error, Result};
pub use traits::FieldElement;
