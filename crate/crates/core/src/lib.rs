pub mod algebra;
pub mod cli;
pub mod error;
pub mod models;
pub mod oracle;
pub mod outermorphism;
pub mod rotor;
pub mod spinor;

pub use error::{Error, Result};
