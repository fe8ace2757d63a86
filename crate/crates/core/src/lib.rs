pub mod arrangement;
pub mod chambers;
pub mod cli;
pub mod dpk;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod roots;
pub mod scalar;
pub mod theorem;

pub use error::{Error, Result};
