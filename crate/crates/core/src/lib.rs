pub mod cli;
pub mod covers;
pub mod error;
pub mod io;
pub mod lambda;
pub mod mpoly;
pub mod numeric;
pub mod poly;
pub mod pth;
pub mod repro;
pub mod rigid;
pub mod scalar;
pub mod tree;
pub mod weights;
pub mod xi;

pub use error::{Error, Result};
