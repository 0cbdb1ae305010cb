pub mod algebra;
pub mod cli;
pub mod error;
pub mod exactlin;
pub mod io;
pub mod oracle;
pub mod order;
pub mod ring;
pub mod serre;

pub use error::{Error, Result};
