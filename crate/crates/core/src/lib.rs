pub mod algebra;
pub mod block;
pub mod error;
pub mod ffla;
pub mod group;
pub mod lab;

pub use error::{Error, Result};
