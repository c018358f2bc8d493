pub mod error;
pub mod exact;
pub mod almost;
pub mod embedded;
pub mod homogeneous;
pub mod parser;
pub mod poly;

pub use error::{Error, Result};
