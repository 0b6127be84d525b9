pub mod classify;
pub mod combinatorics;
pub mod error;
pub mod jordan;
pub mod lie_type;
pub mod oracle;
pub mod parabolic;
pub mod richardson;
pub mod series;

pub use error::{Error, Result};
pub use lie_type::LieType;
pub use parabolic::{BlockSequence, ParabolicSpec};
