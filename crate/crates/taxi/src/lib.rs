//! Exact taxicab (L1) triangle geometry: inscribed-angle classification,
//! circumcircles, excircles, and Apollonius circles, all in rational
//! arithmetic, plus independent search oracles and an SVG renderer.

pub mod error;
pub mod rat;

pub mod geom;
pub mod inscription;

pub mod apollonius;
pub mod excircles;
pub mod oracle;

pub mod consistency;
pub mod sampling;
pub mod scene;

pub use error::{Result, TaxiError};
pub use rat::Rat;
