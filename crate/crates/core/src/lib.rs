//! Cyclic codes over `F_p[u,v,w]/<u², v², w²>`: arithmetic, canonical
//! generators, rank and distance results, and a brute-force oracle.

pub mod analysis;
pub mod code;
pub mod error;
pub mod gfpoly;
pub mod linalg;
pub mod oracle;
pub mod ring;
pub mod rpoly;

pub use error::{Error, Result};
