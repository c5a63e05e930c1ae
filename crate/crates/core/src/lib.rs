//! Finite fields, cyclic codes and entanglement-assisted quantum code
//! parameters, with exact verification by linear algebra.

pub mod arith;
pub mod code;
pub mod config;
pub mod defset;
pub mod gf;
pub mod oracle;
pub mod poly;
pub mod quenta;
