//! Parity biquandle invariants of virtual knots and links.

pub mod batch;
pub mod diagram;
pub mod engine;
pub mod parity;
pub mod ring;
pub mod switches;
