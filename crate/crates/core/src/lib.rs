//! Exact enumeration of character-sheaf data for symmetric pairs of spin
//! groups of types BDI and DIII.
//!
//! The crate is organised bottom-up: [`partitions`] and [`qseries`] supply
//! the counting and power-series machinery, [`diagrams`] and [`groups`]
//! model signed Young diagrams and the numerical shadows of their component
//! groups, [`census`] assembles the censuses and closed formulas, and
//! [`verify`] compares the two against each other.

pub mod census;
pub mod diagrams;
pub mod error;
pub mod groups;
pub mod partitions;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
