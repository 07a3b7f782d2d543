//! Workbench for extremal quantities of intersecting set families and their
//! shades: exact family constructions, brute-force extremal search with
//! witnesses, desk-scale claim verification, and high-precision evaluation of
//! the associated limit statements.

pub mod asympt;
pub mod error;
pub mod extremal;
pub mod families;
pub mod report;
pub mod setkit;
pub mod verify;

pub use error::{Error, Result};
pub use setkit::{Count, KSubset, SetFamily};
