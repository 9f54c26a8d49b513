//! Small-matroid and small-graph machinery for extremal claw-free searches.
//!
//! The crate provides two matroid backends (GF(2) column representations and
//! explicit basis families) behind one interface, claw/line analysis, the
//! named extremal constructions and their size functions, isomorph-free
//! enumeration of small matroids and graphs, and the verification campaigns
//! that compare observed extremal minima against the predicted bounds.

pub mod claw;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod ground;
pub mod matroid;
pub mod verify;

pub use claw::{ClawReport, LineProfile};
pub use constructions::{f_value, g_value, FamilySpec};
pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use ground::GroundSubset;
pub use matroid::{BasisMatroid, BinaryMatroid, Matroid, ValidationReport};
pub use verify::ExtremalReport;
