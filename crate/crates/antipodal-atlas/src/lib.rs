//! Antipodal sets of compact symmetric spaces, computed exactly.
pub mod antipodal;
pub mod catalog;
pub mod cli;
pub mod exact;
pub mod formula;
pub mod oracle;
pub mod polyhedron;
pub mod quotients;
pub mod rootsys;
pub mod tables;
pub mod verify;
