//! Exact invariants of pure rational Hodge structures.
//!
//! The crate computes the flag-variety dimension, the horizontal codimension
//! and the transcendence degree of the Hodge filtration from declared data
//! (a rational matrix Lie algebra, an integral cocharacter and a parametric
//! flag), and evaluates the conditional inequalities that screen out Hodge
//! structures which cannot come from geometry.

pub mod cli;
pub mod field;
pub mod flag;
pub mod grading;
pub mod hodge;
pub mod lie;
pub mod linalg;
pub mod verdict;
