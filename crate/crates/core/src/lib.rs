//! Binary deletion balls, their intersections, and exact computation of
//! `N(n, d, t)`: the largest intersection of two radius-`t` deletion balls
//! whose centers are at Levenshtein distance at least `d`.

pub mod cache;
pub mod delball;
pub mod error;
pub mod formulas;
pub mod intersect;
pub mod reconstruct;
pub mod search;
pub mod seqcore;

pub use delball::{ball_size, d_formula, deletion_ball, levenshtein_distance, DeletionBall};
pub use error::{Error, Result};
pub use intersect::intersection_size;
pub use seqcore::{alt, alternating, BinarySequence};
