//! Exact graded-ideal kernel over polynomial rings and exterior algebras.

pub mod field;
pub mod linalg;
pub mod ring;
pub mod parse;
pub mod ideal;
pub mod combinatorics;
pub mod degeneration;
pub mod tangent;
pub mod exterior;
