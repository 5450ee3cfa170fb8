//! Randomized locus samplers, validators and the scenario verification suite.

pub mod geometry;
pub mod growth;
pub mod lemmas;
pub mod random;
pub mod report;
pub mod runner;
pub mod samplers;
pub mod scenario;
