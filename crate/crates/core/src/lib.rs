//! Combinatorics and spectra of Grigorchuk's group through the substitution
//! subshift generated by `τ: a ↦ axa, x ↦ y, y ↦ z, z ↦ x`.
//!
//! Words and the fixed point `η` live in [`word`] and [`substitution`];
//! factor statistics in [`language`]; the group action on the binary tree
//! and the Schreier graphs `Γₙ` in [`group`] and [`graph`]; the Jacobi
//! operators and their spectra in [`spectra`].

pub mod error;
pub mod graph;
pub mod group;
pub mod language;
pub mod spectra;
pub mod subshift;
pub mod substitution;
pub mod suffix;
pub mod word;

pub use error::{Error, Result};
pub use graph::{GraphDiff, LabeledGraph};
pub use group::{Generator, GroupWord, TreeVertex};
pub use spectra::{Params, SpectralData, TridiagonalOperator};
pub use substitution::{OutputAutomaton, Substitution};
pub use word::{Letter, PointedWord, Word};
