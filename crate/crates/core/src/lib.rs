//! Finite-type Kashiwara crystals, Demazure crystals, and extremality of
//! subsets of tensor products.
//!
//! Indices of simple roots, colors and Weyl generators are 0-based in the
//! API and 1-based in every text format.

pub mod analysis;
pub mod cartan;
pub mod crystal;
pub mod demazure;
pub mod error;
pub mod laurent;
pub mod models;
pub mod tableaux;
pub mod weyl;

pub use cartan::{CartanData, CartanType, Weight};
pub use crystal::{
    direct_sum, validate, CrystalGraph, DotStyle, Provenance, Subcrystal, TensorElement,
    TensorLayout, ValidationReport,
};
pub use demazure::{Decomposer, Decomposition, DecompositionFailure, DemazureLabel};
pub use error::{Error, Result};
pub use laurent::LaurentPolynomial;
pub use weyl::{kouno_criterion, ReducedWord, WeylElement};
