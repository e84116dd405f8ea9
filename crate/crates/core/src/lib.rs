//! Homology of Bol-Moufang quasigroups.

pub mod affine;
pub mod boundary;
pub mod category;
pub mod corpus;
pub mod error;
pub mod extensions;
pub mod group;
pub mod homology;
pub mod identities;
pub mod matrix;
pub mod quasigroup;
pub mod report;
pub mod snf;
pub mod trees;

pub use affine::AffineSpec;
pub use category::NerveComplex;
pub use corpus::CorpusEntry;
pub use error::{Error, Result};
pub use extensions::{Cochain1, Cochain2};
pub use group::AbelianGroup;
pub use identities::{BmIdentity, VarietyEntry, Word};
pub use matrix::IntMatrix;
pub use quasigroup::{CayleyTable, FiniteMonoid, Parastrophe};
pub use report::ReportRow;
pub use trees::{FormalChain, TsPolynomial};
