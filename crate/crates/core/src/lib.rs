//! Endomorphism, automorphism and power graphs of finite groups.
//!
//! The crate builds groups as Cayley tables ([`group`]), enumerates and
//! queries their endomorphisms ([`morphism`]), turns them into graphs
//! ([`builders`]) analysed by the algorithms in [`graph`], and checks the
//! structural characterizations of these graphs over fleets of groups
//! ([`verifier`]).

pub mod arith;
pub mod builders;
pub mod cli;
pub mod error;
pub mod group;
pub mod graph;
pub mod morphism;
pub mod verifier;

pub use error::{Error, Result};
