//! Exact-arithmetic toolkit for generalized characters of finite abelian
//! groups whose values on nonidentity elements are sums of at most two roots
//! of unity.
//!
//! The crate provides:
//!
//! - [`cyclotomic`]: exact arithmetic in Q(ζ_n), root-of-unity recognition,
//!   and the two-root decision procedure;
//! - [`abelian`]: finite abelian groups in invariant-factor form, their
//!   linear characters, subgroups, and separating-element search;
//! - [`genchar`]: generalized characters, inner products, restriction, type
//!   computation, and the shape classifier;
//! - [`vanishing`]: minimal vanishing sums of roots of unity, decomposition
//!   into rotated prime cycles, and bounded enumeration;
//! - [`search`]: the pruned exhaustive search for two-root characters and
//!   the verification drivers built on it;
//! - [`prime_graph`]: prime graphs from order spectra, Γ′/Γ″ induced
//!   subgraphs, degree partitions, and the CRT class-function construction;
//! - [`chartable`]: ingestion and exact validation of character tables,
//!   with a small bundled corpus.
//!
//! Everything is exact: floating point appears only as a rejection filter
//! ahead of exact confirmation, never in an equality decision.

pub mod abelian;
pub mod chartable;
pub mod cyclotomic;
pub mod genchar;
pub mod numtheory;
pub mod prime_graph;
pub mod search;
pub mod vanishing;
