//! Topological symmetry groups of spatial Petersen graphs.
//!
//! The crate covers the combinatorics of the Petersen graph and its
//! automorphism group, exact knot invariants of planar diagrams, a text format
//! for spatial graph diagrams, and an engine that bounds or determines the
//! topological symmetry group of an embedding from its knot and link data.

pub mod corpus;
pub mod diagram;
pub mod geometry;
pub mod group;
pub mod knot;
pub mod knot_id;
pub mod laurent;
pub mod petersen;
pub mod table;
pub mod tsg;

pub use group::{GroupName, Perm, PermutationGroup, Sign, SignedAutomorphism};
pub use knot::{Invariants, KnotDiagram};
pub use laurent::LaurentPolynomial;
