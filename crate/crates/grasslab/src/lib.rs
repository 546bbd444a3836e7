// index loops over matrix rows/columns stay as ranges throughout; the
// iterator rewrites clippy suggests obscure the elimination algebra
#![allow(clippy::needless_range_loop)]

//! grasslab: an exact engine for finite linear, projective and Grassmann
//! spaces.
//!
//! The crate builds small projective spaces PG(n,q) over explicit finite
//! fields, works with abstract linear spaces through their closure operator,
//! enumerates Grassmann spaces with their adjacency graphs, runs the base
//! subset calculus (exact/inexact subsets, complement subsets, regular
//! collections), and recognizes maps between Grassmann spaces that are
//! induced by collineations, dualities, or embeddings, reconstructing the
//! inducing point map and re-verifying it against the input.

pub mod bitset;
pub mod gf;
pub mod linalg;
pub mod linspace;
pub mod projspace;
pub mod grassmann;
pub mod baseset;
pub mod chow;
pub mod gallery;
pub mod formats;
pub mod report;
