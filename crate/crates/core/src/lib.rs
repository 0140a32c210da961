//! Exact Kazhdan-Lusztig polynomials of thagomizer matroids.
//!
//! The thagomizer matroid `M_n` is the graphic matroid of `K_{2,n}` with an
//! extra edge joining the two hubs. Its Kazhdan-Lusztig polynomial `P_n(t)`
//! is computed here by several independent routes that are checked against
//! each other:
//!
//! * [`thagkl`]: the flat-type recursion and the generating function `u F(t,u)`;
//! * [`dyck`]: Dyck paths counted by long ascents (enumeration, DP, closed form);
//! * [`flats`]: the defining recursion run over an explicit lattice of flats;
//! * [`eqkl`]: the `S_n`-equivariant refinement in the Schur basis, plus the
//!   conjectured closed form for it.
//!
//! All arithmetic is exact. The `parallel` feature (on by default) runs the
//! data-parallel loops on rayon; without it the same code runs sequentially.

pub mod dyck;
pub mod eqkl;
pub mod error;
pub mod exactpoly;
pub mod flats;
pub mod par;
pub mod symmfn;
pub mod thagkl;

pub use error::{Error, Result};
pub use exactpoly::{IntPoly, PolySeries};
pub use symmfn::{Partition, SchurPoly};
