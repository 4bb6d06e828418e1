//! Exact computation of the Kauffman bracket and Jones polynomial of framed
//! links, by two independent routes:
//!
//! * [`skein`], the combinatorial state sum over crossing smoothings,
//! * [`functor`], evaluation of the diagram as a morphism in the ribbon
//!   category of `U_q(sl2)` representations.
//!
//! Both engines work over the ring `Z[q^(1/4), q^(-1/4)]` ([`laurent`]), so
//! every comparison in this crate is exact. Diagrams are sliced (Morse
//! position) tangle diagrams built from elementary pieces ([`tangle`]).
//! The representation-theoretic side lives in [`qrep`]; [`halftwist`] adds
//! the half-twist operators and the braiding factorization through them.

pub mod functor;
pub mod halftwist;
pub mod laurent;
pub mod mat;
pub mod qrep;
pub mod skein;
pub mod tangle;

pub use laurent::{Gauss, Laurent, LaurentQ, LaurentQi};
pub use tangle::{Orientation, Piece, SlicedDiagram};
