//! Exact models for the dual pair (O(3,2), SL2) and the arithmetic of
//! Siegel modular threefolds.
//!
//! The crate is organised around a handful of small symbolic engines:
//!
//! * [`exact`] — arbitrary-precision rationals, Gaussian rationals,
//!   finite-dimensional commutative Q-algebras given by multiplication
//!   tables, and exact linear algebra (kernel, rank, signature).
//! * [`weyl`] — the Weyl algebra on five variables: normal-ordered
//!   differential operators, the sl2 triples acting on polynomials, the
//!   star anti-involution on operator words, and the infinitesimal
//!   oscillator action of so(3,2) together with its commutant sl2.
//! * [`liealg`] — a matrix model of so(3,2): Cartan decomposition, roots
//!   and root vectors, theta-stable parabolics and their bidegree tables,
//!   lowest K-types.
//! * [`fock`] — K = SO(3) x SO(2) isotypic analysis of polynomial spaces,
//!   harmonics, lowest-degree spanning checks, the closed equivariant
//!   (1,1)-cochain with quadratic values, and the relative Lie algebra
//!   differential.
//! * [`plucker`] — the wedge-square/skew-matrix dictionary carrying the
//!   isogeny Sp(4) -> SO_0(3,2), the forms b and b0, the quadric of
//!   decomposable vectors and the five-variable discriminant form.
//! * [`humbert`] — singular relations, discriminants and normal forms,
//!   exact Neron-Severi ranks at exact period points, and the numeric
//!   positive 3-plane attached to a period point.
//! * [`cycles`] — lattice vector enumeration with congruence conditions,
//!   the symplectic generator action, BFS orbit partitions and frame
//!   classification.
//! * [`verify`] — the runnable acceptance checks, shared by the test
//!   suite and the command-line tool.
//!
//! Everything outside `humbert::numeric` and the positivity checks is
//! exact; floating point is only ever used where an order relation on
//! real numbers is required, and never to decide an algebraic identity.
//!
//! The crate is `no_std` (with `alloc`) so the symbolic core can be
//! embedded anywhere; IO, JSON and the CLI live in the companion crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod cycles;
pub mod exact;
pub mod fock;
pub mod humbert;
pub mod liealg;
pub mod plucker;
pub mod verify;
pub mod weyl;

pub use exact::{AlgebraElement, AlgebraSpec, GaussQ, Matrix, Rat};
