//! Exact arithmetic for constant Clifford-valued differential forms.
//!
//! The algebra is the (ungraded) tensor product of two Clifford algebras on
//! the generators `{t, 1, 2, 3}`: a cotangent factor spanned by the
//! differentials `dt, dx^1, dx^2, dx^3` and a tangent factor spanned by the
//! frame vectors `a_0, a_1, a_2, a_3`. Diagonal products such as
//! `dx^l a_l` ("bold" elements) generate a 16-dimensional commutative
//! subalgebra that houses the idempotents `ε^±`, `I_ij^±` and `P_l^±`.
//!
//! On top of the multivector arithmetic the crate provides
//!
//! * the two-sided spin operators `J_l` and the total operator `K+1`
//!   ([`operators`]),
//! * constructors, normal forms and enumeration of the idempotent families
//!   ([`idempotents`]),
//! * an exact rational solver for inhomogeneous proper-value equations
//!   `[(K+1) dr + 4μ] x = π` ([`propersolve`]),
//! * a regression harness that re-derives the published identities and
//!   tables from first principles ([`verify`]).
//!
//! Every coefficient is an arbitrary precision rational. The crate is
//! `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod blade;
pub mod elements;
pub mod fixtures;
pub mod idempotents;
pub mod linalg;
pub mod multivector;
pub mod operators;
pub mod propersolve;
pub mod rational;
pub mod verify;

pub use blade::{blade_mul, Axis, Blade, Generator, GeneratorSet, Sign, Signature};
pub use multivector::Multivector;
pub use operators::{apply_j, apply_k1, AffineRational, OperatorExpr};
pub use rational::Rational;
