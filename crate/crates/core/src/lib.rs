//! Exact computer algebra for the free Lie algebra `L_n`, the free metabelian Lie
//! algebra `F_n` and its nilpotent quotients `L_{n,c}` over the rationals.
//!
//! The crate provides
//! * normal forms in the Bahturin basis of the metabelian commutator ideal
//!   ([`metabelian`]),
//! * the free Lie algebra inside the free associative algebra with a Lyndon basis
//!   ([`free_lie`]), which also serves as an independent check of the normal forms,
//! * the action of the symmetric group and invariant subspaces ([`symmetry`]),
//! * endomorphisms and the inner and symmetric automorphism families
//!   ([`automorphism`]),
//! * randomized and exhaustive checkers for the structure of automorphism groups of
//!   the algebras of symmetric elements ([`verify`]).

pub mod automorphism;
pub mod element;
pub mod error;
pub mod free_lie;
pub mod linalg;
pub mod metabelian;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod sampling;
pub mod spec;
pub mod symmetry;
pub mod verify;

pub use automorphism::{inner_eps, inner_psi, linear_xi, phi_f, preserves_symmetric, Endomorphism, LinearXi};
pub use element::{Element, LieElement};
pub use error::{Error, Result};
pub use free_lie::{dynkin_bracket, free_bracket, lyndon_decompose, lyndon_words, project_metabelian, FreeLieElement, LyndonWord, NCWord};
pub use metabelian::{normalize_monomial, BahturinMonomial, MetabelianElement};
pub use perm::Permutation;
pub use poly::{CommPoly, ExponentVector};
pub use rational::Rational;
pub use spec::{AlgebraSpec, Variety};
pub use symmetry::{act, is_symmetric, reynolds, symmetric_basis, SymmetricWitness};
pub use verify::{Status, VerificationReport};
