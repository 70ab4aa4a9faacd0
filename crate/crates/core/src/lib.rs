//! Power residue symbols for polynomials over finite fields and the matrices
//! they form.
//!
//! For a prime power `q`, an order `d | q - 1` and monic irreducibles
//! `P_1, ..., P_n` in `F_q[t]`, the residue matrix has `(i, j)` entry
//! `(P_i/P_j)_d`. This crate computes those symbols exactly, decides which
//! zero-diagonal matrices of `d`-th roots of unity arise this way, and builds
//! polynomials realizing any matrix that does.
//!
//! Roots of unity are written as exponents of the fixed primitive root
//! `zeta = g^((q-1)/d)`, where `g` is the field's chosen generator; no
//! floating point appears anywhere.
//!
//! Modules:
//! - [`field`]: `F_{p^m}`, element arithmetic, root indices.
//! - [`poly`]: `F_q[t]` arithmetic, irreducibility, enumeration, text form.
//! - [`symbol`]: the residue symbol, reciprocity and residue matrices.
//! - [`matrix`]: cyclotomic sign matrices and the realizability test.
//! - [`realize`]: constructive realization by CRT and irreducible search.
//! - [`verify`]: exhaustive reciprocity and homomorphism checks.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod field;
pub mod matrix;
pub mod poly;
pub mod realize;
pub mod symbol;
pub mod verify;

pub use field::{Fe, Field, FieldError, RootIndex, DEFAULT_MAX_Q};
pub use matrix::{
    classify, classify_with_law, criteria_equiv_bruteforce, BlockForm, Classification, CycMatrix,
    EquivReport, Law, MatrixError, Permutation, Verdict, Witness,
};
pub use poly::{format_poly, parse_poly, ParseError, Poly, PolyError};
pub use realize::{realize, Realization, RealizeError, RealizeOptions};
pub use symbol::{Irreducible, SymbolContext, SymbolError};
