//! The `d`-th power residue symbol over `F_q[t]`.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::field::{Field, FieldError, RootIndex};
use crate::matrix::{CycMatrix, Law};
use crate::poly::{Poly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("{d} does not divide q - 1 = {}", q - 1)]
    DoesNotDivide { d: u32, q: u32 },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus is not irreducible")]
    NotIrreducible,
    #[error("modulus must have positive degree")]
    Constant,
    #[error("symbol undefined: a divisible by P")]
    Undefined,
    #[error("duplicate polynomial at positions {0} and {1}")]
    Duplicate(usize, usize),
    #[error("power residue {0} is not a constant root of unity")]
    NotRootOfUnity(Poly),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A monic irreducible polynomial of positive degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Irreducible(Poly);

impl Irreducible {
    pub fn new(poly: Poly) -> Result<Self, SymbolError> {
        if poly.degree().unwrap_or(0) == 0 {
            return Err(SymbolError::Constant);
        }
        if !poly.is_monic() {
            return Err(SymbolError::NotMonic);
        }
        if !poly.is_irreducible()? {
            return Err(SymbolError::NotIrreducible);
        }
        Ok(Irreducible(poly))
    }

    /// Skips the irreducibility test; callers vouch for it.
    pub(crate) fn new_unchecked(poly: Poly) -> Self {
        debug_assert!(poly.is_monic() && poly.is_irreducible() == Ok(true));
        Irreducible(poly)
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree().expect("positive degree")
    }
}

impl fmt::Debug for Irreducible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Irreducible({})", self.0)
    }
}

impl fmt::Display for Irreducible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl AsRef<Poly> for Irreducible {
    fn as_ref(&self) -> &Poly {
        &self.0
    }
}

/// A field together with an order `d | q - 1` of roots of unity.
#[derive(Debug, Clone)]
pub struct SymbolContext {
    field: Arc<Field>,
    d: u32,
    law: Law,
}

impl SymbolContext {
    pub fn new(field: Arc<Field>, d: u32) -> Result<Self, SymbolError> {
        let q = field.q();
        let law = Law::for_field(q, d).map_err(|_| SymbolError::DoesNotDivide { d, q })?;
        Ok(SymbolContext { field, d, law })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    /// Which reciprocity law holds for this `(q, d)`.
    pub fn law(&self) -> Law {
        self.law
    }

    /// `(a/P)_d` as an exponent of `zeta`: the unique root of unity congruent
    /// to `a^((|P| - 1)/d)` modulo `P`.
    pub fn symbol(&self, a: &Poly, p: &Irreducible) -> Result<RootIndex, SymbolError> {
        let p = p.poly();
        let reduced = a.rem(p)?;
        if reduced.is_zero() {
            return Err(SymbolError::Undefined);
        }
        let exponent = (p.norm()? - 1u32) / self.d;
        let r = reduced.mod_pow(&exponent, p)?;
        let value = r
            .as_constant()
            .ok_or_else(|| SymbolError::NotRootOfUnity(r.clone()))?;
        self.field
            .root_index_of(self.d, value)
            .map_err(|e| match e {
                FieldError::NotRootOfUnity { .. } => SymbolError::NotRootOfUnity(r),
                _ => unreachable!("d was validated"),
            })
    }

    /// Like [`SymbolContext::symbol`], validating `p` first.
    pub fn symbol_checked(&self, a: &Poly, p: &Poly) -> Result<RootIndex, SymbolError> {
        let p = Irreducible::new(p.clone())?;
        self.symbol(a, &p)
    }

    /// Index of `phi((-1)^((q-1) deg P deg Q / d))`, the factor relating
    /// `(P/Q)_d` to `(Q/P)_d`. In characteristic 2 the field's `-1` is `1`.
    pub fn reciprocity_index(&self, deg_p: usize, deg_q: usize) -> RootIndex {
        let odd = ((self.q() - 1) / self.d) % 2 == 1 && deg_p % 2 == 1 && deg_q % 2 == 1;
        if odd && !self.field.characteristic_two() {
            RootIndex::new(self.d / 2, self.d).expect("d/2 < d")
        } else {
            RootIndex::identity(self.d)
        }
    }

    /// The matrix with `(i, j)` entry `(P_i/P_j)_d` off the diagonal.
    pub fn residue_matrix(&self, polys: &[Irreducible]) -> Result<CycMatrix, SymbolError> {
        for i in 0..polys.len() {
            for j in i + 1..polys.len() {
                if polys[i] == polys[j] {
                    return Err(SymbolError::Duplicate(i, j));
                }
            }
        }
        let n = polys.len();
        let mut entries = Vec::with_capacity(n * n);
        for pi in polys {
            for pj in polys {
                if pi == pj {
                    entries.push(None);
                } else {
                    entries.push(Some(self.symbol(pi.poly(), pj)?.k()));
                }
            }
        }
        Ok(CycMatrix::from_entries(n, self.d, &entries).expect("well-formed by construction"))
    }

    /// `(|P| - 1) / d`, the exponent in the defining congruence.
    pub fn exponent(&self, p: &Irreducible) -> BigUint {
        (p.poly().norm().expect("nonzero") - 1u32) / self.d
    }
}
