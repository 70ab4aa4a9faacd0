//! Univariate polynomials over a [`Field`].

mod text;

pub use text::{format_poly, parse_poly, ParseError, ParseErrorKind};

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use thiserror::Error;

use crate::field::{prime_factors, Fe, Field};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("polynomial must have positive degree")]
    Constant,
    #[error("polynomial is not invertible modulo the given modulus")]
    NotInvertible,
    #[error("coefficient {0} out of range")]
    CoefficientOutOfRange(u64),
}

/// A polynomial in `F_q[t]`, coefficients indexed by power of `t`.
///
/// Always normalized: the stored leading coefficient is nonzero and the zero
/// polynomial has no coefficients.
#[derive(Clone)]
pub struct Poly {
    field: Arc<Field>,
    coeffs: Vec<Fe>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && *self.field == *other.field
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.p().hash(state);
        self.field.m().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", format_poly(self))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}

fn trim(v: &mut Vec<Fe>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl Poly {
    pub fn from_coeffs(field: &Arc<Field>, mut coeffs: Vec<Fe>) -> Poly {
        trim(&mut coeffs);
        Poly {
            field: Arc::clone(field),
            coeffs,
        }
    }

    /// Builds from serialized coefficient integers, constant first.
    pub fn from_values(field: &Arc<Field>, values: &[u64]) -> Result<Poly, PolyError> {
        let coeffs = values
            .iter()
            .map(|&v| {
                field
                    .element(v)
                    .map_err(|_| PolyError::CoefficientOutOfRange(v))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::from_coeffs(field, coeffs))
    }

    pub fn zero(field: &Arc<Field>) -> Poly {
        Poly::from_coeffs(field, Vec::new())
    }

    pub fn one(field: &Arc<Field>) -> Poly {
        Poly::constant(field, Fe::ONE)
    }

    pub fn constant(field: &Arc<Field>, c: Fe) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    /// The indeterminate `t`.
    pub fn t(field: &Arc<Field>) -> Poly {
        Poly::from_coeffs(field, vec![Fe::ZERO, Fe::ONE])
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Fe::ONE
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Fe::ONE)
    }

    pub fn leading(&self) -> Option<Fe> {
        self.coeffs.last().copied()
    }

    /// The constant term if this is a constant (or zero) polynomial.
    pub fn as_constant(&self) -> Option<Fe> {
        match self.coeffs.len() {
            0 => Some(Fe::ZERO),
            1 => Some(self.coeffs[0]),
            _ => None,
        }
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn eval(&self, x: Fe) -> Fe {
        let f = &*self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn scale(&self, c: Fe) -> Poly {
        let f = &*self.field;
        Poly::from_coeffs(
            &self.field,
            self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        )
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn same_field(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field
    }

    fn check_field(&self, other: &Poly) -> Result<(), PolyError> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(PolyError::MixedFields)
        }
    }

    fn assert_field(&self, other: &Poly) {
        assert!(self.same_field(other), "polynomials over different fields");
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_field(other)?;
        Ok(Poly::from_coeffs(
            &self.field,
            add_slices(&self.field, &self.coeffs, &other.coeffs),
        ))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_field(other)?;
        Ok(Poly::from_coeffs(
            &self.field,
            sub_slices(&self.field, &self.coeffs, &other.coeffs),
        ))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_field(other)?;
        Ok(Poly::from_coeffs(
            &self.field,
            mul_slices(&self.field, &self.coeffs, &other.coeffs),
        ))
    }

    /// Long division: `self = quotient * divisor + remainder` with
    /// `deg remainder < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.check_field(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut rem = self.coeffs.clone();
        let quot = divrem_in_place(&self.field, &mut rem, &divisor.coeffs);
        Ok((
            Poly::from_coeffs(&self.field, quot),
            Poly::from_coeffs(&self.field, rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        self.check_field(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut rem = self.coeffs.clone();
        reduce_in_place(&self.field, &mut rem, &divisor.coeffs);
        Ok(Poly::from_coeffs(&self.field, rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_field(other)?;
        let mut a = self.coeffs.clone();
        let mut b = other.coeffs.clone();
        while !b.is_empty() {
            reduce_in_place(&self.field, &mut a, &b);
            core::mem::swap(&mut a, &mut b);
        }
        Ok(Poly::from_coeffs(&self.field, a).monic())
    }

    /// Inverse of `self` modulo `modulus` by the extended Euclidean algorithm.
    pub fn inv_mod(&self, modulus: &Poly) -> Result<Poly, PolyError> {
        self.check_field(modulus)?;
        if modulus.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let field = &self.field;
        // invariant: r_i = s_i * self (mod modulus)
        let mut r0 = modulus.clone();
        let mut r1 = self.rem(modulus)?;
        let mut s0 = Poly::zero(field);
        let mut s1 = Poly::one(field);
        while !r1.is_zero() {
            let (quot, rem) = r0.divrem(&r1)?;
            let s2 = &s0 - &(&quot * &s1);
            r0 = core::mem::replace(&mut r1, rem);
            s0 = core::mem::replace(&mut s1, s2);
        }
        match r0.as_constant() {
            Some(c) if !c.is_zero() => {
                let c_inv = field.inv(c).expect("nonzero");
                s0.scale(c_inv).rem(modulus)
            }
            _ => Err(PolyError::NotInvertible),
        }
    }

    /// `self^exponent mod modulus` by square-and-multiply.
    pub fn mod_pow(&self, exponent: &BigUint, modulus: &Poly) -> Result<Poly, PolyError> {
        self.check_field(modulus)?;
        if modulus.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let field = &*self.field;
        let m = &modulus.coeffs;
        let mut base = self.coeffs.clone();
        reduce_in_place(field, &mut base, m);
        let mut acc = vec![Fe::ONE];
        reduce_in_place(field, &mut acc, m);
        for i in (0..exponent.bits()).rev() {
            acc = mul_mod_slices(field, &acc, &acc, m);
            if exponent.bit(i) {
                acc = mul_mod_slices(field, &acc, &base, m);
            }
        }
        Ok(Poly::from_coeffs(&self.field, acc))
    }

    /// `|P| = q^deg P`, the size of `F_q[t]/(P)`.
    pub fn norm(&self) -> Result<BigUint, PolyError> {
        let deg = self.degree().ok_or(PolyError::DivisionByZero)?;
        Ok(BigUint::from(self.field.q()).pow(deg as u32))
    }

    /// Rabin's deterministic test: `P` of degree `n` is irreducible iff
    /// `t^(q^n) = t (mod P)` and `gcd(t^(q^(n/l)) - t, P) = 1` for each prime
    /// `l | n`.
    pub fn is_irreducible(&self) -> Result<bool, PolyError> {
        let n = match self.degree() {
            None | Some(0) => return Err(PolyError::Constant),
            Some(n) => n,
        };
        if n == 1 {
            return Ok(true);
        }
        let t = Poly::t(&self.field).rem(self)?;
        let q = BigUint::from(self.field.q());
        // frobenius[k] = t^(q^k) mod P
        let mut frobenius = Vec::with_capacity(n + 1);
        frobenius.push(t.clone());
        for k in 1..=n {
            let next = frobenius[k - 1].mod_pow(&q, self)?;
            frobenius.push(next);
        }
        if frobenius[n] != t {
            return Ok(false);
        }
        for l in prime_factors(n as u64) {
            let x = &frobenius[n / l as usize] - &t;
            if !x.gcd(self)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        self.assert_field(rhs);
        Poly::from_coeffs(
            &self.field,
            add_slices(&self.field, &self.coeffs, &rhs.coeffs),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self.assert_field(rhs);
        Poly::from_coeffs(
            &self.field,
            sub_slices(&self.field, &self.coeffs, &rhs.coeffs),
        )
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.assert_field(rhs);
        Poly::from_coeffs(
            &self.field,
            mul_slices(&self.field, &self.coeffs, &rhs.coeffs),
        )
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        let f = &*self.field;
        Poly::from_coeffs(&self.field, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

fn add_slices(f: &Field, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = f.add(*o, s);
    }
    out
}

fn sub_slices(f: &Field, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Fe::ZERO);
    }
    for (o, &s) in out.iter_mut().zip(b) {
        *o = f.sub(*o, s);
    }
    out
}

fn mul_slices(f: &Field, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Fe::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

/// Reduces `a` modulo the nonzero `m` in place, leaving it normalized.
fn reduce_in_place(f: &Field, a: &mut Vec<Fe>, m: &[Fe]) {
    trim(a);
    let dm = m.len() - 1;
    let lc_inv = f.inv(m[dm]).expect("normalized divisor");
    while a.len() > dm {
        let top = a.len() - 1;
        let c = f.mul(a[top], lc_inv);
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            a[shift + i] = f.sub(a[shift + i], f.mul(c, mi));
        }
        trim(a);
    }
}

/// Divides `a` by `m`, leaving the remainder in `a` and returning the quotient.
fn divrem_in_place(f: &Field, a: &mut Vec<Fe>, m: &[Fe]) -> Vec<Fe> {
    trim(a);
    let dm = m.len() - 1;
    let lc_inv = f.inv(m[dm]).expect("normalized divisor");
    if a.len() <= dm {
        return Vec::new();
    }
    let mut quot = vec![Fe::ZERO; a.len() - dm];
    while a.len() > dm {
        let top = a.len() - 1;
        let c = f.mul(a[top], lc_inv);
        let shift = top - dm;
        quot[shift] = c;
        for (i, &mi) in m.iter().enumerate() {
            a[shift + i] = f.sub(a[shift + i], f.mul(c, mi));
        }
        trim(a);
    }
    quot
}

fn mul_mod_slices(f: &Field, a: &[Fe], b: &[Fe], m: &[Fe]) -> Vec<Fe> {
    let mut prod = mul_slices(f, a, b);
    reduce_in_place(f, &mut prod, m);
    prod
}

/// All monic polynomials of exactly `degree`, in lexicographic order of the
/// lower coefficient vector with the constant coefficient most significant.
pub fn monic_polys(field: &Arc<Field>, degree: usize) -> MonicPolys {
    MonicPolys {
        field: Arc::clone(field),
        digits: vec![0; degree],
        done: false,
    }
}

/// Monic irreducibles of exactly `degree`, in [`monic_polys`] order.
pub fn monic_irreducibles(field: &Arc<Field>, degree: usize) -> impl Iterator<Item = Poly> {
    monic_polys(field, degree).filter(|p| p.is_irreducible().unwrap_or(false))
}

/// Iterator returned by [`monic_polys`].
#[derive(Debug, Clone)]
pub struct MonicPolys {
    field: Arc<Field>,
    /// Current lower coefficients as serialized values, constant first.
    digits: Vec<u32>,
    done: bool,
}

impl Iterator for MonicPolys {
    type Item = Poly;

    fn next(&mut self) -> Option<Poly> {
        if self.done {
            return None;
        }
        let mut coeffs: Vec<Fe> = self
            .digits
            .iter()
            .map(|&v| self.field.element(u64::from(v)).expect("in range"))
            .collect();
        coeffs.push(Fe::ONE);
        let poly = Poly {
            field: Arc::clone(&self.field),
            coeffs,
        };

        // constant coefficient is the most significant digit, so the
        // highest lower coefficient ticks fastest
        let q = self.field.q();
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < q {
                break;
            }
            self.digits[i] = 0;
        }
        Some(poly)
    }
}

/// Every nonzero residue modulo a polynomial of degree `degree`: for each
/// `e < degree`, each monic `h` of degree `e` in [`monic_polys`] order, and
/// each nonzero scalar `c` in serialized order, yields `c * h`.
pub fn nonzero_residues(field: &Arc<Field>, degree: usize) -> impl Iterator<Item = Poly> + '_ {
    (0..degree).flat_map(move |e| {
        monic_polys(field, e).flat_map(move |h| {
            field
                .elements()
                .skip(1)
                .map(move |c| h.scale(c))
                .collect::<Vec<_>>()
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn field(p: u64, m: u32) -> Arc<Field> {
        Arc::new(Field::new(p, m).unwrap())
    }

    fn poly(f: &Arc<Field>, v: &[u64]) -> Poly {
        Poly::from_values(f, v).unwrap()
    }

    #[test]
    fn divrem_over_f3() {
        let f = field(3, 1);
        // t^2 + 1 = (t + 2)(t + 1) + 2
        let (quot, rem) = poly(&f, &[1, 0, 1]).divrem(&poly(&f, &[1, 1])).unwrap();
        assert_eq!(quot, poly(&f, &[2, 1]));
        assert_eq!(rem, poly(&f, &[2]));
        assert_eq!(
            poly(&f, &[1]).divrem(&Poly::zero(&f)),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn gcd_is_monic() {
        let f = field(5, 1);
        let g = poly(&f, &[4, 0, 1]).gcd(&poly(&f, &[4, 1])).unwrap();
        assert_eq!(g, poly(&f, &[4, 1]));
        let g = poly(&f, &[0, 3]).gcd(&poly(&f, &[0, 0, 2])).unwrap();
        assert_eq!(g, poly(&f, &[0, 1]));
        assert!(Poly::zero(&f).gcd(&Poly::zero(&f)).unwrap().is_zero());
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Poly::t(&field(3, 1));
        let b = Poly::t(&field(5, 1));
        assert_eq!(a.try_add(&b), Err(PolyError::MixedFields));
        assert_eq!(a.divrem(&b), Err(PolyError::MixedFields));
        assert_eq!(
            a.mod_pow(&BigUint::from(2u32), &b),
            Err(PolyError::MixedFields)
        );
        // separately built copies of the same field are interchangeable
        let c = Poly::t(&field(3, 1));
        assert_eq!(a.try_add(&c).unwrap(), poly(&field(3, 1), &[0, 2]));
    }

    #[test]
    fn mod_pow_zero_exponent() {
        let f = field(7, 1);
        let p = poly(&f, &[3, 1]);
        let a = poly(&f, &[2, 5, 1]);
        assert!(a.mod_pow(&BigUint::zero(), &p).unwrap().is_one());
    }

    #[test]
    fn norms() {
        assert_eq!(
            poly(&field(3, 1), &[1, 1]).norm().unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            poly(&field(5, 1), &[2, 0, 1]).norm().unwrap(),
            BigUint::from(25u32)
        );
        let f9 = field(3, 2);
        assert_eq!(
            poly(&f9, &[1, 0, 0, 1]).norm().unwrap(),
            BigUint::from(729u32)
        );
        assert!(Poly::zero(&f9).norm().is_err());
    }

    #[test]
    fn irreducibility_examples() {
        assert!(poly(&field(3, 1), &[1, 0, 1]).is_irreducible().unwrap());
        assert!(!poly(&field(5, 1), &[1, 0, 1]).is_irreducible().unwrap());
        for (p, m) in [(2, 1), (3, 1), (2, 2)] {
            let f = field(p, m);
            assert!(!poly(&f, &[0, 0, 1]).is_irreducible().unwrap());
        }
        let f = field(3, 1);
        assert_eq!(poly(&f, &[2]).is_irreducible(), Err(PolyError::Constant));
        assert_eq!(Poly::zero(&f).is_irreducible(), Err(PolyError::Constant));
    }

    #[test]
    fn enumeration_order_and_counts() {
        let f2 = field(2, 1);
        let lin: Vec<_> = monic_polys(&f2, 1).collect();
        assert_eq!(lin, vec![poly(&f2, &[0, 1]), poly(&f2, &[1, 1])]);

        // constant coefficient most significant
        let quad: Vec<_> = monic_polys(&f2, 2).collect();
        assert_eq!(
            quad,
            vec![
                poly(&f2, &[0, 0, 1]),
                poly(&f2, &[0, 1, 1]),
                poly(&f2, &[1, 0, 1]),
                poly(&f2, &[1, 1, 1]),
            ]
        );

        let f3 = field(3, 1);
        assert_eq!(monic_polys(&f3, 2).count(), 9);
        assert_eq!(
            monic_polys(&f3, 0).collect::<Vec<_>>(),
            vec![Poly::one(&f3)]
        );
        assert_eq!(monic_irreducibles(&f3, 1).count(), 3);
    }

    #[test]
    fn inverse_mod() {
        let f = field(5, 1);
        let m = poly(&f, &[2, 0, 1]);
        for a in nonzero_residues(&f, 2) {
            let inv = a.inv_mod(&m).unwrap();
            assert!((&a * &inv).rem(&m).unwrap().is_one());
        }
        let t = Poly::t(&f);
        assert_eq!(
            t.inv_mod(&poly(&f, &[0, 0, 1])),
            Err(PolyError::NotInvertible)
        );
    }

    #[test]
    fn nonzero_residue_order() {
        let f = field(3, 1);
        let r: Vec<_> = nonzero_residues(&f, 2).collect();
        assert_eq!(r.len(), 8);
        assert_eq!(r[0], poly(&f, &[1]));
        assert_eq!(r[1], poly(&f, &[2]));
        assert_eq!(r[2], poly(&f, &[0, 1]));
        assert_eq!(r[3], poly(&f, &[0, 2]));
    }
}
