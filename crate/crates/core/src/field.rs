//! Finite fields `F_q = F_p[x]/(f)` with a fixed multiplicative generator.
//!
//! Elements are stored as their serialized integer: the coefficient vector
//! read as base-`p` digits, constant coefficient least significant. Prime
//! fields use the plain residue. Multiplication goes through exp/log tables
//! built from the generator at construction time, which also gives the
//! discrete logarithms needed to map `d`-th roots of unity to indices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::poly::monic_polys;

/// Default upper bound on the field size.
pub const DEFAULT_MAX_Q: u64 = 1 << 20;

/// Hard ceiling regardless of configuration; tables are `u32`-indexed.
const ABSOLUTE_MAX_Q: u64 = 1 << 28;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {p}^{m} exceeds the configured bound {bound}")]
    TooLarge { p: u64, m: u32, bound: u64 },
    #[error("element {value} out of range for a field of size {q}")]
    OutOfRange { value: u64, q: u32 },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("{d} does not divide q - 1 = {}", q - 1)]
    DoesNotDivide { d: u32, q: u32 },
    #[error("element is not a {d}-th root of unity")]
    NotRootOfUnity { d: u32 },
    #[error("root index {k} out of range for d = {d}")]
    IndexOutOfRange { k: u32, d: u32 },
}

/// An element of some [`Field`], held as its serialized integer in `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// The serialized integer form.
    #[inline]
    pub const fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A `d`-th root of unity, written as the exponent `k` of the fixed primitive
/// root `zeta = g^((q-1)/d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootIndex {
    k: u32,
    d: u32,
}

impl RootIndex {
    pub fn new(k: u32, d: u32) -> Result<Self, FieldError> {
        if d == 0 || k >= d {
            return Err(FieldError::IndexOutOfRange { k, d });
        }
        Ok(RootIndex { k, d })
    }

    /// Reduces an arbitrary integer exponent mod `d`.
    pub fn wrapping(k: i64, d: u32) -> Self {
        assert!(d > 0, "d must be positive");
        RootIndex {
            k: k.rem_euclid(i64::from(d)) as u32,
            d,
        }
    }

    pub const fn identity(d: u32) -> Self {
        RootIndex { k: 0, d }
    }

    #[inline]
    pub const fn k(self) -> u32 {
        self.k
    }

    #[inline]
    pub const fn d(self) -> u32 {
        self.d
    }
}

/// Product of roots of unity.
impl core::ops::Add for RootIndex {
    type Output = RootIndex;

    fn add(self, other: RootIndex) -> RootIndex {
        assert_eq!(self.d, other.d, "root indices for different d");
        RootIndex {
            k: ((u64::from(self.k) + u64::from(other.k)) % u64::from(self.d)) as u32,
            d: self.d,
        }
    }
}

/// Inverse, which is also the complex conjugate.
impl core::ops::Neg for RootIndex {
    type Output = RootIndex;

    fn neg(self) -> RootIndex {
        RootIndex {
            k: (self.d - self.k) % self.d,
            d: self.d,
        }
    }
}

impl core::ops::Sub for RootIndex {
    type Output = RootIndex;

    fn sub(self, other: RootIndex) -> RootIndex {
        self + -other
    }
}

impl fmt::Display for RootIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.k)
    }
}

/// The field `F_q`, `q = p^m`.
///
/// Immutable after construction. Two fields with equal `(p, m)` are
/// identical because construction is deterministic.
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus over `F_p`, constant coefficient first, length `m + 1`.
    modulus: Vec<u32>,
    generator: Fe,
    /// `exp[i] = g^i` for `0 <= i < q - 1`.
    exp: Vec<u32>,
    /// `log[g^i] = i`; `log[0]` is unused.
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m
    }
}

impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// Builds `F_{p^m}` with the default size bound.
    pub fn new(p: u64, m: u32) -> Result<Field, FieldError> {
        Self::with_bound(p, m, DEFAULT_MAX_Q)
    }

    /// Builds `F_{p^m}`, refusing fields larger than `max_q`.
    ///
    /// The modulus is the first monic irreducible of degree `m` over `F_p` in
    /// [`monic_polys`] order, and the generator is the smallest serialized
    /// integer of multiplicative order `q - 1`.
    pub fn with_bound(p: u64, m: u32, max_q: u64) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let bound = max_q.min(ABSOLUTE_MAX_Q);
        let too_large = FieldError::TooLarge { p, m, bound: max_q };
        let mut q: u64 = 1;
        for _ in 0..m {
            q = q.checked_mul(p).ok_or(too_large.clone())?;
            if q > bound {
                return Err(too_large);
            }
        }
        let p = p as u32;
        let q = q as u32;

        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            let base = alloc::sync::Arc::new(Field::with_bound(u64::from(p), 1, u64::from(p))?);
            let found = monic_polys(&base, m as usize)
                .find(|f| f.is_irreducible().unwrap_or(false))
                .expect("an irreducible of every degree exists");
            found.coeffs().iter().map(|c| c.value()).collect()
        };

        let mut field = Field {
            p,
            m,
            q,
            modulus,
            generator: Fe::ONE,
            exp: Vec::new(),
            log: Vec::new(),
        };

        let order = u64::from(q - 1);
        let cofactors: Vec<u64> = prime_factors(order)
            .into_iter()
            .map(|l| order / l)
            .collect();
        let generator = (1..q)
            .map(Fe)
            .find(|&c| cofactors.iter().all(|&e| field.slow_pow(c, e) != Fe::ONE))
            .expect("the multiplicative group of a finite field is cyclic");
        field.generator = generator;

        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = Fe::ONE;
        for i in 0..q - 1 {
            exp.push(x.0);
            log[x.0 as usize] = i;
            x = field.slow_mul(x, generator);
        }
        debug_assert_eq!(x, Fe::ONE);
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn characteristic_two(&self) -> bool {
        self.p == 2
    }

    /// Modulus coefficients over `F_p`, constant first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> Fe {
        self.generator
    }

    pub fn element(&self, value: u64) -> Result<Fe, FieldError> {
        if value >= u64::from(self.q) {
            return Err(FieldError::OutOfRange { value, q: self.q });
        }
        Ok(Fe(value as u32))
    }

    /// Element with the given base-`p` digits, constant first. Missing high
    /// digits are zero.
    pub fn from_digits(&self, digits: &[u32]) -> Result<Fe, FieldError> {
        if digits.len() > self.m as usize {
            return Err(FieldError::OutOfRange {
                value: u64::MAX,
                q: self.q,
            });
        }
        let mut v: u64 = 0;
        for &c in digits.iter().rev() {
            if c >= self.p {
                return Err(FieldError::OutOfRange {
                    value: u64::from(c),
                    q: self.p,
                });
            }
            v = v * u64::from(self.p) + u64::from(c);
        }
        Ok(Fe(v as u32))
    }

    /// Base-`p` digits of `a`, constant first, always `m` long.
    pub fn digits(&self, a: Fe) -> Vec<u32> {
        let mut v = a.0;
        (0..self.m)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    /// Iterates all elements in serialized order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.q).map(Fe)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if self.m == 1 {
            let s = a.0 + b.0;
            return Fe(if s >= self.p { s - self.p } else { s });
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        while x != 0 || y != 0 {
            let s = (x % self.p + y % self.p) % self.p;
            out += s * place;
            place = place.wrapping_mul(self.p);
            x /= self.p;
            y /= self.p;
        }
        Fe(out)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if self.m == 1 {
            return Fe(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        let mut x = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        while x != 0 {
            let c = x % self.p;
            out += ((self.p - c) % self.p) * place;
            place = place.wrapping_mul(self.p);
            x /= self.p;
        }
        Fe(out)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let order = self.q - 1;
        let e = (u64::from(self.log[a.0 as usize]) + u64::from(self.log[b.0 as usize]))
            % u64::from(order);
        Fe(self.exp[e as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let order = self.q - 1;
        let l = self.log[a.0 as usize];
        Ok(Fe(self.exp[((order - l) % order) as usize]))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let order = u64::from(self.q - 1);
        let l = u64::from(self.log[a.0 as usize]);
        let idx = ((u128::from(l) * u128::from(e % order)) % u128::from(order)) as usize;
        Fe(self.exp[idx])
    }

    /// Discrete logarithm to base `g`; `None` for zero.
    pub fn log(&self, a: Fe) -> Option<u32> {
        (a.0 != 0).then(|| self.log[a.0 as usize])
    }

    /// The fixed primitive `d`-th root of unity `g^((q-1)/d)`.
    pub fn zeta(&self, d: u32) -> Result<Fe, FieldError> {
        let step = self.root_step(d)?;
        Ok(Fe(self.exp[step as usize]))
    }

    fn root_step(&self, d: u32) -> Result<u32, FieldError> {
        if d == 0 || !(self.q - 1).is_multiple_of(d) {
            return Err(FieldError::DoesNotDivide { d, q: self.q });
        }
        Ok((self.q - 1) / d)
    }

    /// The unique `k` with `x = zeta^k`.
    pub fn root_index_of(&self, d: u32, x: Fe) -> Result<RootIndex, FieldError> {
        let step = self.root_step(d)?;
        let l = self.log(x).ok_or(FieldError::NotRootOfUnity { d })?;
        if l % step != 0 {
            return Err(FieldError::NotRootOfUnity { d });
        }
        Ok(RootIndex { k: l / step, d })
    }

    /// `zeta^k`; inverse of [`Field::root_index_of`].
    pub fn index_to_element(&self, d: u32, k: u32) -> Result<Fe, FieldError> {
        let step = self.root_step(d)?;
        if k >= d {
            return Err(FieldError::IndexOutOfRange { k, d });
        }
        Ok(Fe(self.exp[(k * step) as usize]))
    }

    /// Schoolbook multiplication on digit vectors reduced by the modulus;
    /// used only while the tables are being built.
    fn slow_mul(&self, a: Fe, b: Fe) -> Fe {
        let p = u64::from(self.p);
        let m = self.m as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u64::from(x) * u64::from(y)) % p;
            }
        }
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &f) in self.modulus[..m].iter().enumerate() {
                let idx = top - m + i;
                prod[idx] = (prod[idx] + c * (p - u64::from(f))) % p;
            }
        }
        // m == 1 uses the modulus t, which maps t to zero
        let digits: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
        self.from_digits(&digits).expect("reduced digits")
    }

    fn slow_pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }
}
