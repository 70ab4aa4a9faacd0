//! Cyclotomic sign matrices and the realizability criteria for residue
//! matrices.
//!
//! Entries are exponents of a fixed primitive `d`-th root of unity, so
//! `m_jk * conj(m_kj)` is the root with index `m_jk - m_kj`, and "equal up to
//! sign" means the indices differ by `0` or `d/2`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::field::RootIndex;

/// Default cap on the number of matrices scanned by
/// [`criteria_equiv_bruteforce`].
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("{d} does not divide q - 1 = {}", q - 1)]
    DoesNotDivide { d: u32, q: u32 },
    #[error("d must be positive")]
    ZeroOrder,
    #[error("expected {expected} entries, found {found}")]
    WrongShape { expected: usize, found: usize },
    #[error("diagonal entry ({0}, {0}) must be zero")]
    NonZeroDiagonal(usize),
    #[error("off-diagonal entry ({0}, {1}) must be a root of unity")]
    MissingEntry(usize, usize),
    #[error("entry ({i}, {j}) = {k} out of range for d = {d}")]
    EntryOutOfRange { i: usize, j: usize, k: u32, d: u32 },
    #[error("epsilon is undefined on the diagonal")]
    Diagonal,
    #[error("entries ({0}, {1}) and ({1}, {0}) are not equal up to sign")]
    Incompatible(usize, usize),
    #[error("not a permutation of 0..{0}")]
    BadPermutation(usize),
    #[error("permutation has length {found}, matrix has size {expected}")]
    PermutationSize { expected: usize, found: usize },
    #[error("partition size {s} outside 1..={n}")]
    BadPartition { s: usize, n: usize },
    #[error("scale factor {c} is not a unit mod {d}")]
    NotUnit { c: u32, d: u32 },
    #[error("enumeration of {count} matrices exceeds bound {bound}")]
    BoundExceeded { count: u128, bound: u64 },
}

/// The shape of reciprocity for a given `(q, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    /// `(P/Q) = (Q/P)` always: `(q-1)/d` even, or characteristic 2.
    Symmetric,
    /// `(P/Q) = -(Q/P)` exactly when both degrees are odd.
    Odd,
}

impl Law {
    pub fn for_field(q: u32, d: u32) -> Result<Law, MatrixError> {
        if d == 0 || q < 2 || !(q - 1).is_multiple_of(d) {
            return Err(MatrixError::DoesNotDivide { d, q });
        }
        if q.is_multiple_of(2) || ((q - 1) / d).is_multiple_of(2) {
            Ok(Law::Symmetric)
        } else {
            Ok(Law::Odd)
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Law::Symmetric => "SymmetricLaw",
            Law::Odd => "OddLaw",
        }
    }
}

/// An `n x n` matrix with zero diagonal and `d`-th roots of unity elsewhere,
/// stored as root indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycMatrix {
    n: usize,
    d: u32,
    /// Row-major; diagonal slots hold 0 and are never read.
    idx: Vec<u32>,
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycMatrix(n = {}, d = {})", self.n, self.d)?;
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(" ")?;
                }
                match self.get(i, j) {
                    None => f.write_str(".")?,
                    Some(k) => write!(f, "{k}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl CycMatrix {
    /// Builds from row-major entries, `None` exactly on the diagonal.
    pub fn from_entries(n: usize, d: u32, entries: &[Option<u32>]) -> Result<Self, MatrixError> {
        if d == 0 {
            return Err(MatrixError::ZeroOrder);
        }
        if entries.len() != n * n {
            return Err(MatrixError::WrongShape {
                expected: n * n,
                found: entries.len(),
            });
        }
        let mut idx = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                match (i == j, entries[i * n + j]) {
                    (true, None) => {}
                    (true, Some(_)) => return Err(MatrixError::NonZeroDiagonal(i)),
                    (false, None) => return Err(MatrixError::MissingEntry(i, j)),
                    (false, Some(k)) if k >= d => {
                        return Err(MatrixError::EntryOutOfRange { i, j, k, d })
                    }
                    (false, Some(k)) => idx[i * n + j] = k,
                }
            }
        }
        Ok(CycMatrix { n, d, idx })
    }

    /// Builds from a function on off-diagonal positions; values are taken mod `d`.
    pub fn from_fn(n: usize, d: u32, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        assert!(d > 0, "d must be positive");
        let mut idx = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    idx[i * n + j] = f(i, j) % d;
                }
            }
        }
        CycMatrix { n, d, idx }
    }

    /// The matrix with all off-diagonal entries equal to 1.
    pub fn ones(n: usize, d: u32) -> Self {
        Self::from_fn(n, d, |_, _| 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Root index at `(i, j)`, `None` on the diagonal.
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        assert!(i < self.n && j < self.n, "index out of bounds");
        (i != j).then(|| self.idx[i * self.n + j])
    }

    pub fn root(&self, i: usize, j: usize) -> Option<RootIndex> {
        self.get(i, j)
            .map(|k| RootIndex::new(k, self.d).expect("entries are reduced"))
    }

    fn at(&self, i: usize, j: usize) -> u32 {
        self.idx[i * self.n + j]
    }

    /// Row-major entries, `None` on the diagonal.
    pub fn entries(&self) -> Vec<Option<u32>> {
        (0..self.n * self.n)
            .map(|x| self.get(x / self.n, x % self.n))
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetric_pair().is_none()
    }

    fn first_asymmetric_pair(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .find(|&(i, j)| self.at(i, j) != self.at(j, i))
    }

    /// `m_jk * conj(m_kj)` classified as `+1`, `-1`, or neither.
    pub fn epsilon(&self, j: usize, k: usize) -> Result<Epsilon, MatrixError> {
        if j == k {
            return Err(MatrixError::Diagonal);
        }
        let diff = (self.at(j, k) + self.d - self.at(k, j)) % self.d;
        Ok(if diff == 0 {
            Epsilon::Plus
        } else if self.d.is_multiple_of(2) && diff == self.d / 2 {
            Epsilon::Minus
        } else {
            Epsilon::Incompatible
        })
    }

    /// Diagonal of `M * conj(M)`: `D_j = sum over k != j of epsilon(j, k)`.
    pub fn mmbar_diagonal(&self) -> Result<Vec<i64>, MatrixError> {
        let mut diag = vec![0i64; self.n];
        for (j, dj) in diag.iter_mut().enumerate() {
            for k in 0..self.n {
                if j == k {
                    continue;
                }
                *dj += match self.epsilon(j, k)? {
                    Epsilon::Plus => 1,
                    Epsilon::Minus => -1,
                    Epsilon::Incompatible => {
                        let (a, b) = if j < k { (j, k) } else { (k, j) };
                        return Err(MatrixError::Incompatible(a, b));
                    }
                };
            }
        }
        Ok(diag)
    }

    /// `M'(i, j) = M(sigma(i), sigma(j))`.
    pub fn conjugate(&self, sigma: &Permutation) -> Result<CycMatrix, MatrixError> {
        self.check_perm(sigma)?;
        let s = sigma.as_slice();
        Ok(CycMatrix::from_fn(self.n, self.d, |i, j| {
            self.at(s[i], s[j])
        }))
    }

    /// Replaces every index `k` by `c * k mod d`, i.e. changes the fixed
    /// identification of roots of unity.
    pub fn scale_indices(&self, c: u32) -> Result<CycMatrix, MatrixError> {
        if gcd(u64::from(c), u64::from(self.d)) != 1 {
            return Err(MatrixError::NotUnit { c, d: self.d });
        }
        let d = u64::from(self.d);
        let c = u64::from(c) % d;
        Ok(CycMatrix::from_fn(self.n, self.d, |i, j| {
            ((u64::from(self.at(i, j)) * c) % d) as u32
        }))
    }

    /// Whether `M` conjugated by `sigma` has the form `[[A, B], [B^t, S]]`
    /// with `A` an `s x s` skew-symmetric block and `S` symmetric.
    pub fn check_block_form(&self, s: usize, sigma: &Permutation) -> Result<bool, MatrixError> {
        self.check_perm(sigma)?;
        if s == 0 || s > self.n {
            return Err(MatrixError::BadPartition { s, n: self.n });
        }
        let sg = sigma.as_slice();
        let skew = |i: usize, j: usize| {
            self.d.is_multiple_of(2)
                && (self.at(sg[i], sg[j]) + self.d - self.at(sg[j], sg[i])) % self.d == self.d / 2
        };
        let sym = |i: usize, j: usize| self.at(sg[i], sg[j]) == self.at(sg[j], sg[i]);
        let a_ok = (0..s).all(|i| (i + 1..s).all(|j| skew(i, j)));
        // B is free but the lower-left block is its transpose, so every
        // entry pairing the two blocks is symmetric, as is S
        let rest_ok = (0..self.n).all(|i| (s.max(i + 1)..self.n).all(|j| sym(i, j)));
        Ok(a_ok && rest_ok)
    }

    fn check_perm(&self, sigma: &Permutation) -> Result<(), MatrixError> {
        if sigma.len() != self.n {
            return Err(MatrixError::PermutationSize {
                expected: self.n,
                found: sigma.len(),
            });
        }
        Ok(())
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Epsilon {
    Plus,
    Minus,
    Incompatible,
}

/// A permutation of `0..n`, stored as the image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, MatrixError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || core::mem::replace(&mut seen[x], true) {
                return Err(MatrixError::BadPermutation(n));
            }
        }
        Ok(Permutation(images))
    }

    /// From 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Self, MatrixError> {
        let zero_based = images
            .iter()
            .map(|&x| {
                x.checked_sub(1)
                    .ok_or(MatrixError::BadPermutation(images.len()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(zero_based)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((0..n).collect()),
        }
    }
}

/// Iterator returned by [`Permutation::all`].
#[derive(Debug, Clone)]
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut a = current.clone();
        if let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) {
            let j = (i..a.len())
                .rev()
                .find(|&j| a[j] > a[i - 1])
                .expect("exists");
            a.swap(i - 1, j);
            a[i..].reverse();
            self.next = Some(a);
        }
        Some(Permutation(current))
    }
}

/// Why a matrix is not a residue matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `m_ij != m_ji` under the symmetric law.
    AsymmetricPair(usize, usize),
    /// `m_ij` and `m_ji` are not equal up to sign.
    IncompatiblePair(usize, usize),
    /// The diagonal of `M * conj(M)` has no admissible shape.
    Diagonal(Vec<i64>),
}

/// Partition data for a realizable matrix under the odd law: after
/// conjugating by `sigma`, the first `s` rows form the skew block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockForm {
    pub s: usize,
    pub sigma: Permutation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `block` is `Some` exactly under [`Law::Odd`].
    Realizable {
        block: Option<BlockForm>,
    },
    NotRealizable {
        witness: Witness,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub law: Law,
    pub verdict: Verdict,
}

impl Classification {
    pub fn is_realizable(&self) -> bool {
        matches!(self.verdict, Verdict::Realizable { .. })
    }

    pub fn block(&self) -> Option<&BlockForm> {
        match &self.verdict {
            Verdict::Realizable { block } => block.as_ref(),
            Verdict::NotRealizable { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Verdict::NotRealizable { witness } => Some(witness),
            Verdict::Realizable { .. } => None,
        }
    }
}

/// Decides whether `m` is the residue matrix of some distinct monic
/// irreducibles over `F_q`.
pub fn classify(m: &CycMatrix, q: u32) -> Result<Classification, MatrixError> {
    let law = Law::for_field(q, m.d())?;
    Ok(classify_with_law(m, law))
}

/// [`classify`] with the reciprocity law given directly.
pub fn classify_with_law(m: &CycMatrix, law: Law) -> Classification {
    let verdict = match law {
        Law::Symmetric => match m.first_asymmetric_pair() {
            None => Verdict::Realizable { block: None },
            Some((i, j)) => Verdict::NotRealizable {
                witness: Witness::AsymmetricPair(i, j),
            },
        },
        Law::Odd => classify_odd(m),
    };
    Classification { law, verdict }
}

fn classify_odd(m: &CycMatrix) -> Verdict {
    let n = m.n();
    let diag = match m.mmbar_diagonal() {
        Ok(diag) => diag,
        Err(MatrixError::Incompatible(i, j)) => {
            return Verdict::NotRealizable {
                witness: Witness::IncompatiblePair(i, j),
            }
        }
        Err(e) => unreachable!("{e}"),
    };
    let full = n as i64 - 1;
    let mut sorted = diag.clone();
    sorted.sort_unstable();
    let found = (1..=n).find(|&s| {
        let low = n as i64 + 1 - 2 * s as i64;
        let mut expected: Vec<i64> = core::iter::repeat_n(low, s)
            .chain(core::iter::repeat_n(full, n - s))
            .collect();
        expected.sort_unstable();
        expected == sorted
    });
    let Some(s) = found else {
        return Verdict::NotRealizable {
            witness: Witness::Diagonal(diag),
        };
    };
    let sigma = if s == 1 {
        Permutation::identity(n)
    } else {
        let (odd, even): (Vec<usize>, Vec<usize>) = (0..n).partition(|&j| diag[j] != full);
        Permutation::new(odd.into_iter().chain(even).collect()).expect("partition of 0..n")
    };
    debug_assert_eq!(m.check_block_form(s, &sigma), Ok(true));
    Verdict::Realizable {
        block: Some(BlockForm { s, sigma }),
    }
}

/// Result of comparing the block-form criterion with the `M * conj(M)`
/// criterion over every matrix of a given size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivReport {
    pub n: usize,
    pub d: u32,
    pub scanned: u64,
    /// Matrices satisfying the block-form condition.
    pub block_form: u64,
    /// Matrices accepted by the `M * conj(M)` test.
    pub mmbar: u64,
    pub mismatches: u64,
    pub first_mismatch: Option<CycMatrix>,
}

impl EquivReport {
    pub fn agrees(&self) -> bool {
        self.mismatches == 0 && self.block_form == self.mmbar
    }
}

/// Block-form condition by direct search over every permutation and every
/// partition size.
pub fn has_block_form(m: &CycMatrix) -> bool {
    let n = m.n();
    Permutation::all(n)
        .any(|sigma| (1..=n).any(|s| m.check_block_form(s, &sigma).expect("sizes match")))
}

/// Enumerates every `n x n` matrix over indices mod `d` and checks that the
/// block-form condition and the odd-law classification accept the same set.
pub fn criteria_equiv_bruteforce(n: usize, d: u32, bound: u64) -> Result<EquivReport, MatrixError> {
    if d == 0 {
        return Err(MatrixError::ZeroOrder);
    }
    let slots = n * n.saturating_sub(1);
    let count = (0..slots).try_fold(1u128, |acc, _| acc.checked_mul(u128::from(d)));
    let count = match count {
        Some(c) if c <= u128::from(bound) => c as u64,
        Some(c) => return Err(MatrixError::BoundExceeded { count: c, bound }),
        None => {
            return Err(MatrixError::BoundExceeded {
                count: u128::MAX,
                bound,
            })
        }
    };
    let mut report = EquivReport {
        n,
        d,
        scanned: 0,
        block_form: 0,
        mmbar: 0,
        mismatches: 0,
        first_mismatch: None,
    };
    let mut values = vec![0u32; slots];
    for code in 0..count {
        let mut c = code;
        for v in values.iter_mut() {
            *v = (c % u64::from(d)) as u32;
            c /= u64::from(d);
        }
        let mut it = values.iter();
        let m = CycMatrix::from_fn(n, d, |_, _| *it.next().expect("one value per slot"));
        let a = has_block_form(&m);
        let c = classify_with_law(&m, Law::Odd).is_realizable();
        report.scanned += 1;
        report.block_form += u64::from(a);
        report.mmbar += u64::from(c);
        if a != c {
            report.mismatches += 1;
            report.first_mismatch.get_or_insert(m);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(n: usize, d: u32, rows: &[&[Option<u32>]]) -> CycMatrix {
        let flat: Vec<_> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        CycMatrix::from_entries(n, d, &flat).unwrap()
    }

    fn pair(d: u32, m12: u32, m21: u32) -> CycMatrix {
        mat(2, d, &[&[None, Some(m12)], &[Some(m21), None]])
    }

    #[test]
    fn construction_validates() {
        assert_eq!(
            CycMatrix::from_entries(2, 4, &[Some(0), Some(1), Some(1), None]),
            Err(MatrixError::NonZeroDiagonal(0))
        );
        assert_eq!(
            CycMatrix::from_entries(2, 4, &[None, None, Some(1), None]),
            Err(MatrixError::MissingEntry(0, 1))
        );
        assert_eq!(
            CycMatrix::from_entries(2, 4, &[None, Some(4), Some(1), None]),
            Err(MatrixError::EntryOutOfRange {
                i: 0,
                j: 1,
                k: 4,
                d: 4
            })
        );
        assert!(matches!(
            CycMatrix::from_entries(2, 4, &[None]),
            Err(MatrixError::WrongShape { .. })
        ));
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(pair(3, 0, 0).epsilon(0, 1), Ok(Epsilon::Plus));
        assert_eq!(pair(4, 1, 3).epsilon(0, 1), Ok(Epsilon::Minus));
        assert_eq!(pair(4, 0, 1).epsilon(0, 1), Ok(Epsilon::Incompatible));
        assert_eq!(pair(4, 0, 1).epsilon(1, 1), Err(MatrixError::Diagonal));
    }

    #[test]
    fn mmbar_examples() {
        assert_eq!(
            CycMatrix::ones(4, 6).mmbar_diagonal().unwrap(),
            vec![3, 3, 3, 3]
        );
        let m = mat(
            3,
            4,
            &[
                &[None, Some(1), Some(0)],
                &[Some(3), None, Some(0)],
                &[Some(0), Some(0), None],
            ],
        );
        assert_eq!(m.mmbar_diagonal().unwrap(), vec![0, 0, 2]);
        assert_eq!(pair(2, 1, 0).mmbar_diagonal().unwrap(), vec![-1, -1]);
        assert_eq!(
            pair(4, 0, 1).mmbar_diagonal(),
            Err(MatrixError::Incompatible(0, 1))
        );
    }

    #[test]
    fn classify_examples() {
        let one = CycMatrix::ones(1, 2);
        let c = classify(&one, 3).unwrap();
        assert_eq!(c.law, Law::Odd);
        assert_eq!(c.block().unwrap().s, 1);

        let c = classify(&pair(4, 1, 3), 5).unwrap();
        assert_eq!(c.law, Law::Odd);
        assert_eq!(c.block().unwrap().s, 2);

        let c = classify(&pair(4, 0, 1), 5).unwrap();
        assert_eq!(c.witness(), Some(&Witness::IncompatiblePair(0, 1)));

        let c = classify(&pair(2, 0, 1), 5).unwrap();
        assert_eq!(c.law, Law::Symmetric);
        assert_eq!(c.witness(), Some(&Witness::AsymmetricPair(0, 1)));
        assert!(classify(&pair(2, 1, 1), 5).unwrap().is_realizable());

        // characteristic 2 is always symmetric
        assert_eq!(classify(&pair(3, 1, 1), 4).unwrap().law, Law::Symmetric);

        assert_eq!(
            classify(&pair(3, 1, 1), 5),
            Err(MatrixError::DoesNotDivide { d: 3, q: 5 })
        );
    }

    #[test]
    fn classify_orders_odd_rows_first() {
        // rows 1 and 2 (0-based) are skew to each other, row 0 symmetric
        let m = mat(
            3,
            4,
            &[
                &[None, Some(1), Some(2)],
                &[Some(1), None, Some(3)],
                &[Some(2), Some(1), None],
            ],
        );
        let c = classify(&m, 5).unwrap();
        let block = c.block().unwrap();
        assert_eq!(block.s, 2);
        assert_eq!(block.sigma.as_slice(), &[1, 2, 0]);
        assert!(m.check_block_form(2, &block.sigma).unwrap());

        // two skew pairs sharing a row: diagonal (-2, 0, 0) has no admissible shape
        let m = mat(
            3,
            2,
            &[
                &[None, Some(1), Some(1)],
                &[Some(0), None, Some(0)],
                &[Some(0), Some(0), None],
            ],
        );
        assert_eq!(
            classify(&m, 3).unwrap().witness(),
            Some(&Witness::Diagonal(vec![-2, 0, 0]))
        );
    }

    #[test]
    fn block_form_examples() {
        let id3 = Permutation::identity(3);
        assert!(CycMatrix::ones(3, 4).check_block_form(1, &id3).unwrap());
        let id2 = Permutation::identity(2);
        assert!(pair(4, 1, 3).check_block_form(2, &id2).unwrap());
        assert!(!pair(4, 1, 1).check_block_form(2, &id2).unwrap());
        assert_eq!(
            pair(4, 1, 1).check_block_form(0, &id2),
            Err(MatrixError::BadPartition { s: 0, n: 2 })
        );
        assert_eq!(
            pair(4, 1, 1).check_block_form(1, &id3),
            Err(MatrixError::PermutationSize {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn conjugation_and_scaling() {
        let m = pair(4, 1, 3);
        assert_eq!(m.conjugate(&Permutation::identity(2)).unwrap(), m);
        let swapped = m.conjugate(&Permutation::new(vec![1, 0]).unwrap()).unwrap();
        assert_eq!(swapped, pair(4, 3, 1));

        assert_eq!(m.scale_indices(1).unwrap(), m);
        let m = pair(4, 1, 2);
        assert_eq!(m.scale_indices(3).unwrap(), pair(4, 3, 2));
        assert_eq!(m.scale_indices(2), Err(MatrixError::NotUnit { c: 2, d: 4 }));
    }

    #[test]
    fn permutations() {
        assert_eq!(Permutation::all(3).count(), 6);
        assert_eq!(Permutation::all(0).count(), 1);
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert_eq!(
            Permutation::from_one_based(&[2, 1]).unwrap().as_slice(),
            &[1, 0]
        );
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
    }

    #[test]
    fn bruteforce_small() {
        let r = criteria_equiv_bruteforce(2, 2, DEFAULT_ENUMERATION_BOUND).unwrap();
        assert!(r.agrees(), "{r:?}");
        assert_eq!((r.scanned, r.mmbar), (4, 4));
        let r = criteria_equiv_bruteforce(2, 4, DEFAULT_ENUMERATION_BOUND).unwrap();
        assert!(r.agrees());
        assert_eq!((r.scanned, r.mmbar), (16, 8));
        assert!(matches!(
            criteria_equiv_bruteforce(4, 4, 1000),
            Err(MatrixError::BoundExceeded { .. })
        ));
    }
}
