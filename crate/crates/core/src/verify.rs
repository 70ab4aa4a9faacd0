//! Exhaustive checks of reciprocity and of the homomorphism property of the
//! symbol over small fields.

use alloc::vec::Vec;

use crate::field::RootIndex;
use crate::poly::{monic_irreducibles, Poly};
use crate::symbol::{Irreducible, SymbolContext, SymbolError};

/// Every monic irreducible of degree `1..=max_degree`, grouped by degree.
pub fn irreducibles_up_to(ctx: &SymbolContext, max_degree: usize) -> Vec<Irreducible> {
    (1..=max_degree)
        .flat_map(|deg| monic_irreducibles(ctx.field(), deg))
        .map(Irreducible::new_unchecked)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocityReport {
    pub irreducibles: usize,
    /// Ordered pairs checked.
    pub pairs: u64,
    pub failures: u64,
    pub first_failure: Option<(Poly, Poly)>,
}

/// Checks `(P/Q) = reciprocity_index(deg P, deg Q) * (Q/P)` for all ordered
/// pairs of distinct monic irreducibles of degree at most `max_degree`.
pub fn check_reciprocity(
    ctx: &SymbolContext,
    max_degree: usize,
) -> Result<ReciprocityReport, SymbolError> {
    let polys = irreducibles_up_to(ctx, max_degree);
    let mut report = ReciprocityReport {
        irreducibles: polys.len(),
        pairs: 0,
        failures: 0,
        first_failure: None,
    };
    for (i, p) in polys.iter().enumerate() {
        for q in &polys[i + 1..] {
            let pq = ctx.symbol(p.poly(), q)?;
            let qp = ctx.symbol(q.poly(), p)?;
            // both orders of the pair
            for (a, b, x, y) in [(p, q, pq, qp), (q, p, qp, pq)] {
                report.pairs += 1;
                if x - y != ctx.reciprocity_index(a.degree(), b.degree()) {
                    report.failures += 1;
                    report
                        .first_failure
                        .get_or_insert_with(|| (a.poly().clone(), b.poly().clone()));
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub moduli: usize,
    /// Pairs `(a, b)` of nonzero residues checked for multiplicativity.
    pub products: u64,
    pub multiplicativity_failures: u64,
    /// Moduli whose symbol misses some root of unity.
    pub surjectivity_failures: u64,
}

impl HomomorphismReport {
    pub fn failures(&self) -> u64 {
        self.multiplicativity_failures + self.surjectivity_failures
    }
}

/// Index of a residue modulo a degree-`deg` polynomial: its coefficient
/// vector read as base-`q` digits.
fn residue_code(u: &Poly, q: u64) -> usize {
    u.coeffs()
        .iter()
        .rev()
        .fold(0u64, |acc, c| acc * q + u64::from(c.value())) as usize
}

/// For every monic irreducible `P` of degree at most `max_degree`, checks
/// `(ab/P) = (a/P)(b/P)` for all nonzero residues `a, b`, and that every
/// `d`-th root of unity is attained.
pub fn check_homomorphism(
    ctx: &SymbolContext,
    max_degree: usize,
) -> Result<HomomorphismReport, SymbolError> {
    let q = u64::from(ctx.q());
    let d = ctx.d();
    let mut report = HomomorphismReport {
        moduli: 0,
        products: 0,
        multiplicativity_failures: 0,
        surjectivity_failures: 0,
    };
    for p in irreducibles_up_to(ctx, max_degree) {
        report.moduli += 1;
        let residues: Vec<Poly> = crate::poly::nonzero_residues(ctx.field(), p.degree()).collect();
        let size = q.pow(p.degree() as u32) as usize;
        let mut table: Vec<Option<RootIndex>> = alloc::vec![None; size];
        let mut seen = alloc::vec![false; d as usize];
        for u in &residues {
            let k = ctx.symbol(u, &p)?;
            seen[k.k() as usize] = true;
            table[residue_code(u, q)] = Some(k);
        }
        if seen.iter().any(|s| !s) {
            report.surjectivity_failures += 1;
        }
        for a in &residues {
            let ka = table[residue_code(a, q)].expect("filled");
            for b in &residues {
                let kb = table[residue_code(b, q)].expect("filled");
                let ab = (a * b).rem(p.poly())?;
                report.products += 1;
                if table[residue_code(&ab, q)] != Some(ka + kb) {
                    report.multiplicativity_failures += 1;
                }
            }
        }
    }
    Ok(report)
}
