//! Constructing monic irreducibles whose residue matrix is a prescribed
//! admissible matrix.
//!
//! Polynomials are built one at a time in block order. The residues of the
//! next polynomial modulo the earlier ones are fixed through the symbol
//! values of its row, glued together by CRT, and an irreducible is found in
//! the resulting residue class. Reciprocity then supplies its column.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{Rng, SeedableRng};
use thiserror::Error;

use crate::field::{Fe, RootIndex};
use crate::matrix::{classify_with_law, CycMatrix, Law, Permutation, Witness};
use crate::poly::{monic_irreducibles, monic_polys, nonzero_residues, Poly, PolyError};
use crate::symbol::{Irreducible, SymbolContext, SymbolError};

/// Random-mode draws per degree before escalating to the next degree.
const RANDOM_TRIALS_PER_DEGREE: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("matrix is not a residue matrix for this field: {0:?}")]
    NotRealizable(Witness),
    #[error("matrix has d = {matrix} but the context has d = {context}")]
    OrderMismatch { matrix: u32, context: u32 },
    #[error("no irreducible found up to degree {max_degree}")]
    ResourceExhausted { max_degree: usize },
    #[error("no irreducible of degree {0} in the residue class")]
    NoneFoundAtDegree(usize),
    #[error("residue class is not coprime to the modulus")]
    NotCoprime,
    #[error("degree {degree} is below the modulus degree {modulus}")]
    DegreeTooSmall { degree: usize, modulus: usize },
    #[error("repeated CRT modulus at position {0}")]
    RepeatedModulus(usize),
    #[error("no residue attains the target symbol (scan exhausted)")]
    ResidueScanExhausted,
    #[error("invalid options: {0}")]
    BadOptions(&'static str),
    #[error("constructed polynomials do not reproduce the matrix")]
    Mismatch,
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizeOptions {
    pub seed: u64,
    pub max_degree: usize,
    /// Scan in enumeration order instead of sampling.
    pub deterministic: bool,
    pub base_degree_odd: usize,
    pub base_degree_even: usize,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions {
            seed: 0,
            max_degree: 40,
            deterministic: true,
            base_degree_odd: 1,
            base_degree_even: 2,
        }
    }
}

impl RealizeOptions {
    fn validate(&self) -> Result<(), RealizeError> {
        if self.max_degree < 2 {
            return Err(RealizeError::BadOptions("max_degree must be at least 2"));
        }
        if self.base_degree_odd % 2 != 1 {
            return Err(RealizeError::BadOptions("base_degree_odd must be odd"));
        }
        if !self.base_degree_even.is_multiple_of(2) || self.base_degree_even == 0 {
            return Err(RealizeError::BadOptions(
                "base_degree_even must be even and positive",
            ));
        }
        Ok(())
    }
}

/// How a search step orders its candidates.
pub enum Search<'a> {
    Deterministic,
    Random(&'a mut dyn Rng),
}

/// A residue with a prescribed symbol, and how many symbols were evaluated
/// to find it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueChoice {
    pub residue: Poly,
    pub trials: usize,
}

/// Picks a nonzero residue `u` modulo `p` with `(u/p)_d = target`.
pub fn choose_residue_with_symbol(
    ctx: &SymbolContext,
    p: &Irreducible,
    target: RootIndex,
    search: Search<'_>,
) -> Result<ResidueChoice, RealizeError> {
    let field = ctx.field();
    let deg = p.degree();
    match search {
        Search::Deterministic => {
            for (i, u) in nonzero_residues(field, deg).enumerate() {
                if ctx.symbol(&u, p)? == target {
                    return Ok(ResidueChoice {
                        residue: u,
                        trials: i + 1,
                    });
                }
            }
            Err(RealizeError::ResidueScanExhausted)
        }
        Search::Random(rng) => {
            let q = u64::from(field.q());
            let mut trials = 0;
            loop {
                let coeffs: Vec<Fe> = (0..deg)
                    .map(|_| field.element(rng.next_u64() % q).expect("reduced"))
                    .collect();
                let u = Poly::from_coeffs(field, coeffs);
                if u.is_zero() {
                    continue;
                }
                trials += 1;
                if ctx.symbol(&u, p)? == target {
                    return Ok(ResidueChoice { residue: u, trials });
                }
            }
        }
    }
}

/// Solves `u = u_j (mod P_j)` for all `j`; returns `(u0, Q)` with
/// `Q = prod P_j` and `deg u0 < deg Q`.
pub fn crt_combine(pairs: &[(Poly, Irreducible)]) -> Result<(Poly, Poly), RealizeError> {
    let Some((first_u, first_p)) = pairs.first() else {
        return Err(RealizeError::BadOptions(
            "CRT needs at least one congruence",
        ));
    };
    let mut modulus = first_p.poly().clone();
    let mut u = first_u.rem(&modulus)?;
    for (i, (uj, pj)) in pairs.iter().enumerate().skip(1) {
        if pairs[..i].iter().any(|(_, prev)| prev == pj) {
            return Err(RealizeError::RepeatedModulus(i));
        }
        let pj = pj.poly();
        let inv = modulus.rem(pj)?.inv_mod(pj)?;
        let lift = (&(uj - &u) * &inv).rem(pj)?;
        u = &u + &(&modulus * &lift);
        modulus = &modulus * pj;
    }
    Ok((u, modulus))
}

/// An irreducible found by [`find_irreducible_in_class`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Found {
    pub poly: Irreducible,
    pub candidates_tested: usize,
}

/// Finds a monic irreducible `P = Q*h + u0` of degree `degree`, `h` monic,
/// that is not in `exclude`. `degree = deg Q` is allowed and leaves the
/// single candidate `Q + u0`.
pub fn find_irreducible_in_class(
    u0: &Poly,
    modulus: &Poly,
    degree: usize,
    exclude: &[Irreducible],
    search: Search<'_>,
) -> Result<Found, RealizeError> {
    let field = modulus.field();
    let deg_q = modulus.degree().ok_or(PolyError::DivisionByZero)?;
    if degree < deg_q {
        return Err(RealizeError::DegreeTooSmall {
            degree,
            modulus: deg_q,
        });
    }
    if !u0.gcd(modulus)?.is_one() {
        return Err(RealizeError::NotCoprime);
    }
    if !modulus.is_monic() {
        return Err(RealizeError::Symbol(SymbolError::NotMonic));
    }
    let u0 = u0.rem(modulus)?;
    let h_degree = degree - deg_q;
    let mut tested = 0;
    let mut test = |h: Poly| -> Option<Irreducible> {
        let candidate = &(modulus * &h) + &u0;
        tested += 1;
        if candidate.is_irreducible().ok()? {
            let candidate = Irreducible::new_unchecked(candidate);
            if !exclude.contains(&candidate) {
                return Some(candidate);
            }
        }
        None
    };
    let found = match search {
        Search::Deterministic => monic_polys(field, h_degree).find_map(&mut test),
        Search::Random(rng) => {
            let q = u64::from(field.q());
            let space = u32::try_from(h_degree)
                .ok()
                .and_then(|e| q.checked_pow(e))
                .unwrap_or(u64::MAX);
            // small spaces are oversampled so every candidate is likely seen
            let draws = space.saturating_mul(4).min(RANDOM_TRIALS_PER_DEGREE as u64) as usize;
            (0..draws).find_map(|_| {
                let mut coeffs: Vec<Fe> = (0..h_degree)
                    .map(|_| field.element(rng.next_u64() % q).expect("reduced"))
                    .collect();
                coeffs.push(Fe::ONE);
                test(Poly::from_coeffs(field, coeffs))
            })
        }
    };
    match found {
        Some(poly) => Ok(Found {
            poly,
            candidates_tested: tested,
        }),
        None => Err(RealizeError::NoneFoundAtDegree(degree)),
    }
}

/// What happened while constructing one polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    /// Position in the input matrix.
    pub position: usize,
    /// `(u_j, target index)` for each earlier polynomial, in block order.
    pub residues: Vec<(Poly, u32)>,
    /// Symbol evaluations spent finding each `u_j`.
    pub residue_trials: Vec<usize>,
    pub crt_residue: Poly,
    pub crt_modulus: Poly,
    pub degrees_tried: Vec<usize>,
    pub candidates_tested: usize,
    pub poly: Irreducible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    /// In the input matrix's order.
    pub polys: Vec<Irreducible>,
    pub law: Law,
    /// Block data under the odd law; identity and `None` otherwise.
    pub s: Option<usize>,
    pub sigma: Permutation,
    /// In construction order.
    pub transcript: Vec<Step>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Parity {
    Odd,
    Even,
    Any,
}

impl Parity {
    /// Smallest admissible degree strictly above `floor`, and the step
    /// between admissible degrees.
    fn schedule(self, floor: usize) -> (usize, usize) {
        let next = floor + 1;
        match self {
            Parity::Any => (next, 1),
            Parity::Odd => (if next % 2 == 1 { next } else { next + 1 }, 2),
            Parity::Even => (
                if next.is_multiple_of(2) {
                    next
                } else {
                    next + 1
                },
                2,
            ),
        }
    }
}

/// Builds distinct monic irreducibles whose residue matrix is `m`.
pub fn realize(
    ctx: &SymbolContext,
    m: &CycMatrix,
    opts: &RealizeOptions,
) -> Result<Realization, RealizeError> {
    opts.validate()?;
    if m.d() != ctx.d() {
        return Err(RealizeError::OrderMismatch {
            matrix: m.d(),
            context: ctx.d(),
        });
    }
    let classification = classify_with_law(m, ctx.law());
    if let Some(w) = classification.witness() {
        return Err(RealizeError::NotRealizable(w.clone()));
    }
    let n = m.n();
    let (s, sigma) = match classification.block() {
        Some(b) => (Some(b.s), b.sigma.clone()),
        None => (None, Permutation::identity(n)),
    };
    let permuted = m.conjugate(&sigma).expect("sizes match");
    let parity = |k: usize| match s {
        Some(s) if k < s => Parity::Odd,
        Some(_) => Parity::Even,
        None => Parity::Any,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut built: Vec<Irreducible> = Vec::with_capacity(n);
    let mut transcript = Vec::with_capacity(n);

    for k in 0..n {
        let step = if k == 0 {
            first_step(ctx, parity(0), opts)?
        } else {
            let mut residues = Vec::with_capacity(k);
            let mut residue_trials = Vec::with_capacity(k);
            let mut pairs = Vec::with_capacity(k);
            for (j, pj) in built.iter().enumerate() {
                let target = permuted.root(k, j).expect("off-diagonal");
                let search = if opts.deterministic {
                    Search::Deterministic
                } else {
                    Search::Random(&mut rng)
                };
                let choice = choose_residue_with_symbol(ctx, pj, target, search)?;
                residues.push((choice.residue.clone(), target.k()));
                residue_trials.push(choice.trials);
                pairs.push((choice.residue, pj.clone()));
            }
            let (u0, modulus) = crt_combine(&pairs)?;
            let deg_q = modulus.degree().expect("product of irreducibles");
            let (mut degree, stride) = parity(k).schedule(deg_q);
            let mut degrees_tried = Vec::new();
            let mut candidates_tested = 0;
            let found = loop {
                if degree > opts.max_degree {
                    return Err(RealizeError::ResourceExhausted {
                        max_degree: opts.max_degree,
                    });
                }
                degrees_tried.push(degree);
                let search = if opts.deterministic {
                    Search::Deterministic
                } else {
                    Search::Random(&mut rng)
                };
                match find_irreducible_in_class(&u0, &modulus, degree, &built, search) {
                    Ok(found) => {
                        candidates_tested += found.candidates_tested;
                        break found.poly;
                    }
                    Err(RealizeError::NoneFoundAtDegree(_)) => degree += stride,
                    Err(e) => return Err(e),
                }
            };
            debug_assert!(found.degree() > deg_q);
            Step {
                position: 0,
                residues,
                residue_trials,
                crt_residue: u0,
                crt_modulus: modulus,
                degrees_tried,
                candidates_tested,
                poly: found,
            }
        };
        built.push(step.poly.clone());
        transcript.push(Step {
            position: sigma.as_slice()[k],
            ..step
        });
    }

    let mut polys: Vec<Option<Irreducible>> = alloc::vec![None; n];
    for (k, p) in built.into_iter().enumerate() {
        polys[sigma.as_slice()[k]] = Some(p);
    }
    let polys: Vec<Irreducible> = polys
        .into_iter()
        .map(|p| p.expect("sigma is onto"))
        .collect();

    if ctx.residue_matrix(&polys)? != *m {
        return Err(RealizeError::Mismatch);
    }
    Ok(Realization {
        polys,
        law: ctx.law(),
        s,
        sigma,
        transcript,
    })
}

fn first_step(
    ctx: &SymbolContext,
    parity: Parity,
    opts: &RealizeOptions,
) -> Result<Step, RealizeError> {
    let field = ctx.field();
    let base = match parity {
        Parity::Even => opts.base_degree_even,
        Parity::Odd | Parity::Any => opts.base_degree_odd,
    };
    let mut degrees_tried = Vec::new();
    let mut degree = base;
    let poly = loop {
        if degree > opts.max_degree {
            return Err(RealizeError::ResourceExhausted {
                max_degree: opts.max_degree,
            });
        }
        degrees_tried.push(degree);
        if let Some(p) = monic_irreducibles(field, degree).next() {
            break Irreducible::new_unchecked(p);
        }
        degree += 2;
    };
    Ok(Step {
        position: 0,
        residues: Vec::new(),
        residue_trials: Vec::new(),
        crt_residue: Poly::zero(field),
        crt_modulus: Poly::one(field),
        degrees_tried,
        candidates_tested: 0,
        poly,
    })
}
