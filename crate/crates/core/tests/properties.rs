use std::sync::Arc;

use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use residuemat_core::field::{Field, RootIndex};
use residuemat_core::matrix::{classify, classify_with_law, CycMatrix, Law, Permutation};
use residuemat_core::poly::{format_poly, parse_poly, Poly};
use residuemat_core::realize::{choose_residue_with_symbol, realize, RealizeOptions, Search};
use residuemat_core::symbol::{Irreducible, SymbolContext};
use residuemat_core::verify::irreducibles_up_to;

const FIELDS: [(u64, u32); 6] = [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)];

fn field_strategy() -> impl Strategy<Value = Arc<Field>> {
    (0..FIELDS.len()).prop_map(|i| Arc::new(Field::new(FIELDS[i].0, FIELDS[i].1).unwrap()))
}

fn poly_in(f: &Arc<Field>, values: &[u32]) -> Poly {
    let q = u64::from(f.q());
    let v: Vec<u64> = values.iter().map(|&x| u64::from(x) % q).collect();
    Poly::from_values(f, &v).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..64, 0..7)
}

proptest! {
    #[test]
    fn ring_axioms(f in field_strategy(), a in coeffs(), b in coeffs(), c in coeffs()) {
        let (a, b, c) = (poly_in(&f, &a), poly_in(&f, &b), poly_in(&f, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn divrem_reconstructs(f in field_strategy(), a in coeffs(), b in coeffs()) {
        let (a, b) = (poly_in(&f, &a), poly_in(&f, &b));
        prop_assume!(!b.is_zero());
        let (quot, rem) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&quot * &b) + &rem, a);
        prop_assert!(rem.degree().is_none_or(|r| r < b.degree().unwrap()));
    }

    #[test]
    fn gcd_divides_both(f in field_strategy(), a in coeffs(), b in coeffs()) {
        let (a, b) = (poly_in(&f, &a), poly_in(&f, &b));
        let g = a.gcd(&b).unwrap();
        if !g.is_zero() {
            prop_assert!(g.is_monic());
            prop_assert!(a.rem(&g).unwrap().is_zero());
            prop_assert!(b.rem(&g).unwrap().is_zero());
        }
    }

    #[test]
    fn text_round_trip(f in field_strategy(), a in coeffs()) {
        let a = poly_in(&f, &a);
        prop_assert_eq!(parse_poly(&format_poly(&a), &f).unwrap(), a);
    }

    #[test]
    fn symbol_multiplicative_and_class_invariant(
        pick in 0usize..4,
        a in coeffs(),
        b in coeffs(),
        which in any::<prop::sample::Index>(),
    ) {
        let (p, m, d) = [(5, 1, 4), (7, 1, 3), (3, 2, 4), (13, 1, 6)][pick];
        let ctx = SymbolContext::new(Arc::new(Field::new(p, m).unwrap()), d).unwrap();
        let irreducibles = irreducibles_up_to(&ctx, 3);
        let modulus = which.get(&irreducibles);
        let (a, b) = (poly_in(ctx.field(), &a), poly_in(ctx.field(), &b));
        prop_assume!(!a.rem(modulus.poly()).unwrap().is_zero());
        prop_assume!(!b.rem(modulus.poly()).unwrap().is_zero());
        let sa = ctx.symbol(&a, modulus).unwrap();
        let sb = ctx.symbol(&b, modulus).unwrap();
        prop_assert_eq!(ctx.symbol(&(&a * &b), modulus).unwrap(), sa + sb);
        let reduced = a.rem(modulus.poly()).unwrap();
        prop_assert_eq!(ctx.symbol(&reduced, modulus).unwrap(), sa);
    }

    #[test]
    fn mmbar_diagonal_parity(n in 1usize..6, half in 1u32..4, seed in any::<u64>()) {
        let d = 2 * half;
        let mut s = seed;
        let m = CycMatrix::from_fn(n, d, |i, j| {
            // keep every pair equal up to sign
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if i < j { (s >> 33) as u32 } else { 0 }
        });
        let m = CycMatrix::from_fn(n, d, |i, j| {
            if i < j { m.get(i, j).unwrap() } else {
                let flip = (seed >> ((i * n + j) % 64)) & 1 == 1;
                m.get(j, i).unwrap() + if flip { half } else { 0 }
            }
        });
        let diag = m.mmbar_diagonal().unwrap();
        for dj in diag {
            prop_assert!(dj.abs() < n as i64);
            prop_assert_eq!((dj - (n as i64 - 1)).rem_euclid(2), 0);
        }
    }

    #[test]
    fn classification_invariant_under_conjugation(
        entries in prop::collection::vec(0u32..4, 16),
        perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(),
        q in prop::sample::select(vec![5u32, 13, 9]),
    ) {
        let mut it = entries.into_iter();
        let m = CycMatrix::from_fn(4, 4, |_, _| it.next().unwrap());
        let sigma = Permutation::new(perm).unwrap();
        let before = classify(&m, q).unwrap();
        let after = classify(&m.conjugate(&sigma).unwrap(), q).unwrap();
        prop_assert_eq!(before.is_realizable(), after.is_realizable());
        prop_assert_eq!(before.block().map(|b| b.s), after.block().map(|b| b.s));
    }

    #[test]
    fn odd_law_block_is_checkable(
        signs in prop::collection::vec(any::<bool>(), 5),
        entries in prop::collection::vec(0u32..6, 25),
    ) {
        // build an admissible matrix from a random odd/even split
        let n = 5;
        let d = 6;
        let m = CycMatrix::from_fn(n, d, |i, j| {
            let (a, b) = (i.min(j), i.max(j));
            let base = entries[a * n + b];
            if i > j && signs[a] && signs[b] { base + d / 2 } else { base }
        });
        let c = classify_with_law(&m, Law::Odd);
        prop_assert!(c.is_realizable());
        let block = c.block().unwrap();
        prop_assert!(m.check_block_form(block.s, &block.sigma).unwrap());
        let odd = signs.iter().filter(|&&s| s).count();
        let expected_s = if odd >= 2 { odd } else { 1 };
        prop_assert_eq!(block.s, expected_s);
    }
}

fn context(p: u64, m: u32, d: u32) -> SymbolContext {
    SymbolContext::new(Arc::new(Field::new(p, m).unwrap()), d).unwrap()
}

fn all_matrices(n: usize, d: u32) -> impl Iterator<Item = CycMatrix> {
    let slots = n * n.saturating_sub(1);
    (0..u64::from(d).pow(slots as u32)).map(move |code| {
        let mut c = code;
        CycMatrix::from_fn(n, d, |_, _| {
            let v = (c % u64::from(d)) as u32;
            c /= u64::from(d);
            v
        })
    })
}

#[test]
fn scaling_preserves_verdicts() {
    for n in 1..=3 {
        for m in all_matrices(n, 4) {
            for q in [5, 13] {
                let base = classify(&m, q).unwrap().is_realizable();
                for c in [1, 3] {
                    let scaled = m.scale_indices(c).unwrap();
                    assert_eq!(classify(&scaled, q).unwrap().is_realizable(), base);
                }
            }
        }
    }
}

#[test]
fn realize_round_trips_small_exhaustive() {
    let opts = RealizeOptions::default();
    for (q, d) in [(5, 2), (5, 4), (13, 2), (13, 4)] {
        let ctx = context(q, 1, d);
        for n in 1..=3 {
            for m in all_matrices(n, d) {
                if !classify(&m, q as u32).unwrap().is_realizable() {
                    continue;
                }
                let r = realize(&ctx, &m, &opts).unwrap();
                assert_eq!(ctx.residue_matrix(&r.polys).unwrap(), m);
                if let Some(s) = r.s {
                    for (k, &pos) in r.sigma.as_slice().iter().enumerate() {
                        assert_eq!(r.polys[pos].degree() % 2 == 1, k < s);
                    }
                }
                for step in &r.transcript[1..] {
                    assert!(step.poly.degree() > step.crt_modulus.degree().unwrap());
                }
            }
        }
    }
}

#[test]
fn realize_is_deterministic() {
    let ctx = context(13, 1, 4);
    let m = CycMatrix::from_entries(
        3,
        4,
        &[
            None,
            Some(1),
            Some(2),
            Some(3),
            None,
            Some(1),
            Some(2),
            Some(1),
            None,
        ],
    )
    .unwrap();
    assert!(classify(&m, 13).unwrap().is_realizable());
    let a = realize(&ctx, &m, &RealizeOptions::default()).unwrap();
    let b = realize(&ctx, &m, &RealizeOptions::default()).unwrap();
    assert_eq!(a, b);

    let random = RealizeOptions {
        deterministic: false,
        seed: 99,
        ..RealizeOptions::default()
    };
    let c = realize(&ctx, &m, &random).unwrap();
    let d = realize(&ctx, &m, &random).unwrap();
    assert_eq!(c, d);
    assert_eq!(ctx.residue_matrix(&c.polys).unwrap(), m);
}

#[test]
fn random_residue_trials_average_d() {
    for (q, d, modulus) in [(13, 4, "t^2+2"), (7, 6, "t+3"), (9, 8, "t^2+t+{0,1}")] {
        let (p, m) = if q == 9 { (3, 2) } else { (q, 1) };
        let ctx = context(p, m, d);
        let modulus = Irreducible::new(parse_poly(modulus, ctx.field()).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let draws = 1200;
        let mut total = 0;
        for i in 0..draws {
            let target = RootIndex::new(i % d, d).unwrap();
            let choice =
                choose_residue_with_symbol(&ctx, &modulus, target, Search::Random(&mut rng))
                    .unwrap();
            total += choice.trials;
        }
        let mean = total as f64 / draws as f64;
        let expected = f64::from(d);
        assert!(
            (mean - expected).abs() <= 0.5 * expected,
            "q = {q}, d = {d}: mean trials {mean}"
        );
    }
}
