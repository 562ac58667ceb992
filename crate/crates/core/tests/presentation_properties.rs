use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use seifert11::homology::{circulant_order, homology_from_presentation};
use seifert11::presentations::{
    count_homomorphisms, verify_tietze_identities, CyclicPresentation, FinitePresentation, PermGroupTable,
};
use seifert11::{FreeWord, SeifertParams};

fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((1..=n, prop::sample::select(vec![-2i64, -1, 1, 2])), 0..max_len)
        .prop_map(move |letters| FreeWord::from_letters(n, &letters).unwrap())
}

fn arb_presentation() -> impl Strategy<Value = FinitePresentation> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(arb_word(n, 6), 1..=3).prop_map(move |rels| {
            let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
            FinitePresentation::new(names, rels).unwrap()
        })
    })
}

fn rotate(u: &FreeWord, k: usize) -> FreeWord {
    let letters: Vec<(usize, i64)> = u
        .syllables()
        .iter()
        .flat_map(|s| {
            let e = i64::try_from(&s.exponent).unwrap();
            std::iter::repeat_n((s.generator, e.signum()), e.unsigned_abs() as usize)
        })
        .collect();
    if letters.is_empty() {
        return u.clone();
    }
    let k = k % letters.len();
    let rotated: Vec<(usize, i64)> = letters[k..].iter().chain(&letters[..k]).copied().collect();
    FreeWord::from_letters(u.rank(), &rotated).unwrap()
}

#[test]
fn seifert_word_exponent_sums() {
    for (n, p, q, l) in [(3, 2, 1, 1), (2, 3, 2, 2), (4, 5, 2, 3), (6, 7, 3, 2)] {
        let ev = FreeWord::seifert_word(n, p, q, l).unwrap().exponent_vector();
        for i in 1..=n as usize {
            let want = (l * q) as i64 - if i == n as usize { p as i64 } else { 0 };
            assert_eq!(ev.get(i), &BigInt::from(want));
        }
    }
}

#[test]
fn torsion_order_is_the_circulant_resultant() {
    for n in 2..=6 {
        for p in 2..=7 {
            for q in 1..p {
                for l in 1..=3 {
                    let Ok(sp) = SeifertParams::for_covering(n, p, q, l) else { continue };
                    let cp = CyclicPresentation::seifert(&sp);
                    let h = homology_from_presentation(&cp.expand());
                    let order = circulant_order(&cp.word().exponent_vector().0);
                    match h.order() {
                        Some(o) => assert_eq!(o, order, "{sp}"),
                        None => assert_eq!(order, BigInt::from(0), "{sp}"),
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tietze_families_hold_beyond_the_grid(n in 2u64..=12, p in 2u64..=40, q in 1u64..40, l in 1u64..=8) {
        prop_assume!(q < p && SeifertParams::for_covering(n, p, q, l).is_ok());
        let report = verify_tietze_identities(n, p, q, l).unwrap();
        prop_assert!(report.all_passed(), "{:?}", report.failures().next());
    }

    #[test]
    fn counts_ignore_relator_presentation_details(
        pres in arb_presentation(),
        k in 0usize..10,
        invert in any::<bool>(),
    ) {
        let s3 = PermGroupTable::symmetric(3);
        let base = count_homomorphisms(&pres, &s3, 1 << 22).unwrap();
        let mut rels: Vec<FreeWord> = pres.relators().iter().rev().cloned().collect();
        rels = rels.iter().map(|r| rotate(r, k)).collect();
        if invert {
            rels = rels.iter().map(FreeWord::invert).collect();
        }
        let moved = pres.with_relators(rels).unwrap();
        prop_assert_eq!(count_homomorphisms(&moved, &s3, 1 << 22).unwrap(), base);
    }

    #[test]
    fn cyclic_homology_order_is_shift_and_inversion_invariant(
        (n, w) in (2usize..=5).prop_flat_map(|n| (Just(n), arb_word(n, 8)))
    ) {
        let order = |u: FreeWord| homology_from_presentation(&CyclicPresentation::new(u).expand()).order();
        let base = order(w.clone());
        prop_assert_eq!(order(w.shift(1)), base.clone());
        prop_assert_eq!(order(w.invert()), base.clone());
        let circ = circulant_order(&w.exponent_vector().0);
        prop_assert_eq!(base.unwrap_or_default(), circ.abs());
        let _ = n;
    }
}
