use proptest::prelude::*;

use seifert11::dunwoody::{
    build_tessellation, dunwoody_params_for, glue, read_presentation, seifert_criterion, DunwoodyError, DunwoodyParams,
    EdgeLabel, QuotientComplex,
};
use seifert11::homology::homology_from_presentation;
use seifert11::presentations::{count_homomorphisms, CyclicPresentation, PermGroupTable, DEFAULT_BUDGET};
use seifert11::SeifertParams;

fn grid() -> Vec<SeifertParams> {
    let mut out = Vec::new();
    for n in 2..=6 {
        for p in 2..=7 {
            for q in 1..p {
                for l in 1..=3 {
                    if let Ok(sp) = SeifertParams::for_covering(n, p, q, l) {
                        out.push(sp);
                    }
                }
            }
        }
    }
    out
}

fn quotient(sp: &SeifertParams) -> QuotientComplex {
    QuotientComplex::from_params(&dunwoody_params_for(sp.n, sp.p, sp.q, sp.l).unwrap()).unwrap()
}

/// Generator and orientation flag assigned to an edge.
fn generator_of(qc: &QuotientComplex, label: EdgeLabel) -> (usize, bool) {
    qc.edge_class_table().into_iter().find(|(l, _, _)| *l == label).map(|(_, g, rev)| (g, rev)).unwrap()
}

#[test]
fn path_through_the_arc_is_one_coherent_generator() {
    // S → B_{i-1} along m_{i-1}, the arc to A_i, then A_i → N along m_i:
    // p edges that all become x_i, oriented the same way.
    for sp in grid().into_iter().filter(SeifertParams::wide) {
        let qc = quotient(&sp);
        let (n, q) = (sp.n, sp.q);
        let (a, b, c) = (q, q * (sp.n * sp.l - 2), sp.p - 2 * q);
        let prev = |i: u64| (i + n - 2) % n + 1;
        for i in 1..=n {
            let mut path: Vec<EdgeLabel> = (1..=a).map(|j| EdgeLabel::Meridian { i: prev(i), j }).collect();
            path.extend((1..=c).map(|j| EdgeLabel::Arc { i, j }));
            path.extend((a + b + 1..=2 * a + b).map(|j| EdgeLabel::Meridian { i, j }));
            assert_eq!(path.len() as u64, sp.p);
            for e in &path {
                assert_eq!(generator_of(&qc, *e), (i as usize, false), "{sp} {e}");
            }
        }
    }
}

#[test]
fn each_meridian_cycles_through_the_generators() {
    // m_i reads q times x_{i+1}, q times x_{i+2}, ..., ending with q times x_i;
    // this is what e(i,j) = e(i-1,j+q) forces given the arc path names x_i
    for sp in grid().into_iter().filter(SeifertParams::wide) {
        let qc = quotient(&sp);
        let (n, q) = (sp.n, sp.q);
        for i in 1..=n {
            for k in 1..=sp.n * sp.l {
                for t in 1..=q {
                    let label = EdgeLabel::Meridian { i, j: (k - 1) * q + t };
                    let expected = ((i + k - 1) % n + 1) as usize;
                    assert_eq!(generator_of(&qc, label), (expected, false), "{sp} {label}");
                }
            }
        }
    }
}

#[test]
fn read_off_agrees_with_cyclic_presentation_on_invariants() {
    let s3 = PermGroupTable::symmetric(3);
    for sp in grid() {
        let qc = quotient(&sp);
        let counts = seifert_criterion(&qc);
        assert!(counts.pass, "{sp}");
        assert_eq!(counts.euler_characteristic, 0);
        let read = read_presentation(&qc).unwrap();
        let cyclic = CyclicPresentation::seifert(&sp).expand();
        assert_eq!(homology_from_presentation(&read), homology_from_presentation(&cyclic), "{sp}");
        if sp.n <= 4 {
            assert_eq!(
                count_homomorphisms(&read, &s3, DEFAULT_BUDGET).unwrap(),
                count_homomorphisms(&cyclic, &s3, DEFAULT_BUDGET).unwrap(),
                "{sp}"
            );
        }
    }
}

#[test]
fn some_other_twist_breaks_every_grid_point() {
    for sp in grid() {
        let d = dunwoody_params_for(sp.n, sp.p, sp.q, sp.l).unwrap();
        let t = build_tessellation(&d).unwrap();
        let broken = (0..t.region_length() as u64).filter(|&r| r != d.r).find(|&r| match glue(&t, r, d.s) {
            Ok(qc) => seifert_criterion(&qc).vertices != 1,
            Err(DunwoodyError::InconsistentPairing(_)) => true,
            Err(e) => panic!("{sp}: {e}"),
        });
        assert!(broken.is_some(), "{sp}: every twist satisfies the criterion");
    }
}

#[test]
fn read_presentation_requires_the_criterion() {
    let d = dunwoody_params_for(3, 5, 2, 1).unwrap();
    let t = build_tessellation(&d).unwrap();
    let failing = (0..t.region_length() as u64)
        .filter_map(|r| glue(&t, r, d.s).ok())
        .find(|qc| !seifert_criterion(qc).pass)
        .expect("a failing twist exists");
    assert!(matches!(read_presentation(&failing), Err(DunwoodyError::CriterionFailed(_))));
}

fn arb_params() -> impl Strategy<Value = DunwoodyParams> {
    (0u64..4, 0u64..4, 0u64..4, 1u64..5, any::<u64>(), 0u8..2)
        .prop_filter("a+b+c > 0", |(a, b, c, ..)| a + b + c > 0)
        .prop_map(|(a, b, c, n, r, s)| DunwoodyParams::new(a, b, c, n, r % (2 * a + b + c), s).unwrap())
}

proptest! {
    #[test]
    fn gluing_is_a_consistent_pairing(d in arb_params()) {
        let t = build_tessellation(&d).unwrap();
        prop_assert!(t.is_consistent());
        prop_assert_eq!(t.edge_count() as u64, d.n * d.region_length());
        match glue(&t, d.r, d.s) {
            Ok(qc) => {
                prop_assert_eq!(qc.pairings().len(), t.edge_count());
                let counts = seifert_criterion(&qc);
                prop_assert_eq!(
                    counts.euler_characteristic,
                    counts.vertices as i64 - counts.edges as i64 + counts.faces as i64 - 1
                );
                if counts.pass {
                    prop_assert_eq!(counts.euler_characteristic, 0);
                }
                let pres = qc.boundary_presentation();
                prop_assert_eq!(pres.relator_count() as u64, d.n);
                prop_assert_eq!(pres.generator_count(), qc.edge_class_count());
            }
            Err(e) => prop_assert!(matches!(e, DunwoodyError::InconsistentPairing(_))),
        }
    }
}
