//! End-to-end acceptance suite: reproduces every worked evaluation exactly,
//! sweeps every stated operator and graph identity over its full finite
//! domain, and checks each multiplication rule against an independent
//! computation of the same product. One test per claim group; each failure
//! message names the offending input.

use std::collections::{BTreeMap, BTreeSet};

use qschur::compositions::{compositions_of, flatten, partitions_of};
use qschur::dualgraphs::{apply_d, apply_dt, apply_u, apply_ut, verify_identity, GraphIdentity};
use qschur::operators::{
    add_box, append_row, interval, jdt, jdt_set, remove_box, remove_set, verify_lemmas,
    StripFlavor,
};
use qschur::pieri::{
    ncs_right_pieri, qs_skew_pieri, schur_embedding, skew_schur_pieri, ssyt_skew_polynomial,
    verify_pieri_theorem, PieriBounds, PieriTheorem, RightPieriForm,
};
use qschur::posets::{chains_l, standard_tableaux};
use qschur::qsym::{
    expand_in_qs, ncs_product_coefficient, poly_mul, product, qs_in_f, to_polynomial, Basis,
    QSymVector,
};
use qschur::{Composition, FormalSum, SkewShape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec())
}

fn sum(entries: &[(&[u32], i64)]) -> FormalSum<Composition> {
    entries.iter().map(|&(p, k)| (c(p), k)).collect()
}

fn skew_sum(entries: &[(&[u32], &[u32], i64)]) -> FormalSum<SkewShape> {
    entries
        .iter()
        .map(|&(outer, inner, k)| (SkewShape::new(c(outer), c(inner)), k))
        .collect()
}

fn f_vector(entries: &[(&[u32], i64)], degree: u32) -> QSymVector {
    QSymVector::from_terms(Basis::F, degree, sum(entries))
}

fn multiplier(n: u32, flavor: StripFlavor) -> Composition {
    match flavor {
        StripFlavor::Horizontal => c(&[n]),
        StripFlavor::Vertical => Composition::new(vec![1; n as usize]),
    }
}

#[test]
fn worked_examples_reproduce_exactly() {
    assert_eq!(remove_box(1, &[2, 1, 2]), Some(vec![2, 0, 2]));
    assert_eq!(remove_box(2, &[2, 1, 2]), Some(vec![2, 1, 1]));

    assert_eq!(
        remove_set(&interval(3), &[3, 5, 2, 4, 1, 2]),
        Some(vec![2, 5, 2, 4, 1, 0])
    );
    assert_eq!(jdt(4, &[3, 5, 2, 4, 1, 2]), Some(vec![2, 5, 2, 4, 1, 0, 4]));

    assert_eq!(append_row(2, &[2, 1, 3]), vec![2, 1, 3, 2]);
    for j in 0..=4 {
        assert_eq!(remove_box(2, &[3, 5, 1]).map(|w| append_row(j, &w)), None);
    }

    assert_eq!(add_box(1, &[3, 2, 3, 1, 2]), Some(vec![1, 3, 2, 3, 1, 2]));
    assert_eq!(add_box(2, &[3, 2, 3, 1, 2]), Some(vec![3, 2, 3, 2, 2]));
    assert_eq!(add_box(3, &[3, 2, 3, 1, 2]), Some(vec![3, 3, 3, 1, 2]));
    assert_eq!(add_box(4, &[3, 2, 3, 1, 2]), Some(vec![4, 2, 3, 1, 2]));
    assert_eq!(add_box(5, &[3, 2, 3, 1, 2]), None);
    assert_eq!(add_box(6, &[3, 2, 3, 1, 2]), None);

    // jdt_set over I versus clearing the complement of I in [max I] and
    // appending a row of max I, on random weak inputs: same flattening,
    // same annihilation
    let set = [1, 4, 6, 7, 10];
    let complement = [2, 3, 5, 8, 9];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let len = rng.gen_range(0..=12);
        let w: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=9)).collect();
        let lhs = jdt_set(&set, &w);
        let rhs = remove_set(&complement, &w).map(|v| append_row(10, &v));
        match (&lhs, &rhs) {
            (None, None) => {}
            (Some(l), Some(r)) => assert_eq!(flatten(l), flatten(r), "w={w:?}"),
            _ => panic!("annihilation mismatch on w={w:?}: {lhs:?} vs {rhs:?}"),
        }
    }

    let x = FormalSum::singleton(c(&[2, 1, 3]));
    let y = FormalSum::singleton(c(&[1, 2]));
    assert_eq!(
        apply_u(&x),
        sum(&[
            (&[2, 1, 3, 1], 1),
            (&[2, 3, 2], 1),
            (&[1, 3, 3], 1),
            (&[2, 1, 4], 1),
        ])
    );
    assert_eq!(
        apply_d(&x),
        sum(&[(&[2, 3], 1), (&[1, 1, 3], 1), (&[2, 1, 2], 1)])
    );
    assert_eq!(
        apply_ut(&x),
        sum(&[
            (&[1, 2, 1, 3], 1),
            (&[2, 2, 3], 1),
            (&[3, 1, 3], 1),
            (&[2, 1, 4], 1),
        ])
    );
    assert_eq!(apply_dt(&y), sum(&[(&[2], 1), (&[1, 1], 1), (&[1], 1)]));

    assert_eq!(apply_d(&apply_u(&x)) - apply_u(&apply_d(&x)), x.clone());
    assert_eq!(apply_d(&apply_ut(&x)) - apply_ut(&apply_d(&x)), x.clone());
    let filtered = sum(&[(&[1, 2], 1), (&[2], 1), (&[1, 1], 1), (&[1], 1)]);
    assert_eq!(apply_dt(&apply_u(&y)) - apply_u(&apply_dt(&y)), filtered);
    assert_eq!(apply_dt(&apply_ut(&y)) - apply_ut(&apply_dt(&y)), filtered);

    assert_eq!(
        qs_in_f(&SkewShape::new(c(&[2, 1, 3]), c(&[1]))),
        f_vector(&[(&[2, 1, 2], 1), (&[2, 2, 1], 1), (&[1, 2, 1, 1], 1)], 5)
    );

    let alpha = c(&[3, 1, 3, 2]);
    assert_eq!(
        ncs_right_pieri(&alpha, 3, StripFlavor::Horizontal, RightPieriForm::Simplified),
        sum(&[
            (&[3, 1, 3, 2, 3], 1),
            (&[3, 3, 2, 4], 1),
            (&[3, 1, 3, 1, 4], 1),
            (&[3, 1, 2, 2, 4], 1),
            (&[3, 1, 3, 5], 1),
            (&[3, 2, 2, 5], 1),
            (&[3, 1, 2, 1, 5], 1),
            (&[3, 1, 2, 6], 1),
        ])
    );
    assert_eq!(
        ncs_right_pieri(&alpha, 3, StripFlavor::Vertical, RightPieriForm::Simplified),
        sum(&[
            (&[3, 4, 3, 2], 1),
            (&[2, 4, 4, 2], 1),
            (&[1, 4, 4, 3], 1),
            (&[3, 3, 3, 2, 1], 1),
            (&[3, 2, 4, 2, 1], 1),
            (&[3, 1, 4, 3, 1], 1),
            (&[2, 1, 4, 4, 1], 1),
            (&[3, 3, 2, 2, 1, 1], 1),
            (&[3, 1, 3, 3, 1, 1], 1),
            (&[3, 1, 2, 4, 1, 1], 1),
            (&[3, 1, 3, 2, 1, 1, 1], 1),
        ])
    );

    let skew = SkewShape::new(c(&[1, 3, 2]), c(&[2, 1]));
    assert_eq!(
        qs_skew_pieri(&skew, 2, StripFlavor::Horizontal),
        skew_sum(&[
            (&[1, 3, 2], &[1], 1),
            (&[1, 1, 3, 2], &[2], -1),
            (&[1, 1, 3, 2], &[1, 1], -1),
            (&[1, 3, 1, 2], &[2], -1),
            (&[1, 3, 2, 1], &[1, 1], -1),
            (&[1, 3, 3], &[2], -1),
            (&[1, 3, 3], &[1, 1], -1),
            (&[1, 4, 2], &[2], -1),
            (&[1, 4, 2], &[1, 1], -1),
            (&[1, 1, 3, 3], &[2, 1], 1),
            (&[1, 1, 4, 2], &[2, 1], 1),
            (&[1, 3, 2, 2], &[2, 1], 1),
            (&[1, 3, 3, 1], &[2, 1], 1),
            (&[1, 4, 2, 1], &[2, 1], 1),
            (&[1, 4, 3], &[2, 1], 1),
            (&[1, 5, 2], &[2, 1], 1),
        ])
    );
    assert_eq!(
        qs_skew_pieri(&skew, 2, StripFlavor::Vertical),
        skew_sum(&[
            (&[1, 3, 2], &[1], 1),
            (&[1, 1, 3, 2], &[2], -1),
            (&[1, 1, 3, 2], &[1, 1], -1),
            (&[1, 3, 1, 2], &[2], -1),
            (&[1, 3, 2, 1], &[1, 1], -1),
            (&[1, 3, 3], &[2], -1),
            (&[1, 3, 3], &[1, 1], -1),
            (&[1, 4, 2], &[2], -1),
            (&[1, 4, 2], &[1, 1], -1),
            (&[1, 3, 1, 2, 1], &[2, 1], 1),
            (&[1, 1, 3, 2, 1], &[2, 1], 1),
            (&[1, 1, 1, 3, 2], &[2, 1], 1),
            (&[1, 3, 3, 1], &[2, 1], 1),
            (&[1, 1, 3, 3], &[2, 1], 1),
            (&[2, 3, 3], &[2, 1], 1),
            (&[1, 4, 2, 1], &[2, 1], 1),
            (&[1, 1, 4, 2], &[2, 1], 1),
            (&[1, 4, 3], &[2, 1], 1),
        ])
    );
}

#[test]
fn operator_relations_hold_exhaustively() {
    for report in verify_lemmas(5, 5) {
        assert_eq!(report.checked, 9331, "{}", report.name);
        assert_eq!(
            report.failures, 0,
            "{}: {:?}",
            report.name, report.first_failure
        );
    }
}

#[test]
fn graph_commutators_hold_through_size_seven() {
    for which in [
        GraphIdentity::RcQc,
        GraphIdentity::RcQct,
        GraphIdentity::LcQc,
        GraphIdentity::LcQct,
    ] {
        let report = verify_identity(which, 7);
        assert_eq!(report.checked, 128, "{which}");
        assert!(
            report.failures.is_empty(),
            "{which}: {:?}",
            report.failures.first()
        );
    }
}

#[test]
fn straight_pieri_expansions_match_quasi_shuffle_products() {
    for theorem in [PieriTheorem::QsRow, PieriTheorem::QsColumn] {
        let bounds = PieriBounds {
            max_size: 5,
            max_inner: 0,
            max_n: 3,
        };
        let report = verify_pieri_theorem(theorem, &bounds);
        assert_eq!(report.checked, 96, "{}", theorem.name());
        assert!(
            report.passed(),
            "{}: {:?}",
            theorem.name(),
            report.failures.first()
        );
    }

    // quasi-shuffle versus plain polynomial multiplication, faithful in six
    // variables for total degree at most six
    let mut rng = ChaCha8Rng::seed_from_u64(0xa1fa);
    let pick = |rng: &mut ChaCha8Rng, d: u32| {
        let all = compositions_of(d);
        all[rng.gen_range(0..all.len())].clone()
    };
    for _ in 0..50 {
        let da = rng.gen_range(0..=6u32);
        let db = rng.gen_range(0..=(6 - da));
        let a = QSymVector::basis_element(Basis::M, pick(&mut rng, da));
        let b = QSymVector::basis_element(Basis::M, pick(&mut rng, db));
        assert_eq!(
            to_polynomial(&product(&a, &b), 6),
            poly_mul(&to_polynomial(&a, 6), &to_polynomial(&b, 6)),
            "{:?} * {:?}",
            a.coeffs(),
            b.coeffs()
        );
    }
}

#[test]
fn skew_pieri_expansions_match_products() {
    for theorem in [PieriTheorem::QsSkewRow, PieriTheorem::QsSkewColumn] {
        let bounds = PieriBounds {
            max_size: 5,
            max_inner: 3,
            max_n: 2,
        };
        let report = verify_pieri_theorem(theorem, &bounds);
        assert_eq!(report.checked, 470, "{}", theorem.name());
        assert!(
            report.passed(),
            "{}: {:?}",
            theorem.name(),
            report.failures.first()
        );
    }
}

#[test]
fn right_pieri_forms_agree_and_match_skew_expansions() {
    for size in 0..=8 {
        for alpha in compositions_of(size) {
            for n in 1..=4 {
                for flavor in [StripFlavor::Horizontal, StripFlavor::Vertical] {
                    assert_eq!(
                        ncs_right_pieri(&alpha, n, flavor, RightPieriForm::Simplified),
                        ncs_right_pieri(&alpha, n, flavor, RightPieriForm::Jdt),
                        "{alpha}, n={n}, {flavor:?}"
                    );
                }
            }
        }
    }

    // the same product coefficient read three ways: from the expansion rule,
    // from the memoized pairing, and from a fresh skew-function expansion
    for size in 1..=6u32 {
        for gamma in compositions_of(size) {
            for n in 1..=size {
                for flavor in [StripFlavor::Horizontal, StripFlavor::Vertical] {
                    let mult = multiplier(n, flavor);
                    let skew =
                        expand_in_qs(&qs_in_f(&SkewShape::new(gamma.clone(), mult.clone())));
                    for alpha in compositions_of(size - n) {
                        let from_rule =
                            ncs_right_pieri(&alpha, n, flavor, RightPieriForm::Simplified)
                                .coeff(&gamma);
                        let paired = ncs_product_coefficient(&alpha, &mult, &gamma);
                        assert_eq!(from_rule, paired, "{alpha} * {mult} at {gamma}");
                        assert_eq!(
                            paired,
                            skew.coeffs.coeff(&alpha),
                            "{gamma} over {mult} at {alpha}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn noncommutative_skew_pieri_matches_coproduct_expansion() {
    for theorem in [PieriTheorem::NcsSkewRow, PieriTheorem::NcsSkewColumn] {
        let bounds = PieriBounds {
            max_size: 5,
            max_inner: 2,
            max_n: 2,
        };
        let report = verify_pieri_theorem(theorem, &bounds);
        assert_eq!(report.checked, 246, "{}", theorem.name());
        assert!(
            report.passed(),
            "{}: {:?}",
            theorem.name(),
            report.failures.first()
        );
    }
}

#[test]
fn skew_schur_pieri_matches_tableau_oracle() {
    for outer_size in 1..=5u32 {
        for lambda in partitions_of(outer_size) {
            for inner_size in 0..outer_size {
                for mu in partitions_of(inner_size) {
                    if mu.len() >= lambda.len()
                        || mu
                            .parts()
                            .iter()
                            .enumerate()
                            .any(|(r, &p)| lambda.parts()[r] < p)
                    {
                        continue;
                    }
                    for n in 1..=2u32 {
                        let nvars = (outer_size + n) as usize;
                        for flavor in [StripFlavor::Horizontal, StripFlavor::Vertical] {
                            let mult = multiplier(n, flavor);
                            let mut claimed: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
                            for (term, k) in skew_schur_pieri(&lambda, &mu, n, flavor).terms() {
                                for (e, count) in
                                    ssyt_skew_polynomial(&term.outer, &term.inner, nvars)
                                {
                                    *claimed.entry(e).or_insert(0) += k * count;
                                }
                            }
                            claimed.retain(|_, &mut v| v != 0);
                            let truth = poly_mul(
                                &ssyt_skew_polynomial(&lambda, &mu, nvars),
                                &ssyt_skew_polynomial(&mult, &Composition::empty(), nvars),
                            );
                            assert_eq!(claimed, truth, "{lambda}/{mu} * {mult}");
                        }
                        assert_eq!(
                            to_polynomial(&qs_in_f(&schur_embedding(&lambda, &mu)), nvars),
                            ssyt_skew_polynomial(&lambda, &mu, nvars),
                            "{lambda}/{mu} in {nvars} variables"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn chains_biject_with_standard_tableaux() {
    for size in 0..=6u32 {
        for alpha in compositions_of(size) {
            let chains = chains_l(&Composition::empty(), &alpha);
            let tableaux = standard_tableaux(&SkewShape::straight(alpha.clone()));
            assert_eq!(chains.len(), tableaux.len(), "{alpha}");
            let distinct: BTreeSet<_> = tableaux.iter().cloned().collect();
            assert_eq!(distinct.len(), tableaux.len(), "{alpha}");
        }
    }
}
