mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use quandlekit::axioms::{
    check_bondle, check_law, check_osq, check_quandle, check_stuquandle, classify, BondleMode,
    OsqMode, StuquandleMode,
};
use quandlekit::constructions::{affine_mesh, dihedral_quandle};
use quandlekit::enumerate::{
    are_isomorphic, canonical_form, enumerate_quandles, enumerate_quandles_with_column_order,
};
use quandlekit::format::{bundle_to_json, parse_bundle};
use quandlekit::tables::{is_abelian, opposite, power_op, right_translation};
use quandlekit::{Law, OpTable, Perm, Role, StructureBundle};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rq_table(max: usize) -> impl Strategy<Value = OpTable> {
    (1..=max).prop_flat_map(|n| {
        let column = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        proptest::collection::vec(column, n)
            .prop_map(move |cols| OpTable::from_fn(n, |x, y| cols[y][x]).unwrap())
    })
}

fn any_table(n: usize) -> impl Strategy<Value = OpTable> {
    proptest::collection::vec(0..n, n * n).prop_map(move |v| OpTable::new(n, v).unwrap())
}

/// A random quandle of order ≤ 4 with random `dot`, `circ` and `bullet`.
fn loaded_bundle() -> impl Strategy<Value = StructureBundle> {
    let quandles: Vec<StructureBundle> = (1..=4)
        .flat_map(|n| enumerate_quandles(n).unwrap().entries)
        .collect();
    proptest::sample::select(quandles).prop_flat_map(|q| {
        let n = q.order();
        (Just(q), any_table(n), any_table(n), any_table(n)).prop_map(|(q, d, c, b)| {
            q.with(Role::Dot, d)
                .unwrap()
                .with(Role::Circ, c)
                .unwrap()
                .with(Role::Bullet, b)
                .unwrap()
        })
    })
}

proptest! {
    #[test]
    fn right_inverse_is_an_involution(t in rq_table(6)) {
        let inv = t.derive_right_inverse().unwrap();
        prop_assert_eq!(inv.derive_right_inverse().unwrap(), t.clone());
        for x in 0..t.order() {
            for y in 0..t.order() {
                prop_assert_eq!(inv.get(t.get(x, y), y), x);
            }
        }
    }

    #[test]
    fn powers_act_as_translation_powers(t in rq_table(6), k in -5i64..=5) {
        let p = power_op(&t, k).unwrap();
        for y in 0..t.order() {
            prop_assert_eq!(right_translation(&p, y).unwrap(), right_translation(&t, y).unwrap().pow(k));
        }
    }

    #[test]
    fn opposite_is_an_involution(t in (1usize..=5).prop_flat_map(any_table)) {
        prop_assert_eq!(opposite(&opposite(&t)), t);
    }

    #[test]
    fn rmlt_group_is_closed(t in rq_table(6)) {
        let g = t.rmlt_group().unwrap();
        let elements: BTreeSet<Perm> = g.elements().iter().cloned().collect();
        prop_assert!(elements.contains(&Perm::identity(t.order())));
        for a in &elements {
            for b in &elements {
                prop_assert!(elements.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn failing_reports_reproduce(b in loaded_bundle()) {
        let mut reports = vec![check_quandle(&b)];
        for m in [OsqMode::Full, OsqMode::Reduced] {
            reports.push(check_osq(&b, m).unwrap());
        }
        for m in [StuquandleMode::Binops, StuquandleMode::Rmaps, StuquandleMode::Corollary] {
            reports.push(check_stuquandle(&b, m).unwrap());
        }
        for m in [BondleMode::Binops, BondleMode::Rmaps, BondleMode::Theorem] {
            reports.push(check_bondle(&b, m).unwrap());
        }
        for r in reports {
            if let Some(f) = r.failure() {
                let (lhs, rhs) = f.sides(&b).expect("bundle holds the roles");
                prop_assert_ne!(lhs, rhs, "{}", f);
                prop_assert!(f.reproduces(&b));
            }
        }
    }

    #[test]
    fn emitted_bundles_reparse(b in loaded_bundle()) {
        let text = bundle_to_json(&b, None);
        prop_assert!(text.ends_with('\n'));
        let (again, _) = parse_bundle(&text).unwrap();
        prop_assert_eq!(bundle_to_json(&again, None), text);
        prop_assert_eq!(again, b);
    }
}

#[test]
fn abelian_rmlt_survives_powers() {
    for n in 1..=5 {
        for q in enumerate_quandles(n).unwrap().entries {
            let t = q.star();
            if !is_abelian(&t.rmlt_group().unwrap()) {
                continue;
            }
            for k in -3..=3 {
                assert!(
                    is_abelian(&t.power(k).unwrap().rmlt_group().unwrap()),
                    "{:?}^{k}",
                    t.rows()
                );
            }
        }
    }
}

#[test]
fn st5_forms_are_equivalent() {
    for n in 1..=3 {
        for q in enumerate_quandles(n).unwrap().entries {
            for circ in all_tables(n) {
                let b = bundle(q.star(), &[(Role::Circ, &circ)]);
                let first = check_law(&b, Law::St5Prime, Role::Circ).unwrap().is_ok();
                let second = check_law(&b, Law::St5Second, Role::Circ).unwrap().is_ok();
                assert_eq!(first, second, "{:?} {:?}", q.star().rows(), circ.rows());
            }
        }
    }
}

#[test]
fn osq_duality() {
    for n in 1..=5 {
        for q in enumerate_quandles(n).unwrap().entries {
            let star = q.star();
            let slash = q.slash().unwrap();
            let forward = bundle(star, &[(Role::Dot, star)]);
            let backward = StructureBundle::with_slash(slash.clone(), star.clone())
                .unwrap()
                .with(Role::Dot, slash.clone())
                .unwrap();
            assert_eq!(
                check_osq(&forward, OsqMode::Full).unwrap().is_ok(),
                check_osq(&backward, OsqMode::Full).unwrap().is_ok(),
                "{:?}",
                star.rows()
            );
        }
    }
}

#[test]
fn projection_facts_at_order_three() {
    let proj = OpTable::projection(3).unwrap();
    for t in all_tables(3) {
        assert!(check_osq(&bundle(&proj, &[(Role::Dot, &t)]), OsqMode::Full)
            .unwrap()
            .is_ok());
    }
}

#[test]
fn dihedral_quandles_are_their_own_dot() {
    for n in 1..=8 {
        let d = dihedral_quandle(n).unwrap();
        assert!(classify(d.star()).involutory);
        let b = d.clone().with(Role::Dot, d.star().clone()).unwrap();
        assert!(check_osq(&b, OsqMode::Full).unwrap().is_ok(), "n = {n}");
    }
}

#[test]
fn meshes_are_two_reductive_with_abelian_rmlt() {
    let battery = mesh_battery();
    assert!(battery.len() > 30);
    for spec in battery {
        let q = affine_mesh(&spec, false).unwrap();
        assert!(check_quandle(&q).is_ok());
        let c = classify(q.star());
        assert!(c.two_reductive, "{spec:?}");
        assert!(is_abelian(&q.star().rmlt_group().unwrap()), "{spec:?}");
        assert!(naive_rmlt_abelian(q.star()));
    }
}

#[test]
fn catalogs_are_valid_and_pairwise_distinct() {
    for n in 1..=5 {
        let catalog = enumerate_quandles(n).unwrap();
        for (i, a) in catalog.entries.iter().enumerate() {
            assert!(check_quandle(a).is_ok());
            for b in &catalog.entries[i + 1..] {
                assert!(!are_isomorphic(a, b).unwrap());
            }
        }
    }
}

#[test]
fn canonical_form_is_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 1..=5 {
        for b in enumerate_quandles(n).unwrap().entries {
            for _ in 0..100 {
                let mut images: Vec<usize> = (0..n).collect();
                images.shuffle(&mut rng);
                let sigma = Perm::new(images).unwrap();
                assert_eq!(canonical_form(&b.relabel(&sigma)).unwrap(), b);
            }
        }
    }
}

#[test]
fn canonical_form_matches_naive_minimum() {
    let perms = permutations(4);
    for b in enumerate_quandles(4).unwrap().entries {
        let flat: Vec<usize> = b.flat_key().iter().map(|&v| v as usize).collect();
        assert_eq!(naive_canonical_key(4, &flat, &perms), flat);
    }
}

#[test]
fn enumeration_is_stable() {
    for n in 1..=5 {
        let a = enumerate_quandles(n).unwrap();
        assert_eq!(a, enumerate_quandles(n).unwrap());
        let mut order: Vec<usize> = (0..n).collect();
        order.rotate_left(n / 2);
        assert_eq!(a, enumerate_quandles_with_column_order(n, &order).unwrap());
    }
}
