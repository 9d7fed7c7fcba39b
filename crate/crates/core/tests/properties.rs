mod common;

use proptest::prelude::*;
use ringlab::classify::{
    classify_ring, element_period, potent_nilpotent_decompose, uniform_period, ProfileOptions,
};
use ringlab::cli::expr::{parse_expr, AlgExpr, RingExpr, Scalar};
use ringlab::constructions::{AbelianGroupSpec, GroupSpec, Shape};
use ringlab::ring::validate_ring_axioms;
use ringlab::FiniteRing;

const SMALL: [&str; 18] = [
    "Z(4)",
    "Z(6)",
    "Z(8)",
    "Z(12)",
    "GF(2,2)",
    "GF(3,1)",
    "M(2, GF(2,1))",
    "T(2, Z(4))",
    "K(Z(4), s=2)",
    "MS(2, Z(2), s=0)",
    "GR(Z(2), C(2))",
    "GR(Z(3), C(2))",
    "GR(Z(2), S3)",
    "END(C(4)+C(2))",
    "IDZ(Z(4), [2])",
    "QUO(Z(12), [4])",
    "TEN(TRUNC(2,2), GF(2,2))",
    "Z(4) x Z(3)",
];

fn small_rings() -> Vec<FiniteRing> {
    SMALL
        .iter()
        .map(|t| parse_expr(t).unwrap().build(1024).unwrap())
        .collect()
}

fn ring_and_elem() -> impl Strategy<Value = (usize, u32)> {
    (0..SMALL.len(), any::<u32>())
}

fn group() -> impl Strategy<Value = GroupSpec> {
    let leaf = prop_oneof![
        (1u64..9).prop_map(GroupSpec::Cyclic),
        (3u64..6).prop_map(GroupSpec::Dihedral),
        Just(GroupSpec::S3),
    ];
    leaf.prop_recursive(2, 4, 3, |inner| {
        prop::collection::vec(inner, 2..4).prop_map(GroupSpec::Product)
    })
}

fn alg() -> impl Strategy<Value = AlgExpr> {
    let leaf = prop_oneof![
        (2u64..10).prop_map(AlgExpr::Cyclic),
        (2u64..4, 1usize..3).prop_map(|(p, k)| AlgExpr::Galois([2, 3, 5][p as usize - 2], k)),
        (2u64..5, 1usize..4).prop_map(|(c, k)| AlgExpr::Truncated(c, k)),
    ];
    leaf.prop_recursive(2, 4, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| AlgExpr::Tensor(Box::new(a), Box::new(b)))
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        (0i64..20).prop_map(Scalar::Int),
        (0u32..9).prop_map(Scalar::Index)
    ]
}

fn expr() -> impl Strategy<Value = RingExpr> {
    let leaf = prop_oneof![
        (1u64..40).prop_map(RingExpr::Cyclic),
        (0usize..3, 1u32..4).prop_map(|(p, k)| RingExpr::Galois([2, 3, 5][p], k)),
        prop::collection::vec(2u64..9, 1..3)
            .prop_map(|v| RingExpr::Endo(AbelianGroupSpec::new(v).unwrap())),
        (alg(), alg()).prop_map(|(a, b)| RingExpr::Tensor(a, b)),
    ];
    leaf.prop_recursive(3, 12, 3, |inner| {
        let b = |r: RingExpr| Box::new(r);
        let gens = || prop::collection::vec(0u32..9, 0..3);
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(RingExpr::Product),
            (1usize..4, inner.clone()).prop_map(move |(n, r)| RingExpr::Matrix(
                n,
                Shape::Full,
                b(r)
            )),
            (1usize..4, inner.clone()).prop_map(move |(n, r)| RingExpr::Matrix(
                n,
                Shape::UpperTriangular,
                b(r)
            )),
            (inner.clone(), scalar()).prop_map(move |(r, s)| RingExpr::FormalK(b(r), s)),
            (2usize..4, inner.clone(), scalar()).prop_map(move |(n, r, s)| RingExpr::FormalMs(
                n,
                b(r),
                s
            )),
            (inner.clone(), group()).prop_map(move |(r, g)| RingExpr::GroupRing(b(r), g)),
            (inner.clone(), gens()).prop_map(move |(r, g)| RingExpr::Idealization(b(r), g)),
            (inner.clone(), gens()).prop_map(move |(r, g)| RingExpr::Quotient(b(r), g)),
            (inner, gens(), gens()).prop_map(move |(r, m, n)| RingExpr::Morita(b(r), m, n)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn printed_expressions_parse_back(e in expr()) {
        let text = e.to_string();
        let back = parse_expr(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, e);
    }

    #[test]
    fn decomposition_is_sound((i, raw) in ring_and_elem()) {
        let rings = small_rings();
        let r = &rings[i];
        let x = raw % r.order() as u32;
        let d = potent_nilpotent_decompose(r, x);
        let p = element_period(r, x);
        prop_assert_eq!(r.add(d.a, d.b), x);
        prop_assert_eq!(r.pow(d.b, p.period + 1), d.b);
        prop_assert_eq!(r.pow(d.a, p.index), r.zero());
        prop_assert_eq!(r.mul(d.a, d.b), r.zero());
        prop_assert_eq!(r.mul(d.b, d.a), r.zero());
    }

    #[test]
    fn periods_are_minimal((i, raw) in ring_and_elem()) {
        let rings = small_rings();
        let r = &rings[i];
        let x = raw % r.order() as u32;
        let p = element_period(r, x);
        let (n, k) = (p.index, p.period);
        prop_assert_eq!(r.pow(x, n + k), r.pow(x, n));
        for k2 in 1..k {
            prop_assert_ne!(r.pow(x, n + k2), r.pow(x, n));
        }
        if n > 1 {
            for k2 in 1..=k * r.order() as u64 {
                prop_assert_ne!(r.pow(x, n - 1 + k2), r.pow(x, n - 1));
            }
        }
    }

    #[test]
    fn uniform_period_bounds_every_element((i, raw) in ring_and_elem()) {
        let rings = small_rings();
        let r = &rings[i];
        let u = uniform_period(r);
        let x = raw % r.order() as u32;
        let p = element_period(r, x);
        prop_assert!(p.index <= u.index);
        prop_assert_eq!(u.period % p.period, 0);
        prop_assert_eq!(r.pow(x, u.index + u.period), r.pow(x, u.index));
    }

    #[test]
    fn radical_elements_are_quasi_regular((i, raw) in ring_and_elem()) {
        let rings = small_rings();
        let r = &rings[i];
        let j = r.jacobson_radical();
        let members = j.set.members();
        let y = members[raw as usize % members.len()];
        prop_assert!(r.is_nilpotent(y));
        prop_assert!(r.is_unit(r.add(r.one(), y)));
        for z in r.elements() {
            prop_assert!(j.set.contains(r.mul(z, y)) && j.set.contains(r.mul(y, z)));
        }
    }
}

#[test]
fn small_constructions_satisfy_the_axioms() {
    for r in small_rings() {
        let rep = validate_ring_axioms(&r);
        assert!(rep.violation.is_none(), "{}: {:?}", r.expr(), rep.violation);
    }
}

#[test]
fn quotient_by_the_radical_is_semisimple() {
    // R/J is a product of matrix rings over fields, so it is potent exactly
    // when those are fields, which is forced in the commutative case.
    for r in small_rings() {
        let q = r.quotient_by_radical().unwrap();
        let p = classify_ring(&q.ring, ProfileOptions::default());
        assert_eq!(p.radical_size, 1, "{}", r.expr());
        if r.is_commutative() {
            assert_eq!(p.holds("potent"), Some(true), "{}", r.expr());
        }
    }
    let m2 = parse_expr("M(2, GF(2,1))").unwrap().build(64).unwrap();
    let q = m2.quotient_by_radical().unwrap();
    assert_eq!(q.ring.order(), 16);
    assert_eq!(
        classify_ring(&q.ring, ProfileOptions::default()).holds("potent"),
        Some(false)
    );
}

#[test]
fn reference_tables_agree_on_small_cyclic_rings() {
    for n in 2..=16u32 {
        let t = common::zn(n);
        let r = parse_expr(&format!("Z({n})")).unwrap().build(64).unwrap();
        let map: Vec<u32> = (0..n).collect();
        common::same_ring(&r, &t, &map).unwrap();
        let lj: Vec<u32> = r.jacobson_radical().set.members().to_vec();
        let oj: Vec<u32> = t.radical().into_iter().collect();
        assert_eq!(lj, oj, "Z({n})");
    }
}
