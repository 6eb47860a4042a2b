//! Structural laws of the subgroup-lattice model, checked against the
//! brute-force oracle: the triple bijection, subgroup orders, cyclicity
//! agreement, conjugacy-by-order and the class-level meet law.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;
use zmdeg_core::{oracle, zm, ZmParams};

const MAX_ORDER: u64 = 60;

fn tables() -> Vec<(ZmParams, oracle::GroupTable)> {
    zm::enumerate_valid_params(MAX_ORDER)
        .into_iter()
        .map(|p| {
            let t = oracle::build_group(&p, oracle::DEFAULT_ELEMENT_BOUND).unwrap();
            (p, t)
        })
        .collect()
}

#[test]
fn triples_biject_onto_subgroups() {
    for (params, table) in tables() {
        let triples = zm::enumerate_triples(&params);
        let subs = oracle::enumerate_subgroups(&table);
        assert_eq!(triples.len(), subs.len(), "|L| of {params}");

        let mut generated = HashSet::new();
        for t in &triples {
            let sub = oracle::triple_to_subgroup(&params, &table, t)
                .unwrap_or_else(|e| panic!("{params}: {e}"));
            // order formula mn/(m1*n1)
            assert_eq!(
                BigUint::from(sub.len()),
                t.subgroup_order(&params),
                "order of {t} in {params}"
            );
            // cyclicity of the triple agrees with the oracle subgroup
            assert_eq!(
                zm::is_cyclic_triple(&params, t),
                sub.is_cyclic(),
                "cyclicity of {t} in {params}"
            );
            assert!(generated.insert(sub.bits().clone()), "duplicate subgroup from {t}");
        }
        let enumerated: HashSet<_> = subs.iter().map(|s| s.bits().clone()).collect();
        assert_eq!(generated, enumerated, "bijection for {params}");
    }
}

#[test]
fn conjugate_iff_same_order() {
    for (params, table) in tables() {
        let subs = oracle::enumerate_subgroups(&table);
        for sub in &subs {
            let orbit = oracle::conjugacy_orbit(&table, sub);
            let same_order = subs.iter().filter(|s| s.len() == sub.len()).count();
            assert_eq!(orbit.len(), same_order, "orbit at order {} in {params}", sub.len());
            for other in subs.iter().filter(|s| s.len() == sub.len()) {
                assert!(orbit.contains(other.bits()), "order-{} conjugacy in {params}", sub.len());
            }
        }
    }
}

#[test]
fn class_meet_law_on_representatives() {
    // H(m_i,n_i,0) meet H(m_j,n_j,0) is exactly H(lcm(m_i,m_j), lcm(n_i,n_j), 0)
    for (params, table) in tables() {
        let classes = zm::conj_classes(&params);
        let rep = |m1: &BigUint, n1: &BigUint| {
            let t = zm::SubgroupTriple { m1: m1.clone(), n1: n1.clone(), s: BigUint::from(0u32) };
            oracle::triple_to_subgroup(&params, &table, &t).unwrap()
        };
        for a in &classes {
            for b in &classes {
                let meet = rep(&a.m1.lcm(&b.m1), &a.n1.lcm(&b.n1));
                let inter = rep(&a.m1, &a.n1).bits().intersection(rep(&b.m1, &b.n1).bits());
                assert_eq!(
                    &inter,
                    meet.bits(),
                    "meet of ({},{}) and ({},{}) in {params}",
                    a.m1,
                    a.n1,
                    b.m1,
                    b.n1
                );
            }
        }
    }
}

#[test]
fn lagrange_and_count_consistency() {
    for (params, table) in tables() {
        let subs = oracle::enumerate_subgroups(&table);
        for s in &subs {
            assert_eq!(table.order() % s.len(), 0, "Lagrange in {params}");
        }
        let cyclic = subs.iter().filter(|s| s.is_cyclic()).count();
        assert_eq!(
            zm::count_cyclic_subgroups(&params).to_usize().unwrap(),
            cyclic,
            "|L1| of {params}"
        );
        assert!(cyclic <= subs.len());
    }
}
