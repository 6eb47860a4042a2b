//! Exhaustive formula-vs-definition equivalence: for every valid presentation
//! up to a group-order bound, every closed-form quantity must equal the value
//! the brute-force oracle counts from the definitions.
//!
//! The CLI's `oracle-check` runs the same comparison up to order 150; this
//! suite keeps a slightly smaller bound so `cargo test` stays quick.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use zmdeg_core::{degrees, oracle, zm};

const MAX_ORDER: u64 = 100;

#[test]
fn formulas_match_oracle_up_to_bound() {
    let all = zm::enumerate_valid_params(MAX_ORDER);
    assert!(all.len() > 200, "expected a rich family, got {}", all.len());

    for params in &all {
        let table = oracle::build_group(params, oracle::DEFAULT_ELEMENT_BOUND)
            .expect("orders are within the bound");
        let subs = oracle::enumerate_subgroups(&table);
        let defs = oracle::definitional_degrees(&table, &subs);
        let rep = degrees::report(params);

        assert_eq!(rep.subgroups, BigUint::from(defs.subgroups), "|L| of {params}");
        assert_eq!(
            rep.cyclic_subgroups,
            BigUint::from(defs.cyclic_subgroups),
            "|L1| of {params}"
        );
        assert_eq!(rep.f2, BigUint::from(defs.f2), "f2 of {params}");
        assert_eq!(rep.cf2, BigUint::from(defs.cf2), "cf2 of {params}");
        assert_eq!(rep.sd, defs.sd, "sd of {params}");
        assert_eq!(rep.csd, defs.csd, "csd of {params}");

        // per-class: Eq-(2) class sizes against conjugation orbits, and the
        // local (cyclic) factorization counts against per-target pair counts
        for class in zm::conj_classes(params) {
            let rep_triple = zm::SubgroupTriple {
                m1: class.m1.clone(),
                n1: class.n1.clone(),
                s: BigUint::from(0u32),
            };
            let sub = oracle::triple_to_subgroup(params, &table, &rep_triple)
                .expect("representative generates at predicted order");
            let orbit = oracle::conjugacy_orbit(&table, &sub);
            assert_eq!(
                class.size,
                BigUint::from(orbit.len()),
                "class size ({},{}) of {params}",
                class.m1,
                class.n1
            );

            let idx = subs
                .iter()
                .position(|s| s.bits() == sub.bits())
                .expect("representative appears in the enumeration");
            assert_eq!(
                degrees::f_local(params, &class.m1, &class.n1),
                BigUint::from(defs.f2_by_subgroup[idx]),
                "f_local ({},{}) of {params}",
                class.m1,
                class.n1
            );
            assert_eq!(
                degrees::cf_local(params, &class.m1, &class.n1),
                BigUint::from(defs.cf2_by_subgroup[idx]),
                "cf_local ({},{}) of {params}",
                class.m1,
                class.n1
            );
        }
    }
}

#[test]
fn n_prime_fast_path_matches_general_formula() {
    for params in zm::enumerate_valid_params(MAX_ORDER) {
        if !zmdeg_core::arith::is_prime(params.n()) {
            continue;
        }
        let rep = degrees::report(&params);
        assert_eq!(rep.sd, degrees::sd_n_prime(params.m()), "sd fast path of {params}");
        assert_eq!(rep.csd, degrees::csd_n_prime(params.m()), "csd fast path of {params}");
    }
}

#[test]
fn dihedral_specialization_matches_independent_construction() {
    // ZM(m,2,m-1) is the dihedral group of order 2m; its degree statistics
    // must agree with the definitional counts on the independently built
    // rotation/reflection table.
    for m in (3u64..=15).step_by(2) {
        let params = zm::ZmParams::validate(m, 2u64, m - 1).unwrap();
        let rep = degrees::report(&params);
        let table = oracle::build_dihedral(m);
        let defs = oracle::definitional_degrees(&table, &oracle::enumerate_subgroups(&table));
        assert_eq!(rep.f2, BigUint::from(defs.f2), "f2 of D_{}", 2 * m);
        assert_eq!(rep.cf2, BigUint::from(defs.cf2), "cf2 of D_{}", 2 * m);
        assert_eq!(rep.sd, defs.sd, "sd of D_{}", 2 * m);
        assert_eq!(rep.csd, defs.csd, "csd of D_{}", 2 * m);
        assert_eq!(
            rep.subgroups.to_u64().unwrap() as usize,
            defs.subgroups,
            "|L| of D_{}",
            2 * m
        );
    }
}
