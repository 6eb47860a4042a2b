//! Brute-force ground truth: builds the group explicitly from its
//! presentation, enumerates every subgroup by closure, and counts permuting
//! pairs and factorizations directly from the definitions.
//!
//! The construction here is deliberately independent of the subgroup-triple
//! parametrization and the closed-form counting formulas it validates.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::zm::{SubgroupTriple, ZmParams};

/// Default cap on the number of elements an oracle table may hold.
pub const DEFAULT_ELEMENT_BOUND: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("group order {order} exceeds oracle element bound {bound}")]
    BoundExceeded { order: BigUint, bound: usize },
    #[error("triple ({m1},{n1},{s}) generated a subgroup of size {actual}, expected {expected}")]
    GenerationMismatch {
        m1: BigUint,
        n1: BigUint,
        s: BigUint,
        expected: usize,
        actual: usize,
    },
}

/// Dense set of element indices backed by machine words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn with_capacity(n: usize) -> Self {
        BitSet { words: vec![0; n.div_ceil(64)] }
    }

    fn insert(&mut self, i: u32) -> bool {
        let (w, b) = (i as usize / 64, i % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, i: u32) -> bool {
        self.words[i as usize / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn is_subset_of(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// Ascending element indices.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(w, bits)| {
            let mut bits = *bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some(w as u32 * 64 + b)
                }
            })
        })
    }
}

/// Complete composition table of a finite group; element 0 is the identity.
#[derive(Debug, Clone)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.mul[x as usize * self.order + y as usize]
    }

    pub fn inv(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }

    /// Wraps a raw table after verifying the group axioms: identity and
    /// inverses exhaustively, associativity on 1000 deterministic
    /// pseudo-random triples.
    fn verified(order: usize, mul: Vec<u32>) -> Self {
        for x in 0..order as u32 {
            assert_eq!(mul[x as usize], x, "identity fails on the left of {x}");
            assert_eq!(mul[x as usize * order], x, "identity fails on the right of {x}");
        }
        let mut inv = vec![0u32; order];
        for x in 0..order {
            let y = (0..order)
                .find(|&y| mul[x * order + y] == 0)
                .expect("every element must have an inverse");
            inv[x] = y as u32;
        }
        let table = GroupTable { order, mul, inv };
        let mut state = 0x9e3779b97f4a7c15u64 ^ order as u64;
        for _ in 0..1000 {
            let x = (splitmix64(&mut state) % order as u64) as u32;
            let y = (splitmix64(&mut state) % order as u64) as u32;
            let z = (splitmix64(&mut state) % order as u64) as u32;
            assert_eq!(
                table.mul(table.mul(x, y), z),
                table.mul(x, table.mul(y, z)),
                "associativity fails on ({x},{y},{z})"
            );
        }
        table
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Builds `ZM(m,n,r)` explicitly. Elements are `b^j a^i` indexed densely as
/// `j*m + i`, composed by `(j1,i1)*(j2,i2) = (j1+j2, i1*r^j2 + i2)` with the
/// exponents reduced mod `n` and `m`; the twist comes from `b^-1 a b = a^r`.
pub fn build_group(params: &ZmParams, bound: usize) -> Result<GroupTable, OracleError> {
    let order_big = params.order();
    if order_big > BigUint::from(bound) {
        return Err(OracleError::BoundExceeded { order: order_big, bound });
    }
    let m = params.m().to_u64().expect("m fits after bound check");
    let n = params.n().to_u64().expect("n fits after bound check");
    let r = params.r().to_u64().expect("r < m fits");
    let order = (m * n) as usize;

    let mut rpow = vec![1u64 % m.max(1); n as usize];
    for j in 1..n as usize {
        rpow[j] = rpow[j - 1] * r % m;
    }

    let mut mul = vec![0u32; order * order];
    for j1 in 0..n {
        for i1 in 0..m {
            let x = (j1 * m + i1) as usize;
            for j2 in 0..n {
                for i2 in 0..m {
                    let j = (j1 + j2) % n;
                    let i = (i1 * rpow[j2 as usize] + i2) % m;
                    mul[x * order + (j2 * m + i2) as usize] = (j * m + i) as u32;
                }
            }
        }
    }
    Ok(GroupTable::verified(order, mul))
}

/// Builds the dihedral group of order `2m` from its own rotation/reflection
/// law, independent of the ZM composition: element `e*m + a` is the rotation
/// by `a` steps, reflected if `e = 1`, and
/// `(e1,a1)*(e2,a2) = (e1 xor e2, (-1)^e2 * a1 + a2)`.
///
/// Panics if `m` is even or below 3.
pub fn build_dihedral(m: u64) -> GroupTable {
    assert!(m >= 3 && m % 2 == 1, "build_dihedral: m must be odd and >= 3");
    let order = (2 * m) as usize;
    let mut mul = vec![0u32; order * order];
    for e1 in 0..2u64 {
        for a1 in 0..m {
            let x = (e1 * m + a1) as usize;
            for e2 in 0..2u64 {
                for a2 in 0..m {
                    let e = e1 ^ e2;
                    let a = (if e2 == 1 { m - a1 } else { a1 } + a2) % m;
                    mul[x * order + (e2 * m + a2) as usize] = (e * m + a) as u32;
                }
            }
        }
    }
    GroupTable::verified(order, mul)
}

/// One subgroup as a canonical ascending element list plus its bitset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupSet {
    elems: Vec<u32>,
    bits: BitSet,
    cyclic: bool,
}

impl SubgroupSet {
    fn from_bits(bits: BitSet, cyclic: bool) -> Self {
        SubgroupSet { elems: bits.iter().collect(), bits, cyclic }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    /// True if some single element generates the whole subgroup.
    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }
}

/// Closes `seed` (plus the identity) under composition. In a finite group a
/// nonempty product-closed subset is a subgroup, so no inverse step is
/// needed.
fn close_under_product(table: &GroupTable, seed: &[u32]) -> BitSet {
    let mut bits = BitSet::with_capacity(table.order());
    let mut elems: Vec<u32> = Vec::new();
    bits.insert(0);
    elems.push(0);
    for &x in seed {
        if bits.insert(x) {
            elems.push(x);
        }
    }
    let mut next = 0;
    while next < elems.len() {
        let x = elems[next];
        next += 1;
        let mut i = 0;
        while i < elems.len() {
            let y = elems[i];
            i += 1;
            let xy = table.mul(x, y);
            if bits.insert(xy) {
                elems.push(xy);
            }
            let yx = table.mul(y, x);
            if bits.insert(yx) {
                elems.push(yx);
            }
        }
    }
    bits
}

/// All subgroups: the cyclic subgroups `<x>` of every element, closed under
/// pairwise joins until fixpoint, canonically ordered by size then element
/// list.
pub fn enumerate_subgroups(table: &GroupTable) -> Vec<SubgroupSet> {
    let mut seen: HashMap<BitSet, bool> = HashMap::new(); // bits -> is cyclic seed
    let mut worklist: Vec<BitSet> = Vec::new();

    for x in 0..table.order() as u32 {
        let mut bits = BitSet::with_capacity(table.order());
        bits.insert(0);
        let mut p = x;
        while bits.insert(p) {
            p = table.mul(p, x);
        }
        if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(bits.clone()) {
            e.insert(true);
            worklist.push(bits);
        }
    }

    let mut i = 0;
    while i < worklist.len() {
        for j in 0..i {
            let (a, b) = (&worklist[i], &worklist[j]);
            if a.is_subset_of(b) || b.is_subset_of(a) {
                continue;
            }
            let seed: Vec<u32> = a.iter().chain(b.iter()).collect();
            let join = close_under_product(table, &seed);
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(join.clone()) {
                e.insert(false);
                worklist.push(join);
            }
        }
        i += 1;
    }

    let mut subs: Vec<SubgroupSet> = seen
        .into_iter()
        .map(|(bits, cyclic)| SubgroupSet::from_bits(bits, cyclic))
        .collect();
    subs.sort_by(|a, b| (a.len(), &a.elems).cmp(&(b.len(), &b.elems)));
    subs
}

/// Product set `HK = {h*k}` as a bitset.
fn product_set(table: &GroupTable, h: &[u32], k: &[u32]) -> BitSet {
    let mut bits = BitSet::with_capacity(table.order());
    for &x in h {
        for &y in k {
            bits.insert(table.mul(x, y));
        }
    }
    bits
}

/// Whether `H` and `K` permute, i.e. the product sets `HK` and `KH` coincide.
pub fn permutes(table: &GroupTable, h: &SubgroupSet, k: &SubgroupSet) -> bool {
    product_set(table, &h.elems, &k.elems) == product_set(table, &k.elems, &h.elems)
}

/// The subgroup `<a^m1, b^n1 a^s>` generated from a lattice triple, verified
/// against its predicted order `mn/(m1*n1)`.
pub fn triple_to_subgroup(
    params: &ZmParams,
    table: &GroupTable,
    t: &SubgroupTriple,
) -> Result<SubgroupSet, OracleError> {
    let m = params.m().to_u64().expect("table was built, so m fits");
    let n = params.n().to_u64().expect("table was built, so n fits");
    let m1 = t.m1.to_u64().expect("m1 <= m");
    let n1 = t.n1.to_u64().expect("n1 <= n");
    let s = t.s.to_u64().expect("s < m1");

    let gen_a = (m1 % m) as u32; // (0, m1): a^m1
    let gen_b = ((n1 % n) * m + s) as u32; // (n1, s): b^n1 a^s
    let bits = close_under_product(table, &[gen_a, gen_b]);

    let expected = t
        .subgroup_order(params)
        .to_usize()
        .expect("subgroup order fits");
    if bits.len() != expected {
        return Err(OracleError::GenerationMismatch {
            m1: t.m1.clone(),
            n1: t.n1.clone(),
            s: t.s.clone(),
            expected,
            actual: bits.len(),
        });
    }
    let cyclic = (0..table.order() as u32).any(|x| {
        if !bits.contains(x) {
            return false;
        }
        let mut count = 1u32;
        let mut p = x;
        while p != 0 {
            p = table.mul(p, x);
            count += 1;
        }
        count as usize == bits.len()
    });
    Ok(SubgroupSet::from_bits(bits, cyclic))
}

/// Conjugation orbit `{ gHg^-1 : g in G }` of a subgroup, as deduplicated
/// bitsets.
pub fn conjugacy_orbit(table: &GroupTable, h: &SubgroupSet) -> Vec<BitSet> {
    let mut orbit: Vec<BitSet> = Vec::new();
    for g in 0..table.order() as u32 {
        let gi = table.inv(g);
        let mut bits = BitSet::with_capacity(table.order());
        for &x in &h.elems {
            bits.insert(table.mul(table.mul(g, x), gi));
        }
        if !orbit.contains(&bits) {
            orbit.push(bits);
        }
    }
    orbit
}

/// Everything the definitional pair sweep yields in one pass: lattice sizes,
/// permuting-pair degrees, global factorization numbers and the per-subgroup
/// factorization counts (`f2_by_subgroup[i]` counts ordered pairs whose
/// product set equals subgroup `i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinitionalDegrees {
    pub subgroups: usize,
    pub cyclic_subgroups: usize,
    pub f2: u64,
    pub cf2: u64,
    pub sd: BigRational,
    pub csd: BigRational,
    pub f2_by_subgroup: Vec<u64>,
    pub cf2_by_subgroup: Vec<u64>,
}

/// Runs the definitional sweep over all ordered subgroup pairs.
///
/// A product set `HK` is a subgroup exactly when `HK = KH`, and then
/// `KH = (HK)^-1 = HK`, so each unordered pair is computed once and counted
/// for both orders.
pub fn definitional_degrees(table: &GroupTable, subs: &[SubgroupSet]) -> DefinitionalDegrees {
    let index: HashMap<&BitSet, usize> = subs.iter().enumerate().map(|(i, s)| (&s.bits, i)).collect();
    let count = subs.len();
    let cyclic_count = subs.iter().filter(|s| s.cyclic).count();

    let mut permuting = 0u64;
    let mut cyclic_permuting = 0u64;
    let mut f2_by = vec![0u64; count];
    let mut cf2_by = vec![0u64; count];

    for i in 0..count {
        // HH = H: the diagonal pair always permutes and factorizes H
        permuting += 1;
        f2_by[i] += 1;
        if subs[i].cyclic {
            cyclic_permuting += 1;
            cf2_by[i] += 1;
        }
        for j in i + 1..count {
            let p = product_set(table, &subs[i].elems, &subs[j].elems);
            if let Some(&target) = index.get(&p) {
                permuting += 2;
                f2_by[target] += 2;
                if subs[i].cyclic && subs[j].cyclic {
                    cyclic_permuting += 2;
                    cf2_by[target] += 2;
                }
            }
        }
    }

    let whole = subs
        .iter()
        .position(|s| s.len() == table.order())
        .expect("the whole group is one of its subgroups");
    DefinitionalDegrees {
        subgroups: count,
        cyclic_subgroups: cyclic_count,
        f2: f2_by[whole],
        cf2: cf2_by[whole],
        sd: u64_ratio(permuting, (count * count) as u64),
        csd: u64_ratio(cyclic_permuting, (cyclic_count * cyclic_count) as u64),
        f2_by_subgroup: f2_by,
        cf2_by_subgroup: cf2_by,
    }
}

fn u64_ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Definitional subgroup commutativity degree of the table's group.
pub fn sd_oracle(table: &GroupTable) -> BigRational {
    definitional_degrees(table, &enumerate_subgroups(table)).sd
}

/// Definitional cyclic subgroup commutativity degree.
pub fn csd_oracle(table: &GroupTable) -> BigRational {
    definitional_degrees(table, &enumerate_subgroups(table)).csd
}

/// Definitional factorization number.
pub fn f2_oracle(table: &GroupTable) -> BigUint {
    definitional_degrees(table, &enumerate_subgroups(table)).f2.into()
}

/// Definitional cyclic factorization number.
pub fn cf2_oracle(table: &GroupTable) -> BigUint {
    definitional_degrees(table, &enumerate_subgroups(table)).cf2.into()
}
