//! ZM-group presentations and the combinatorial model of their subgroup
//! lattice.
//!
//! A ZM-group is a finite group whose Sylow subgroups are all cyclic. It is
//! presented as `ZM(m,n,r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>` subject
//! to `gcd(m,n) = gcd(m,r-1) = 1` and `r^n = 1 (mod m)`, which force `m` odd.
//! Its subgroups correspond bijectively to triples `(m1, n1, s)` with
//! `m1 | m`, `n1 | n`, `0 <= s < m1` and `m1 | s*(r^n-1)/(r^n1-1)`; the
//! subgroup for a triple is `H(m1,n1,s) = <a^m1, b^n1 a^s>` of order
//! `mn/(m1*n1)`, and the subgroups of a fixed order form a single conjugacy
//! class of size `gcd(m1, (r^n-1)/(r^n1-1))`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{divisors, pow_mod, quotient_gcd};

/// One violated validity condition of a candidate presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `gcd(m, n) != 1`.
    MnNotCoprime { gcd: BigUint },
    /// `gcd(m, r - 1) != 1` (checked only for non-degenerate `n > 1`).
    RMinusOneNotCoprime { gcd: BigUint },
    /// `r^n != 1 (mod m)`.
    OrderNotOne { residue: BigUint },
    /// `m` is even; the validity conditions force `m` odd.
    EvenM,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MnNotCoprime { gcd } => write!(f, "coprimality violation: gcd(m, n) = {gcd} != 1"),
            Violation::RMinusOneNotCoprime { gcd } => {
                write!(f, "coprimality violation: gcd(m, r-1) = {gcd} != 1")
            }
            Violation::OrderNotOne { residue } => {
                write!(f, "order violation: r^n = {residue} != 1 (mod m)")
            }
            Violation::EvenM => write!(f, "m is even"),
        }
    }
}

/// Rejection of a candidate `(m, n, r)`, listing every violated condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct InvalidPresentation {
    pub m: BigUint,
    pub n: BigUint,
    pub r: BigUint,
    pub violations: Vec<Violation>,
}

impl fmt::Display for InvalidPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid ZM presentation ({}, {}, {}):", self.m, self.n, self.r)?;
        for v in &self.violations {
            write!(f, " [{v}]")?;
        }
        Ok(())
    }
}

/// A validated ZM-group presentation triple.
///
/// `r` is stored reduced mod `m`; the degenerate cyclic presentations `m = 1`
/// and `n = 1` are accepted with canonical `r = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZmParams {
    m: BigUint,
    n: BigUint,
    r: BigUint,
}

impl fmt::Display for ZmParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZM({},{},{})", self.m, self.n, self.r)
    }
}

impl ZmParams {
    /// Validates a candidate triple, naming every violated condition on
    /// rejection.
    ///
    /// `gcd(m, r-1) = 1` is waived for `n = 1`: the order condition then
    /// forces `r = 1`, and the presentation collapses to the cyclic group
    /// of order `m`, which the lattice formulas handle uniformly.
    ///
    /// Panics if `m == 0` or `n == 0`.
    pub fn validate(
        m: impl Into<BigUint>,
        n: impl Into<BigUint>,
        r: impl Into<BigUint>,
    ) -> Result<Self, InvalidPresentation> {
        let (m, n, r_raw) = (m.into(), n.into(), r.into());
        assert!(!m.is_zero() && !n.is_zero(), "validate: m, n must be positive");

        let r = if m.is_one() { BigUint::one() } else { &r_raw % &m };
        let mut violations = Vec::new();

        if m.is_even() {
            violations.push(Violation::EvenM);
        }
        let gcd_mn = m.gcd(&n);
        if !gcd_mn.is_one() {
            violations.push(Violation::MnNotCoprime { gcd: gcd_mn });
        }
        let residue = pow_mod(&r, &n, &m);
        if residue != BigUint::one() % &m {
            violations.push(Violation::OrderNotOne { residue });
        }
        if !n.is_one() && !r.is_zero() {
            let gcd_mr = m.gcd(&(&r - 1u32));
            if !gcd_mr.is_one() {
                violations.push(Violation::RMinusOneNotCoprime { gcd: gcd_mr });
            }
        }

        if violations.is_empty() {
            Ok(ZmParams { m, n, r })
        } else {
            Err(InvalidPresentation { m, n, r: r_raw, violations })
        }
    }

    pub fn m(&self) -> &BigUint {
        &self.m
    }

    pub fn n(&self) -> &BigUint {
        &self.n
    }

    pub fn r(&self) -> &BigUint {
        &self.r
    }

    /// Group order `m * n`.
    pub fn order(&self) -> BigUint {
        &self.m * &self.n
    }
}

/// Index triple `(m1, n1, s)` of one subgroup `H(m1,n1,s) = <a^m1, b^n1 a^s>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupTriple {
    pub m1: BigUint,
    pub n1: BigUint,
    pub s: BigUint,
}

impl SubgroupTriple {
    /// Order of the indexed subgroup, `mn / (m1 * n1)`.
    pub fn subgroup_order(&self, params: &ZmParams) -> BigUint {
        params.order() / (&self.m1 * &self.n1)
    }
}

impl fmt::Display for SubgroupTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.m1, self.n1, self.s)
    }
}

/// A conjugacy class of subgroups, keyed by the divisor pair `(m1, n1)` and
/// carrying its size `gcd(m1, (r^n-1)/(r^n1-1))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClassRecord {
    pub m1: BigUint,
    pub n1: BigUint,
    pub size: BigUint,
}

/// Size of the conjugacy class keyed by `(m1, n1)`.
///
/// Panics unless `m1 | m` and `n1 | n`.
pub fn conj_class_size(params: &ZmParams, m1: &BigUint, n1: &BigUint) -> BigUint {
    assert!(params.m().is_multiple_of(m1), "conj_class_size: m1 must divide m");
    assert!(params.n().is_multiple_of(n1), "conj_class_size: n1 must divide n");
    quotient_gcd(m1, params.r(), n1, params.n())
}

/// All conjugacy classes in lexicographic `(m1, n1)` order.
pub fn conj_classes(params: &ZmParams) -> Vec<ConjClassRecord> {
    let mut classes = Vec::new();
    for m1 in divisors(params.m()) {
        for n1 in divisors(params.n()) {
            let size = conj_class_size(params, &m1, &n1);
            classes.push(ConjClassRecord { m1: m1.clone(), n1, size });
        }
    }
    classes
}

/// All subgroup triples `(m1, n1, s)` in lexicographic order.
///
/// For fixed `(m1, n1)` the admissible `s` are the multiples of
/// `m1 / gcd(m1, Q)` below `m1` (`Q` the class-size quotient), which is the
/// divisibility condition `m1 | s*Q` solved directly; there are exactly
/// class-size many of them.
pub fn enumerate_triples(params: &ZmParams) -> Vec<SubgroupTriple> {
    let mut triples = Vec::new();
    for m1 in divisors(params.m()) {
        for n1 in divisors(params.n()) {
            let size = conj_class_size(params, &m1, &n1);
            let step = &m1 / &size;
            let mut s = BigUint::zero();
            let mut k = BigUint::zero();
            while k < size {
                triples.push(SubgroupTriple { m1: m1.clone(), n1: n1.clone(), s: s.clone() });
                s += &step;
                k += 1u32;
            }
        }
    }
    triples
}

/// Whether the subgroup for `t` is cyclic: `(m/m1) | r^n1 - 1`.
pub fn is_cyclic_triple(params: &ZmParams, t: &SubgroupTriple) -> bool {
    divisor_pair_is_cyclic(params, &t.m1, &t.n1)
}

/// Cyclicity test on a class key: `(m/m1) | r^n1 - 1`, evaluated as
/// `r^n1 = 1 (mod m/m1)`.
pub fn divisor_pair_is_cyclic(params: &ZmParams, m1: &BigUint, n1: &BigUint) -> bool {
    let modulus = params.m() / m1;
    pow_mod(params.r(), n1, &modulus) == BigUint::one() % &modulus
}

/// Total number of subgroups: the sum of all conjugacy-class sizes.
pub fn count_subgroups(params: &ZmParams) -> BigUint {
    conj_classes(params).iter().map(|c| c.size.clone()).sum()
}

/// Number of cyclic subgroups: class sizes summed over cyclic class keys.
pub fn count_cyclic_subgroups(params: &ZmParams) -> BigUint {
    conj_classes(params)
        .iter()
        .filter(|c| divisor_pair_is_cyclic(params, &c.m1, &c.n1))
        .map(|c| c.size.clone())
        .sum()
}

/// All valid presentations with `m * n <= max_mn`, in ascending `(m, n, r)`
/// order: odd `m`, coprime `n`, `r` in `2..=m-1` satisfying the order and
/// coprimality conditions, plus the degenerate cyclic rows `r = 1` for
/// `m = 1` or `n = 1`.
pub fn enumerate_valid_params(max_mn: u64) -> Vec<ZmParams> {
    let mut out = Vec::new();
    for m in (1..=max_mn).step_by(2) {
        for n in 1..=(max_mn / m) {
            if m == 1 {
                out.push(ZmParams::validate(1u64, n, 1u64).expect("trivial kernel is valid"));
            } else if n == 1 {
                out.push(ZmParams::validate(m, 1u64, 1u64).expect("cyclic row is valid"));
            } else {
                for r in 2..m {
                    if let Ok(p) = ZmParams::validate(m, n, r) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out.sort();
    out
}
