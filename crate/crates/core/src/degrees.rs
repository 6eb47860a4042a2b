//! Closed-form factorization numbers and (cyclic) subgroup commutativity
//! degrees of ZM-groups.
//!
//! Everything here is exact: counts are arbitrary-precision naturals and the
//! degrees are reduced big rationals. No floating point is used.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{divisors, g_prime_power, is_prime, quotient_gcd, sigma, tau};
use crate::zm::{conj_class_size, divisor_pair_is_cyclic, ZmParams};

/// Full exact report for one presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub params: ZmParams,
    pub subgroups: BigUint,
    pub cyclic_subgroups: BigUint,
    pub f2: BigUint,
    pub cf2: BigUint,
    pub sd: BigRational,
    pub csd: BigRational,
}

/// Per-presentation tables the formulas share: divisor lists, conjugacy-class
/// sizes and cyclicity flags indexed by divisor position.
struct ClassGrid<'a> {
    params: &'a ZmParams,
    div_m: Vec<BigUint>,
    div_n: Vec<BigUint>,
    size: Vec<Vec<BigUint>>,
    cyclic: Vec<Vec<bool>>,
}

impl<'a> ClassGrid<'a> {
    fn new(params: &'a ZmParams) -> Self {
        let div_m = divisors(params.m());
        let div_n = divisors(params.n());
        let mut size = Vec::with_capacity(div_m.len());
        let mut cyclic = Vec::with_capacity(div_m.len());
        for m1 in &div_m {
            let mut srow = Vec::with_capacity(div_n.len());
            let mut crow = Vec::with_capacity(div_n.len());
            for n1 in &div_n {
                srow.push(conj_class_size(params, m1, n1));
                crow.push(divisor_pair_is_cyclic(params, m1, n1));
            }
            size.push(srow);
            cyclic.push(crow);
        }
        ClassGrid { params, div_m, div_n, size, cyclic }
    }

    fn subgroups(&self) -> BigUint {
        self.size.iter().flatten().sum()
    }

    fn cyclic_subgroups(&self) -> BigUint {
        let mut total = BigUint::zero();
        for (i, row) in self.size.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                if self.cyclic[i][j] {
                    total += s;
                }
            }
        }
        total
    }

    /// Local factorization count of the class representative `H(m1,n1,0)`.
    ///
    /// A subgroup of class key `(m2, n2)` lies inside `H(m1,n1,0)` exactly
    /// when `m1 | m2`, `n1 | n2` and `m1 | s`; counting the admissible `s`
    /// the same way as for class sizes gives `gcd(m2/m1, (r^n-1)/(r^n2-1))`
    /// contained members per key. Every contained pair whose keys satisfy
    /// `gcd(m2,m3) = m1`, `gcd(n2,n3) = n1` is a factorization of the
    /// representative, and no other pair is, so
    ///
    /// `f_{m1,n1} = sum gcd(m2/m1, Q_{n2}) * gcd(m3/m1, Q_{n3})`
    ///
    /// over that index set. With `require_cyclic` both keys are restricted
    /// to cyclic ones, giving `cf_{m1,n1}`.
    fn local_count(&self, i1: usize, j1: usize, require_cyclic: bool) -> BigUint {
        let m1 = &self.div_m[i1];
        let n1 = &self.div_n[j1];

        // contained[i][j]: members of class (div_m[i], div_n[j]) inside the
        // representative; None where the key is not below (m1, n1).
        let contained: Vec<Vec<Option<BigUint>>> = self
            .div_m
            .iter()
            .map(|m2| {
                self.div_n
                    .iter()
                    .map(|n2| {
                        (m2.is_multiple_of(m1) && n2.is_multiple_of(n1)).then(|| {
                            quotient_gcd(&(m2 / m1), self.params.r(), n2, self.params.n())
                        })
                    })
                    .collect()
            })
            .collect();

        let mut total = BigUint::zero();
        for (i2, m2) in self.div_m.iter().enumerate() {
            for (i3, m3) in self.div_m.iter().enumerate() {
                if &m2.gcd(m3) != m1 {
                    continue;
                }
                for (j2, n2) in self.div_n.iter().enumerate() {
                    if require_cyclic && !self.cyclic[i2][j2] {
                        continue;
                    }
                    let Some(count2) = &contained[i2][j2] else { continue };
                    for (j3, n3) in self.div_n.iter().enumerate() {
                        if &n2.gcd(n3) != n1 {
                            continue;
                        }
                        if require_cyclic && !self.cyclic[i3][j3] {
                            continue;
                        }
                        let Some(count3) = &contained[i3][j3] else { continue };
                        total += count2 * count3;
                    }
                }
            }
        }
        total
    }

    fn position(&self, m1: &BigUint, n1: &BigUint) -> (usize, usize) {
        let i = self
            .div_m
            .iter()
            .position(|d| d == m1)
            .expect("m1 must divide m");
        let j = self
            .div_n
            .iter()
            .position(|d| d == n1)
            .expect("n1 must divide n");
        (i, j)
    }
}

/// Factorization number: ordered pairs of subgroups whose product is the
/// whole group, as the quadruple sum of class-size products over coprime
/// divisor pairs.
pub fn f2(params: &ZmParams) -> BigUint {
    factorization_count(&ClassGrid::new(params), false)
}

/// Cyclic factorization number: as [`f2`] restricted to cyclic class keys.
pub fn cf2(params: &ZmParams) -> BigUint {
    factorization_count(&ClassGrid::new(params), true)
}

fn factorization_count(grid: &ClassGrid, require_cyclic: bool) -> BigUint {
    let mut total = BigUint::zero();
    for (i2, m2) in grid.div_m.iter().enumerate() {
        for (i3, m3) in grid.div_m.iter().enumerate() {
            if !m2.gcd(m3).is_one() {
                continue;
            }
            for (j2, n2) in grid.div_n.iter().enumerate() {
                if require_cyclic && !grid.cyclic[i2][j2] {
                    continue;
                }
                for (j3, n3) in grid.div_n.iter().enumerate() {
                    if !n2.gcd(n3).is_one() {
                        continue;
                    }
                    if require_cyclic && !grid.cyclic[i3][j3] {
                        continue;
                    }
                    total += &grid.size[i2][j2] * &grid.size[i3][j3];
                }
            }
        }
    }
    total
}

/// Local factorization count `f_{m1,n1}`: the factorization number of the
/// class representative `H(m1,n1,0)`.
///
/// Panics unless `m1 | m` and `n1 | n`.
pub fn f_local(params: &ZmParams, m1: &BigUint, n1: &BigUint) -> BigUint {
    let grid = ClassGrid::new(params);
    let (i, j) = grid.position(m1, n1);
    grid.local_count(i, j, false)
}

/// Local cyclic factorization count `cf_{m1,n1}` of `H(m1,n1,0)`.
///
/// Panics unless `m1 | m` and `n1 | n`.
pub fn cf_local(params: &ZmParams, m1: &BigUint, n1: &BigUint) -> BigUint {
    let grid = ClassGrid::new(params);
    let (i, j) = grid.position(m1, n1);
    grid.local_count(i, j, true)
}

fn degree_from_grid(grid: &ClassGrid, require_cyclic: bool) -> BigRational {
    let mut numerator = BigUint::zero();
    for i in 0..grid.div_m.len() {
        for j in 0..grid.div_n.len() {
            numerator += &grid.size[i][j] * grid.local_count(i, j, require_cyclic);
        }
    }
    let lattice = if require_cyclic { grid.cyclic_subgroups() } else { grid.subgroups() };
    ratio(numerator, &lattice * &lattice)
}

/// Subgroup commutativity degree: the probability that an ordered pair of
/// subgroups permutes, as the reduced exact rational
/// `sum class_size * f_local / |L|^2`.
pub fn sd(params: &ZmParams) -> BigRational {
    degree_from_grid(&ClassGrid::new(params), false)
}

/// Cyclic subgroup commutativity degree:
/// `sum class_size * cf_local / |L1|^2`.
pub fn csd(params: &ZmParams) -> BigRational {
    degree_from_grid(&ClassGrid::new(params), true)
}

/// Computes the whole report for one presentation.
pub fn report(params: &ZmParams) -> DegreeReport {
    let grid = ClassGrid::new(params);
    DegreeReport {
        params: params.clone(),
        subgroups: grid.subgroups(),
        cyclic_subgroups: grid.cyclic_subgroups(),
        f2: factorization_count(&grid, false),
        cf2: factorization_count(&grid, true),
        sd: degree_from_grid(&grid, false),
        csd: degree_from_grid(&grid, true),
    }
}

/// `sd` of any ZM-group with prime `n`, which depends on `m` alone:
/// `(tau(m)^2 + 2 tau(m) sigma(m) + g(m)) / (tau(m) + sigma(m))^2`.
///
/// Panics if `m` is even or zero.
pub fn sd_n_prime(m: &BigUint) -> BigRational {
    assert!(m.is_odd(), "sd_n_prime: m must be odd and positive");
    let t = tau(m);
    let s = sigma(m);
    let num = &t * &t + 2u32 * &t * &s + crate::arith::g_function(m);
    let den = (&t + &s).pow(2);
    ratio(num, den)
}

/// `csd` of any ZM-group with prime `n`:
/// `(tau(m)(tau(m) + m) + m(tau(m) + 1)) / (tau(m) + m)^2`.
///
/// Panics if `m` is even or zero.
pub fn csd_n_prime(m: &BigUint) -> BigRational {
    assert!(m.is_odd(), "csd_n_prime: m must be odd and positive");
    let t = tau(m);
    let num = &t * (&t + m) + m * (&t + 1u32);
    let den = (&t + m).pow(2);
    ratio(num, den)
}

/// One row of [`asymptotic_sweep`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticRow {
    pub alpha: u32,
    pub sd: BigRational,
    pub csd: BigRational,
}

/// Fast-path degree values for `m = p^alpha`, `alpha = 1..=alpha_max`, for a
/// ZM-group with prime `n`. Both columns vanish as `alpha` grows.
///
/// Panics if `p` is not an odd prime (`p = 2` rejected) or `alpha_max == 0`.
pub fn asymptotic_sweep(p: &BigUint, alpha_max: u32) -> Vec<AsymptoticRow> {
    assert!(
        is_prime(p) && p.is_odd(),
        "asymptotic_sweep: p = {p} must be an odd prime"
    );
    assert!(alpha_max >= 1, "asymptotic_sweep: alpha_max must be positive");
    (1..=alpha_max)
        .map(|alpha| {
            let t = BigUint::from(alpha + 1);
            let s = (p.pow(alpha + 1) - 1u32) / (p - 1u32);
            let g = g_prime_power(p, alpha);
            let m = p.pow(alpha);
            let sd = ratio(&t * &t + 2u32 * &t * &s + g, (&t + &s).pow(2));
            let csd = ratio(&t * (&t + &m) + &m * (&t + 1u32), (&t + &m).pow(2));
            AsymptoticRow { alpha, sd, csd }
        })
        .collect()
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as the reduced `"p/q"` string, denominator always
/// explicit (`1/1`, not `1`).
pub fn ratio_str(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal approximation of a non-negative rational to `digits` places,
/// round-half-up, computed in exact integer arithmetic. Display-only.
pub fn ratio_decimal_str(r: &BigRational, digits: u32) -> String {
    let scale = BigUint::from(10u32).pow(digits);
    let num = r.numer().magnitude() * &scale;
    let den = r.denom().magnitude();
    let scaled = (num * 2u32 + den) / (den * 2u32);
    let whole = &scaled / &scale;
    let frac = &scaled % &scale;
    format!("{whole}.{frac:0>width$}", width = digits as usize)
}

impl fmt::Display for DegreeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: |L|={} |L1|={} F2={} CF2={} sd={} csd={}",
            self.params,
            self.subgroups,
            self.cyclic_subgroups,
            self.f2,
            self.cf2,
            ratio_str(&self.sd),
            ratio_str(&self.csd)
        )
    }
}
