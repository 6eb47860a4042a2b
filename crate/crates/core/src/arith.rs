//! Number-theoretic primitives on arbitrary-precision naturals: divisors,
//! multiplicative functions, modular powers, geometric sums modulo an integer
//! and the lattice-counting function `g`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Prime factorization by trial division, as ascending `(prime, exponent)` pairs.
///
/// Panics if `n == 0`. `factorize(1)` is the empty product.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "factorize: n must be positive");
    let mut rest = n.clone();
    let mut factors = Vec::new();
    let mut d = BigUint::from(2u32);
    while &d * &d <= rest {
        if rest.is_multiple_of(&d) {
            let mut e = 0u32;
            while rest.is_multiple_of(&d) {
                rest /= &d;
                e += 1;
            }
            factors.push((d.clone(), e));
        }
        d += 1u32;
    }
    if rest > BigUint::one() {
        factors.push((rest, 1));
    }
    factors
}

/// Deterministic primality test by trial division up to the square root.
pub fn is_prime(n: &BigUint) -> bool {
    if *n < BigUint::from(2u32) {
        return false;
    }
    let mut d = BigUint::from(2u32);
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            return false;
        }
        d += 1u32;
    }
    true
}

/// All positive divisors of `n` in strictly ascending order.
///
/// Panics if `n == 0`.
pub fn divisors(n: &BigUint) -> Vec<BigUint> {
    assert!(!n.is_zero(), "divisors: n must be positive");
    let mut divs = vec![BigUint::one()];
    for (p, e) in factorize(n) {
        let prev = divs.clone();
        let mut power = BigUint::one();
        for _ in 0..e {
            power *= &p;
            divs.extend(prev.iter().map(|d| d * &power));
        }
    }
    divs.sort_unstable();
    divs
}

/// Number of positive divisors.
///
/// Panics if `n == 0`.
pub fn tau(n: &BigUint) -> BigUint {
    assert!(!n.is_zero(), "tau: n must be positive");
    factorize(n)
        .iter()
        .map(|(_, e)| BigUint::from(*e + 1))
        .product()
}

/// Sum of positive divisors.
///
/// Panics if `n == 0`.
pub fn sigma(n: &BigUint) -> BigUint {
    assert!(!n.is_zero(), "sigma: n must be positive");
    factorize(n)
        .iter()
        .map(|(p, e)| {
            // (p^(e+1) - 1) / (p - 1), exact by construction
            (p.pow(e + 1) - 1u32) / (p - 1u32)
        })
        .product()
}

/// `base^exp mod modulus`, result in `[0, modulus)`.
///
/// Panics if `modulus == 0`.
pub fn pow_mod(base: &BigUint, exp: &BigUint, modulus: &BigUint) -> BigUint {
    assert!(!modulus.is_zero(), "pow_mod: modulus must be positive");
    base.modpow(exp, modulus)
}

/// Residue of the integer quotient `(r^n - 1) / (r^n1 - 1)` modulo `modulus`,
/// computed as the geometric sum `sum_{i=0}^{n/n1 - 1} r^(n1*i) mod modulus`
/// so that `r^n` is never materialized. For `r = 1` the sum degenerates to
/// `n/n1 mod modulus`, the natural value of the quotient.
///
/// Panics if `n1` does not divide `n` or if `n1`, `n` or `modulus` is zero.
pub fn geom_sum_mod(r: &BigUint, n1: &BigUint, n: &BigUint, modulus: &BigUint) -> BigUint {
    assert!(!n1.is_zero() && !n.is_zero(), "geom_sum_mod: n1, n must be positive");
    assert!(!modulus.is_zero(), "geom_sum_mod: modulus must be positive");
    assert!(
        n.is_multiple_of(n1),
        "geom_sum_mod: n1 = {n1} must divide n = {n}"
    );
    let q = r.modpow(n1, modulus);
    let k = n / n1;
    geom_series_mod(&q, &k, modulus).0
}

/// `(sum_{i=0}^{k-1} q^i mod m, q^k mod m)` by recursive halving.
fn geom_series_mod(q: &BigUint, k: &BigUint, m: &BigUint) -> (BigUint, BigUint) {
    if k.is_zero() {
        return (BigUint::zero(), BigUint::one() % m);
    }
    let half = k >> 1;
    let (s, p) = geom_series_mod(q, &half, m);
    // S_{2t} = S_t * (1 + q^t); S_{2t+1} = q * S_{2t} + 1
    let s2 = (&s * (BigUint::one() + &p)) % m;
    let p2 = (&p * &p) % m;
    if k.is_odd() {
        (((&s2 * q) + 1u32) % m, (&p2 * q) % m)
    } else {
        (s2, p2)
    }
}

/// `gcd(m1, (r^n - 1) / (r^n1 - 1))` without forming the quotient: the gcd
/// only depends on the quotient's residue mod `m1`, and `gcd(m1, 0) = m1`.
///
/// Panics if `n1` does not divide `n` or any positive argument is zero.
pub fn quotient_gcd(m1: &BigUint, r: &BigUint, n1: &BigUint, n: &BigUint) -> BigUint {
    assert!(!m1.is_zero(), "quotient_gcd: m1 must be positive");
    m1.gcd(&geom_sum_mod(r, n1, n, m1))
}

/// The multiplicative function `g(n) = n * sum_{d1|n, d2|n} 1/gcd(d1, d2)`,
/// evaluated exactly through the prime factorization of `n`.
///
/// Panics if `n == 0`.
pub fn g_function(n: &BigUint) -> BigUint {
    assert!(!n.is_zero(), "g_function: n must be positive");
    factorize(n)
        .iter()
        .map(|(p, e)| g_prime_power(p, *e))
        .product()
}

/// Closed form of `g` at a prime power:
/// `g(p^a) = ((2a+1) p^(a+2) - (2a+3) p^(a+1) + p + 1) / (p-1)^2`.
///
/// Panics if `p` is not prime or `alpha == 0`.
pub fn g_prime_power(p: &BigUint, alpha: u32) -> BigUint {
    assert!(is_prime(p), "g_prime_power: p = {p} must be prime");
    assert!(alpha >= 1, "g_prime_power: alpha must be positive");
    let a = BigUint::from(alpha);
    // (2a+1)p >= (2a+3) for p >= 2, so the grouping below never underflows.
    let pos = (2u32 * &a + 1u32) * p.pow(alpha + 2) + p + 1u32;
    let neg = (2u32 * &a + 3u32) * p.pow(alpha + 1);
    let den = (p - 1u32).pow(2);
    let num = pos - neg;
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero(), "g_prime_power: closed form must divide exactly");
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// Independent reference for `g`: the literal double sum grouped by gcd,
    /// so every term n/gcd(d1, d2) is an exact integer.
    fn g_double_sum(v: &BigUint) -> BigUint {
        let divs = divisors(v);
        let mut total = BigUint::zero();
        for d1 in &divs {
            for d2 in &divs {
                total += v / d1.gcd(d2);
            }
        }
        total
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(&n(1)), vec![n(1)]);
        assert_eq!(divisors(&n(9)), vec![n(1), n(3), n(9)]);
        assert_eq!(divisors(&n(12)), vec![n(1), n(2), n(3), n(4), n(6), n(12)]);
    }

    #[test]
    #[should_panic(expected = "must be positive")]
    fn divisors_rejects_zero() {
        divisors(&BigUint::zero());
    }

    #[test]
    fn tau_sigma_examples() {
        assert_eq!(tau(&n(9)), n(3));
        assert_eq!(sigma(&n(9)), n(13));
        assert_eq!(tau(&n(1)), n(1));
        assert_eq!(sigma(&n(1)), n(1));
        assert_eq!(tau(&n(3)), n(2));
        assert_eq!(sigma(&n(3)), n(4));
    }

    #[test]
    fn pow_mod_examples() {
        // r^n = 1 (mod m) holds for the presentation (9, 4, 8)
        assert_eq!(pow_mod(&n(8), &n(4), &n(9)), n(1));
        assert_eq!(pow_mod(&n(7), &n(0), &n(5)), n(1));
        assert_eq!(pow_mod(&n(2), &n(10), &n(1000)), n(24));
        assert_eq!(pow_mod(&n(3), &n(0), &n(1)), n(0));
    }

    #[test]
    fn geom_sum_examples() {
        // (8^4 - 1)/7 = 585; 585 = 65 * 9
        assert_eq!(geom_sum_mod(&n(8), &n(1), &n(4), &n(9)), n(0));
        // 4095/63 = 65; 65 mod 3 = 2
        assert_eq!(geom_sum_mod(&n(8), &n(2), &n(4), &n(3)), n(2));
        // single-term sum
        assert_eq!(geom_sum_mod(&n(7), &n(6), &n(6), &n(100)), n(1));
        assert_eq!(geom_sum_mod(&n(7), &n(6), &n(6), &n(1)), n(0));
        // r = 1 degenerates to n/n1
        assert_eq!(geom_sum_mod(&n(1), &n(2), &n(10), &n(100)), n(5));
    }

    #[test]
    #[should_panic(expected = "must divide")]
    fn geom_sum_rejects_nondivisor() {
        geom_sum_mod(&n(8), &n(3), &n(4), &n(9));
    }

    #[test]
    fn quotient_gcd_examples() {
        assert_eq!(quotient_gcd(&n(9), &n(8), &n(1), &n(4)), n(9)); // gcd(9, 585)
        assert_eq!(quotient_gcd(&n(3), &n(8), &n(2), &n(4)), n(1)); // gcd(3, 65)
        assert_eq!(quotient_gcd(&n(1), &n(8), &n(2), &n(4)), n(1));
    }

    #[test]
    fn g_function_examples() {
        assert_eq!(g_function(&n(1)), n(1));
        assert_eq!(g_function(&n(3)), n(10));
        assert_eq!(g_function(&n(9)), n(55));
        assert_eq!(g_function(&n(5)), n(16));
    }

    #[test]
    fn g_prime_power_examples() {
        assert_eq!(g_prime_power(&n(3), 1), n(10));
        assert_eq!(g_prime_power(&n(3), 2), n(55));
        assert_eq!(g_prime_power(&n(5), 1), n(16));
    }

    #[test]
    #[should_panic(expected = "must be prime")]
    fn g_prime_power_rejects_composite() {
        g_prime_power(&n(6), 1);
    }

    #[test]
    #[should_panic(expected = "must be prime")]
    fn g_prime_power_rejects_one() {
        g_prime_power(&n(1), 2);
    }

    #[test]
    fn g_agrees_with_double_sum() {
        for v in 1u64..=120 {
            assert_eq!(g_function(&n(v)), g_double_sum(&n(v)), "g({v})");
        }
    }

    #[test]
    fn g_prime_power_agrees_with_double_sum() {
        for p in [3u64, 5, 7] {
            for alpha in 1u32..=3 {
                let pp = n(p).pow(alpha);
                assert_eq!(g_prime_power(&n(p), alpha), g_function(&pp));
                assert_eq!(g_prime_power(&n(p), alpha), g_double_sum(&pp));
            }
        }
    }

    #[test]
    fn is_prime_small() {
        let primes: Vec<u64> = (1..=50).filter(|v| is_prime(&n(*v))).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
    }

    proptest! {
        #[test]
        fn divisors_pair_symmetry(v in 1u64..=5000) {
            let nv = n(v);
            let divs = divisors(&nv);
            prop_assert_eq!(divs.first().unwrap(), &n(1));
            prop_assert_eq!(divs.last().unwrap(), &nv);
            prop_assert_eq!(divs.len().to_u64().unwrap(), tau(&nv).to_u64().unwrap());
            // d <-> n/d pairing
            for d in &divs {
                prop_assert!(divs.binary_search(&(&nv / d)).is_ok());
            }
        }

        #[test]
        fn g_is_multiplicative(a in 1u64..=200, b in 1u64..=200) {
            prop_assume!(n(a).gcd(&n(b)).is_one());
            prop_assert_eq!(g_function(&n(a * b)), g_function(&n(a)) * g_function(&n(b)));
        }

        // Small window: the geometric-sum route agrees with the literal
        // big-integer quotient whenever the latter is formed directly.
        #[test]
        fn quotient_gcd_matches_literal_quotient(
            m1 in 1u64..=500,
            r in 2u64..=40,
            n1 in 1u64..=4u64,
            k in 1u64..=5u64,
            modulus in 1u64..=1000,
        ) {
            let nn = n(n1 * k);
            let literal = (n(r).pow(nn.to_u32().unwrap()) - 1u32) / (n(r).pow(n1 as u32) - 1u32);
            prop_assert_eq!(
                quotient_gcd(&n(m1), &n(r), &n(n1), &nn),
                n(m1).gcd(&literal)
            );
            prop_assert_eq!(
                geom_sum_mod(&n(r), &n(n1), &nn, &n(modulus)),
                literal % n(modulus)
            );
        }

        // geom_sum * (r^n1 - 1) = r^n - 1 (mod M) when r^n1 - 1 is invertible mod M
        #[test]
        fn geom_sum_times_denominator(
            r in 2u64..=60,
            n1 in 1u64..=5u64,
            k in 1u64..=6u64,
            modulus in 2u64..=4000,
        ) {
            let nn = n(n1 * k);
            let den = pow_mod(&n(r), &n(n1), &n(modulus));
            let den = (den + n(modulus) - n(1)) % n(modulus);
            prop_assume!(den.gcd(&n(modulus)).is_one());
            let lhs = (geom_sum_mod(&n(r), &n(n1), &nn, &n(modulus)) * den) % n(modulus);
            let rhs = (pow_mod(&n(r), &nn, &n(modulus)) + n(modulus) - n(1)) % n(modulus);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
