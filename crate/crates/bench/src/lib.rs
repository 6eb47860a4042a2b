//! Shared fixtures for the benchmark targets.

use zmdeg_core::ZmParams;

/// The order-36 presentation with every statistic nontrivial.
pub fn zm_9_4_8() -> ZmParams {
    ZmParams::validate(9u32, 4u32, 8u32).unwrap()
}

/// A larger presentation with three primes in the kernel: order 420,
/// r = 62 of multiplicative order 4 mod 105.
pub fn zm_105_4_62() -> ZmParams {
    ZmParams::validate(105u32, 4u32, 62u32).unwrap()
}

/// The dihedral specialization of order 150.
pub fn zm_75_2_74() -> ZmParams {
    ZmParams::validate(75u32, 2u32, 74u32).unwrap()
}
