//! Exact subgroup-lattice statistics of ZM-groups — the finite groups whose
//! Sylow subgroups are all cyclic, presented as
//! `ZM(m,n,r) = <a, b | a^m = b^n = 1, b^-1 a b = a^r>`.
//!
//! The closed-form side computes subgroup counts, conjugacy-class sizes,
//! factorization numbers `F2`/`CF2` and the (cyclic) subgroup commutativity
//! degrees `sd`/`csd` purely from divisor sums of gcds, in arbitrary
//! precision. The [`oracle`] side rebuilds the group from its presentation
//! and recounts everything by definition, so the two routes can be checked
//! against each other exactly.
//!
//! ```
//! use zmdeg_core::{degrees, ZmParams};
//!
//! let params = ZmParams::validate(9u32, 4u32, 8u32).unwrap();
//! let rep = degrees::report(&params);
//! assert_eq!(rep.subgroups.to_string(), "19");
//! assert_eq!(degrees::ratio_str(&rep.sd), "13/19");
//! assert_eq!(degrees::ratio_str(&rep.csd), "17/25");
//! ```

pub mod arith;
pub mod degrees;
pub mod oracle;
pub mod zm;

pub use degrees::{AsymptoticRow, DegreeReport};
pub use oracle::{GroupTable, OracleError, SubgroupSet, DEFAULT_ELEMENT_BOUND};
pub use zm::{ConjClassRecord, InvalidPresentation, SubgroupTriple, Violation, ZmParams};

pub use num_bigint::BigUint;
pub use num_rational::BigRational;
