//! Seeded random instances.
//!
//! Every instance draws from its own ChaCha stream, keyed by the seed, the
//! campaign name, and the instance index, so any single instance can be
//! regenerated without the others.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tauideal::{BigInt, LatticeVector, MonomialIdeal, ToricRing};

/// FNV-1a, fixed so that streams do not depend on the standard library's
/// hasher.
fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

pub fn instance_rng(seed: u64, campaign: &str, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(campaign));
    rng.set_stream(index as u64);
    rng
}

/// Exponent box and generator count for random ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealShape {
    pub max_exp: i64,
    pub max_gens: usize,
}

impl Default for IdealShape {
    fn default() -> Self {
        IdealShape { max_exp: 6, max_gens: 5 }
    }
}

/// A monomial ideal of a polynomial ring with `1..=max_gens` exponent
/// vectors uniform in `[0, max_exp]^d`, minimalized. Unit-ideal draws are
/// kept.
pub fn random_orthant_ideal(rng: &mut ChaCha8Rng, ring: &Arc<ToricRing>, shape: IdealShape) -> MonomialIdeal {
    let d = ring.dim();
    let count = rng.gen_range(1..=shape.max_gens);
    let gens = (0..count)
        .map(|_| {
            let c: Vec<i64> = (0..d).map(|_| rng.gen_range(0..=shape.max_exp)).collect();
            LatticeVector::from_i64s(&c)
        })
        .collect();
    MonomialIdeal::new(ring.clone(), gens).expect("exponents lie in the orthant")
}

/// A monomial ideal generated by `1..=max_gens` uniform draws from the
/// semigroup points of degree at most `max_degree`.
pub fn random_semigroup_ideal(rng: &mut ChaCha8Rng, ring: &Arc<ToricRing>, max_degree: i64, max_gens: usize) -> MonomialIdeal {
    let pts = tauideal::enumerate::points_up_to(ring, &BigInt::from(max_degree)).expect("small degree");
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count).map(|_| pts[rng.gen_range(0..pts.len())].clone()).collect();
    MonomialIdeal::new(ring.clone(), gens).expect("points lie in the semigroup")
}
