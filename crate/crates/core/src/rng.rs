//! Deterministic seed derivation.
//!
//! Every parallel task gets its own generator seeded from the run seed and a
//! task tag, so results never depend on scheduling or thread count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type TaskRng = ChaCha8Rng;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Mixes a base seed with a sequence of tags into a new seed.
pub fn derive_seed(base: u64, tags: &[u64]) -> u64 {
    tags.iter()
        .fold(splitmix64(base), |acc, &t| splitmix64(acc ^ splitmix64(t)))
}

pub fn task_rng(base: u64, tags: &[u64]) -> TaskRng {
    ChaCha8Rng::seed_from_u64(derive_seed(base, tags))
}

/// Hash of a float slice by bit pattern, in order.
pub(crate) fn hash_f64s(acc: u64, values: &[f64]) -> u64 {
    values
        .iter()
        .fold(acc, |h, v| splitmix64(h ^ v.to_bits()))
}
