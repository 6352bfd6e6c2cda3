//! Seeded random streams for oracles.
//!
//! Every stream is a xoshiro256++ generator whose state is expanded with
//! SplitMix64 from a `(seed, index)` pair, so trial `i` of a run draws the
//! same numbers regardless of how trials are scheduled.

use rand::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

pub type OracleRng = Xoshiro256PlusPlus;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Independent generator for stream `index` of `seed`.
pub fn stream(seed: u64, index: u64) -> OracleRng {
    Xoshiro256PlusPlus::seed_from_u64(splitmix64(seed) ^ splitmix64(index.rotate_left(32) ^ GOLDEN))
}
