//! Seeded, portable pseudo-randomness.
//!
//! Every random object is drawn from a PCG32 generator (`rand_pcg::Pcg32`):
//! a 64-bit linear congruential state
//! `state' = state * 6364136223846793005 + (2 * stream + 1)` with an
//! XSH-RR output permutation to 32 bits. The `(seed, stream)` pair fully
//! determines the sequence, and distinct streams are independent sequences,
//! so parallel workers derive their own generator from the item index and
//! never share state.

use rand_pcg::Pcg32;

pub type GraphRng = Pcg32;

/// Generator for `(seed, stream)`.
pub fn stream(seed: u64, stream: u64) -> GraphRng {
    Pcg32::new(seed, stream)
}
