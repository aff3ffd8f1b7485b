use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{rat, Rat};

/// Random positive rational seed values for one trial.
#[derive(Clone, Debug, PartialEq)]
pub struct SeedDraw {
    pub seed: u64,
    pub values: Vec<Rat>,
}

/// `n` rationals with numerators and denominators uniform in `[1, 50]`,
/// reproducible from `seed`.
pub fn draw_seed_values(n: usize, seed: u64) -> SeedDraw {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..n)
        .map(|_| rat(rng.gen_range(1..=50), rng.gen_range(1..=50)))
        .collect();
    SeedDraw { seed, values }
}
