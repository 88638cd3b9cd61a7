//! Seeded random inputs for tests and the benchmark harness.

use std::ops::Range;

use rand::{Rng, RngExt};

use crate::penalty::{Cost, PenaltyMatrix};
use crate::text::{Symbol, Text};

/// Uniform text with length drawn from `len` and alphabet size from `sigma`.
pub fn random_text<R: Rng + ?Sized>(rng: &mut R, len: Range<usize>, sigma: Range<usize>) -> Text {
    let n = rng.random_range(len);
    let s = rng.random_range(sigma).max(1);
    let symbols = (0..n).map(|_| rng.random_range(0..s) as Symbol).collect();
    Text::new(symbols, s).expect("symbols drawn below sigma")
}

/// Random metric over `sigma` symbols with costs in `1..=max_cost`.
///
/// Raw symmetric costs are drawn and then replaced by shortest-path
/// distances over `Σ ∪ {ε}`, which restores the triangle inequality.
pub fn random_penalty<R: Rng + ?Sized>(rng: &mut R, sigma: usize, max_cost: Cost) -> PenaltyMatrix {
    let pts = sigma + 1;
    let eps = sigma;
    let mut w = vec![0 as Cost; pts * pts];
    for x in 0..pts {
        for y in x + 1..pts {
            let c = rng.random_range(1..=max_cost.max(1));
            w[x * pts + y] = c;
            w[y * pts + x] = c;
        }
    }
    for z in 0..pts {
        for x in 0..pts {
            for y in 0..pts {
                let via = w[x * pts + z] + w[z * pts + y];
                if via < w[x * pts + y] {
                    w[x * pts + y] = via;
                }
            }
        }
    }
    let sub = (0..sigma * sigma).map(|i| w[(i / sigma) * pts + i % sigma]).collect();
    let ins: Vec<Cost> = (0..sigma).map(|y| w[eps * pts + y]).collect();
    let del = ins.clone();
    PenaltyMatrix::new(sigma, sub, ins, del).expect("shortest-path closure is a metric")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn penalties_are_metrics() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for sigma in 1..5 {
            for _ in 0..20 {
                let p = random_penalty(&mut rng, sigma, 6);
                assert_eq!(p.validate(), Ok(()));
                assert!(p.max_cost() <= 6);
            }
        }
    }

    #[test]
    fn text_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..20 {
            let t = random_text(&mut rng, 3..5, 2..3);
            assert!((3..5).contains(&t.len()));
            assert!(t.symbols().iter().all(|&x| x < 2));
        }
    }
}
