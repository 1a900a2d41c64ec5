use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Default limit on the number of `q`-subsets a splitter check enumerates.
pub const DEFAULT_SUBSET_CAP: u128 = 1_000_000;

/// A family of maps `[n] → [q]`, stored as value tables indexed from zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitterFamily {
    pub n: usize,
    pub q: usize,
    pub functions: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitterMethod {
    Greedy { seed: u64 },
    Random { seed: u64 },
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1u128, |acc, i| acc.saturating_mul(n as u128 - i) / (i + 1))
}

fn subsets(n: usize, q: usize, cap: u128) -> Result<Vec<Vec<usize>>> {
    let count = binomial(n, q);
    if count > cap {
        return Err(Error::Refused(format!("C({n},{q}) = {count} subsets exceed {cap}")));
    }
    Ok((0..n).combinations(q).collect())
}

fn injective_on(f: &[usize], set: &[usize]) -> bool {
    let mut hit = 0u64;
    for &x in set {
        let bit = 1u64 << f[x];
        if hit & bit != 0 {
            return false;
        }
        hit |= bit;
    }
    true
}

/// Exhaustively checks that every `q`-subset of `[n]` is mapped injectively
/// by some member.
pub fn verify_splitter(family: &SplitterFamily, cap: u128) -> Result<bool> {
    let SplitterFamily { n, q, functions } = family;
    if functions.iter().any(|f| f.len() != *n || f.iter().any(|&v| v >= *q)) {
        return Ok(false);
    }
    Ok(subsets(*n, *q, cap)?.iter().all(|s| functions.iter().any(|f| injective_on(f, s))))
}

/// `x ↦ ⌊((x + r) mod n)·q / n⌋`: `q` contiguous blocks of near-equal size.
fn interval_map(n: usize, q: usize, r: usize) -> Vec<usize> {
    (0..n).map(|x| ((x + r) % n) * q / n).collect()
}

fn random_map(n: usize, q: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(0..q)).collect()
}

/// Builds an `(n, q, q)`-splitter and verifies it before returning.
pub fn build_splitter(n: usize, q: usize, method: SplitterMethod) -> Result<SplitterFamily> {
    if q == 0 || q > n || q > 64 {
        return Err(Error::BadShape(format!("need 1 <= q <= n, got n={n}, q={q}")));
    }
    let sets = subsets(n, q, DEFAULT_SUBSET_CAP)?;
    let mut uncovered = vec![true; sets.len()];
    let mut left = sets.len();
    let mut functions: Vec<Vec<usize>> = Vec::new();
    let gain = |f: &[usize], uncovered: &[bool]| {
        sets.iter().zip(uncovered).filter(|(s, &u)| u && injective_on(f, s)).count()
    };
    let mut take = |f: Vec<usize>, uncovered: &mut Vec<bool>, left: &mut usize| {
        for (k, s) in sets.iter().enumerate() {
            if uncovered[k] && injective_on(&f, s) {
                uncovered[k] = false;
                *left -= 1;
            }
        }
        functions.push(f);
    };

    match method {
        SplitterMethod::Greedy { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pool: Vec<Vec<usize>> = (0..n).map(|r| interval_map(n, q, r)).collect();
            pool.extend((0..4 * n).map(|_| random_map(n, q, &mut rng)));
            while left > 0 {
                let (best, g) = pool
                    .iter()
                    .enumerate()
                    .map(|(k, f)| (k, gain(f, &uncovered)))
                    .max_by_key(|&(k, g)| (g, std::cmp::Reverse(k)))
                    .expect("pool is never empty");
                if g == 0 {
                    // Refresh the random part of the stream.
                    pool.extend((0..4 * n).map(|_| random_map(n, q, &mut rng)));
                    continue;
                }
                let f = pool.remove(best);
                take(f, &mut uncovered, &mut left);
            }
        }
        SplitterMethod::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            while left > 0 {
                let f = random_map(n, q, &mut rng);
                if gain(&f, &uncovered) > 0 {
                    take(f, &mut uncovered, &mut left);
                }
            }
        }
    }
    let family = SplitterFamily { n, q, functions };
    debug_assert!(verify_splitter(&family, DEFAULT_SUBSET_CAP)?);
    Ok(family)
}
