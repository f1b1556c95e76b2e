//! Witness networks and seeded generators.
//!
//! Random generators draw from `ChaCha8Rng::seed_from_u64(seed)`. Table bits
//! are drawn component by component, states in increasing integer order, one
//! `bool` per entry. Seeds are reproducible across platforms for this crate
//! but not meant to match any other implementation.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{mask, Configuration};
use crate::embed::{embed, PairConfiguration};
use crate::error::{check_size, Result};
use crate::network::BooleanNetwork;

pub const MAX_GRAY_COMPONENTS: usize = 20;
pub const MAX_WITNESS_COMPONENTS: usize = 10;
pub const MAX_RANDOM_COMPONENTS: usize = 12;

/// The `k`-th word (0-based) of the reflected binary Gray code on `n`
/// components. Component 0 carries the most significant Gray bit, so the
/// literals read `00, 01, 11, 10` for `n = 2`.
pub fn gray_word(n: usize, k: u32) -> Configuration {
    let g = k ^ (k >> 1);
    Configuration::from_raw(n, g.reverse_bits() >> (32 - n))
}

/// The network whose asynchronous graph is the Gray path through all `2^n`
/// states, ending in its unique fixed point.
#[derive(Clone, Debug)]
pub struct GrayWitness {
    pub network: BooleanNetwork,
    pub start: Configuration,
    pub end: Configuration,
}

impl GrayWitness {
    /// `x^1 ... x^{2^n}` in path order.
    pub fn words(&self) -> Vec<Configuration> {
        let n = self.network.n();
        (0..1u32 << n).map(|k| gray_word(n, k)).collect()
    }

    /// Component flipped between consecutive words.
    pub fn flips(&self) -> Vec<usize> {
        self.words()
            .windows(2)
            .map(|w| (w[0].bits() ^ w[1].bits()).trailing_zeros() as usize)
            .collect()
    }
}

pub fn gray_code_network(n: usize) -> Result<GrayWitness> {
    check_size("gray code network", n, MAX_GRAY_COMPONENTS)?;
    let states = 1u32 << n;
    let mut images = vec![0u32; states as usize];
    for k in 0..states {
        let next = (k + 1).min(states - 1);
        images[gray_word(n, k).bits() as usize] = gray_word(n, next).bits();
    }
    Ok(GrayWitness {
        network: BooleanNetwork::from_images(n, images)?,
        start: gray_word(n, 0),
        end: gray_word(n, states - 1),
    })
}

/// A monotone network on `2n` components with a fixed point reachable from
/// `start` only by paths of length at least `2^{n+1} - 2`.
#[derive(Clone, Debug)]
pub struct DiameterWitness {
    pub network: BooleanNetwork,
    pub start: Configuration,
    pub end: Configuration,
    pub claimed_distance: u64,
}

pub fn exp_diameter_monotone(n: usize) -> Result<DiameterWitness> {
    check_size("exponential diameter witness", n, MAX_WITNESS_COMPONENTS)?;
    let gray = gray_code_network(n)?;
    Ok(DiameterWitness {
        network: embed(&gray.network)?,
        start: PairConfiguration::mirror(gray.start)?.joint(),
        end: PairConfiguration::mirror(gray.end)?.joint(),
        claimed_distance: 2 * ((1u64 << n) - 1),
    })
}

fn random_images(n: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let mut images = vec![0u32; 1 << n];
    for i in 0..n {
        for image in images.iter_mut() {
            if rng.random::<bool>() {
                *image |= 1 << i;
            }
        }
    }
    images
}

/// Every table bit independent and uniform.
pub fn random_network(n: usize, seed: u64) -> Result<BooleanNetwork> {
    check_size("random network", n, MAX_RANDOM_COMPONENTS)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    BooleanNetwork::from_images(n, random_images(n, &mut rng))
}

/// [`random_network`] with every negative loop repaired in one pass.
///
/// Pairs `{x, x + e_i}` are scanned with `x` in increasing order. When
/// `f_i(x) = 1` and `f_i(x + e_i) = 0`, `f_i(x + e_i)` is reset to 1, making
/// `x + e_i` stable in component `i`.
pub fn random_no_negative_loop(n: usize, seed: u64) -> Result<BooleanNetwork> {
    let f = random_network(n, seed)?;
    let mut images = f.images().to_vec();
    for x in 0..images.len() {
        for i in 0..n {
            let bit = 1u32 << i;
            let high = x | bit as usize;
            if x & bit as usize == 0 && images[x] & bit != 0 && images[high] & bit == 0 {
                images[high] |= bit;
            }
        }
    }
    BooleanNetwork::from_images(n, images)
}

/// Upward closure of a random network: `f_i(x) = 1` iff `g_i(y) = 1` for
/// some `y <= x`.
pub fn random_monotone(n: usize, seed: u64) -> Result<BooleanNetwork> {
    upward_closure(&random_network(n, seed)?)
}

pub fn upward_closure(g: &BooleanNetwork) -> Result<BooleanNetwork> {
    let mut images = g.images().to_vec();
    for b in 0..g.n() {
        let bit = 1usize << b;
        for x in 0..images.len() {
            if x & bit != 0 {
                images[x] |= images[x ^ bit];
            }
        }
    }
    BooleanNetwork::from_images(g.n(), images)
}

/// A random network whose interaction graph is acyclic: a random order of
/// the components is drawn and each `f_i` only reads components strictly
/// earlier in that order.
pub fn random_acyclic(n: usize, seed: u64) -> Result<BooleanNetwork> {
    check_size("random network", n, MAX_RANDOM_COMPONENTS)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let table = random_images(n, &mut rng);
    let mut visible = vec![0u32; n];
    let mut earlier = 0u32;
    for &i in &order {
        visible[i] = earlier;
        earlier |= 1 << i;
    }
    let images = (0..1u32 << n)
        .map(|x| {
            (0..n).fold(0u32, |acc, i| {
                acc | table[(x & visible[i]) as usize] & (1 << i)
            })
        })
        .collect();
    debug_assert!(earlier == mask(n));
    BooleanNetwork::from_images(n, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asyncdyn::{
        distance, fixed_points, has_two_cycle, simulate, AsyncGraph, Distance, Schedule,
    };
    use crate::igraph::interaction_graph;

    fn lit(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    #[test]
    fn gray_order_for_two_components() {
        let w = gray_code_network(2).unwrap();
        let words: Vec<String> = w.words().iter().map(|c| c.to_string()).collect();
        assert_eq!(words, ["00", "01", "11", "10"]);
        assert_eq!(w.network.evaluate(&lit("00")).unwrap(), lit("01"));
        assert_eq!(w.network.evaluate(&lit("10")).unwrap(), lit("10"));
        assert_eq!(w.start, lit("00"));
        assert_eq!(w.end, lit("10"));
    }

    #[test]
    fn gray_words_are_adjacent_and_distinct() {
        for n in 1..=12 {
            let w = gray_code_network(n).unwrap();
            let words = w.words();
            for pair in words.windows(2) {
                assert_eq!(pair[0].hamming(&pair[1]), 1);
            }
            let mut sorted: Vec<u32> = words.iter().map(|c| c.bits()).collect();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), 1 << n);
        }
    }

    #[test]
    fn gray_path_is_the_whole_transition_set() {
        for n in 1..=6 {
            let w = gray_code_network(n).unwrap();
            let g = AsyncGraph::build(&w.network).unwrap();
            let words = w.words();
            let mut expected: Vec<(u32, u32)> = words
                .windows(2)
                .map(|p| (p[0].bits(), p[1].bits()))
                .collect();
            expected.sort_unstable();
            let actual: Vec<(u32, u32)> = g
                .transitions()
                .map(|(x, _, y)| (x.bits(), y.bits()))
                .collect();
            assert_eq!(actual, expected);
            assert_eq!(fixed_points(&w.network), vec![w.end]);
            assert!(!w.network.has_negative_loop());
            assert!(!has_two_cycle(&w.network));
            assert_eq!(
                distance(&w.network, &w.start, &w.end).unwrap(),
                Distance::Finite((1 << n) - 1)
            );
        }
    }

    #[test]
    fn gray_schedule_walks_the_path() {
        let w = gray_code_network(2).unwrap();
        let schedule = Schedule::new(w.flips());
        assert_eq!(schedule.steps(), &[1, 0, 1]);
        let traj = simulate(&w.network, &w.start, &schedule).unwrap();
        assert_eq!(traj, w.words());
    }

    #[test]
    fn witness_for_one_component() {
        let w = exp_diameter_monotone(1).unwrap();
        assert_eq!(w.start, lit("01"));
        assert_eq!(w.end, lit("10"));
        assert_eq!(w.claimed_distance, 2);
        assert_eq!(
            distance(&w.network, &w.start, &w.end).unwrap(),
            Distance::Finite(2)
        );
    }

    #[test]
    fn generators_are_deterministic() {
        for n in 1..=5 {
            for seed in 0..5 {
                assert_eq!(
                    random_network(n, seed).unwrap(),
                    random_network(n, seed).unwrap()
                );
                assert_eq!(
                    random_no_negative_loop(n, seed).unwrap(),
                    random_no_negative_loop(n, seed).unwrap()
                );
                assert_eq!(
                    random_monotone(n, seed).unwrap(),
                    random_monotone(n, seed).unwrap()
                );
                assert_eq!(
                    random_acyclic(n, seed).unwrap(),
                    random_acyclic(n, seed).unwrap()
                );
            }
        }
        assert_ne!(random_network(4, 0).unwrap(), random_network(4, 1).unwrap());
        assert!(random_network(13, 0).is_err());
    }

    #[test]
    fn generator_postconditions() {
        for n in 1..=6 {
            for seed in 0..30 {
                let f = random_no_negative_loop(n, seed).unwrap();
                assert!(!f.has_negative_loop());
                assert!(!has_two_cycle(&f));
                assert!(random_monotone(n, seed).unwrap().is_monotone());
                assert!(interaction_graph(&random_acyclic(n, seed).unwrap()).is_acyclic());
            }
        }
    }

    #[test]
    fn closure_of_zero_is_zero() {
        let zero = BooleanNetwork::constant(Configuration::zeros(4).unwrap());
        assert_eq!(upward_closure(&zero).unwrap(), zero);
    }

    #[test]
    fn unary_networks() {
        let mut seen = std::collections::HashSet::new();
        for seed in 0..64 {
            let f = random_network(1, seed).unwrap();
            assert_eq!(f.state_count(), 2);
            seen.insert(f.images().to_vec());
        }
        assert_eq!(seen.len(), 4);
    }
}
