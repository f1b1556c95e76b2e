//! The asynchronous graph: one component updated per step.
//!
//! There is a transition `x -> flip(x, i)` whenever `f_i(x) != x_i`, so the
//! set of components that may move from `x` is the bitmask `f(x) ^ x`. All
//! traversals here work on that implicit graph; [`AsyncGraph`] only caches it.

use std::collections::VecDeque;
use std::fmt;

use crate::config::{configurations, Configuration};
use crate::error::{check_size, Error, Result};
use crate::network::BooleanNetwork;

/// Largest `n` for which [`AsyncGraph::build`] materializes adjacency.
pub const MAX_EXPLICIT_COMPONENTS: usize = 20;
/// Default largest `n` for [`diameter`] (all-pairs BFS).
pub const MAX_DIAMETER_COMPONENTS: usize = 14;

const UNREACHED: u32 = u32::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Distance {
    Finite(u64),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_reachable(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

/// A finite update schedule `i_0 i_1 ... i_{T-1}` of 0-based components.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Schedule(Vec<usize>);

impl Schedule {
    pub fn new(steps: Vec<usize>) -> Self {
        Schedule(steps)
    }

    pub fn steps(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i >= n) {
            Some(&index) => Err(Error::IndexOutOfRange { index, n }),
            None => Ok(()),
        }
    }
}

impl From<Vec<usize>> for Schedule {
    fn from(steps: Vec<usize>) -> Self {
        Schedule(steps)
    }
}

/// Distances from (or to) one configuration, for every state.
#[derive(Clone, Debug)]
pub struct DistanceMap {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMap {
    pub fn get(&self, y: &Configuration) -> Distance {
        assert_eq!(y.n(), self.n);
        self.get_index(y.bits())
    }

    pub fn get_index(&self, y: u32) -> Distance {
        match self.dist[y as usize] {
            UNREACHED => Distance::Unreachable,
            d => Distance::Finite(d as u64),
        }
    }

    /// Largest finite entry.
    pub fn eccentricity(&self) -> u64 {
        self.dist
            .iter()
            .filter(|&&d| d != UNREACHED)
            .max()
            .copied()
            .unwrap_or(0) as u64
    }
}

#[inline]
fn moves(f: &BooleanNetwork, x: u32) -> u32 {
    f.image(x) ^ x
}

fn check_dim(f: &BooleanNetwork, x: &Configuration) -> Result<()> {
    if x.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            found: x.n(),
        });
    }
    Ok(())
}

/// Iterates the set bits of `mask` in increasing order.
fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Materialized asynchronous graph.
#[derive(Clone, Debug)]
pub struct AsyncGraph {
    network: BooleanNetwork,
    moves: Vec<u32>,
}

impl AsyncGraph {
    pub fn build(f: &BooleanNetwork) -> Result<Self> {
        check_size(
            "explicit asynchronous graph",
            f.n(),
            MAX_EXPLICIT_COMPONENTS,
        )?;
        let moves = (0..f.state_count() as u32).map(|x| moves(f, x)).collect();
        Ok(AsyncGraph {
            network: f.clone(),
            moves,
        })
    }

    pub fn n(&self) -> usize {
        self.network.n()
    }

    pub fn network(&self) -> &BooleanNetwork {
        &self.network
    }

    pub fn successors(&self, x: &Configuration) -> Vec<Configuration> {
        assert_eq!(x.n(), self.n());
        bits(self.moves[x.bits() as usize])
            .map(|i| x.flip(i))
            .collect()
    }

    pub fn out_degree(&self, x: &Configuration) -> u32 {
        self.moves[x.bits() as usize].count_ones()
    }

    pub fn has_transition(&self, x: &Configuration, y: &Configuration) -> bool {
        let diff = x.bits() ^ y.bits();
        diff.count_ones() == 1 && self.moves[x.bits() as usize] & diff != 0
    }

    pub fn transition_count(&self) -> usize {
        self.moves.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Transitions as `(from, flipped component, to)`, sorted by the integer
    /// encoding of `from` and then by component.
    pub fn transitions(&self) -> impl Iterator<Item = (Configuration, usize, Configuration)> + '_ {
        configurations(self.n())
            .flat_map(move |x| bits(self.moves[x.bits() as usize]).map(move |i| (x, i, x.flip(i))))
    }
}

pub fn async_graph(f: &BooleanNetwork) -> Result<AsyncGraph> {
    AsyncGraph::build(f)
}

/// Out-neighbours of `x`, ordered by flipped component.
pub fn successors(f: &BooleanNetwork, x: &Configuration) -> Result<Vec<Configuration>> {
    check_dim(f, x)?;
    Ok(bits(moves(f, x.bits())).map(|i| x.flip(i)).collect())
}

/// Predecessors of state `y`: states `flip(y, i)` that move to `y`.
fn predecessors(f: &BooleanNetwork, y: u32) -> impl Iterator<Item = u32> + '_ {
    (0..f.n()).filter_map(move |i| {
        let x = y ^ 1 << i;
        (moves(f, x) >> i & 1 == 1).then_some(x)
    })
}

fn bfs(f: &BooleanNetwork, source: u32, target: Option<u32>, reverse: bool) -> Vec<u32> {
    let mut dist = vec![UNREACHED; f.state_count()];
    let mut queue = VecDeque::new();
    dist[source as usize] = 0;
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        if Some(x) == target {
            break;
        }
        let d = dist[x as usize] + 1;
        let mut relax = |y: u32| {
            if dist[y as usize] == UNREACHED {
                dist[y as usize] = d;
                queue.push_back(y);
            }
        };
        if reverse {
            predecessors(f, x).for_each(&mut relax);
        } else {
            bits(moves(f, x)).for_each(|i| relax(x ^ 1 << i));
        }
    }
    dist
}

/// BFS distances from `x` to every state.
pub fn distances_from(f: &BooleanNetwork, x: &Configuration) -> Result<DistanceMap> {
    check_dim(f, x)?;
    Ok(DistanceMap {
        n: f.n(),
        dist: bfs(f, x.bits(), None, false),
    })
}

/// BFS distances from every state to `y`, over reversed transitions.
pub fn distances_to(f: &BooleanNetwork, y: &Configuration) -> Result<DistanceMap> {
    check_dim(f, y)?;
    Ok(DistanceMap {
        n: f.n(),
        dist: bfs(f, y.bits(), None, true),
    })
}

/// Length of a shortest path from `x` to `y`.
pub fn distance(f: &BooleanNetwork, x: &Configuration, y: &Configuration) -> Result<Distance> {
    check_dim(f, x)?;
    check_dim(f, y)?;
    let dist = bfs(f, x.bits(), Some(y.bits()), false);
    Ok(DistanceMap { n: f.n(), dist }.get(y))
}

/// Maximum finite distance over all ordered pairs; capped at
/// [`MAX_DIAMETER_COMPONENTS`].
pub fn diameter(f: &BooleanNetwork) -> Result<u64> {
    check_size("diameter", f.n(), MAX_DIAMETER_COMPONENTS)?;
    Ok(diameter_unchecked(f))
}

pub fn diameter_unchecked(f: &BooleanNetwork) -> u64 {
    (0..f.state_count() as u32)
        .map(|x| {
            DistanceMap {
                n: f.n(),
                dist: bfs(f, x, None, false),
            }
            .eccentricity()
        })
        .max()
        .unwrap_or(0)
}

pub fn fixed_points(f: &BooleanNetwork) -> Vec<Configuration> {
    configurations(f.n())
        .filter(|x| f.image(x.bits()) == x.bits())
        .collect()
}

/// True iff some shortest path from `x` to `y` updates each component at
/// most once.
pub fn has_geodesic(f: &BooleanNetwork, x: &Configuration, y: &Configuration) -> Result<bool> {
    Ok(distance(f, x, y)? == Distance::Finite(x.hamming(y) as u64))
}

/// The smallest fixed point reachable from `x` by a geodesic, if any.
pub fn geodesic_fixed_point(
    f: &BooleanNetwork,
    x: &Configuration,
) -> Result<Option<Configuration>> {
    let from_x = distances_from(f, x)?;
    Ok(fixed_points(f)
        .into_iter()
        .find(|y| from_x.get(y) == Distance::Finite(x.hamming(y) as u64)))
}

/// Trajectory `x^0 ... x^T` where step `t` updates only component `i_t`.
pub fn simulate(
    f: &BooleanNetwork,
    x0: &Configuration,
    schedule: &Schedule,
) -> Result<Vec<Configuration>> {
    check_dim(f, x0)?;
    schedule.validate(f.n())?;
    let mut trajectory = Vec::with_capacity(schedule.len() + 1);
    let mut x = *x0;
    trajectory.push(x);
    for &i in schedule.steps() {
        if f.image(x.bits()) >> i & 1 != x.bits() >> i & 1 {
            x = x.flip(i);
        }
        trajectory.push(x);
    }
    Ok(trajectory)
}

/// True iff some pair `x <-> flip(x, i)` has transitions both ways.
pub fn has_two_cycle(f: &BooleanNetwork) -> bool {
    find_two_cycle(f).is_some()
}

pub(crate) fn find_two_cycle(f: &BooleanNetwork) -> Option<(Configuration, Configuration)> {
    let n = f.n();
    for x in 0..f.state_count() as u32 {
        for i in bits(moves(f, x)) {
            let y = x ^ 1 << i;
            if moves(f, y) >> i & 1 == 1 {
                return Some((Configuration::from_raw(n, x), Configuration::from_raw(n, y)));
            }
        }
    }
    None
}

/// Some directed cycle of the asynchronous graph, found by depth-first
/// search, or `None` if the graph is acyclic.
pub fn find_cycle(f: &BooleanNetwork) -> Option<Vec<Configuration>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Grey,
        Black,
    }
    let n = f.n();
    let mut color = vec![Color::White; f.state_count()];
    for root in 0..f.state_count() as u32 {
        if color[root as usize] != Color::White {
            continue;
        }
        // stack of (state, remaining moves)
        let mut stack = vec![(root, moves(f, root))];
        color[root as usize] = Color::Grey;
        while let Some(top) = stack.last_mut() {
            let (x, rest) = *top;
            if rest == 0 {
                color[x as usize] = Color::Black;
                stack.pop();
                continue;
            }
            let i = rest.trailing_zeros();
            top.1 &= rest - 1;
            let y = x ^ 1 << i;
            match color[y as usize] {
                Color::White => {
                    color[y as usize] = Color::Grey;
                    stack.push((y, moves(f, y)));
                }
                Color::Grey => {
                    let start = stack.iter().position(|&(s, _)| s == y).unwrap();
                    return Some(
                        stack[start..]
                            .iter()
                            .map(|&(s, _)| Configuration::from_raw(n, s))
                            .collect(),
                    );
                }
                Color::Black => {}
            }
        }
    }
    None
}
