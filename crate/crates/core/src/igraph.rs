//! Signed interaction graphs and their cycles.

use std::collections::BTreeSet;
use std::fmt;

use crate::network::BooleanNetwork;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// An arc `source -> target` (0-based vertices).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Arc {
    pub source: usize,
    pub target: usize,
    pub sign: Sign,
}

impl Arc {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// Directed graph on `0..n` whose arcs carry a sign. A pair of vertices may
/// be joined by both a positive and a negative arc.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedDigraph {
    n: usize,
    arcs: BTreeSet<Arc>,
}

impl SignedDigraph {
    pub fn new(n: usize) -> Self {
        SignedDigraph {
            n,
            arcs: BTreeSet::new(),
        }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Self {
        let mut g = SignedDigraph::new(n);
        for arc in arcs {
            g.insert(arc);
        }
        g
    }

    pub fn insert(&mut self, arc: Arc) -> bool {
        assert!(arc.source < self.n && arc.target < self.n);
        self.arcs.insert(arc)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs sorted by (source, target, sign).
    pub fn arcs(&self) -> impl Iterator<Item = &Arc> + '_ {
        self.arcs.iter()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn contains(&self, source: usize, target: usize, sign: Sign) -> bool {
        self.arcs.contains(&Arc {
            source,
            target,
            sign,
        })
    }

    pub fn has_negative_loop(&self) -> bool {
        self.arcs
            .iter()
            .any(|a| a.is_loop() && a.sign == Sign::Negative)
    }

    fn signs_between(&self, source: usize, target: usize) -> Vec<Sign> {
        [Sign::Positive, Sign::Negative]
            .into_iter()
            .filter(|&s| self.contains(source, target, s))
            .collect()
    }

    /// Sorted, deduplicated out-neighbours of the unsigned digraph.
    fn successor_lists(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for a in &self.arcs {
            if out[a.source].last() != Some(&a.target) {
                out[a.source].push(a.target);
            }
        }
        out
    }

    /// True iff the underlying unsigned digraph has no cycle; loops count.
    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm
        let succ = self.successor_lists();
        let mut indegree = vec![0usize; self.n];
        for targets in &succ {
            for &t in targets {
                indegree[t] += 1;
            }
        }
        let mut ready: Vec<usize> = (0..self.n).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = ready.pop() {
            removed += 1;
            for &t in &succ[v] {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    ready.push(t);
                }
            }
        }
        removed == self.n
    }

    /// Visits every simple cycle of the unsigned digraph with at most
    /// `max_len` vertices, as a vertex sequence starting at its minimum
    /// vertex, in lexicographic order.
    fn for_each_simple_cycle(&self, max_len: usize, mut visit: impl FnMut(&[usize])) {
        let succ = self.successor_lists();
        let mut path = Vec::with_capacity(self.n);
        let mut on_path = vec![false; self.n];
        for root in 0..self.n {
            path.push(root);
            on_path[root] = true;
            extend_cycles(&succ, root, max_len, &mut path, &mut on_path, &mut visit);
            on_path[root] = false;
            path.pop();
        }
    }

    /// All simple cycles of length at most `max_len`, one entry per choice of
    /// signed arc along the cycle.
    pub fn signed_cycles(&self, max_len: usize) -> Vec<SignedCycle> {
        let mut out = Vec::new();
        self.for_each_simple_cycle(max_len, |vertices| {
            let options: Vec<Vec<Sign>> = (0..vertices.len())
                .map(|k| self.signs_between(vertices[k], vertices[(k + 1) % vertices.len()]))
                .collect();
            let mut choice = vec![0usize; options.len()];
            loop {
                let arc_signs: Vec<Sign> = choice
                    .iter()
                    .zip(&options)
                    .map(|(&c, opts)| opts[c])
                    .collect();
                let sign = arc_signs
                    .iter()
                    .fold(Sign::Positive, |acc, &s| acc.times(s));
                out.push(SignedCycle {
                    vertices: vertices.to_vec(),
                    arc_signs,
                    sign,
                });
                // odometer over the sign choices, last arc fastest
                let mut k = choice.len();
                loop {
                    if k == 0 {
                        return;
                    }
                    k -= 1;
                    choice[k] += 1;
                    if choice[k] < options[k].len() {
                        break;
                    }
                    choice[k] = 0;
                }
            }
        });
        out
    }

    /// Which cycle signs occur, without expanding sign choices.
    pub fn cycle_signs(&self) -> CycleSigns {
        let mut found = CycleSigns::default();
        self.for_each_simple_cycle(self.n, |vertices| {
            let mut achievable = [true, false]; // [positive, negative]
            for k in 0..vertices.len() {
                let signs = self.signs_between(vertices[k], vertices[(k + 1) % vertices.len()]);
                let mut next = [false, false];
                for s in signs {
                    for (parity, &reached) in achievable.iter().enumerate() {
                        if reached {
                            let flipped = s == Sign::Negative;
                            next[parity ^ flipped as usize] = true;
                        }
                    }
                }
                achievable = next;
            }
            found.positive |= achievable[0];
            found.negative |= achievable[1];
        });
        found
    }
}

fn extend_cycles(
    succ: &[Vec<usize>],
    root: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut impl FnMut(&[usize]),
) {
    let last = *path.last().unwrap();
    for &next in &succ[last] {
        if next == root {
            visit(path);
        } else if next > root && !on_path[next] && path.len() < max_len {
            path.push(next);
            on_path[next] = true;
            extend_cycles(succ, root, max_len, path, on_path, visit);
            on_path[next] = false;
            path.pop();
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedCycle {
    /// Vertex sequence starting at the cycle's minimum vertex.
    pub vertices: Vec<usize>,
    /// Sign of the arc leaving each vertex of `vertices`.
    pub arc_signs: Vec<Sign>,
    pub sign: Sign,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct CycleSigns {
    pub positive: bool,
    pub negative: bool,
}

/// The signed interaction graph of `f`: an arc `j -> i` of sign `s` whenever
/// flipping `x_j` from 0 to 1 changes `f_i` by `s` for some `x`.
pub fn interaction_graph(f: &BooleanNetwork) -> SignedDigraph {
    let n = f.n();
    let mut g = SignedDigraph::new(n);
    for j in 0..n {
        let bit = 1u32 << j;
        let mut increasing = 0u32;
        let mut decreasing = 0u32;
        for x in (0..f.state_count() as u32).filter(|x| x & bit == 0) {
            let low = f.image(x);
            let high = f.image(x | bit);
            let changed = low ^ high;
            increasing |= changed & high;
            decreasing |= changed & low;
        }
        for i in 0..n {
            if increasing >> i & 1 == 1 {
                g.insert(Arc {
                    source: j,
                    target: i,
                    sign: Sign::Positive,
                });
            }
            if decreasing >> i & 1 == 1 {
                g.insert(Arc {
                    source: j,
                    target: i,
                    sign: Sign::Negative,
                });
            }
        }
    }
    g
}
