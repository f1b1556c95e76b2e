//! Embedding of a network without negative loops into a monotone network on
//! twice as many components.
//!
//! A configuration of the host is a pair `(x, y)` with `x` on components
//! `0..n` and `y` on `n..2n`. The image of the original state space is the
//! mirror set `{(x, !x)}`; host dynamics stay in the three middle weight
//! layers around it and collapse to all-zeros or all-ones elsewhere.

use crate::config::{configurations, mask, Configuration, MAX_COMPONENTS};
use crate::error::{Error, Result};
use crate::network::BooleanNetwork;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PairConfiguration {
    x: Configuration,
    y: Configuration,
}

impl PairConfiguration {
    pub fn new(x: Configuration, y: Configuration) -> Result<Self> {
        if x.n() != y.n() {
            return Err(Error::DimensionMismatch {
                expected: x.n(),
                found: y.n(),
            });
        }
        if 2 * x.n() > MAX_COMPONENTS {
            return Err(Error::SizeLimit {
                what: "pair configuration",
                n: 2 * x.n(),
                max: MAX_COMPONENTS,
            });
        }
        Ok(PairConfiguration { x, y })
    }

    /// `(x, !x)`.
    pub fn mirror(x: Configuration) -> Result<Self> {
        Self::new(x, x.complement())
    }

    /// Splits a configuration on `2n` components.
    pub fn split(z: &Configuration) -> Result<Self> {
        if !z.n().is_multiple_of(2) {
            return Err(Error::InvalidNetwork(format!(
                "cannot split {} components into two halves",
                z.n()
            )));
        }
        let n = z.n() / 2;
        Ok(PairConfiguration {
            x: Configuration::from_raw(n, z.bits() & mask(n)),
            y: Configuration::from_raw(n, z.bits() >> n),
        })
    }

    pub fn n(&self) -> usize {
        self.x.n()
    }

    pub fn x(&self) -> Configuration {
        self.x
    }

    pub fn y(&self) -> Configuration {
        self.y
    }

    pub fn joint(&self) -> Configuration {
        Configuration::from_raw(2 * self.n(), self.x.bits() | self.y.bits() << self.n())
    }

    pub fn weight(&self) -> u32 {
        self.x.weight() + self.y.weight()
    }

    pub fn in_omega(&self) -> bool {
        self.y == self.x.complement()
    }

    pub fn layer(&self) -> Layer {
        Layer::of_weight(self.weight() as usize, self.n())
    }
}

/// Weight layers of `{0,1}^{2n}` relative to `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Layer {
    /// weight `<= n - 2`
    Below,
    /// weight `n - 1`
    A,
    /// weight `n`
    B,
    /// weight `n + 1`
    C,
    /// weight `>= n + 2`
    Above,
}

impl Layer {
    pub fn of_weight(weight: usize, n: usize) -> Layer {
        if weight + 2 <= n {
            Layer::Below
        } else if weight + 1 == n {
            Layer::A
        } else if weight == n {
            Layer::B
        } else if weight == n + 1 {
            Layer::C
        } else {
            Layer::Above
        }
    }
}

pub fn pair_weight(x: &Configuration, y: &Configuration) -> Result<u32> {
    Ok(PairConfiguration::new(*x, *y)?.weight())
}

pub fn in_omega(z: &PairConfiguration) -> bool {
    z.in_omega()
}

pub fn layer(z: &PairConfiguration) -> Layer {
    z.layer()
}

/// The six defining cases of the first-half components, in order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EmbedCase {
    /// `y = !x` or `flip(y, i) = !x`: follow `f_i(x)`.
    Mirror,
    /// weight `n`, `y != !x`: `!x_i`.
    Balanced,
    /// weight `n + 1`, `flip(y, i) != !x`: 1.
    UpperLayer,
    /// weight `n - 1`, `flip(y, i) != !x`: 0.
    LowerLayer,
    /// weight `>= n + 2`: 1.
    Above,
    /// weight `<= n - 2`: 0.
    Below,
}

/// Every case whose condition holds for component `i` at `(x, y)`, with the
/// value it prescribes. Integer encodings, `x, y < 2^n`.
pub fn applicable_cases(f: &BooleanNetwork, x: u32, y: u32, i: usize) -> Vec<(EmbedCase, bool)> {
    let n = f.n();
    let not_x = !x & mask(n);
    let weight = (x.count_ones() + y.count_ones()) as usize;
    let mirrored = y == not_x;
    let near_mirror = y ^ 1 << i == not_x;
    let mut cases = Vec::new();
    if mirrored || near_mirror {
        cases.push((EmbedCase::Mirror, f.image(x) >> i & 1 == 1));
    }
    if weight == n && !mirrored {
        cases.push((EmbedCase::Balanced, x >> i & 1 == 0));
    }
    if weight == n + 1 && !near_mirror {
        cases.push((EmbedCase::UpperLayer, true));
    }
    if weight + 1 == n && !near_mirror {
        cases.push((EmbedCase::LowerLayer, false));
    }
    if weight >= n + 2 {
        cases.push((EmbedCase::Above, true));
    }
    if weight + 2 <= n {
        cases.push((EmbedCase::Below, false));
    }
    cases
}

/// First-half component `i` of the embedding at `(x, y)`, first matching
/// case wins.
#[inline]
fn lower_component(f: &BooleanNetwork, x: u32, y: u32, i: usize) -> bool {
    let n = f.n();
    let not_x = !x & mask(n);
    let weight = (x.count_ones() + y.count_ones()) as usize;
    if y == not_x || y ^ 1 << i == not_x {
        f.image(x) >> i & 1 == 1
    } else if weight == n {
        x >> i & 1 == 0
    } else {
        // near-mirror inputs were handled above, so the remaining layers
        // are decided by weight alone
        weight > n
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EmbedOptions {
    /// Build the host even if `f` has a negative loop. Monotonicity of the
    /// result is then not guaranteed.
    pub force: bool,
}

/// Builds the `2n`-component host network of `f`.
pub fn embed(f: &BooleanNetwork) -> Result<BooleanNetwork> {
    embed_with(f, EmbedOptions::default())
}

pub fn embed_with(f: &BooleanNetwork, options: EmbedOptions) -> Result<BooleanNetwork> {
    let n = f.n();
    if 2 * n > MAX_COMPONENTS {
        return Err(Error::SizeLimit {
            what: "embedding host",
            n: 2 * n,
            max: MAX_COMPONENTS,
        });
    }
    if !options.force {
        if let Some(component) = f.negative_loop_component() {
            return Err(Error::NegativeLoop { component });
        }
    }
    let low = mask(n);
    let images = (0..1u32 << (2 * n))
        .map(|z| {
            let (x, y) = (z & low, z >> n);
            // the second half reads the first half at (!y, !x)
            let (mx, my) = (!y & low, !x & low);
            let mut image = 0u32;
            for i in 0..n {
                if lower_component(f, x, y, i) {
                    image |= 1 << i;
                }
                if !lower_component(f, mx, my, i) {
                    image |= 1 << (n + i);
                }
            }
            image
        })
        .collect();
    BooleanNetwork::from_images(2 * n, images)
}

/// Checks `f'_i(x, y) = !f'_{n+i}(!y, !x)` for every first-half component.
pub fn mirror_identity_check(fprime: &BooleanNetwork) -> bool {
    find_mirror_violation(fprime).is_none()
}

pub(crate) fn find_mirror_violation(fprime: &BooleanNetwork) -> Option<(Configuration, usize)> {
    let m = fprime.n();
    if !m.is_multiple_of(2) {
        return configurations(m).next().map(|z| (z, 0));
    }
    let n = m / 2;
    let low = mask(n);
    for z in configurations(m) {
        let (x, y) = (z.bits() & low, z.bits() >> n);
        let mirrored = (!x & low) << n | (!y & low);
        for i in 0..n {
            let lower = fprime.image(z.bits()) >> i & 1;
            let upper = fprime.image(mirrored) >> (n + i) & 1;
            if lower == upper {
                return Some((z, i));
            }
        }
    }
    None
}
