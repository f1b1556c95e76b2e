//! Boolean networks as explicit truth tables.

use crate::config::{configurations, mask, Configuration, MAX_COMPONENTS};
use crate::error::{Error, Result};

/// A map `f: {0,1}^n -> {0,1}^n` stored as its full image table.
///
/// `images[x]` is the little-endian encoding of `f(x)`; bit `i` of that word
/// is entry `x` of the truth table of component `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BooleanNetwork {
    n: usize,
    images: Vec<u32>,
}

impl BooleanNetwork {
    pub fn from_images(n: usize, images: Vec<u32>) -> Result<Self> {
        if n == 0 || n > MAX_COMPONENTS {
            return Err(Error::SizeLimit {
                what: "boolean network",
                n,
                max: MAX_COMPONENTS,
            });
        }
        if images.len() != 1 << n {
            return Err(Error::InvalidNetwork(format!(
                "expected {} table entries, found {}",
                1usize << n,
                images.len()
            )));
        }
        if let Some(x) = images.iter().position(|&y| y & !mask(n) != 0) {
            return Err(Error::InvalidNetwork(format!(
                "image of state {x} has bits beyond component {n}"
            )));
        }
        Ok(BooleanNetwork { n, images })
    }

    /// Builds a network from one truth table per component.
    pub fn from_tables(tables: &[Vec<bool>]) -> Result<Self> {
        let n = tables.len();
        crate::error::check_size("boolean network", n, MAX_COMPONENTS)?;
        if n == 0 {
            return Err(Error::InvalidNetwork("no components".into()));
        }
        let mut images = vec![0u32; 1 << n];
        for (i, table) in tables.iter().enumerate() {
            if table.len() != 1 << n {
                return Err(Error::InvalidNetwork(format!(
                    "table {} has {} entries, expected {}",
                    i,
                    table.len(),
                    1usize << n
                )));
            }
            for (x, &bit) in table.iter().enumerate() {
                if bit {
                    images[x] |= 1 << i;
                }
            }
        }
        Ok(BooleanNetwork { n, images })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(Configuration) -> Configuration) -> Result<Self> {
        crate::error::check_size("boolean network", n, MAX_COMPONENTS)?;
        if n == 0 {
            return Err(Error::InvalidNetwork("no components".into()));
        }
        let mut images = Vec::with_capacity(1 << n);
        for x in configurations(n) {
            let y = f(x);
            if y.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: y.n(),
                });
            }
            images.push(y.bits());
        }
        Ok(BooleanNetwork { n, images })
    }

    /// Builds a network from its local functions `f_i`.
    pub fn from_components(
        n: usize,
        mut f: impl FnMut(usize, Configuration) -> bool,
    ) -> Result<Self> {
        Self::from_fn(n, |x| {
            let bits = (0..n).fold(0u32, |acc, i| acc | (f(i, x) as u32) << i);
            Configuration::from_raw(n, bits)
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, |x| x)
    }

    pub fn constant(value: Configuration) -> Self {
        let n = value.n();
        BooleanNetwork {
            n,
            images: vec![value.bits(); 1 << n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn state_count(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `f(x)` for the state with encoding `x`. Panics if `x >= 2^n`.
    #[inline]
    pub fn image(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn evaluate(&self, x: &Configuration) -> Result<Configuration> {
        if x.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.n(),
            });
        }
        Ok(Configuration::from_raw(self.n, self.image(x.bits())))
    }

    /// `f_i(x)`.
    pub fn component(&self, i: usize, x: &Configuration) -> Result<bool> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        Ok(self.evaluate(x)?.get(i))
    }

    /// Truth table of component `i`, indexed by state encoding.
    pub fn table(&self, i: usize) -> Vec<bool> {
        assert!(i < self.n);
        self.images.iter().map(|&y| y >> i & 1 == 1).collect()
    }

    /// Monotonicity through covering pairs: `f(x) <= f(x + e_i)` whenever
    /// `x_i = 0`.
    pub fn is_monotone(&self) -> bool {
        self.monotonicity_violation().is_none()
    }

    /// A covering pair `x < x + e_i` with `f(x) > f(x + e_i)` somewhere.
    pub(crate) fn monotonicity_violation(&self) -> Option<(Configuration, Configuration)> {
        for x in 0..self.images.len() as u32 {
            let low = self.image(x);
            for i in (0..self.n).filter(|&i| x >> i & 1 == 0) {
                let y = x | 1 << i;
                if low & !self.image(y) != 0 {
                    return Some((
                        Configuration::from_raw(self.n, x),
                        Configuration::from_raw(self.n, y),
                    ));
                }
            }
        }
        None
    }

    /// True iff some `f_i` decreases when `x_i` alone goes from 0 to 1.
    pub fn has_negative_loop(&self) -> bool {
        self.negative_loop_component().is_some()
    }

    pub(crate) fn negative_loop_component(&self) -> Option<usize> {
        for x in 0..self.images.len() as u32 {
            for i in 0..self.n {
                let bit = 1 << i;
                if x & bit == 0 && self.image(x) & bit != 0 && self.image(x | bit) & bit == 0 {
                    return Some(i);
                }
            }
        }
        None
    }
}
