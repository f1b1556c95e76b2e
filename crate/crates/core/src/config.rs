//! Configurations of `{0,1}^n`.
//!
//! Component `i` (0-based) is stored at bit `i` of a `u32`, so the integer
//! value of a configuration is its little-endian encoding and doubles as the
//! truth-table index. Literals print component 0 leftmost: `"01"` is the
//! configuration with component 0 off and component 1 on, integer value 2.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Hard cap on the number of components of any explicit network.
pub const MAX_COMPONENTS: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    n: u8,
    bits: u32,
}

impl Configuration {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        if n == 0 || n > MAX_COMPONENTS {
            return Err(Error::SizeLimit {
                what: "configuration",
                n,
                max: MAX_COMPONENTS,
            });
        }
        if bits >> n != 0 {
            return Err(Error::InvalidNetwork(format!(
                "value {bits} does not fit in {n} components"
            )));
        }
        Ok(Configuration { n: n as u8, bits })
    }

    /// Caller guarantees `1 <= n <= MAX_COMPONENTS` and `bits < 2^n`.
    pub(crate) fn from_raw(n: usize, bits: u32) -> Self {
        debug_assert!((1..=MAX_COMPONENTS).contains(&n) && bits >> n == 0);
        Configuration { n: n as u8, bits }
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn ones(n: usize) -> Result<Self> {
        Self::new(n, 0).map(|c| c.complement())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Little-endian integer encoding.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.n(),
            "component {i} out of range for n = {}",
            self.n
        );
        self.bits >> i & 1 == 1
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn complement(&self) -> Self {
        Configuration {
            n: self.n,
            bits: !self.bits & mask(self.n()),
        }
    }

    /// The configuration with component `i` switched.
    pub fn flip(&self, i: usize) -> Self {
        assert!(
            i < self.n(),
            "component {i} out of range for n = {}",
            self.n
        );
        Configuration {
            n: self.n,
            bits: self.bits ^ (1 << i),
        }
    }

    pub fn hamming(&self, other: &Configuration) -> u32 {
        assert_eq!(self.n, other.n, "hamming distance across dimensions");
        (self.bits ^ other.bits).count_ones()
    }

    /// Componentwise order `x <= y`.
    pub fn le(&self, other: &Configuration) -> bool {
        self.n == other.n && self.bits & !other.bits == 0
    }

    pub fn to_literal(&self) -> String {
        (0..self.n())
            .map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    pub fn parse_literal(s: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidLiteral {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        let n = s.len();
        if n == 0 {
            return Err(invalid("empty"));
        }
        if n > MAX_COMPONENTS {
            return Err(invalid("too many components"));
        }
        let mut bits = 0u32;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(invalid("characters must be '0' or '1'")),
            }
        }
        Ok(Configuration { n: n as u8, bits })
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Configuration({})", self.to_literal())
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_literal(s)
    }
}

pub(crate) fn mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// All `2^n` configurations in increasing integer order.
pub fn configurations(n: usize) -> impl Iterator<Item = Configuration> {
    assert!((1..=MAX_COMPONENTS).contains(&n));
    (0..1u32 << n).map(move |bits| Configuration::from_raw(n, bits))
}
