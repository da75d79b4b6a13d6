//! Cyclic indices in `Z_k` and the circular order on them.
//!
//! `i ⪯ j` holds when `j ⊖ i` lies in `{0, .., floor(k/2)}`. The relation is
//! not transitive; it only compares indices that are close on the circle.

use std::fmt;

use crate::error::Error;

/// An element of `Z_k` that remembers its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycIndex {
    value: usize,
    modulus: usize,
}

impl CycIndex {
    /// Builds `value mod modulus`. Panics if `modulus == 0`.
    pub fn new(value: usize, modulus: usize) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        CycIndex { value: value % modulus, modulus }
    }

    pub fn value(self) -> usize {
        self.value
    }

    pub fn modulus(self) -> usize {
        self.modulus
    }

    /// `self ⊕ delta`; `delta` may be negative.
    pub fn add(self, delta: i64) -> Self {
        let k = self.modulus as i64;
        let v = (self.value as i64 + delta).rem_euclid(k);
        CycIndex { value: v as usize, modulus: self.modulus }
    }

    /// `self ⊖ delta`.
    pub fn sub(self, delta: i64) -> Self {
        self.add(-delta)
    }

    fn check(self, other: CycIndex) -> Result<(), Error> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        Ok(())
    }

    /// The representative of `self ⊖ other` in `{0, .., k-1}`.
    pub fn diff(self, other: CycIndex) -> Result<usize, Error> {
        self.check(other)?;
        Ok(sub_mod(self.value, other.value, self.modulus))
    }

    /// `self ⪯ other`.
    pub fn circ_leq(self, other: CycIndex) -> Result<bool, Error> {
        self.check(other)?;
        Ok(circ_leq(self.value, other.value, self.modulus))
    }

    /// `self ≺ other`.
    pub fn circ_lt(self, other: CycIndex) -> Result<bool, Error> {
        self.check(other)?;
        Ok(circ_lt(self.value, other.value, self.modulus))
    }
}

impl fmt::Display for CycIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// `(a + b) mod k` for reduced `a`.
pub fn add_mod(a: usize, b: usize, k: usize) -> usize {
    (a + b % k) % k
}

/// `(a - b) mod k` for reduced `a`.
pub fn sub_mod(a: usize, b: usize, k: usize) -> usize {
    (a + k - b % k) % k
}

/// `i ⪯ j` in `Z_k` on raw representatives.
pub fn circ_leq(i: usize, j: usize, k: usize) -> bool {
    sub_mod(j, i, k) <= k / 2
}

/// `i ≺ j` in `Z_k` on raw representatives.
pub fn circ_lt(i: usize, j: usize, k: usize) -> bool {
    i % k != j % k && circ_leq(i, j, k)
}
