//! Positive roots of the root system A_{n-1}.
//!
//! The positive root `α_i + α_{i+1} + … + α_{j-1}` is stored as the node pair
//! `w_{ij}` with `1 <= i < j <= n`. Roots are enumerated in the basis order
//! `w12, w23, w13, w34, w24, w14, w45, …`, whose position function is
//! `binom(j-1, 2) + (j - i)`. The total order ≺ on roots is this position
//! order.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("position {pos} is out of range 1..={max} for n = {n}")]
    PositionOutOfRange { pos: usize, max: usize, n: usize },
    #[error("w({i},{j}) is not a positive root for n = {n}")]
    InvalidRoot { i: usize, j: usize, n: usize },
    #[error("cannot shift w({i},{j}) by α_{node} in direction {dir}: 2(β|α_{node}) = {inner}")]
    IllegalShift { i: usize, j: usize, node: usize, dir: char, inner: i32 },
}

/// Direction of a shift by a simple root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dir {
    Plus,
    Minus,
}

/// The positive root `w_{ij}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootIndex {
    i: usize,
    j: usize,
}

/// `binom(k, 2)`.
pub fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Number of positive roots of A_{n-1}.
pub fn num_roots(n: usize) -> usize {
    binom2(n)
}

impl RootIndex {
    /// `w_{ij}`; requires `1 <= i < j`.
    pub fn new(i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j, "w({i},{j}) needs 1 <= i < j");
        RootIndex { i, j }
    }

    /// `w_{ij}` checked against the rank parameter n.
    pub fn checked(i: usize, j: usize, n: usize) -> Result<Self, RootError> {
        if 1 <= i && i < j && j <= n {
            Ok(RootIndex { i, j })
        } else {
            Err(RootError::InvalidRoot { i, j, n })
        }
    }

    /// The simple root `α_k = w_{k,k+1}`.
    pub fn simple(k: usize) -> Self {
        RootIndex::new(k, k + 1)
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn height(&self) -> usize {
        self.j - self.i
    }

    /// 1-based basis position `binom(j-1, 2) + (j - i)`.
    pub fn position(&self) -> usize {
        binom2(self.j - 1) + (self.j - self.i)
    }

    /// 0-based index into coordinate vectors.
    pub fn index(&self) -> usize {
        self.position() - 1
    }

    /// Root at the 1-based position `pos` among the roots of A_{n-1}.
    pub fn at(pos: usize, n: usize) -> Result<Self, RootError> {
        let max = num_roots(n);
        if pos == 0 || pos > max {
            return Err(RootError::PositionOutOfRange { pos, max, n });
        }
        let mut j = 2;
        while binom2(j) < pos {
            j += 1;
        }
        let h = pos - binom2(j - 1);
        Ok(RootIndex { i: j - h, j })
    }

    /// `2(β|α_k)`, one of -1, 0, 1, 2.
    pub fn inner2(&self, k: usize) -> i32 {
        let (s, t) = (self.i, self.j);
        if s == k && t == k + 1 {
            2
        } else if (s == k && k < t - 1) || (s < k && k == t - 1) {
            1
        } else if k + 1 == s || k == t {
            -1
        } else {
            0
        }
    }

    /// `β - α_k` (for `2(β|α_k) = 1`) or `β + α_k` (for `2(β|α_k) = -1`).
    pub fn shift(&self, k: usize, dir: Dir) -> Result<Self, RootError> {
        let inner = self.inner2(k);
        let (s, t) = (self.i, self.j);
        let illegal = || RootError::IllegalShift {
            i: s,
            j: t,
            node: k,
            dir: if dir == Dir::Plus { '+' } else { '-' },
            inner,
        };
        match (dir, inner) {
            (Dir::Minus, 1) if s == k => Ok(RootIndex { i: s + 1, j: t }),
            (Dir::Minus, 1) => Ok(RootIndex { i: s, j: t - 1 }),
            (Dir::Plus, -1) if k + 1 == s => Ok(RootIndex { i: s - 1, j: t }),
            (Dir::Plus, -1) => Ok(RootIndex { i: s, j: t + 1 }),
            _ => Err(illegal()),
        }
    }

    /// The order ≺: strictly earlier in the basis.
    pub fn precedes(&self, other: &RootIndex) -> bool {
        self.position() < other.position()
    }
}

impl PartialOrd for RootIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootIndex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.position().cmp(&other.position())
    }
}

impl fmt::Display for RootIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i < 10 && self.j < 10 {
            write!(f, "w{}{}", self.i, self.j)
        } else {
            write!(f, "w{},{}", self.i, self.j)
        }
    }
}

impl fmt::Debug for RootIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All positive roots of A_{n-1} in basis order.
pub fn roots(n: usize) -> impl Iterator<Item = RootIndex> {
    (2..=n).flat_map(|j| (1..j).rev().map(move |i| RootIndex { i, j }))
}
