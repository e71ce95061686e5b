//! Integer partitions and the hook length formula.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("a partition needs at least one part")]
    Empty,
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
}

/// A partition of n: a nonempty weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.is_empty() {
            return Err(PartitionError::Empty);
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (0..cols).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect();
        Partition { parts }
    }

    /// Hook lengths of all boxes, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.n());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push((row - j - 1) + (conj.parts[j] - i - 1) + 1);
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Number of standard tableaux of shape λ: n! divided by the product of the
/// hook lengths. Exact for n <= 34.
pub fn hook_dim(lambda: &Partition) -> u128 {
    let n = lambda.n();
    assert!(n <= 34, "n! overflows u128 beyond n = 34");
    let factorial: u128 = (1..=n as u128).product();
    let hooks: u128 = lambda.hooks().iter().map(|&h| h as u128).product();
    factorial / hooks
}

/// All partitions of n in reverse lexicographic order, starting with (n).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    assert!(n >= 1, "partitions of a positive integer");
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every partition of n with its dimension.
pub fn sym_dims(n: usize) -> Vec<(Partition, u128)> {
    partitions(n).into_iter().map(|p| {
        let d = hook_dim(&p);
        (p, d)
    }).collect()
}

/// Partitions whose dimension is at most (n-1)(n-2)/2 but is not one of
/// 1, n-1, n(n-3)/2, (n-1)(n-2)/2.
pub fn dim_gaps(n: usize) -> Vec<(Partition, u128)> {
    assert!(n >= 4, "the gap check needs n >= 4");
    let n128 = n as u128;
    let top = (n128 - 1) * (n128 - 2) / 2;
    let allowed = [1, n128 - 1, n128 * (n128 - 3) / 2, top];
    sym_dims(n).into_iter().filter(|(_, d)| *d <= top && !allowed.contains(d)).collect()
}

/// True when no Specht dimension falls into a gap.
pub fn dim_gap_check(n: usize) -> bool {
    dim_gaps(n).is_empty()
}
