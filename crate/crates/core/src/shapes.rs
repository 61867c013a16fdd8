//! Compositions, partitions and maximal compositions.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter(format!("zero part in {parts:?}")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Drops the first part.
    pub fn tail(&self) -> Composition {
        Composition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// A prefix of even parts followed by weakly decreasing odd parts.
    pub fn is_maximal(&self) -> bool {
        let j = self.parts.iter().take_while(|&&a| a % 2 == 0).count();
        let odd = &self.parts[j..];
        odd.iter().all(|&a| a % 2 == 1) && odd.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn require_maximal(&self) -> Result<()> {
        if self.is_maximal() {
            Ok(())
        } else {
            Err(Error::NotMaximal(self.to_string()))
        }
    }

    pub fn sort_to_partition(&self) -> Partition {
        Partition::from_parts(self.parts.clone())
    }

    /// Splits a maximal composition into its even prefix and odd tail; the last
    /// component is the number of even parts.
    pub fn split_even_odd(&self) -> Result<(Composition, Composition, usize)> {
        self.require_maximal()?;
        let j = self.parts.iter().take_while(|&&a| a % 2 == 0).count();
        Ok((
            Composition {
                parts: self.parts[..j].to_vec(),
            },
            Composition {
                parts: self.parts[j..].to_vec(),
            },
            j,
        ))
    }

    /// `Some` when the composition has the shape `(k, 1, .., 1)`.
    pub fn hook_kind(&self) -> Option<Hook> {
        let (&k, rest) = self.parts.split_first()?;
        if !rest.iter().all(|&a| a == 1) {
            return None;
        }
        let n = self.size();
        Some(if k % 2 == 1 {
            Hook::Odd { k, n }
        } else {
            Hook::Even { k, n }
        })
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `4,2`, `(4,2)` or `[4,2]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if t.is_empty() {
            return Ok(Composition::default());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Hook {
    Odd { k: usize, n: usize },
    Even { k: usize, n: usize },
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&a| a > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&a| a == k).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of `n` with parts at most `max_part`, in reverse lexicographic order.
pub fn partitions_bounded(n: usize, max_part: usize, odd_only: bool) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(n)).rev() {
        if odd_only && first % 2 == 0 {
            continue;
        }
        for mut rest in partitions_bounded(n - first, first, odd_only) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, false)
        .into_iter()
        .map(|parts| Partition { parts })
        .collect()
}

/// Compositions of `e` into even parts.
fn even_compositions(e: usize) -> Vec<Vec<usize>> {
    if e == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (2..=e).step_by(2) {
        for mut rest in even_compositions(e - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every maximal composition of `n`, sorted lexicographically.
pub fn enumerate_maximal(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    for e in (0..=n).step_by(2) {
        let tails = partitions_bounded(n - e, n - e, true);
        for prefix in even_compositions(e) {
            for tail in &tails {
                let parts = prefix.iter().chain(tail).copied().collect();
                out.push(Composition { parts });
            }
        }
    }
    out.sort();
    out
}

/// Every hook `(k, 1^{n-k})` of `n`.
pub fn hooks(n: usize) -> Vec<Composition> {
    (1..=n)
        .map(|k| Composition {
            parts: std::iter::once(k)
                .chain(std::iter::repeat_n(1, n - k))
                .collect(),
        })
        .collect()
}
