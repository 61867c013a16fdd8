//! Permutations of `[1..n]` in one-line notation.
//!
//! Values are 1-based everywhere in the public API. Composition follows
//! `(p ∘ q)(i) = p(q(i))`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation `[p(1), .., p(n)]`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        check_generator(n, i)?;
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// The longest element `w0(i) = n - i + 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    /// Builds a permutation of `[1..n]` from disjoint cycles. Omitted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for c in cycles {
            for (j, &a) in c.iter().enumerate() {
                if a == 0 || a > n || used[a] {
                    return Err(Error::NotAPermutation(format!("{cycles:?} in S_{n}")));
                }
                used[a] = true;
                images[a - 1] = c[(j + 1) % c.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1,3)(2)`. The degree defaults to the largest entry.
    pub fn parse_cycles(s: &str, n: Option<usize>) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = n.unwrap_or(max);
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `p(i)` for `1 <= i <= n`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn into_one_line(self) -> Vec<usize> {
        self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        check_same_degree(self, q)?;
        Ok(Permutation {
            images: q.images.iter().map(|&j| self.images[j - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let a = &self.images;
        let mut count = 0;
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i] > a[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `{ i : p(i) > p(i+1) }`.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.degree())
            .filter(|&i| self.apply(i) > self.apply(i + 1))
            .collect()
    }

    /// `{ i : p^{-1}(i) > p^{-1}(i+1) }`.
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos_i = self.images.iter().position(|&v| v == i).unwrap();
        let pos_j = self.images.iter().position(|&v| v == i + 1).unwrap();
        pos_i > pos_j
    }

    /// `s_i ∘ p`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Permutation { images }
    }

    /// `p ∘ s_i`: swaps the positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// `s_i p s_i`. In cycle notation this swaps the entries `i` and `i+1`.
    pub fn conj_adjacent(&self, i: usize) -> Result<Permutation> {
        check_generator(self.degree(), i)?;
        Ok(self.left_mul_simple(i).right_mul_simple(i))
    }

    /// `ℓ(s_i p s_i) - ℓ(p)`, read off from descents without computing lengths.
    pub fn length_delta_conj(&self, i: usize) -> Result<i32> {
        check_generator(self.degree(), i)?;
        let (a, b) = (self.apply(i), self.apply(i + 1));
        if (a == i && b == i + 1) || (a == i + 1 && b == i) {
            return Ok(0);
        }
        let right = a > b;
        let left = self.has_left_descent(i);
        Ok(match (right, left) {
            (true, true) => -2,
            (false, false) => 2,
            _ => 0,
        })
    }

    /// `w0 p w0`. Relabels every entry `a` of every cycle by `n - a + 1`.
    pub fn conj_w0(&self) -> Permutation {
        let n = self.degree();
        let images = (1..=n).map(|i| n + 1 - self.apply(n + 1 - i)).collect();
        Permutation { images }
    }

    /// Disjoint cycles, fixed points included, each starting at its minimum and
    /// ordered by minimum.
    pub fn cycles(&self) -> Vec<Cycle> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut entries = Vec::new();
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                entries.push(a);
                a = self.apply(a);
            }
            out.push(Cycle { entries });
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_parts(self.cycles().iter().map(Cycle::len).collect())
    }

    pub fn orbit_partition(&self) -> OrbitPartition {
        OrbitPartition::from_blocks(self.cycles().into_iter().map(|c| c.entries).collect())
    }

    /// Orbits of even size only.
    pub fn even_orbit_partition(&self) -> OrbitPartition {
        OrbitPartition::from_blocks(
            self.cycles()
                .into_iter()
                .filter(|c| c.len() % 2 == 0)
                .map(|c| c.entries)
                .collect(),
        )
    }

    /// True when the permutation is a single cycle through every point.
    pub fn is_full_cycle(&self) -> bool {
        let n = self.degree();
        if n == 0 {
            return false;
        }
        let mut a = 1;
        for step in 1..=n {
            a = self.apply(a);
            if a == 1 {
                return step == n;
            }
        }
        false
    }

    /// Bruhat order via the tableau criterion: `u <= w` iff for every `k` the sorted
    /// prefix `u[1..k]` is entrywise dominated by the sorted prefix `w[1..k]`.
    pub fn bruhat_leq(&self, w: &Permutation) -> Result<bool> {
        check_same_degree(self, w)?;
        let n = self.degree();
        let mut in_u = vec![false; n + 1];
        let mut in_w = vec![false; n + 1];
        for k in 0..n {
            in_u[self.images[k]] = true;
            in_w[w.images[k]] = true;
            // compare the sorted prefixes by counting entries >= t
            let (mut cu, mut cw) = (0usize, 0usize);
            for t in (1..=n).rev() {
                cu += in_u[t] as usize;
                cw += in_w[t] as usize;
                if cu > cw {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// A reduced word `[i1, .., ik]` with `p = s_{i1} .. s_{ik}`, obtained by
    /// stripping right descents.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.degree()).find(|&i| w.has_right_descent(i)) {
            word.push(i);
            w = w.right_mul_simple(i);
        }
        word.reverse();
        word
    }

    /// Permutations whose cover relation in Bruhat order lies directly below `self`.
    pub fn bruhat_lower_covers(&self) -> Vec<Permutation> {
        let a = &self.images;
        let n = a.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if a[i] < a[j] {
                    continue;
                }
                if (i + 1..j).any(|k| a[k] < a[i] && a[k] > a[j]) {
                    continue;
                }
                let mut b = a.clone();
                b.swap(i, j);
                out.push(Permutation { images: b });
            }
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "()");
        }
        for c in self.cycles() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All permutations of `[1..n]` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n).permutations(n).map(|images| Permutation { images })
}

/// A single cycle written starting from its smallest entry.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    entries: Vec<usize>,
}

impl Cycle {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() || entries.contains(&0) || !entries.iter().all_unique() {
            return Err(Error::NotAPermutation(format!("cycle {entries:?}")));
        }
        let start = entries.iter().position_min().unwrap();
        let mut entries = entries;
        entries.rotate_left(start);
        Ok(Cycle { entries })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut list = parse_cycle_list(s)?;
        if list.len() != 1 {
            return Err(Error::Parse(format!("expected a single cycle, got {s:?}")));
        }
        Cycle::new(list.remove(0))
    }

    /// The full cycle of a permutation through `1`.
    pub fn from_full_cycle(p: &Permutation) -> Result<Self> {
        if !p.is_full_cycle() {
            return Err(Error::NotFullCycle(p.to_string()));
        }
        Ok(p.cycles().remove(0))
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_entry(&self) -> usize {
        *self.entries.iter().max().unwrap()
    }

    /// True when the entries are exactly `{1..k}`.
    pub fn is_full(&self) -> bool {
        self.max_entry() == self.len()
    }

    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        Permutation::from_cycles(n, std::slice::from_ref(&self.entries))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().join(","))
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Cycle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Cycle::parse(s)
    }
}

/// A set partition given by blocks, each sorted, ordered by smallest element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct OrbitPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        OrbitPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

impl fmt::Display for OrbitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().join(",")))
            .join(",");
        write!(f, "{{{parts}}}")
    }
}

fn parse_cycle_list(s: &str) -> Result<Vec<Vec<usize>>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() || s == "()" {
        return Ok(Vec::new());
    }
    if !s.starts_with('(') || !s.ends_with(')') {
        return Err(Error::Parse(format!("bad cycle notation {s:?}")));
    }
    s[1..s.len() - 1]
        .split(")(")
        .map(|body| {
            body.split(',')
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
                })
                .collect()
        })
        .collect()
}

pub(crate) fn check_generator(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::GeneratorOutOfRange { index: i, n });
    }
    Ok(())
}

fn check_same_degree(p: &Permutation, q: &Permutation) -> Result<()> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(())
}
