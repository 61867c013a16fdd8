//! Independent reference routines on raw one-line vectors, used only by tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

pub type Raw = Vec<usize>;

pub fn length(p: &[usize]) -> usize {
    let mut l = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            l += (p[i] > p[j]) as usize;
        }
    }
    l
}

pub fn compose(p: &[usize], q: &[usize]) -> Raw {
    q.iter().map(|&j| p[j - 1]).collect()
}

pub fn simple(n: usize, i: usize) -> Raw {
    let mut p: Raw = (1..=n).collect();
    p.swap(i - 1, i);
    p
}

/// Cycle notation like `(1,5,2)(3,4)` to one-line notation in `S_n`.
pub fn parse(s: &str, n: usize) -> Raw {
    let mut p: Raw = (1..=n).collect();
    for body in s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(")(")
    {
        if body.is_empty() {
            continue;
        }
        let c: Vec<usize> = body.split(',').map(|t| t.trim().parse().unwrap()).collect();
        for k in 0..c.len() {
            p[c[k] - 1] = c[(k + 1) % c.len()];
        }
    }
    p
}

pub fn parse_all(items: &[&str], n: usize) -> BTreeSet<Raw> {
    items.iter().map(|s| parse(s, n)).collect()
}

pub fn all_perms(n: usize) -> Vec<Raw> {
    fn go(prefix: &mut Raw, used: &mut Vec<bool>, n: usize, out: &mut Vec<Raw>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, n, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n + 1], n, &mut out);
    out
}

pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len() + 1];
    let mut ty = Vec::new();
    for s in 1..=p.len() {
        let mut k = 0;
        let mut a = s;
        while !seen[a] {
            seen[a] = true;
            a = p[a - 1];
            k += 1;
        }
        if k > 0 {
            ty.push(k);
        }
    }
    ty.sort_unstable_by(|a, b| b.cmp(a));
    ty
}

pub fn orbits(p: &[usize]) -> BTreeSet<BTreeSet<usize>> {
    let mut seen = vec![false; p.len() + 1];
    let mut out = BTreeSet::new();
    for s in 1..=p.len() {
        let mut orbit = BTreeSet::new();
        let mut a = s;
        while !seen[a] {
            seen[a] = true;
            orbit.insert(a);
            a = p[a - 1];
        }
        if !orbit.is_empty() {
            out.insert(orbit);
        }
    }
    out
}

/// `w0 p w0`
pub fn conj_w0(p: &[usize]) -> Raw {
    let n = p.len();
    (1..=n).map(|i| n + 1 - p[n - i]).collect()
}

/// The class of `w` under `w ~ s_i w s_{δ(i)}` restricted to steps that keep the length.
pub fn closure(w: &[usize], twisted: bool) -> BTreeSet<Raw> {
    let n = w.len();
    let mut seen: HashSet<Raw> = HashSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(v) = queue.pop_front() {
        let l = length(&v);
        for i in 1..n {
            let j = if twisted { n - i } else { i };
            let u = compose(&compose(&simple(n, i), &v), &simple(n, j));
            if length(&u) == l && seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    seen.into_iter().collect()
}

/// Elements of maximal length in the conjugacy class of `w`.
pub fn is_max_in_class(w: &[usize]) -> bool {
    let ty = cycle_type(w);
    let l = length(w);
    all_perms(w.len())
        .iter()
        .filter(|p| cycle_type(p) == ty)
        .all(|p| length(p) <= l)
}

/// Every reduced word of `w`, as sequences `i1 .. ik` with `w = s_{i1} .. s_{ik}`.
pub fn reduced_words(w: &[usize]) -> Vec<Vec<usize>> {
    if length(w) == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            let v = compose(w, &simple(w.len(), i));
            for mut word in reduced_words(&v) {
                word.push(i);
                out.push(word);
            }
        }
    }
    out
}

/// Bruhat order by the subword property.
pub fn bruhat_leq_subword(u: &[usize], w: &[usize]) -> bool {
    let n = w.len();
    let lu = length(u);
    for word in reduced_words(w) {
        for mask in 0u32..1 << word.len() {
            if mask.count_ones() as usize != lu {
                continue;
            }
            let mut p: Raw = (1..=n).collect();
            for (k, &i) in word.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    p = compose(&p, &simple(n, i));
                }
            }
            if p == u {
                return true;
            }
        }
    }
    false
}

/// An `n`-cycle is oscillating when `σ([m]) = [n-m+1, n]` for some positive integer
/// `m ∈ {(n-1)/2, n/2, (n+1)/2}`.
pub fn oscillating_by_definition(p: &[usize]) -> bool {
    let n = p.len();
    let candidates = [n.wrapping_sub(1), n, n + 1];
    candidates
        .iter()
        .filter(|&&d| d % 2 == 0)
        .map(|&d| d / 2)
        .filter(|&m| m >= 1)
        .any(|m| {
            let image: BTreeSet<usize> = (1..=m).map(|i| p[i - 1]).collect();
            image == (n - m + 1..=n).collect()
        })
}
