//! Brute-force cyclic shift classes of `S_n`, optionally twisted by `w0`-conjugation.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::{all_permutations, OrbitPartition, Permutation};
use crate::shapes::{enumerate_maximal, Composition, Partition};
use crate::stair::stair_form;

/// Soft upper bound on `n` for exhaustive enumeration of `S_n`.
pub const BRUTE_FORCE_LIMIT: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Twist {
    Id,
    Nu,
}

impl Twist {
    /// The image of `s_i` under the twist.
    fn generator(self, n: usize, i: usize) -> usize {
        match self {
            Twist::Id => i,
            Twist::Nu => n - i,
        }
    }

    /// Invariant of twisted conjugacy classes.
    pub fn class_key(self, w: &Permutation) -> Partition {
        match self {
            Twist::Id => w.cycle_type(),
            Twist::Nu => w
                .compose(&Permutation::longest(w.degree()))
                .unwrap()
                .cycle_type(),
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Twist::Id => "id",
            Twist::Nu => "nu",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stratum {
    Max,
    Min,
    All,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivClass {
    pub alpha: Option<Composition>,
    pub length: usize,
    /// Sorted lexicographically by one-line notation.
    pub elements: Vec<Permutation>,
    /// Present when every element has the same even-orbit partition.
    pub even_orbits: Option<OrbitPartition>,
}

impl EquivClass {
    pub fn from_elements(alpha: Option<Composition>, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let length = elements.first().map_or(0, Permutation::length);
        let first = elements.first().map(Permutation::even_orbit_partition);
        let even_orbits = first.filter(|p| elements.iter().all(|w| &w.even_orbit_partition() == p));
        EquivClass {
            alpha,
            length,
            elements,
            even_orbits,
        }
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// The lexicographically least element.
    pub fn least(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.elements.binary_search(w).is_ok()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "alpha": self.alpha,
            "length": self.length,
            "size": self.size(),
            "elements": self.elements,
        })
    }
}

/// Every `w'` with `w ->_δ w'`, that is `w' = s_i w δ(s_i)` and `ℓ(w') <= ℓ(w)`.
pub fn one_step(w: &Permutation, twist: Twist) -> Vec<Permutation> {
    let n = w.degree();
    let l = w.length();
    let mut out: Vec<Permutation> = (1..n)
        .map(|i| w.left_mul_simple(i).right_mul_simple(twist.generator(n, i)))
        .filter(|v| v != w && v.length() <= l)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Everything reachable from `w` by repeated `->_δ` steps, `w` included.
pub fn arrow_closure(w: &Permutation, twist: Twist) -> HashSet<Permutation> {
    let mut seen = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(v) = queue.pop_front() {
        for u in one_step(&v, twist) {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    seen
}

/// Strongly connected components of the `->_δ` digraph on `S_n`, restricted to the
/// requested length stratum of each twisted conjugacy class, sorted by least element.
pub fn equiv_classes(n: usize, twist: Twist, stratum: Stratum) -> Vec<EquivClass> {
    let perms: Vec<Permutation> = all_permutations(n).collect();
    let index: HashMap<&Permutation, usize> =
        perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut graph = DiGraph::<(), ()>::with_capacity(perms.len(), perms.len() * n);
    for _ in &perms {
        graph.add_node(());
    }
    for (i, w) in perms.iter().enumerate() {
        for v in one_step(w, twist) {
            graph.add_edge(NodeIndex::new(i), NodeIndex::new(index[&v]), ());
        }
    }

    let lengths: Vec<usize> = perms.iter().map(Permutation::length).collect();
    let keys: Vec<Partition> = perms.iter().map(|w| twist.class_key(w)).collect();
    let mut best: HashMap<&Partition, usize> = HashMap::new();
    for (key, &l) in keys.iter().zip(&lengths) {
        let e = best.entry(key).or_insert(l);
        *e = match stratum {
            Stratum::Max => (*e).max(l),
            Stratum::Min => (*e).min(l),
            Stratum::All => l,
        };
    }

    let mut classes: Vec<EquivClass> = tarjan_scc(&graph)
        .into_iter()
        .filter(|scc| {
            let v = scc[0].index();
            stratum == Stratum::All || best[&keys[v]] == lengths[v]
        })
        .map(|scc| {
            EquivClass::from_elements(None, scc.iter().map(|v| perms[v.index()].clone()).collect())
        })
        .collect();
    classes.sort_by(|a, b| a.least().cmp(b.least()));
    classes
}

/// The max classes of `S_n`, each labeled by the maximal composition whose stair
/// form it contains, in the order of [`enumerate_maximal`]. Fails unless the
/// labeling is a bijection.
pub fn label_max_classes(n: usize) -> Result<Vec<EquivClass>> {
    let classes = equiv_classes(n, Twist::Id, Stratum::Max);
    let alphas = enumerate_maximal(n);
    if classes.len() != alphas.len() {
        return Err(Error::Inconsistency(format!(
            "{} max classes but {} maximal compositions of {n}",
            classes.len(),
            alphas.len()
        )));
    }
    let mut used = vec![false; classes.len()];
    let mut out = Vec::with_capacity(alphas.len());
    for alpha in alphas {
        let sigma = stair_form(&alpha)?;
        let pos = classes
            .iter()
            .position(|c| c.contains(&sigma))
            .ok_or_else(|| {
                Error::Inconsistency(format!("stair form of {alpha} is in no max class"))
            })?;
        if std::mem::replace(&mut used[pos], true) {
            return Err(Error::Inconsistency(format!(
                "two stair forms share the class of {alpha}"
            )));
        }
        let mut class = classes[pos].clone();
        class.alpha = Some(alpha);
        out.push(class);
    }
    Ok(out)
}

/// For each maximal `α`, the `ν`-min class containing `σ_α w0`. Fails if some
/// `σ_α w0` is outside the `ν`-min stratum or two of them share a class.
pub fn min_representatives(n: usize) -> Result<Vec<EquivClass>> {
    let classes = equiv_classes(n, Twist::Nu, Stratum::Min);
    let w0 = Permutation::longest(n);
    let mut used = vec![false; classes.len()];
    let mut out = Vec::new();
    for alpha in enumerate_maximal(n) {
        let rep = stair_form(&alpha)?.compose(&w0)?;
        let pos = classes
            .iter()
            .position(|c| c.contains(&rep))
            .ok_or_else(|| {
                Error::Inconsistency(format!("σ_{alpha} w0 is not of minimal length"))
            })?;
        if std::mem::replace(&mut used[pos], true) {
            return Err(Error::Inconsistency(format!("σ_{alpha} w0 shares a class")));
        }
        let mut class = classes[pos].clone();
        class.alpha = Some(alpha);
        out.push(class);
    }
    Ok(out)
}

pub fn catalog_json(n: usize, twist: Twist, classes: &[EquivClass]) -> Value {
    json!({
        "n": n,
        "twist": twist,
        "classes": classes.iter().map(EquivClass::to_json).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, Some(n)).unwrap()
    }

    #[test]
    fn s3_max_classes() {
        let classes = equiv_classes(3, Twist::Id, Stratum::Max);
        let sets: Vec<Vec<Permutation>> = classes.into_iter().map(|c| c.elements).collect();
        let mut three = vec![c("(1,2,3)", 3), c("(1,3,2)", 3)];
        three.sort();
        assert_eq!(
            sets,
            vec![vec![Permutation::identity(3)], three, vec![c("(1,3)", 3)]]
        );
    }

    #[test]
    fn all_stratum_partitions_sn() {
        for twist in [Twist::Id, Twist::Nu] {
            let total: usize = equiv_classes(5, twist, Stratum::All)
                .iter()
                .map(EquivClass::size)
                .sum();
            assert_eq!(total, 120);
        }
    }

    #[test]
    fn classes_have_common_length() {
        for twist in [Twist::Id, Twist::Nu] {
            for class in equiv_classes(5, twist, Stratum::All) {
                assert!(class.elements.iter().all(|w| w.length() == class.length));
            }
        }
    }

    #[test]
    fn labels_are_bijective() {
        for n in 0..=6 {
            let labeled = label_max_classes(n).unwrap();
            assert_eq!(labeled.len(), enumerate_maximal(n).len());
        }
    }

    #[test]
    fn nu_twisted_step_uses_mirrored_generator() {
        let s1 = Permutation::simple(3, 1).unwrap();
        let s2 = Permutation::simple(3, 2).unwrap();
        assert_eq!(one_step(&s1, Twist::Nu), vec![s2]);
        assert!(one_step(&s1, Twist::Id).is_empty());
    }

    #[test]
    fn one_step_from_six_cycle() {
        let w = c("(1,6,2,5,3,4)", 6);
        assert!(one_step(&w, Twist::Id).contains(&c("(1,6,3,5,2,4)", 6)));
    }

    #[test]
    fn closure_keeps_cycle_type() {
        let got = arrow_closure(&c("(1,3)", 3), Twist::Id);
        let want: HashSet<Permutation> = [c("(1,3)", 3), c("(1,2)", 3), c("(2,3)", 3)]
            .into_iter()
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn catalog_shape() {
        let classes = label_max_classes(2).unwrap();
        let v = catalog_json(2, Twist::Id, &classes);
        assert_eq!(
            v.to_string(),
            r#"{"classes":[{"alpha":[1,1],"elements":[[1,2]],"length":0,"size":1},{"alpha":[2],"elements":[[2,1]],"length":1,"size":1}],"n":2,"twist":"id"}"#
        );
    }
}
