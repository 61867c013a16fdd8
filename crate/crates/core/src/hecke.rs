//! The 0-Hecke algebra `H_n(0)` with integer coefficients in the basis `{T_w}`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::counting::dim_center;
use crate::error::{Error, Result};
use crate::perm::{check_generator, Permutation};
use crate::shapes::{enumerate_maximal, Composition};
use crate::stair::sigma_class;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn basis(w: Permutation) -> Self {
        let n = w.degree();
        HeckeElement {
            n,
            terms: BTreeMap::from([(w, BigInt::one())]),
        }
    }

    /// `T_i`
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Ok(Self::basis(Permutation::simple(n, i)?))
    }

    /// `Σ T_w` over the given elements.
    pub fn sum_of(n: usize, elements: &[Permutation]) -> Result<Self> {
        let mut x = Self::zero(n);
        for w in elements {
            if w.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: w.degree(),
                    right: n,
                });
            }
            x.add_term(w.clone(), BigInt::one());
        }
        Ok(x)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Permutation) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Permutation, c: BigInt) {
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
        }
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        Ok(out)
    }

    /// `T_i · x`, using `T_s T_w = T_{sw}` if `ℓ(sw) > ℓ(w)` and `-T_w` otherwise.
    pub fn left_mul_gen(&self, i: usize) -> Result<HeckeElement> {
        check_generator(self.n, i)?;
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            if w.has_left_descent(i) {
                out.add_term(w.clone(), -c.clone());
            } else {
                out.add_term(w.left_mul_simple(i), c.clone());
            }
        }
        Ok(out)
    }

    /// `x · T_i`, the mirror image of [`HeckeElement::left_mul_gen`].
    pub fn right_mul_gen(&self, i: usize) -> Result<HeckeElement> {
        check_generator(self.n, i)?;
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            if w.has_right_descent(i) {
                out.add_term(w.clone(), -c.clone());
            } else {
                out.add_term(w.right_mul_simple(i), c.clone());
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check_degree(other)?;
        let mut out = Self::zero(self.n);
        for (u, c) in &self.terms {
            let mut prod = other.clone();
            for &i in u.reduced_word().iter().rev() {
                prod = prod.left_mul_gen(i)?;
            }
            for (w, d) in prod.terms {
                out.add_term(w, c * d);
            }
        }
        Ok(out)
    }

    /// Commutes with every generator `T_i`.
    pub fn is_central(&self) -> bool {
        (1..self.n).all(|i| self.left_mul_gen(i).unwrap() == self.right_mul_gen(i).unwrap())
    }

    fn check_degree(&self, other: &HeckeElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn to_json(&self, alpha: &Composition, ideal_size: usize) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let c: Value =
                    i64::try_from(c).map_or_else(|_| Value::String(c.to_string()), Value::from);
                json!({ "w": w, "c": c })
            })
            .collect();
        json!({ "alpha": alpha, "ideal_size": ideal_size, "terms": terms })
    }
}

/// The Bruhat order ideal generated by `elements`, sorted.
pub fn order_ideal(elements: &[Permutation]) -> Vec<Permutation> {
    let mut seen: BTreeSet<Permutation> = elements.iter().cloned().collect();
    let mut stack: Vec<Permutation> = elements.to_vec();
    while let Some(w) = stack.pop() {
        for u in w.bruhat_lower_covers() {
            if seen.insert(u.clone()) {
                stack.push(u);
            }
        }
    }
    seen.into_iter().collect()
}

/// `T_{≤Σ_α} = Σ T_x` over the order ideal of `Σ_α`, with the ideal size.
pub fn t_leq_sigma(alpha: &Composition) -> Result<(HeckeElement, usize)> {
    let class = sigma_class(alpha)?;
    let ideal = order_ideal(&class.elements);
    Ok((HeckeElement::sum_of(alpha.size(), &ideal)?, ideal.len()))
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            for j in c + 1..cols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[derive(Clone, Debug)]
pub struct CenterBasisReport {
    pub n: usize,
    pub dim: usize,
    pub family: Vec<(Composition, HeckeElement)>,
    pub central: Vec<bool>,
    pub rank: usize,
}

impl CenterBasisReport {
    pub fn ok(&self) -> bool {
        self.central.iter().all(|&b| b)
            && self.rank == self.family.len()
            && self.family.len() == self.dim
    }
}

/// Builds `T_{≤Σ_α}` for every maximal `α ⊨ n` and checks centrality, linear
/// independence and that the count equals the dimension of the center.
pub fn verify_center_basis(n: usize) -> Result<CenterBasisReport> {
    let dim: usize = dim_center(n)?
        .try_into()
        .map_err(|_| Error::ResourceLimit {
            required: "dim".into(),
            limit: "usize".into(),
        })?;
    let mut family = Vec::new();
    for alpha in enumerate_maximal(n) {
        let (x, _) = t_leq_sigma(&alpha)?;
        family.push((alpha, x));
    }
    let central = family.iter().map(|(_, x)| x.is_central()).collect();
    let support: Vec<Permutation> = family
        .iter()
        .flat_map(|(_, x)| x.terms.keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rows: Vec<Vec<BigInt>> = family
        .iter()
        .map(|(_, x)| support.iter().map(|w| x.coefficient(w)).collect())
        .collect();
    let rank = rank(&rows);
    Ok(CenterBasisReport {
        n,
        dim,
        family,
        central,
        rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn generator_relations() {
        for n in 2..=4 {
            for i in 1..n {
                let t = HeckeElement::generator(n, i).unwrap();
                let sq = t.mul(&t).unwrap();
                assert_eq!(sq, HeckeElement::zero(n).sub(&t).unwrap());
            }
        }
        let t1 = HeckeElement::generator(3, 1).unwrap();
        let t2 = HeckeElement::generator(3, 2).unwrap();
        let a = t1.mul(&t2).unwrap().mul(&t1).unwrap();
        let b = t2.mul(&t1).unwrap().mul(&t2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn product_of_basis_elements_along_reduced_words() {
        for w in all_permutations(4) {
            let mut x = HeckeElement::one(4);
            for &i in &w.reduced_word() {
                x = x.right_mul_gen(i).unwrap();
            }
            assert_eq!(x, HeckeElement::basis(w));
        }
    }

    #[test]
    fn associativity_on_s3() {
        let all: Vec<HeckeElement> = all_permutations(3).map(HeckeElement::basis).collect();
        for a in &all {
            for b in &all {
                for c in &all {
                    let l = a.mul(b).unwrap().mul(c).unwrap();
                    let r = a.mul(&b.mul(c).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn relations_on_every_basis_vector() {
        for n in 2..=5 {
            for w in all_permutations(n) {
                let x = HeckeElement::basis(w);
                for i in 1..n {
                    let ti = |y: &HeckeElement| y.left_mul_gen(i).unwrap();
                    assert_eq!(ti(&ti(&x)), HeckeElement::zero(n).sub(&ti(&x)).unwrap());
                    for j in 1..n {
                        let tj = |y: &HeckeElement| y.left_mul_gen(j).unwrap();
                        if i + 1 == j {
                            assert_eq!(ti(&tj(&ti(&x))), tj(&ti(&tj(&x))));
                        } else if i.abs_diff(j) >= 2 {
                            assert_eq!(ti(&tj(&x)), tj(&ti(&x)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn center_bases_up_to_six() {
        let sizes: Vec<usize> = (1..=6)
            .map(|n| {
                let report = verify_center_basis(n).unwrap();
                assert!(report.ok(), "n = {n}");
                report.family.len()
            })
            .collect();
        assert_eq!(sizes, vec![1, 2, 3, 5, 7, 12]);
    }

    #[test]
    fn t1_not_central() {
        assert!(!HeckeElement::generator(3, 1).unwrap().is_central());
        assert!(HeckeElement::one(3).is_central());
    }

    #[test]
    fn fraction_free_rank() {
        assert_eq!(rank(&big(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&big(&[&[0, 1, 1], &[0, 2, 3], &[0, 3, 4]])), 2);
        assert_eq!(rank(&big(&[&[2, 3, 5], &[4, 1, 1], &[6, 4, 6]])), 2);
        assert_eq!(rank(&big(&[&[2, 3, 5], &[4, 1, 1], &[6, 4, 7]])), 3);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn ideal_is_downward_closed() {
        for top in all_permutations(4) {
            let ideal = order_ideal(std::slice::from_ref(&top));
            let brute: Vec<Permutation> = all_permutations(4)
                .filter(|u| u.bruhat_leq(&top).unwrap())
                .collect();
            assert_eq!(ideal, brute, "{top}");
        }
    }

    #[test]
    fn degree_checks() {
        assert!(HeckeElement::one(2).mul(&HeckeElement::one(3)).is_err());
        assert!(HeckeElement::one(2).left_mul_gen(2).is_err());
    }
}
