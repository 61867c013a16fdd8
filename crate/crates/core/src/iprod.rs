//! The inductive product `σ1 ⊙ σ2` of permutations and of classes.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::shapes::Composition;
use crate::stair::{odd_hook_class, sigma_class, sigma_n, stair_form};

/// Index bookkeeping for a product of `S_{n1}` and `S_{n2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IprodFrame {
    pub n1: usize,
    pub n2: usize,
    /// `⌈n1 / 2⌉`
    pub k: usize,
}

impl IprodFrame {
    pub fn new(n1: usize, n2: usize) -> Self {
        IprodFrame {
            n1,
            n2,
            k: n1.div_ceil(2),
        }
    }

    pub fn n(&self) -> usize {
        self.n1 + self.n2
    }

    pub fn phi1(&self, i: usize) -> usize {
        if i <= self.k {
            i
        } else {
            i + self.n2
        }
    }

    pub fn phi2(&self, i: usize) -> usize {
        i + self.k
    }

    pub fn phi1_inv(&self, i: usize) -> Option<usize> {
        if i <= self.k {
            Some(i)
        } else if i > self.k + self.n2 {
            Some(i - self.n2)
        } else {
            None
        }
    }

    /// The image of `φ1`, namely `[1, k] ∪ [k+n2+1, n]`.
    pub fn n1_set(&self) -> Vec<usize> {
        (1..=self.k)
            .chain(self.k + self.n2 + 1..=self.n())
            .collect()
    }

    /// The image of `φ2`, namely `[k+1, k+n2]`.
    pub fn n2_set(&self) -> Vec<usize> {
        (self.k + 1..=self.k + self.n2).collect()
    }
}

/// `σ1 ⊙ σ2`: `σ1` acts on `φ1([n1])` and `σ2` on the block `φ2([n2])` placed
/// after the first `⌈n1/2⌉` points.
pub fn iprod(s1: &Permutation, s2: &Permutation) -> Result<Permutation> {
    let f = IprodFrame::new(s1.degree(), s2.degree());
    let mut images = vec![0; f.n()];
    for i in 1..=f.n1 {
        images[f.phi1(i) - 1] = f.phi1(s1.apply(i));
    }
    for i in 1..=f.n2 {
        images[f.phi2(i) - 1] = f.phi2(s2.apply(i));
    }
    Permutation::new(images)
}

/// Recovers `(σ1, σ2)` from `σ = σ1 ⊙ σ2`, or `None` when `σ` does not preserve the
/// two blocks.
pub fn iprod_factor(
    sigma: &Permutation,
    n1: usize,
    n2: usize,
) -> Result<Option<(Permutation, Permutation)>> {
    let f = IprodFrame::new(n1, n2);
    if sigma.degree() != f.n() {
        return Err(Error::DegreeMismatch {
            left: sigma.degree(),
            right: f.n(),
        });
    }
    let mut a = Vec::with_capacity(n1);
    for i in 1..=n1 {
        match f.phi1_inv(sigma.apply(f.phi1(i))) {
            Some(v) => a.push(v),
            None => return Ok(None),
        }
    }
    let b = (1..=n2).map(|i| sigma.apply(f.phi2(i)) - f.k).collect();
    Ok(Some((Permutation::new(a)?, Permutation::new(b)?)))
}

/// `ℓ(σ1 ⊙ σ2)` from the factors: `ℓ(σ1) + ℓ(σ2) + (p + q) n2`, where `p` counts
/// `i <= k` with `σ1(i) > k` and `q` counts `k < i <= n1` with `σ1(i) <= k`.
pub fn iprod_length_law(s1: &Permutation, s2: &Permutation) -> Result<usize> {
    if !s1.is_full_cycle() {
        return Err(Error::NotFullCycle(s1.to_string()));
    }
    let f = IprodFrame::new(s1.degree(), s2.degree());
    let p = (1..=f.k).filter(|&i| s1.apply(i) > f.k).count();
    let q = (f.k + 1..=f.n1).filter(|&i| s1.apply(i) <= f.k).count();
    Ok(s1.length() + s2.length() + (p + q) * f.n2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StairFactorization {
    pub head: Permutation,
    /// `σ_(α2, ..)`, conjugated by `w0` when `α1` is odd.
    pub tail: Permutation,
    pub tail_conjugated: bool,
}

/// Splits `σ_α` as `σ_(α1) ⊙ σ_(α2, ..)`, with the tail conjugated by `w0` for odd
/// `α1`, and checks the product reproduces `σ_α`.
pub fn stair_factorization(alpha: &Composition) -> Result<StairFactorization> {
    let Some(&a1) = alpha.parts().first() else {
        return Err(Error::InvalidParameter("empty composition".into()));
    };
    let head = stair_form(&Composition::new(vec![a1])?)?;
    let rest = stair_form(&alpha.tail())?;
    let tail_conjugated = a1 % 2 == 1;
    let tail = if tail_conjugated {
        rest.conj_w0()
    } else {
        rest
    };
    if iprod(&head, &tail)? != stair_form(alpha)? {
        return Err(Error::Inconsistency(format!(
            "stair factorization of {alpha}"
        )));
    }
    Ok(StairFactorization {
        head,
        tail,
        tail_conjugated,
    })
}

fn sigma_n_perms(n: usize) -> Result<Vec<Permutation>> {
    sigma_n(n)?.iter().map(|c| c.to_permutation(n)).collect()
}

fn product_set(left: &[Permutation], right: &[Permutation]) -> Result<Vec<Permutation>> {
    let mut out = Vec::with_capacity(left.len() * right.len());
    for a in left {
        for b in right {
            out.push(iprod(a, b)?);
        }
    }
    out.sort();
    Ok(out)
}

/// `Σ_(α1) ⊙ Σ_(α2, ..)` for maximal `α` with even `α1`.
pub fn class_product(alpha: &Composition) -> Result<Vec<Permutation>> {
    alpha.require_maximal()?;
    match alpha.parts().first() {
        Some(&a1) if a1 % 2 == 0 => {
            product_set(&sigma_n_perms(a1)?, &sigma_class(&alpha.tail())?.elements)
        }
        _ => Err(Error::Parity(format!(
            "{alpha} does not start with an even part"
        ))),
    }
}

/// Elements of `Σ_α` whose full orbit partition equals that of `σ_α`.
pub fn sigma_star(alpha: &Composition) -> Result<Vec<Permutation>> {
    let orbits = stair_form(alpha)?.orbit_partition();
    Ok(sigma_class(alpha)?
        .elements
        .into_iter()
        .filter(|w| w.orbit_partition() == orbits)
        .collect())
}

/// `Σ^×_(α1) ⊙ (Σ^×_(α2, ..))^{w0}` for maximal `α` with odd `α1`.
pub fn sigma_star_product(alpha: &Composition) -> Result<Vec<Permutation>> {
    alpha.require_maximal()?;
    match alpha.parts().first() {
        Some(&a1) if a1 % 2 == 1 => {
            let tail: Vec<Permutation> = sigma_star(&alpha.tail())?
                .iter()
                .map(Permutation::conj_w0)
                .collect();
            product_set(&sigma_n_perms(a1)?, &tail)
        }
        _ => Err(Error::Parity(format!(
            "{alpha} does not start with an odd part"
        ))),
    }
}

/// `Σ_α` for maximal `α` whose odd parts form a hook (or are absent), built as
/// `Σ_(α1) ⊙ (Σ_(α2) ⊙ (.. ⊙ Σ_α'))` with `α'` the odd tail.
pub fn generate_hookish(alpha: &Composition) -> Result<Vec<Permutation>> {
    let (even, odd, _) = alpha.split_even_odd()?;
    let mut current = if odd.is_empty() {
        vec![Permutation::identity(0)]
    } else if odd.hook_kind().is_some() {
        odd_hook_class(&odd)?
    } else {
        return Err(Error::NotAHook(odd.to_string()));
    };
    for &a in even.parts().iter().rev() {
        current = product_set(&sigma_n_perms(a)?, &current)?;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, Some(n)).unwrap()
    }

    #[test]
    fn stair_products() {
        let a = iprod(
            &stair_form(&comp("6")).unwrap(),
            &stair_form(&comp("3,1")).unwrap(),
        )
        .unwrap();
        assert_eq!(a, perm("(1,10,2,9,3,8)(4,7,5)(6)", 10));
        let b = iprod(
            &stair_form(&comp("5")).unwrap(),
            &stair_form(&comp("3,1")).unwrap().conj_w0(),
        )
        .unwrap();
        assert_eq!(b, perm("(1,9,2,8,3)(7,4,6)(5)", 9));
    }

    #[test]
    fn nested_product() {
        let inner = iprod(&perm("(1,3,2,4)", 4), &perm("(1,3,5)", 5)).unwrap();
        assert_eq!(
            iprod(&perm("(1,2)", 2), &inner).unwrap(),
            perm("(1,11)(2,9,3,10)(4,6,8)", 11)
        );
    }

    #[test]
    fn factor_rejects_mixed_blocks() {
        assert_eq!(iprod_factor(&perm("(1,5,2,6,3,4)", 6), 2, 4).unwrap(), None);
        let s = iprod(&perm("(1,2)", 2), &perm("(1,3)", 3)).unwrap();
        assert_eq!(
            iprod_factor(&s, 2, 3).unwrap(),
            Some((perm("(1,2)", 2), perm("(1,3)", 3)))
        );
    }

    #[test]
    fn length_law_example() {
        let l = iprod_length_law(&perm("(1,2)", 2), &Permutation::identity(1)).unwrap();
        assert_eq!(l, 3);
        assert!(iprod_length_law(&Permutation::identity(2), &Permutation::identity(1)).is_err());
    }

    #[test]
    fn factorizations() {
        for n in 1..=8 {
            for alpha in crate::shapes::enumerate_maximal(n) {
                let f = stair_factorization(&alpha).unwrap();
                assert_eq!(f.tail_conjugated, alpha.parts()[0] % 2 == 1);
            }
        }
    }

    #[test]
    fn parity_guards() {
        assert!(matches!(class_product(&comp("3,1")), Err(Error::Parity(_))));
        assert!(matches!(
            sigma_star_product(&comp("2,1")),
            Err(Error::Parity(_))
        ));
        assert!(matches!(
            class_product(&comp("1,3")),
            Err(Error::NotMaximal(_))
        ));
    }
}
