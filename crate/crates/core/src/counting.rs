//! Closed formulas for `|Σ_α|` and the dimension of the center of `H_n(0)`.

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::shapes::{enumerate_maximal, partitions, partitions_bounded, Composition, Hook};
use crate::stair::factorial;

/// Above this, [`dim_center`] skips the cross-check against explicit enumeration.
const ENUMERATION_CHECK_LIMIT: usize = 16;

fn pow3(e: usize) -> BigUint {
    BigUint::from(3u32).pow(e as u32)
}

/// `|Σ_(n)|`: `1` for `n <= 2`, else `2 · 3^⌊(n-3)/2⌋`.
pub fn size_sigma_n(n: usize) -> Result<BigUint> {
    match n {
        0 => Err(Error::InvalidParameter("Σ_(n) needs n >= 1".into())),
        1 | 2 => Ok(BigUint::one()),
        _ => Ok(BigUint::from(2u32) * pow3((n - 3) / 2)),
    }
}

/// `|Σ_α|` for an odd hook `(k, 1^{n-k})`: `1` for `k = 1`, else `2 (n-k+1) 3^{(k-3)/2}`.
pub fn size_sigma_odd_hook(alpha: &Composition) -> Result<BigUint> {
    match alpha.hook_kind() {
        Some(Hook::Odd { k: 1, .. }) => Ok(BigUint::one()),
        Some(Hook::Odd { k, n }) => Ok(BigUint::from(2 * (n - k + 1)) * pow3((k - 3) / 2)),
        Some(Hook::Even { .. }) => Err(Error::Parity(format!("{alpha} is an even hook"))),
        None => Err(Error::NotAHook(alpha.to_string())),
    }
}

/// The factor `2^p 3^q` contributed by the even parts of a maximal `α`, so that
/// `|Σ_α| = 2^p 3^q |Σ_α'|` with `α'` the odd tail. Returns `(p, q)`.
pub fn even_part_exponents(alpha: &Composition) -> Result<(usize, usize)> {
    let (even, _, _) = alpha.split_even_odd()?;
    let big: Vec<usize> = even.parts().iter().copied().filter(|&a| a >= 4).collect();
    let p = big.len();
    let q = big.iter().sum::<usize>() / 2 - 2 * p;
    Ok((p, q))
}

/// `|Σ_α|` for maximal `α` whose odd parts are empty or form a hook.
pub fn size_sigma_formula(alpha: &Composition) -> Result<BigUint> {
    let (p, q) = even_part_exponents(alpha)?;
    let (_, odd, _) = alpha.split_even_odd()?;
    let base = BigUint::from(2u32).pow(p as u32) * pow3(q);
    if odd.is_empty() {
        return Ok(base);
    }
    let Some(Hook::Odd { k: r, n: n_odd }) = odd.hook_kind() else {
        return Err(Error::NotAHook(odd.to_string()));
    };
    if r <= 1 {
        Ok(base)
    } else {
        Ok(BigUint::from(n_odd - r + 1)
            * BigUint::from(2u32).pow(p as u32 + 1)
            * pow3(q + (r - 3) / 2))
    }
}

/// Number of maximal compositions of `n`, counted as (compositions of `e` into even
/// parts) × (partitions of `n - e` into odd parts), summed over even `e`.
pub fn count_maximal(n: usize) -> BigUint {
    let mut odd = vec![BigUint::from(0u32); n + 1];
    odd[0] = BigUint::one();
    for part in (1..=n).step_by(2) {
        for m in part..=n {
            let add = odd[m - part].clone();
            odd[m] += add;
        }
    }
    (0..=n)
        .step_by(2)
        .map(|e| {
            let even = if e == 0 {
                BigUint::one()
            } else {
                BigUint::from(2u32).pow((e / 2 - 1) as u32)
            };
            even * &odd[n - e]
        })
        .sum()
}

/// `dim Z(H_n(0)) = Σ_λ n_λ! / m_λ`, where `n_λ` is the number of even parts of
/// `λ` and `m_λ` the product of the factorials of the even-part multiplicities.
/// Checked against [`count_maximal`], and against explicit enumeration for small `n`.
pub fn dim_center(n: usize) -> Result<BigUint> {
    let mut total = BigUint::from(0u32);
    for lambda in partitions(n) {
        let parts = lambda.parts();
        let n_even = parts.iter().filter(|&&a| a % 2 == 0).count();
        let mut m = BigUint::one();
        for k in (2..=n).step_by(2) {
            m *= factorial(lambda.multiplicity(k));
        }
        total += factorial(n_even) / m;
    }
    let counted = count_maximal(n);
    if total != counted {
        return Err(Error::Inconsistency(format!(
            "dim {total} vs {counted} maximal compositions of {n}"
        )));
    }
    if n <= ENUMERATION_CHECK_LIMIT && BigUint::from(enumerate_maximal(n).len()) != total {
        return Err(Error::Inconsistency(format!(
            "enumeration of maximal compositions of {n}"
        )));
    }
    Ok(total)
}

/// Partitions of `n` into odd parts.
pub fn odd_partitions(n: usize) -> Vec<Composition> {
    partitions_bounded(n, n, true)
        .into_iter()
        .map(|p| Composition::new(p).unwrap())
        .collect()
}
