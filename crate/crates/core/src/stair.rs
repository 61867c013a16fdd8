//! Stair forms, the classes `Σ_α`, and their combinatorial descriptions.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::cyclic_shift::EquivClass;
use crate::error::{Error, Result};
use crate::iprod::{generate_hookish, iprod};
use crate::perm::{Cycle, Permutation};
use crate::shapes::{Composition, Hook, Partition};

/// Largest number of candidate permutations [`sigma_class`] will filter.
pub const FILTER_LIMIT: u64 = 5_000_000;

/// `1, n, 2, n-1, 3, n-2, ..`
pub fn stair_sequence(n: usize) -> Vec<usize> {
    (0..n)
        .map(|j| if j % 2 == 0 { j / 2 + 1 } else { n - j / 2 })
        .collect()
}

/// Cuts the stair sequence into consecutive cycles of lengths `α_1, α_2, ..`.
pub fn stair_form(alpha: &Composition) -> Result<Permutation> {
    let n = alpha.size();
    let seq = stair_sequence(n);
    let mut cycles = Vec::with_capacity(alpha.len());
    let mut start = 0;
    for &a in alpha.parts() {
        cycles.push(seq[start..start + a].to_vec());
        start += a;
    }
    Permutation::from_cycles(n, &cycles)
}

/// True when the stair form of `α` is of maximal length in its conjugacy class.
/// Decided by exhaustive search, so only usable for small `α`.
pub fn stair_is_max(alpha: &Composition) -> Result<bool> {
    let sigma = stair_form(alpha)?;
    let ty = sigma.cycle_type();
    let l = sigma.length();
    Ok(permutations_of_type(alpha.size(), &ty)?
        .iter()
        .all(|w| w.length() <= l))
}

/// Membership in `Σ_α`: same cycle type, same length, and same even-size orbits as
/// the stair form.
pub fn member_sigma_alpha(sigma: &Permutation, alpha: &Composition) -> Result<bool> {
    alpha.require_maximal()?;
    if sigma.degree() != alpha.size() {
        return Err(Error::DegreeMismatch {
            left: sigma.degree(),
            right: alpha.size(),
        });
    }
    let stair = stair_form(alpha)?;
    Ok(sigma.cycle_type() == alpha.sort_to_partition()
        && sigma.length() == stair.length()
        && sigma.even_orbit_partition() == stair.even_orbit_partition())
}

fn require_full(c: &Cycle) -> Result<()> {
    if !c.is_full() {
        return Err(Error::NotFullCycle(c.to_string()));
    }
    Ok(())
}

/// For a cycle on exactly `{1..k}`: for even `k` the entries alternate between
/// `[1, k/2]` and `[k/2+1, k]`; for odd `k`, once `(k+1)/2` is removed, the rest
/// alternate between `[1, (k-1)/2]` and `[(k+3)/2, k]`.
pub fn is_oscillating_cycle(c: &Cycle) -> Result<bool> {
    require_full(c)?;
    let k = c.len();
    if k <= 2 {
        return Ok(true);
    }
    let mid = k.div_ceil(2);
    let low: Vec<bool> = c
        .entries()
        .iter()
        .filter(|&&a| k.is_multiple_of(2) || a != mid)
        .map(|&a| a <= k / 2)
        .collect();
    Ok((0..low.len()).all(|j| low[j] != low[(j + 1) % low.len()]))
}

/// For a cycle on exactly `{1..k}`: each `[i, k-i+1]`, `1 <= i <= k/2`, occupies a
/// contiguous arc of the cycle.
pub fn has_connected_intervals_cycle(c: &Cycle) -> Result<bool> {
    require_full(c)?;
    let k = c.len();
    let e = c.entries();
    Ok((2..=k / 2).all(|i| {
        let inside = |a: usize| a >= i && a <= k + 1 - i;
        (0..k)
            .filter(|&j| inside(e[j]) && !inside(e[(j + 1) % k]))
            .count()
            == 1
    }))
}

/// Relabels the entries of a cycle by their rank, giving a full cycle of `S_k`.
pub fn cst(c: &Cycle) -> Cycle {
    let sorted: Vec<usize> = c
        .entries()
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rank = |a: usize| sorted.binary_search(&a).unwrap() + 1;
    Cycle::new(c.entries().iter().map(|&a| rank(a)).collect()).unwrap()
}

/// Every cycle is oscillating after standardization.
pub fn is_oscillating(p: &Permutation) -> bool {
    p.cycles()
        .iter()
        .all(|c| is_oscillating_cycle(&cst(c)).unwrap())
}

/// Every cycle has connected intervals after standardization.
pub fn has_connected_intervals(p: &Permutation) -> bool {
    p.cycles()
        .iter()
        .all(|c| has_connected_intervals_cycle(&cst(c)).unwrap())
}

fn hook_of(alpha: &Composition) -> Result<Hook> {
    alpha
        .hook_kind()
        .ok_or_else(|| Error::NotAHook(alpha.to_string()))
}

/// The description of `Σ_α` for a hook `α = (k, 1^{n-k})`: oscillating, connected
/// intervals, and for `k > 1` the `k`-cycle contains `i` and `n-i+1` whenever
/// `i <= m`, where `m = (k-1)/2` for odd `k` and `k/2` for even `k`.
pub fn hook_properties(p: &Permutation, alpha: &Composition) -> Result<bool> {
    let hook = hook_of(alpha)?;
    let n = alpha.size();
    if p.degree() != n {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: n,
        });
    }
    let ty = p.cycle_type();
    if ty != alpha.sort_to_partition() {
        return Err(Error::TypeMismatch {
            expected: alpha.sort_to_partition().to_string(),
            found: ty.to_string(),
        });
    }
    if !is_oscillating(p) || !has_connected_intervals(p) {
        return Ok(false);
    }
    let (k, m) = match hook {
        Hook::Odd { k, .. } => (k, (k - 1) / 2),
        Hook::Even { k, .. } => (k, k / 2),
    };
    if k == 1 {
        return Ok(true);
    }
    let big = p.cycles().into_iter().find(|c| c.len() == k).unwrap();
    let e = big.entries();
    Ok((1..=m).all(|i| e.contains(&i) && e.contains(&(n + 1 - i))))
}

/// Adds one to every entry `>= k` of the full cycle `σ` (written from `1`), then
/// inserts `k` after its `pos`-th element.
pub fn ins(k: usize, pos: usize, sigma: &Cycle) -> Result<Cycle> {
    require_full(sigma)?;
    let n = sigma.len();
    if !(2..=n + 1).contains(&k) || !(1..=n).contains(&pos) {
        return Err(Error::InvalidParameter(format!(
            "ins({k}, {pos}) on a {n}-cycle"
        )));
    }
    let mut e: Vec<usize> = sigma
        .entries()
        .iter()
        .map(|&a| if a >= k { a + 1 } else { a })
        .collect();
    e.insert(pos, k);
    Cycle::new(e)
}

/// Removes `k` from the full cycle `σ` and subtracts one from every entry `> k`.
pub fn del(k: usize, sigma: &Cycle) -> Result<Cycle> {
    require_full(sigma)?;
    let n = sigma.len();
    if !(2..=n).contains(&k) {
        return Err(Error::InvalidParameter(format!("del({k}) on a {n}-cycle")));
    }
    Cycle::new(
        sigma
            .entries()
            .iter()
            .filter(|&&a| a != k)
            .map(|&a| if a > k { a - 1 } else { a })
            .collect(),
    )
}

fn in_sigma_n(c: &Cycle) -> Result<bool> {
    Ok(is_oscillating_cycle(c)? && has_connected_intervals_cycle(c)?)
}

/// Lifts `σ ∈ Σ_(n-1)` to `Σ_(n)`, for `n >= 4`. For odd `n` the extra index `q`
/// in `{0, 1, 2}` selects one of three lifts and must be given; for even `n` it
/// must be absent.
pub fn psi(n: usize, sigma: &Cycle, q: Option<usize>) -> Result<Cycle> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "psi needs n >= 4, got {n}"
        )));
    }
    if sigma.len() != n - 1 || !sigma.is_full() || !in_sigma_n(sigma)? {
        return Err(Error::NotInClass(sigma.to_string()));
    }
    let e = sigma.entries();
    if n.is_multiple_of(2) {
        if q.is_some() {
            return Err(Error::InvalidParameter("psi takes no q for even n".into()));
        }
        let h = n / 2;
        let pre_h = e[(e.iter().position(|&a| a == h).unwrap() + n - 2) % (n - 1)];
        let target = pre_h.min(h);
        let p = e.iter().position(|&a| a == target).unwrap() + 1;
        ins(h + 1, p, sigma)
    } else {
        let q = match q {
            Some(q) if q <= 2 => q,
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "psi needs q in 0..=2 for odd n, got {q:?}"
                )))
            }
        };
        let m = n.div_ceil(2);
        let pair = |a: usize| a == m - 1 || a == m;
        let p = (1..n - 1)
            .find(|&p| !pair(e[p - 1]) && pair(e[p]))
            .ok_or_else(|| Error::Inconsistency(format!("no pair position in {sigma}")))?;
        ins(m, p + q, sigma)
    }
}

/// Inverse of [`psi`]: returns the preimage and, for odd `n`, the index `q`.
pub fn psi_inverse(n: usize, sigma: &Cycle) -> Result<(Cycle, Option<usize>)> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "psi needs n >= 4, got {n}"
        )));
    }
    if sigma.len() != n || !sigma.is_full() || !in_sigma_n(sigma)? {
        return Err(Error::NotInClass(sigma.to_string()));
    }
    if n.is_multiple_of(2) {
        return Ok((del(n / 2 + 1, sigma)?, None));
    }
    let m = n.div_ceil(2);
    let e = sigma.entries();
    let arc = |a: usize| a + 1 >= m && a <= m + 1;
    let start = (0..n - 2)
        .find(|&j| arc(e[j]) && arc(e[j + 1]) && arc(e[j + 2]))
        .ok_or_else(|| Error::Inconsistency(format!("no arc of three in {sigma}")))?;
    let q = (0..3).find(|&t| e[start + t] == m).unwrap();
    Ok((del(m, sigma)?, Some(q)))
}

/// `Σ_(n)` as full cycles, built from the small cases by repeated lifting.
pub fn sigma_n(n: usize) -> Result<Vec<Cycle>> {
    let parse = |s: &str| Cycle::parse(s).unwrap();
    let mut out = match n {
        0 => return Err(Error::InvalidParameter("Σ_(n) needs n >= 1".into())),
        1 => vec![parse("(1)")],
        2 => vec![parse("(1,2)")],
        3 => vec![parse("(1,3,2)"), parse("(1,2,3)")],
        _ => {
            let prev = sigma_n(n - 1)?;
            let qs: Vec<Option<usize>> = if n.is_multiple_of(2) {
                vec![None]
            } else {
                vec![Some(0), Some(1), Some(2)]
            };
            let mut out = Vec::with_capacity(prev.len() * qs.len());
            for s in &prev {
                for &q in &qs {
                    out.push(psi(n, s, q)?);
                }
            }
            out
        }
    };
    out.sort();
    Ok(out)
}

fn odd_hook_params(alpha: &Composition) -> Result<(usize, usize)> {
    match hook_of(alpha)? {
        Hook::Odd { k, n } if k >= 3 => Ok((k, n)),
        _ => Err(Error::Parity(format!(
            "{alpha} is not an odd hook with first part >= 3"
        ))),
    }
}

/// Embeds `τ ∈ Σ_(k)` into `S_n` for the odd hook `α = (k, 1^{n-k})`, `k >= 3`, on
/// the support `[1, m] ∪ {j} ∪ [n-m+1, n]`, `m = (k-1)/2`, `m < j <= n-m`.
pub fn odd_hook_phi(tau: &Cycle, j: usize, alpha: &Composition) -> Result<Permutation> {
    let (k, n) = odd_hook_params(alpha)?;
    let m = (k - 1) / 2;
    if tau.len() != k || !tau.is_full() || !in_sigma_n(tau)? {
        return Err(Error::NotInClass(tau.to_string()));
    }
    if j <= m || j > n - m {
        return Err(Error::InvalidParameter(format!(
            "j = {j} outside [{}, {}]",
            m + 1,
            n - m
        )));
    }
    let support: Vec<usize> = (1..=m)
        .chain(std::iter::once(j))
        .chain(n - m + 1..=n)
        .collect();
    let cycle: Vec<usize> = tau.entries().iter().map(|&a| support[a - 1]).collect();
    Permutation::from_cycles(n, &[cycle])
}

/// `Σ_α` for an odd hook.
pub fn odd_hook_class(alpha: &Composition) -> Result<Vec<Permutation>> {
    match hook_of(alpha)? {
        Hook::Odd { k: 1, n } => Ok(vec![Permutation::identity(n)]),
        Hook::Odd { k, n } => {
            let m = (k - 1) / 2;
            let mut out = Vec::new();
            for tau in sigma_n(k)? {
                for j in m + 1..=n - m {
                    out.push(odd_hook_phi(&tau, j, alpha)?);
                }
            }
            out.sort();
            Ok(out)
        }
        Hook::Even { .. } => Err(Error::Parity(format!("{alpha} is an even hook"))),
    }
}

/// Lifts `τ ∈ Σ_(l)` to the even hook `α = (l, 1^{n-l})` as `τ ⊙ id_{n-l}`.
pub fn even_hook_lift(tau: &Cycle, alpha: &Composition) -> Result<Permutation> {
    let (l, n) = match hook_of(alpha)? {
        Hook::Even { k, n } => (k, n),
        Hook::Odd { .. } => return Err(Error::Parity(format!("{alpha} is an odd hook"))),
    };
    if tau.len() != l || !tau.is_full() || !in_sigma_n(tau)? {
        return Err(Error::NotInClass(tau.to_string()));
    }
    iprod(&tau.to_permutation(l)?, &Permutation::identity(n - l))
}

/// Number of permutations of `S_n` with the given cycle type.
pub fn class_size(n: usize, ty: &Partition) -> BigUint {
    let mut z = BigUint::from(1u32);
    for k in 1..=n {
        let mk = ty.multiplicity(k);
        z *= BigUint::from(k).pow(mk as u32) * factorial(mk);
    }
    factorial(n) / z
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

/// Every permutation of `S_n` with cycle type `ty`, sorted.
pub fn permutations_of_type(n: usize, ty: &Partition) -> Result<Vec<Permutation>> {
    if ty.size() != n {
        return Err(Error::InvalidParameter(format!(
            "{ty} is not a partition of {n}"
        )));
    }
    let count = class_size(n, ty);
    if count.to_u64().is_none_or(|c| c > FILTER_LIMIT) {
        return Err(Error::ResourceLimit {
            required: count.to_string(),
            limit: FILTER_LIMIT.to_string(),
        });
    }
    let mut remaining: Vec<usize> = ty.parts().to_vec();
    let mut used = vec![false; n + 1];
    let mut cycles = Vec::new();
    let mut out = Vec::new();
    build_type(n, &mut remaining, &mut used, &mut cycles, &mut out);
    out.sort();
    Ok(out)
}

fn build_type(
    n: usize,
    remaining: &mut Vec<usize>,
    used: &mut [bool],
    cycles: &mut Vec<Vec<usize>>,
    out: &mut Vec<Permutation>,
) {
    let Some(first) = (1..=n).find(|&a| !used[a]) else {
        out.push(Permutation::from_cycles(n, cycles).unwrap());
        return;
    };
    let mut lens = remaining.clone();
    lens.dedup();
    for len in lens {
        let idx = remaining.iter().position(|&x| x == len).unwrap();
        remaining.remove(idx);
        used[first] = true;
        let mut cycle = vec![first];
        extend_cycle(n, len, remaining, used, &mut cycle, cycles, out);
        used[first] = false;
        remaining.insert(idx, len);
    }
}

fn extend_cycle(
    n: usize,
    len: usize,
    remaining: &mut Vec<usize>,
    used: &mut [bool],
    cycle: &mut Vec<usize>,
    cycles: &mut Vec<Vec<usize>>,
    out: &mut Vec<Permutation>,
) {
    if cycle.len() == len {
        cycles.push(cycle.clone());
        build_type(n, remaining, used, cycles, out);
        cycles.pop();
        return;
    }
    for a in 1..=n {
        if used[a] {
            continue;
        }
        used[a] = true;
        cycle.push(a);
        extend_cycle(n, len, remaining, used, cycle, cycles, out);
        cycle.pop();
        used[a] = false;
    }
}

/// Filters the permutations of the right cycle type through [`member_sigma_alpha`].
pub fn sigma_class_by_filter(alpha: &Composition) -> Result<Vec<Permutation>> {
    alpha.require_maximal()?;
    let mut out = Vec::new();
    for w in permutations_of_type(alpha.size(), &alpha.sort_to_partition())? {
        if member_sigma_alpha(&w, alpha)? {
            out.push(w);
        }
    }
    Ok(out)
}

/// `Σ_α` for maximal `α`. One-part and hook shapes, and shapes whose odd parts form
/// a hook, are built directly; anything else is found by filtering its conjugacy
/// class, subject to [`FILTER_LIMIT`].
pub fn sigma_class(alpha: &Composition) -> Result<EquivClass> {
    alpha.require_maximal()?;
    let n = alpha.size();
    let elements = if alpha.is_empty() {
        vec![Permutation::identity(0)]
    } else if alpha.len() == 1 {
        sigma_n(n)?
            .iter()
            .map(|c| c.to_permutation(n))
            .collect::<Result<_>>()?
    } else {
        match alpha.hook_kind() {
            Some(Hook::Odd { .. }) => odd_hook_class(alpha)?,
            Some(Hook::Even { k, .. }) => sigma_n(k)?
                .iter()
                .map(|t| even_hook_lift(t, alpha))
                .collect::<Result<_>>()?,
            None => {
                let (_, odd, _) = alpha.split_even_odd()?;
                if odd.is_empty() || odd.hook_kind().is_some() {
                    generate_hookish(alpha)?
                } else {
                    sigma_class_by_filter(alpha)?
                }
            }
        }
    };
    Ok(EquivClass::from_elements(Some(alpha.clone()), elements))
}
