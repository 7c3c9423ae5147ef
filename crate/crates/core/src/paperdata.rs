//! Classification data and decision procedures: the characteristic zero
//! multiplicity-free list, the restricted and general classification, the
//! `B2` Weyl module factors, closed-form weight space dimensions in rank 2,
//! and the `G2` table of subdominant weights.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::a1mod::{self, A1Char};
use crate::characteristic::{is_prime, Characteristic};
use crate::charalg::{freudenthal_to_depth, Character};
use crate::error::{Error, Result};
use crate::jantzen::CompSeries;
use crate::principal::{
    adjacent_pair_dim, certify_not_mf, irreducible_character, project, project_above,
    restrict_weight, restriction_factors, Branch, CertifyOutcome, Provenance, Status, Verdict,
};
use crate::rootsys::{Family, GroupType, Rational, RootSystem, Weight};

/// One row of the characteristic zero list. `terms` are `(node, min, max)`:
/// nodes count from 1, negative nodes count back from the last one, and the
/// coefficient at that node lies in `min..=max`. All other coefficients vanish.
#[derive(Clone, Copy, Debug)]
pub struct Table1Entry {
    pub family: Family,
    pub min_rank: usize,
    pub max_rank: usize,
    /// Required `rank % 2`, if any.
    pub rank_parity: Option<usize>,
    pub terms: &'static [(i32, i64, i64)],
}

const ANY: usize = usize::MAX;
const UNBOUNDED: i64 = i64::MAX;

const fn entry(
    family: Family,
    min_rank: usize,
    max_rank: usize,
    terms: &'static [(i32, i64, i64)],
) -> Table1Entry {
    Table1Entry {
        family,
        min_rank,
        max_rank,
        rank_parity: None,
        terms,
    }
}

/// Highest weights whose Weyl module restricts multiplicity freely in
/// characteristic zero, up to graph automorphisms.
pub const TABLE1: &[Table1Entry] = &[
    entry(Family::A, 2, ANY, &[(1, 1, 1)]),
    entry(Family::A, 2, ANY, &[(2, 1, 1)]),
    entry(Family::A, 2, ANY, &[(1, 2, 2)]),
    entry(Family::A, 2, ANY, &[(1, 1, 1), (-1, 1, 1)]),
    entry(Family::A, 5, 7, &[(3, 1, 1)]),
    entry(Family::A, 2, 5, &[(1, 3, 3)]),
    entry(Family::A, 2, 3, &[(1, 4, 4)]),
    entry(Family::A, 2, 3, &[(1, 5, 5)]),
    entry(Family::A, 3, 3, &[(1, 1, 1), (2, 1, 1)]),
    entry(Family::A, 2, 2, &[(1, 0, UNBOUNDED), (2, 1, 1)]),
    entry(Family::A, 2, 2, &[(1, 1, UNBOUNDED)]),
    entry(Family::B, 2, ANY, &[(1, 1, 1)]),
    entry(Family::B, 2, ANY, &[(2, 1, 1)]),
    entry(Family::B, 2, ANY, &[(1, 2, 2)]),
    entry(Family::B, 2, 8, &[(-1, 1, 1)]),
    entry(Family::B, 3, 3, &[(1, 1, 1), (3, 1, 1)]),
    entry(Family::B, 3, 3, &[(3, 2, 2)]),
    entry(Family::B, 3, 3, &[(1, 3, 3)]),
    entry(Family::B, 2, 2, &[(1, 1, 5)]),
    entry(Family::B, 2, 2, &[(2, 1, 5)]),
    entry(Family::B, 2, 2, &[(1, 1, 1), (2, 1, 1)]),
    entry(Family::B, 2, 2, &[(1, 1, 1), (2, 2, 2)]),
    entry(Family::B, 2, 2, &[(1, 2, 2), (2, 1, 1)]),
    entry(Family::C, 3, ANY, &[(1, 1, 1)]),
    entry(Family::C, 3, ANY, &[(2, 1, 1)]),
    entry(Family::C, 3, ANY, &[(1, 2, 2)]),
    entry(Family::C, 3, 5, &[(3, 1, 1)]),
    entry(Family::C, 4, 5, &[(-1, 1, 1)]),
    entry(Family::C, 3, 3, &[(1, 3, 3)]),
    entry(Family::D, 4, ANY, &[(1, 1, 1)]),
    Table1Entry {
        rank_parity: Some(1),
        ..entry(Family::D, 4, ANY, &[(2, 1, 1)])
    },
    Table1Entry {
        rank_parity: Some(0),
        ..entry(Family::D, 4, ANY, &[(1, 2, 2)])
    },
    entry(Family::D, 4, 9, &[(-1, 1, 1)]),
    entry(Family::E, 6, 6, &[(1, 1, 1)]),
    entry(Family::E, 6, 6, &[(2, 1, 1)]),
    entry(Family::E, 7, 7, &[(1, 1, 1)]),
    entry(Family::E, 7, 7, &[(7, 1, 1)]),
    entry(Family::E, 8, 8, &[(8, 1, 1)]),
    entry(Family::F, 4, 4, &[(1, 1, 1)]),
    entry(Family::F, 4, 4, &[(4, 1, 1)]),
    entry(Family::G, 2, 2, &[(1, 1, 1)]),
    entry(Family::G, 2, 2, &[(2, 1, 1)]),
    entry(Family::G, 2, 2, &[(1, 1, 1), (2, 1, 1)]),
    entry(Family::G, 2, 2, &[(1, 2, 2)]),
    entry(Family::G, 2, 2, &[(2, 2, 2)]),
    entry(Family::G, 2, 2, &[(1, 3, 3)]),
];

impl Table1Entry {
    pub fn matches(&self, t: GroupType, lambda: &Weight) -> bool {
        let n = t.rank();
        if t.family() != self.family
            || n < self.min_rank
            || n > self.max_rank
            || self.rank_parity.is_some_and(|q| n % 2 != q)
        {
            return false;
        }
        let mut want = vec![None; n];
        for &(node, lo, hi) in self.terms {
            let idx = if node > 0 {
                node as usize - 1
            } else {
                n - node.unsigned_abs() as usize
            };
            if idx >= n || want[idx].is_some() {
                return false;
            }
            want[idx] = Some((lo, hi));
        }
        lambda.0.iter().zip(&want).all(|(&c, w)| match w {
            Some((lo, hi)) => (*lo..=*hi).contains(&c),
            None => c == 0,
        })
    }
}

/// Node permutations induced by graph automorphisms, identity included.
pub fn graph_automorphisms(t: GroupType) -> Vec<Vec<usize>> {
    let n = t.rank();
    let id: Vec<usize> = (0..n).collect();
    let mut out = vec![id.clone()];
    match t.family() {
        Family::A if n > 1 => out.push((0..n).rev().collect()),
        Family::D if n == 4 => {
            for perm in [[0, 3, 2], [2, 0, 3], [2, 3, 0], [3, 0, 2], [3, 2, 0]] {
                let mut s = id.clone();
                s[0] = perm[0];
                s[2] = perm[1];
                s[3] = perm[2];
                out.push(s);
            }
        }
        Family::D => {
            let mut s = id.clone();
            s.swap(n - 2, n - 1);
            out.push(s);
        }
        Family::E if n == 6 => out.push(vec![5, 1, 4, 3, 2, 0]),
        _ => {}
    }
    out
}

pub fn table1_contains(rs: &RootSystem, lambda: &Weight) -> bool {
    let t = rs.group_type();
    graph_automorphisms(t).iter().any(|perm| {
        let image = Weight::new(perm.iter().map(|&i| lambda.0[i]));
        TABLE1.iter().any(|e| e.matches(t, &image))
    })
}

/// Factors of `Delta_K(lambda)` restricted to the principal A1 when they are
/// multiplicity free, `None` otherwise.
///
/// The sequence is computed to increasing depth so that a repeat near the top
/// stops the computation early.
pub fn char0_factors(rs: &RootSystem, lambda: &Weight) -> Result<Option<Vec<u64>>> {
    let r = restrict_weight(rs, lambda)?;
    let half = r / 2;
    let mut depth = half.min(4);
    loop {
        let ch = freudenthal_to_depth(rs, lambda, Some(depth as i64))?;
        let a1 = project_above(rs, &ch, r as i64 - 2 * depth as i64);
        let mut factors = Vec::new();
        let mut prev = 0u64;
        for d in 0..=depth {
            let n = a1.mult(r as i64 - 2 * d as i64);
            match n.checked_sub(prev) {
                Some(0) => {}
                Some(1) => factors.push(r - 2 * d),
                Some(_) => return Ok(None),
                None => {
                    return Err(Error::NegativeMultiplicity {
                        d: d as usize,
                        value: n as i64 - prev as i64,
                    })
                }
            }
            prev = n;
        }
        if depth == half {
            return Ok(Some(factors));
        }
        depth = (depth * 2).min(half);
    }
}

pub fn char0_mf(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    Ok(char0_factors(rs, lambda)?.is_some())
}

fn check_prime_at_least_coxeter(rs: &RootSystem, p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let h = rs.coxeter_number();
    if p < h {
        return Err(Error::PBelowCoxeter { p, h });
    }
    Ok(())
}

fn is_a2_exception(t: GroupType, lambda: &Weight, p: u64) -> bool {
    t.family() == Family::A && t.rank() == 2 && p == 3 && lambda.0.as_slice() == [1, 1]
}

fn is_b2_exception(t: GroupType, lambda: &Weight, p: u64) -> bool {
    t.family() == Family::B && t.rank() == 2 && p == 5 && lambda.0.as_slice() == [2, 0]
}

/// Classification for `p`-restricted `lambda`.
pub fn theorem_verdict(rs: &RootSystem, lambda: &Weight, p: u64) -> Result<Verdict> {
    check_prime_at_least_coxeter(rs, p)?;
    rs.check_dominant(lambda)?;
    if !lambda.is_restricted(p) {
        return Err(Error::NotRestricted {
            weight: lambda.clone(),
            p,
        });
    }
    let r = restrict_weight(rs, lambda)?;
    let t = rs.group_type();
    let (status, branch, factors) = if lambda.is_zero() {
        (Status::MF, Branch::LargePrime, Some(vec![0]))
    } else if p > r {
        match char0_factors(rs, lambda)? {
            Some(f) => (Status::MF, Branch::LargePrime, Some(f)),
            None => (Status::NotMF, Branch::NoBranch, None),
        }
    } else if is_a2_exception(t, lambda, p) || is_b2_exception(t, lambda, p) {
        let branch = if t.family() == Family::A {
            Branch::A2Adjoint
        } else {
            Branch::B2TwoOmegaOne
        };
        let f = restriction_factors(rs, lambda, Characteristic::Prime(p), None)?;
        (Status::MF, branch, Some(f))
    } else {
        (Status::NotMF, Branch::NoBranch, None)
    };
    Ok(Verdict {
        status,
        r,
        provenance: Provenance::TheoremBranch { branch, factors },
    })
}

/// `lambda = sum p^i lambda_i` with every layer restricted.
pub fn p_adic_layers(lambda: &Weight, p: u64) -> Vec<Weight> {
    let p = p as i64;
    let mut rest = lambda.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        out.push(Weight::new(rest.0.iter().map(|c| c % p)));
        rest = Weight::new(rest.0.iter().map(|c| c / p));
    }
    if out.is_empty() {
        out.push(lambda.clone());
    }
    out
}

/// Restriction of `L(lambda)` assembled from its layers by Steinberg's
/// tensor product theorem. `None` when some layer is out of reach or the
/// product would exceed `max_terms` weight pairs.
pub fn layered_restriction(
    rs: &RootSystem,
    lambda: &Weight,
    p: u64,
    max_terms: usize,
) -> Result<Option<A1Char>> {
    let mut acc = A1Char::weyl(0);
    let mut q = 1u64;
    for layer in p_adic_layers(lambda, p) {
        let Some(ch) = irreducible_character(rs, &layer, Characteristic::Prime(p), None)? else {
            return Ok(None);
        };
        let part = project(rs, &ch).frobenius(q);
        if acc.mults.len().saturating_mul(part.mults.len()) > max_terms {
            return Ok(None);
        }
        acc = acc.tensor(&part);
        q = q.checked_mul(p).ok_or(Error::Overflow("p-adic layers"))?;
    }
    Ok(Some(acc))
}

const LAYERED_LIMIT: usize = 4_000_000;

/// Classification for arbitrary dominant `lambda`, through its p-adic layers.
pub fn corollary_verdict(rs: &RootSystem, lambda: &Weight, p: u64) -> Result<Verdict> {
    check_prime_at_least_coxeter(rs, p)?;
    rs.check_dominant(lambda)?;
    let layers = p_adic_layers(lambda, p);
    if layers.len() == 1 {
        return theorem_verdict(rs, lambda, p);
    }
    let r = restrict_weight(rs, lambda)?;
    let t = rs.group_type();
    let coords = |w: &Weight| w.0.to_vec();
    let top = layers.len() - 1;

    let mut large = true;
    for layer in &layers {
        if layer.is_zero() {
            continue;
        }
        if restrict_weight(rs, layer)? >= p || !char0_mf(rs, layer)? {
            large = false;
            break;
        }
    }
    let branch = if large {
        Some(Branch::LargePrime)
    } else {
        let exceptional = |special: Vec<i64>, allowed: &[Vec<i64>], next_ok: &[Vec<i64>]| {
            layers.iter().any(|l| coords(l) == special)
                && layers.iter().all(|l| allowed.contains(&coords(l)))
                && (0..top).all(|j| coords(&layers[j]) != special || next_ok.contains(&coords(&layers[j + 1])))
        };
        if t.family() == Family::A
            && t.rank() == 2
            && p == 3
            && exceptional(
                vec![1, 1],
                &[vec![0, 0], vec![1, 1], vec![1, 0], vec![0, 1]],
                &[vec![0, 0]],
            )
        {
            Some(Branch::A2Adjoint)
        } else if t.family() == Family::B
            && t.rank() == 2
            && p == 5
            && exceptional(
                vec![2, 0],
                &[vec![0, 0], vec![2, 0], vec![1, 0], vec![0, 1]],
                &[vec![0, 0], vec![0, 1]],
            )
        {
            Some(Branch::B2TwoOmegaOne)
        } else {
            None
        }
    };
    let (status, branch, factors) = match branch {
        Some(b) => {
            let factors = match layered_restriction(rs, lambda, p, LAYERED_LIMIT)? {
                Some(ch) => Some(a1mod::decompose(&ch, p)?),
                None => None,
            };
            (Status::MF, b, factors)
        }
        None => (Status::NotMF, Branch::NoBranch, None),
    };
    Ok(Verdict {
        status,
        r,
        provenance: Provenance::TheoremBranch { branch, factors },
    })
}

/// Full decision for any dominant `lambda`: the classification, with a
/// not-MF certificate attached when one is found.
pub fn verdict(
    rs: &RootSystem,
    lambda: &Weight,
    p: u64,
    data: Option<&Character>,
) -> Result<Verdict> {
    let base = corollary_verdict(rs, lambda, p)?;
    if base.status != Status::NotMF {
        return Ok(base);
    }
    match certify_not_mf(rs, lambda, p, data)? {
        CertifyOutcome::NotMF(cert) => Ok(Verdict {
            provenance: Provenance::Certificate(cert),
            ..base
        }),
        CertifyOutcome::MF(f) => Err(Error::Contradiction(format!(
            "classification says not MF but the restriction of {lambda} decomposes as {f:?}"
        ))),
        CertifyOutcome::Unknown => Ok(base),
    }
}

/// MF test for a tensor product whose low part lies below `p^(s+1)` and whose
/// high part is a Frobenius twist by `p^(s+1)`.
pub fn tensor_split_mf(low: &[u64], high: &[u64], p: u64, s: u32) -> Result<bool> {
    let bound = p
        .checked_pow(s + 1)
        .ok_or(Error::Overflow("tensor_split_mf"))?;
    let violated = || Error::SeparationViolated { exponent: s + 1, bound };
    if low.iter().any(|&t| t >= bound) || high.iter().any(|&v| v % bound != 0) {
        return Err(violated());
    }
    let distinct = |xs: &[u64]| {
        let mut v = xs.to_vec();
        v.sort_unstable();
        v.windows(2).all(|w| w[0] != w[1])
    };
    if high.is_empty() {
        return Ok(distinct(low));
    }
    if !distinct(low) || !distinct(high) {
        return Ok(false);
    }
    let sums: Vec<u64> = low
        .iter()
        .flat_map(|&a| high.iter().map(move |&b| a + b))
        .collect();
    Ok(distinct(&sums))
}

/// Composition factors of the `B2` Weyl module `Delta(a, b)`, `alpha_1` long.
pub fn b2_weyl_factors(a: i64, b: i64, p: u64) -> Result<CompSeries> {
    let q = p as i64;
    let lambda = Weight::new([a, b]);
    if !is_prime(p) || p < 5 {
        return Err(Error::NotPrime(p));
    }
    if a < 0 || b < 0 || a >= q || b >= q {
        return Err(Error::NotRestricted { weight: lambda, p });
    }
    let s = 2 * a + b + 3;
    let second = if a + b + 2 < q && q < s {
        Some([q - a - b - 3, b])
    } else if b + 1 < q && q < a + b + 2 && s < 2 * q {
        Some([a, 2 * q - 2 * a - b - 4])
    } else if s > 2 * q && a.max(b) + 1 < q {
        Some([2 * q - a - b - 3, b])
    } else if b == q - 1 && 2 * a + q + 2 > 2 * q && a < q - 1 {
        Some([q - a - 2, q - 1])
    } else {
        None
    };
    let mut factors = BTreeMap::new();
    factors.insert(lambda.clone(), 1);
    if let Some(mu) = second {
        factors.insert(Weight::new(mu), 1);
    }
    Ok(CompSeries { lambda, factors })
}

fn root_coords(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Option<Vec<i64>> {
    let c = rs.weight_to_root_coords(&(lambda - mu));
    c.iter()
        .map(|x| (x.is_integer() && *x >= Rational::zero()).then(|| x.to_integer()))
        .collect()
}

/// The Levi subsystem on `nodes`, when it is of type `A` or has rank 2.
/// Returns it with its nodes listed in Bourbaki order.
fn levi(rs: &RootSystem, nodes: &[usize]) -> Option<(RootSystem, Vec<usize>)> {
    let c = rs.cartan();
    if let [i, j] = *nodes {
        let (family, order) = match (c[i][j], c[j][i]) {
            (-1, -1) => (Family::A, vec![i, j]),
            (-2, _) => (Family::B, vec![i, j]),
            (_, -2) => (Family::B, vec![j, i]),
            (_, -3) => (Family::G, vec![i, j]),
            (-3, _) => (Family::G, vec![j, i]),
            _ => return None,
        };
        let t = GroupType::new(family, 2).ok()?;
        return Some((RootSystem::build(t), order));
    }
    if nodes.len() < 3 {
        return None;
    }
    let edges = |i: usize| nodes.iter().filter(|&&j| rs.adjacent(i, j)).count();
    let simply_laced = nodes
        .iter()
        .all(|&i| nodes.iter().all(|&j| i == j || c[i][j] == 0 || (c[i][j] == -1 && c[j][i] == -1)));
    let start = *nodes.iter().find(|&&i| edges(i) == 1)?;
    if !simply_laced || nodes.iter().any(|&i| edges(i) > 2) {
        return None;
    }
    let mut order = vec![start];
    while let Some(&next) = nodes
        .iter()
        .find(|&&j| rs.adjacent(*order.last().unwrap(), j) && !order.contains(&j))
    {
        order.push(next);
    }
    if order.len() != nodes.len() {
        return None;
    }
    let t = GroupType::new(Family::A, nodes.len()).ok()?;
    Some((RootSystem::build(t), order))
}

fn congruent_zero(x: i64, p: Characteristic) -> bool {
    match p {
        Characteristic::Zero => x == 0,
        Characteristic::Prime(p) => x.rem_euclid(p as i64) == 0,
    }
}

fn direct_oracle(rs: &RootSystem, lambda: &Weight, k: &[i64], p: Characteristic) -> Option<u64> {
    let t = rs.group_type();
    let support = lambda.support();
    if let [i, j] = *support.as_slice() {
        let pair_only = k.iter().enumerate().all(|(n, &x)| x == i64::from(n == i || n == j));
        if rs.adjacent(i, j) && pair_only {
            return adjacent_pair_dim(rs, lambda, i, j, p);
        }
        if t.family() == Family::A {
            let s = k.iter().position(|&x| x != 0)?;
            let e = k.iter().rposition(|&x| x != 0)?;
            let string = (0..k.len()).all(|n| k[n] == i64::from(s <= n && n <= e));
            if string && s <= i && j <= e {
                let sum = lambda.0[i] + lambda.0[j] + (j - i) as i64;
                let span = (j - i) as u64;
                return Some(if congruent_zero(sum, p) { span } else { span + 1 });
            }
        }
    }
    if t.family() == Family::G {
        let (a, b) = (lambda.0[0], lambda.0[1]);
        match (k[0], k[1]) {
            (2, 1) if a >= 2 && b >= 1 => {
                let hit = congruent_zero(a + 3 * b + 3, p) || congruent_zero(2 * a + 3 * b + 4, p);
                return Some(if hit { 2 } else { 3 });
            }
            (2, 1) if a == 1 && b >= 1 => {
                return Some(if congruent_zero(3 * b + 4, p) { 1 } else { 2 });
            }
            (1, 2) if a >= 1 && b >= 2 => {
                return Some(if congruent_zero(a + 3 * b + 3, p) { 1 } else { 2 });
            }
            _ => {}
        }
    }
    None
}

/// Closed-form dimension of the `mu` weight space of `L(lambda)`, where a
/// lemma covers the shape of `lambda - mu`, transported from the Levi
/// subsystem spanned by the simple roots occurring in `lambda - mu`.
pub fn rank2_dim_oracles(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    p: Characteristic,
) -> Result<u64> {
    rs.check_dominant(lambda)?;
    rs.check_weight(mu)?;
    if let Characteristic::Prime(q) = p {
        if !lambda.is_restricted(q) {
            return Err(Error::NotApplicable);
        }
    }
    let k = root_coords(rs, lambda, mu).ok_or(Error::NotApplicable)?;
    let nodes: Vec<usize> = (0..rs.rank()).filter(|&i| k[i] != 0).collect();
    if nodes.len() == rs.rank() {
        return direct_oracle(rs, lambda, &k, p).ok_or(Error::NotApplicable);
    }
    let (sub, order) = levi(rs, &nodes).ok_or(Error::NotApplicable)?;
    let sub_lambda = Weight::new(order.iter().map(|&i| lambda.0[i]));
    let sub_k: Vec<i64> = order.iter().map(|&i| k[i]).collect();
    direct_oracle(&sub, &sub_lambda, &sub_k, p).ok_or(Error::NotApplicable)
}

/// A row of the `G2` table: applicability, offset `lambda - nu` in simple
/// roots (`alpha_1` short), Weyl module multiplicity and the Seitz quantity.
#[derive(Clone, Copy)]
pub struct G2Row {
    pub offset: (i64, i64),
    pub applies: fn(i64, i64) -> bool,
    pub weyl_mult: fn(i64, i64) -> i64,
    pub seitz: fn(i64, i64) -> Rational,
}

fn delta(x: i64, y: i64) -> i64 {
    i64::from(x == y)
}

fn third(n: i64) -> Rational {
    Rational::new(n, 3)
}

pub const G2_TABLE: [G2Row; 8] = [
    G2Row {
        offset: (2, 1),
        applies: |a, b| a >= 1 && b >= 1,
        weyl_mult: |a, _| 3 - delta(a, 1),
        seitz: |a, b| third(2 * a + 3 * b + 4),
    },
    G2Row {
        offset: (1, 2),
        applies: |a, b| a >= 1 && b >= 2,
        weyl_mult: |_, _| 2,
        seitz: |a, b| third(a + 6 * b),
    },
    G2Row {
        offset: (2, 2),
        applies: |a, b| a >= 1 && b >= 1,
        weyl_mult: |a, b| 4 - delta(a, 1) - delta(b, 1),
        seitz: |a, b| third(2 * a + 6 * b + 4),
    },
    G2Row {
        offset: (2, 2),
        applies: |a, b| a == 0 && b >= 2,
        weyl_mult: |_, _| 2,
        seitz: |_, b| third(6 * b + 4),
    },
    G2Row {
        offset: (1, 3),
        applies: |a, b| a >= 1 && b >= 2,
        weyl_mult: |_, b| 2 - delta(b, 2),
        seitz: |a, b| third(a + 9 * b - 9),
    },
    G2Row {
        offset: (3, 2),
        applies: |a, b| a >= 1 && b >= 2,
        weyl_mult: |a, _| 7 - 2 * delta(a, 1) - delta(a, 2),
        seitz: |a, b| Rational::from_integer(a + 2 * b + 2),
    },
    G2Row {
        offset: (2, 3),
        applies: |a, b| a >= 1 && b >= 3,
        weyl_mult: |a, _| 4 - delta(a, 1),
        seitz: |a, b| third(2 * a + 9 * b - 2),
    },
    G2Row {
        offset: (1, 4),
        applies: |a, b| a == 1 && b >= 3,
        weyl_mult: |_, b| 2 - delta(b, 3),
        seitz: |a, b| third(a + 12 * b - 24),
    },
];

/// Normalization of the invariant form on `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G2Scaling {
    /// Long roots of squared length 1.
    LongOne,
    /// Long roots of squared length 2.
    LongTwo,
}

/// `2(lambda + rho, lambda - nu) - (lambda - nu, lambda - nu)` for `G2`.
pub fn seitz_quantity(a: i64, b: i64, offset: (i64, i64), scaling: G2Scaling) -> Rational {
    let rs = RootSystem::build(GroupType::new(Family::G, 2).expect("G2"));
    let lambda = Weight::new([a, b]);
    let diff = &rs.simple_root(0).scale(offset.0) + &rs.simple_root(1).scale(offset.1);
    let lr = &lambda + rs.rho();
    let q = rs.inner(&lr, &diff) * 2 - rs.inner(&diff, &diff);
    match scaling {
        G2Scaling::LongTwo => q,
        G2Scaling::LongOne => q / 2,
    }
}

/// Necessary condition for `lambda - offset` to afford a composition factor
/// of `Delta(a, b)`: the quantity lies in `(p/6) Z` with long roots of length 1.
pub fn seitz_filter_g2(a: i64, b: i64, offset: (i64, i64), p: u64) -> bool {
    let six_q = seitz_quantity(a, b, offset, G2Scaling::LongOne) * 6;
    six_q.is_integer() && six_q.to_integer().rem_euclid(p as i64) == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charalg::freudenthal;
    use crate::jantzen::{simple_solve, Solver};
    use crate::principal::mf_decide_computed;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::build(GroupType::new(f, n).unwrap())
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.iter().copied())
    }

    #[test]
    fn table1_membership() {
        assert!(table1_contains(&rs(Family::A, 5), &w(&[0, 0, 1, 0, 0])));
        assert!(!table1_contains(&rs(Family::B, 9), &Weight::fundamental(9, 8, 1)));
        assert!(table1_contains(&rs(Family::G, 2), &w(&[3, 0])));
        assert!(table1_contains(&rs(Family::A, 6), &w(&[0, 0, 0, 1, 0, 0])));
        assert!(table1_contains(&rs(Family::D, 5), &w(&[0, 0, 0, 1, 0])));
        assert!(table1_contains(&rs(Family::D, 4), &w(&[0, 0, 2, 0])));
        assert!(table1_contains(&rs(Family::E, 6), &Weight::fundamental(6, 5, 1)));
        assert!(!table1_contains(&rs(Family::B, 2), &w(&[6, 0])));
        assert!(table1_contains(&rs(Family::A, 2), &w(&[1, 9])));
    }

    #[test]
    fn char0_examples() {
        assert!(char0_mf(&rs(Family::A, 3), &w(&[0, 1, 0])).unwrap());
        assert!(!char0_mf(&rs(Family::A, 4), &w(&[0, 2, 0, 0])).unwrap());
        assert!(char0_mf(&rs(Family::E, 8), &Weight::zero(8)).unwrap());
        assert_eq!(
            char0_factors(&rs(Family::B, 2), &w(&[2, 0])).unwrap(),
            Some(vec![8, 4])
        );
    }

    #[test]
    fn char0_matches_full_decomposition() {
        let b3 = rs(Family::B, 3);
        for c in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 1], [2, 1, 0], [0, 0, 3]] {
            let lambda = w(&c);
            let a1 = project(&b3, &crate::charalg::freudenthal(&b3, &lambda).unwrap());
            let full = a1mod::char0_decompose(&a1).unwrap();
            let fast = char0_factors(&b3, &lambda).unwrap();
            assert_eq!(fast.is_some(), a1mod::is_multiplicity_free(&full), "{lambda}");
            if let Some(f) = fast {
                assert_eq!(f, full);
            }
        }
    }

    #[test]
    fn theorem_examples() {
        let v = theorem_verdict(&rs(Family::A, 2), &w(&[1, 1]), 3).unwrap();
        assert_eq!((v.status, v.factors()), (Status::MF, Some(&[4u64, 2][..])));
        let v = theorem_verdict(&rs(Family::B, 2), &w(&[2, 0]), 5).unwrap();
        assert_eq!((v.status, v.factors()), (Status::MF, Some(&[8u64, 4][..])));
        let v = theorem_verdict(&rs(Family::G, 2), &w(&[0, 1]), 7).unwrap();
        assert_eq!(v.status, Status::NotMF);
        assert!(matches!(
            theorem_verdict(&rs(Family::G, 2), &w(&[0, 1]), 5),
            Err(Error::PBelowCoxeter { p: 5, h: 6 })
        ));
    }

    #[test]
    fn corollary_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(corollary_verdict(&a2, &w(&[4, 4]), 3).unwrap().status, Status::NotMF);
        let v = corollary_verdict(&a2, &w(&[10, 10]), 3).unwrap();
        assert_eq!(v.status, Status::MF);
        let b2 = rs(Family::B, 2);
        assert_eq!(corollary_verdict(&b2, &w(&[2, 5]), 5).unwrap().status, Status::MF);
        assert_eq!(p_adic_layers(&w(&[10, 10]), 3), vec![w(&[1, 1]), w(&[0, 0]), w(&[1, 1])]);
    }

    #[test]
    fn tensor_split_examples() {
        assert!(tensor_split_mf(&[4, 2], &[36, 18], 3, 1).unwrap());
        assert!(!tensor_split_mf(&[4, 4], &[36], 3, 1).unwrap());
        assert!(tensor_split_mf(&[4, 2], &[], 3, 1).unwrap());
        assert!(matches!(
            tensor_split_mf(&[10], &[36], 3, 1),
            Err(Error::SeparationViolated { .. })
        ));
        assert!(matches!(
            tensor_split_mf(&[4], &[12], 3, 1),
            Err(Error::SeparationViolated { .. })
        ));
    }

    #[test]
    fn b2_factors_match_solver() {
        let b2 = rs(Family::B, 2);
        for p in [5u64, 7, 11] {
            for a in 0..p as i64 {
                for b in 0..p as i64 {
                    let closed = b2_weyl_factors(a, b, p).unwrap();
                    let solved = simple_solve(&b2, &w(&[a, b]), p).unwrap();
                    assert_eq!(closed, solved, "({a},{b}) p={p}");
                }
            }
        }
    }

    #[test]
    fn oracles_against_characters() {
        let cases: Vec<(Family, usize, u64)> = vec![
            (Family::A, 2, 7),
            (Family::B, 2, 7),
            (Family::G, 2, 7),
            (Family::G, 2, 11),
            (Family::A, 3, 5),
            (Family::A, 4, 5),
        ];
        let mut checked = 0;
        for (f, n, p) in cases {
            let g = rs(f, n);
            let mut solver = Solver::new(&g, p).unwrap();
            let coords = restricted_weights(n, p as i64);
            for lambda in coords {
                if lambda.support().len() > 2 {
                    continue;
                }
                let Ok(ch) = solver.irr_character(&lambda) else { continue };
                for mu in ch.support() {
                    match rank2_dim_oracles(&g, &lambda, mu, Characteristic::Prime(p)) {
                        Ok(d) => {
                            assert_eq!(d, ch.mult(&g, mu), "{f}{n} {lambda} {mu} p={p}");
                            checked += 1;
                        }
                        Err(Error::NotApplicable) => {}
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
        assert!(checked > 300, "{checked}");
    }

    #[test]
    fn oracles_transport_to_higher_rank() {
        // F4 nodes 2,3 form a B2 with node 2 long; C3 nodes 2,3 the other way round.
        for (f, n) in [(Family::F, 4), (Family::C, 3), (Family::B, 4)] {
            let g = rs(f, n);
            for i in 0..n - 1 {
                let lambda = &Weight::fundamental(n, i, 2) + &Weight::fundamental(n, i + 1, 1);
                let mu = &(&lambda - &g.simple_root(i)) - &g.simple_root(i + 1);
                let ch = freudenthal(&g, &lambda).unwrap();
                assert_eq!(
                    rank2_dim_oracles(&g, &lambda, &mu, Characteristic::Zero).unwrap(),
                    ch.mult(&g, &mu),
                    "{f}{n} {lambda}"
                );
            }
        }
        let a2 = rs(Family::A, 2);
        assert_eq!(
            rank2_dim_oracles(&a2, &w(&[4, 2]), &w(&[3, 1]), Characteristic::Prime(7)).unwrap(),
            1
        );
    }

    fn restricted_weights(n: usize, p: i64) -> Vec<Weight> {
        let mut out = vec![Weight::zero(n)];
        for i in 0..n {
            let mut next = Vec::new();
            for base in &out {
                for c in 0..p {
                    let mut v = base.clone();
                    v.0[i] = c;
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn g2_table_multiplicities() {
        let g2 = rs(Family::G, 2);
        for a in 0..=5 {
            for b in 0..=5 {
                let lambda = w(&[a, b]);
                let ch = freudenthal(&g2, &lambda).unwrap();
                for row in G2_TABLE.iter().filter(|r| (r.applies)(a, b)) {
                    let nu = &lambda
                        - &(&g2.simple_root(0).scale(row.offset.0) + &g2.simple_root(1).scale(row.offset.1));
                    assert_eq!(ch.mult(&g2, &nu) as i64, (row.weyl_mult)(a, b), "({a},{b}) {:?}", row.offset);
                }
            }
        }
    }

    #[test]
    fn g2_seitz_normalization() {
        for a in 0..6 {
            for b in 0..6 {
                for row in G2_TABLE.iter().filter(|r| (r.applies)(a, b)) {
                    let printed = (row.seitz)(a, b);
                    assert_eq!(seitz_quantity(a, b, row.offset, G2Scaling::LongOne), printed);
                    assert_eq!(seitz_quantity(a, b, row.offset, G2Scaling::LongTwo), printed * 2);
                }
            }
        }
        assert!(seitz_filter_g2(3, 4, (0, 0), 7));
    }

    #[test]
    fn g2_factors_pass_filter() {
        let g2 = rs(Family::G, 2);
        for p in [7u64, 11, 13] {
            let mut solver = Solver::new(&g2, p).unwrap();
            for a in 0..p as i64 {
                for b in 0..p as i64 {
                    let lambda = w(&[a, b]);
                    let Some(f) = solver.factors(&lambda).unwrap() else { continue };
                    for nu in f.keys() {
                        let k = root_coords(&g2, &lambda, nu).unwrap();
                        assert!(seitz_filter_g2(a, b, (k[0], k[1]), p), "({a},{b}) {nu} p={p}");
                    }
                }
            }
        }
    }

    #[test]
    fn theorem_agrees_with_computation_rank2() {
        for (f, ps) in [(Family::A, vec![3u64, 5]), (Family::B, vec![5, 7]), (Family::G, vec![7])] {
            let g = rs(f, 2);
            for p in ps {
                for lambda in restricted_weights(2, p as i64) {
                    let Ok(computed) = mf_decide_computed(&g, &lambda, Characteristic::Prime(p), None) else {
                        continue;
                    };
                    let t = theorem_verdict(&g, &lambda, p).unwrap();
                    assert_eq!(t.status, computed.status, "{f}2 {lambda} p={p}");
                }
            }
        }
    }
}
