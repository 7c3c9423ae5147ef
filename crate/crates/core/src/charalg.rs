//! Characters of Weyl modules: Weyl's dimension formula, Freudenthal's
//! multiplicity recursion and saturated weight sets.
//!
//! A [`Character`] stores multiplicities on dominant weights only. Orbit
//! expansion happens on demand through [`Character::for_each_weight`].

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{GroupType, RootSystem, Weight};

/// A W-invariant character given by its multiplicities on dominant weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    pub group: GroupType,
    pub mults: BTreeMap<Weight, u64>,
}

impl Character {
    pub fn new(group: GroupType) -> Self {
        Character {
            group,
            mults: BTreeMap::new(),
        }
    }

    /// Multiplicity of an arbitrary weight, read off its dominant representative.
    pub fn mult(&self, rs: &RootSystem, mu: &Weight) -> u64 {
        let dom = rs.dominant(mu);
        self.mults.get(&dom).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.mults.keys()
    }

    /// Total dimension after orbit expansion.
    pub fn dim(&self, rs: &RootSystem) -> BigUint {
        self.mults
            .iter()
            .map(|(w, &m)| rs.orbit_size(w) * BigUint::from(m))
            .sum()
    }

    /// Calls `f(weight, multiplicity)` for every weight of the expanded character.
    pub fn for_each_weight(&self, rs: &RootSystem, mut f: impl FnMut(&Weight, u64)) {
        for (w, &m) in &self.mults {
            rs.for_each_in_orbit(w, |v| f(v, m));
        }
    }
}

/// An integer combination of Weyl characters, `sum c_mu chi(mu)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualCharacter {
    pub terms: BTreeMap<Weight, i64>,
}

impl VirtualCharacter {
    pub fn add_term(&mut self, mu: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(mu.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&mu);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `prod <lambda+rho, alpha^vee> / <rho, alpha^vee>` over positive roots.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    rs.check_dominant(lambda)?;
    let lr = lambda + rs.rho();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for a in 0..rs.positive_roots().len() {
        num *= BigUint::from(rs.pairing(&lr, a) as u64);
        den *= BigUint::from(rs.pairing(rs.rho(), a) as u64);
    }
    debug_assert!((&num % &den) == BigUint::from(0u32));
    Ok(num / den)
}

/// Height of `lambda - mu`, i.e. the sum of its simple-root coordinates.
///
/// Each simple root pairs to 2 with `2 rho^vee`, so the height is half the
/// drop in the principal value.
pub fn depth(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> i64 {
    let c = rs.ta_coeffs();
    let diff: i64 = (0..rs.rank())
        .map(|i| c[i] * (lambda.0[i] - mu.0[i]))
        .sum();
    debug_assert!(diff % 2 == 0);
    diff / 2
}

/// Dominant weights `mu <= lambda` with `lambda - mu` in the root lattice,
/// sorted by increasing depth below `lambda`.
///
/// Every such weight is reached from `lambda` by a chain of dominant weights
/// whose successive differences are positive roots, so closure under
/// subtracting positive roots is complete.
pub fn weight_set(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    weight_set_to_depth(rs, lambda, None)
}

/// As [`weight_set`], keeping only weights at depth at most `max_depth`.
pub fn weight_set_to_depth(
    rs: &RootSystem,
    lambda: &Weight,
    max_depth: Option<i64>,
) -> Result<Vec<Weight>> {
    rs.check_dominant(lambda)?;
    let roots: Vec<(Weight, i64)> = rs
        .positive_roots()
        .iter()
        .map(|r| (rs.root_to_weight(r), r.iter().sum()))
        .collect();
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(lambda.clone());
    let mut stack = vec![(lambda.clone(), 0i64)];
    let mut out = vec![(lambda.clone(), 0i64)];
    while let Some((w, h)) = stack.pop() {
        for (a, ah) in &roots {
            let nh = h + ah;
            if max_depth.is_some_and(|m| nh > m) {
                continue;
            }
            let v = &w - a;
            if v.is_dominant() && seen.insert(v.clone()) {
                stack.push((v.clone(), nh));
                out.push((v, nh));
            }
        }
    }
    out.sort_by(|x, y| x.1.cmp(&y.1).then_with(|| y.0.cmp(&x.0)));
    Ok(out.into_iter().map(|(w, _)| w).collect())
}

/// Weight multiplicities of the Weyl module `Delta(lambda)`.
pub fn freudenthal(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    freudenthal_to_depth(rs, lambda, None)
}

/// Freudenthal's recursion, truncated to dominant weights at depth at most
/// `max_depth` below `lambda`. The recursion only looks upward, so the
/// truncated values are exact.
pub fn freudenthal_to_depth(
    rs: &RootSystem,
    lambda: &Weight,
    max_depth: Option<i64>,
) -> Result<Character> {
    let weights = weight_set_to_depth(rs, lambda, max_depth)?;
    let roots: Vec<Weight> = rs
        .positive_roots()
        .iter()
        .map(|r| rs.root_to_weight(r))
        .collect();
    let lr = lambda + rs.rho();
    let top = rs.inner_scaled(&lr, &lr) as i128;
    let mut mults: HashMap<Weight, u64> = HashMap::with_capacity(weights.len());
    let mut ordered: BTreeMap<Weight, u64> = BTreeMap::new();
    for mu in &weights {
        if mu == lambda {
            mults.insert(mu.clone(), 1);
            ordered.insert(mu.clone(), 1);
            continue;
        }
        let mr = mu + rs.rho();
        let lhs = top - rs.inner_scaled(&mr, &mr) as i128;
        let mut rhs: i128 = 0;
        for a in &roots {
            let mut nu = mu + a;
            loop {
                let dom = rs.dominant(&nu);
                let Some(&m) = mults.get(&dom) else { break };
                rhs += 2 * (m as i128) * (rs.inner_scaled(&nu, a) as i128);
                nu = &nu + a;
            }
        }
        assert!(lhs > 0, "Freudenthal denominator vanished at {mu}");
        assert!(
            rhs % lhs == 0,
            "Freudenthal division is not exact at {mu} below {lambda}"
        );
        let m = u64::try_from(rhs / lhs).map_err(|_| Error::Overflow("freudenthal"))?;
        mults.insert(mu.clone(), m);
        ordered.insert(mu.clone(), m);
    }
    Ok(Character {
        group: rs.group_type(),
        mults: ordered,
    })
}

/// Dominant collection of the product of two characters. Intended for small
/// rank, where explicit orbit expansion is cheap.
pub fn tensor_characters(rs: &RootSystem, x: &Character, y: &Character) -> Result<Character> {
    let mut xs: Vec<(Weight, u64)> = Vec::new();
    x.for_each_weight(rs, |w, m| xs.push((w.clone(), m)));
    let mut ys: Vec<(Weight, u64)> = Vec::new();
    y.for_each_weight(rs, |w, m| ys.push((w.clone(), m)));
    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    for (a, ma) in &xs {
        for (b, mb) in &ys {
            let s = a + b;
            if s.is_dominant() {
                let prod = ma.checked_mul(*mb).ok_or(Error::Overflow("tensor"))?;
                let e = out.entry(s).or_insert(0);
                *e = e.checked_add(prod).ok_or(Error::Overflow("tensor"))?;
            }
        }
    }
    Ok(Character {
        group: rs.group_type(),
        mults: out,
    })
}

/// `ch Delta(lambda1) * ch Delta(lambda2)` collected on dominant weights.
pub fn tensor_weights(rs: &RootSystem, lambda1: &Weight, lambda2: &Weight) -> Result<Character> {
    let x = freudenthal(rs, lambda1)?;
    let y = freudenthal(rs, lambda2)?;
    tensor_characters(rs, &x, &y)
}
