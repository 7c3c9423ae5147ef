//! The Jantzen sum formula and composition series of Weyl modules that it
//! determines.
//!
//! The sum `sum_{i>0} ch V^i` over the Jantzen filtration is returned as an
//! integer combination of Weyl characters. Rewriting it in the basis of
//! irreducible characters, using decomposition numbers of the smaller Weyl
//! modules that appear, pins down the radical whenever every coefficient is
//! 0 or 1: a factor of `V^1` of multiplicity `m` contributes at least `m`,
//! and a coefficient of 1 leaves room for exactly one copy.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::characteristic::{is_prime, valuation};
use crate::charalg::{freudenthal, Character, VirtualCharacter};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// `sum c_mu chi(mu)` equal to `sum_{i>0} ch V^i` for `Delta(lambda)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsfSum {
    pub lambda: Weight,
    pub p: u64,
    pub terms: VirtualCharacter,
}

/// Composition factors `[Delta(lambda) : L(mu)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompSeries {
    pub lambda: Weight,
    pub factors: BTreeMap<Weight, u64>,
}

/// Moves `mu + rho` into the dominant chamber. Returns sign 0 when it lies on
/// a wall, otherwise `((-1)^len(w), w(mu + rho) - rho)`.
pub fn dot_reflect(rs: &RootSystem, mu: &Weight) -> (i64, Option<Weight>) {
    let (dom, parity) = rs.dominant_rep(&(mu + rs.rho()));
    if dom.0.contains(&0) {
        (0, None)
    } else {
        (parity.sign(), Some(&dom - rs.rho()))
    }
}

/// Evaluates the Jantzen sum formula.
///
/// `lambda` must be dominant. It need not be `p`-restricted: the solver below
/// recurses into arbitrary dominant weights below a restricted one.
pub fn jsf_sum(rs: &RootSystem, lambda: &Weight, p: u64) -> Result<JsfSum> {
    rs.check_dominant(lambda)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let lr = lambda + rs.rho();
    let mut terms = VirtualCharacter::default();
    for (a, root) in rs.positive_roots().iter().enumerate() {
        let n = rs.pairing(&lr, a);
        let alpha = rs.root_to_weight(root);
        let mut mp = p as i64;
        while mp < n {
            let v = valuation(mp as u64, p) as i64;
            let shifted = lambda - &alpha.scale(n - mp);
            if let (s, Some(mu)) = dot_reflect(rs, &shifted) {
                if s != 0 {
                    terms.add_term(mu, s * v);
                }
            }
            mp += p as i64;
        }
    }
    Ok(JsfSum {
        lambda: lambda.clone(),
        p,
        terms,
    })
}

pub fn is_weyl_irreducible(rs: &RootSystem, lambda: &Weight, p: u64) -> Result<bool> {
    Ok(jsf_sum(rs, lambda, p)?.terms.is_empty())
}

/// Memoizing solver for one root system and prime.
pub struct Solver<'a> {
    rs: &'a RootSystem,
    p: u64,
    factors: HashMap<Weight, Option<BTreeMap<Weight, u64>>>,
    irr: HashMap<Weight, Option<VirtualCharacter>>,
    weyl: HashMap<Weight, Character>,
}

impl<'a> Solver<'a> {
    pub fn new(rs: &'a RootSystem, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Solver {
            rs,
            p,
            factors: HashMap::new(),
            irr: HashMap::new(),
            weyl: HashMap::new(),
        })
    }

    /// Decomposition numbers of `Delta(lambda)`, or `None` when the sum
    /// formula leaves them undetermined.
    pub fn factors(&mut self, lambda: &Weight) -> Result<Option<BTreeMap<Weight, u64>>> {
        if let Some(f) = self.factors.get(lambda) {
            return Ok(f.clone());
        }
        let result = self.compute_factors(lambda)?;
        self.factors.insert(lambda.clone(), result.clone());
        Ok(result)
    }

    fn compute_factors(&mut self, lambda: &Weight) -> Result<Option<BTreeMap<Weight, u64>>> {
        let jsf = jsf_sum(self.rs, lambda, self.p)?;
        let mut in_irr: BTreeMap<Weight, i64> = BTreeMap::new();
        for (mu, &c) in &jsf.terms.terms {
            let Some(sub) = self.factors(mu)? else {
                return Ok(None);
            };
            for (nu, &d) in &sub {
                *in_irr.entry(nu.clone()).or_insert(0) += c * d as i64;
            }
        }
        let mut out = BTreeMap::new();
        out.insert(lambda.clone(), 1u64);
        for (nu, c) in in_irr {
            match c {
                0 => {}
                1 => {
                    out.insert(nu, 1);
                }
                _ => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    /// `ch L(lambda)` as a combination of Weyl characters.
    pub fn irr_in_weyl_basis(&mut self, lambda: &Weight) -> Result<Option<VirtualCharacter>> {
        if let Some(v) = self.irr.get(lambda) {
            return Ok(v.clone());
        }
        let result = match self.factors(lambda)? {
            None => None,
            Some(f) => {
                let mut v = VirtualCharacter::default();
                v.add_term(lambda.clone(), 1);
                let mut ok = true;
                for (nu, &d) in f.iter().filter(|(nu, _)| *nu != lambda) {
                    match self.irr_in_weyl_basis(nu)? {
                        Some(sub) => {
                            for (mu, &c) in &sub.terms {
                                v.add_term(mu.clone(), -(d as i64) * c);
                            }
                        }
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                ok.then_some(v)
            }
        };
        self.irr.insert(lambda.clone(), result.clone());
        Ok(result)
    }

    fn weyl_character(&mut self, mu: &Weight) -> Result<&Character> {
        if !self.weyl.contains_key(mu) {
            let ch = freudenthal(self.rs, mu)?;
            self.weyl.insert(mu.clone(), ch);
        }
        Ok(&self.weyl[mu])
    }

    /// Dominant weight multiplicities of `L(lambda)`.
    pub fn irr_character(&mut self, lambda: &Weight) -> Result<Character> {
        let v = self
            .irr_in_weyl_basis(lambda)?
            .ok_or_else(|| Error::Inconclusive(lambda.clone()))?;
        let mut acc: BTreeMap<Weight, i128> = BTreeMap::new();
        for (mu, &c) in &v.terms {
            let ch = self.weyl_character(mu)?;
            for (nu, &m) in &ch.mults {
                *acc.entry(nu.clone()).or_insert(0) += c as i128 * m as i128;
            }
        }
        let mut mults = BTreeMap::new();
        for (nu, m) in acc {
            if m < 0 {
                return Err(Error::Inconclusive(lambda.clone()));
            }
            if m > 0 {
                mults.insert(nu, u64::try_from(m).map_err(|_| Error::Overflow("irr_character"))?);
            }
        }
        Ok(Character {
            group: self.rs.group_type(),
            mults,
        })
    }
}

/// Composition factors of `Delta(lambda)` when the sum formula determines them.
pub fn simple_solve(rs: &RootSystem, lambda: &Weight, p: u64) -> Result<CompSeries> {
    let mut s = Solver::new(rs, p)?;
    match s.factors(lambda)? {
        Some(factors) => Ok(CompSeries {
            lambda: lambda.clone(),
            factors,
        }),
        None => Err(Error::Inconclusive(lambda.clone())),
    }
}

/// Character of `L(lambda)` when the composition series is determined.
pub fn irr_character(rs: &RootSystem, lambda: &Weight, p: u64) -> Result<Character> {
    Solver::new(rs, p)?.irr_character(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charalg::weyl_dim;
    use crate::rootsys::{Family, GroupType};
    use num_bigint::BigUint;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::build(GroupType::new(f, n).unwrap())
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.iter().copied())
    }

    #[test]
    fn dot_reflection() {
        let a2 = rs(Family::A, 2);
        assert_eq!(dot_reflect(&a2, &w(&[2, 1])), (1, Some(w(&[2, 1]))));
        assert_eq!(dot_reflect(&a2, &w(&[-1, 3])).0, 0);
        // s_1 . lambda = s_1(lambda + rho) - rho
        let lam = w(&[2, 1]);
        let mut x = &lam + a2.rho();
        a2.reflect_simple(&mut x, 0);
        let dotted = &x - a2.rho();
        assert_eq!(dot_reflect(&a2, &dotted), (-1, Some(lam)));
    }

    #[test]
    fn small_sums() {
        let a2 = rs(Family::A, 2);
        let j = jsf_sum(&a2, &w(&[1, 1]), 3).unwrap();
        assert_eq!(j.terms.terms.into_iter().collect::<Vec<_>>(), vec![(w(&[0, 0]), 1)]);
        assert!(is_weyl_irreducible(&a2, &w(&[1, 1]), 5).unwrap());
        let b2 = rs(Family::B, 2);
        for c in 0..7 {
            assert!(is_weyl_irreducible(&b2, &w(&[0, c]), 7).unwrap());
        }
        assert!(!is_weyl_irreducible(&b2, &w(&[1, 5]), 7).unwrap());
        assert!(jsf_sum(&b2, &w(&[1, 1]), 6).is_err());
    }

    #[test]
    fn b2_first_alcove_term() {
        let b2 = rs(Family::B, 2);
        let p = 11;
        for a in 0..p as i64 {
            for b in 0..p as i64 {
                if a + b + 2 < p as i64 && (p as i64) < 2 * a + b + 3 {
                    let j = jsf_sum(&b2, &w(&[a, b]), p).unwrap();
                    let v: Vec<_> = j.terms.terms.into_iter().collect();
                    assert_eq!(v, vec![(w(&[p as i64 - a - b - 3, b]), 1)], "({a},{b})");
                }
            }
        }
    }

    #[test]
    fn two_factor_characters() {
        let a2 = rs(Family::A, 2);
        let l = irr_character(&a2, &w(&[1, 1]), 3).unwrap();
        assert_eq!(l.dim(&a2), BigUint::from(7u32));
        assert_eq!(l.mult(&a2, &w(&[0, 0])), 1);
        let b2 = rs(Family::B, 2);
        let l = irr_character(&b2, &w(&[2, 0]), 5).unwrap();
        assert_eq!(l.dim(&b2), BigUint::from(13u32));
        let s = simple_solve(&b2, &w(&[2, 0]), 5).unwrap();
        assert_eq!(s.factors.len(), 2);
        assert_eq!(s.factors[&w(&[0, 0])], 1);
    }

    #[test]
    fn a2_wall() {
        let a2 = rs(Family::A, 2);
        for p in [5u64, 7] {
            for a in 1..p as i64 - 1 {
                let b = p as i64 - 1 - a;
                let s = simple_solve(&a2, &w(&[a, b]), p).unwrap();
                let mut expect = BTreeMap::new();
                expect.insert(w(&[a, b]), 1);
                expect.insert(w(&[a - 1, b - 1]), 1);
                assert_eq!(s.factors, expect);
            }
        }
    }

    #[test]
    fn dimensions_add_up() {
        for (f, n, p) in [(Family::A, 2, 5), (Family::B, 2, 7), (Family::G, 2, 7)] {
            let r = rs(f, n);
            let mut solver = Solver::new(&r, p).unwrap();
            for a in 0..p as i64 {
                for b in 0..p as i64 {
                    let lam = w(&[a, b]);
                    let Some(fs) = solver.factors(&lam).unwrap() else { continue };
                    let mut total = BigUint::from(0u32);
                    for (nu, &m) in &fs {
                        total += solver.irr_character(nu).unwrap().dim(&r) * BigUint::from(m);
                    }
                    assert_eq!(total, weyl_dim(&r, &lam).unwrap(), "{f}{n} {lam} p={p}");
                }
            }
        }
    }
}
