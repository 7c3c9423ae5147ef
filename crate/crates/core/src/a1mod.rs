//! Modular representation theory of `SL2`: irreducible characters through
//! Steinberg's tensor product theorem, their gaps, dimension bounds and
//! decomposition of characters into irreducibles.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A character of `SL2`, as multiplicities on integer weights.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct A1Char {
    pub mults: BTreeMap<i64, u64>,
}

impl A1Char {
    pub fn new() -> Self {
        A1Char::default()
    }

    pub fn add(&mut self, w: i64, m: u64) {
        if m > 0 {
            *self.mults.entry(w).or_insert(0) += m;
        }
    }

    pub fn mult(&self, w: i64) -> u64 {
        self.mults.get(&w).copied().unwrap_or(0)
    }

    pub fn max_weight(&self) -> Option<i64> {
        self.mults.keys().next_back().copied()
    }

    pub fn dim(&self) -> u64 {
        self.mults.values().sum()
    }

    /// Symmetric under `w -> -w` and supported on a single parity class.
    pub fn validate(&self) -> Result<()> {
        let parity = self.mults.keys().next().map(|w| w.rem_euclid(2));
        for (&w, &m) in &self.mults {
            if Some(w.rem_euclid(2)) != parity || self.mult(-w) != m {
                return Err(Error::MalformedA1Character(w));
            }
        }
        Ok(())
    }

    /// Product of characters.
    pub fn tensor(&self, other: &A1Char) -> A1Char {
        let mut out = A1Char::new();
        for (&w, &m) in &self.mults {
            for (&v, &n) in &other.mults {
                out.add(w + v, m * n);
            }
        }
        out
    }

    /// Frobenius twist by `q`: every weight is multiplied by `q`.
    pub fn frobenius(&self, q: u64) -> A1Char {
        let mut out = A1Char::new();
        for (&w, &m) in &self.mults {
            out.add(w * q as i64, m);
        }
        out
    }

    /// Character of the Weyl module of highest weight `t`, the full string.
    pub fn weyl(t: u64) -> A1Char {
        let mut c = A1Char::new();
        let t = t as i64;
        let mut w = -t;
        while w <= t {
            c.add(w, 1);
            w += 2;
        }
        c
    }
}

/// Little-endian base-`p` digits of `t`; `[0]` for `t = 0`.
pub fn p_digits(mut t: u64, p: u64) -> Vec<u64> {
    if t == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    while t > 0 {
        out.push(t % p);
        t /= p;
    }
    out
}

/// `dim L(t) = prod (a_i + 1)` over the base-`p` digits of `t`.
pub fn dim_irr(t: u64, p: u64) -> u64 {
    p_digits(t, p).iter().map(|a| a + 1).product()
}

/// Weights of `L(t)`, each of multiplicity one, in increasing order.
pub fn irr_weights(t: u64, p: u64) -> Vec<i64> {
    let mut ws = vec![0i64];
    let mut scale = 1i64;
    for a in p_digits(t, p) {
        let a = a as i64;
        let mut next = Vec::with_capacity(ws.len() * (a as usize + 1));
        for &w in &ws {
            let mut e = -a;
            while e <= a {
                next.push(w + e * scale);
                e += 2;
            }
        }
        ws = next;
        scale *= p as i64;
    }
    ws.sort_unstable();
    ws
}

pub fn irr_char(t: u64, p: u64) -> A1Char {
    let mut c = A1Char::new();
    for w in irr_weights(t, p) {
        c.add(w, 1);
    }
    c
}

/// Whether `w` is a weight of `L(t)`, by matching base-`p` digits from the
/// bottom. At each digit at most two choices of `a_k - 2 i_k` are compatible
/// with the residue of the remaining value.
pub fn is_weight(t: u64, p: u64, w: i64) -> bool {
    fn search(digits: &[u64], p: i64, w: i64) -> bool {
        let Some((&a, rest)) = digits.split_first() else {
            return w == 0;
        };
        let a = a as i64;
        let base = w.rem_euclid(p);
        for e in [base, base - p] {
            if e.abs() <= a && (a - e) % 2 == 0 && search(rest, p, (w - e) / p) {
                return true;
            }
        }
        false
    }
    (w.unsigned_abs()) <= t && search(&p_digits(t, p), p as i64, w)
}

/// Open intervals `(delta, gamma)` of missing weights inside `L(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gaps {
    pub t: u64,
    pub p: u64,
    pub intervals: Vec<(i64, i64)>,
}

impl Gaps {
    /// Whether `w` lies strictly inside one of the intervals.
    pub fn contains(&self, w: i64) -> bool {
        let idx = self.intervals.partition_point(|&(d, _)| d < w);
        idx > 0 && w < self.intervals[idx - 1].1
    }

    /// Weight test: right parity, within `[-t, t]`, and in no gap.
    pub fn is_weight(&self, w: i64) -> bool {
        let t = self.t as i64;
        w.abs() <= t && (t - w) % 2 == 0 && !self.contains(w)
    }
}

/// Gap intervals of `L(t)` from its digits `[a_0, ..., a_m]`.
///
/// For each `j` and each choice of digits above `j + 1` there is an interval
/// between the weight with lower digits `a_0..a_j` and digit `j+1` equal to
/// `a_{j+1} - 2i - 2`, and the weight with lower digits `-a_0..-a_j` and digit
/// `j+1` equal to `a_{j+1} - 2i`.
pub fn gaps(t: u64, p: u64) -> Gaps {
    let digits: Vec<i64> = p_digits(t, p).into_iter().map(|a| a as i64).collect();
    let pi = p as i64;
    let pows: Vec<i64> = (0..digits.len()).map(|k| pi.pow(k as u32)).collect();
    let mut intervals = Vec::new();
    for j in 0..digits.len().saturating_sub(1) {
        let low: i64 = (0..=j).map(|k| digits[k] * pows[k]).sum();
        let a = digits[j + 1];
        // every value of the digits above j+1
        let mut uppers = vec![0i64];
        for k in j + 2..digits.len() {
            let mut next = Vec::new();
            for &u in &uppers {
                let mut e = -digits[k];
                while e <= digits[k] {
                    next.push(u + e * pows[k]);
                    e += 2;
                }
            }
            uppers = next;
        }
        for i in 0..a {
            for &u in &uppers {
                let delta = low + (a - 2 * i - 2) * pows[j + 1] + u;
                let gamma = -low + (a - 2 * i) * pows[j + 1] + u;
                if gamma - delta >= 4 {
                    intervals.push((delta, gamma));
                }
            }
        }
    }
    intervals.sort_unstable();
    Gaps { t, p, intervals }
}

/// Whether the indecomposable tilting module `T(r)` is reducible.
pub fn tilting_reducible(r: u64, p: u64) -> bool {
    r >= p && !(r + 1).is_multiple_of(p)
}

/// `sum dim L(r - 2k)` over `r - 2k >= 0`.
pub fn bound_b(r: u64, p: u64) -> u64 {
    (0..=r / 2).map(|k| dim_irr(r - 2 * k, p)).sum()
}

/// `sum (r - 2k + 1)` over `r - 2k >= 0`.
pub fn bound_bk(r: u64) -> u64 {
    if r.is_multiple_of(2) {
        (r / 2 + 1) * (r / 2 + 1)
    } else {
        r.div_ceil(2) * ((r + 3) / 2)
    }
}

fn peel(ch: &A1Char, mut factor: impl FnMut(u64) -> Vec<i64>) -> Result<Vec<u64>> {
    ch.validate()?;
    let mut rest: BTreeMap<i64, i64> = BTreeMap::new();
    for (&w, &m) in &ch.mults {
        let m = i64::try_from(m).map_err(|_| Error::Overflow("a1 character"))?;
        rest.insert(w, m);
    }
    let mut out = Vec::new();
    while let Some((&top, &m)) = rest.iter().next_back() {
        if m == 0 {
            rest.remove(&top);
            continue;
        }
        if m < 0 || top < 0 {
            return Err(Error::NegativeRemainder {
                weight: top,
                factor: out.last().map(|&t: &u64| t as i64).unwrap_or(top),
            });
        }
        for w in factor(top as u64) {
            let e = rest.entry(w).or_insert(0);
            *e -= m;
            if *e < 0 {
                return Err(Error::NegativeRemainder {
                    weight: w,
                    factor: top,
                });
            }
            if *e == 0 {
                rest.remove(&w);
            }
        }
        out.extend(std::iter::repeat_n(top as u64, m as usize));
    }
    Ok(out)
}

/// Composition factors of `ch` as a multiset of highest weights, descending.
pub fn decompose(ch: &A1Char, p: u64) -> Result<Vec<u64>> {
    peel(ch, |t| irr_weights(t, p))
}

/// Decomposition into characteristic-zero Weyl characters, descending.
pub fn char0_decompose(ch: &A1Char) -> Result<Vec<u64>> {
    peel(ch, |t| {
        let t = t as i64;
        (0..=t).map(|k| t - 2 * k).collect()
    })
}

/// Whether a descending multiset has no repeated entry.
pub fn is_multiplicity_free(factors: &[u64]) -> bool {
    factors.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_pairs(pairs: &[(i64, u64)]) -> A1Char {
        let mut c = A1Char::new();
        for &(w, m) in pairs {
            c.add(w, m);
            if w != 0 {
                c.add(-w, m);
            }
        }
        c
    }

    #[test]
    fn digits_and_dims() {
        assert_eq!(p_digits(4, 3), vec![1, 1]);
        assert_eq!(p_digits(8, 5), vec![3, 1]);
        assert_eq!(p_digits(3, 5), vec![3]);
        assert_eq!(p_digits(0, 5), vec![0]);
        assert_eq!(dim_irr(4, 3), 4);
        assert_eq!(dim_irr(8, 5), 8);
        assert_eq!(dim_irr(3, 5), 4);
    }

    #[test]
    fn irreducible_characters() {
        assert_eq!(irr_weights(4, 3), vec![-4, -2, 2, 4]);
        assert_eq!(irr_weights(8, 5), vec![-8, -6, -4, -2, 2, 4, 6, 8]);
        assert_eq!(irr_weights(3, 5), vec![-3, -1, 1, 3]);
    }

    #[test]
    fn gap_examples() {
        let g = gaps(4, 3);
        assert!(g.contains(0));
        assert!(!g.is_weight(0));
        assert!(g.is_weight(2));
        assert!(gaps(4, 5).intervals.is_empty());
        assert_eq!(gaps(5, 5).intervals, vec![(-5, 5)]);
    }

    #[test]
    fn tilting() {
        assert!(!tilting_reducible(9, 5));
        assert!(tilting_reducible(6, 5));
        assert!(!tilting_reducible(4, 5));
    }

    #[test]
    fn bounds() {
        assert_eq!(bound_bk(9), 30);
        assert_eq!(bound_bk(8), 25);
        assert_eq!(bound_b(9, 5), 24);
        for r in 0..7 {
            assert_eq!(bound_b(r, 7), bound_bk(r));
        }
    }

    #[test]
    fn decompositions() {
        let c = from_pairs(&[(4, 1), (2, 2), (0, 1)]);
        assert_eq!(decompose(&c, 3).unwrap(), vec![4, 2]);
        let c = from_pairs(&[(8, 1), (6, 1), (4, 2), (2, 2), (0, 1)]);
        assert_eq!(decompose(&c, 5).unwrap(), vec![8, 4]);
        assert_eq!(decompose(&irr_char(17, 3), 3).unwrap(), vec![17]);

        let adj = from_pairs(&[(4, 1), (2, 2), (0, 2)]);
        assert_eq!(char0_decompose(&adj).unwrap(), vec![4, 2]);
        assert_eq!(decompose(&adj, 3).unwrap(), vec![4, 2, 0]);
        let b2 = from_pairs(&[(8, 1), (6, 1), (4, 2), (2, 2), (0, 2)]);
        assert_eq!(char0_decompose(&b2).unwrap(), vec![8, 4]);
        assert_eq!(char0_decompose(&A1Char::weyl(7)).unwrap(), vec![7]);
    }

    #[test]
    fn negative_remainder_is_an_error() {
        // L(4) at p = 5 is the full string, so {4, -4} alone leaves -1 at 2.
        let bad = from_pairs(&[(4, 1)]);
        assert!(matches!(decompose(&bad, 5), Err(Error::NegativeRemainder { .. })));
        let mut asym = A1Char::new();
        asym.add(2, 1);
        assert!(matches!(decompose(&asym, 5), Err(Error::MalformedA1Character(_))));
    }

    #[test]
    fn digit_membership_agrees_with_enumeration() {
        for p in [2u64, 3, 5, 7] {
            for t in 0..200u64 {
                let ws = irr_weights(t, p);
                for w in -(t as i64) - 2..=(t as i64) + 2 {
                    assert_eq!(is_weight(t, p, w), ws.binary_search(&w).is_ok(), "t={t} p={p} w={w}");
                }
            }
        }
    }

    #[test]
    fn gaps_partition_the_string() {
        for p in [2u64, 3, 5] {
            for t in 0..p * p * p {
                let g = gaps(t, p);
                let ws = irr_weights(t, p);
                let ti = t as i64;
                let mut w = -ti;
                while w <= ti {
                    assert_eq!(g.is_weight(w), ws.binary_search(&w).is_ok(), "t={t} p={p} w={w}");
                    w += 2;
                }
            }
        }
    }
}
