//! Root data for the simple types with Bourbaki labeling.
//!
//! Weights are integer vectors in the basis of fundamental weights. Roots are
//! stored in the basis of simple roots, coroots in the basis of simple
//! coroots. `cartan[i][j]` is `<alpha_i, alpha_j^vee>`, so row `i` of the
//! Cartan matrix is the simple root `alpha_i` written in fundamental weights.
//!
//! The Weyl group is never enumerated. Orbits are generated by reflection
//! closure from the dominant representative and orbit sizes come from the
//! order of the parabolic stabilizer.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Coords = SmallVec<[i64; 8]>;
pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::Parse(format!("unknown group family {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupType {
    family: Family,
    rank: usize,
}

impl GroupType {
    /// Rank bounds: A1+, B2+, C3+, D4+, E6-8, F4, G2.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(GroupType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// An integral weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Coords);

impl Weight {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        Weight(coords.into_iter().collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(SmallVec::from_elem(0, rank))
    }

    /// `k * omega_i` in rank `rank`.
    pub fn fundamental(rank: usize, i: usize, k: i64) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i] = k;
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_restricted(&self, p: u64) -> bool {
        self.0.iter().all(|&c| c >= 0 && (c as u64) < p)
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&c| c * k).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        self.scale(k)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `1,0,2` with optional surrounding parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        body.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad coordinate {t:?}: {e}")))
            })
            .collect::<Result<Coords>>()
            .map(Weight)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    group_type: GroupType,
    cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_j)`, long roots of squared length 2.
    form: Vec<Vec<Rational>>,
    positive_roots: Vec<Coords>,
    coroots: Vec<Coords>,
    root_index: HashMap<Coords, usize>,
    cartan_inv: Vec<Vec<Rational>>,
    /// `gram[i][j] / gram_den = (omega_i, omega_j)`.
    gram: Vec<Vec<i64>>,
    gram_den: i64,
    /// `(alpha, alpha) * gram_den` for every positive root.
    scaled_root_norms: Vec<i64>,
    ta_coeffs: Coords,
    coxeter_number: u64,
    rho: Weight,
}

impl RootSystem {
    pub fn build(t: GroupType) -> RootSystem {
        let (lengths, edges) = dynkin(t);
        let n = t.rank();
        let mut form = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            form[i][i] = lengths[i];
        }
        for &(i, j) in &edges {
            let m = if lengths[i] > lengths[j] { lengths[i] } else { lengths[j] };
            form[i][j] = -m / 2;
            form[j][i] = -m / 2;
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = form[i][j] * 2 / form[j][j];
                        assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();

        let positive_roots = positive_roots_by_closure(&cartan);
        let root_index: HashMap<Coords, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();

        let norm = |a: &Coords| -> Rational {
            let mut s = Rational::zero();
            for i in 0..n {
                for j in 0..n {
                    s += form[i][j] * a[i] * a[j];
                }
            }
            s
        };
        let root_norms: Vec<Rational> = positive_roots.iter().map(norm).collect();
        let coroots: Vec<Coords> = positive_roots
            .iter()
            .zip(&root_norms)
            .map(|(a, &nn)| {
                (0..n)
                    .map(|i| {
                        let c = lengths[i] * a[i] / nn;
                        assert!(c.is_integer());
                        c.to_integer()
                    })
                    .collect()
            })
            .collect();

        let cartan_inv = invert(&cartan);

        let gram_q: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| cartan_inv[i][j] * lengths[j] / 2).collect())
            .collect();
        let mut gram_den = 1i64;
        for row in &gram_q {
            for v in row {
                gram_den = gram_den.lcm(v.denom());
            }
        }
        for v in &root_norms {
            gram_den = gram_den.lcm(v.denom());
        }
        let gram: Vec<Vec<i64>> = gram_q
            .iter()
            .map(|row| row.iter().map(|v| (v * gram_den).to_integer()).collect())
            .collect();
        let scaled_root_norms = root_norms
            .iter()
            .map(|v| (v * gram_den).to_integer())
            .collect();

        let ta_coeffs: Coords = (0..n)
            .map(|i| {
                let s: Rational = cartan_inv[i].iter().sum::<Rational>() * 2;
                assert!(s.is_integer());
                s.to_integer()
            })
            .collect();

        let coxeter_number = (2 * positive_roots.len() / n) as u64;
        let rho = Weight(SmallVec::from_elem(1, n));

        RootSystem {
            group_type: t,
            cartan,
            form,
            positive_roots,
            coroots,
            root_index,
            cartan_inv,
            gram,
            gram_den,
            scaled_root_norms,
            ta_coeffs,
            coxeter_number,
            rho,
        }
    }

    pub fn group_type(&self) -> GroupType {
        self.group_type
    }

    pub fn rank(&self) -> usize {
        self.group_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn form(&self) -> &[Vec<Rational>] {
        &self.form
    }

    pub fn positive_roots(&self) -> &[Coords] {
        &self.positive_roots
    }

    pub fn coroots(&self) -> &[Coords] {
        &self.coroots
    }

    pub fn coxeter_number(&self) -> u64 {
        self.coxeter_number
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Index of a positive root given in simple-root coordinates.
    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    /// The highest root: the last one in height order.
    pub fn highest_root(&self) -> &Coords {
        self.positive_roots.last().expect("nonempty root system")
    }

    /// Coefficients `c_i` with `omega_i` restricting to `c_i` on the principal torus.
    pub fn ta_coeffs(&self) -> &[i64] {
        &self.ta_coeffs
    }

    pub fn check_weight(&self, mu: &Weight) -> Result<()> {
        if mu.rank() != self.rank() {
            return Err(Error::RankMismatch {
                weight: mu.clone(),
                got: mu.rank(),
                expected: self.rank(),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, mu: &Weight) -> Result<()> {
        self.check_weight(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.clone()));
        }
        Ok(())
    }

    /// `<mu, alpha^vee>` for the positive root with index `alpha`.
    pub fn pairing(&self, mu: &Weight, alpha: usize) -> i64 {
        self.coroots[alpha]
            .iter()
            .zip(mu.coords())
            .map(|(c, m)| c * m)
            .sum()
    }

    /// A root (simple-root coordinates) written in the fundamental-weight basis.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|j| (0..n).map(|i| root[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan[i].iter().copied().collect())
    }

    /// The unique rational `a` with `mu = sum a_i alpha_i`.
    pub fn weight_to_root_coords(&self, mu: &Weight) -> Vec<Rational> {
        let n = self.rank();
        (0..n)
            .map(|k| {
                (0..n)
                    .map(|i| self.cartan_inv[i][k] * mu.0[i])
                    .sum::<Rational>()
            })
            .collect()
    }

    pub fn in_root_lattice(&self, mu: &Weight) -> bool {
        self.weight_to_root_coords(mu).iter().all(|a| a.is_integer())
    }

    /// `(mu, nu)` in the normalization with long roots of squared length 2.
    pub fn inner(&self, mu: &Weight, nu: &Weight) -> Rational {
        Rational::new(self.inner_scaled(mu, nu), self.gram_den)
    }

    /// `(mu, nu) * gram_den`, an integer.
    pub fn inner_scaled(&self, mu: &Weight, nu: &Weight) -> i64 {
        let n = self.rank();
        let mut s = 0i64;
        for i in 0..n {
            if mu.0[i] == 0 {
                continue;
            }
            let mut row = 0i64;
            for j in 0..n {
                row += self.gram[i][j] * nu.0[j];
            }
            s += mu.0[i] * row;
        }
        s
    }

    pub fn gram_den(&self) -> i64 {
        self.gram_den
    }

    /// `(alpha, alpha) * gram_den` for the positive root with index `alpha`.
    pub fn scaled_root_norm(&self, alpha: usize) -> i64 {
        self.scaled_root_norms[alpha]
    }

    pub fn reflect_simple(&self, mu: &mut Weight, i: usize) {
        let c = mu.0[i];
        if c != 0 {
            for (m, a) in mu.0.iter_mut().zip(&self.cartan[i]) {
                *m -= c * a;
            }
        }
    }

    /// Dominant weight in the orbit of `mu` with the parity of the reducing word.
    ///
    /// The word is the minimal one sending `mu` into the dominant chamber, so
    /// its parity is canonical even when `mu` lies on a wall.
    pub fn dominant_rep(&self, mu: &Weight) -> (Weight, Parity) {
        let mut w = mu.clone();
        let mut parity = Parity::Even;
        while let Some(i) = w.0.iter().position(|&c| c < 0) {
            self.reflect_simple(&mut w, i);
            parity = parity.flip();
        }
        (w, parity)
    }

    /// Dominant representative only, without tracking parity.
    pub fn dominant(&self, mu: &Weight) -> Weight {
        self.dominant_rep(mu).0
    }

    /// Calls `f` once for every element of the orbit of the dominant weight `mu`.
    ///
    /// Elements are produced layer by layer. Layer `k` holds the elements whose
    /// minimal reducing word has length `k`, and is obtained from layer `k-1`
    /// by the simple reflections that lower the weight.
    pub fn for_each_in_orbit(&self, mu: &Weight, f: impl FnMut(&Weight)) {
        self.for_each_in_orbit_while(mu, |_| true, f);
    }

    /// As [`Self::for_each_in_orbit`], skipping every element for which `keep`
    /// is false together with everything reached through it. Since each step
    /// lowers the weight, a `keep` that is monotone along the dominance order
    /// prunes exactly the elements it rejects.
    pub fn for_each_in_orbit_while(
        &self,
        mu: &Weight,
        keep: impl Fn(&Weight) -> bool,
        mut f: impl FnMut(&Weight),
    ) {
        debug_assert!(mu.is_dominant());
        if !keep(mu) {
            return;
        }
        let mut layer: Vec<Weight> = vec![mu.clone()];
        while !layer.is_empty() {
            let mut next: HashSet<Weight> = HashSet::new();
            for w in &layer {
                f(w);
                for i in 0..self.rank() {
                    if w.0[i] > 0 {
                        let mut v = w.clone();
                        self.reflect_simple(&mut v, i);
                        if keep(&v) {
                            next.insert(v);
                        }
                    }
                }
            }
            layer = next.into_iter().collect();
        }
    }

    /// Value of `mu` on the principal torus: `<mu, 2 rho^vee>`.
    pub fn principal_value(&self, mu: &Weight) -> i64 {
        self.ta_coeffs.iter().zip(mu.coords()).map(|(c, m)| c * m).sum()
    }

    pub fn orbit(&self, mu: &Weight) -> Vec<Weight> {
        let (dom, _) = self.dominant_rep(mu);
        let mut out = Vec::new();
        self.for_each_in_orbit(&dom, |w| out.push(w.clone()));
        out
    }

    pub fn weyl_group_order(&self) -> BigUint {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.parabolic_order(&all)
    }

    /// `|W| / |W_mu|`, where `W_mu` is generated by the simple reflections fixing `mu`.
    pub fn orbit_size(&self, mu: &Weight) -> BigUint {
        let (dom, _) = self.dominant_rep(mu);
        let fixed: Vec<usize> = (0..self.rank()).filter(|&i| dom.0[i] == 0).collect();
        self.weyl_group_order() / self.parabolic_order(&fixed)
    }

    /// Order of the parabolic subgroup generated by the simple reflections in `nodes`.
    pub fn parabolic_order(&self, nodes: &[usize]) -> BigUint {
        let mut order = BigUint::one();
        let mut seen = vec![false; self.rank()];
        let in_set: HashSet<usize> = nodes.iter().copied().collect();
        for &start in nodes {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for (j, &c) in self.cartan[i].iter().enumerate() {
                    if c != 0 && !seen[j] && in_set.contains(&j) {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            let comp_set: HashSet<usize> = comp.iter().copied().collect();
            let mut count = 0usize;
            let mut norms: HashSet<Rational> = HashSet::new();
            for (idx, root) in self.positive_roots.iter().enumerate() {
                let inside = root
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || comp_set.contains(&i));
                if inside {
                    count += 1;
                    norms.insert(Rational::new(self.scaled_root_norms[idx], 1));
                }
            }
            order *= connected_weyl_order(comp.len(), count, norms.len() == 1);
        }
        order
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    pub fn degree(&self, i: usize) -> usize {
        (0..self.rank()).filter(|&j| self.adjacent(i, j)).count()
    }

    pub fn is_end_node(&self, i: usize) -> bool {
        self.degree(i) <= 1
    }

    /// `(alpha_i, alpha_i) / (alpha_j, alpha_j)`.
    pub fn length_ratio(&self, i: usize, j: usize) -> Rational {
        self.form[i][i] / self.form[j][j]
    }
}

fn dynkin(t: GroupType) -> (Vec<Rational>, Vec<(usize, usize)>) {
    let n = t.rank();
    let two = Rational::from_integer(2);
    let one = Rational::one();
    let chain = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t.family() {
        Family::A => (vec![two; n], chain(n)),
        Family::B => {
            let mut l = vec![two; n];
            l[n - 1] = one;
            (l, chain(n))
        }
        Family::C => {
            let mut l = vec![one; n];
            l[n - 1] = two;
            (l, chain(n))
        }
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (vec![two; n], e)
        }
        Family::E => {
            // 1-3-4-5-6-7-8 with 2 attached to 4 (zero-based below).
            let mut e = vec![(0, 2), (1, 3), (2, 3)];
            for i in 3..n - 1 {
                e.push((i, i + 1));
            }
            (vec![two; n], e)
        }
        Family::F => (vec![two, two, one, one], chain(4)),
        Family::G => (vec![Rational::new(2, 3), two], chain(2)),
    }
}

fn positive_roots_by_closure(cartan: &[Vec<i64>]) -> Vec<Coords> {
    let n = cartan.len();
    let mut roots: Vec<Coords> = Vec::new();
    let mut known: HashSet<Coords> = HashSet::new();
    let mut layer: Vec<Coords> = (0..n)
        .map(|i| {
            let mut e: Coords = SmallVec::from_elem(0, n);
            e[i] = 1;
            e
        })
        .collect();
    while !layer.is_empty() {
        layer.sort();
        for r in &layer {
            known.insert(r.clone());
        }
        let mut next: HashSet<Coords> = HashSet::new();
        for beta in &layer {
            for i in 0..n {
                let simple = beta.iter().enumerate().all(|(j, &c)| c == (j == i) as i64);
                if simple {
                    continue;
                }
                let mut q = 0i64;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if q - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        roots.append(&mut layer);
        layer = next.into_iter().collect();
    }
    roots
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|&v| Rational::from_integer(v)).collect())
        .collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let pv = a[col][col];
        for j in 0..n {
            a[col][j] /= pv;
            inv[col][j] /= pv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    inv
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Weyl group order of a connected Dynkin diagram from its rank, number of
/// positive roots and whether it is simply laced.
fn connected_weyl_order(rank: usize, n_pos: usize, simply_laced: bool) -> BigUint {
    let n = rank;
    if simply_laced {
        if n_pos == n * (n + 1) / 2 {
            return factorial(n + 1);
        }
        if n >= 4 && n_pos == n * (n - 1) {
            return (BigUint::one() << (n - 1)) * factorial(n);
        }
        match (n, n_pos) {
            (6, 36) => return BigUint::from(51_840u32),
            (7, 63) => return BigUint::from(2_903_040u32),
            (8, 120) => return BigUint::from(696_729_600u32),
            _ => {}
        }
    } else {
        match (n, n_pos) {
            (2, 6) => return BigUint::from(12u32),
            (4, 24) => return BigUint::from(1_152u32),
            _ if n_pos == n * n => return (BigUint::one() << n) * factorial(n),
            _ => {}
        }
    }
    panic!("unrecognised Dynkin component: rank {rank}, {n_pos} positive roots");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::build(GroupType::new(f, n).unwrap())
    }

    #[test]
    fn rank_bounds() {
        assert!(GroupType::new(Family::C, 2).is_err());
        assert!(GroupType::new(Family::D, 3).is_err());
        assert!(GroupType::new(Family::E, 9).is_err());
        assert!(GroupType::new(Family::G, 3).is_err());
        assert!(GroupType::new(Family::A, 1).is_ok());
    }

    #[test]
    fn small_rank_counts() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.positive_roots().len(), 3);
        assert_eq!(a2.coxeter_number(), 3);
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.coxeter_number(), 6);
        let b2 = rs(Family::B, 2);
        assert_eq!(b2.positive_roots().len(), 4);
        assert_eq!(b2.coxeter_number(), 4);
    }

    #[test]
    fn root_counts_all_types() {
        let cases = [
            (Family::A, 5, 15, 6),
            (Family::B, 4, 16, 8),
            (Family::C, 5, 25, 10),
            (Family::D, 6, 30, 10),
            (Family::E, 6, 36, 12),
            (Family::E, 7, 63, 18),
            (Family::E, 8, 120, 30),
            (Family::F, 4, 24, 12),
        ];
        for (f, n, count, h) in cases {
            let r = rs(f, n);
            assert_eq!(r.positive_roots().len(), count, "{f}{n}");
            assert_eq!(r.coxeter_number(), h, "{f}{n}");
        }
    }

    #[test]
    fn bourbaki_highest_roots() {
        assert_eq!(rs(Family::G, 2).highest_root().as_slice(), &[3, 2]);
        assert_eq!(rs(Family::F, 4).highest_root().as_slice(), &[2, 3, 4, 2]);
        assert_eq!(
            rs(Family::E, 8).highest_root().as_slice(),
            &[2, 3, 4, 6, 5, 4, 3, 2]
        );
        assert_eq!(rs(Family::B, 3).highest_root().as_slice(), &[1, 2, 2]);
        assert_eq!(rs(Family::C, 3).highest_root().as_slice(), &[2, 2, 1]);
        assert_eq!(rs(Family::D, 5).highest_root().as_slice(), &[1, 2, 2, 1, 1]);
    }

    #[test]
    fn cartan_shape() {
        for (f, n) in [(Family::B, 3), (Family::C, 4), (Family::F, 4), (Family::G, 2)] {
            let r = rs(f, n);
            for i in 0..n {
                assert_eq!(r.cartan()[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!(r.cartan()[i][j] <= 0);
                    }
                }
            }
        }
        // B2: alpha_1 long.
        assert_eq!(rs(Family::B, 2).cartan()[0], vec![2, -2]);
        // G2: alpha_1 short.
        assert_eq!(rs(Family::G, 2).cartan()[0], vec![2, -1]);
        assert_eq!(rs(Family::G, 2).cartan()[1], vec![-3, 2]);
    }

    #[test]
    fn pairings() {
        let a2 = rs(Family::A, 2);
        let w1 = Weight::new([1, 0]);
        let a1 = a2.root_index(&[1, 0]).unwrap();
        let a12 = a2.root_index(&[1, 1]).unwrap();
        assert_eq!(a2.pairing(&w1, a1), 1);
        assert_eq!(a2.pairing(&w1, a12), 1);
        assert_eq!(a2.pairing(&Weight::zero(2), a12), 0);
    }

    #[test]
    fn root_coordinates() {
        let a2 = rs(Family::A, 2);
        assert_eq!(
            a2.weight_to_root_coords(&Weight::new([1, 0])),
            vec![Rational::new(2, 3), Rational::new(1, 3)]
        );
        let b2 = rs(Family::B, 2);
        assert_eq!(
            b2.weight_to_root_coords(&Weight::new([0, 1])),
            vec![Rational::new(1, 2), Rational::from_integer(1)]
        );
        assert!(!b2.in_root_lattice(&Weight::new([0, 1])));
        // B2: omega_1 = alpha_1 + alpha_2
        assert_eq!(
            b2.weight_to_root_coords(&Weight::new([1, 0])),
            vec![Rational::from_integer(1), Rational::from_integer(1)]
        );
        let alpha1 = b2.simple_root(0);
        assert_eq!(
            b2.weight_to_root_coords(&alpha1),
            vec![Rational::from_integer(1), Rational::from_integer(0)]
        );
    }

    #[test]
    fn dominant_representatives() {
        let a2 = rs(Family::A, 2);
        let w1 = Weight::new([1, 0]);
        assert_eq!(a2.dominant_rep(&w1), (w1.clone(), Parity::Even));
        let s1w1 = &w1 - &a2.simple_root(0);
        assert_eq!(a2.dominant_rep(&s1w1), (w1, Parity::Odd));

        // -1 is the longest element of W(B2), of length 4. For a regular
        // weight the reducing word is w0 itself.
        let b2 = rs(Family::B, 2);
        let reg = Weight::new([1, 1]);
        assert_eq!(b2.dominant_rep(&reg.scale(-1)), (reg, Parity::Even));
        // 2*omega_1 is fixed by s_2, so the reduction stops at the minimal
        // coset representative w0*s_2 of length 3.
        let lam = Weight::new([2, 0]);
        assert_eq!(b2.dominant_rep(&lam.scale(-1)), (lam, Parity::Odd));
    }

    #[test]
    fn orbits() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.orbit(&Weight::new([1, 0])).len(), 3);
        let b2 = rs(Family::B, 2);
        assert_eq!(b2.orbit(&Weight::new([1, 0])).len(), 4);
        assert_eq!(b2.orbit(&Weight::zero(2)).len(), 1);
        let e6 = rs(Family::E, 6);
        assert_eq!(e6.orbit(&Weight::fundamental(6, 0, 1)).len(), 27);
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(rs(Family::E, 8).weyl_group_order(), BigUint::from(696_729_600u32));
        assert_eq!(rs(Family::F, 4).weyl_group_order(), BigUint::from(1152u32));
        assert_eq!(rs(Family::D, 4).weyl_group_order(), BigUint::from(192u32));
        assert_eq!(rs(Family::C, 3).weyl_group_order(), BigUint::from(48u32));
    }

    #[test]
    fn orbit_size_matches_enumeration_for_fundamentals() {
        for (f, n) in [
            (Family::A, 4),
            (Family::B, 4),
            (Family::C, 4),
            (Family::D, 4),
            (Family::F, 4),
            (Family::G, 2),
            (Family::B, 3),
        ] {
            let r = rs(f, n);
            for i in 0..n {
                let w = Weight::fundamental(n, i, 1);
                let enumerated = r.orbit(&w).len();
                assert_eq!(r.orbit_size(&w), BigUint::from(enumerated), "{f}{n} omega_{}", i + 1);
                // |orbit| * |stabilizer| = |W|
                let fixed: Vec<usize> = (0..n).filter(|&j| j != i).collect();
                assert_eq!(
                    BigUint::from(enumerated) * r.parabolic_order(&fixed),
                    r.weyl_group_order()
                );
            }
        }
    }

    #[test]
    fn fundamental_pairings_and_telescoping() {
        for (f, n) in [(Family::A, 4), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::G, 2), (Family::F, 4), (Family::E, 6)] {
            let r = rs(f, n);
            for i in 0..n {
                let w = Weight::fundamental(n, i, 1);
                for (k, root) in r.positive_roots().iter().enumerate() {
                    let pr = r.pairing(&w, k);
                    assert!(pr >= 0);
                    if root.iter().sum::<i64>() == 1 {
                        assert_eq!(pr, (root[i] == 1) as i64);
                    }
                }
                // sum over alpha in Phi+ \ {alpha_i} of <alpha_i, alpha^vee> = 0
                let ai = r.simple_root(i);
                let s: i64 = r
                    .positive_roots()
                    .iter()
                    .enumerate()
                    .filter(|(_, root)| !(root.iter().sum::<i64>() == 1 && root[i] == 1))
                    .map(|(k, _)| r.pairing(&ai, k))
                    .sum();
                assert_eq!(s, 0, "{f}{n} i={i}");
            }
        }
    }

    #[test]
    fn highest_root_dominates() {
        for (f, n) in [(Family::E, 7), (Family::C, 4), (Family::G, 2)] {
            let r = rs(f, n);
            let top = r.highest_root().clone();
            for root in r.positive_roots() {
                assert!(root.iter().zip(&top).all(|(a, b)| a <= b));
                assert!(root.iter().all(|&c| c >= 0));
            }
        }
    }

    #[test]
    fn weight_parsing() {
        let w: Weight = "(1, 0,2)".parse().unwrap();
        assert_eq!(w, Weight::new([1, 0, 2]));
        assert!("1,x".parse::<Weight>().is_err());
        assert_eq!(w.to_string(), "(1,0,2)");
    }
}
