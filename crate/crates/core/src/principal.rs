//! Restriction to a principal A1-subgroup: the torus value `r`, projection of
//! characters, the `n_d`/`m_d`/`s_d` recurrence, and certificates that a
//! restriction is not multiplicity free.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::a1mod::{self, A1Char, Gaps};
use crate::characteristic::Characteristic;
use crate::charalg::{freudenthal, Character};
use crate::error::{Error, Result};
use crate::jantzen::{jsf_sum, Solver};
use crate::rootsys::{Family, GroupType, RootSystem, Weight};

/// Highest weight of the restriction to the principal torus.
pub fn restrict_weight(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    rs.check_dominant(lambda)?;
    Ok(rs.principal_value(lambda) as u64)
}

/// Pushforward of the fully expanded character.
pub fn project(rs: &RootSystem, ch: &Character) -> A1Char {
    let half = project_above(rs, ch, 0);
    let mut out = half.clone();
    for (&w, &m) in &half.mults {
        if w > 0 {
            out.add(-w, m);
        }
    }
    out
}

/// The part of the pushforward at torus weights `>= min_value`.
pub fn project_above(rs: &RootSystem, ch: &Character, min_value: i64) -> A1Char {
    let mut out = A1Char::new();
    for (mu, &m) in &ch.mults {
        rs.for_each_in_orbit_while(
            mu,
            |v| rs.principal_value(v) >= min_value,
            |v| out.add(rs.principal_value(v), m),
        );
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exactness {
    Exact,
    LowerBound,
}

/// `n[d]` is the multiplicity of the torus weight `r - 2d`, for `d <= r/2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NSequence {
    pub r: u64,
    pub n: Vec<u64>,
    pub exactness: Exactness,
}

impl NSequence {
    pub fn from_a1(ch: &A1Char, r: u64, exactness: Exactness) -> NSequence {
        let n = (0..=r / 2).map(|d| ch.mult(r as i64 - 2 * d as i64)).collect();
        NSequence { r, n, exactness }
    }

    pub fn get(&self, d: usize) -> u64 {
        self.n.get(d).copied().unwrap_or(0)
    }
}

/// Where the character of the module under study comes from.
#[derive(Clone, Debug)]
pub enum CharacterSource<'a> {
    Weyl,
    Irreducible,
    Data(&'a Character),
}

/// Character of `L(lambda)` if it can be determined: from `data`, because the
/// Weyl module is irreducible, or through the sum-formula solver.
pub fn irreducible_character(
    rs: &RootSystem,
    lambda: &Weight,
    p: Characteristic,
    data: Option<&Character>,
) -> Result<Option<Character>> {
    rs.check_dominant(lambda)?;
    if let Some(ch) = data {
        check_data(rs, lambda, ch)?;
        return Ok(Some(ch.clone()));
    }
    let Characteristic::Prime(p) = p else {
        return freudenthal(rs, lambda).map(Some);
    };
    if jsf_sum(rs, lambda, p)?.terms.is_empty() {
        return freudenthal(rs, lambda).map(Some);
    }
    match Solver::new(rs, p)?.irr_character(lambda) {
        Ok(ch) => Ok(Some(ch)),
        Err(Error::Inconclusive(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn check_data(rs: &RootSystem, lambda: &Weight, ch: &Character) -> Result<()> {
    if ch.group != rs.group_type() {
        return Err(Error::Parse(format!(
            "character is for {}, expected {}",
            ch.group,
            rs.group_type()
        )));
    }
    if ch.mults.get(lambda) != Some(&1) {
        return Err(Error::Parse(format!(
            "character does not have highest weight {lambda} with multiplicity 1"
        )));
    }
    Ok(())
}

/// Per-weight bounds on `L(lambda)`: the Weyl character above, and below
/// `dim Delta_nu - J_nu` where `J` is the sum-formula character (it dominates
/// the radical), raised to 1 on the weights of `Delta(lambda)` when `lambda`
/// is restricted.
pub fn irreducible_lower_bound(rs: &RootSystem, lambda: &Weight, p: u64) -> Result<Character> {
    let weyl = freudenthal(rs, lambda)?;
    let jsf = jsf_sum(rs, lambda, p)?;
    let mut j: BTreeMap<Weight, i128> = BTreeMap::new();
    for (mu, &c) in &jsf.terms.terms {
        for (nu, &m) in &freudenthal(rs, mu)?.mults {
            *j.entry(nu.clone()).or_insert(0) += c as i128 * m as i128;
        }
    }
    let floor = if lambda.is_restricted(p) { 1 } else { 0 };
    let mut out = Character::new(rs.group_type());
    for (nu, &m) in &weyl.mults {
        let lo = (m as i128 - j.get(nu).copied().unwrap_or(0)).max(floor);
        if lo > 0 {
            out.mults.insert(nu.clone(), lo as u64);
        }
    }
    Ok(out)
}

/// What is known about `L(lambda)` restricted to the principal A1.
#[derive(Clone, Debug)]
pub struct RestrictionData {
    pub r: u64,
    pub exact: bool,
    pub lower: NSequence,
    pub upper: NSequence,
    pub dim_lower: BigUint,
}

pub fn restriction_data(
    rs: &RootSystem,
    lambda: &Weight,
    p: Characteristic,
    data: Option<&Character>,
) -> Result<RestrictionData> {
    let r = restrict_weight(rs, lambda)?;
    let weyl = freudenthal(rs, lambda)?;
    let upper = NSequence::from_a1(&project_above(rs, &weyl, 0), r, Exactness::LowerBound);
    let (ch, exact) = match irreducible_character(rs, lambda, p, data)? {
        Some(ch) => (ch, true),
        None => {
            let p = p.as_prime().expect("characteristic zero is always exact");
            (irreducible_lower_bound(rs, lambda, p)?, false)
        }
    };
    let exactness = if exact { Exactness::Exact } else { Exactness::LowerBound };
    let lower = NSequence::from_a1(&project_above(rs, &ch, 0), r, exactness);
    let upper = if exact { lower.clone() } else { upper };
    Ok(RestrictionData {
        r,
        exact,
        lower,
        upper,
        dim_lower: ch.dim(rs),
    })
}

/// The `n`-sequence of `lambda` from the chosen source. `Irreducible` degrades
/// to a lower bound when the irreducible character is out of reach.
pub fn n_sequence(
    rs: &RootSystem,
    lambda: &Weight,
    p: Characteristic,
    source: CharacterSource<'_>,
) -> Result<NSequence> {
    let r = restrict_weight(rs, lambda)?;
    match source {
        CharacterSource::Weyl => {
            let ch = freudenthal(rs, lambda)?;
            Ok(NSequence::from_a1(&project_above(rs, &ch, 0), r, Exactness::Exact))
        }
        CharacterSource::Irreducible => Ok(restriction_data(rs, lambda, p, None)?.lower),
        CharacterSource::Data(ch) => Ok(restriction_data(rs, lambda, p, Some(ch))?.lower),
    }
}

fn contains_weight(gaps: &mut HashMap<u64, Gaps>, t: u64, p: Characteristic, w: i64) -> bool {
    match p {
        Characteristic::Zero => w.abs() <= t as i64 && (t as i64 - w) % 2 == 0,
        Characteristic::Prime(p) => gaps.entry(t).or_insert_with(|| a1mod::gaps(t, p)).is_weight(w),
    }
}

/// One step of the recurrence: `(m_d, s_d)` given the factors chosen so far.
fn recurrence_step(
    gaps: &mut HashMap<u64, Gaps>,
    chosen: &[u64],
    p: Characteristic,
    w: i64,
) -> u64 {
    chosen
        .iter()
        .filter(|&&t| t as i64 > w && !contains_weight(gaps, t, p, w))
        .count() as u64
}

/// Runs `m_d = n_d - n_{d-1} + s_d - s_{d-1}` and returns every `m_d`.
pub fn recurrence_multiplicities(ns: &NSequence, p: Characteristic) -> Result<Vec<u64>> {
    if ns.exactness != Exactness::Exact {
        return Err(Error::InexactSequence);
    }
    let mut gaps = HashMap::new();
    let mut chosen: Vec<u64> = Vec::new();
    let mut ms = Vec::with_capacity(ns.n.len());
    let (mut n_prev, mut s_prev) = (0i64, 0i64);
    for (d, &n) in ns.n.iter().enumerate().take(ns.r as usize / 2 + 1) {
        let w = ns.r as i64 - 2 * d as i64;
        let s = recurrence_step(&mut gaps, &chosen, p, w) as i64;
        let m = n as i64 - n_prev + s - s_prev;
        if m < 0 {
            return Err(Error::NegativeMultiplicity { d, value: m });
        }
        chosen.extend(std::iter::repeat_n(w as u64, m as usize));
        ms.push(m as u64);
        n_prev = n as i64;
        s_prev = s;
    }
    Ok(ms)
}

/// Composition factors recovered from an exact sequence, descending.
pub fn recurrence_decompose(ns: &NSequence, p: Characteristic) -> Result<Vec<u64>> {
    let ms = recurrence_multiplicities(ns, p)?;
    let mut out = Vec::new();
    for (d, m) in ms.into_iter().enumerate() {
        out.extend(std::iter::repeat_n(ns.r - 2 * d as u64, m as usize));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    MF,
    NotMF,
    Unknown,
}

/// Which case of the classification decides a restricted weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// `p > r` and the characteristic zero restriction is MF.
    LargePrime,
    /// `A2`, `lambda = (1,1)`, `p = 3`.
    A2Adjoint,
    /// `B2`, `lambda = (2,0)`, `p = 5`.
    B2TwoOmegaOne,
    /// None of the cases applies.
    NoBranch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    TheoremBranch {
        branch: Branch,
        factors: Option<Vec<u64>>,
    },
    ComputedDecomposition(Vec<u64>),
    Certificate(Certificate),
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub r: u64,
    pub provenance: Provenance,
}

impl Verdict {
    pub fn factors(&self) -> Option<&[u64]> {
        match &self.provenance {
            Provenance::TheoremBranch { factors, .. } => factors.as_deref(),
            Provenance::ComputedDecomposition(f) => Some(f),
            _ => None,
        }
    }
}

/// Composition factors of the restriction of `L(lambda)`, descending.
pub fn restriction_factors(
    rs: &RootSystem,
    lambda: &Weight,
    p: Characteristic,
    data: Option<&Character>,
) -> Result<Vec<u64>> {
    let ch = irreducible_character(rs, lambda, p, data)?
        .ok_or_else(|| Error::CharacterUnavailable(lambda.clone()))?;
    let a1 = project(rs, &ch);
    match p {
        Characteristic::Zero => a1mod::char0_decompose(&a1),
        Characteristic::Prime(p) => a1mod::decompose(&a1, p),
    }
}

/// Decides MF by decomposing the restriction directly.
pub fn mf_decide_computed(
    rs: &RootSystem,
    lambda: &Weight,
    p: Characteristic,
    data: Option<&Character>,
) -> Result<Verdict> {
    let r = restrict_weight(rs, lambda)?;
    let factors = restriction_factors(rs, lambda, p, data)?;
    let status = if a1mod::is_multiplicity_free(&factors) {
        Status::MF
    } else {
        Status::NotMF
    };
    Ok(Verdict {
        status,
        r,
        provenance: Provenance::ComputedDecomposition(factors),
    })
}

/// How the sequence witnesses in a recurrence certificate were obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RecurrenceWitness {
    /// Exact prefix `n_0..=n_d`; replaying the recurrence gives `m_d >= 2`.
    Exact { n: Vec<u64>, d: u64, m_d: u64 },
    /// `n_d - n_{d-1} >= 2` from a lower bound on `n_d` and an upper bound on `n_{d-1}`.
    Jump { d: u64, n_d_lower: u64, n_prev_upper: u64 },
    /// `lambda` is a multiple of one fundamental weight and `n_d >= d + 1`.
    SingleSupport { node: usize, d: u64, n_d_lower: u64 },
}

/// Dimensions as decimal strings, since they can exceed `u64`.
mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(n)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// A replayable reason why the restriction is not MF.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificate {
    /// `Delta(lambda)` irreducible and the tilting module `T(r)` reducible.
    Tilting {
        group: GroupType,
        r: u64,
        p: u64,
        in_root_lattice: bool,
    },
    /// `dim V > B(r)`.
    DimBound {
        r: u64,
        p: u64,
        #[serde(with = "decimal")]
        dim_lower: BigUint,
        bound: u64,
    },
    /// `lambda = a omega_i`, `r` prime to `p` and `dim V > B(r) - dim L(r-2)`.
    DimBoundOmega {
        r: u64,
        p: u64,
        node: usize,
        #[serde(with = "decimal")]
        dim_lower: BigUint,
        bound: u64,
        dim_r_minus_2: u64,
    },
    /// `n_d > d + 1`.
    WeightCount { r: u64, d: u64, n_d_lower: u64 },
    Recurrence {
        r: u64,
        p: u64,
        witness: RecurrenceWitness,
    },
}

fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

fn fail(msg: impl Into<String>) -> Result<()> {
    Err(Error::InvalidCertificate(msg.into()))
}

fn ensure(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        fail(msg)
    }
}

/// Whether `1 <= d < min(floor((r+2)/2), p)`.
fn in_recurrence_range(r: u64, p: u64, d: u64) -> bool {
    d >= 1 && d < ((r + 2) / 2).min(p)
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Tilting { .. } => "Tilting",
            Certificate::DimBound { .. } => "DimBound",
            Certificate::DimBoundOmega { .. } => "DimBoundOmega",
            Certificate::WeightCount { .. } => "WeightCount",
            Certificate::Recurrence { .. } => "Recurrence",
        }
    }

    pub fn r(&self) -> u64 {
        match *self {
            Certificate::Tilting { r, .. }
            | Certificate::DimBound { r, .. }
            | Certificate::DimBoundOmega { r, .. }
            | Certificate::WeightCount { r, .. }
            | Certificate::Recurrence { r, .. } => r,
        }
    }

    /// Replays the arithmetic from the witnesses alone.
    pub fn check(&self) -> Result<()> {
        match self {
            Certificate::Tilting {
                group,
                r,
                p,
                in_root_lattice,
            } => {
                ensure(a1mod::tilting_reducible(*r, *p), "T(r) is irreducible")?;
                let l = group.rank() as u64;
                if !in_root_lattice {
                    match group.family() {
                        Family::B => ensure(*p > binom2(l + 1), "p too small for B outside root lattice")?,
                        Family::D => ensure(*p > binom2(l), "p too small for D outside root lattice")?,
                        _ => {}
                    }
                }
                Ok(())
            }
            Certificate::DimBound {
                r,
                p,
                dim_lower,
                bound,
            } => {
                ensure(*bound == a1mod::bound_b(*r, *p), "bound is not B(r)")?;
                ensure(*dim_lower > BigUint::from(*bound), "dimension within bound")
            }
            Certificate::DimBoundOmega {
                r,
                p,
                dim_lower,
                bound,
                dim_r_minus_2,
                ..
            } => {
                ensure(*r >= 2 && r % p != 0, "r must be at least 2 and prime to p")?;
                ensure(*bound == a1mod::bound_b(*r, *p), "bound is not B(r)")?;
                ensure(*dim_r_minus_2 == a1mod::dim_irr(r - 2, *p), "wrong dim L(r-2)")?;
                ensure(
                    *dim_lower > BigUint::from(bound - dim_r_minus_2),
                    "dimension within bound",
                )
            }
            Certificate::WeightCount { r, d, n_d_lower } => {
                ensure(*d <= r / 2, "d out of range")?;
                ensure(*n_d_lower > d + 1, "n_d <= d + 1")
            }
            Certificate::Recurrence { r, p, witness } => match witness {
                RecurrenceWitness::Exact { n, d, m_d } => {
                    ensure(*m_d >= 2 && n.len() as u64 == d + 1, "malformed exact witness")?;
                    let ns = NSequence {
                        r: *r,
                        n: n.clone(),
                        exactness: Exactness::Exact,
                    };
                    let ms = recurrence_multiplicities(&ns, Characteristic::Prime(*p))?;
                    ensure(ms.last() == Some(m_d), "replayed m_d differs")
                }
                RecurrenceWitness::Jump {
                    d,
                    n_d_lower,
                    n_prev_upper,
                } => {
                    ensure(in_recurrence_range(*r, *p, *d), "d out of range")?;
                    ensure(*n_d_lower >= n_prev_upper + 2, "jump below 2")
                }
                RecurrenceWitness::SingleSupport { d, n_d_lower, .. } => {
                    ensure(in_recurrence_range(*r, *p, *d), "d out of range")?;
                    ensure(*n_d_lower > *d, "n_d < d + 1")
                }
            },
        }
    }

    /// Checks the witnesses against a fresh computation for `(lambda, p)`.
    pub fn verify_against(
        &self,
        rs: &RootSystem,
        lambda: &Weight,
        p: u64,
        data: Option<&Character>,
    ) -> Result<()> {
        self.check()?;
        let r = restrict_weight(rs, lambda)?;
        ensure(self.r() == r, "r does not match lambda")?;
        let single = single_support(lambda);
        match self {
            Certificate::Tilting {
                group,
                p: q,
                in_root_lattice,
                ..
            } => {
                ensure(*group == rs.group_type() && *q == p, "wrong group or prime")?;
                ensure(*in_root_lattice == rs.in_root_lattice(lambda), "root lattice fact")?;
                ensure(jsf_sum(rs, lambda, p)?.terms.is_empty(), "Weyl module reducible")
            }
            _ => {
                let known = restriction_data(rs, lambda, Characteristic::Prime(p), data)?;
                match self {
                    Certificate::DimBound { dim_lower, p: q, .. } => {
                        ensure(*q == p && *dim_lower <= known.dim_lower, "dimension witness")
                    }
                    Certificate::DimBoundOmega {
                        dim_lower,
                        node,
                        p: q,
                        ..
                    } => {
                        ensure(*q == p && single == Some(*node), "lambda not a multiple of omega_i")?;
                        ensure(*dim_lower <= known.dim_lower, "dimension witness")
                    }
                    Certificate::WeightCount { d, n_d_lower, .. } => {
                        ensure(*n_d_lower <= known.lower.get(*d as usize), "n_d witness")
                    }
                    Certificate::Recurrence { p: q, witness, .. } => {
                        ensure(*q == p, "wrong prime")?;
                        match witness {
                            RecurrenceWitness::Exact { n, .. } => ensure(
                                known.exact && known.lower.n.starts_with(n),
                                "n prefix differs",
                            ),
                            RecurrenceWitness::Jump {
                                d,
                                n_d_lower,
                                n_prev_upper,
                            } => {
                                let d = *d as usize;
                                ensure(
                                    *n_d_lower <= known.lower.get(d)
                                        && *n_prev_upper >= known.upper.get(d - 1),
                                    "sequence bounds",
                                )
                            }
                            RecurrenceWitness::SingleSupport {
                                node, d, n_d_lower, ..
                            } => ensure(
                                single == Some(*node) && *n_d_lower <= known.lower.get(*d as usize),
                                "single support witness",
                            ),
                        }
                    }
                    Certificate::Tilting { .. } => unreachable!(),
                }
            }
        }
    }
}

fn single_support(lambda: &Weight) -> Option<usize> {
    match lambda.support().as_slice() {
        [i] => Some(*i),
        _ => None,
    }
}

/// Outcome of a not-MF search: a certificate, an MF decomposition found on the
/// way, or nothing conclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifyOutcome {
    NotMF(Certificate),
    MF(Vec<u64>),
    Unknown,
}

/// First applicable certificate in the order Tilting, DimBound,
/// DimBoundOmega, WeightCount, Recurrence.
pub fn certify_not_mf(
    rs: &RootSystem,
    lambda: &Weight,
    p: u64,
    data: Option<&Character>,
) -> Result<CertifyOutcome> {
    let pc = Characteristic::prime(p)?;
    let h = rs.coxeter_number();
    if p < h {
        return Err(Error::PBelowCoxeter { p, h });
    }
    let r = restrict_weight(rs, lambda)?;
    if lambda.is_zero() {
        return Ok(CertifyOutcome::MF(vec![0]));
    }

    let tilting = Certificate::Tilting {
        group: rs.group_type(),
        r,
        p,
        in_root_lattice: rs.in_root_lattice(lambda),
    };
    if tilting.check().is_ok() && jsf_sum(rs, lambda, p)?.terms.is_empty() {
        return Ok(CertifyOutcome::NotMF(tilting));
    }

    let known = restriction_data(rs, lambda, pc, data)?;
    let bound = a1mod::bound_b(r, p);
    if known.dim_lower > BigUint::from(bound) {
        return Ok(CertifyOutcome::NotMF(Certificate::DimBound {
            r,
            p,
            dim_lower: known.dim_lower,
            bound,
        }));
    }
    let single = single_support(lambda);
    if let Some(node) = single {
        if r >= 2 && r % p != 0 {
            let dim_r_minus_2 = a1mod::dim_irr(r - 2, p);
            if known.dim_lower > BigUint::from(bound - dim_r_minus_2) {
                return Ok(CertifyOutcome::NotMF(Certificate::DimBoundOmega {
                    r,
                    p,
                    node,
                    dim_lower: known.dim_lower,
                    bound,
                    dim_r_minus_2,
                }));
            }
        }
    }
    for (d, &n) in known.lower.n.iter().enumerate() {
        if n > d as u64 + 1 {
            return Ok(CertifyOutcome::NotMF(Certificate::WeightCount {
                r,
                d: d as u64,
                n_d_lower: n,
            }));
        }
    }

    if known.exact {
        let ms = recurrence_multiplicities(&known.lower, pc)?;
        if let Some(d) = ms.iter().position(|&m| m >= 2) {
            return Ok(CertifyOutcome::NotMF(Certificate::Recurrence {
                r,
                p,
                witness: RecurrenceWitness::Exact {
                    n: known.lower.n[..=d].to_vec(),
                    d: d as u64,
                    m_d: ms[d],
                },
            }));
        }
        return Ok(CertifyOutcome::MF(recurrence_decompose(&known.lower, pc)?));
    }
    for d in 1..((r + 2) / 2).min(p) {
        let lo = known.lower.get(d as usize);
        let hi = known.upper.get(d as usize - 1);
        if lo >= hi + 2 {
            return Ok(CertifyOutcome::NotMF(Certificate::Recurrence {
                r,
                p,
                witness: RecurrenceWitness::Jump {
                    d,
                    n_d_lower: lo,
                    n_prev_upper: hi,
                },
            }));
        }
        if let Some(node) = single {
            if lo > d {
                return Ok(CertifyOutcome::NotMF(Certificate::Recurrence {
                    r,
                    p,
                    witness: RecurrenceWitness::SingleSupport {
                        node,
                        d,
                        n_d_lower: lo,
                    },
                }));
            }
        }
    }
    Ok(CertifyOutcome::Unknown)
}

/// Dimension of the `lambda - alpha_i - alpha_j` weight space of `L(lambda)`
/// for `lambda` supported exactly on the adjacent nodes `i`, `j`.
pub fn adjacent_pair_dim(
    rs: &RootSystem,
    lambda: &Weight,
    i: usize,
    j: usize,
    p: Characteristic,
) -> Option<u64> {
    let mut support = lambda.support();
    support.sort_unstable();
    let mut pair = [i, j];
    pair.sort_unstable();
    if support != pair || !rs.adjacent(i, j) {
        return None;
    }
    let Characteristic::Prime(p) = p else {
        return Some(2);
    };
    let (long, short) = if rs.length_ratio(i, j) >= 1.into() { (i, j) } else { (j, i) };
    let (cl, cs) = (lambda.0[long], lambda.0[short]);
    let ratio = rs.length_ratio(long, short).to_integer();
    let one = match ratio {
        1 => cl + cs == p as i64 - 1,
        k => (k * cl + cs + k).rem_euclid(p as i64) == 0,
    };
    Some(if one { 1 } else { 2 })
}

/// The clauses of the two-node reduction, each a necessary condition for MF.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionClause {
    /// At most two nonzero coordinates.
    I,
    /// Non-adjacent support has both coefficients 1.
    II,
    /// Non-adjacent support consists of end nodes.
    III,
    /// One of the two nodes is an end node.
    IV,
    /// Both coefficients above 1 forces rank 2 and a 1-dimensional `lambda-ij`.
    V,
    /// A coefficient above 1 forces rank 2, or adjacency with 1-dimensional `lambda-ij`.
    VI,
}

/// Checks the reduction clauses for `lambda` restricted (or `p = 0`).
pub fn support_filter(
    rs: &RootSystem,
    lambda: &Weight,
    p: Characteristic,
) -> Result<std::result::Result<(), ReductionClause>> {
    rs.check_dominant(lambda)?;
    let s = lambda.support();
    if s.len() <= 1 || rs.rank() < 2 {
        return Ok(Ok(()));
    }
    if s.len() > 2 {
        return Ok(Err(ReductionClause::I));
    }
    let (i, j) = (s[0], s[1]);
    let (ci, cj) = (lambda.0[i], lambda.0[j]);
    let adjacent = rs.adjacent(i, j);
    if !adjacent && (ci != 1 || cj != 1) {
        return Ok(Err(ReductionClause::II));
    }
    if !adjacent && !(rs.is_end_node(i) && rs.is_end_node(j)) {
        return Ok(Err(ReductionClause::III));
    }
    if !rs.is_end_node(i) && !rs.is_end_node(j) {
        return Ok(Err(ReductionClause::IV));
    }
    let pair_one = || adjacent_pair_dim(rs, lambda, i, j, p) == Some(1);
    if ci > 1 && cj > 1 && !(rs.rank() == 2 && pair_one()) {
        return Ok(Err(ReductionClause::V));
    }
    if (ci > 1 || cj > 1) && !(rs.rank() == 2 || (adjacent && pair_one())) {
        return Ok(Err(ReductionClause::VI));
    }
    Ok(Ok(()))
}
