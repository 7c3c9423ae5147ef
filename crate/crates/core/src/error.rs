use thiserror::Error;

use crate::rootsys::{Family, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank {rank} is out of bounds for type {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("weight {weight} has {got} coordinates, expected {expected}")]
    RankMismatch {
        weight: Weight,
        got: usize,
        expected: usize,
    },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("weight {weight} is not {p}-restricted")]
    NotRestricted { weight: Weight, p: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("p = {p} is below the Coxeter number h = {h}")]
    PBelowCoxeter { p: u64, h: u64 },

    #[error("the Jantzen filtration does not determine the composition factors of the Weyl module {0}")]
    Inconclusive(Weight),

    #[error("no character of L({0}) is available; supply weight data with --source file:PATH")]
    CharacterUnavailable(Weight),

    #[error("A1 character has a negative remainder at weight {weight} while peeling off ({factor})")]
    NegativeRemainder { weight: i64, factor: i64 },

    #[error("A1 character is not symmetric or mixes parities at weight {0}")]
    MalformedA1Character(i64),

    #[error("recurrence produced a negative multiplicity m_{d} = {value}")]
    NegativeMultiplicity { d: usize, value: i64 },

    #[error("n-sequence is only a lower bound; an exact sequence is required")]
    InexactSequence,

    #[error("tensor factors are not separated at p^{exponent} = {bound}")]
    SeparationViolated { exponent: u32, bound: u64 },

    #[error("no closed-form oracle applies to this weight space")]
    NotApplicable,

    #[error("certificate does not check: {0}")]
    InvalidCertificate(String),

    #[error("internal contradiction: {0}")]
    Contradiction(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("ingested table, line {line}: {message}")]
    Ingest { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
