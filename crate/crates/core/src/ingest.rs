//! Weight multiplicity tables for irreducible modules, read from TSV.
//!
//! ```text
//! #group B 2 2,0 5
//! 2,0	1
//! 0,1	1
//! 0,0	1
//! ```
//!
//! The header gives family, rank, highest weight and characteristic (`0` for
//! characteristic zero). Each row is a dominant weight and its multiplicity.
#![allow(clippy::tabs_in_doc_comments)]

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::characteristic::Characteristic;
use crate::charalg::Character;
use crate::error::{Error, Result};
use crate::rootsys::{Family, GroupType, RootSystem, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IngestedTable {
    pub group: GroupType,
    pub lambda: Weight,
    pub p: Characteristic,
    pub character: Character,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Ingest {
        line,
        message: message.into(),
    }
}

fn parse_coords(s: &str, line: usize) -> Result<Weight> {
    s.split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Weight::new)
        .map_err(|e| err(line, format!("bad weight {s:?}: {e}")))
}

fn parse_header(text: &str) -> Result<(GroupType, Weight, Characteristic)> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let ["#group", family, rank, lambda, p] = fields.as_slice() else {
        return Err(err(1, "expected header `#group <family> <rank> <lambda> <p>`"));
    };
    let family: Family = family.parse().map_err(|e: Error| err(1, e.to_string()))?;
    let rank: usize = rank.parse().map_err(|_| err(1, format!("bad rank {rank:?}")))?;
    let group = GroupType::new(family, rank).map_err(|e| err(1, e.to_string()))?;
    let lambda = parse_coords(lambda, 1)?;
    let p: u64 = p.parse().map_err(|_| err(1, format!("bad characteristic {p:?}")))?;
    let p = Characteristic::from_cli(p).map_err(|e| err(1, e.to_string()))?;
    Ok((group, lambda, p))
}

/// Parses and validates a table: positive multiplicities, no repeated rows,
/// every row dominant and below the highest weight, which has multiplicity 1.
pub fn parse(text: &str) -> Result<IngestedTable> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let (group, lambda, p) = parse_header(header)?;
    let rs = RootSystem::build(group);
    rs.check_dominant(&lambda).map_err(|e| err(1, e.to_string()))?;
    if let Characteristic::Prime(q) = p {
        if !lambda.is_restricted(q) {
            return Err(err(1, format!("{lambda} is not {q}-restricted")));
        }
    }

    let mut mults = BTreeMap::new();
    for (n, l) in lines {
        if l.trim().is_empty() || l.starts_with('#') {
            continue;
        }
        let Some((mu, m)) = l.split_once('\t') else {
            return Err(err(n, "expected `<weight>\\t<multiplicity>`"));
        };
        let mu = parse_coords(mu, n)?;
        let m: u64 = m
            .trim()
            .parse()
            .map_err(|_| err(n, format!("bad multiplicity {m:?}")))?;
        rs.check_dominant(&mu).map_err(|e| err(n, e.to_string()))?;
        if m == 0 {
            return Err(err(n, "multiplicity must be positive"));
        }
        let below = rs
            .weight_to_root_coords(&(&lambda - &mu))
            .iter()
            .all(|c| c.is_integer() && *c >= Zero::zero());
        if !below {
            return Err(err(n, format!("{mu} is not below {lambda}")));
        }
        if mults.insert(mu.clone(), m).is_some() {
            return Err(err(n, format!("repeated weight {mu}")));
        }
    }
    if mults.get(&lambda) != Some(&1) {
        return Err(err(1, format!("highest weight {lambda} must have multiplicity 1")));
    }
    Ok(IngestedTable {
        group,
        lambda,
        p,
        character: Character { group, mults },
    })
}

pub fn read(path: &std::path::Path) -> Result<IngestedTable> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse(&text)
}

fn coords(w: &Weight) -> String {
    w.0.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// Serializes a character in the format accepted by [`parse`], rows in
/// decreasing order.
pub fn to_tsv(lambda: &Weight, p: Characteristic, ch: &Character) -> String {
    let g = ch.group;
    let mut out = format!("#group {} {} {} {}\n", g.family(), g.rank(), coords(lambda), p);
    for (mu, m) in ch.mults.iter().rev() {
        writeln!(out, "{}\t{m}", coords(mu)).expect("write to string");
    }
    out
}
