//! Parallel sweeps over highest weights with results in canonical order.

use rayon::prelude::*;
use serde::Serialize;

use crate::characteristic::Characteristic;
use crate::error::Result;
use crate::paperdata::{char0_mf, table1_contains};
use crate::principal::{restrict_weight, support_filter};
use crate::rootsys::{Family, GroupType, RootSystem, Weight};

/// Classical types of rank `2..=max_rank` and the exceptional types of rank
/// at most `max_rank`.
pub fn sweep_groups(max_rank: usize) -> Vec<GroupType> {
    let mut out = Vec::new();
    for (family, min) in [(Family::A, 2), (Family::B, 2), (Family::C, 3), (Family::D, 4)] {
        for n in min..=max_rank {
            out.push(GroupType::new(family, n).expect("classical rank"));
        }
    }
    for (family, n) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
        if n <= max_rank {
            out.push(GroupType::new(family, n).expect("exceptional rank"));
        }
    }
    out
}

/// Nonzero weights with coefficients at most `max_coeff`, `r <= max_r`, that
/// pass the reduction filter in characteristic zero. Weights with three or
/// more nonzero coefficients fail its first clause and are not generated.
pub fn table1_space(rs: &RootSystem, max_coeff: i64, max_r: u64) -> Result<Vec<Weight>> {
    let n = rs.rank();
    let mut out = Vec::new();
    let mut push = |w: Weight| -> Result<()> {
        if restrict_weight(rs, &w)? <= max_r && support_filter(rs, &w, Characteristic::Zero)?.is_ok() {
            out.push(w);
        }
        Ok(())
    };
    for i in 0..n {
        for c in 1..=max_coeff {
            push(Weight::fundamental(n, i, c))?;
        }
        for j in i + 1..n {
            for ci in 1..=max_coeff {
                for cj in 1..=max_coeff {
                    push(&Weight::fundamental(n, i, ci) + &Weight::fundamental(n, j, cj))?;
                }
            }
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub group: String,
    pub lambda: String,
    pub r: u64,
    pub computed: bool,
    pub stored: bool,
}

/// Computed characteristic zero MF status against the stored list.
pub fn table1_sweep(max_rank: usize, max_coeff: i64, max_r: u64) -> Result<Vec<Table1Row>> {
    let mut items = Vec::new();
    for t in sweep_groups(max_rank) {
        let rs = RootSystem::build(t);
        for w in table1_space(&rs, max_coeff, max_r)? {
            items.push((t, w));
        }
    }
    items
        .par_iter()
        .map(|(t, w)| {
            let rs = RootSystem::build(*t);
            Ok(Table1Row {
                group: t.to_string(),
                lambda: w.to_string(),
                r: restrict_weight(&rs, w)?,
                computed: char0_mf(&rs, w)?,
                stored: table1_contains(&rs, w),
            })
        })
        .collect()
}
