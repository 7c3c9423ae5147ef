use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use principal_mf::a1mod;
use principal_mf::charalg::{freudenthal, Character};
use principal_mf::ingest::{self, IngestedTable};
use principal_mf::jantzen::{is_weyl_irreducible, jsf_sum};
use principal_mf::paperdata::{char0_factors, verdict};
use principal_mf::principal::{
    certify_not_mf, irreducible_character, project, restrict_weight, Branch, Certificate,
    CertifyOutcome, Provenance, Status,
};
use principal_mf::rootsys::{Family, GroupType, RootSystem, Weight};
use principal_mf::sweep::{sweep_groups, table1_sweep, Table1Row};
use principal_mf::{Characteristic, Error};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "principal-mf",
    version,
    about = "Restrictions to a principal A1-subgroup and multiplicity-freeness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether L(lambda) restricts multiplicity-freely.
    Verdict {
        #[command(flatten)]
        target: Target,
        /// Weight multiplicities of L(lambda) in the ingest format.
        #[arg(long)]
        data: Option<PathBuf>,
    },
    /// Restrict a module and decompose the result.
    Restrict {
        #[command(flatten)]
        target: Target,
        /// `weyl`, `irreducible` or `file:PATH`.
        #[arg(long, default_value = "irreducible")]
        source: String,
        /// Print the dominant character in the ingest format instead.
        #[arg(long)]
        tsv: bool,
    },
    /// Search for a checkable reason that the restriction is not MF.
    Certify {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        data: Option<PathBuf>,
    },
    /// Characteristic zero MF weights against the stored list.
    Table1 {
        #[arg(long, default_value_t = 9)]
        max_rank: usize,
        #[arg(long, default_value_t = 6)]
        max_coeff: i64,
        #[arg(long, default_value_t = 100)]
        max_r: u64,
    },
    /// Coefficients of the principal value on fundamental weights.
    Rvalues {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Dump the sum formula of the Weyl module.
    Jantzen {
        #[command(flatten)]
        target: Target,
    },
    /// Validate a weight multiplicity table.
    Ingest { path: PathBuf },
}

#[derive(Args)]
struct Target {
    /// Family letter, A to G.
    family: Family,
    rank: usize,
    /// Comma separated coordinates in the fundamental weight basis.
    #[arg(value_parser = parse_weight)]
    lambda: Weight,
    /// Prime, or 0 for characteristic zero.
    p: u64,
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    s.split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|e| format!("{c:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Weight::new)
}

struct Resolved {
    rs: RootSystem,
    lambda: Weight,
    p: Characteristic,
}

impl Target {
    fn resolve(&self) -> Result<Resolved, Error> {
        let rs = RootSystem::build(GroupType::new(self.family, self.rank)?);
        rs.check_dominant(&self.lambda)?;
        Ok(Resolved {
            rs,
            lambda: self.lambda.clone(),
            p: Characteristic::from_cli(self.p)?,
        })
    }
}

impl Resolved {
    fn prime(&self) -> Result<u64, Error> {
        self.p.as_prime().ok_or(Error::NotPrime(0))
    }

    fn load(&self, path: &std::path::Path) -> Result<IngestedTable, Error> {
        let table = ingest::read(path)?;
        if table.group != self.rs.group_type() || table.lambda != self.lambda || table.p != self.p {
            return Err(Error::Parse(format!(
                "{} describes {} {} p={}, not {} {} p={}",
                path.display(),
                table.group,
                table.lambda,
                table.p,
                self.rs.group_type(),
                self.lambda,
                self.p
            )));
        }
        Ok(table)
    }
}

#[derive(Serialize)]
struct Header {
    schema: u32,
    group: String,
    lambda: Vec<i64>,
    p: u64,
}

impl Header {
    fn of(t: &Resolved) -> Header {
        Header {
            schema: SCHEMA,
            group: t.rs.group_type().to_string(),
            lambda: t.lambda.coords().to_vec(),
            p: t.p.as_prime().unwrap_or(0),
        }
    }
}

#[derive(Serialize)]
struct VerdictReport {
    #[serde(flatten)]
    header: Header,
    verdict: Status,
    branch: Option<Branch>,
    r: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    factors: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Certificate>,
}

#[derive(Serialize)]
struct RestrictReport {
    #[serde(flatten)]
    header: Header,
    source: String,
    r: u64,
    dim: u64,
    /// `(T_A weight, multiplicity)`, weights descending.
    weights: Vec<(i64, u64)>,
    factors: Vec<u64>,
    multiplicity_free: bool,
}

#[derive(Serialize)]
struct CertifyReport {
    #[serde(flatten)]
    header: Header,
    r: u64,
    outcome: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    factors: Option<Vec<u64>>,
}

#[derive(Serialize)]
struct Table1Report {
    schema: u32,
    max_rank: usize,
    max_coeff: i64,
    max_r: u64,
    weights: usize,
    multiplicity_free: usize,
    rows: Vec<Table1Row>,
    diff: Vec<Table1Row>,
}

#[derive(Serialize)]
struct RvaluesRow {
    group: String,
    coefficients: Vec<i64>,
}

#[derive(Serialize)]
struct RvaluesReport {
    schema: u32,
    groups: Vec<RvaluesRow>,
}

#[derive(Serialize)]
struct JsfTerm {
    weight: Vec<i64>,
    coefficient: i64,
}

#[derive(Serialize)]
struct JantzenReport {
    #[serde(flatten)]
    header: Header,
    weyl_irreducible: bool,
    terms: Vec<JsfTerm>,
}

#[derive(Serialize)]
struct IngestReport {
    #[serde(flatten)]
    header: Header,
    rows: usize,
    dim: String,
}

fn status_code(s: Status) -> ExitCode {
    ExitCode::from(match s {
        Status::MF => 0,
        Status::NotMF => 1,
        Status::Unknown => 2,
    })
}

fn mf_status(mf: bool) -> Status {
    if mf {
        Status::MF
    } else {
        Status::NotMF
    }
}

fn emit<T: Serialize>(report: &T) -> Result<(), Error> {
    let s = serde_json::to_string_pretty(report).map_err(|e| Error::Parse(e.to_string()))?;
    println!("{s}");
    Ok(())
}

fn cmd_verdict(target: &Target, data: Option<&PathBuf>) -> Result<ExitCode, Error> {
    let t = target.resolve()?;
    let table = data.map(|d| t.load(d)).transpose()?;
    let report = match t.p {
        Characteristic::Zero => {
            let factors = char0_factors(&t.rs, &t.lambda)?;
            VerdictReport {
                header: Header::of(&t),
                verdict: mf_status(factors.is_some()),
                branch: None,
                r: restrict_weight(&t.rs, &t.lambda)?,
                factors,
                certificate: None,
            }
        }
        Characteristic::Prime(p) => {
            let v = verdict(&t.rs, &t.lambda, p, table.as_ref().map(|t| &t.character))?;
            let factors = v.factors().map(<[u64]>::to_vec);
            let (branch, certificate) = match v.provenance {
                Provenance::TheoremBranch { branch, .. } => (Some(branch), None),
                Provenance::Certificate(c) => (None, Some(c)),
                _ => (None, None),
            };
            VerdictReport {
                header: Header::of(&t),
                verdict: v.status,
                branch,
                r: v.r,
                factors,
                certificate,
            }
        }
    };
    emit(&report)?;
    Ok(status_code(report.verdict))
}

fn source_character(t: &Resolved, source: &str) -> Result<Character, Error> {
    match source {
        "weyl" => freudenthal(&t.rs, &t.lambda),
        "irreducible" => irreducible_character(&t.rs, &t.lambda, t.p, None)?
            .ok_or_else(|| Error::CharacterUnavailable(t.lambda.clone())),
        other => match other.strip_prefix("file:") {
            Some(path) => Ok(t.load(path.as_ref())?.character),
            None => Err(Error::Parse(format!(
                "unknown source {other:?}; expected weyl, irreducible or file:PATH"
            ))),
        },
    }
}

fn cmd_restrict(target: &Target, source: &str, tsv: bool) -> Result<ExitCode, Error> {
    let t = target.resolve()?;
    let ch = source_character(&t, source)?;
    if tsv {
        print!("{}", ingest::to_tsv(&t.lambda, t.p, &ch));
        return Ok(ExitCode::SUCCESS);
    }
    let a1 = project(&t.rs, &ch);
    let factors = match t.p {
        Characteristic::Zero => a1mod::char0_decompose(&a1)?,
        Characteristic::Prime(p) => a1mod::decompose(&a1, p)?,
    };
    let mf = a1mod::is_multiplicity_free(&factors);
    emit(&RestrictReport {
        header: Header::of(&t),
        source: source.to_string(),
        r: restrict_weight(&t.rs, &t.lambda)?,
        dim: a1.dim(),
        weights: a1.mults.iter().rev().map(|(&w, &m)| (w, m)).collect(),
        factors,
        multiplicity_free: mf,
    })?;
    Ok(status_code(mf_status(mf)))
}

fn cmd_certify(target: &Target, data: Option<&PathBuf>) -> Result<ExitCode, Error> {
    let t = target.resolve()?;
    let p = t.prime()?;
    let table = data.map(|d| t.load(d)).transpose()?;
    let outcome = certify_not_mf(&t.rs, &t.lambda, p, table.as_ref().map(|t| &t.character))?;
    let (status, certificate, factors) = match outcome {
        CertifyOutcome::NotMF(c) => (Status::NotMF, Some(c), None),
        CertifyOutcome::MF(f) => (Status::MF, None, Some(f)),
        CertifyOutcome::Unknown => (Status::Unknown, None, None),
    };
    emit(&CertifyReport {
        header: Header::of(&t),
        r: restrict_weight(&t.rs, &t.lambda)?,
        outcome: status,
        certificate,
        factors,
    })?;
    Ok(status_code(status))
}

fn cmd_table1(max_rank: usize, max_coeff: i64, max_r: u64) -> Result<ExitCode, Error> {
    let rows = table1_sweep(max_rank, max_coeff, max_r)?;
    let diff: Vec<Table1Row> = rows.iter().filter(|r| r.computed != r.stored).cloned().collect();
    let clean = diff.is_empty();
    emit(&Table1Report {
        schema: SCHEMA,
        max_rank,
        max_coeff,
        max_r,
        weights: rows.len(),
        multiplicity_free: rows.iter().filter(|r| r.computed).count(),
        rows,
        diff,
    })?;
    Ok(if clean { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_rvalues(max_rank: usize) -> Result<ExitCode, Error> {
    let groups = sweep_groups(max_rank)
        .into_iter()
        .map(|g| RvaluesRow {
            group: g.to_string(),
            coefficients: RootSystem::build(g).ta_coeffs().to_vec(),
        })
        .collect();
    emit(&RvaluesReport {
        schema: SCHEMA,
        groups,
    })?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_jantzen(target: &Target) -> Result<ExitCode, Error> {
    let t = target.resolve()?;
    let p = t.prime()?;
    let jsf = jsf_sum(&t.rs, &t.lambda, p)?;
    emit(&JantzenReport {
        header: Header::of(&t),
        weyl_irreducible: is_weyl_irreducible(&t.rs, &t.lambda, p)?,
        terms: jsf
            .terms
            .terms
            .iter()
            .rev()
            .map(|(w, &c)| JsfTerm {
                weight: w.coords().to_vec(),
                coefficient: c,
            })
            .collect(),
    })?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_ingest(path: &std::path::Path) -> Result<ExitCode, Error> {
    let table = ingest::read(path)?;
    let rs = RootSystem::build(table.group);
    let t = Resolved {
        rs,
        lambda: table.lambda.clone(),
        p: table.p,
    };
    emit(&IngestReport {
        header: Header::of(&t),
        rows: table.character.mults.len(),
        dim: table.character.dim(&t.rs).to_string(),
    })?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verdict { target, data } => cmd_verdict(target, data.as_ref()),
        Command::Restrict { target, source, tsv } => cmd_restrict(target, source, *tsv),
        Command::Certify { target, data } => cmd_certify(target, data.as_ref()),
        Command::Table1 {
            max_rank,
            max_coeff,
            max_r,
        } => cmd_table1(*max_rank, *max_coeff, *max_r),
        Command::Rvalues { max_rank } => cmd_rvalues(*max_rank),
        Command::Jantzen { target } => cmd_jantzen(target),
        Command::Ingest { path } => cmd_ingest(path),
    };
    result.unwrap_or_else(|e| {
        eprintln!("principal-mf: {e}");
        ExitCode::from(2)
    })
}
