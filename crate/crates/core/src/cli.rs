//! The `gsc` command line. Every subcommand prints one JSON document (or
//! CSV for `census --format csv`). Exit codes: 0 success, 1 bad input,
//! 2 internal invariant violation.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::arith::CycNumber;
use crate::census::{
    are_isomorphic_curves, census_classes, genus_of_tuple, BranchedCurve, ExponentTuple,
    TupleClasses,
};
use crate::error::{Error, Result};
use crate::moduli::{census_definability_summary, definability_verdict};
use crate::record::{FamilyRecord, SCHEMA_VERSION};
use crate::signatures::harvey_check;
use crate::superelliptic::{
    build_family_with_moduli, equivariance_report, family_exponent_tuple, gs_census, ExponentData,
    GSFamily, ReducedGroup,
};
use crate::uniqueness::uniqueness_verdict;

pub const MAX_WORKERS_ENV: &str = "GSC_MAX_WORKERS";

#[derive(Parser, Debug)]
#[command(
    name = "gsc",
    version,
    about = "Cyclic n-gonal and generalized superelliptic curve families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Signature tuples, exponent classes and optionally GS families of a genus.
    Census {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        max_n: Option<u64>,
        /// Only the generalized superelliptic families.
        #[arg(long)]
        gs_only: bool,
        /// Include GS families with this reduced group, e.g. `dihedral:3`.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Whether cone orders admit a cyclic cover of level n.
    Harvey {
        #[arg(long)]
        n: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<u64>,
    },
    /// Genus of y^n = ∏ (x - a_j)^{l_j}; ∞ is added when needed.
    Genus {
        #[arg(long)]
        n: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u64>,
    },
    /// Build one family and print its record.
    Family {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        l0: u64,
        /// Exponents at the special orbits (dihedral and Platonic cases).
        #[arg(long, value_delimiter = ',')]
        special: Vec<u64>,
        /// Exponents at the generic orbits.
        #[arg(long, value_delimiter = ',')]
        exponents: Vec<u64>,
        /// Values of the generic-orbit parameters, e.g. `2,3` or `z5 + 1`.
        #[arg(long, value_delimiter = ',')]
        moduli: Vec<String>,
    },
    /// Decide whether two concrete branched curves are isomorphic.
    Iso { first: PathBuf, second: PathBuf },
    /// Uniqueness and field-of-moduli verdicts for a stored family.
    Verdict { file: PathBuf },
    /// Verify the Platonic invariant identities.
    Selftest,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = with_workers(|| dispatch(cli.command, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn with_workers<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let workers = std::env::var(MAX_WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&w| w > 0);
    match workers.and_then(|w| rayon::ThreadPoolBuilder::new().num_threads(w).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::InvariantViolation(e.to_string()))?;
    writeln!(out, "{s}").map_err(io_error)
}

fn io_error(e: std::io::Error) -> Error {
    Error::InvalidInput(format!("i/o: {e}"))
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Census {
            genus,
            max_n,
            gs_only,
            group,
            format,
            out: path,
        } => {
            let group = group.map(|g| g.parse::<ReducedGroup>()).transpose()?;
            let census = build_census(genus, max_n, gs_only, group)?;
            let text = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&census)
                        .map_err(|e| Error::InvariantViolation(e.to_string()))?
                        + "\n"
                }
                Format::Csv => census_csv(&census)?,
            };
            match path {
                Some(p) => fs::write(&p, text).map_err(io_error),
                None => out.write_all(text.as_bytes()).map_err(io_error),
            }
        }
        Command::Harvey { n, orders } => {
            let admissible = harvey_check(n, &orders)?;
            emit(
                out,
                &json!({ "n": n, "orders": orders, "admissible": admissible }),
            )
        }
        Command::Genus { n, exponents } => {
            let t = ExponentTuple::from_finite(n, &exponents)?;
            let g = genus_of_tuple(&t)?;
            emit(out, &json!({ "n": n, "exponents": t.exps(), "genus": g }))
        }
        Command::Family {
            group,
            n,
            l0,
            special,
            exponents,
            moduli,
        } => {
            let group: ReducedGroup = group.parse()?;
            let moduli = moduli
                .iter()
                .map(|s| s.parse::<CycNumber>())
                .collect::<Result<Vec<_>>>()?;
            let data = ExponentData::new(l0, special, exponents);
            let fam = if moduli.is_empty() {
                crate::superelliptic::build_family(n, group, &data)?
            } else {
                build_family_with_moduli(n, group, &data, &moduli)?
            };
            emit(out, &FamilyRecord::new(fam)?)
        }
        Command::Iso { first, second } => {
            let c1: BranchedCurve = read_json(&first)?;
            let c2: BranchedCurve = read_json(&second)?;
            let c1 = BranchedCurve::new(c1.n, c1.points, c1.exponents)?;
            let c2 = BranchedCurve::new(c2.n, c2.points, c2.exponents)?;
            let witness = are_isomorphic_curves(&c1, &c2);
            if let Some(w) = &witness {
                if !w.validates(&c1, &c2) {
                    return Err(Error::InvariantViolation(
                        "isomorphism witness does not validate".into(),
                    ));
                }
            }
            emit(
                out,
                &json!({ "isomorphic": witness.is_some(), "witness": witness }),
            )
        }
        Command::Verdict { file } => {
            let text = fs::read_to_string(&file).map_err(io_error)?;
            let fam = match FamilyRecord::from_json(&text) {
                Ok(rec) => rec.family,
                Err(_) => serde_json::from_str::<GSFamily>(&text)
                    .map_err(|e| Error::InvalidInput(format!("{}: {e}", file.display())))?,
            };
            let uniqueness = uniqueness_verdict(&fam);
            let field_of_moduli = definability_verdict(&fam, &uniqueness);
            emit(
                out,
                &json!({
                    "family": fam.to_string(),
                    "uniqueness": uniqueness,
                    "field_of_moduli": field_of_moduli,
                }),
            )
        }
        Command::Selftest => {
            let reports = [
                ReducedGroup::Tetrahedral,
                ReducedGroup::Octahedral,
                ReducedGroup::Icosahedral,
            ]
            .iter()
            .map(|&g| equivariance_report(g))
            .collect::<Result<Vec<_>>>()?;
            let passed = reports.iter().all(|r| r.all_passed());
            emit(out, &json!({ "passed": passed, "reports": reports }))?;
            if passed {
                Ok(())
            } else {
                Err(Error::InvariantViolation(
                    "equivariance identities failed".into(),
                ))
            }
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T> {
    let text = fs::read_to_string(path).map_err(io_error)?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

/// The JSON document written by `census`.
#[derive(Clone, Debug, PartialEq, Serialize, serde::Deserialize)]
pub struct CensusDocument {
    pub schema_version: String,
    pub genus: u64,
    pub max_n: Option<u64>,
    /// Empty with `--gs-only`.
    pub tuples: Vec<TupleClasses>,
    pub families: Option<Vec<FamilyRecord>>,
    pub definability: Option<crate::moduli::DefinabilitySummary>,
}

pub fn build_census(
    genus: u64,
    max_n: Option<u64>,
    gs_only: bool,
    group: Option<ReducedGroup>,
) -> Result<CensusDocument> {
    if genus < 2 {
        return Err(Error::InvalidInput(format!("genus {genus} is below 2")));
    }
    let tuples = if gs_only {
        vec![]
    } else {
        census_classes(genus, max_n)?
    };
    let (families, definability) = if gs_only || group.is_some() {
        let fams: Vec<GSFamily> = gs_census(genus, max_n)?
            .into_iter()
            .filter(|f| group.is_none_or(|g| f.group() == g))
            .collect();
        let summary = census_definability_summary(&fams);
        let records = fams
            .into_iter()
            .map(FamilyRecord::new)
            .collect::<Result<Vec<_>>>()?;
        (Some(records), Some(summary))
    } else {
        (None, None)
    };
    Ok(CensusDocument {
        schema_version: SCHEMA_VERSION.into(),
        genus,
        max_n,
        tuples,
        families,
        definability,
    })
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// One row per exponent class (`kind = class`) and one per family
/// (`kind = family`).
pub fn census_csv(doc: &CensusDocument) -> Result<String> {
    let mut w = csv::Writer::from_writer(vec![]);
    let csv_err = |e: csv::Error| Error::InvariantViolation(e.to_string());
    w.write_record([
        "kind",
        "n",
        "orders",
        "exponents",
        "group",
        "genus",
        "sig_h",
        "sig_g",
        "uniqueness",
        "field_of_moduli",
        "equation",
    ])
    .map_err(csv_err)?;
    for t in &doc.tuples {
        for e in &t.exponent_classes {
            w.write_record([
                "class".to_string(),
                t.tuple.n.to_string(),
                join(&t.tuple.orders),
                join(e.exps()),
                String::new(),
                t.genus.to_string(),
                t.tuple.signature().to_string(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
            ])
            .map_err(csv_err)?;
        }
    }
    for rec in doc.families.iter().flatten() {
        let fam = &rec.family;
        w.write_record([
            "family".to_string(),
            fam.n().to_string(),
            join(fam.sig_h().cone_orders()),
            join(family_exponent_tuple(fam).exps()),
            fam.group().to_string(),
            fam.genus().to_string(),
            fam.sig_h().to_string(),
            fam.sig_g().to_string(),
            rec.uniqueness.to_string(),
            rec.field_of_moduli.to_string(),
            fam.equation().to_string(),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvariantViolation(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::InvariantViolation(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["gsc"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn harvey_and_genus() {
        let (code, out, _) = call(&["harvey", "--n", "4", "--orders", "2,2,4"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["admissible"], false);
        let (code, out, _) = call(&["genus", "--n", "5", "--exponents", "1,1,3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["genus"], 2);
    }

    #[test]
    fn user_errors_exit_one() {
        assert_eq!(call(&["census", "--genus", "1"]).0, 1);
        assert_eq!(call(&["harvey", "--n", "4"]).0, 1);
        assert_eq!(call(&["family", "--group", "cube", "--n", "4"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }
}
