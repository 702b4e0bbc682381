//! Argument parsing and the six commands.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use leibniz_core::analysis::{
    decompose_over, decompose_semisimple, induced_module, is_lie_simple, is_semisimple_leibniz,
    is_simple_leibniz, SummandClass,
};
use leibniz_core::builders::{
    build_example1, build_example2, build_example3, build_lie_simple, build_simple_leibniz,
    build_sl2, Built, LeviLayout,
};
use leibniz_core::modules::{decompose_sl2, weight_spaces};
use leibniz_core::{AlgebraTable, Error as CoreError};
use serde_json::{json, Value};

use crate::format::AlgebraFile;
use crate::report::{digest, subspace, vector, ReportDocument};
use crate::spec_file::SpecFile;
use crate::{CliError, EXIT_NEGATIVE, EXIT_OK, EXIT_UNSUPPORTED};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuilderName {
    Sl2,
    Simple,
    LieSimple,
    Example1,
    Example2,
    Example3,
    SpecFile,
}

#[derive(Debug, Parser)]
#[command(
    name = "leibniz",
    version,
    about = "Exact computations with right Leibniz algebras"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub output: OutputFormat,

    /// Destination for the built file (`build`) or the report (other commands).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct an algebra file from a named builder.
    Build {
        #[arg(value_enum)]
        name: BuilderName,
        /// Highest weight for `simple`.
        #[arg(long)]
        m: Option<u32>,
        /// Comma-separated weights for `lie-simple` and `example2`.
        #[arg(long)]
        t: Option<String>,
        /// Matrix size for `example1`.
        #[arg(long)]
        n: Option<usize>,
        /// Spec JSON for `spec-file`.
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Check the right Leibniz identity on all basis triples.
    Verify { path: PathBuf },
    /// Dimension, squares ideal, derived series and right annihilator.
    Info { path: PathBuf },
    /// Solvable, semisimple, Lie-simple and simple verdicts.
    Classify { path: PathBuf },
    /// Split a semisimple algebra along its layout.
    Decompose { path: PathBuf },
    /// Decompose the ideal of the layout over one sl2 component.
    ModuleDecompose {
        path: PathBuf,
        #[arg(long)]
        component: String,
    },
}

struct Loaded {
    digest: String,
    file: AlgebraFile,
    table: AlgebraTable,
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load(path: &Path) -> Result<Loaded, CliError> {
    let bytes = read(path)?;
    let text = std::str::from_utf8(&bytes).map_err(|e| CliError::Format(e.to_string()))?;
    let file = AlgebraFile::parse(text)?;
    let table = file.table()?;
    Ok(Loaded {
        digest: digest(&bytes),
        file,
        table,
    })
}

fn load_layout(loaded: &Loaded) -> Result<LeviLayout, CliError> {
    let layout = loaded
        .file
        .levi_layout(&loaded.table)?
        .ok_or_else(|| CliError::Usage("this command needs a layout block".into()))?;
    layout.verify(&loaded.table)?;
    Ok(layout)
}

fn weights(t: &str) -> Result<Vec<u32>, CliError> {
    t.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("`{s}` is not a nonnegative weight")))
        })
        .collect()
}

fn reject_extra(name: &str, given: &[(&str, bool)]) -> Result<(), CliError> {
    match given.iter().find(|(_, present)| *present) {
        Some((flag, _)) => Err(CliError::Usage(format!(
            "builder `{name}` does not take --{flag}"
        ))),
        None => Ok(()),
    }
}

fn build(
    name: BuilderName,
    m: Option<u32>,
    t: Option<&str>,
    n: Option<usize>,
    spec: Option<&Path>,
) -> Result<AlgebraFile, CliError> {
    let missing = |flag: &str| CliError::Usage(format!("missing --{flag}"));
    let built: Built = match name {
        BuilderName::Sl2 => {
            reject_extra(
                "sl2",
                &[
                    ("m", m.is_some()),
                    ("t", t.is_some()),
                    ("n", n.is_some()),
                    ("spec", spec.is_some()),
                ],
            )?;
            return Ok(AlgebraFile::from_table(&build_sl2()));
        }
        BuilderName::Simple => {
            reject_extra(
                "simple",
                &[
                    ("t", t.is_some()),
                    ("n", n.is_some()),
                    ("spec", spec.is_some()),
                ],
            )?;
            build_simple_leibniz(m.ok_or_else(|| missing("m"))?)
        }
        BuilderName::LieSimple => {
            reject_extra(
                "lie-simple",
                &[
                    ("m", m.is_some()),
                    ("n", n.is_some()),
                    ("spec", spec.is_some()),
                ],
            )?;
            build_lie_simple(&weights(t.ok_or_else(|| missing("t"))?)?)?
        }
        BuilderName::Example1 => {
            reject_extra(
                "example1",
                &[
                    ("m", m.is_some()),
                    ("t", t.is_some()),
                    ("spec", spec.is_some()),
                ],
            )?;
            build_example1(n.ok_or_else(|| missing("n"))?)?
        }
        BuilderName::Example2 => {
            reject_extra(
                "example2",
                &[
                    ("m", m.is_some()),
                    ("n", n.is_some()),
                    ("spec", spec.is_some()),
                ],
            )?;
            let w = weights(t.ok_or_else(|| missing("t"))?)?;
            let w: [u32; 4] = w
                .try_into()
                .map_err(|_| CliError::Usage("example2 takes exactly four weights".into()))?;
            build_example2(w)
        }
        BuilderName::Example3 => {
            reject_extra(
                "example3",
                &[
                    ("m", m.is_some()),
                    ("t", t.is_some()),
                    ("n", n.is_some()),
                    ("spec", spec.is_some()),
                ],
            )?;
            build_example3()
        }
        BuilderName::SpecFile => {
            reject_extra(
                "spec-file",
                &[("m", m.is_some()), ("t", t.is_some()), ("n", n.is_some())],
            )?;
            let path = spec.ok_or_else(|| missing("spec"))?;
            let bytes = read(path)?;
            let text = std::str::from_utf8(&bytes).map_err(|e| CliError::Format(e.to_string()))?;
            SpecFile::parse(text)?.build()?
        }
    };
    AlgebraFile::from_built(&built)
}

fn triple_witness(t: &AlgebraTable, [i, j, k]: [usize; 3]) -> Result<Value, CliError> {
    let (x, y, z) = (t.basis_vector(i), t.basis_vector(j), t.basis_vector(k));
    let lhs = t.bracket(&x, &t.bracket(&y, &z)?)?;
    let a = t.bracket(&t.bracket(&x, &y)?, &z)?;
    let b = t.bracket(&t.bracket(&x, &z)?, &y)?;
    let rhs: Vec<_> = a.iter().zip(&b).map(|(p, q)| p - q).collect();
    let labels = t.labels();
    Ok(json!({
        "indices": [i, j, k],
        "labels": [labels[i], labels[j], labels[k]],
        "lhs": vector(&lhs),
        "rhs": vector(&rhs),
    }))
}

/// Records a failing Leibniz check; returns `true` when the identity holds.
fn leibniz_verdict(r: &mut ReportDocument, t: &AlgebraTable) -> Result<bool, CliError> {
    let start = Instant::now();
    let violation = t.leibniz_violation();
    r.timing("leibniz", start.elapsed());
    r.verdict("leibniz", violation.is_none());
    if let Some(v) = violation {
        r.witness("leibniz_violation", triple_witness(t, v)?);
    }
    Ok(violation.is_none())
}

fn cmd_verify(path: &Path) -> Result<(ReportDocument, i32), CliError> {
    let loaded = load(path)?;
    let mut r = ReportDocument::new("verify", loaded.digest.clone());
    let ok = leibniz_verdict(&mut r, &loaded.table)?;
    Ok((r, if ok { EXIT_OK } else { EXIT_NEGATIVE }))
}

fn cmd_info(path: &Path) -> Result<(ReportDocument, i32), CliError> {
    let loaded = load(path)?;
    let t = &loaded.table;
    let mut r = ReportDocument::new("info", loaded.digest.clone());
    let start = Instant::now();
    let squares = t.squares_ideal()?;
    let series = t.derived_series();
    r.verdict("dim", t.dim())
        .verdict("basis", t.labels().to_vec())
        .verdict("leibniz", t.is_leibniz())
        .verdict("lie", t.is_lie())
        .verdict("squares_ideal_dim", squares.dim())
        .verdict(
            "derived_series_dims",
            series.terms.iter().map(|s| s.dim()).collect::<Vec<_>>(),
        )
        .verdict("right_annihilator_dim", t.right_annihilator().dim())
        .witness("squares_ideal", subspace(&squares));
    r.timing("info", start.elapsed());
    Ok((r, EXIT_OK))
}

fn cmd_classify(path: &Path) -> Result<(ReportDocument, i32), CliError> {
    let loaded = load(path)?;
    let t = &loaded.table;
    let mut r = ReportDocument::new("classify", loaded.digest.clone());
    if !leibniz_verdict(&mut r, t)? {
        return Ok((r, EXIT_NEGATIVE));
    }
    let start = Instant::now();
    let series = t.derived_series();
    r.verdict("lie", t.is_lie())
        .verdict("solvable", series.solvable);
    let semisimple = is_semisimple_leibniz(t)?;
    r.verdict("semisimple", semisimple);
    let mut criteria = serde_json::Map::new();
    criteria.insert("solvable".into(), "derived series reaches 0".into());
    criteria.insert(
        "semisimple".into(),
        "Killing form of L/I is nondegenerate".into(),
    );
    criteria.insert(
        "lie_simple".into(),
        "L/I is a simple Lie algebra (centroid split)".into(),
    );
    criteria.insert(
        "simple".into(),
        "Lie-simple, [L,L] != I, I irreducible over L/I".into(),
    );
    let mut notes = Vec::new();
    let mut code = EXIT_OK;
    match is_lie_simple(t) {
        Ok(v) => {
            r.verdict("lie_simple", v);
        }
        Err(CoreError::NonSplitUnsupported) => {
            r.verdict("lie_simple", Value::Null);
            notes.push(
                "NonSplitUnsupported: L/I has a summand that does not split over Q".to_string(),
            );
            code = EXIT_UNSUPPORTED;
        }
        Err(e) => return Err(e.into()),
    }
    let declared = (!loaded.file.irreducible_over().is_empty()).then_some(true);
    if code == EXIT_OK {
        match is_simple_leibniz(t, declared) {
            Ok(v) => {
                r.verdict("simple", v);
            }
            Err(CoreError::UndecidableIrreducibility(what)) => {
                r.verdict("simple", Value::Null);
                notes.push(format!(
                    "UndecidableIrreducibility: irreducibility of I over {what} needs an irreducible_over attribute"
                ));
                code = EXIT_UNSUPPORTED;
            }
            Err(CoreError::NonSplitUnsupported) => {
                r.verdict("simple", Value::Null);
                notes.push(
                    "NonSplitUnsupported: L/I has a summand that does not split over Q".to_string(),
                );
                code = EXIT_UNSUPPORTED;
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        r.verdict("simple", Value::Null);
    }
    r.timing("classify", start.elapsed());
    r.witness("criteria", Value::Object(criteria));
    if !notes.is_empty() {
        r.witness("notes", notes);
    }
    Ok((r, code))
}

fn class_name(c: SummandClass) -> &'static str {
    match c {
        SummandClass::Simple => "simple",
        SummandClass::LieSimple => "lie-simple",
    }
}

fn cmd_decompose(path: &Path) -> Result<(ReportDocument, i32), CliError> {
    let loaded = load(path)?;
    let t = &loaded.table;
    let mut r = ReportDocument::new("decompose", loaded.digest.clone());
    if !leibniz_verdict(&mut r, t)? {
        return Ok((r, EXIT_NEGATIVE));
    }
    let layout = load_layout(&loaded)?;
    let start = Instant::now();
    if !is_semisimple_leibniz(t)? {
        r.verdict("semisimple", false)
            .verdict("status", "not-semisimple");
        return Ok((r, EXIT_NEGATIVE));
    }
    let d = decompose_semisimple(t, &layout)?;
    r.timing("decompose", start.elapsed());
    r.verdict("semisimple", true);
    let labels: Vec<&str> = layout.components.iter().map(|c| c.label()).collect();
    if d.is_decomposed() {
        r.verdict("status", "decomposed")
            .verdict("summands", d.summands.len());
        let summands: Vec<Value> = d
            .summands
            .iter()
            .map(|s| {
                json!({
                    "label": s.label,
                    "class": class_name(s.class),
                    "irreducible": s.irreducible,
                    "component": subspace(&s.component),
                    "module": subspace(&s.module),
                })
            })
            .collect();
        r.witness("summands", summands);
        return Ok((r, EXIT_OK));
    }
    r.verdict("status", "not-decomposable");
    if let Some(w) = &d.witness {
        r.witness(
            "intersection",
            json!({
                "components": [labels[w.p], labels[w.q]],
                "dim": w.intersection.dim(),
                "basis": subspace(&w.intersection)["basis"],
            }),
        );
    }
    if let Some(c) = &d.checks {
        r.witness(
            "checks",
            json!({
                "each_is_ideal": c.each_is_ideal,
                "pairwise_annihilating": c.pairwise_annihilating,
                "spans_algebra": c.spans_algebra,
            }),
        );
    }
    Ok((r, EXIT_NEGATIVE))
}

fn cmd_module_decompose(path: &Path, component: &str) -> Result<(ReportDocument, i32), CliError> {
    let loaded = load(path)?;
    let t = &loaded.table;
    let mut r = ReportDocument::new("module-decompose", loaded.digest.clone());
    let layout = load_layout(&loaded)?;
    let (_, c) = layout.component(component)?;
    let start = Instant::now();
    let chains = decompose_over(t, &layout.ideal, c)?;
    let module = induced_module(t, &layout.ideal, c)?;
    let spaces = weight_spaces(&module, c.label())?;
    let d = decompose_sl2(&module, c.label())?;
    r.timing("module_decompose", start.elapsed());
    let weight_mult: serde_json::Map<String, Value> = spaces
        .iter()
        .map(|(w, s)| (w.to_string(), s.dim().into()))
        .collect();
    let mult: serde_json::Map<String, Value> = d
        .multiplicities
        .iter()
        .map(|(hw, count)| (format!("V({hw})"), (*count).into()))
        .collect();
    r.verdict("component", component)
        .verdict("module_dim", layout.ideal.dim())
        .verdict(
            "chain_dims",
            chains.iter().map(|ch| ch.dim()).collect::<Vec<_>>(),
        )
        .verdict("irreducible", chains.len() == 1)
        .verdict("weight_multiplicities", Value::Object(weight_mult))
        .verdict("summand_multiplicities", Value::Object(mult));
    let chain_values: Vec<Value> = chains
        .iter()
        .map(|ch| {
            json!({
                "highest_weight": ch.highest_weight,
                "vectors": ch.vectors.iter().map(|v| vector(v)).collect::<Vec<_>>(),
            })
        })
        .collect();
    r.witness("chains", chain_values);
    Ok((r, EXIT_OK))
}

fn write_to(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn emit(stdout: &mut dyn Write, text: &str) -> Result<(), CliError> {
    stdout
        .write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })
}

/// Runs one command, writing its output to `stdout` (or `--out`), and
/// returns the exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let render = |r: &ReportDocument| match cli.output {
        OutputFormat::Text => r.render_text(),
        OutputFormat::Machine => r.render_machine(),
    };
    let (report, code) = match &cli.command {
        Command::Build {
            name,
            m,
            t,
            n,
            spec,
        } => {
            let start = Instant::now();
            let file = build(*name, *m, t.as_deref(), *n, spec.as_deref())?;
            let text = file.render();
            let Some(out) = &cli.out else {
                emit(stdout, &text)?;
                return Ok(EXIT_OK);
            };
            write_to(out, &text)?;
            let mut r = ReportDocument::new("build", String::new());
            r.verdict("dim", file.dim)
                .verdict("nonzero_products", file.brackets.len())
                .verdict("ideal_dim", file.layout.as_ref().map(|l| l.ideal.len()))
                .verdict("output_digest", digest(text.as_bytes()))
                .timing("build", start.elapsed());
            emit(stdout, &render(&r))?;
            return Ok(EXIT_OK);
        }
        Command::Verify { path } => cmd_verify(path)?,
        Command::Info { path } => cmd_info(path)?,
        Command::Classify { path } => cmd_classify(path)?,
        Command::Decompose { path } => cmd_decompose(path)?,
        Command::ModuleDecompose { path, component } => cmd_module_decompose(path, component)?,
    };
    match &cli.out {
        Some(out) => write_to(out, &render(&report))?,
        None => emit(stdout, &render(&report))?,
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_core::linalg::vector_from_i64;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("leibniz").chain(args.iter().copied()))
    }

    #[test]
    fn parses_global_flags_after_subcommand() {
        let cli = parse(&["build", "simple", "--m", "2", "--output", "machine"]).unwrap();
        assert_eq!(cli.output, OutputFormat::Machine);
        assert!(matches!(
            cli.command,
            Command::Build {
                name: BuilderName::Simple,
                m: Some(2),
                ..
            }
        ));
        assert!(parse(&["build", "nothing"]).is_err());
        assert!(parse(&["module-decompose", "f.json"]).is_err());
    }

    #[test]
    fn builder_parameters_are_checked() {
        assert!(matches!(
            build(BuilderName::Simple, None, None, None, None),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            build(BuilderName::Sl2, Some(1), None, None, None),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            build(BuilderName::Example2, None, Some("1,2"), None, None),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            build(BuilderName::LieSimple, None, Some("1,x"), None, None),
            Err(CliError::Usage(_))
        ));
        assert!(build(BuilderName::Example1, None, None, Some(1), None).is_err());
        let f = build(BuilderName::Simple, Some(0), None, None, None).unwrap();
        assert_eq!(f.dim, 4);
        let f = build(BuilderName::Example3, None, None, None, None).unwrap();
        assert_eq!((f.dim, f.layout.unwrap().ideal.len()), (10, 4));
    }

    #[test]
    fn build_writes_file_to_stdout() {
        let cli = parse(&["build", "sl2"]).unwrap();
        let mut buf = Vec::new();
        assert_eq!(run(&cli, &mut buf).unwrap(), 0);
        let f = AlgebraFile::parse(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(f.table().unwrap(), build_sl2());
    }

    #[test]
    fn violation_witness_reports_both_sides() {
        let t = build_sl2()
            .with_product(0, 2, &vector_from_i64(&[1, 0, 0]))
            .unwrap();
        let v = t.leibniz_violation().unwrap();
        let w = triple_witness(&t, v).unwrap();
        assert_ne!(w["lhs"], w["rhs"]);
    }
}
