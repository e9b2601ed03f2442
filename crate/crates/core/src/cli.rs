//! The `bsk` command line.

use crate::basicalg::{degenerate, is_special_biserial, presentation, radical_layers, GradingFunction};
use crate::classifier::{classify, evidence, grid, render_grid, EvidenceOptions};
use crate::error::{Error, Result};
use crate::posetrep::{gamma_m, nazarova_wild, width, Poset};
use crate::quiverkit::{borel2_presentation, classify_ade, separated, Multigraph};
use crate::schur::{build_algebra, BasisKind, LinearCombo, ScaleCap, StructureAlgebra};
use crate::symcomb::{Composition, PairOrbit};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;

const PATH_CAP: usize = 200_000;

#[derive(Parser, Debug)]
#[command(name = "bsk", version, about = "Borel-Schur algebras: structure constants, quivers and representation type")]
struct Cli {
    /// Report errors on stderr as a JSON object.
    #[arg(long, global = true)]
    json_errors: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Shape {
    n: usize,
    r: usize,
    /// Characteristic: 0 or a prime.
    #[arg(short = 'p', long = "char", default_value_t = 0)]
    p: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the basis and its dimension.
    Basis {
        #[command(flatten)]
        shape: Shape,
        /// Use the full Schur algebra instead of the Borel subalgebra.
        #[arg(long)]
        full_schur: bool,
    },
    /// Print the product ξ_{i,j} · ξ_{k,l}.
    Mult {
        #[command(flatten)]
        shape: Shape,
        i: String,
        j: String,
        k: String,
        l: String,
        #[arg(long)]
        full_schur: bool,
    },
    /// Print the nonzero products of basis elements.
    Table {
        #[command(flatten)]
        shape: Shape,
        /// Write the algebra as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        full_schur: bool,
    },
    /// Ext-quiver with relations.
    Quiver {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Idempotent truncation by weights, e.g. `--idempotents 030,120,111`.
    Truncate {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, required = true)]
        idempotents: String,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Separated quiver with the ADE type of each component.
    Separated {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Degenerate by a preset grading and test the limit algebra.
    Degenerate {
        #[arg(long, value_enum)]
        preset: Preset,
        #[arg(short = 'p', long = "char", default_value_t = 0)]
        p: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Poset tools.
    Poset {
        #[command(subcommand)]
        command: PosetCommand,
    },
    /// Representation type, optionally with the supporting checks.
    Classify {
        n: usize,
        r: usize,
        p: u64,
        #[arg(long)]
        evidence: bool,
        /// Print the verdict as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Representation type over a range of parameters.
    Grid {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 12)]
        r_max: usize,
        #[arg(long, value_delimiter = ',', default_values_t = vec![0, 2, 3, 5])]
        chars: Vec<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Preset {
    S32,
}

#[derive(Subcommand, Debug)]
enum PosetCommand {
    /// Search for the six minimal wild posets.
    Nazarova {
        #[command(flatten)]
        source: PosetSource,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct PosetSource {
    /// Poset JSON file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// A bundled poset.
    #[arg(long, value_enum)]
    bundled: Option<Bundled>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Bundled {
    #[value(name = "gamma_M", alias = "gamma_m")]
    GammaM,
}

fn write_file(path: &PathBuf, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))
}

fn kind(full: bool) -> BasisKind {
    if full {
        BasisKind::Full
    } else {
        BasisKind::Borel
    }
}

fn algebra(shape: &Shape, full: bool) -> Result<StructureAlgebra> {
    build_algebra(shape.n, shape.r, shape.p, kind(full), &ScaleCap::from_env()?)
}

/// Weights separated by commas (`030,120`), or parenthesised tuples
/// (`(0,3,0),(1,2,0)`).
fn parse_weights(s: &str) -> Result<Vec<Composition>> {
    let s = s.trim();
    if s.contains('(') {
        s.split(')')
            .map(|t| t.trim_start_matches(',').trim())
            .filter(|t| !t.is_empty())
            .map(Composition::parse)
            .collect()
    } else {
        s.split(',').map(Composition::parse).collect()
    }
}

type Out<'a> = &'a mut dyn Write;

fn emit(out: Out, s: &str) -> Result<()> {
    out.write_all(s.as_bytes()).map_err(|e| Error::invalid(format!("cannot write output: {e}")))
}

macro_rules! say {
    ($out:expr, $($t:tt)*) => { emit($out, &format!("{}\n", format!($($t)*)))? };
}

fn cmd_basis(out: Out, shape: &Shape, full: bool) -> Result<()> {
    let a = algebra(shape, full)?;
    for l in a.basis() {
        say!(out, "{l}");
    }
    say!(out, "dim = {}", a.dim());
    Ok(())
}

fn cmd_mult(out: Out, shape: &Shape, idx: [&str; 4], full: bool) -> Result<()> {
    let a = algebra(shape, full)?;
    let find = |i: &str, j: &str| -> Result<usize> {
        let o = PairOrbit::parse(shape.n, i, j)?;
        a.index_of_orbit(&o).ok_or_else(|| Error::invalid(format!("{o} is not in the basis")))
    };
    let x = find(idx[0], idx[1])?;
    let y = find(idx[2], idx[3])?;
    say!(out, "{}", a.render(&a.product(x, y)));
    Ok(())
}

fn cmd_table(out: Out, shape: &Shape, json: &Option<PathBuf>, full: bool) -> Result<()> {
    let a = algebra(shape, full)?;
    for &(h, l) in a.table().keys() {
        let v = a.product(h, l);
        if !v.is_zero() {
            say!(out, "{} · {} = {}", a.label(h), a.label(l), a.render(&v));
        }
    }
    if let Some(path) = json {
        write_file(path, &a.to_json())?;
    }
    Ok(())
}

fn quiver_report(out: Out, a: &StructureAlgebra, dot: &Option<PathBuf>, json: &Option<PathBuf>) -> Result<()> {
    let pres = presentation(a, PATH_CAP)?;
    let q = &pres.quiver;
    say!(out, "vertices: {}", q.quiver.vertices().join(" "));
    for ar in q.quiver.arrows() {
        say!(
            out,
            "arrow {}: {} -> {} [{}]",
            ar.label,
            q.quiver.vertices()[ar.src],
            q.quiver.vertices()[ar.dst],
            ar.kind
        );
    }
    if q.relations.is_empty() {
        say!(out, "relations: none");
    } else {
        for rel in q.rendered_relations() {
            say!(out, "relation {rel}");
        }
    }
    if let Some(path) = dot {
        write_file(path, &q.to_dot())?;
    }
    if let Some(path) = json {
        write_file(path, &q.to_json())?;
    }
    Ok(())
}

fn cmd_quiver(out: Out, shape: &Shape, dot: &Option<PathBuf>, json: &Option<PathBuf>) -> Result<()> {
    let a = algebra(shape, false)?;
    quiver_report(out, &a, dot, json)?;
    if shape.n == 2 {
        let pres = presentation(&a, PATH_CAP)?;
        let closed = borel2_presentation(shape.r, shape.p)?;
        let same = pres.quiver.quiver.typed_arrow_multiset() == closed.quiver.typed_arrow_multiset()
            && pres.quiver.rendered_relations() == closed.rendered_relations();
        say!(out, "matches closed-form presentation: {}", if same { "yes" } else { "no" });
        if !same {
            return Err(Error::check("computed presentation differs from the closed form"));
        }
    }
    Ok(())
}

fn cmd_truncate(out: Out, shape: &Shape, idem: &str, dot: &Option<PathBuf>) -> Result<()> {
    let a = algebra(shape, false)?;
    let t = a.truncate_by_weights(&parse_weights(idem)?)?;
    say!(out, "dim = {}", t.dim());
    let layers = radical_layers(&t)?;
    for k in 1..layers.loewy_length() {
        match layers.labels(k) {
            Some(ls) => {
                let names: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
                say!(out, "rad^{k}: {}", names.join(" "));
            }
            None => say!(out, "rad^{k}: dimension {}", layers.layers[k - 1].rank()),
        }
    }
    quiver_report(out, &t, dot, &None)
}

fn cmd_separated(out: Out, shape: &Shape, dot: &Option<PathBuf>) -> Result<()> {
    let a = algebra(shape, false)?;
    let q = presentation(&a, PATH_CAP)?.quiver.quiver;
    let sep = separated(&q);
    for c in sep.components() {
        let names: Vec<&str> = c.iter().map(|&v| sep.vertices()[v].as_str()).collect();
        let t = classify_ade(&Multigraph::underlying(&sep, &c));
        say!(out, "component {}: {t}", names.join(" "));
    }
    if let Some(path) = dot {
        write_file(
            path,
            &crate::quiverkit::QuiverWithRelations { quiver: sep, relations: Vec::new(), char: shape.p }.to_dot(),
        )?;
    }
    Ok(())
}

fn cmd_degenerate(out: Out, p: u64, json: &Option<PathBuf>) -> Result<()> {
    let a = build_algebra(3, 2, p, BasisKind::Borel, &ScaleCap::from_env()?)?;
    let phi = GradingFunction::preset_s32(&a)?;
    phi.check_admissible(&a)?;
    say!(out, "grading admissible: yes");
    let d = degenerate(&a, &phi)?;
    say!(out, "associative: yes ({} triples)", d.triples_checked);
    let b = &d.algebra;
    let find = |i: &str, j: &str| -> Result<usize> {
        b.index_of_orbit(&PairOrbit::parse(3, i, j)?).ok_or_else(|| Error::check("basis element missing"))
    };
    let long = b.product(find("12", "22")?, find("22", "23")?);
    say!(out, "ξ_{{12,22}} ·₀ ξ_{{22,23}} = {}", b.render(&long));
    if long != LinearCombo::basis(find("12", "32")?) {
        return Err(Error::check("long product does not degenerate to ξ_{12,32}"));
    }
    let layers = radical_layers(b)?;
    if let Some(r2) = layers.labels(2) {
        let names: Vec<String> = r2.iter().map(|l| l.to_string()).collect();
        say!(out, "rad²: {}", names.join(" "));
    }
    let sb = is_special_biserial(b)?;
    say!(out, "special biserial: {}", if sb.special_biserial { "yes" } else { "no" });
    if let Some(path) = json {
        write_file(path, &b.to_json())?;
    }
    if !sb.special_biserial {
        return Err(Error::check(format!("degenerate algebra is not special biserial: {:?}", sb.witness)));
    }
    Ok(())
}

fn cmd_nazarova(out: Out, source: &PosetSource, dot: &Option<PathBuf>, as_json: bool) -> Result<()> {
    let poset = match (&source.file, source.bundled) {
        (Some(f), _) => {
            let s =
                std::fs::read_to_string(f).map_err(|e| Error::invalid(format!("cannot read {}: {e}", f.display())))?;
            Poset::from_json(&s)?
        }
        (None, Some(Bundled::GammaM)) => gamma_m(),
        (None, None) => return Err(Error::invalid("give --file or --bundled")),
    };
    let rep = nazarova_wild(&poset);
    let (w, anti) = width(&poset);
    if as_json {
        let v = json!({
            "elements": poset.len(),
            "width": w,
            "max_antichain": poset.labels_of(&anti),
            "wild": rep.wild,
            "pattern": rep.pattern,
            "embedding": rep.embedding,
        });
        say!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"));
    } else {
        say!(out, "elements: {}", poset.len());
        say!(out, "width: {w} ({})", poset.labels_of(&anti).join(" "));
        match (&rep.pattern, &rep.embedding) {
            (Some(p), Some(e)) => say!(out, "wild: yes, contains {p} as {}", e.join(" ")),
            _ => say!(out, "wild: no"),
        }
    }
    if let Some(path) = dot {
        write_file(path, &poset.to_dot())?;
    }
    Ok(())
}

fn cmd_classify(out: Out, n: usize, r: usize, p: u64, with_evidence: bool, as_json: bool) -> Result<()> {
    if with_evidence {
        let opts = EvidenceOptions { cap: ScaleCap::from_env()?, ..EvidenceOptions::default() };
        let v = evidence(n, r, p, &opts)?;
        if as_json {
            say!(out, "{}", v.to_json());
        } else {
            emit(out, &v.report())?;
        }
    } else {
        let t = classify(n, r, p)?;
        if as_json {
            say!(out, "{}", json!({ "n": n, "r": r, "p": p, "rep_type": t }));
        } else {
            say!(out, "{t}");
        }
    }
    Ok(())
}

fn cmd_grid(out: Out, n_max: usize, r_max: usize, chars: &[u64], as_json: bool) -> Result<()> {
    let cells = grid(n_max, r_max, chars)?;
    if as_json {
        let v: Vec<_> = cells.iter().map(|&(p, n, r, t)| json!({ "p": p, "n": n, "r": r, "rep_type": t })).collect();
        say!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"));
    } else {
        emit(out, &render_grid(&cells))?;
    }
    Ok(())
}

fn dispatch(cli: &Cli, out: Out) -> Result<()> {
    match &cli.command {
        Command::Basis { shape, full_schur } => cmd_basis(out, shape, *full_schur),
        Command::Mult { shape, i, j, k, l, full_schur } => cmd_mult(out, shape, [i, j, k, l], *full_schur),
        Command::Table { shape, json, full_schur } => cmd_table(out, shape, json, *full_schur),
        Command::Quiver { shape, dot, json } => cmd_quiver(out, shape, dot, json),
        Command::Truncate { shape, idempotents, dot } => cmd_truncate(out, shape, idempotents, dot),
        Command::Separated { shape, dot } => cmd_separated(out, shape, dot),
        Command::Degenerate { preset: Preset::S32, p, json } => cmd_degenerate(out, *p, json),
        Command::Poset { command: PosetCommand::Nazarova { source, dot, json } } => {
            cmd_nazarova(out, source, dot, *json)
        }
        Command::Classify { n, r, p, evidence, json } => cmd_classify(out, *n, *r, *p, *evidence, *json),
        Command::Grid { n_max, r_max, chars, json } => cmd_grid(out, *n_max, *r_max, chars, *json),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code: 0 on success, 1 when a check fails, 2 on bad input.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let json_errors = args.iter().any(|a| a == "--json-errors");
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            if json_errors {
                let v = json!({ "error": "usage", "message": e.to_string().trim() });
                let _ = writeln!(err, "{v}");
            } else {
                let _ = write!(err, "{e}");
            }
            return 2;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            if cli.json_errors {
                let v = json!({ "error": e.kind(), "message": e.to_string() });
                let _ = writeln!(err, "{v}");
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            if e.is_input_error() {
                2
            } else {
                1
            }
        }
    }
}
