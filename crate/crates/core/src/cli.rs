//! The `coxrestrict` command line.
//!
//! A source is a named reflection arrangement `W`, a named restriction
//! `W/T` (looked up in the preset corpus, or pinned by the first subset of
//! simple roots of type `T`), the family member `D:p:k`, or the path of an
//! arrangement file.
//!
//! Exit status: 0 on success, 1 on a verdict mismatch in `table`, 2 on
//! input errors, 3 when a size guard is exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arrangement::Arrangement;
use crate::chambers::{enumerate_chambers, ChamberSet, SignVector};
use crate::dpk::{self, CodeGuard, DpkParams, DpkReport, RegionCode};
use crate::error::{Error, Result};
use crate::roots::RootSystem;
use crate::scalar::Vector;
use crate::theorem::{
    check_restriction, restrict_by_roots, restriction_by_name, search_factoring_base, split_name, theorem_table, Corpus,
    FactorizationReport, Restriction, RootSpec, RowOutcome, SearchOptions, TableRow,
};

pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "coxrestrict", version, about = "Chambers and rank-generating functions of restricted Coxeter arrangements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Print wall-clock seconds (otherwise `-`, keeping output reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Preset table to use instead of the built-in one.
    #[arg(long, global = true)]
    pub corpus: Option<PathBuf>,
    /// Stop enumerating past this many chambers.
    #[arg(long, global = true)]
    pub max_chambers: Option<usize>,
    /// Refuse arrangements with more hyperplanes.
    #[arg(long, global = true)]
    pub max_hyperplanes: Option<usize>,
    /// Largest group order walked when building base candidates.
    #[arg(long, global = true)]
    pub max_order: Option<u64>,
    /// Refuse intersection lattices of higher rank.
    #[arg(long, global = true)]
    pub max_rank: Option<usize>,
    /// Largest `D_p^k` code set enumerated.
    #[arg(long, global = true)]
    pub max_codes: Option<u128>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Rows,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count the chambers, optionally listing sign vectors and witnesses.
    Chambers {
        source: String,
        #[arg(long)]
        list: bool,
    },
    /// Rank-generating function of the poset of regions.
    Zeta {
        source: String,
        /// `all`, `dominant`, or a sign string such as `+-+`.
        #[arg(long, default_value = "dominant")]
        base: String,
    },
    /// Exponents, read off the characteristic polynomial.
    Exponents { source: String },
    /// Search for a base region whose ζ factors by the exponents.
    Check {
        source: String,
        /// Skip the restricted-root candidates and search all bases at once.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Closed form against brute force for `D:p:k`.
    Dpk { source: String },
    /// Run the preset corpus (all rows, or the named ones).
    Table { names: Vec<String> },
    /// Write the restricted arrangement of `W/T` to the output file.
    Restrict { source: String },
}

/// A parsed source with whatever structure came with it.
pub enum Source {
    Reflection(RootSystem),
    Restriction(Box<Restriction>, Option<Vec<usize>>),
    Dpk(DpkParams),
    File(PathBuf, Arrangement),
}

impl Source {
    pub fn parse(text: &str, corpus: &Corpus) -> Result<Source> {
        let path = Path::new(text);
        if path.is_file() {
            return Ok(Source::File(path.to_path_buf(), Arrangement::read_file(path)?));
        }
        if text.starts_with("D:") {
            return Ok(Source::Dpk(text.parse()?));
        }
        if !text.contains('/') {
            return Ok(Source::Reflection(RootSystem::from_label(text)?));
        }
        if let Some(p) = corpus.get(text) {
            let r = restriction_by_name(p)?;
            let pinned = match &p.spec {
                RootSpec::Simple(j) => Some(j.iter().map(|i| i - 1).collect()),
                RootSpec::Coefficients(_) => None,
            };
            return Ok(Source::Restriction(Box::new(r), pinned));
        }
        let (w, t) = split_name(text)?;
        let rs = RootSystem::build(w)?;
        let j = rs
            .simple_subsets_of_type(&t)
            .into_iter()
            .next()
            .ok_or_else(|| Error::parse(text, format!("no simple roots of {} have type {t}", rs.kind())))?;
        let roots: Vec<Vector> = j.iter().map(|&i| rs.simple_roots()[i].clone()).collect();
        let r = restrict_by_roots(text, &rs, &roots)?;
        Ok(Source::Restriction(Box::new(r), Some(j)))
    }

    pub fn name(&self) -> String {
        match self {
            Source::Reflection(rs) => rs.kind().to_string(),
            Source::Restriction(r, _) => r.name.clone(),
            Source::Dpk(p) => p.to_string(),
            Source::File(p, _) => p.display().to_string(),
        }
    }

    pub fn arrangement(&self) -> Arrangement {
        match self {
            Source::Reflection(rs) => rs.coxeter_arrangement(),
            Source::Restriction(r, _) => r.restricted.clone(),
            Source::Dpk(p) => dpk::build_dpk(*p),
            Source::File(_, a) => a.clone(),
        }
    }

    /// A point of the distinguished base chamber: the dominant chamber of
    /// `W`, the chamber of `A^X` containing `λ_J` for `X` pinned by simple
    /// roots `J`, or the base `B_p` of `D_p^k`.
    pub fn dominant_point(&self) -> Result<Vector> {
        match self {
            Source::Reflection(rs) => Ok(rs.dominant_point()),
            Source::Restriction(r, Some(j)) => Ok(r
                .flat
                .coordinates(&r.root_system.parabolic_point(j))
                .expect("λ_J lies on the pinned flat")),
            Source::Dpk(p) => Ok(RegionCode::base(p.p()).to_vector()),
            _ => Err(Error::parse(
                "--base",
                "this source has no dominant chamber; use `all` or a sign string",
            )),
        }
    }
}

impl Global {
    pub fn options(&self) -> SearchOptions {
        let mut o = SearchOptions::default();
        if let Some(n) = self.max_chambers {
            o.chambers.max_chambers = n;
        }
        if let Some(n) = self.max_hyperplanes {
            o.chambers.max_hyperplanes = n;
            o.lattice.max_hyperplanes = n;
        }
        if let Some(n) = self.max_order {
            o.group.max_order = n;
        }
        if let Some(n) = self.max_rank {
            o.lattice.max_rank = n;
        }
        o
    }

    pub fn code_guard(&self) -> CodeGuard {
        let mut g = CodeGuard::default();
        if let Some(n) = self.max_codes {
            g.max_codes = n;
        }
        g
    }

    pub fn corpus(&self) -> Result<Corpus> {
        match &self.corpus {
            Some(p) => Corpus::read_file(p),
            None => Ok(Corpus::builtin()),
        }
    }
}

/// Runs the command line `args` (program name first), writing the report to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return EXIT_INPUT;
            }
            let _ = write!(out, "{text}");
            return 0;
        }
    };
    if let Some(n) = cli.global.threads {
        // Fails only if the pool already exists, e.g. on a second call.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let mut report = Vec::new();
    let status = match execute(&cli, &mut report) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return if e.is_guard() { EXIT_GUARD } else { EXIT_INPUT };
        }
    };
    let written = match &cli.global.output {
        Some(p) if !matches!(cli.command, Command::Restrict { .. }) => std::fs::write(p, &report),
        _ => out.write_all(&report),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_INPUT;
    }
    status
}

fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<i32> {
    let g = &cli.global;
    let opts = g.options();
    let corpus = g.corpus()?;
    match &cli.command {
        Command::Chambers { source, list } => {
            let src = Source::parse(source, &corpus)?;
            let set = enumerate_chambers(&src.arrangement(), opts.chambers)?;
            writeln!(out, "chambers: {}", set.len())?;
            if *list {
                write!(out, "{}", set.export())?;
            }
        }
        Command::Zeta { source, base } => {
            let src = Source::parse(source, &corpus)?;
            let a = src.arrangement();
            let set = enumerate_chambers(&a, opts.chambers)?;
            zeta(&src, &a, &set, base, out)?;
        }
        Command::Exponents { source } => {
            let src = Source::parse(source, &corpus)?;
            let a = src.arrangement();
            let chi = a.characteristic_polynomial(opts.lattice)?;
            writeln!(out, "characteristic polynomial: {chi}")?;
            let e = crate::arrangement::exponents_of_characteristic(&chi, a.len())?;
            writeln!(out, "exponents: {e}")?;
        }
        Command::Check { source, exhaustive } => {
            let src = Source::parse(source, &corpus)?;
            let report = match &src {
                Source::Restriction(r, _) => check_restriction(
                    r,
                    &SearchOptions {
                        reduced_first: !exhaustive,
                        ..opts
                    },
                )?,
                _ => search_factoring_base(&src.name(), &src.arrangement(), &opts)?,
            };
            write_report(&report, g, out)?;
        }
        Command::Dpk { source } => {
            let params: DpkParams = source.parse()?;
            let r = dpk::report(params, g.code_guard())?;
            match g.format {
                Format::Rows => writeln!(out, "{}\n{r}", DpkReport::HEADER)?,
                Format::Text => {
                    writeln!(out, "arrangement: {params}")?;
                    writeln!(out, "hyperplanes: {}", r.hyperplanes)?;
                    let e: Vec<String> = r.exponents.iter().map(u32::to_string).collect();
                    writeln!(out, "exponents: {}", e.join(" "))?;
                    writeln!(out, "zeta: {}", dpk::zeta_closed(params))?;
                    writeln!(out, "closed form matches brute force: {}", yes_no(r.zeta_matches))?;
                    writeln!(out, "wall rules consistent: {}", yes_no(r.walls_consistent))?;
                }
            }
            if !(r.zeta_matches && r.walls_consistent) {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Table { names } => {
            let rows = theorem_table(&corpus.select(names)?, &opts);
            return table(&rows, g, out);
        }
        Command::Restrict { source } => {
            let src = Source::parse(source, &corpus)?;
            let Source::Restriction(r, _) = &src else {
                return Err(Error::parse(source.as_str(), "expected a restriction W/T"));
            };
            let path = g
                .output
                .as_ref()
                .ok_or_else(|| Error::parse("restrict", "--output is required"))?;
            r.restricted.write_file(path)?;
            writeln!(
                out,
                "wrote {}: {} hyperplanes in dimension {}",
                path.display(),
                r.restricted.len(),
                r.restricted.dim()
            )?;
        }
    }
    Ok(0)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn zeta(src: &Source, a: &Arrangement, set: &ChamberSet, base: &str, out: &mut Vec<u8>) -> Result<()> {
    let index = match base {
        "all" => {
            let all: Vec<usize> = (0..set.len()).collect();
            let census = set.zeta_census(&all);
            writeln!(out, "bases: {}", set.len())?;
            for (z, n) in &census {
                writeln!(out, "{n}\t{z}")?;
            }
            let same = if census.len() == 1 { "identical" } else { "not identical" };
            writeln!(out, "{same} for all bases")?;
            return Ok(());
        }
        "dominant" => set.locate(a, &src.dominant_point()?).ok_or(Error::BaseNotAChamber)?,
        signs => {
            let s: SignVector = signs.parse()?;
            if s.len() != a.len() {
                return Err(Error::parse(
                    "--base",
                    format!("sign string has {} entries, arrangement has {} hyperplanes", s.len(), a.len()),
                ));
            }
            set.position(&s).ok_or(Error::BaseNotAChamber)?
        }
    };
    writeln!(out, "base: {}", set.get(index).signs)?;
    writeln!(out, "zeta: {}", set.zeta(index))?;
    Ok(())
}

fn write_report(r: &FactorizationReport, g: &Global, out: &mut Vec<u8>) -> Result<()> {
    match g.format {
        Format::Text => writeln!(out, "{r}")?,
        Format::Rows => writeln!(out, "{}\n{}", FactorizationReport::ROW_HEADER, r.row(g.timing))?,
    }
    Ok(())
}

fn table(rows: &[TableRow], g: &Global, out: &mut Vec<u8>) -> Result<i32> {
    match g.format {
        Format::Rows => writeln!(out, "{}", TableRow::HEADER)?,
        Format::Text => {}
    }
    for row in rows {
        match g.format {
            Format::Rows => writeln!(out, "{}", row.row(g.timing))?,
            Format::Text => {
                let what = match &row.outcome {
                    RowOutcome::Done(r) => r.summary(),
                    RowOutcome::Skipped(why) => format!("skipped ({why})"),
                    RowOutcome::Failed { message, .. } => format!("error: {message}"),
                };
                let status = if row.matches() { "" } else { " MISMATCH" };
                writeln!(out, "{}: {what}; expected {}{status}", row.name, row.expected)?;
            }
        }
    }
    if rows.iter().any(|r| !r.matches()) {
        Ok(EXIT_MISMATCH)
    } else if rows.iter().any(|r| matches!(r.outcome, RowOutcome::Failed { guard: true, .. })) {
        Ok(EXIT_GUARD)
    } else if rows.iter().any(|r| matches!(r.outcome, RowOutcome::Failed { .. })) {
        Ok(EXIT_INPUT)
    } else {
        Ok(0)
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("coxrestrict").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn zeta_a2_all_bases() {
        let (code, out, _) = call(&["zeta", "A2", "--base", "all"]);
        assert_eq!(code, 0);
        assert!(out.contains("6\t1 + 2t + 2t^2 + t^3"), "{out}");
        assert!(out.contains("identical for all bases"));
        assert!(!out.contains("not identical"));
    }

    #[test]
    fn check_dpk_and_exponents() {
        let (code, out, _) = call(&["check", "D:5:1"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("factors: yes; exponents 1 3 5 5 7; witness found\n"), "{out}");
        let (_, out, _) = call(&["exponents", "B3"]);
        assert!(out.contains("exponents: 1 3 5"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["zeta", "Q7"]).0, EXIT_INPUT);
        assert_eq!(call(&["frobnicate"]).0, EXIT_INPUT);
        assert_eq!(call(&["chambers", "A3", "--max-chambers", "10"]).0, EXIT_GUARD);
        assert_eq!(call(&["zeta", "A2", "--base", "+-"]).0, EXIT_INPUT);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn restriction_sources() {
        let (code, out, _) = call(&["zeta", "A4/A1"]);
        assert_eq!(code, 0);
        assert!(out.contains("zeta: 1 + 3t + 5t^2 + 6t^3 + 5t^4 + 3t^5 + t^6"), "{out}");
        // Not in the corpus: pinned by the first simple subset of the type.
        let (code, out, _) = call(&["chambers", "A5/A2"]);
        assert_eq!(code, 0);
        assert!(out.contains("chambers: 24"), "{out}");
    }
}
