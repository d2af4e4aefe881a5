//! Command-line front end.
//!
//! Exit codes: 0 success, 1 validation or verification failure, 2 usage
//! error. Human-readable summaries go to stdout ahead of a single JSON line;
//! timings go to stderr so stdout stays byte-identical across runs.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::classify::{classify_with_profile, side_period, Family};
use crate::enumerate::{
    axial_generators, circular_generators, counts_table, enumerate_axial, enumerate_circular,
    euler_phi,
};
use crate::error::Error;
use crate::oracle::{
    census_full, gcd_counterexample, sweep_period3, theorem_class_sets, verify_identity, with_jobs,
    TheoremFamily, CENSUS_MAX_N,
};
use crate::polygon::SideTuple;
use crate::render::{gallery_svg, RenderOptions};

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Inclusive range of `m` values, written `3..30`, `3..=30` or `7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MRange {
    pub from: u32,
    pub to: u32,
}

impl FromStr for MRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |v: &str| {
            v.trim()
                .parse::<u32>()
                .map_err(|e| format!("invalid integer {v:?}: {e}"))
        };
        let (from, to) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        Ok(MRange { from, to })
    }
}

impl MRange {
    fn check(&self) -> Result<(), Error> {
        if self.from <= 2 {
            return Err(Error::MTooSmall(self.from));
        }
        if self.from > self.to {
            return Err(Error::EmptyRange {
                from: self.from,
                to: self.to,
            });
        }
        Ok(())
    }

    fn values(&self) -> impl Iterator<Item = u32> {
        self.from..=self.to
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Axial,
    Circular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Sweep,
    Census,
    Identity,
    Gcd,
}

#[derive(Debug, Parser)]
#[command(name = "symgon", version, about = "Symmetric 3m-polygons: count, enumerate, verify, render")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form class counts for a range of m.
    Count {
        #[arg(long = "m")]
        m: MRange,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// List the class representatives of one family.
    Enumerate {
        #[arg(long = "m")]
        m: u32,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Classify a single polygon given by its sides.
    Classify {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        sides: Vec<u32>,
    },
    /// Exhaustive checks of the closed forms.
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long = "m")]
        m: Option<MRange>,
        #[arg(long = "n")]
        n: Option<usize>,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Write an SVG gallery of all class representatives.
    Render {
        #[arg(long = "m")]
        m: u32,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        axes: bool,
        #[arg(long)]
        labels: bool,
        #[arg(long, default_value_t = 240)]
        size: u32,
        #[arg(long)]
        columns: Option<usize>,
        #[arg(long, default_value_t = 1.5)]
        stroke: f64,
    },
}

/// One equivalence class as emitted by `enumerate` and `classify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecordOut {
    pub n: usize,
    pub m: Option<u32>,
    pub family: String,
    pub sides: Vec<u32>,
    pub generators: Option<Vec<u32>>,
    pub u: u64,
    pub rotation_order: usize,
    pub axis_count: usize,
}

impl ClassRecordOut {
    /// Builds the record for a valid tuple; `sides` holds the canonical form.
    ///
    /// Reversing direction turns `u` into `n - u`, so `u` is taken from the
    /// tuple spelled by the generators (the canonical tuple when there are
    /// none), which makes it a class invariant.
    pub fn from_tuple(t: &SideTuple) -> crate::Result<Self> {
        let (family, profile) = classify_with_profile(t)?;
        let canonical = t.canonical_form()?;
        let n = t.n();
        let generators = match family {
            Family::Axial(_) => axial_generators(t).map(|(a, b)| vec![a, b]),
            Family::Circular(_) => circular_generators(t).map(|(a, b, c)| vec![a, b, c]),
            Family::Regular => Some(vec![t.sides()[0].min(n as u32 - t.sides()[0])]),
            Family::Other => None,
        };
        let spelled = match generators.as_deref() {
            Some(&[a, b]) => SideTuple::periodic(n, &[a, b, a])?,
            Some(pattern) => SideTuple::periodic(n, pattern)?,
            None => canonical.clone(),
        };
        Ok(ClassRecordOut {
            n,
            m: family.m(),
            family: family.tag().to_string(),
            sides: canonical.into(),
            generators,
            u: spelled.revolutions()?.0,
            rotation_order: profile.rotation_order,
            axis_count: profile.axis_count,
        })
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut (impl Write + Send), stderr: &mut (impl Write + Send)) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    let mut io = Io { stdout, stderr };
    match cli.command {
        Command::Count { m, format } => io.count(m, format),
        Command::Enumerate { m, family, format } => io.enumerate(m, family, format),
        Command::Classify { n, sides } => io.classify(n, sides),
        Command::Verify { mode, m, n, jobs } => with_jobs(jobs, || io.verify(mode, m, n)),
        Command::Render {
            m,
            family,
            out,
            axes,
            labels,
            size,
            columns,
            stroke,
        } => {
            let opts = RenderOptions {
                size_px: size,
                show_labels: labels,
                show_axes: axes,
                stroke_width: stroke,
            };
            io.render(m, family, &out, &opts, columns)
        }
    }
}

/// Expanded class representatives, ordered by generators.
fn representatives(m: u32, family: FamilyArg) -> crate::Result<Vec<SideTuple>> {
    Ok(match family {
        FamilyArg::Axial => enumerate_axial(m)?.iter().map(|r| r.expand()).collect(),
        FamilyArg::Circular => enumerate_circular(m)?.iter().map(|r| r.expand()).collect(),
    })
}

struct Io<'a, O, E> {
    stdout: &'a mut O,
    stderr: &'a mut E,
}

impl<O: Write + Send, E: Write + Send> Io<'_, O, E> {
    fn usage(&mut self, msg: impl std::fmt::Display) -> u8 {
        let _ = writeln!(self.stderr, "error: {msg}");
        EXIT_USAGE
    }

    fn fail(&mut self, msg: impl std::fmt::Display) -> u8 {
        let _ = writeln!(self.stderr, "error: {msg}");
        EXIT_FAIL
    }

    fn json_line<S: Serialize>(&mut self, value: &S) {
        let line = serde_json::to_string(value).expect("plain data serializes");
        let _ = writeln!(self.stdout, "{line}");
    }

    fn count(&mut self, m: MRange, format: Format) -> u8 {
        if let Err(e) = m.check() {
            return self.usage(e);
        }
        let rows = match counts_table(m.from, m.to) {
            Ok(rows) => rows,
            Err(e) => return self.usage(e),
        };
        match format {
            Format::Csv => {
                let _ = writeln!(self.stdout, "n,m,p_count,q_count");
                for r in &rows {
                    let _ = writeln!(self.stdout, "{},{},{},{}", r.n, r.m, r.p_count, r.q_count);
                }
            }
            Format::Json => self.json_line(&rows),
        }
        EXIT_OK
    }

    fn enumerate(&mut self, m: u32, family: FamilyArg, format: Format) -> u8 {
        let tuples = match representatives(m, family) {
            Ok(t) => t,
            Err(e) => return self.usage(e),
        };
        let records: Vec<ClassRecordOut> = tuples
            .iter()
            .map(|t| ClassRecordOut::from_tuple(t).expect("enumerated tuples walk"))
            .collect();
        match format {
            Format::Json => self.json_line(&records),
            Format::Csv => {
                let _ = writeln!(
                    self.stdout,
                    "n,m,family,sides,generators,u,rotation_order,axis_count"
                );
                let join = |v: &[u32]| {
                    v.iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                for r in &records {
                    let _ = writeln!(
                        self.stdout,
                        "{},{},{},{},{},{},{},{}",
                        r.n,
                        r.m.map(|m| m.to_string()).unwrap_or_default(),
                        r.family,
                        join(&r.sides),
                        r.generators.as_deref().map(join).unwrap_or_default(),
                        r.u,
                        r.rotation_order,
                        r.axis_count
                    );
                }
            }
        }
        EXIT_OK
    }

    fn classify(&mut self, n: usize, sides: Vec<u32>) -> u8 {
        let t = match SideTuple::new(n, sides) {
            Ok(t) => t,
            Err(e) => return self.usage(e),
        };
        match ClassRecordOut::from_tuple(&t) {
            Ok(record) => {
                self.json_line(&record);
                EXIT_OK
            }
            Err(e) => self.fail(e),
        }
    }

    fn verify(&mut self, mode: Mode, m: Option<MRange>, n: Option<usize>) -> u8 {
        if mode == Mode::Census {
            let Some(n) = n else {
                return self.usage("census requires --n");
            };
            if n > CENSUS_MAX_N {
                return self.usage(format!("census capped at n={CENSUS_MAX_N}"));
            }
            return self.verify_census(n);
        }
        let Some(m) = m else {
            return self.usage("this mode requires --m");
        };
        if let Err(e) = m.check() {
            return self.usage(e);
        }
        match mode {
            Mode::Sweep => self.verify_sweep(m),
            Mode::Identity => self.verify_identity(m),
            Mode::Gcd => self.verify_gcd(m),
            Mode::Census => unreachable!(),
        }
    }

    fn verify_sweep(&mut self, range: MRange) -> u8 {
        #[derive(Serialize)]
        struct Row {
            m: u32,
            n: usize,
            axial: usize,
            circular: usize,
            regular: usize,
            other: u64,
            triples: u64,
            ok: bool,
        }
        let mut rows = Vec::new();
        let mut first_failure = None;
        for m in range.values() {
            let report = sweep_period3(m).expect("range checked");
            let (axial, circular) = theorem_class_sets(m).expect("range checked");
            let regular = euler_phi(3 * m as u64).expect("positive") / 2;
            let ok = report.axial_classes == axial
                && report.circular_classes == circular
                && report.regular_classes.len() as u64 == regular;
            let _ = writeln!(
                self.stdout,
                "m={m} n={} axial={} circular={} regular={} {}",
                report.n,
                report.axial_classes.len(),
                report.circular_classes.len(),
                report.regular_classes.len(),
                if ok { "ok" } else { "MISMATCH" }
            );
            let _ = writeln!(self.stderr, "m={m} elapsed={:.3}s", report.elapsed.as_secs_f64());
            if !ok && first_failure.is_none() {
                let diff = report
                    .axial_classes
                    .symmetric_difference(&axial)
                    .chain(report.circular_classes.symmetric_difference(&circular))
                    .next()
                    .map(|t| t.to_string())
                    .unwrap_or_else(|| "regular class count".into());
                first_failure = Some(format!("m={m}: first differing class {diff}"));
            }
            rows.push(Row {
                m,
                n: report.n,
                axial: report.axial_classes.len(),
                circular: report.circular_classes.len(),
                regular: report.regular_classes.len(),
                other: report.other_classes,
                triples: report.census_size,
                ok,
            });
        }
        self.json_line(&rows);
        match first_failure {
            Some(msg) => self.fail(msg),
            None => EXIT_OK,
        }
    }

    fn verify_census(&mut self, n: usize) -> u8 {
        #[derive(Serialize)]
        struct Summary {
            n: usize,
            axial: usize,
            circular: usize,
            regular: usize,
            other: u64,
            cycles: u64,
            period_exceptions: usize,
            matches_sweep: Option<bool>,
            ok: bool,
        }
        let report = match census_full(n) {
            Ok(r) => r,
            Err(e) => return self.usage(e),
        };
        let period_exceptions = report
            .axial_classes
            .iter()
            .chain(&report.circular_classes)
            .filter(|t| side_period(t) != 3)
            .count();
        let matches_sweep = (n.is_multiple_of(3) && n / 3 > 2).then(|| {
            let sweep = sweep_period3((n / 3) as u32).expect("m > 2");
            sweep.axial_classes == report.axial_classes
                && sweep.circular_classes == report.circular_classes
                && sweep.regular_classes == report.regular_classes
        });
        let ok = period_exceptions == 0 && matches_sweep != Some(false);
        let _ = writeln!(
            self.stdout,
            "n={n} axial={} circular={} regular={} other={} cycles={} {}",
            report.axial_classes.len(),
            report.circular_classes.len(),
            report.regular_classes.len(),
            report.other_classes,
            report.census_size,
            if ok { "ok" } else { "MISMATCH" }
        );
        let _ = writeln!(self.stderr, "elapsed={:.3}s", report.elapsed.as_secs_f64());
        self.json_line(&Summary {
            n,
            axial: report.axial_classes.len(),
            circular: report.circular_classes.len(),
            regular: report.regular_classes.len(),
            other: report.other_classes,
            cycles: report.census_size,
            period_exceptions,
            matches_sweep,
            ok,
        });
        if ok {
            EXIT_OK
        } else if period_exceptions > 0 {
            self.fail(format!("{period_exceptions} classes with side period other than 3"))
        } else {
            self.fail("census class sets differ from the period-3 sweep")
        }
    }

    fn verify_identity(&mut self, range: MRange) -> u8 {
        let checks: Vec<_> = range
            .values()
            .map(|m| verify_identity(m).expect("range checked"))
            .collect();
        let held = checks.iter().filter(|c| c.holds()).count();
        let _ = writeln!(self.stdout, "{held} of {} identities hold", checks.len());
        self.json_line(&checks);
        match checks.iter().find(|c| !c.holds()) {
            Some(c) => self.fail(format!("m={}: lhs={} rhs={}", c.m, c.lhs, c.rhs)),
            None => EXIT_OK,
        }
    }

    fn verify_gcd(&mut self, range: MRange) -> u8 {
        #[derive(Serialize)]
        struct Row {
            m: u32,
            family: TheoremFamily,
            ok: bool,
        }
        let mut rows = Vec::new();
        let mut first = None;
        for m in range.values() {
            for family in [TheoremFamily::Axial, TheoremFamily::Circular] {
                let cex = gcd_counterexample(m, family).expect("range checked");
                if first.is_none() {
                    first = cex.clone();
                }
                rows.push(Row {
                    m,
                    family,
                    ok: cex.is_none(),
                });
            }
        }
        let held = rows.iter().filter(|r| r.ok).count();
        let _ = writeln!(self.stdout, "{held} of {} biconditionals hold", rows.len());
        self.json_line(&rows);
        match first {
            Some(c) => self.fail(format!(
                "m={} generators={:?} gcd={} walks={}",
                c.m, c.generators, c.gcd, c.walks
            )),
            None => EXIT_OK,
        }
    }

    fn render(
        &mut self,
        m: u32,
        family: FamilyArg,
        out: &std::path::Path,
        opts: &RenderOptions,
        columns: Option<usize>,
    ) -> u8 {
        if opts.size_px < RenderOptions::MIN_SIZE {
            return self.usage(format!("--size must be at least {}", RenderOptions::MIN_SIZE));
        }
        if !opts.stroke_width.is_finite() || opts.stroke_width <= 0.0 {
            return self.usage("--stroke must be positive");
        }
        if columns == Some(0) {
            return self.usage("--columns must be at least 1");
        }
        let tuples = match representatives(m, family) {
            Ok(t) => t,
            Err(e) => return self.usage(e),
        };
        let columns = columns.unwrap_or_else(|| (tuples.len() as f64).sqrt().ceil().max(1.0) as usize);
        let svg = gallery_svg(&tuples, columns, opts).expect("enumerated tuples walk");
        match std::fs::write(out, svg) {
            Ok(()) => {
                let _ = writeln!(self.stdout, "wrote {} polygons to {}", tuples.len(), out.display());
                EXIT_OK
            }
            Err(e) => self.fail(format!("cannot write {}: {e}", out.display())),
        }
    }
}
