//! `flowcat`: validate, construct, extend, check and generate finite
//! categories and their diagrams from the command line.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on bad
//! input, including refused checks whose preconditions do not hold.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use flowcat::basechange::{
    check_flow_adjunction, check_pasting_lemma, span_compose, verify_opfibration_case, verify_square, Directions,
    ExactnessReport,
};
use flowcat::flow::{fiber, fibre_product, flow_from, flow_product, flow_sum, is_cofinal, is_opfibration};
use flowcat::migration::{check_left_adjunction, check_right_adjunction, enum_cap, left_kan, right_kan};
use flowcat::random::{
    random_category, random_cospan, random_functor, random_samples, random_set_functor, random_span, random_square,
    rng, Bounds,
};
use flowcat::suite::{run_suite, SuiteConfig};
use flowcat::text::{emit_catfun, emit_fincat, emit_laxsq, emit_setfun};
use flowcat::workspace::Workspace;
use flowcat::{CatFunctor, CatRef, Error, LaxSquare, SetFunctor, Span};

#[derive(Parser)]
#[command(
    name = "flowcat",
    version,
    about = "Flow sums, flow products, Kan extensions and base change"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Left,
    Right,
    Both,
}

impl From<DirectionArg> for Directions {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Left => Directions::Left,
            DirectionArg::Right => Directions::Right,
            DirectionArg::Both => Directions::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    FlowProduct,
    FlowSum,
    Fiber,
    FlowTo,
    FlowFrom,
    FibreProduct,
    ComposeSpans,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    BaseChange,
    OpfibCase,
    Pasting,
    Opfib,
    Cofinal,
    ExactSuite,
    Adjunction,
    FlowAdjunction,
}

#[derive(Clone, Copy, ValueEnum)]
enum RandomKind {
    Category,
    Functor,
    Setfunctor,
    Cospan,
    Span,
    Square,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate files; exit 0 iff every entity is valid.
    Validate {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Build a category from loaded functors and write it with its functors.
    ///
    /// Arguments: flow-product F G, flow-sum S T, fiber F D, flow-to F D,
    /// flow-from F D, fibre-product F G, compose-spans L1 R1 L2 R2.
    Construct {
        kind: ConstructKind,
        args: Vec<String>,
        #[arg(long, num_args = 1.., required = true)]
        load: Vec<PathBuf>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Left or right Kan extension of a set functor along a functor.
    Kan {
        side: Side,
        functor: String,
        setfunctor: String,
        #[arg(long, num_args = 1.., required = true)]
        load: Vec<PathBuf>,
        /// Write the result here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification; the exit status reflects the verdict.
    ///
    /// Arguments: base-change SQ [F..], opfib-case SQ [F..], pasting LEFT
    /// RIGHT [F..], opfib F, cofinal F, exact-suite, adjunction F X Y,
    /// flow-adjunction SQ. Without set functors, samples are drawn from the
    /// seed. opfib-case refuses squares that are not fibre products along an
    /// opfibration.
    Check {
        what: CheckKind,
        args: Vec<String>,
        #[arg(long, num_args = 1..)]
        load: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sampled functors per foot.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Squares per family in the exact suite.
        #[arg(long, default_value_t = 20)]
        squares: usize,
        #[arg(long, value_enum, default_value_t = DirectionArg::Both)]
        direction: DirectionArg,
        #[arg(long, default_value_t = 4)]
        max_set_size: usize,
    },
    /// Generate seeded random entities and write them.
    Random {
        kind: RandomKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_objects: u64,
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
        #[arg(long, default_value_t = 4)]
        max_set_size: usize,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

/// Why a command did not succeed.
enum Failure {
    Verification,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut String) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Validate { paths } => validate(paths, format, out),
        Command::Construct {
            kind,
            args,
            load,
            out: dir,
        } => {
            let ws = load_all(load)?;
            construct(&ws, *kind, args, dir, out)
        }
        Command::Kan {
            side,
            functor,
            setfunctor,
            load,
            out: target,
        } => {
            let ws = load_all(load)?;
            let f = ws.functor(functor)?;
            let x = ws.set_functor(setfunctor)?;
            let result = match side {
                Side::Left => left_kan(f, x)?,
                Side::Right => right_kan(f, x)?,
            };
            let text = emit_setfun(&result);
            match target {
                Some(path) => {
                    write_file(path, &text)?;
                    writeln!(out, "wrote {}", path.display()).unwrap();
                }
                None => out.push_str(&text),
            }
            Ok(())
        }
        Command::Check {
            what,
            args,
            load,
            seed,
            samples,
            squares,
            direction,
            max_set_size,
        } => {
            let ws = load_all(load)?;
            let opts = CheckOptions {
                seed: *seed,
                samples: *samples,
                squares: *squares,
                directions: (*direction).into(),
                max_set_size: *max_set_size,
                format,
            };
            check(&ws, *what, args, &opts, out)
        }
        Command::Random {
            kind,
            seed,
            max_objects,
            max_edges,
            max_set_size,
            out: dir,
        } => {
            let bounds = Bounds {
                max_objects: *max_objects as usize,
                max_edges: *max_edges,
                max_set_size: *max_set_size,
            };
            random(*kind, *seed, bounds, dir, out)
        }
    }
}

fn load_all(paths: &[PathBuf]) -> Result<Workspace, Failure> {
    let mut ws = Workspace::new();
    for loaded in ws.load_paths(paths)? {
        if let Some(issue) = loaded.issues.first() {
            return Err(Failure::Input(format!(
                "{}:{}: {} `{}` is invalid: {}",
                issue.file,
                issue.line,
                issue.kind.label(),
                issue.name,
                issue.violation
            )));
        }
    }
    Ok(ws)
}

fn validate(paths: &[PathBuf], format: Format, out: &mut String) -> Outcome {
    let mut ws = Workspace::new();
    let loaded = ws.load_paths(paths)?;
    let mut all_valid = true;
    for l in &loaded {
        all_valid &= l.is_valid();
        match format {
            Format::Text if l.is_valid() => {
                writeln!(out, "{}: {} `{}` ok", l.file, l.kind.label(), l.name).unwrap();
            }
            Format::Text => {
                for i in &l.issues {
                    writeln!(
                        out,
                        "{}:{}: {} `{}`: {}",
                        i.file,
                        i.line,
                        i.kind.label(),
                        i.name,
                        i.violation
                    )
                    .unwrap();
                }
            }
            Format::Structured if l.is_valid() => {
                let record = json!({"file": l.file, "kind": l.kind, "name": l.name, "valid": true});
                writeln!(out, "{record}").unwrap();
            }
            Format::Structured => {
                for i in &l.issues {
                    let record = json!({
                        "file": i.file, "line": i.line, "kind": i.kind, "name": i.name, "valid": false,
                        "law": i.violation.law, "witnesses": i.violation.witnesses, "detail": i.violation.detail,
                    });
                    writeln!(out, "{record}").unwrap();
                }
            }
        }
    }
    if all_valid {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn arity(args: &[String], n: usize, usage: &str) -> Result<(), Failure> {
    if args.len() == n {
        Ok(())
    } else {
        Err(Failure::Input(format!("expected {usage}")))
    }
}

/// A file name for an entity name.
fn file_name(name: &str, extension: &str) -> String {
    let stem: String = name
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.') {
                c
            } else {
                '_'
            }
        })
        .collect();
    format!("{stem}.{extension}")
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}

/// Writes categories, functors, set functors and squares into `dir`,
/// reporting each file.
#[derive(Default)]
struct Emitter<'a> {
    files: Vec<(String, String)>,
    summary: Vec<String>,
    _marker: std::marker::PhantomData<&'a ()>,
}

impl Emitter<'_> {
    fn category(&mut self, c: &CatRef) {
        self.summary.push(format!(
            "category {}: {} objects, {} morphisms",
            c.name(),
            c.object_count(),
            c.morphism_count()
        ));
        self.files.push((file_name(c.name(), "fincat"), emit_fincat(c)));
    }

    /// Also writes both ends, so the output directory loads on its own.
    fn functor(&mut self, f: &CatFunctor) {
        for c in [f.source(), f.target()] {
            self.files.push((file_name(c.name(), "fincat"), emit_fincat(c)));
        }
        self.files.push((file_name(f.name(), "catfun"), emit_catfun(f)));
    }

    fn set_functor(&mut self, f: &SetFunctor) {
        self.files
            .push((file_name(f.shape().name(), "fincat"), emit_fincat(f.shape())));
        self.files.push((file_name(f.name(), "setfun"), emit_setfun(f)));
    }

    fn square(&mut self, sq: &LaxSquare) {
        for c in [sq.a(), sq.b(), sq.c(), sq.d()] {
            self.category(c);
        }
        for f in [sq.s(), sq.t(), sq.f(), sq.g()] {
            self.functor(f);
        }
        self.files.push((file_name(sq.name(), "laxsq"), emit_laxsq(sq)));
    }

    fn write(mut self, dir: &Path, out: &mut String) -> Outcome {
        std::fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("cannot create {}: {e}", dir.display())))?;
        // Shared categories appear once.
        let mut seen = std::collections::HashSet::new();
        self.files.retain(|(name, _)| seen.insert(name.clone()));
        let mut summary = self.summary;
        summary.dedup();
        for line in summary {
            writeln!(out, "{line}").unwrap();
        }
        for (name, text) in &self.files {
            let path = dir.join(name);
            write_file(&path, text)?;
            writeln!(out, "wrote {}", path.display()).unwrap();
        }
        Ok(())
    }
}

fn object_of(f: &CatFunctor, name: &str) -> Result<usize, Failure> {
    Ok(f.target().require_object(name)?)
}

fn construct(ws: &Workspace, kind: ConstructKind, args: &[String], dir: &Path, out: &mut String) -> Outcome {
    let mut e = Emitter::default();
    match kind {
        ConstructKind::FlowProduct | ConstructKind::FibreProduct => {
            arity(args, 2, "two functors F G with a common target")?;
            let (f, g) = (ws.functor(&args[0])?, ws.functor(&args[1])?);
            if let ConstructKind::FlowProduct = kind {
                let fp = flow_product(f, g)?;
                e.category(fp.category());
                e.functor(fp.square.s());
                e.functor(fp.square.t());
            } else {
                let fib = fibre_product(f, g)?;
                e.category(fib.square.a());
                e.functor(fib.square.s());
                e.functor(fib.square.t());
            }
        }
        ConstructKind::FlowSum => {
            arity(args, 2, "two functors S T with a common source")?;
            let fs = flow_sum(ws.functor(&args[0])?, ws.functor(&args[1])?)?;
            e.category(fs.category());
            e.functor(fs.square.f());
            e.functor(fs.square.g());
        }
        ConstructKind::Fiber | ConstructKind::FlowTo | ConstructKind::FlowFrom => {
            arity(args, 2, "a functor F and an object D of its target")?;
            let f = ws.functor(&args[0])?;
            let d = object_of(f, &args[1])?;
            match kind {
                ConstructKind::Fiber => {
                    let fib = fiber(f, d)?;
                    e.category(&fib.category);
                    e.functor(&fib.inclusion);
                }
                ConstructKind::FlowTo => {
                    let c = flowcat::flow::flow_to(f, d)?;
                    e.category(&c.category);
                    e.functor(&c.projection);
                }
                _ => {
                    let c = flow_from(f, d)?;
                    e.category(&c.category);
                    e.functor(&c.projection);
                }
            }
        }
        ConstructKind::ComposeSpans => {
            arity(args, 4, "four functors L1 R1 L2 R2 for the spans (L1, R1) and (L2, R2)")?;
            let first = Span::new(ws.functor(&args[0])?.clone(), ws.functor(&args[1])?.clone())?;
            let second = Span::new(ws.functor(&args[2])?.clone(), ws.functor(&args[3])?.clone())?;
            let composite = span_compose(&first, &second)?;
            e.category(composite.span.apex());
            e.functor(&composite.span.left.clone().renamed("left"));
            e.functor(&composite.span.right.clone().renamed("right"));
        }
    }
    e.write(dir, out)
}

struct CheckOptions {
    seed: u64,
    samples: usize,
    squares: usize,
    directions: Directions,
    max_set_size: usize,
    format: Format,
}

fn record(out: &mut String, value: serde_json::Value) {
    writeln!(out, "{value}").unwrap();
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

/// Samples named on the command line, or random ones on `B` and `C`.
fn samples_for(
    ws: &Workspace,
    names: &[String],
    sq: &LaxSquare,
    opts: &CheckOptions,
) -> Result<Vec<SetFunctor>, Failure> {
    if !names.is_empty() {
        return names.iter().map(|n| Ok(ws.set_functor(n)?.clone())).collect();
    }
    let mut r = rng(opts.seed, 0);
    let mut samples = random_samples(&mut r, "F", sq.b(), opts.samples, opts.max_set_size);
    samples.extend(random_samples(&mut r, "G", sq.c(), opts.samples, opts.max_set_size));
    Ok(samples)
}

fn print_exactness(report: &ExactnessReport, samples: &[SetFunctor], format: Format, out: &mut String) {
    for v in &report.verdicts {
        let sample = &samples[v.sample];
        match format {
            Format::Structured => record(
                out,
                json!({
                    "square": report.square, "sample": v.sample, "functor": sample.name(),
                    "direction": v.direction, "iso": v.iso, "witness": v.witness,
                }),
            ),
            Format::Text => {
                let direction = serde_json::to_value(v.direction).unwrap();
                let direction = direction.as_str().unwrap_or_default();
                match &v.witness {
                    None => writeln!(
                        out,
                        "{} sample {} ({}) {direction}: iso",
                        report.square,
                        v.sample,
                        sample.name()
                    ),
                    Some(w) => writeln!(
                        out,
                        "{} sample {} ({}) {direction}: not iso at {} ({} -> {} elements, images {:?})",
                        report.square,
                        v.sample,
                        sample.name(),
                        w.object,
                        w.source_size,
                        w.target_size,
                        w.images
                    ),
                }
                .unwrap();
            }
        }
    }
    if format == Format::Text {
        for s in &report.skipped {
            writeln!(out, "skipped {s}").unwrap();
        }
    }
}

fn check(ws: &Workspace, what: CheckKind, args: &[String], opts: &CheckOptions, out: &mut String) -> Outcome {
    let format = opts.format;
    match what {
        CheckKind::BaseChange => {
            let Some((name, names)) = args.split_first() else {
                return Err(Failure::Input("expected a square and optional set functors".into()));
            };
            let sq = ws.square(name)?;
            let samples = samples_for(ws, names, sq, opts)?;
            let report = verify_square(sq, &samples, opts.directions)?;
            print_exactness(&report, &samples, format, out);
            verdict(report.all_iso())
        }
        CheckKind::OpfibCase => {
            let Some((name, names)) = args.split_first() else {
                return Err(Failure::Input("expected a square and optional set functors".into()));
            };
            let sq = ws.square(name)?;
            let samples = samples_for(ws, names, sq, opts)?;
            let report = verify_opfibration_case(sq, &samples)?;
            print_exactness(&report, &samples, format, out);
            verdict(report.all_iso())
        }
        CheckKind::Pasting => {
            if args.len() < 2 {
                return Err(Failure::Input("expected LEFT RIGHT and optional set functors".into()));
            }
            let (left, right) = (ws.square(&args[0])?, ws.square(&args[1])?);
            let samples: Vec<SetFunctor> = if args.len() > 2 {
                args[2..]
                    .iter()
                    .map(|n| Ok(ws.set_functor(n)?.clone()))
                    .collect::<Result<_, Failure>>()?
            } else {
                random_samples(&mut rng(opts.seed, 0), "F", right.b(), opts.samples, opts.max_set_size)
            };
            let mut all = true;
            for (i, x) in samples.iter().enumerate() {
                let holds = check_pasting_lemma(left, right, x)?;
                all &= holds;
                match format {
                    Format::Structured => record(
                        out,
                        json!({"left": left.name(), "right": right.name(), "sample": i, "functor": x.name(), "holds": holds}),
                    ),
                    Format::Text => writeln!(
                        out,
                        "paste {} | {} sample {i} ({}): {}",
                        left.name(),
                        right.name(),
                        x.name(),
                        if holds { "composites agree" } else { "composites differ" }
                    )
                    .unwrap(),
                }
            }
            verdict(all)
        }
        CheckKind::Opfib => {
            arity(args, 1, "a functor")?;
            let f = ws.functor(&args[0])?;
            let v = is_opfibration(f);
            let missing = v.missing.map(|(a, beta)| {
                (
                    f.source().object_name(a).to_string(),
                    f.target().morphism_name(beta).to_string(),
                )
            });
            match format {
                Format::Structured => record(
                    out,
                    json!({"functor": f.name(), "opfibration": v.holds,
                           "missing": missing.as_ref().map(|(a, b)| json!({"object": a, "arrow": b}))}),
                ),
                Format::Text => match &missing {
                    None => writeln!(out, "{}: opfibration", f.name()).unwrap(),
                    Some((a, b)) => writeln!(
                        out,
                        "{}: not an opfibration; `{b}` out of the image of `{a}` has no cocartesian lift",
                        f.name()
                    )
                    .unwrap(),
                },
            }
            verdict(v.holds)
        }
        CheckKind::Cofinal => {
            arity(args, 1, "a functor")?;
            let f = ws.functor(&args[0])?;
            let v = is_cofinal(f);
            let witness = v
                .witness()
                .map(|d| (f.target().object_name(d).to_string(), v.components[d]));
            match format {
                Format::Structured => record(
                    out,
                    json!({"functor": f.name(), "cofinal": v.holds,
                           "witness": witness.as_ref().map(|(d, n)| json!({"object": d, "components": n}))}),
                ),
                Format::Text => match &witness {
                    None => writeln!(out, "{}: cofinal", f.name()).unwrap(),
                    Some((d, 0)) => {
                        writeln!(out, "{}: not cofinal; the coslice under `{d}` is empty", f.name()).unwrap()
                    }
                    Some((d, n)) => writeln!(
                        out,
                        "{}: not cofinal; the coslice under `{d}` has {n} components",
                        f.name()
                    )
                    .unwrap(),
                },
            }
            verdict(v.holds)
        }
        CheckKind::ExactSuite => {
            arity(args, 0, "no arguments")?;
            let config = SuiteConfig {
                seed: opts.seed,
                squares: opts.squares,
                samples: opts.samples,
                bounds: Bounds {
                    max_set_size: opts.max_set_size,
                    ..Bounds::default()
                },
                directions: opts.directions,
            };
            let report = run_suite(&config)?;
            for case in &report.cases {
                let family = serde_json::to_value(case.family).unwrap();
                let family = family.as_str().unwrap_or_default().to_string();
                let r = &case.report;
                match format {
                    Format::Structured => {
                        for v in &r.verdicts {
                            record(
                                out,
                                json!({"square": r.square, "family": family, "sample": v.sample,
                                       "direction": v.direction, "iso": v.iso, "witness": v.witness,
                                       "expected": case.as_expected()}),
                            );
                        }
                    }
                    Format::Text => {
                        let failures = r.failures().count();
                        let status = match (failures, case.as_expected()) {
                            (0, _) => "exact".to_string(),
                            (_, true) => format!("not exact on {failures} samples, as expected"),
                            (_, false) => format!("NOT EXACT on {failures} samples"),
                        };
                        writeln!(out, "{}: {status} ({} verdicts)", r.square, r.verdicts.len()).unwrap();
                    }
                }
            }
            if format == Format::Text {
                writeln!(out, "suite: {}", if report.passed() { "passed" } else { "FAILED" }).unwrap();
            }
            verdict(report.passed())
        }
        CheckKind::Adjunction => {
            arity(args, 3, "a functor f and two set functors, one on each end of f")?;
            let f = ws.functor(&args[0])?;
            let (x, y) = (ws.set_functor(&args[1])?, ws.set_functor(&args[2])?);
            let on = |s: &SetFunctor, c: &CatRef| flowcat::functor::same_category(s.shape(), c);
            let (source_side, target_side) = if on(x, f.source()) && on(y, f.target()) {
                (x, y)
            } else if on(y, f.source()) && on(x, f.target()) {
                (y, x)
            } else {
                return Err(Failure::Input(format!(
                    "`{}` and `{}` must live on `{}` and `{}`",
                    x.name(),
                    y.name(),
                    f.source().name(),
                    f.target().name()
                )));
            };
            let cap = enum_cap();
            let mut all = true;
            let mut emit = |which: &str, c: flowcat::migration::AdjunctionCheck, out: &mut String| {
                all &= c.holds();
                match format {
                    Format::Structured => record(
                        out,
                        json!({"adjunction": which, "functor": f.name(), "left": c.left, "right": c.right,
                               "inverse": c.inverse, "holds": c.holds()}),
                    ),
                    Format::Text => writeln!(
                        out,
                        "{which} along {}: {} vs {} transformations, transposes {}",
                        f.name(),
                        c.left,
                        c.right,
                        if c.inverse { "mutually inverse" } else { "NOT inverse" }
                    )
                    .unwrap(),
                }
            };
            if opts.directions != Directions::Right {
                emit(
                    "sigma-delta",
                    check_left_adjunction(f, source_side, target_side, cap)?,
                    out,
                );
            }
            if opts.directions != Directions::Left {
                emit(
                    "delta-pi",
                    check_right_adjunction(f, target_side, source_side, cap)?,
                    out,
                );
            }
            verdict(all)
        }
        CheckKind::FlowAdjunction => {
            arity(args, 1, "a square whose span and cospan are compared")?;
            let sq = ws.square(&args[0])?;
            let c = check_flow_adjunction(&sq.span(), &sq.cospan(), enum_cap())?;
            match format {
                Format::Structured => record(
                    out,
                    json!({"square": sq.name(), "cospan_morphisms": c.cospan_morphisms,
                           "span_morphisms": c.span_morphisms, "bijection": c.bijection}),
                ),
                Format::Text => writeln!(
                    out,
                    "{}: {} cospan morphisms out of the flow sum, {} span morphisms into the flow product, {}",
                    sq.name(),
                    c.cospan_morphisms,
                    c.span_morphisms,
                    if c.bijection {
                        "in bijection"
                    } else {
                        "NOT in bijection"
                    }
                )
                .unwrap(),
            }
            verdict(c.bijection)
        }
    }
}

fn random(kind: RandomKind, seed: u64, bounds: Bounds, dir: &Path, out: &mut String) -> Outcome {
    let mut r = rng(seed, 0);
    let mut e = Emitter::default();
    match kind {
        RandomKind::Category => e.category(&random_category(&mut r, "R", "r", bounds)),
        RandomKind::Functor => {
            let a = random_category(&mut r, "A", "a", bounds);
            let b = random_category(&mut r, "B", "b", bounds);
            let f = random_functor(&mut r, "f", &a, &b).expect("random categories are non-empty");
            e.category(&a);
            e.category(&b);
            e.functor(&f);
        }
        RandomKind::Setfunctor => {
            let c = random_category(&mut r, "C", "c", bounds);
            let x = random_set_functor(&mut r, "F", &c, bounds.max_set_size);
            e.category(&c);
            e.set_functor(&x);
        }
        RandomKind::Cospan => {
            let cs = random_cospan(&mut r, bounds);
            for f in [&cs.right, &cs.left] {
                e.category(f.source());
            }
            e.category(cs.apex());
            e.functor(&cs.right);
            e.functor(&cs.left);
        }
        RandomKind::Span => {
            let sp = random_span(&mut r, bounds);
            e.category(sp.apex());
            for f in [&sp.right, &sp.left] {
                e.category(f.target());
                e.functor(f);
            }
        }
        RandomKind::Square => e.square(&random_square(&mut r, "sq", bounds)?),
    }
    e.write(dir, out)
}
