//! Command-line surface: compute invariant profiles, apply code-level
//! transforms, validate switches, and run the invariance fuzzer.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse/validation error,
//! 3 property violation (fuzz mismatch).

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::diagram::{
    builtin_diagram, parse_code, perturb_trace, LongDiagram, Transform, BUILTIN_DIAGRAMS,
};
use crate::error::{Error, Result};
use crate::invariants::{check_theorem_4_2, invariant_profile, InvariantProfile};
use crate::ring::UnitMode;
use crate::switch::{
    builtin_switch, classify_symmetry, load_switch, load_switch_unvalidated, Switch,
    BUILTIN_SWITCHES,
};

#[derive(Parser)]
#[command(
    name = "longknot",
    version,
    about = "Determinant invariants of long virtual and flat knots"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant profile of a knot under a switch.
    Compute(ComputeArgs),
    /// Apply a symmetry transform to a knot code and print the result.
    Transform(TransformArgs),
    /// Concatenate two long knots and print the combined code.
    Concat(ConcatArgs),
    /// Lift a flat knot to a virtual knot and print the code.
    Descent(DescentArgs),
    /// Validate a switch and report its symmetries.
    CheckSwitch(CheckSwitchArgs),
    /// Apply random Reidemeister moves and verify profile invariance.
    Fuzz(FuzzArgs),
    /// List built-in knots and switches.
    List,
}

#[derive(Args)]
struct DiagramSource {
    /// Built-in knot name (see `list`).
    #[arg(long, group = "diagram")]
    knot: Option<String>,
    /// Knot code, e.g. "U1- O2+ O1- U2+".
    #[arg(long, group = "diagram")]
    code: Option<String>,
    /// File containing a knot code.
    #[arg(long, group = "diagram")]
    code_file: Option<std::path::PathBuf>,
}

impl DiagramSource {
    fn resolve(&self) -> Result<LongDiagram> {
        match (&self.knot, &self.code, &self.code_file) {
            (Some(name), None, None) => builtin_diagram(name),
            (None, Some(code), None) => parse_code(code),
            (None, None, Some(path)) => parse_code(&std::fs::read_to_string(path)?),
            _ => Err(Error::CodeParse(
                "give exactly one of --knot, --code, --code-file".into(),
            )),
        }
    }
}

#[derive(Args)]
struct SwitchSource {
    /// Built-in switch name (see `list`).
    #[arg(long, group = "switchsrc")]
    switch: Option<String>,
    /// Switch file (TOML).
    #[arg(long, group = "switchsrc")]
    switch_file: Option<std::path::PathBuf>,
    /// Skip switch validation (negative-control runs only).
    #[arg(long, default_value_t = false)]
    skip_validation: bool,
}

impl SwitchSource {
    fn resolve(&self) -> Result<Switch> {
        match (&self.switch, &self.switch_file) {
            (Some(name), None) => builtin_switch(name),
            (None, Some(path)) => {
                if self.skip_validation {
                    load_switch_unvalidated(path)
                } else {
                    load_switch(path)
                }
            }
            _ => Err(Error::SwitchFile(
                "give exactly one of --switch, --switch-file".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    diagram: DiagramSource,
    #[command(flatten)]
    switch: SwitchSource,
    /// Maximum codimension r to compute.
    #[arg(long, default_value_t = 0)]
    codim: u32,
    /// Unit group: field | gaussian-integer-content (default: the switch's).
    #[arg(long)]
    unit_mode: Option<UnitMode>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Also check the divisibility theorem and report it.
    #[arg(long, default_value_t = false)]
    check_divisibility: bool,
}

#[derive(Args)]
struct TransformArgs {
    #[command(flatten)]
    diagram: DiagramSource,
    /// mirror | reflect | reverse
    #[arg(long)]
    op: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ConcatArgs {
    /// Left operand: built-in name or code string.
    left: String,
    /// Right operand: built-in name or code string.
    right: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct DescentArgs {
    #[command(flatten)]
    diagram: DiagramSource,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CheckSwitchArgs {
    #[command(flatten)]
    switch: SwitchSource,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct FuzzArgs {
    #[command(flatten)]
    diagram: DiagramSource,
    #[command(flatten)]
    switch: SwitchSource,
    /// Random seed; all randomness flows from it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random move sequences.
    #[arg(long, default_value_t = 100)]
    moves: u32,
    /// Moves per sequence.
    #[arg(long, default_value_t = 6)]
    depth: u32,
    /// Maximum codimension compared.
    #[arg(long, default_value_t = 0)]
    codim: u32,
    #[arg(long)]
    unit_mode: Option<UnitMode>,
}

/// Name or inline code.
fn resolve_operand(s: &str) -> Result<LongDiagram> {
    if BUILTIN_DIAGRAMS.contains(&s) {
        builtin_diagram(s)
    } else {
        parse_code(s)
    }
}

#[derive(Serialize)]
struct ProfileDoc<'a> {
    tool: &'static str,
    command: &'static str,
    knot: &'a str,
    switch: &'a str,
    unit_mode: String,
    codim_max: u32,
    values: Vec<ValueDoc>,
}

#[derive(Serialize)]
struct ValueDoc {
    variant: String,
    family: String,
    codim: u32,
    polynomial: String,
}

fn profile_doc<'a>(profile: &'a InvariantProfile, command: &'static str) -> ProfileDoc<'a> {
    ProfileDoc {
        tool: "longknot",
        command,
        knot: profile.diagram_code(),
        switch: profile.switch_name(),
        unit_mode: profile.mode().to_string(),
        codim_max: profile.r_max(),
        values: profile
            .values()
            .map(|(&(variant, codim), v)| ValueDoc {
                variant: variant.to_string(),
                family: variant.family().to_string(),
                codim,
                polynomial: v.canonical().to_string(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct CodeDoc<'a> {
    tool: &'static str,
    command: &'static str,
    code: &'a str,
}

fn emit_code(command: &'static str, code: &str, format: Format) {
    match format {
        Format::Text => println!("{code}"),
        Format::Structured => {
            let doc = CodeDoc { tool: "longknot", command, code };
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
}

fn run_compute(args: &ComputeArgs) -> Result<()> {
    let diagram = args.diagram.resolve()?;
    let switch = args.switch.resolve()?;
    let mode = args.unit_mode.unwrap_or_else(|| switch.default_unit_mode());
    let profile = invariant_profile(&diagram, &switch, args.codim, mode)?;
    match args.format {
        Format::Text => {
            println!("knot:   {}", profile.diagram_code());
            println!("switch: {}  (unit mode: {mode})", profile.switch_name());
            print!("{profile}");
        }
        Format::Structured => {
            let doc = profile_doc(&profile, "compute");
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    if args.check_divisibility {
        let report = check_theorem_4_2(&diagram, &switch, args.codim, mode)?;
        print!("{report}");
        if !report.all_pass() {
            return Err(Error::CodeParse("divisibility check failed".into()));
        }
    }
    Ok(())
}

fn run_transform(args: &TransformArgs) -> Result<()> {
    let diagram = args.diagram.resolve()?;
    let op: Transform = args.op.parse()?;
    emit_code("transform", &diagram.transform(op).render(), args.format);
    Ok(())
}

fn run_concat(args: &ConcatArgs) -> Result<()> {
    let left = resolve_operand(&args.left)?;
    let right = resolve_operand(&args.right)?;
    emit_code("concat", &left.concat(&right)?.render(), args.format);
    Ok(())
}

fn run_descent(args: &DescentArgs) -> Result<()> {
    let diagram = args.diagram.resolve()?;
    emit_code("descent", &diagram.descent()?.render(), args.format);
    Ok(())
}

#[derive(Serialize)]
struct SwitchDoc {
    tool: &'static str,
    command: &'static str,
    name: String,
    kind: String,
    block_size: usize,
    ring: String,
    valid: bool,
    symmetries: Vec<String>,
}

fn run_check_switch(args: &CheckSwitchArgs) -> Result<()> {
    let switch = args.switch.resolve()?;
    let report = classify_symmetry(&switch)?;
    match args.format {
        Format::Text => {
            println!("switch: {}", switch.name());
            println!("kind:   {}", switch.kind());
            println!("blocks: {0}x{0} over {1}", switch.block_size(), switch.ring());
            if args.switch.skip_validation {
                println!("validation: SKIPPED (--skip-validation)");
            } else {
                println!(
                    "validation: pass (A, B, 1-A, S invertible; Yang-Baxter identity{})",
                    if switch.kind() == crate::switch::SwitchKind::Flat {
                        "; S^2 = 1"
                    } else {
                        ""
                    }
                );
            }
            println!("symmetries: {report}");
        }
        Format::Structured => {
            let doc = SwitchDoc {
                tool: "longknot",
                command: "check-switch",
                name: switch.name().to_string(),
                kind: switch.kind().to_string(),
                block_size: switch.block_size(),
                ring: switch.ring().to_string(),
                valid: !args.switch.skip_validation,
                symmetries: report.symmetries().iter().map(|s| s.to_string()).collect(),
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    Ok(())
}

/// Outcome of a fuzz run: `Ok(true)` means no mismatches.
fn run_fuzz(args: &FuzzArgs) -> Result<bool> {
    let diagram = args.diagram.resolve()?;
    let switch = args.switch.resolve()?;
    let mode = args.unit_mode.unwrap_or_else(|| switch.default_unit_mode());
    let base = invariant_profile(&diagram, &switch, args.codim, mode)?;
    let mut mismatches = 0u32;
    for k in 0..args.moves {
        let seq_seed = args.seed.wrapping_add(u64::from(k));
        let (moved, trace) = perturb_trace(&diagram, args.depth as usize, seq_seed)?;
        let profile = invariant_profile(&moved, &switch, args.codim, mode)?;
        if let Some((variant, r)) = base.first_mismatch(&profile) {
            mismatches += 1;
            let mut msg = String::new();
            let _ = writeln!(
                msg,
                "MISMATCH at sequence {k} (seed {seq_seed}): {}^({r}) changed",
                variant.family()
            );
            let _ = writeln!(msg, "  base:  {}", base.value(variant, r));
            let _ = writeln!(msg, "  moved: {}", profile.value(variant, r));
            let _ = writeln!(msg, "  moved code: {}", moved.render());
            let _ = writeln!(msg, "  trace: {trace:?}");
            print!("{msg}");
        }
    }
    println!(
        "fuzz: {} sequences of depth {} on `{}` under `{}`: {} mismatch(es)",
        args.moves,
        args.depth,
        base.diagram_code(),
        switch.name(),
        mismatches
    );
    Ok(mismatches == 0)
}

/// Entry point for the `longknot` binary.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are successful exits
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome: Result<bool> = match &cli.command {
        Command::Compute(args) => run_compute(args).map(|()| true),
        Command::Transform(args) => run_transform(args).map(|()| true),
        Command::Concat(args) => run_concat(args).map(|()| true),
        Command::Descent(args) => run_descent(args).map(|()| true),
        Command::CheckSwitch(args) => run_check_switch(args).map(|()| true),
        Command::Fuzz(args) => run_fuzz(args),
        Command::List => {
            println!("built-in knots:");
            for name in BUILTIN_DIAGRAMS {
                let d = builtin_diagram(name).expect("builtin");
                println!("  {name:<22} {d}");
            }
            println!("built-in switches:");
            for name in BUILTIN_SWITCHES {
                let sw = builtin_switch(name).expect("builtin");
                println!(
                    "  {name:<22} {} d={} over {}",
                    sw.kind(),
                    sw.block_size(),
                    sw.ring()
                );
            }
            Ok(true)
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            // clap catches usage errors (exit 1); everything reaching this
            // point is a parse or validation failure
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
