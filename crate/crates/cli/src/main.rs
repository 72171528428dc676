use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use weightsys::casimir::{solve_odd_casimirs, verify_pp, PPData, PPReport, DEFAULT_ORDER};
use weightsys::engine::{Engine, EngineConfig, Family, FamilySpec, Kind};
use weightsys::pbw::{AlgebraSpec, Envelope};
use weightsys::perm::{ChordDiagram, Permutation};
use weightsys::vspace::{dim_record, h_check, KernelAnalysis, MAX_QUOTIENT_CHORDS};
use weightsys::{Polynomial, Rational};

/// `w_so(h) = 192·C0·(C0 − 6)·H_SO_FACTOR`.
const H_SO_FACTOR: &str =
    "-24*C2 + 20*C0*C2 - 4*C0^2*C2 - 2*C2^2 - 4*C0*C2^2 + C0^2*C2^2 + 16*C4 - 2*C0*C4";

#[derive(Parser)]
#[command(name = "weightsys", version, about = "Universal gl and so weight systems")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Gl,
    So,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    So,
    Sp,
    Osp,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::So => Family::So,
            FamilyArg::Sp => Family::Sp,
            FamilyArg::Osp => Family::Osp,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a weight system on a permutation or chord diagram.
    Eval {
        #[arg(value_enum)]
        kind: KindArg,
        /// Permutation images ("3 5 2 1 4") or, with --diagram, a chord diagram.
        input: Option<String>,
        /// Read the inputs from a file, one per line.
        #[arg(long, conflicts_with = "input")]
        file: Option<String>,
        /// Treat the input as a chord diagram ("1 2 1 2" or "(1,3)(2,4)").
        #[arg(long)]
        diagram: bool,
        /// Share memo entries between rotations of a permutation.
        #[arg(long)]
        canonicalize_rotations: bool,
    },
    /// Dimensions of the four-term quotients and weight-system kernels.
    Dims {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Only compute the quotient dimensions.
        #[arg(long)]
        no_kernels: bool,
    },
    /// Kernel of w_gl on the quotient with n chords.
    Kernels {
        #[arg(long)]
        n: usize,
    },
    /// Run one of the verifications.
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
    /// Odd Casimirs as polynomials in the even ones.
    OddCasimirs {
        #[arg(long, default_value_t = 7)]
        max: usize,
    },
    /// Perelomov-Popov check for one family.
    PpVerify(PpArgs),
    /// Enveloping-algebra oracle for so(N) or sp(2M).
    Oracle(OracleArgs),
}

#[derive(Subcommand)]
enum Verify {
    /// w_gl(h) = 0 and the closed form of w_so(h).
    H,
    /// Odd Casimirs from the series agree with the odd-cycle recursion.
    OddCasimirs {
        #[arg(long, default_value_t = 7)]
        max: usize,
    },
    /// Perelomov-Popov check for one family.
    Pp(PpArgs),
    /// Enveloping-algebra oracle for so(N) or sp(2M).
    Oracle(OracleArgs),
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long = "N", default_value_t = 0)]
    n: usize,
    #[arg(long = "M", default_value_t = 0)]
    m: usize,
}

#[derive(Args)]
struct PpArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Check every permutation with at most this many elements.
    #[arg(long, default_value_t = 3)]
    max_size: usize,
    /// Check a single permutation instead.
    #[arg(long)]
    perm: Option<String>,
}

/// Failure of a command: usage problems exit with 2, failed checks with 1.
enum Failure {
    Usage(String),
    Check,
}

impl From<weightsys::Error> for Failure {
    fn from(e: weightsys::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval {
            kind,
            input,
            file,
            diagram,
            canonicalize_rotations,
        } => cmd_eval(cli.format, kind, input, file, diagram, canonicalize_rotations),
        Command::Dims { max_n, no_kernels } => cmd_dims(cli.format, max_n, !no_kernels),
        Command::Kernels { n } => cmd_kernels(cli.format, n),
        Command::Verify { which } => match which {
            Verify::H => verify_h(cli.format),
            Verify::OddCasimirs { max } => verify_odd(cli.format, max),
            Verify::Pp(a) => cmd_pp(cli.format, &a),
            Verify::Oracle(a) => cmd_oracle(cli.format, &a),
        },
        Command::OddCasimirs { max } => cmd_odd(cli.format, max),
        Command::PpVerify(a) => cmd_pp(cli.format, &a),
        Command::Oracle(a) => cmd_oracle(cli.format, &a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn finish(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn parse_input(text: &str, diagram: bool) -> Result<Permutation, Failure> {
    if diagram {
        Ok(text.parse::<ChordDiagram>()?.to_permutation())
    } else {
        Ok(text.parse::<Permutation>()?)
    }
}

fn cmd_eval(
    format: Format,
    kind: KindArg,
    input: Option<String>,
    file: Option<String>,
    diagram: bool,
    canonicalize_rotations: bool,
) -> Outcome {
    let inputs: Vec<String> = match (input, file) {
        (Some(i), _) => vec![i],
        (None, Some(path)) => fs::read_to_string(&path)
            .map_err(|e| Failure::Usage(format!("{path}: {e}")))?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(String::from)
            .collect(),
        (None, None) => return Err(Failure::Usage("no input given".into())),
    };
    let kind = match kind {
        KindArg::Gl => Kind::Gl,
        KindArg::So => Kind::So,
    };
    let engine = Engine::<Rational>::new(
        kind,
        EngineConfig {
            canonicalize_rotations,
        },
    );
    let perms = inputs
        .iter()
        .map(|t| parse_input(t, diagram))
        .collect::<Result<Vec<_>, _>>()?;
    let values = engine.eval_many(&perms);
    match format {
        Format::Text => {
            for v in &values {
                println!("{v}");
            }
        }
        Format::Json => {
            let kind = match kind {
                Kind::Gl => "gl",
                Kind::So => "so",
            };
            let out: Vec<_> = inputs
                .iter()
                .zip(&values)
                .map(|(i, v)| json!({"kind": kind, "input": i, "value": v.to_json()}))
                .collect();
            if out.len() == 1 {
                print_json(&out[0]);
            } else {
                print_json(&out);
            }
        }
    }
    Ok(())
}

fn check_chords(n: usize) -> Outcome {
    if n == 0 || n > MAX_QUOTIENT_CHORDS {
        return Err(Failure::Usage(format!(
            "chord count {n} outside 1..={MAX_QUOTIENT_CHORDS}"
        )));
    }
    Ok(())
}

fn cmd_dims(format: Format, max_n: usize, kernels: bool) -> Outcome {
    check_chords(max_n)?;
    let (gl, so) = (Engine::<Rational>::gl(), Engine::<Rational>::so());
    let mut records = Vec::new();
    for n in 1..=max_n {
        eprintln!("computing n = {n}");
        let r = dim_record(n, kernels, &gl, &so)?;
        eprintln!("  done in {:.2} s", r.elapsed);
        if format == Format::Text {
            let k = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
            println!(
                "n={} diagrams={} rank_4T={} dim_A={} ker_gl={} ker_joint={}",
                r.n,
                r.num_diagrams,
                r.rank_4t,
                r.dim_a,
                k(r.ker_gl),
                k(r.ker_joint)
            );
        }
        records.push(r);
    }
    if format == Format::Json {
        print_json(&records);
    }
    Ok(())
}

fn cmd_kernels(format: Format, n: usize) -> Outcome {
    check_chords(n)?;
    let (gl, so) = (Engine::<Rational>::gl(), Engine::<Rational>::so());
    eprintln!("evaluating the quotient basis for n = {n}");
    let a = KernelAnalysis::compute(n, &gl, &so)?;
    let kernel = a.gl_kernel();
    match format {
        Format::Text => {
            println!("n={n} dim_A={} ker_gl={} ker_joint={}", a.basis.dim(), a.ker_gl(), a.ker_joint());
            for (k, v) in kernel.iter().enumerate() {
                let terms: Vec<String> = v.iter().map(|(d, c)| format!("({c})*[{d}]")).collect();
                println!("kernel {}: {}", k + 1, terms.join(" + "));
            }
        }
        Format::Json => {
            let vectors: Vec<Vec<_>> = kernel
                .iter()
                .map(|v| {
                    v.iter()
                        .map(|(d, c)| json!({"diagram": d.to_string(), "coefficient": c.to_string()}))
                        .collect()
                })
                .collect();
            print_json(&json!({
                "n": n,
                "dim_A": a.basis.dim(),
                "ker_gl": a.ker_gl(),
                "ker_joint": a.ker_joint(),
                "gl_kernel": vectors,
            }));
        }
    }
    Ok(())
}

fn expected_h_so() -> Polynomial {
    let c0 = Polynomial::c(0);
    let inner: Polynomial = H_SO_FACTOR.parse().expect("closed form");
    &(&Polynomial::from_int(192) * &c0) * &(&(&c0 - &Polynomial::from_int(6)) * &inner)
}

fn verify_h(format: Format) -> Outcome {
    eprintln!("evaluating the generator diagrams");
    let (hg, hs) = h_check(&Engine::<Rational>::gl(), &Engine::<Rational>::so());
    let gl_ok = hg.is_zero();
    let so_ok = hs == expected_h_so();
    let ok = gl_ok && so_ok;
    match format {
        Format::Text => {
            println!("w_gl(h) = {hg}");
            println!("w_so(h) = {hs}");
            println!("expected w_so(h) = 192*C0*(C0 - 6)*({H_SO_FACTOR})");
            println!("{}", verdict(ok));
        }
        Format::Json => print_json(&json!({
            "w_gl": hg.to_json(),
            "w_so": hs.to_json(),
            "gl_vanishes": gl_ok,
            "so_matches": so_ok,
            "passed": ok,
        })),
    }
    finish(ok)
}

fn check_odd(max: usize) -> Outcome {
    if max % 2 == 0 {
        return Err(Failure::Usage(format!("--max must be odd, got {max}")));
    }
    Ok(())
}

fn cmd_odd(format: Format, max: usize) -> Outcome {
    check_odd(max)?;
    let solved = solve_odd_casimirs::<Rational>(max)?;
    match format {
        Format::Text => {
            for (m, p) in &solved {
                println!("C{m} = {p}");
            }
        }
        Format::Json => {
            let out: Vec<_> = solved
                .iter()
                .map(|(m, p)| json!({"m": m, "value": p.to_json()}))
                .collect();
            print_json(&out);
        }
    }
    Ok(())
}

fn verify_odd(format: Format, max: usize) -> Outcome {
    check_odd(max)?;
    let solved = solve_odd_casimirs::<Rational>(max)?;
    let engine = Engine::<Rational>::so();
    let mut rows = Vec::new();
    for (&m, p) in &solved {
        eprintln!("odd cycle of length {m}");
        let value = engine.odd_cycle_value(m)?;
        rows.push((m, p.clone(), value == *p));
    }
    let ok = rows.iter().all(|r| r.2);
    match format {
        Format::Text => {
            for (m, p, agree) in &rows {
                println!("C{m} = {p}  [{}]", verdict(*agree));
            }
            println!("{}", verdict(ok));
        }
        Format::Json => {
            let out: Vec<_> = rows
                .iter()
                .map(|(m, p, agree)| json!({"m": m, "value": p.to_json(), "agree": agree}))
                .collect();
            print_json(&json!({"casimirs": out, "passed": ok}));
        }
    }
    finish(ok)
}

fn cmd_pp(format: Format, a: &PpArgs) -> Outcome {
    let f = &a.family;
    let spec = FamilySpec::new(f.family.into(), f.n, f.m)?;
    if a.order < 2 {
        return Err(Failure::Usage("--order must be at least 2".into()));
    }
    let report: PPReport = verify_pp::<Rational>(&PPData::new(spec), a.order)?;
    match format {
        Format::Text => {
            println!("{spec} order {}", a.order);
            println!("C0 extraction: {}", verdict(report.c0_ok));
            println!("odd Casimirs: {}", verdict(report.odd_casimirs_ok));
            println!("reflection: {}", verdict(report.reflection_ok));
            if let Some(f) = &report.first_failure {
                println!("first failure: {f}");
            }
            println!("{}", verdict(report.passed()));
        }
        Format::Json => print_json(&report),
    }
    finish(report.passed())
}

fn all_permutations(m: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::new(prefix).expect("bijection"));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v + 1);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

fn cmd_oracle(format: Format, a: &OracleArgs) -> Outcome {
    let f = &a.family;
    let spec = AlgebraSpec::new(f.family.into(), f.n, f.m)?;
    let env = Envelope::<Rational>::new(spec);
    let perms = match &a.perm {
        Some(p) => vec![parse_input(p, false)?],
        None => (1..=a.max_size).flat_map(all_permutations).collect(),
    };
    let start = Instant::now();
    let mut failures = Vec::new();
    for (k, s) in perms.iter().enumerate() {
        let ok = env.oracle_check(s)?;
        let central = env.centrality_check(&env.w_envelope(s)?);
        if !(ok && central) {
            failures.push(s.to_string());
        }
        if (k + 1) % 50 == 0 {
            eprintln!("{} of {} checked", k + 1, perms.len());
        }
    }
    eprintln!("finished in {:.2} s", start.elapsed().as_secs_f64());
    let ok = failures.is_empty();
    match format {
        Format::Text => {
            println!("{spec}: {} permutations checked", perms.len());
            for f in &failures {
                println!("mismatch at {f}");
            }
            if let Some(p) = &a.perm {
                println!("w_envelope({p}) = {}", env.render(&env.w_envelope(&perms[0])?));
            }
            println!("{}", verdict(ok));
        }
        Format::Json => print_json(&json!({
            "algebra": spec.to_string(),
            "checked": perms.len(),
            "failures": failures,
            "passed": ok,
        })),
    }
    finish(ok)
}
