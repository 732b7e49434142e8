//! `ftc`: generate, validate and certify finite-dimensional Hopf algebras and
//! fusion rings.
//!
//! Exit codes: 0 success, 1 a mathematical failure or violation, 2 a usage,
//! parse or schema error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ftc_core::algebra::{center, verify_algebra};
use ftc_core::field::{Field, FieldSpec};
use ftc_core::fusion::{lambda_group, validate_fusion, FusionError};
use ftc_core::groups::GroupTable;
use ftc_core::hopf::{
    central_grouplikes, gen_dual_group_algebra, gen_group_algebra, gen_sweedler, gen_taft, grouplikes,
    pivotal_grouplikes, verify_hopf, HopfAlgebra,
};
use ftc_core::io::{fusion_to_json, hopf_to_json, parse_document, to_pretty, Document};
use ftc_core::phi::run_all;
use ftc_core::rep::{fusion_from_hopf, RepError, DEFAULT_SEED};

#[derive(Parser, Debug)]
#[command(name = "ftc", version, about = "Exact invariants of finite tensor categories Rep(H)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a fusion ring or Hopf algebra file against its axioms.
    Validate { path: PathBuf },
    /// Enumerate the group of lambda functions of a fusion ring.
    LambdaGroup(LambdaArgs),
    /// Write a built-in Hopf algebra as JSON.
    Gen(GenArgs),
    /// Report grouplikes, pivotal elements, center, simples, blocks and fusion rules.
    Invariants(InvariantArgs),
    /// Run the full verification pipeline and write a certificate.
    Certify(CertifyArgs),
}

#[derive(Args, Debug)]
struct LambdaArgs {
    path: PathBuf,
    /// Characteristic of the ground field (0 for characteristic zero).
    #[arg(long = "char")]
    char_p: Option<u64>,
    /// Evaluate the functions in this field, e.g. `Fp:7`.
    #[arg(long)]
    field: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    GroupAlgebra,
    Dual,
    Taft,
    Sweedler,
}

#[derive(Args, Debug)]
struct GenArgs {
    kind: Kind,
    /// Built-in group: Zn, S3, D4 or Q8.
    #[arg(long, conflicts_with = "table")]
    group: Option<String>,
    /// JSON file {"names": [...], "table": [[...]]} with at most 24 elements.
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    /// Taft parameter, an integer in the field.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<i64>,
    #[arg(long)]
    field: String,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct InvariantArgs {
    path: PathBuf,
    #[arg(long, env = "FTC_SEED")]
    seed: Option<u64>,
    /// Write the fusion table as JSON here.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    path: PathBuf,
    #[arg(long, env = "FTC_SEED")]
    seed: Option<u64>,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

/// A finished command: text for stdout and the exit status.
struct Outcome {
    text: String,
    code: u8,
}

enum Failure {
    /// Mathematical failure: exit 1.
    Math(String),
    /// Usage, parse or schema error: exit 2.
    Input(String),
}

fn input(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn read_document(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_hopf(path: &Path) -> Result<HopfAlgebra, Failure> {
    match read_document(path)? {
        Document::Hopf(h) => Ok(h),
        _ => Err(Failure::Input(format!(
            "{}: expected a Hopf algebra file",
            path.display()
        ))),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_field(s: &str) -> Result<Field, Failure> {
    let spec = FieldSpec::parse(s).map_err(input)?;
    Field::from_spec(&spec).map_err(input)
}

fn instance_name(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| "instance".into(), |s| s.to_string_lossy().into_owned())
}

fn cmd_validate(path: &Path) -> Result<Outcome, Failure> {
    let (ok, text) = match read_document(path)? {
        Document::Fusion(f, _) => {
            let r = validate_fusion(&f);
            (r.is_valid(), r.to_string())
        }
        Document::Hopf(h) => {
            let r = verify_hopf(&h);
            (r.is_valid(), format!("{r}\n"))
        }
        Document::Algebra(a) => {
            let r = verify_algebra(&a);
            (r.is_valid(), format!("{r}\n"))
        }
    };
    Ok(Outcome {
        text,
        code: if ok { 0 } else { 1 },
    })
}

fn cmd_lambda_group(args: &LambdaArgs) -> Result<Outcome, Failure> {
    let (ring, blocks) = match read_document(&args.path)? {
        Document::Fusion(f, b) => (f, b),
        _ => return Err(Failure::Input("expected a fusion ring file".into())),
    };
    let field = args.field.as_deref().map(parse_field).transpose()?;
    let char_p = match (args.char_p, &field) {
        (Some(p), Some(f)) if p != f.characteristic() => {
            return Err(Failure::Input(format!("--char {p} conflicts with --field {f}")));
        }
        (Some(p), _) => p,
        (None, Some(f)) => f.characteristic(),
        (None, None) => return Err(Failure::Input("give --char or --field".into())),
    };
    let report = validate_fusion(&ring);
    if !report.is_valid() {
        return Err(Failure::Math(report.to_string()));
    }
    let lg = match lambda_group(&ring, &blocks, char_p, field.as_ref()) {
        Ok(g) => g,
        Err(e @ FusionError::NotCategorifiable { .. }) => return Err(Failure::Math(e.to_string())),
        Err(FusionError::Lattice(e)) => return Err(Failure::Math(e.to_string())),
        Err(e) => return Err(input(e)),
    };
    let mut t = String::new();
    writeln!(t, "characteristic: {char_p}").unwrap();
    writeln!(t, "presented group: {}", lg.presented).unwrap();
    writeln!(t, "lambda group: {}", lg.invariants).unwrap();
    writeln!(t, "order: {}", lg.order()).unwrap();
    writeln!(t, "labels: {}", ring.labels().join(" ")).unwrap();
    for (n, l) in lg.functions.iter().enumerate() {
        let ex: Vec<String> = l.exponents.iter().map(|e| e.to_string()).collect();
        write!(t, "lambda{n}: zeta_{}^[{}]", l.modulus, ex.join(" ")).unwrap();
        if let Some(v) = &l.values {
            let vs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(t, " = [{}]", vs.join(" ")).unwrap();
        }
        t.push('\n');
    }
    Ok(Outcome { text: t, code: 0 })
}

fn load_group(args: &GenArgs) -> Result<GroupTable, Failure> {
    match (&args.group, &args.table) {
        (Some(name), None) => GroupTable::named(name).map_err(input),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let v: serde_json::Value = serde_json::from_str(&text).map_err(input)?;
            let names: Vec<String> = serde_json::from_value(v["names"].clone()).map_err(input)?;
            let table: Vec<Vec<usize>> = serde_json::from_value(v["table"].clone()).map_err(input)?;
            if table.len() > 24 {
                return Err(Failure::Input(format!("group of order {} exceeds 24", table.len())));
            }
            GroupTable::new(names, table).map_err(input)
        }
        _ => Err(Failure::Input("give exactly one of --group or --table".into())),
    }
}

fn cmd_gen(args: &GenArgs) -> Result<Outcome, Failure> {
    let field = parse_field(&args.field)?;
    let h = match args.kind {
        Kind::GroupAlgebra => gen_group_algebra(&load_group(args)?, &field),
        Kind::Dual => gen_dual_group_algebra(&load_group(args)?, &field),
        Kind::Taft => {
            let (n, q) = args
                .n
                .zip(args.q)
                .ok_or_else(|| Failure::Input("taft needs --n and --q".into()))?;
            gen_taft(n, &field.from_i64(q), &field)
        }
        Kind::Sweedler => gen_sweedler(&field),
    }
    .map_err(input)?;
    let text = to_pretty(&hopf_to_json(&h));
    match &args.output {
        Some(p) => {
            write_file(p, &text)?;
            Ok(Outcome {
                text: format!("wrote {}-dimensional Hopf algebra to {}\n", h.dim(), p.display()),
                code: 0,
            })
        }
        None => Ok(Outcome { text, code: 0 }),
    }
}

fn math_or_input(e: RepError) -> Failure {
    match e {
        RepError::Splitting(s) => Failure::Math(format!("splitting error: {s}")),
        RepError::UnsupportedField(_) => Failure::Math(format!(
            "{e} (hint: use a finite field Fp:p with p prime to the group orders)"
        )),
        other => Failure::Math(other.to_string()),
    }
}

fn cmd_invariants(args: &InvariantArgs) -> Result<Outcome, Failure> {
    let h = read_hopf(&args.path)?;
    let seed = args.seed.unwrap_or(DEFAULT_SEED);
    let report = verify_hopf(&h);
    if !report.is_valid() {
        return Err(Failure::Math(report.to_string()));
    }
    let mut t = String::new();
    writeln!(t, "field: {}", h.field()).unwrap();
    writeln!(t, "dimension: {}", h.dim()).unwrap();
    let gs = grouplikes(&h).map_err(|e| Failure::Math(e.to_string()))?;
    if let Some(e) = &gs.obstruction {
        return Err(Failure::Math(format!("splitting error: {e}")));
    }
    let names = h.alg.names();
    let show = |v: &[ftc_core::Scalar]| -> String {
        let terms: Vec<String> = v
            .iter()
            .zip(names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| if c.is_one() { n.clone() } else { format!("{c}*{n}") })
            .collect();
        terms.join(" + ")
    };
    writeln!(t, "grouplikes: {}", gs.len()).unwrap();
    for g in &gs.elements {
        writeln!(t, "  {}", show(g)).unwrap();
    }
    let central = central_grouplikes(&h, &gs);
    writeln!(t, "central grouplikes: {}", central.len()).unwrap();
    let piv = pivotal_grouplikes(&h, &gs).map_err(|e| Failure::Math(e.to_string()))?;
    writeln!(t, "pivotal grouplikes: {}", piv.len()).unwrap();
    for &g in &piv {
        writeln!(t, "  {}", show(&gs.elements[g])).unwrap();
    }
    writeln!(t, "center dimension: {}", center(&h.alg).dim()).unwrap();
    let hf = fusion_from_hopf(&h, seed).map_err(math_or_input)?;
    let dims: Vec<String> = hf.simples.dims().iter().map(|d| d.to_string()).collect();
    writeln!(t, "simples: {} (dims {})", hf.simples.len(), dims.join(", ")).unwrap();
    let blocks: Vec<String> = hf
        .blocks
        .classes
        .iter()
        .map(|c| format!("{{{}}}", c.join(", ")))
        .collect();
    writeln!(t, "blocks: {}", blocks.join(" ")).unwrap();
    writeln!(t, "fusion rules:").unwrap();
    let l = hf.ring.labels();
    for i in 0..l.len() {
        for j in 0..l.len() {
            let terms: Vec<String> = hf
                .ring
                .product(i, j)
                .iter()
                .enumerate()
                .filter(|(_, n)| **n > 0)
                .map(|(k, n)| if *n == 1 { l[k].clone() } else { format!("{n}{}", l[k]) })
                .collect();
            writeln!(t, "  {} x {} = {}", l[i], l[j], terms.join(" + ")).unwrap();
        }
    }
    if let Some(p) = &args.output {
        write_file(p, &to_pretty(&fusion_to_json(&hf.ring, Some(&hf.blocks))))?;
    }
    Ok(Outcome { text: t, code: 0 })
}

fn cmd_certify(args: &CertifyArgs) -> Result<Outcome, Failure> {
    let h = read_hopf(&args.path)?;
    let seed = args.seed.unwrap_or(DEFAULT_SEED);
    let cert = run_all(&h, &instance_name(&args.path), seed);
    let json = cert.to_json() + "\n";
    let mut t = String::new();
    for c in &cert.checks {
        writeln!(
            t,
            "{:<20} {}",
            c.name,
            serde_json::to_value(c.status).unwrap().as_str().unwrap()
        )
        .unwrap();
    }
    match &args.output {
        Some(p) => write_file(p, &json)?,
        None => t.push_str(&json),
    }
    Ok(Outcome {
        text: t,
        code: if cert.passed() { 0 } else { 1 },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate { path } => cmd_validate(path),
        Command::LambdaGroup(a) => cmd_lambda_group(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Invariants(a) => cmd_invariants(a),
        Command::Certify(a) => cmd_certify(a),
    };
    match result {
        Ok(o) => {
            print!("{}", o.text);
            ExitCode::from(o.code)
        }
        Err(Failure::Math(m)) => {
            println!("{}", m.trim_end());
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
