use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gebra_cli::context::{parse_context, parse_numeric};
use gebra_cli::dsl::parse;
use gebra_cli::eval::{Evaluator, Value};
use gebra_cli::json::{self, GoldenStatus};
use gebra_cli::repro::{golden_applies, run, Golden, Target};
use gebra_core::clifford::AlgebraContext;
use gebra_core::hopf::{normalization, solve_antipode, solve_rmatrix, CoproductKind, ProductKind};
use gebra_core::{ScalarRF, Sym};
use std::collections::BTreeMap;

// A closed pipe (`gebra ... | head`) is not an error worth a panic.
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "gebra", version, about = "Exact Grassmann and Clifford Hopf algebra computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression.
    Eval {
        #[command(flatten)]
        ctx: ContextArgs,
        /// Expression, e.g. "gco(e1^e2)".
        #[arg(long)]
        expr: String,
    },
    /// Recompute a published result and compare it with the stored expectations.
    Repro {
        #[arg(value_enum)]
        target: ReproTarget,
        #[command(flatten)]
        ctx: ContextArgs,
        /// Directory of golden files overriding the built-in ones.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Solve for an antipode or a quasi-triangular structure.
    Solve {
        #[command(subcommand)]
        what: Solve,
    },
}

#[derive(Subcommand)]
enum Solve {
    Antipode {
        #[arg(long, value_enum, default_value = "clifford")]
        product: Product,
        #[arg(long, value_enum, default_value = "clifford")]
        coproduct: Coproduct,
        #[command(flatten)]
        ctx: ContextArgs,
    },
    Rmatrix {
        #[command(flatten)]
        ctx: ContextArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReproTarget {
    All,
    Antipodes,
    BwBs,
    Rmatrix,
    Qybe,
    YbMatrix,
    QtAxioms,
    MmRecursion,
}

impl ReproTarget {
    fn targets(self) -> Vec<Target> {
        match self {
            ReproTarget::All => Target::ALL.to_vec(),
            ReproTarget::Antipodes => vec![Target::Antipodes],
            ReproTarget::BwBs => vec![Target::BwBs],
            ReproTarget::Rmatrix => vec![Target::Rmatrix],
            ReproTarget::Qybe => vec![Target::Qybe],
            ReproTarget::YbMatrix => vec![Target::YbMatrix],
            ReproTarget::QtAxioms => vec![Target::QtAxioms],
            ReproTarget::MmRecursion => vec![Target::MmRecursion],
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Product {
    Wedge,
    Clifford,
}

#[derive(Clone, Copy, ValueEnum)]
enum Coproduct {
    Grassmann,
    Clifford,
}

#[derive(Args)]
struct ContextArgs {
    /// Dimension of the generating space; forms default to b[i,j] and p[i,j].
    #[arg(long)]
    dim: Option<usize>,
    /// Context file with dim, B and BI.
    #[arg(long)]
    context: Option<PathBuf>,
    /// Rational values for symbols, e.g. "b[1,2]=1/2, p[2,1]=3".
    #[arg(long)]
    numeric: Option<String>,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

struct Setup {
    ctx: AlgebraContext,
    bindings: BTreeMap<Sym, ScalarRF>,
    json: bool,
}

enum Failure {
    Usage(String),
    Assertion,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn setup(a: &ContextArgs) -> Result<Setup, Failure> {
    let ctx = match &a.context {
        Some(path) => {
            let src = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let ctx = parse_context(&src).map_err(|e| format!("{}: {e}", path.display()))?;
            if let Some(n) = a.dim.filter(|&n| n != ctx.dim()) {
                return Err(Failure::Usage(format!("--dim {n} disagrees with the context file (dim {})", ctx.dim())));
            }
            ctx
        }
        None => {
            let n = a.dim.unwrap_or(2);
            if n == 0 || n > 16 {
                return Err(Failure::Usage(format!("dimension {n} out of range 1..=16")));
            }
            AlgebraContext::symbolic(n)
        }
    };
    let bindings = match &a.numeric {
        Some(s) => parse_numeric(s)?,
        None => BTreeMap::new(),
    };
    let ctx = if bindings.is_empty() { ctx } else { ctx.subst(&bindings)? };
    Ok(Setup { ctx, bindings, json: a.json })
}

fn eval(a: &ContextArgs, src: &str) -> Result<(), Failure> {
    let s = setup(a)?;
    let e = parse(src).map_err(|e| format!("{e}\n  {src}\n  {}^", " ".repeat(e.offset)))?;
    let v = Evaluator::new(s.ctx.clone()).eval(&e)?;
    let v = if s.bindings.is_empty() {
        v
    } else {
        match v {
            Value::Scalar(x) => Value::Scalar(x.subst(&s.bindings)?),
            Value::Multivector(m) => Value::Multivector(m.subst(&s.bindings)?),
            Value::Tensor(t) => Value::Tensor(t.subst(&s.bindings)?),
        }
    };
    if s.json {
        out!("{}", json::value(&v, s.ctx.dim()));
    } else {
        out!("{v}");
    }
    Ok(())
}

fn repro(target: ReproTarget, a: &ContextArgs, dir: Option<&PathBuf>) -> Result<(), Failure> {
    let s = setup(a)?;
    let check = golden_applies(&s.ctx);
    let mut failed = false;
    let mut docs = Vec::new();
    for t in target.targets() {
        let report = run(t, &s.ctx)?;
        let outcome = if check {
            let golden = Golden::load(t, dir.map(|d| d.as_path()))?;
            Some(golden.check(&report))
        } else {
            None
        };
        let status = match &outcome {
            None => GoldenStatus::Skipped,
            Some(Ok(k)) => GoldenStatus::Passed(*k),
            Some(Err(m)) => GoldenStatus::Failed(m),
        };
        if s.json {
            docs.push(json::report(&report, status));
        } else {
            let _ = write!(std::io::stdout(), "{report}");
            match status {
                GoldenStatus::Skipped => out!("golden: skipped (expectations cover the dimension 2 symbolic context)"),
                GoldenStatus::Passed(k) => out!("golden: {k} of {k} entries match"),
                GoldenStatus::Failed(m) => out!("golden: MISMATCH in {m}"),
            }
            out!("");
        }
        if let Some(Err(m)) = &outcome {
            eprintln!("{}: golden mismatch in {m}", t.name());
            failed = true;
        }
    }
    if s.json {
        let doc = if docs.len() == 1 { docs.remove(0) } else { serde_json::Value::Array(docs) };
        out!("{doc}");
    }
    if failed {
        Err(Failure::Assertion)
    } else {
        Ok(())
    }
}

fn solve_antipode_cmd(p: Product, c: Coproduct, a: &ContextArgs) -> Result<(), Failure> {
    let s = setup(a)?;
    let m = match p {
        Product::Wedge => ProductKind::Wedge,
        Product::Clifford => ProductKind::Clifford,
    };
    let d = match c {
        Coproduct::Grassmann => CoproductKind::Grassmann,
        Coproduct::Clifford => CoproductKind::Clifford,
    };
    let sol = solve_antipode(m, d, &s.ctx)?;
    let n = s.ctx.dim();
    let bi = matches!(d, CoproductKind::Clifford) && matches!(m, ProductKind::Clifford);
    let norm = if bi { Some(normalization(&s.ctx)?) } else { None };
    let shown = sol.antipode.as_ref().map(|a| match &norm {
        Some(nn) => a.scale(nn).into_matrix(),
        None => a.matrix().clone(),
    });
    if s.json {
        let mut doc = serde_json::json!({
            "solution": format!("{:?}", sol.solution.kind).to_lowercase(),
            "right_antipode": sol.right_antipode,
            "free": sol.solution.free.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        });
        if let Some(nn) = &norm {
            doc["normalization"] = serde_json::Value::String(nn.to_string());
        }
        if let Some(m) = &shown {
            doc["antipode"] = json::matrix(m, n);
        }
        out!("{doc}");
    } else {
        out!("solution: {:?}", sol.solution.kind);
        if !sol.solution.free.is_empty() {
            let free: Vec<String> = sol.solution.free.iter().map(|x| x.to_string()).collect();
            out!("free: {}", free.join(", "));
        }
        if let Some(r) = sol.right_antipode {
            out!("right antipode: {r}");
        }
        if let Some(nn) = &norm {
            out!("N = {nn}");
        }
        if let Some(m) = &shown {
            out!("{} =\n{m}", if norm.is_some() { "N*S" } else { "S" });
        }
    }
    Ok(())
}

fn solve_rmatrix_cmd(a: &ContextArgs) -> Result<(), Failure> {
    let s = setup(a)?;
    let sol = solve_rmatrix(&s.ctx)?;
    if s.json {
        let mut doc = serde_json::json!({
            "solution": format!("{:?}", sol.solution.kind).to_lowercase(),
            "residual_zero": sol.residual_zero,
        });
        if let Some(r) = &sol.r {
            doc["r"] = json::matrix(r.matrix(), s.ctx.dim());
        }
        out!("{doc}");
    } else {
        out!("solution: {:?}", sol.solution.kind);
        out!("residual vanishes: {}", sol.residual_zero);
        if let Some(r) = &sol.r {
            out!("R =\n{}", r.matrix());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Eval { ctx, expr } => eval(ctx, expr),
        Command::Repro { target, ctx, golden } => repro(*target, ctx, golden.as_ref()),
        Command::Solve { what: Solve::Antipode { product, coproduct, ctx } } => {
            solve_antipode_cmd(*product, *coproduct, ctx)
        }
        Command::Solve { what: Solve::Rmatrix { ctx } } => solve_rmatrix_cmd(ctx),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
