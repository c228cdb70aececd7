use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use singlab_core::gb::{buchberger, standard_basis};
use singlab_core::homological::{default_cap, free_resolution, resolve_to_stabilization, FpModule, PolyMatrix};
use singlab_core::intersection::{build_double_ring, diagonal_module, graph_module, ks_pairing, CorrespondenceClass, DoubleRing};
use singlab_core::invariants::{characteristic_warnings, deligne_milnor_check, global_milnor_number, milnor_number, parse_weights};
use singlab_core::mf::{stabilize_from_resolution, xi_fold, KoszulDgModule};
use singlab_core::parse::{infer_variables, parse_polynomial, parse_polynomial_list, ParseError};
use singlab_core::poly::{CoefficientField, MonomialOrder, PolyRing, Polynomial, DEFAULT_PRIME};
use singlab_core::suite::{ade_suite, field_label, run_entry, SuiteEntry, SuiteReport};
use singlab_core::AlgebraError;

mod render;

#[derive(Parser)]
#[command(name = "singlab", version, about = "Milnor numbers, stable Tor pairings and matrix factorizations")]
struct Cli {
    /// Coefficient field: `q`, `fp` (p = 32003) or `fp:<odd prime>`.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Comma-separated variable order; inferred alphabetically when omitted.
    #[arg(long, global = true)]
    vars: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Grevlex,
    Local,
}

#[derive(Subcommand)]
enum Command {
    /// Local Milnor number at the origin.
    Milnor {
        #[arg(long)]
        f: String,
    },
    /// Stable Tor pairing of the diagonal with a class.
    Pairing {
        #[arg(long, required_unless_present = "suite")]
        f: Option<String>,
        /// `diagonal`, `free`, `graph:<images of the variables, comma-separated>`
        /// or `ideal:<generators in x0.., y0.., separated by ;>`.
        #[arg(long, default_value = "diagonal")]
        class: String,
        /// TOML or JSON batch file, or `builtin:ade`.
        #[arg(long, conflicts_with = "f")]
        suite: Option<String>,
    },
    /// Milnor number against the self-pairing of the diagonal.
    DmCheck {
        #[arg(long, required_unless_present = "suite")]
        f: Option<String>,
        /// Weights such as `1/3,1/5`, in variable order.
        #[arg(long, conflicts_with = "suite")]
        weights: Option<String>,
        #[arg(long, conflicts_with = "f")]
        suite: Option<String>,
    },
    /// Matrix factorization from the periodic resolution of `S/(ideal)` over `S/(w)`.
    MfStabilize {
        #[arg(long)]
        w: String,
        /// Defaults to the ideal of all variables.
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Folds a Koszul dg-module given as JSON into a Z/2-graded complex.
    XiFold {
        #[arg(long)]
        input: PathBuf,
    },
    /// Reduced Gröbner basis (standard basis for `local`).
    Gb {
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value_t = Order::Grevlex)]
        order: Order,
    },
    /// Free resolution of `S/(ideal)`, over `S/(w)` when `--w` is given.
    Resolve {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        w: Option<String>,
        /// Number of differentials; without it, resolve until the tail repeats.
        #[arg(long)]
        length: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Compute(AlgebraError),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Parse(p) => Failure::Usage(p.to_string()),
            other => Failure::Compute(other),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<Value, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_field(spec: &str) -> Result<CoefficientField, Failure> {
    match spec.trim() {
        "q" | "Q" => Ok(CoefficientField::Rational),
        "fp" => Ok(CoefficientField::prime(DEFAULT_PRIME).expect("default prime")),
        s => {
            let p = s
                .strip_prefix("fp:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| usage(format!("unknown field `{s}`; expected q or fp:<prime>")))?;
            CoefficientField::prime(p).map_err(|e| usage(e.to_string()))
        }
    }
}

struct Ctx {
    field: CoefficientField,
    vars: Option<Vec<String>>,
}

impl Ctx {
    /// A ring over the variables of `texts` (or `--vars`).
    fn ring(&self, texts: &[&str], order: MonomialOrder) -> Result<Arc<PolyRing>, Failure> {
        let vars = match &self.vars {
            Some(v) => v.clone(),
            None => {
                let mut all = Vec::new();
                for t in texts {
                    all.extend(infer_variables(t)?);
                }
                all.sort();
                all.dedup();
                all
            }
        };
        if vars.is_empty() {
            return Err(usage("no variables: the input is constant"));
        }
        PolyRing::new(vars, self.field, order).map_err(|e| usage(e.to_string()))
    }

    fn poly(&self, text: &str) -> Result<Polynomial, Failure> {
        let ring = self.ring(&[text], MonomialOrder::Grevlex)?;
        Ok(parse_polynomial(text, &ring)?)
    }
}

fn load_suite(spec: &str) -> Result<Vec<SuiteEntry>, Failure> {
    if spec == "builtin:ade" {
        return Ok(ade_suite());
    }
    let text = std::fs::read_to_string(spec).map_err(|e| usage(format!("cannot read {spec}: {e}")))?;
    if spec.ends_with(".toml") {
        #[derive(Deserialize)]
        struct TomlSuite {
            case: Vec<SuiteEntry>,
        }
        let s: TomlSuite = toml::from_str(&text).map_err(|e| usage(format!("{spec}: {e}")))?;
        Ok(s.case)
    } else {
        serde_json::from_str(&text).map_err(|e| usage(format!("{spec}: {e}")))
    }
}

fn class_for(d: &DoubleRing, spec: &str) -> Result<CorrespondenceClass, Failure> {
    if spec == "diagonal" {
        return Ok(diagonal_module(d));
    }
    if spec == "free" {
        return Ok(CorrespondenceClass::free(d, 1)?);
    }
    if let Some(images) = spec.strip_prefix("graph:") {
        let sigma = parse_polynomial_list(images, d.base())?;
        return Ok(graph_module(d, &sigma)?);
    }
    if let Some(gens) = spec.strip_prefix("ideal:") {
        let ideal = gens
            .split(';')
            .map(|g| parse_polynomial(g, d.ring()))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(CorrespondenceClass::cyclic(d, spec, &ideal)?);
    }
    Err(usage(format!("unknown class `{spec}`")))
}

fn milnor(ctx: &Ctx, f: &str) -> Out {
    let f = ctx.poly(f)?;
    Ok(json!({
        "f": f.to_string(),
        "mu": milnor_number(&f)?.as_signed(),
        "global_mu": global_milnor_number(&f)?.as_signed(),
        "warnings": characteristic_warnings(&f),
    }))
}

fn pairing(ctx: &Ctx, f: Option<&str>, class: &str, suite: Option<&str>) -> Out {
    let one = |f: &str| -> Out {
        let d = build_double_ring(&ctx.poly(f)?)?;
        let report = ks_pairing(&d, &class_for(&d, class)?)?;
        Ok(serde_json::to_value(report).expect("serializable"))
    };
    match suite {
        None => one(f.expect("clap enforces --f")),
        Some(spec) => {
            let entries = load_suite(spec)?;
            let rows: Vec<Out> = entries.par_iter().map(|e| one(&e.f)).collect();
            let mut out = Vec::new();
            for (e, row) in entries.iter().zip(rows) {
                out.push(json!({ "name": e.name, "report": row? }));
            }
            Ok(json!({ "field": field_label(ctx.field), "class": class, "rows": out }))
        }
    }
}

fn dm_check(ctx: &Ctx, f: Option<&str>, weights: Option<&str>, suite: Option<&str>) -> Out {
    match suite {
        None => {
            let f = ctx.poly(f.expect("clap enforces --f"))?;
            let w = weights.map(|w| parse_weights(&w.split(',').collect::<Vec<_>>())).transpose()?;
            Ok(serde_json::to_value(deligne_milnor_check(&f, w.as_deref())?).expect("serializable"))
        }
        Some(spec) => {
            let entries = load_suite(spec)?;
            let rows = entries.par_iter().map(|e| run_entry(e, ctx.field)).collect::<Result<Vec<_>, _>>()?;
            Ok(serde_json::to_value(SuiteReport::new(ctx.field, rows)).expect("serializable"))
        }
    }
}

fn module_of(ctx: &Ctx, ideal: &str, w: Option<&str>) -> Result<FpModule, Failure> {
    let mut texts = vec![ideal];
    texts.extend(w);
    let ring = ctx.ring(&texts, MonomialOrder::Grevlex)?;
    let gens = parse_polynomial_list(ideal, &ring)?;
    let w = w.map(|w| parse_polynomial(w, &ring)).transpose()?;
    Ok(FpModule::cyclic(&ring, w, &gens)?)
}

fn mf_stabilize(ctx: &Ctx, w: &str, ideal: Option<&str>) -> Out {
    let ring = ctx.ring(&[w, ideal.unwrap_or("")], MonomialOrder::Grevlex)?;
    let default: String = ring.vars().join(", ");
    let m = module_of(ctx, ideal.unwrap_or(&default), Some(w))?;
    let res = resolve_to_stabilization(&m, default_cap(m.ring().nvars()))?;
    Ok(stabilize_from_resolution(&res)?.to_json())
}

fn resolve(ctx: &Ctx, ideal: &str, w: Option<&str>, length: Option<usize>) -> Out {
    let m = module_of(ctx, ideal, w)?;
    let res = match (length, w) {
        (Some(n), _) => free_resolution(&m, n)?,
        (None, Some(_)) => resolve_to_stabilization(&m, default_cap(m.ring().nvars()))?,
        // over a polynomial ring the resolution ends after at most nvars steps
        (None, None) => free_resolution(&m, m.ring().nvars() + 1)?,
    };
    let c = res.complex();
    Ok(json!({
        "ideal": parse_polynomial_list(ideal, m.ring())?.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "potential": m.potential().map(|p| p.to_string()),
        "ranks": c.ranks(),
        "differentials": c.differentials().iter().map(|d| d.to_strings()).collect::<Vec<_>>(),
        "minimal": res.minimal(),
        "finite": res.is_finite(),
        "stabilization_index": res.stabilization_index(),
    }))
}

fn gb(ctx: &Ctx, ideal: &str, order: Order) -> Out {
    let (order_name, mono) = match order {
        Order::Lex => ("lex", MonomialOrder::Lex),
        Order::Grevlex => ("grevlex", MonomialOrder::Grevlex),
        Order::Local => ("local", MonomialOrder::Local),
    };
    let ring = ctx.ring(&[ideal], mono)?;
    let gens = parse_polynomial_list(ideal, &ring)?;
    let basis = match order {
        Order::Local => standard_basis(&ring, &gens),
        _ => buchberger(&ring, &gens),
    }
    .map_err(AlgebraError::from)?;
    Ok(json!({
        "vars": ring.vars(),
        "field": field_label(ctx.field),
        "order": order_name,
        "input": gens.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "basis": basis.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "colength": basis.colength().as_signed(),
    }))
}

#[derive(Deserialize)]
struct FoldInput {
    vars: Vec<String>,
    #[serde(default)]
    modulus: Vec<String>,
    #[serde(default)]
    lowest: i64,
    ranks: Vec<usize>,
    d: Vec<Vec<Vec<String>>>,
    #[serde(default)]
    h: Option<Vec<Vec<Vec<String>>>>,
    /// Build the free Koszul module on the complex `(ranks, d)` instead of reading `h`.
    #[serde(default)]
    free: bool,
}

fn matrix(ring: &Arc<PolyRing>, rows: usize, cols: usize, entries: &[Vec<String>]) -> Result<PolyMatrix, Failure> {
    if entries.is_empty() || cols == 0 {
        return Ok(PolyMatrix::zeros(ring, rows, cols));
    }
    let parsed = entries
        .iter()
        .map(|r| r.iter().map(|s| parse_polynomial(s, ring)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let m = PolyMatrix::from_rows(ring, parsed)?;
    if (m.rows(), m.cols()) != (rows, cols) {
        return Err(usage(format!("expected a {rows}x{cols} matrix, got {}x{}", m.rows(), m.cols())));
    }
    Ok(m)
}

fn xi_fold_cmd(ctx: &Ctx, path: &PathBuf) -> Out {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let input: FoldInput = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let ring = PolyRing::new(input.vars.clone(), ctx.field, MonomialOrder::Grevlex).map_err(|e| usage(e.to_string()))?;
    let modulus = input.modulus.iter().map(|s| parse_polynomial(s, &ring)).collect::<Result<Vec<_>, _>>()?;
    let r = &input.ranks;
    if input.d.len() + 1 != r.len().max(1) {
        return Err(usage("`d` needs one matrix between consecutive degrees"));
    }
    let d = (0..input.d.len()).map(|k| matrix(&ring, r[k + 1], r[k], &input.d[k])).collect::<Result<Vec<_>, _>>()?;
    let module = if input.free {
        KoszulDgModule::free_on(&ring, modulus, input.lowest, r, &d)?
    } else {
        let h_in = input.h.ok_or_else(|| usage("`h` is required unless `free` is set"))?;
        if h_in.len() != input.d.len() {
            return Err(usage("`h` needs one matrix between consecutive degrees"));
        }
        let h = (0..h_in.len()).map(|k| matrix(&ring, r[k], r[k + 1], &h_in[k])).collect::<Result<Vec<_>, _>>()?;
        KoszulDgModule::new(&ring, modulus, input.lowest, r.clone(), d, h)?
    };
    let z = xi_fold(&module)?;
    let (even, odd) = z.homology(true)?;
    Ok(json!({
        "even_rank": z.even_rank(),
        "odd_rank": z.odd_rank(),
        "d_plus": z.d_plus().to_strings(),
        "d_minus": z.d_minus().to_strings(),
        "homology": { "even": even.as_signed(), "odd": odd.as_signed() },
    }))
}

fn run(cli: &Cli) -> Out {
    let field = parse_field(&cli.field)?;
    let vars = cli.vars.as_ref().map(|v| v.split(',').map(|s| s.trim().to_string()).collect());
    let ctx = Ctx { field, vars };
    match &cli.command {
        Command::Milnor { f } => milnor(&ctx, f),
        Command::Pairing { f, class, suite } => pairing(&ctx, f.as_deref(), class, suite.as_deref()),
        Command::DmCheck { f, weights, suite } => dm_check(&ctx, f.as_deref(), weights.as_deref(), suite.as_deref()),
        Command::MfStabilize { w, ideal } => mf_stabilize(&ctx, w, ideal.as_deref()),
        Command::XiFold { input } => xi_fold_cmd(&ctx, input),
        Command::Gb { ideal, order } => gb(&ctx, ideal, *order),
        Command::Resolve { ideal, w, length } => resolve(&ctx, ideal, w.as_deref(), *length),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(v) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
                Format::Text => render::text(&v),
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            let msg = e.to_string();
            if msg.starts_with(e.code()) {
                eprintln!("error: {msg}");
            } else {
                eprintln!("error[{}]: {msg}", e.code());
            }
            ExitCode::from(1)
        }
    }
}
