use std::cmp::Ordering;
use std::fs;
use std::io::Read;
use std::path::Path;

use monord::bigser;
use monord::chains::{self, BoundFn};
use monord::hilbert::{self, Config};
use monord::orderings::{self, Comparison};
use monord::{CnfOrdinal, Error, ExpVec, IntegerValuedPoly, MatrixOrder, MonomialIdeal, TermOrder};
use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::{ChainArgs, Cli, Command, CompareArgs, HilbertArgs, OrderKind};
use crate::{EXIT_DATA, EXIT_RESOURCE, EXIT_USAGE};

pub struct Output {
    pub text: String,
    pub code: u8,
}

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: EXIT_USAGE,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooManyGenerators { .. } | Error::BudgetExceeded { .. } | Error::WindowExhausted { .. } => {
                EXIT_RESOURCE
            }
            _ => EXIT_DATA,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn ok(text: String) -> Result<Output> {
    Ok(Output { text, code: 0 })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("output types serialize")
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn read_ideal(path: &Path) -> Result<MonomialIdeal> {
    MonomialIdeal::parse(&read_text(path)?).map_err(|e| {
        let mut err = CliError::from(e);
        err.message = format!("{}: {}", path.display(), err.message);
        err
    })
}

fn print_ideal(e: &MonomialIdeal, json: bool) -> Result<Output> {
    if json {
        ok(to_json(e))
    } else {
        ok(e.to_file_string().trim_end().to_string())
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let json = cli.json;
    match &cli.command {
        Command::Normalize { file } => print_ideal(&read_ideal(file)?, json),
        Command::Contains { file, monomial } => {
            let e = read_ideal(file)?;
            let v = ExpVec::parse(monomial, e.dim())?;
            let inside = e.contains(&v)?;
            if json {
                ok(to_json(&serde_json::json!({ "contains": inside })))
            } else {
                ok(inside.to_string())
            }
        }
        Command::Compare(args) => compare(args),
        Command::Hilbert(args) => hilbert_cmd(args, json),
        Command::Decompose { file, by_support } => decompose(&read_ideal(file)?, *by_support, json),
        Command::Lexify { file, degree } => lexify(&read_ideal(file)?, *degree, json),
        Command::Cone { file } => print_ideal(&read_ideal(file)?.cone(), json),
        Command::Directsum { left, right } => {
            print_ideal(&read_ideal(left)?.direct_sum(&read_ideal(right)?)?, json)
        }
        Command::Chainbound(args) => chainbound(args, json),
        Command::Bounds { m } => bounds(*m, json),
        Command::OrdinalEval { expr } => {
            let v = crate::expr::eval(expr)?;
            if json {
                ok(to_json(&serde_json::json!({
                    "value": v,
                    "finite": v.is_finite(),
                    "successor": v.is_successor(),
                    "limit": v.is_limit(),
                })))
            } else {
                ok(v.to_string())
            }
        }
    }
}

fn term_order(spec: &str) -> Result<TermOrder> {
    match spec {
        "deglex" => Ok(TermOrder::DegLex),
        "lex" => Ok(TermOrder::Lex),
        _ => match spec.strip_prefix("matrix:") {
            Some(path) => Ok(TermOrder::Matrix(MatrixOrder::parse(&read_text(Path::new(path))?)?)),
            None => Err(CliError::usage(format!(
                "unknown term order {spec:?}; use deglex, lex or matrix:FILE"
            ))),
        },
    }
}

#[derive(Serialize)]
struct CompareOut<'a> {
    order: &'a str,
    #[serde(flatten)]
    comparison: Comparison,
}

fn compare(args: &CompareArgs) -> Result<Output> {
    let e = read_ideal(&args.left)?;
    let f = read_ideal(&args.right)?;
    if e.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            left: e.dim(),
            right: f.dim(),
        }
        .into());
    }
    let (name, comparison) = match args.order {
        OrderKind::Kb => {
            let order = term_order(&args.term_order)?;
            if !order.has_type_omega(e.dim()) {
                return Err(CliError::usage(format!(
                    "--order kb needs a degree-compatible term order on {} variables",
                    e.dim()
                )));
            }
            ("kb", orderings::kb_compare(&e, &f, &order)?)
        }
        OrderKind::Triangle => ("triangle", orderings::triangle_compare(&e, &f)?),
        OrderKind::Mintype => ("mintype", orderings::min_type_compare(&e, &f)?),
    };
    let code = match comparison.ordering {
        Ordering::Less => 10,
        Ordering::Equal => 11,
        Ordering::Greater => 12,
    };
    Ok(Output {
        text: to_json(&CompareOut {
            order: name,
            comparison,
        }),
        code,
    })
}

#[derive(Serialize)]
struct HilbertOut {
    dim: usize,
    #[serde(rename = "H", serialize_with = "bigser::seq")]
    hilbert: Vec<BigUint>,
    #[serde(rename = "h", serialize_with = "bigser::seq")]
    samuel: Vec<BigUint>,
    p: IntegerValuedPoly,
    p_text: String,
    threshold: u64,
    #[serde(serialize_with = "bigser::opt_seq")]
    c: Option<Vec<BigInt>>,
    psi: CnfOrdinal,
    #[serde(serialize_with = "bigser::opt")]
    phi: Option<BigUint>,
    a: Option<Vec<u32>>,
    n0: Option<u64>,
    height: CnfOrdinal,
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn hilbert_cmd(args: &HilbertArgs, json: bool) -> Result<Output> {
    let e = read_ideal(&args.file)?;
    let cfg = Config {
        subset_cap: args.subset_cap,
        n0_window: args.n0_window,
        ..Config::default()
    };
    let prof = hilbert::profile(&e, &cfg)?;
    let upto = args
        .upto
        .unwrap_or(prof.threshold.max(prof.n0.unwrap_or(0)) + e.dim() as u64);
    let (hf, hs) = hilbert::hilbert_values(&e, upto, &cfg)?;
    let out = HilbertOut {
        dim: e.dim(),
        hilbert: hf,
        samuel: hs,
        p_text: prof.p.to_string(),
        p: prof.p,
        threshold: prof.threshold,
        c: prof.c,
        height: prof.psi.clone(),
        psi: prof.psi,
        phi: prof.phi,
        a: prof.a_sequence,
        n0: prof.n0,
    };
    if json {
        return ok(to_json(&out));
    }
    let dash = || "-".to_string();
    let lines = [
        format!("H: {}", join(&out.hilbert)),
        format!("h: {}", join(&out.samuel)),
        format!("p: {}", out.p_text),
        format!("threshold: {}", out.threshold),
        format!("c: {}", out.c.as_deref().map_or_else(dash, join)),
        format!("psi: {}", out.psi),
        format!("phi: {}", out.phi.as_ref().map_or_else(dash, BigUint::to_string)),
        format!("a: {}", out.a.as_deref().map_or_else(dash, join)),
        format!("n0: {}", out.n0.map_or_else(dash, |n| n.to_string())),
        format!("height: {}", out.height),
    ];
    ok(lines.join("\n"))
}

fn decompose(e: &MonomialIdeal, by_support: bool, json: bool) -> Result<Output> {
    if by_support {
        let groups = e.components_by_support()?;
        if json {
            let v: Vec<_> = groups
                .iter()
                .map(|(s, w)| {
                    serde_json::json!({
                        "support": s.iter().map(|i| i + 1).collect::<Vec<_>>(),
                        "word": w.letters(),
                    })
                })
                .collect();
            return ok(to_json(&v));
        }
        let lines: Vec<String> = groups
            .iter()
            .map(|(s, w)| {
                let support: Vec<String> = s.iter().map(|i| format!("x{}", i + 1)).collect();
                let word: Vec<String> = w.letters().iter().map(|l| format!("({l})")).collect();
                format!("{{{}}}: {}", support.join(","), word.join(" "))
            })
            .collect();
        return ok(lines.join("\n"));
    }
    let comps = e.irreducible_decomposition()?;
    if json {
        return ok(to_json(&serde_json::json!({ "components": comps })));
    }
    let lines: Vec<String> = comps
        .iter()
        .map(|nu| format!("{nu}\t{}", MonomialIdeal::irreducible(nu)))
        .collect();
    ok(lines.join("\n"))
}

/// Largest degree bound tried when none is given.
const LEXIFY_MAX_DEGREE: u64 = 4096;

fn lexify(e: &MonomialIdeal, degree: Option<u64>, json: bool) -> Result<Output> {
    let cfg = Config::default();
    let lex = match degree {
        Some(d) => hilbert::lex_segment_ideal(e, d, &cfg)?,
        None => {
            let mut d = e.max_generator_degree().max(1);
            loop {
                match hilbert::lex_segment_ideal(e, d, &cfg) {
                    Err(Error::DegreeBoundTooSmall(_)) if d < LEXIFY_MAX_DEGREE => d = 2 * d + 1,
                    other => break other?,
                }
            }
        }
    };
    print_ideal(&lex, json)
}

fn chainbound(args: &ChainArgs, json: bool) -> Result<Output> {
    let (p, q) = args.affine;
    let f = BoundFn::affine(p, q);
    let bound = if args.tm { f.compose_h(args.m as u32) } else { f };
    let value = chains::ell(args.m, &bound, args.budget);
    let value = match value {
        Ok(v) => v,
        Err(Error::BudgetExceeded { depth, frames }) => {
            let text = if json {
                to_json(&serde_json::json!({
                    "error": "budget exceeded",
                    "depth": depth,
                    "frames": frames,
                    "budget": args.budget,
                }))
            } else {
                format!("budget exceeded at depth {depth}")
            };
            return Ok(Output {
                text,
                code: EXIT_RESOURCE,
            });
        }
        Err(e) => return Err(e.into()),
    };
    let sequence = match args.sequence {
        Some(n) => Some(chains::extremal_sequence(args.m, &bound, n, args.budget)?),
        None => None,
    };
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            m: usize,
            p: u64,
            q: u64,
            tm: bool,
            #[serde(serialize_with = "bigser::one")]
            value: &'a BigUint,
            #[serde(skip_serializing_if = "Option::is_none")]
            sequence: Option<Vec<ExpVec>>,
        }
        return ok(to_json(&Out {
            m: args.m,
            p,
            q,
            tm: args.tm,
            value: &value,
            sequence,
        }));
    }
    let mut text = value.to_string();
    for v in sequence.unwrap_or_default() {
        text.push('\n');
        text.push_str(&v.to_string());
    }
    ok(text)
}

fn bounds(m: usize, json: bool) -> Result<Output> {
    let r = orderings::bounds_report(m)?;
    if json {
        return ok(to_json(&r));
    }
    let mut lines = vec![
        format!("height: {}", r.height),
        format!("kb: {}", r.kb_order_type),
        format!("lower: {}", r.type_lower),
        format!("upper: {}", r.type_upper),
    ];
    if let Some(t) = &r.triangle_order_type_m2 {
        lines.push(format!("triangle: {t}"));
    }
    ok(lines.join("\n"))
}
