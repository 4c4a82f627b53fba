use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qweyl::freealg::{normal_order_with, specialize_q, Strategy};
use qweyl::normal::{
    c_oracle, c_recursive, c_subsets, c_tform, mk_count, npoly_oracle, npoly_q, npoly_q1,
    npoly_q_alt,
};
use qweyl::qpoly::parse_rational;
use qweyl::qrep::IdentityForm;
use qweyl::sympow::{scale_factor, scaled_product_formula, scaled_product_oracle, SymElement};
use qweyl::verify::{self, Bounds, Suite};
use qweyl::{BigRational, Error, FactorGrid, Guards, MonomialSeq, QPoly, Word};

#[derive(Parser)]
#[command(
    name = "qweyl",
    version,
    about = "Normal ordering and symmetric powers in the q-meromorphic Weyl algebra"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Evaluate coefficients at this rational value of q, e.g. 1/2.
    #[arg(long, global = true, value_name = "NUM/DEN")]
    q_at: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a word in x and y.
    NormalOrder {
        word: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Leftmost)]
        strategy: StrategyArg,
    },
    /// The coefficient c(a,b,k) of x^{b+k} y^{a-k} in y^a x^b.
    Ncoeff {
        a: u32,
        b: u32,
        k: u32,
        #[arg(long, value_enum, default_value_t = CMethod::Recursion)]
        method: CMethod,
    },
    /// The normal polynomial N(A,k,q) of a monomial "(a1,b1)(a2,b2)...".
    Npoly {
        seq: String,
        k: u32,
        #[arg(long, value_enum, default_value_t = NMethod::Formula)]
        method: NMethod,
    },
    /// Product in Sym^n of the rows of a grid "(a,b)(a,b);(a,b)(a,b)".
    Sympow {
        grid: String,
        #[arg(long, value_enum, default_value_t = SMethod::Formula)]
        method: SMethod,
        /// Print (n!)^{m-1} times the product.
        #[arg(long)]
        scaled: bool,
    },
    /// Agreement sweeps between formulas and rewriting.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CMethod {
    Recursion,
    Subsets,
    Tform,
    Rewrite,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NMethod {
    #[value(alias = "juju")]
    Formula,
    Alt,
    Rewrite,
    Q1,
    Mk,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SMethod {
    Formula,
    Oracle,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    CCoeffs,
    Npoly,
    Sympow,
    Representations,
    Identities,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Derived,
    Printed,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    #[arg(long)]
    max_a: Option<u32>,
    #[arg(long)]
    max_b: Option<u32>,
    /// Largest number of pairs in a sequence, and of rows and columns in a grid.
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_exp: Option<u32>,
    /// Largest total degree in the q = 1 bridge.
    #[arg(long)]
    max_total: Option<u32>,
    #[arg(long)]
    max_word: Option<usize>,
    /// Number of random instances.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Which form of the bracket identities to check.
    #[arg(long, value_enum, default_value_t = VariantArg::Derived)]
    variant: VariantArg,
}

/// A rendered result: text, LaTeX and JSON views plus the exit status.
struct Output {
    kind: &'static str,
    text: String,
    latex: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(kind: &'static str, text: String, latex: String, json: Value) -> Self {
        Output {
            kind,
            text,
            latex,
            json,
            ok: true,
        }
    }
}

struct Ctx {
    guards: Guards,
    q_at: Option<BigRational>,
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        Error::Guard { .. } => ExitCode::from(3),
        Error::Parse(_) | Error::Domain(_) => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let guards = Guards::from_env();
    let q_at = match cli.q_at.as_deref().map(parse_rational).transpose() {
        Ok(q) => q,
        Err(e) => return fail(&e),
    };
    let ctx = Ctx { guards, q_at };
    let out = match run(&cli.command, &ctx) {
        Ok(out) => out,
        Err(e) => return fail(&e),
    };
    match cli.format {
        Format::Text => println!("{}", out.text),
        Format::Latex => println!("{}", out.latex),
        Format::Json => {
            let mut meta = json!({ "guards": ctx.guards });
            if let Some(q) = &ctx.q_at {
                meta["q_at"] = json!(q.to_string());
            }
            let doc = json!({ "kind": out.kind, "value": out.json, "meta": meta });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        }
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: &Command, ctx: &Ctx) -> qweyl::Result<Output> {
    match command {
        Command::NormalOrder { word, strategy } => normal_order_cmd(word, *strategy, ctx),
        Command::Ncoeff { a, b, k, method } => ncoeff_cmd(*a, *b, *k, *method, ctx),
        Command::Npoly { seq, k, method } => npoly_cmd(seq, *k, *method, ctx),
        Command::Sympow {
            grid,
            method,
            scaled,
        } => sympow_cmd(grid, *method, *scaled, ctx),
        Command::Verify(args) => verify_cmd(args, ctx),
    }
}

fn latex_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        let sign = if r.numer() < &0.into() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().magnitude(), r.denom())
    }
}

fn latex_xy(b: u32, c: u32) -> String {
    let pow = |v: &str, e: u32| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{{{e}}}"),
    };
    format!("{}{}", pow("x", b), pow("y", c))
}

/// A polynomial in q, or its value when `--q-at` is given.
fn scalar(kind_poly: &'static str, p: &QPoly, ctx: &Ctx) -> Output {
    match &ctx.q_at {
        Some(q) => {
            let v = p.eval_at(q);
            Output::new(
                "rational",
                v.to_string(),
                latex_rational(&v),
                json!(v.to_string()),
            )
        }
        None => Output::new(kind_poly, p.to_string(), p.to_latex(), p.to_json()),
    }
}

fn normal_order_cmd(word: &str, strategy: StrategyArg, ctx: &Ctx) -> qweyl::Result<Output> {
    let word: Word = word.parse()?;
    let strategy = match strategy {
        StrategyArg::Leftmost => Strategy::Leftmost,
        StrategyArg::Rightmost => Strategy::Rightmost,
    };
    let nf = normal_order_with(&word, strategy, &ctx.guards)?;
    let Some(q) = &ctx.q_at else {
        return Ok(Output::new(
            "mw_element",
            nf.to_string(),
            nf.to_latex(),
            nf.to_json(),
        ));
    };
    let values = specialize_q(&nf, q);
    let text = if values.is_empty() {
        "0".to_string()
    } else {
        values
            .iter()
            .map(|(&(b, c), v)| {
                let mut s = format!("({v})");
                if b > 0 {
                    s += &format!("*x^{b}");
                }
                if c > 0 {
                    s += &format!("*y^{c}");
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    let latex = if values.is_empty() {
        "0".to_string()
    } else {
        values
            .iter()
            .map(
                |(&(b, c), v)| match (latex_xy(b, c), v.is_integer() && *v.numer() == 1.into()) {
                    (m, _) if m.is_empty() => latex_rational(v),
                    (m, true) => m,
                    (m, false) => format!("{}{m}", latex_rational(v)),
                },
            )
            .collect::<Vec<_>>()
            .join(" + ")
    };
    let json = Value::Array(
        values
            .iter()
            .map(|(&(b, c), v)| json!({"x": b, "y": c, "coeff": v.to_string()}))
            .collect(),
    );
    Ok(Output::new("mw_element_at_q", text, latex, json))
}

/// Prints each method's value and an AGREE/DISAGREE verdict over those that
/// were applicable.
fn comparison(rows: Vec<(&'static str, qweyl::Result<Output>)>) -> qweyl::Result<Output> {
    let mut text = Vec::new();
    let mut latex = Vec::new();
    let mut json_rows = serde_json::Map::new();
    let mut values: Vec<Value> = Vec::new();
    for (name, row) in rows {
        match row {
            Ok(out) => {
                text.push(format!("{name}: {}", out.text));
                latex.push(format!("\\text{{{name}}}: {}", out.latex));
                values.push(out.json.clone());
                json_rows.insert(name.into(), out.json);
            }
            Err(e @ Error::Guard { .. }) => return Err(e),
            Err(e) => {
                text.push(format!("{name}: n/a ({e})"));
                latex.push(format!("\\text{{{name}}}: \\text{{n/a}}"));
                json_rows.insert(name.into(), Value::Null);
            }
        }
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    let verdict = if agree { "AGREE" } else { "DISAGREE" };
    text.push(verdict.into());
    latex.push(format!("\\text{{{verdict}}}"));
    let mut out = Output::new(
        "comparison",
        text.join("\n"),
        latex.join("\\\\\n"),
        json!({"methods": json_rows, "agree": agree}),
    );
    out.ok = agree;
    Ok(out)
}

fn ncoeff_cmd(a: u32, b: u32, k: u32, method: CMethod, ctx: &Ctx) -> qweyl::Result<Output> {
    let g = &ctx.guards;
    let one = |m: CMethod| -> qweyl::Result<Output> {
        let p = match m {
            CMethod::Recursion => c_recursive(a, b, k),
            CMethod::Subsets => c_subsets(a, b, k, g)?,
            CMethod::Tform => c_tform(a, b, k, g)?,
            CMethod::Rewrite => c_oracle(a, b, k, g)?,
            CMethod::All => unreachable!(),
        };
        Ok(scalar("qpoly", &p, ctx))
    };
    if method != CMethod::All {
        return one(method);
    }
    comparison(vec![
        ("recursion", one(CMethod::Recursion)),
        ("subsets", one(CMethod::Subsets)),
        ("tform", one(CMethod::Tform)),
        ("rewrite", one(CMethod::Rewrite)),
    ])
}

fn npoly_cmd(seq: &str, k: u32, method: NMethod, ctx: &Ctx) -> qweyl::Result<Output> {
    let seq: MonomialSeq = seq.parse()?;
    let g = &ctx.guards;
    let integer = |n: num_bigint::BigInt| {
        Output::new(
            "integer",
            n.to_string(),
            n.to_string(),
            json!(n.to_string()),
        )
    };
    let one = |m: NMethod| -> qweyl::Result<Output> {
        Ok(match m {
            NMethod::Formula => scalar("qpoly", &npoly_q(&seq, k), ctx),
            NMethod::Alt => scalar("qpoly", &npoly_q_alt(&seq, k), ctx),
            NMethod::Rewrite => scalar("qpoly", &npoly_oracle(&seq, k, g)?, ctx),
            NMethod::Q1 => integer(npoly_q1(&seq, k)),
            NMethod::Mk => integer(mk_count(&seq, k, g)?),
            NMethod::All => unreachable!(),
        })
    };
    if method != NMethod::All {
        return one(method);
    }
    let polys = comparison(vec![
        ("formula", one(NMethod::Formula)),
        ("alt", one(NMethod::Alt)),
        ("rewrite", one(NMethod::Rewrite)),
    ])?;
    let at_one = Ctx {
        guards: ctx.guards,
        q_at: Some(BigRational::from_integer(1.into())),
    };
    let integers = comparison(vec![
        (
            "formula at q=1",
            Ok(scalar("qpoly", &npoly_q(&seq, k), &at_one)),
        ),
        ("q1", Ok(integer(npoly_q1(&seq, k)))),
        ("mk", one(NMethod::Mk)),
    ])?;
    let ok = polys.ok && integers.ok;
    let mut out = Output::new(
        "comparison",
        format!("{}\n{}", polys.text, integers.text),
        format!("{}\\\\\n{}", polys.latex, integers.latex),
        json!({"q": polys.json, "q=1": integers.json, "agree": ok}),
    );
    out.ok = ok;
    Ok(out)
}

fn render_sym(e: &SymElement, ctx: &Ctx) -> Output {
    match &ctx.q_at {
        None => Output::new("sym_element", e.to_string(), e.to_latex(), e.to_json()),
        Some(q) => {
            let values = e.evaluate(q);
            let text = if values.is_empty() {
                "0".to_string()
            } else {
                values
                    .iter()
                    .map(|(m, v)| format!("({v})*{m}"))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            let as_poly: BTreeMap<_, _> = values
                .iter()
                .map(|(m, v)| (m.clone(), QPoly::constant(v.clone())))
                .collect();
            let mut latex_elem = SymElement::zero();
            for (m, p) in as_poly {
                latex_elem.add_term(m, &p);
            }
            let json = Value::Array(
                values
                    .iter()
                    .map(|(m, v)| {
                        json!({
                            "factors": m.factors().iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
                            "coeff": v.to_string(),
                        })
                    })
                    .collect(),
            );
            Output::new("sym_element_at_q", text, latex_elem.to_latex(), json)
        }
    }
}

fn sympow_cmd(grid: &str, method: SMethod, scaled: bool, ctx: &Ctx) -> qweyl::Result<Output> {
    let grid: FactorGrid = grid.parse()?;
    let g = &ctx.guards;
    let finish = |e: SymElement| -> qweyl::Result<Output> {
        let e = if scaled {
            e
        } else {
            e.div_scalar(&scale_factor(grid.n(), grid.m()))?
        };
        Ok(render_sym(&e, ctx))
    };
    match method {
        SMethod::Formula => finish(scaled_product_formula(&grid, g)?),
        SMethod::Oracle => finish(scaled_product_oracle(&grid, g)?),
        SMethod::Both => comparison(vec![
            ("formula", finish(scaled_product_formula(&grid, g)?)),
            ("oracle", finish(scaled_product_oracle(&grid, g)?)),
        ]),
    }
}

fn verify_cmd(args: &VerifyArgs, ctx: &Ctx) -> qweyl::Result<Output> {
    let d = Bounds::default();
    let bounds = Bounds {
        max_a: args.max_a.unwrap_or(d.max_a),
        max_b: args.max_b.unwrap_or(d.max_b),
        max_n: args.max_n.unwrap_or(d.max_n),
        max_exp: args.max_exp.unwrap_or(d.max_exp),
        max_total: args.max_total.unwrap_or(d.max_total),
        max_word: args.max_word.unwrap_or(d.max_word),
        random: args.random.unwrap_or(d.random),
        seed: args.seed.unwrap_or(d.seed),
    };
    let suite = match args.suite {
        SuiteArg::CCoeffs => Suite::CCoeffs,
        SuiteArg::Npoly => Suite::Npoly,
        SuiteArg::Sympow => Suite::Sympow,
        SuiteArg::Representations => Suite::Representations,
        SuiteArg::Identities => Suite::Identities,
        SuiteArg::All => Suite::All,
    };
    let form = match args.variant {
        VariantArg::Derived => IdentityForm::Derived,
        VariantArg::Printed => IdentityForm::Printed,
    };
    let reports = verify::run(suite, &bounds, form, &ctx.guards)?;
    let ok = reports.iter().all(|r| r.passed());
    let text = reports
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join("\n");
    let latex = reports
        .iter()
        .map(|r| format!("\\text{{{}}}", r.to_string().replace('\n', "; ")))
        .collect::<Vec<_>>()
        .join("\\\\\n");
    let mut out = Output::new(
        "verify",
        text,
        latex,
        json!({"bounds": bounds, "reports": reports}),
    );
    out.ok = ok;
    Ok(out)
}
