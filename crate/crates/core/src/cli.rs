//! The `nullkit` command-line frontend.
//!
//! Each subcommand reads one JSON document (file path or stdin) and writes
//! one JSON document. Numbers in output are decimal strings. Exit codes:
//! 0 success, 1 domain error (body `{code, message, span?}`), 2 usage error.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coeff::{CoeffError, FieldSpec, Scalar};
use crate::combnull::{
    cn_membership, cn_witness, dyson_coefficient, kp_coefficient, restricted_sumset, sumset, CnError, SumsetInstance,
    SumsetResult,
};
use crate::graded::{
    dim_mult, format_laurent, hilbert_samuel, hilbert_samuel_polynomial, odd_system_solve, series_monomial_quotient,
    series_poly_ring, series_quot_regular, GradedError, OddConfig, OddError,
};
use crate::ideal::{
    buchberger_with, default_order, finiteness_of, quotient_basis, radical_membership_with, Finiteness, GroebnerConfig,
    IdealError, MonomialOrder, DEFAULT_BUDGET,
};
use crate::parse::{format_poly, parse_poly, CodecError, ParseError, PolyJson};
use crate::poly::{resultant, GridSpec, Monomial, PolyError, Polynomial, Ring};
use crate::realrad::{verify_real_radical_cert_with, RealRadError, RealRadicalCertificate};
use crate::stickel::{solve_points_with, StickelError};

#[derive(Debug, Parser)]
#[command(name = "nullkit", version, about = "Exact polynomial-system toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Debug, Args)]
struct Opts {
    /// Coefficient field: "Q" or "Fp:<p>"; overrides the document.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Comma-separated variable names; overrides the document.
    #[arg(long, global = true, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Monomial order for Gröbner-based subcommands.
    #[arg(long, global = true, value_enum)]
    order: Option<OrderArg>,
    /// Pair-reduction budget for Gröbner computations.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Residual tolerance for `oddzero`.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct Input {
    /// Input document; stdin when absent or "-".
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sylvester resultant of two polynomials in a chosen variable.
    Resultant(Input),
    /// Rational points of a zero-dimensional ideal.
    Solve(Input),
    /// Radical membership by the Rabinowitsch trick.
    Radical(Input),
    /// Whether the ideal is zero-dimensional, with the quotient dimension.
    Finiteness(Input),
    /// Poincaré series, dimension, multiplicity and Hilbert–Samuel table.
    Hilbert {
        #[command(flatten)]
        input: Input,
        /// Last degree of the printed tables.
        #[arg(long)]
        max_degree: Option<i64>,
    },
    /// Coefficient of a top monomial from grid values.
    CnCoeff(Input),
    /// Membership in a grid ideal, optionally with a nonvanishing point.
    CnMember(Input),
    /// Constant term of the Dyson product.
    Dyson(Input),
    /// Restricted and ordinary sumsets in ℤ/p with their lower bounds.
    Sumset(Input),
    /// Check a real-radical certificate.
    RealradVerify(Input),
    /// Common real zero of odd-degree forms on the unit sphere.
    Oddzero(Input),
}

/// Exit status plus captured streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain { code: String, message: String, span: Option<(usize, usize)> },
}

fn domain(code: &str, message: impl ToString) -> CliError {
    CliError::Domain { code: code.to_string(), message: message.to_string(), span: None }
}

/// Leaf variant name of an error's `Debug` form, e.g. `BudgetExceeded`.
fn variant_name<E: std::fmt::Debug>(e: &E) -> String {
    let dbg = format!("{e:?}");
    dbg.split(['(', ' ', '{']).next().unwrap_or_default().to_string()
}

macro_rules! leaf_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                domain(&variant_name(&e), &e)
            }
        }
    )*};
}

leaf_error!(CoeffError, GradedError, OddError);

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Domain { code: e.code().into(), message: e.to_string(), span: Some((e.span.start, e.span.end)) }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Coeff(c) => c.into(),
            other => domain(&variant_name(&other), &other),
        }
    }
}

impl From<CodecError> for CliError {
    fn from(e: CodecError) -> Self {
        match e {
            CodecError::Coeff(c) => c.into(),
            CodecError::Poly(p) => p.into(),
            other => domain(&variant_name(&other), &other),
        }
    }
}

impl From<IdealError> for CliError {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::Poly(p) => p.into(),
            other => domain(&variant_name(&other), &other),
        }
    }
}

impl From<StickelError> for CliError {
    fn from(e: StickelError) -> Self {
        match e {
            StickelError::Ideal(i) => i.into(),
            StickelError::Poly(p) => p.into(),
            other => domain(&variant_name(&other), &other),
        }
    }
}

impl From<CnError> for CliError {
    fn from(e: CnError) -> Self {
        match e {
            CnError::Poly(p) => p.into(),
            other => domain(&variant_name(&other), &other),
        }
    }
}

impl From<RealRadError> for CliError {
    fn from(e: RealRadError) -> Self {
        match e {
            RealRadError::Ideal(i) => i.into(),
            RealRadError::Poly(p) => p.into(),
            other => domain(&variant_name(&other), &other),
        }
    }
}

/// A polynomial given either as an expression or in the JSON term form.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PolyIn {
    Expr(String),
    Json(PolyJson),
}

/// An integer given as a JSON number or a decimal string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum NumIn {
    Int(i64),
    Text(String),
}

impl NumIn {
    fn text(&self) -> String {
        match self {
            NumIn::Int(i) => i.to_string(),
            NumIn::Text(s) => s.clone(),
        }
    }

    fn as_u64(&self) -> Result<u64, CliError> {
        self.text()
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("expected a non-negative integer, got {:?}", self.text())))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ResultantDoc {
    field: Option<String>,
    vars: Option<Vec<String>>,
    f: PolyIn,
    g: PolyIn,
    var: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealDoc {
    field: Option<String>,
    vars: Option<Vec<String>>,
    gens: Vec<PolyIn>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RadicalDoc {
    field: Option<String>,
    vars: Option<Vec<String>>,
    gens: Vec<PolyIn>,
    f: PolyIn,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct HilbertDoc {
    vars: u32,
    monomials: Option<Vec<Vec<u32>>>,
    regseq_degrees: Option<Vec<u32>>,
    max_degree: Option<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CnCoeffDoc {
    field: Option<String>,
    vars: Option<Vec<String>>,
    f: PolyIn,
    grid: Vec<Vec<NumIn>>,
    nu: Vec<NumIn>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CnMemberDoc {
    field: Option<String>,
    vars: Option<Vec<String>>,
    f: PolyIn,
    grid: Vec<Vec<NumIn>>,
    d: Option<Vec<NumIn>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DysonDoc {
    alpha: Vec<NumIn>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SumsetDoc {
    p: NumIn,
    #[serde(rename = "M")]
    m: Vec<NumIn>,
    #[serde(rename = "N")]
    n: Vec<NumIn>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RealradDoc {
    field: Option<String>,
    vars: Option<Vec<String>>,
    f: PolyIn,
    m: u32,
    #[serde(default)]
    sos_terms: Vec<PolyIn>,
    ideal_gens: Vec<PolyIn>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OddDoc {
    vars: Option<Vec<String>>,
    forms: Vec<PolyIn>,
    restarts: Option<usize>,
    seed: Option<u64>,
    tol: Option<f64>,
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli, stdin) {
        Ok(value) => Outcome { code: 0, stdout: render(&value, cli.opts.format), stderr: String::new() },
        Err(CliError::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(CliError::Domain { code, message, span }) => {
            let mut body = serde_json::Map::new();
            body.insert("code".into(), Value::String(code.clone()));
            body.insert("message".into(), Value::String(message.clone()));
            if let Some((a, b)) = span {
                body.insert("span".into(), serde_json::json!({ "start": a.to_string(), "end": b.to_string() }));
            }
            Outcome {
                code: 1,
                stdout: render(&Value::Object(body), cli.opts.format),
                stderr: format!("error: {code}: {message}\n"),
            }
        }
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(v).expect("serializable")),
        Format::Text => match v {
            Value::Object(map) => map.iter().map(|(k, v)| format!("{k}: {}\n", text_of(v))).collect(),
            other => format!("{}\n", text_of(other)),
        },
    }
}

fn text_of(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(text_of).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => {
            format!("{{{}}}", map.iter().map(|(k, v)| format!("{k}: {}", text_of(v))).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> Result<String, CliError> {
    match &input.input {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn doc<T: for<'de> Deserialize<'de>>(input: &Input, stdin: &mut dyn Read) -> Result<T, CliError> {
    let text = read_input(input, stdin)?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("malformed input document: {e}")))
}

fn to_value<T: Serialize>(t: &T) -> Result<Value, CliError> {
    Ok(serde_json::to_value(t).expect("serializable"))
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Value, CliError> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Resultant(i) => cmd_resultant(opts, doc(i, stdin)?),
        Command::Solve(i) => cmd_solve(opts, doc(i, stdin)?),
        Command::Radical(i) => cmd_radical(opts, doc(i, stdin)?),
        Command::Finiteness(i) => cmd_finiteness(opts, doc(i, stdin)?),
        Command::Hilbert { input, max_degree } => cmd_hilbert(doc(input, stdin)?, *max_degree),
        Command::CnCoeff(i) => cmd_cn_coeff(opts, doc(i, stdin)?),
        Command::CnMember(i) => cmd_cn_member(opts, doc(i, stdin)?),
        Command::Dyson(i) => cmd_dyson(doc(i, stdin)?),
        Command::Sumset(i) => cmd_sumset(doc(i, stdin)?),
        Command::RealradVerify(i) => cmd_realrad(opts, doc(i, stdin)?),
        Command::Oddzero(i) => cmd_oddzero(opts, doc(i, stdin)?),
    }
}

/// Field and variables: flag, then document, then the first JSON-form polynomial.
fn ring_for(
    opts: &Opts,
    field: Option<&str>,
    vars: Option<&[String]>,
    polys: &[&PolyIn],
) -> Result<Arc<Ring>, CliError> {
    let from_json = polys.iter().find_map(|p| match p {
        PolyIn::Json(j) => Some(j),
        PolyIn::Expr(_) => None,
    });
    let field_tag = opts.field.as_deref().or(field).or(from_json.map(|j| j.field.as_str())).unwrap_or("Q");
    let field = FieldSpec::parse(field_tag)?;
    let vars: Vec<String> = match (opts.vars.as_deref(), vars, from_json) {
        (Some(v), _, _) | (None, Some(v), _) => v.to_vec(),
        (None, None, Some(j)) => j.vars.clone(),
        (None, None, None) => return Err(CliError::Usage("no variable list: pass --vars or a \"vars\" field".into())),
    };
    Ok(Ring::new(field, vars)?)
}

fn poly_in(p: &PolyIn, ring: &Arc<Ring>) -> Result<Polynomial, CliError> {
    match p {
        PolyIn::Expr(s) => Ok(parse_poly(s, ring)?),
        PolyIn::Json(j) => Ok(j.decode_in(ring)?),
    }
}

fn polys_in(ps: &[PolyIn], ring: &Arc<Ring>) -> Result<Vec<Polynomial>, CliError> {
    ps.iter().map(|p| poly_in(p, ring)).collect()
}

fn config(opts: &Opts, ring: &Ring) -> GroebnerConfig {
    let n = ring.nvars();
    let order = match opts.order {
        Some(OrderArg::Lex) => MonomialOrder::lex(n),
        Some(OrderArg::Grevlex) => MonomialOrder::grevlex(n),
        None => default_order(ring),
    };
    GroebnerConfig::new(order).with_budget(opts.budget.unwrap_or(DEFAULT_BUDGET))
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn cmd_resultant(opts: &Opts, d: ResultantDoc) -> Result<Value, CliError> {
    let ring = ring_for(opts, d.field.as_deref(), d.vars.as_deref(), &[&d.f, &d.g])?;
    let var =
        ring.var_index(&d.var).ok_or_else(|| domain("UnknownVariable", format!("unknown variable {:?}", d.var)))?;
    let r = resultant(&poly_in(&d.f, &ring)?, &poly_in(&d.g, &ring)?, var)?;
    #[derive(Serialize)]
    struct Out {
        variable: String,
        resultant: String,
    }
    to_value(&Out { variable: d.var, resultant: format_poly(&r) })
}

fn cmd_solve(opts: &Opts, d: IdealDoc) -> Result<Value, CliError> {
    let refs: Vec<&PolyIn> = d.gens.iter().collect();
    let ring = ring_for(opts, d.field.as_deref(), d.vars.as_deref(), &refs)?;
    let gens = polys_in(&d.gens, &ring)?;
    let sols = solve_points_with(&gens, &config(opts, &ring))?;
    #[derive(Serialize)]
    struct Out {
        points: Vec<Vec<String>>,
        may_have_nonrational: bool,
    }
    to_value(&Out {
        points: sols.points.iter().map(|p| strings(p)).collect(),
        may_have_nonrational: sols.may_have_nonrational,
    })
}

fn cmd_radical(opts: &Opts, d: RadicalDoc) -> Result<Value, CliError> {
    let mut refs: Vec<&PolyIn> = d.gens.iter().collect();
    refs.push(&d.f);
    let ring = ring_for(opts, d.field.as_deref(), d.vars.as_deref(), &refs)?;
    let gens = polys_in(&d.gens, &ring)?;
    let f = poly_in(&d.f, &ring)?;
    let member = radical_membership_with(&f, &gens, opts.budget.unwrap_or(DEFAULT_BUDGET))?;
    #[derive(Serialize)]
    struct Out {
        member: bool,
    }
    to_value(&Out { member })
}

fn cmd_finiteness(opts: &Opts, d: IdealDoc) -> Result<Value, CliError> {
    let refs: Vec<&PolyIn> = d.gens.iter().collect();
    let ring = ring_for(opts, d.field.as_deref(), d.vars.as_deref(), &refs)?;
    let gens = polys_in(&d.gens, &ring)?;
    let gb = buchberger_with(&gens, &config(opts, &ring))?;
    #[derive(Serialize)]
    struct Out {
        finite: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        dim: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        basis: Option<Vec<String>>,
    }
    let out = match finiteness_of(&gb)? {
        Finiteness::Finite { dim } => {
            let one = Scalar::one(ring.field());
            let basis = quotient_basis(&gb)?
                .into_iter()
                .map(|m| format_poly(&Polynomial::monomial(&ring, m, one.clone())))
                .collect();
            Out { finite: true, dim: Some(dim.to_string()), basis: Some(basis) }
        }
        Finiteness::Infinite => Out { finite: false, dim: None, basis: None },
    };
    to_value(&out)
}

fn cmd_hilbert(d: HilbertDoc, max_degree: Option<i64>) -> Result<Value, CliError> {
    if d.vars == 0 {
        return Err(CliError::Usage("\"vars\" must be at least 1".into()));
    }
    let series = match (&d.monomials, &d.regseq_degrees) {
        (Some(ms), None) => {
            let gens: Vec<Monomial> = ms.iter().map(|e| Monomial::new(e.clone())).collect();
            series_monomial_quotient(d.vars, &gens)?
        }
        (None, Some(degs)) => {
            let mut s = series_poly_ring(d.vars);
            for &delta in degs {
                s = series_quot_regular(&s, delta)?;
            }
            s
        }
        _ => return Err(CliError::Usage("give exactly one of \"monomials\" and \"regseq_degrees\"".into())),
    };
    let top = max_degree.or(d.max_degree).unwrap_or(10);
    let dm = dim_mult(&series);
    let hp = hilbert_samuel_polynomial(&series);
    #[derive(Serialize)]
    struct Hsp {
        e: Vec<String>,
        valid_from: String,
    }
    #[derive(Serialize)]
    struct Out {
        numerator: String,
        denom_power: String,
        pd: String,
        dim: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        e: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        total_dimension: Option<String>,
        dims: Vec<String>,
        hilbert_samuel: Vec<String>,
        hilbert_samuel_polynomial: Hsp,
    }
    to_value(&Out {
        numerator: format_laurent(series.numerator()),
        denom_power: series.denom_power().to_string(),
        pd: dm.pd.to_string(),
        dim: dm.dim.to_string(),
        e: dm.mult.map(|m| m.to_string()),
        total_dimension: dm.total_dimension.map(|t| t.to_string()),
        dims: strings(&series.dims(top)),
        hilbert_samuel: (0..=top).map(|m| hilbert_samuel(&series, m).to_string()).collect(),
        hilbert_samuel_polynomial: Hsp { e: strings(&hp.e), valid_from: hp.valid_from.to_string() },
    })
}

fn grid_in(rows: &[Vec<NumIn>], field: FieldSpec) -> Result<GridSpec, CliError> {
    let mut lambdas = Vec::with_capacity(rows.len());
    for row in rows {
        let mut out = Vec::with_capacity(row.len());
        for x in row {
            out.push(Scalar::parse(field, &x.text())?);
        }
        lambdas.push(out);
    }
    Ok(GridSpec::new(field, lambdas)?)
}

fn u64s(xs: &[NumIn]) -> Result<Vec<u64>, CliError> {
    xs.iter().map(NumIn::as_u64).collect()
}

fn cmd_cn_coeff(opts: &Opts, d: CnCoeffDoc) -> Result<Value, CliError> {
    let ring = ring_for(opts, d.field.as_deref(), d.vars.as_deref(), &[&d.f])?;
    let f = poly_in(&d.f, &ring)?;
    let grid = grid_in(&d.grid, ring.field())?;
    let nu = u64s(&d.nu)?;
    let formula = kp_coefficient(&f, &nu, &grid)?;
    let exps = nu
        .iter()
        .map(|&v| u32::try_from(v).map_err(|_| domain("ExponentOverflow", "exponent overflow")))
        .collect::<Result<Vec<_>, _>>()?;
    let direct = f.coeff(&Monomial::new(exps));
    #[derive(Serialize)]
    struct Out {
        formula: String,
        direct: String,
        equal: bool,
    }
    to_value(&Out { equal: formula == direct, formula: formula.to_string(), direct: direct.to_string() })
}

fn cmd_cn_member(opts: &Opts, d: CnMemberDoc) -> Result<Value, CliError> {
    let ring = ring_for(opts, d.field.as_deref(), d.vars.as_deref(), &[&d.f])?;
    let f = poly_in(&d.f, &ring)?;
    let grid = grid_in(&d.grid, ring.field())?;
    let member = cn_membership(&f, &grid)?;
    let witness = match &d.d {
        Some(dd) => Some(strings(&cn_witness(&f, &u64s(dd)?, &grid)?)),
        None => None,
    };
    #[derive(Serialize)]
    struct Out {
        member: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<Vec<String>>,
    }
    to_value(&Out { member, witness })
}

fn cmd_dyson(d: DysonDoc) -> Result<Value, CliError> {
    let r = dyson_coefficient(&u64s(&d.alpha)?)?;
    #[derive(Serialize)]
    struct Out {
        #[serde(rename = "C")]
        c: String,
        multinomial: String,
        equal: bool,
    }
    to_value(&Out { c: r.c.to_string(), multinomial: r.multinomial.to_string(), equal: r.equal })
}

fn cmd_sumset(d: SumsetDoc) -> Result<Value, CliError> {
    let inst = SumsetInstance::new(d.p.as_u64()?, u64s(&d.m)?, u64s(&d.n)?)?;
    #[derive(Serialize)]
    struct Part {
        set: Vec<String>,
        size: String,
        bound: String,
        holds: bool,
    }
    fn part(r: SumsetResult) -> Part {
        Part { size: r.set.len().to_string(), set: strings(&r.set), bound: r.bound.to_string(), holds: r.holds }
    }
    #[derive(Serialize)]
    struct Out {
        p: String,
        restricted: Part,
        sumset: Part,
    }
    to_value(&Out { p: inst.p().to_string(), restricted: part(restricted_sumset(&inst)), sumset: part(sumset(&inst)) })
}

fn cmd_realrad(opts: &Opts, d: RealradDoc) -> Result<Value, CliError> {
    let mut refs: Vec<&PolyIn> = vec![&d.f];
    refs.extend(d.sos_terms.iter().chain(&d.ideal_gens));
    let ring = ring_for(opts, d.field.as_deref(), d.vars.as_deref(), &refs)?;
    let cert = RealRadicalCertificate {
        f: poly_in(&d.f, &ring)?,
        m: d.m,
        sos_terms: polys_in(&d.sos_terms, &ring)?,
        ideal_gens: polys_in(&d.ideal_gens, &ring)?,
    };
    let valid = verify_real_radical_cert_with(&cert, opts.budget.unwrap_or(DEFAULT_BUDGET))?;
    #[derive(Serialize)]
    struct Out {
        valid: bool,
    }
    to_value(&Out { valid })
}

fn cmd_oddzero(opts: &Opts, d: OddDoc) -> Result<Value, CliError> {
    let refs: Vec<&PolyIn> = d.forms.iter().collect();
    let ring = ring_for(opts, None, d.vars.as_deref(), &refs)?;
    let forms = polys_in(&d.forms, &ring)?;
    let mut cfg = OddConfig { seed: d.seed.unwrap_or(0), ..OddConfig::default() };
    if let Some(t) = opts.tol.or(d.tol) {
        cfg.tol = t;
    }
    if let Some(r) = d.restarts {
        cfg.restarts = r;
    }
    let sol = odd_system_solve(&forms, &cfg)?;
    #[derive(Serialize)]
    struct Out {
        point: Vec<String>,
        phi: String,
        restart: String,
    }
    to_value(&Out { point: strings(&sol.point), phi: sol.phi.to_string(), restart: sol.restart.to_string() })
}
