//! Command-line front end. [`run`] parses arguments, dispatches to the library and
//! renders one JSON (or CSV) document, so the binary only has to print and exit.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use expansive::betti::default_window;
use expansive::{
    almost_lex_points, betti_ambient, betti_eliahou_kervaire, betti_quadratic_recursion, betti_resolution_oracle,
    bounds_report, certified_degree_bound, chain, exp_point, gotzmann_number, hf_hp_threshold, hilb_nonempty,
    hilbert_function, hilbert_polynomial, is_expansive, lex_eq_exp_case, lex_point, strongly_stable_points, BettiTable,
    ChainKind, ClRing, EnumerationBudget, Error, FieldSpec, HilbertPoly, MonomialIdeal, Over, Window,
};
use serde_json::{json, Value};

mod verify;

pub use verify::{run_suite, Suite};

#[derive(Parser, Debug)]
#[command(name = "expansive", version, about = "Lex and expansive points of Hilbert schemes of Clements–Lindström rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Whether the Hilbert scheme is nonempty, with its Gotzmann number.
    Check(PolyArgs),
    /// Hilbert function of R/I in degrees 0..=max-degree.
    Hf(HfArgs),
    /// Hilbert polynomial of R/I and the degree from which HF = HP.
    Hp(IdealArgs),
    /// The lex point.
    Lex(PolyArgs),
    /// The expansive point.
    Exp(PolyArgs),
    /// Every ideal of the lex or expansive chain.
    Chain(ChainArgs),
    /// Saturated strongly stable points.
    Enumerate(EnumerateArgs),
    /// Structural flags of an ideal, or which case makes Lex = Exp for a polynomial.
    Classify(ClassifyArgs),
    /// Graded Betti numbers of R/I.
    Betti(BettiArgs),
    /// Betti numbers of the expansive point with their provenance.
    Bounds(BoundsArgs),
    /// Property suites over a case list.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct RingArg {
    /// Degree sequence, e.g. `2,3,inf,inf`.
    #[arg(long)]
    pub ring: Option<String>,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    /// Degree sequence, e.g. `2,3,inf,inf`.
    #[arg(long)]
    pub ring: String,
    /// Hilbert polynomial in `z`, e.g. `3*z+5`.
    #[arg(long)]
    pub poly: String,
}

#[derive(Args, Debug)]
pub struct IdealArgs {
    #[command(flatten)]
    pub ring: RingArg,
    /// Generators like `x1*x2, x1*x3^5`, or `{"ring": ..., "gens": [[...], ...]}`.
    #[arg(long)]
    pub ideal: String,
}

#[derive(Args, Debug)]
pub struct HfArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    #[arg(long, default_value_t = 10)]
    pub max_degree: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Lex,
    Exp,
}

#[derive(Args, Debug)]
pub struct ChainArgs {
    #[command(flatten)]
    pub poly: PolyArgs,
    #[arg(long, value_enum, default_value_t = Kind::Exp)]
    pub kind: Kind,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub poly: PolyArgs,
    /// Only the almost lex points.
    #[arg(long)]
    pub almost_lex: bool,
    /// Largest generator degree to search instead of the certified bound.
    #[arg(long)]
    pub max_degree: Option<u32>,
    #[arg(long, default_value_t = EnumerationBudget::default().max_candidates)]
    pub max_candidates: u64,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub ring: Option<String>,
    #[arg(long, conflicts_with = "poly", required_unless_present = "poly")]
    pub ideal: Option<String>,
    #[arg(long, requires = "ring")]
    pub poly: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Homology over the lcm lattice, over the ambient ring.
    Lattice,
    /// Closed formula for strongly stable ideals of a polynomial ring.
    Ek,
    /// Truncated resolution by linear algebra.
    Oracle,
    /// Recursion by powers of the last variable, quadratic rings only.
    Recursion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    #[arg(long, default_value = "ambient")]
    pub over: String,
    /// Defaults to `lattice` over the ambient ring and `oracle` over the quotient.
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    /// 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
    #[arg(long)]
    pub imax: Option<u32>,
    #[arg(long)]
    pub jmax: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub poly: PolyArgs,
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Case list; the shipped matrix when omitted.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
}

/// What the process should print and exit with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Failure of a command, mapped onto an exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad input: exit 2.
    Domain { kind: String, detail: String },
    /// Resource limits and internal faults: exit 1.
    Internal { kind: String, detail: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (kind, detail) = (e.kind().to_string(), e.to_string());
        if e.is_domain() {
            Failure::Domain { kind, detail }
        } else {
            Failure::Internal { kind, detail }
        }
    }
}

impl Failure {
    fn domain(kind: &str, detail: impl Into<String>) -> Self {
        Failure::Domain { kind: kind.into(), detail: detail.into() }
    }

    fn code(&self) -> i32 {
        match self {
            Failure::Domain { .. } => 2,
            Failure::Internal { .. } => 1,
        }
    }

    fn to_json(&self) -> Value {
        let (Failure::Domain { kind, detail } | Failure::Internal { kind, detail }) = self;
        json!({ "error": { "kind": kind, "detail": detail } })
    }
}

type CmdResult = std::result::Result<Rendered, Failure>;

/// A successful result and the exit code to use with it.
pub struct Rendered {
    pub body: String,
    pub code: i32,
}

fn ok_json(v: Value) -> CmdResult {
    Ok(Rendered { body: pretty(&v), code: 0 })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Output { code: 0, stdout: e.to_string(), stderr: String::new() }
                }
                _ => {
                    let f = Failure::domain("usage", e.to_string().trim_end());
                    Output { code: 2, stdout: pretty(&f.to_json()), stderr: e.to_string() }
                }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(r) => Output { code: r.code, stdout: r.body, stderr: String::new() },
        Err(f) => Output { code: f.code(), stdout: pretty(&f.to_json()), stderr: String::new() },
    }
}

fn parse_ring(s: &str) -> Result<ClRing, Failure> {
    Ok(s.parse::<ClRing>()?)
}

fn parse_poly(s: &str) -> Result<HilbertPoly, Failure> {
    Ok(s.parse::<HilbertPoly>()?)
}

/// `--ideal` as inline generators (needs `--ring`) or as a JSON object carrying its ring.
pub fn parse_ideal(ring: Option<&str>, text: &str) -> Result<MonomialIdeal, Failure> {
    let t = text.trim();
    if t.starts_with('{') {
        let i: MonomialIdeal = serde_json::from_str(t).map_err(|e| Failure::domain("parse", e.to_string()))?;
        if let Some(r) = ring {
            let r = parse_ring(r)?;
            if &r != i.ring() {
                return Err(Error::RingMismatch(r.to_string(), i.ring().to_string()).into());
            }
        }
        return Ok(i);
    }
    let r = ring.ok_or_else(|| Failure::domain("usage", "--ring is required for an inline --ideal"))?;
    Ok(MonomialIdeal::parse(&parse_ring(r)?, t)?)
}

fn ring_poly(a: &PolyArgs) -> Result<(ClRing, HilbertPoly), Failure> {
    Ok((parse_ring(&a.ring)?, parse_poly(&a.poly)?))
}

/// JSON form of an ideal: the wire object plus a readable rendering.
pub fn ideal_json(i: &MonomialIdeal) -> Value {
    json!({
        "ring": i.ring().to_string(),
        "gens": serde_json::to_value(i).expect("ideals serialize")["gens"],
        "text": i.to_string(),
    })
}

fn header(r: &ClRing, p: &HilbertPoly) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("ring".into(), json!(r.to_string()));
    m.insert("poly".into(), json!(p.to_string()));
    m
}

fn require_nonempty(p: &HilbertPoly, r: &ClRing) -> Result<(), Failure> {
    if !p.is_numerical() {
        return Err(Error::InadmissiblePolynomial(p.to_string()).into());
    }
    if !hilb_nonempty(p, r) {
        return Err(Error::EmptyHilbertScheme { ring: r.to_string(), poly: p.to_string() }.into());
    }
    Ok(())
}

fn dispatch(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Check(a) => {
            let (r, p) = ring_poly(a)?;
            require_nonempty(&p, &r)?;
            let mut m = header(&r, &p);
            m.insert("nonempty".into(), json!(true));
            // Gotzmann numbers are only defined for Hilbert polynomials of projective space
            m.insert("gotzmann_number".into(), json!(gotzmann_number(&p).ok()));
            m.insert("degree_bound".into(), json!(certified_degree_bound(&p, &r).ok()));
            ok_json(Value::Object(m))
        }
        Command::Hf(a) => {
            let i = parse_ideal(a.ideal.ring.ring.as_deref(), &a.ideal.ideal)?;
            let values: Vec<String> = (0..=a.max_degree).map(|j| hilbert_function(&i, j.into()).to_string()).collect();
            match a.format {
                Format::Json => {
                    let nums: Vec<Value> = values.iter().map(|v| number(v)).collect();
                    ok_json(json!({ "ideal": ideal_json(&i), "hf": nums }))
                }
                Format::Csv => {
                    let mut s = String::from("j,hf\n");
                    for (j, v) in values.iter().enumerate() {
                        s.push_str(&format!("{j},{v}\n"));
                    }
                    Ok(Rendered { body: s, code: 0 })
                }
            }
        }
        Command::Hp(a) => {
            let i = parse_ideal(a.ring.ring.as_deref(), &a.ideal)?;
            let hp = hilbert_polynomial(&i);
            ok_json(json!({
                "ideal": ideal_json(&i),
                "hp": hp.to_string(),
                "coeffs": hp.to_json().coeffs,
                "threshold": hf_hp_threshold(&i),
            }))
        }
        Command::Lex(a) | Command::Exp(a) => {
            let (r, p) = ring_poly(a)?;
            require_nonempty(&p, &r)?;
            let i = if matches!(cmd, Command::Lex(_)) { lex_point(&p, &r)? } else { exp_point(&p, &r)? };
            let mut m = header(&r, &p);
            m.insert("ideal".into(), ideal_json(&i));
            ok_json(Value::Object(m))
        }
        Command::Chain(a) => {
            let (r, p) = ring_poly(&a.poly)?;
            require_nonempty(&p, &r)?;
            let kind = match a.kind {
                Kind::Lex => ChainKind::Lex,
                Kind::Exp => ChainKind::Exp,
            };
            let ch = chain(&p, &r, kind)?;
            let steps: Vec<Value> = ch
                .steps
                .iter()
                .map(|s| json!({ "ideal": ideal_json(&s.ideal), "replaced": s.replaced.as_ref().map(ToString::to_string) }))
                .collect();
            let mut m = header(&r, &p);
            m.insert("kind".into(), json!(kind));
            m.insert("length".into(), json!(ch.length()));
            m.insert("steps".into(), Value::Array(steps));
            ok_json(Value::Object(m))
        }
        Command::Enumerate(a) => {
            let (r, p) = ring_poly(&a.poly)?;
            require_nonempty(&p, &r)?;
            let budget = EnumerationBudget { max_gen_degree: a.max_degree, max_candidates: a.max_candidates };
            let e = if a.almost_lex { almost_lex_points(&p, &r, &budget)? } else { strongly_stable_points(&p, &r, &budget)? };
            let mut m = header(&r, &p);
            m.insert("complete".into(), json!(e.complete));
            m.insert("degree_bound".into(), json!(e.degree_bound));
            m.insert("count".into(), json!(e.points.len()));
            m.insert("points".into(), Value::Array(e.points.iter().map(ideal_json).collect()));
            ok_json(Value::Object(m))
        }
        Command::Classify(a) => {
            if let Some(p) = &a.poly {
                let r = parse_ring(a.ring.as_deref().expect("clap enforces --ring with --poly"))?;
                let p = parse_poly(p)?;
                require_nonempty(&p, &r)?;
                let mut m = header(&r, &p);
                m.insert("lex_eq_exp_case".into(), json!(lex_eq_exp_case(&p, &r)?));
                return ok_json(Value::Object(m));
            }
            let i = parse_ideal(a.ring.as_deref(), a.ideal.as_deref().expect("clap enforces --ideal or --poly"))?;
            let c = i.classify();
            let expansive = if c.saturated && c.strongly_stable && i.ring().is_projective() {
                Some(is_expansive(&i)?)
            } else {
                None
            };
            ok_json(json!({
                "ideal": ideal_json(&i),
                "saturated": c.saturated,
                "strongly_stable": c.strongly_stable,
                "lex": c.lex,
                "almost_lex": c.almost_lex,
                "expansive": expansive,
            }))
        }
        Command::Betti(a) => {
            let i = parse_ideal(a.ideal.ring.ring.as_deref(), &a.ideal.ideal)?;
            betti(&i, a)
        }
        Command::Bounds(a) => {
            let (r, p) = ring_poly(&a.poly)?;
            require_nonempty(&p, &r)?;
            let rep = bounds_report(&p, &r, FieldSpec::new(a.characteristic)?)?;
            match a.format {
                Format::Json => {
                    let mut m = header(&r, &p);
                    m.insert("report".into(), rep.to_json());
                    ok_json(Value::Object(m))
                }
                Format::Csv => Ok(Rendered { body: rep.table.to_csv(), code: 0 }),
            }
        }
        Command::Verify(a) => {
            let text = match &a.matrix {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| Failure::domain("io", format!("{}: {e}", path.display())))?,
                None => expansive::DEFAULT_MATRIX.to_string(),
            };
            let cases = expansive::parse_matrix(&text)?;
            let report = run_suite(a.suite, &cases);
            let code = if report.passed { 0 } else { 1 };
            Ok(Rendered { body: pretty(&serde_json::to_value(&report).expect("reports serialize")), code })
        }
    }
}

/// A decimal string as a JSON number when it fits, otherwise as a string.
fn number(s: &str) -> Value {
    s.parse::<u64>().map(Value::from).unwrap_or_else(|_| Value::from(s))
}

fn betti(i: &MonomialIdeal, a: &BettiArgs) -> CmdResult {
    let over: Over = a.over.parse()?;
    let field = FieldSpec::new(a.characteristic)?;
    let method = a.method.unwrap_or(match over {
        Over::Ambient => Method::Lattice,
        Over::Quotient => Method::Oracle,
    });
    let narrowed = |t: BettiTable| -> BettiTable {
        if a.imax.is_none() && a.jmax.is_none() {
            return t;
        }
        let w = t.window();
        t.truncate(Window { imax: a.imax.unwrap_or(w.imax), jmax: a.jmax.unwrap_or(w.jmax) })
    };
    let table = match (method, over) {
        (Method::Lattice, Over::Ambient) => narrowed(betti_ambient(i, field)?),
        (Method::Ek, Over::Ambient) => narrowed(betti_eliahou_kervaire(i)?),
        (Method::Oracle, _) => {
            let d = default_window(i);
            betti_resolution_oracle(i, over, field, a.imax.unwrap_or(d.imax), a.jmax.unwrap_or(d.jmax))?
        }
        (Method::Recursion, Over::Quotient) => {
            if a.jmax.is_some() {
                return Err(Failure::domain("usage", "the recursion gives totals only, so --jmax does not apply"));
            }
            let totals = betti_quadratic_recursion(i, a.imax.unwrap_or(6))?;
            return match a.format {
                Format::Json => ok_json(json!({
                    "ideal": ideal_json(i),
                    "over": over,
                    "totals": totals,
                })),
                Format::Csv => {
                    let mut s = String::from("i,total\n");
                    for (k, b) in totals.iter().enumerate() {
                        s.push_str(&format!("{k},{b}\n"));
                    }
                    Ok(Rendered { body: s, code: 0 })
                }
            };
        }
        (m, o) => {
            let msg = format!("method {m:?} is not available over the {o:?} ring").to_lowercase();
            return Err(Failure::domain("usage", msg));
        }
    };
    match a.format {
        Format::Json => ok_json(json!({ "ideal": ideal_json(i), "table": table.to_json() })),
        Format::Csv => Ok(Rendered { body: table.to_csv(), code: 0 }),
    }
}
