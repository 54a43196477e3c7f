//! The `recseq` command line.
//!
//! Every verb produces both a plain text rendering and a JSON tree in which
//! ring elements and counts are strings, so no value is ever truncated.
//! Exit codes: 0 on success, 1 when a verification fails or an inverse does
//! not exist, 2 on parse and invariant errors.

mod parse;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::acceptance;
use crate::error::{Error, Result};
use crate::linrec::{self, LinRec, ProductKind};
use crate::polymat::{poly_boxtimes, poly_otimes, poly_star, Poly};
use crate::ring::{BaseRing, RingSpec};
use crate::verify::{self, CheckReport, MorphismMap};
use crate::{Integers, ModRing, Rationals};

pub use parse::{parse_charpoly, parse_poly, parse_ring, parse_sequence, SequenceText};

/// Verification prefix used when neither `-n` nor `RECSEQ_PREFIX` is given.
pub const DEFAULT_PREFIX: usize = 30;
pub const PREFIX_ENV: &str = "RECSEQ_PREFIX";

#[derive(Parser, Debug)]
#[command(name = "recseq", version, about = "Exact closure of linear recurrent sequences")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the first terms of a sequence.
    Terms {
        #[arg(short = 's', long = "seq")]
        seq: String,
        #[arg(short = 'n', default_value_t = 10)]
        n: usize,
    },
    /// Close two sequences under a product.
    Op {
        #[arg(long, value_enum)]
        kind: OpKind,
        #[arg(short = 'a')]
        a: String,
        #[arg(short = 'b')]
        b: String,
        #[arg(short = 'n', default_value_t = 10)]
        n: usize,
    },
    /// Combine two monic polynomials with a semiring operation.
    CharpolyOp {
        #[arg(long, value_enum)]
        kind: PolyOpKind,
        #[arg(short = 'p')]
        p: String,
        #[arg(short = 'q')]
        q: String,
        #[arg(long, default_value = "Z")]
        ring: String,
    },
    /// Newton-product inverse of a sequence.
    Invert {
        #[arg(short = 's', long = "seq")]
        seq: String,
        #[arg(short = 'n', default_value_t = 10)]
        n: usize,
    },
    /// Binomial transforms and the Hadamard/Newton isomorphism.
    Transform {
        #[arg(long, value_enum)]
        kind: TransformKind,
        #[arg(short = 's', long = "seq")]
        seq: String,
        #[arg(short = 'n', default_value_t = 10)]
        n: usize,
    },
    /// Apply psi (or its inverse) to a sequence.
    Psi {
        #[arg(short = 's', long = "seq")]
        seq: String,
        #[arg(long)]
        inverse: bool,
        #[arg(short = 'n', default_value_t = 10)]
        n: usize,
    },
    /// Run a brute-force check.
    Verify(VerifyArgs),
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    check: CheckKind,
    #[arg(short = 's', long = "seq")]
    seq: Option<String>,
    #[arg(short = 'a')]
    a: Option<String>,
    #[arg(short = 'b')]
    b: Option<String>,
    #[arg(short = 'p')]
    p: Option<String>,
    /// Prefix length; defaults to $RECSEQ_PREFIX or 30.
    #[arg(short = 'n')]
    n: Option<usize>,
    /// Extra coefficients for the generating-function check.
    #[arg(long)]
    extra: Option<usize>,
    #[arg(long, value_enum, default_value_t = MapKind::Psi)]
    map: MapKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OpKind {
    Sum,
    Hadamard,
    Cauchy,
    Hurwitz,
    Newton,
}

impl From<OpKind> for ProductKind {
    fn from(k: OpKind) -> Self {
        match k {
            OpKind::Sum => ProductKind::Sum,
            OpKind::Hadamard => ProductKind::Hadamard,
            OpKind::Cauchy => ProductKind::Cauchy,
            OpKind::Hurwitz => ProductKind::Hurwitz,
            OpKind::Newton => ProductKind::Newton,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolyOpKind {
    Otimes,
    Star,
    Boxtimes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TransformKind {
    Binomial,
    InverseBinomial,
    Psi,
    PsiInverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Recurrence,
    Ogf,
    Decomposition,
    Morphism,
    Inverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MapKind {
    Psi,
    PsiInverse,
}

/// What a verb produced.
struct Output {
    plain: String,
    tree: Value,
    code: i32,
}

impl Output {
    fn ok(plain: String, tree: Value) -> Self {
        Output { plain, tree, code: 0 }
    }

    fn report(r: &CheckReport) -> Self {
        Output { plain: r.to_string(), tree: report_tree(r), code: if r.passed { 0 } else { 1 } }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            let _ = match cli.format {
                Format::Plain => writeln!(out, "{}", o.plain),
                Format::Structured => writeln!(out, "{}", serde_json::to_string_pretty(&o.tree).expect("json")),
            };
            o.code
        }
        Err(e) => {
            match cli.format {
                Format::Plain => {
                    let _ = writeln!(err, "error: {e}");
                }
                Format::Structured => {
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&error_tree(&e)).expect("json"));
                }
            }
            2
        }
    }
}

fn env_prefix() -> Result<usize> {
    match std::env::var(PREFIX_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::parse(0, format!("{PREFIX_ENV} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_PREFIX),
    }
}

/// Instantiates the ring named by a [`RingSpec`] and evaluates `$body` with
/// it bound to `$r`.
macro_rules! with_ring {
    ($spec:expr, $r:ident => $body:expr) => {
        match $spec {
            RingSpec::Integers => {
                let $r = Integers::default();
                $body
            }
            RingSpec::Rationals => {
                let $r = Rationals::default();
                $body
            }
            RingSpec::IntegersMod(m) => {
                let $r = ModRing::new(m.clone())?;
                $body
            }
        }
    };
}

fn same_ring(a: &SequenceText, b: &SequenceText) -> Result<RingSpec> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch { left: a.ring.to_string(), right: b.ring.to_string() });
    }
    Ok(a.ring.clone())
}

fn required<'a>(value: &'a Option<String>, flag: &str, check: &str) -> Result<&'a str> {
    value
        .as_deref()
        .ok_or_else(|| Error::parse(0, format!("`verify --check {check}` needs {flag}")))
}

fn execute(command: Command) -> Result<Output> {
    match command {
        Command::Terms { seq, n } => {
            let s = SequenceText::parse(&seq)?;
            with_ring!(&s.ring, r => cmd_terms(&r, &s, n))
        }
        Command::Op { kind, a, b, n } => {
            let (a, b) = (SequenceText::parse(&a)?, SequenceText::parse(&b)?);
            with_ring!(&same_ring(&a, &b)?, r => cmd_op(&r, kind.into(), &a, &b, n))
        }
        Command::CharpolyOp { kind, p, q, ring } => {
            with_ring!(&parse_ring(&ring)?, r => cmd_charpoly_op(&r, kind, &p, &q))
        }
        Command::Invert { seq, n } => {
            let s = SequenceText::parse(&seq)?;
            with_ring!(&s.ring, r => cmd_invert(&r, &s, n))
        }
        Command::Transform { kind, seq, n } => {
            let s = SequenceText::parse(&seq)?;
            with_ring!(&s.ring, r => cmd_transform(&r, kind, &s, n))
        }
        Command::Psi { seq, inverse, n } => {
            let kind = if inverse { TransformKind::PsiInverse } else { TransformKind::Psi };
            let s = SequenceText::parse(&seq)?;
            with_ring!(&s.ring, r => cmd_transform(&r, kind, &s, n))
        }
        Command::Verify(args) => cmd_verify(&args),
        Command::Selftest => Ok(cmd_selftest()),
    }
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn list<T: ToString>(xs: &[T]) -> String {
    format!("[{}]", strings(xs).join(","))
}

fn sequence_tree<R: BaseRing>(s: &LinRec<R>, n: usize) -> Value {
    json!({
        "ring": s.ring().spec().to_string(),
        "charpoly": strings(s.charpoly().coeffs()),
        "order": s.order().to_string(),
        "initial": strings(s.initial()),
        "terms": strings(&s.terms(n)),
    })
}

fn sequence_plain<R: BaseRing>(s: &LinRec<R>, n: usize) -> String {
    format!(
        "charpoly: {}\norder: {}\ninitial: {}\nterms: {}\nsequence: {}",
        s.charpoly(),
        s.order(),
        list(s.initial()),
        list(&s.terms(n)),
        s
    )
}

fn cmd_terms<R: BaseRing>(ring: &R, s: &SequenceText, n: usize) -> Result<Output> {
    let terms = if s.is_raw() {
        let raw = s.raw_terms(ring)?;
        if raw.len() < n {
            return Err(Error::PrefixExhausted { requested: n, available: raw.len() });
        }
        raw[..n].to_vec()
    } else {
        s.linrec(ring)?.terms(n)
    };
    let tree = json!({ "command": "terms", "ring": ring.spec().to_string(), "terms": strings(&terms) });
    Ok(Output::ok(list(&terms), tree))
}

fn cmd_op<R: BaseRing>(ring: &R, kind: ProductKind, a: &SequenceText, b: &SequenceText, n: usize) -> Result<Output> {
    let c = kind.apply(&a.linrec(ring)?, &b.linrec(ring)?)?;
    let mut tree = sequence_tree(&c, n);
    tree["command"] = json!("op");
    tree["kind"] = json!(kind.name());
    Ok(Output::ok(format!("{kind}\n{}", sequence_plain(&c, n)), tree))
}

fn cmd_charpoly_op<R: BaseRing>(ring: &R, kind: PolyOpKind, p: &str, q: &str) -> Result<Output> {
    let (p, q) = (parse_charpoly(ring, p)?, parse_charpoly(ring, q)?);
    let (name, result): (&str, Poly<R>) = match kind {
        PolyOpKind::Otimes => ("otimes", poly_otimes(&p, &q)?),
        PolyOpKind::Star => ("star", poly_star(&p, &q)?),
        PolyOpKind::Boxtimes => ("boxtimes", poly_boxtimes(&p, &q)?),
    };
    let tree = json!({
        "command": "charpoly-op",
        "kind": name,
        "ring": ring.spec().to_string(),
        "result": strings(result.coeffs()),
    });
    Ok(Output::ok(result.to_string(), tree))
}

fn cmd_invert<R: BaseRing>(ring: &R, s: &SequenceText, n: usize) -> Result<Output> {
    let a = s.linrec(ring)?;
    match linrec::newton_inverse(&a, n) {
        Ok(b) => {
            let terms = b.into_terms();
            let tree = json!({ "command": "invert", "invertible": true, "terms": strings(&terms) });
            Ok(Output::ok(list(&terms), tree))
        }
        Err(Error::NotInvertible { index }) => {
            let value = linrec::binomial_transform(&a).term(index);
            let plain = format!(
                "not invertible: sum_s C({index},s) a_s = {value} is not a unit in {}",
                ring.spec()
            );
            let tree = json!({
                "command": "invert",
                "invertible": false,
                "witness": { "index": index.to_string(), "value": value.to_string() },
            });
            Ok(Output { plain, tree, code: 1 })
        }
        Err(e) => Err(e),
    }
}

fn cmd_transform<R: BaseRing>(ring: &R, kind: TransformKind, s: &SequenceText, n: usize) -> Result<Output> {
    let a = s.linrec(ring)?;
    let (name, c) = match kind {
        TransformKind::Binomial => ("binomial", linrec::binomial_transform(&a)),
        TransformKind::InverseBinomial => ("inverse-binomial", linrec::inverse_binomial_transform(&a)),
        TransformKind::Psi => ("psi", linrec::psi(&a)),
        TransformKind::PsiInverse => ("psi-inverse", linrec::psi_inverse(&a)),
    };
    let mut tree = sequence_tree(&c, n);
    tree["command"] = json!("transform");
    tree["kind"] = json!(name);
    Ok(Output::ok(format!("{name}\n{}", sequence_plain(&c, n)), tree))
}

fn report_tree(r: &CheckReport) -> Value {
    let failure = match &r.first_failure {
        None => Value::Null,
        Some(f) => json!({
            "index": f.index.to_string(),
            "expected": f.expected,
            "actual": f.actual,
            "context": f.context,
        }),
    };
    json!({
        "command": "verify",
        "name": r.name,
        "passed": r.passed,
        "checked_prefix": r.checked_prefix.to_string(),
        "first_failure": failure,
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<Output> {
    let prefix = match args.n {
        Some(0) => return Err(Error::parse(0, "prefix must be positive")),
        Some(n) => n,
        None => env_prefix()?,
    };
    match args.check {
        CheckKind::Recurrence => {
            let s = SequenceText::parse(required(&args.seq, "-s", "recurrence")?)?;
            let p = required(&args.p, "-p", "recurrence")?;
            with_ring!(&s.ring, r => verify_recurrence(&r, &s, p, prefix))
        }
        CheckKind::Ogf => {
            let s = SequenceText::parse(required(&args.seq, "-s", "ogf")?)?;
            let extra = args.extra.unwrap_or(prefix);
            if extra == 0 {
                return Err(Error::parse(0, "extra must be positive"));
            }
            with_ring!(&s.ring, r => Ok(Output::report(&verify::ogf_poly_check(&s.linrec(&r)?, extra))))
        }
        CheckKind::Decomposition => {
            let a = SequenceText::parse(required(&args.a, "-a", "decomposition")?)?;
            let b = SequenceText::parse(required(&args.b, "-b", "decomposition")?)?;
            with_ring!(&same_ring(&a, &b)?, r => {
                let report = verify::decomposition_check(&a.linrec(&r)?, &b.linrec(&r)?, prefix)?;
                Ok(Output::report(&report))
            })
        }
        CheckKind::Morphism => {
            let a = SequenceText::parse(required(&args.a, "-a", "morphism")?)?;
            let b = SequenceText::parse(required(&args.b, "-b", "morphism")?)?;
            let map = match args.map {
                MapKind::Psi => MorphismMap::Psi,
                MapKind::PsiInverse => MorphismMap::PsiInverse,
            };
            with_ring!(&same_ring(&a, &b)?, r => {
                let pairs = [(a.linrec(&r)?, b.linrec(&r)?)];
                Ok(Output::report(&verify::morphism_check(map, &pairs, prefix)))
            })
        }
        CheckKind::Inverse => {
            let s = SequenceText::parse(required(&args.seq, "-s", "inverse")?)?;
            with_ring!(&s.ring, r => verify_inverse(&r, &s, prefix))
        }
    }
}

fn verify_recurrence<R: BaseRing>(ring: &R, s: &SequenceText, p: &str, prefix: usize) -> Result<Output> {
    let p = parse_charpoly(ring, p)?;
    let terms = if s.is_raw() { s.raw_terms(ring)? } else { s.linrec(ring)?.terms(prefix) };
    let order = p.degree().expect("monic");
    if terms.len() < order {
        return Err(Error::PrefixExhausted { requested: order, available: terms.len() });
    }
    Ok(Output::report(&verify::satisfies_recurrence(ring, &terms, &p)))
}

fn verify_inverse<R: BaseRing>(ring: &R, s: &SequenceText, prefix: usize) -> Result<Output> {
    match verify::inverse_check(&s.linrec(ring)?, prefix) {
        Ok(r) => Ok(Output::report(&r)),
        Err(Error::NotInvertible { index }) => {
            let plain = format!("FAIL newton inverse (prefix {prefix}): not invertible at index {index}");
            let tree = json!({
                "command": "verify",
                "name": "newton inverse",
                "passed": false,
                "checked_prefix": prefix.to_string(),
                "first_failure": { "index": index.to_string(), "expected": "unit", "actual": "non-unit", "context": "binomial transform" },
            });
            Ok(Output { plain, tree, code: 1 })
        }
        Err(e) => Err(e),
    }
}

fn cmd_selftest() -> Output {
    let results = acceptance::run_all();
    let passed = results.iter().all(|r| r.passed);
    let plain = results.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
    let tree = json!({
        "command": "selftest",
        "passed": passed,
        "criteria": results
            .iter()
            .map(|r| json!({ "id": r.id.to_string(), "title": r.title, "passed": r.passed, "detail": r.detail }))
            .collect::<Vec<_>>(),
    });
    Output { plain, tree, code: if passed { 0 } else { 1 } }
}

fn error_tree(e: &Error) -> Value {
    let mut tree = json!({ "error": e.to_string() });
    if let Error::Parse { pos, .. } = e {
        tree["position"] = json!(pos.to_string());
    }
    tree
}
