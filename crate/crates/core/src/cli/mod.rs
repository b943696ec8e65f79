//! The `rbk` command line. Every command builds a [`Report`], rendered as
//! text, csv or json; exact rationals always appear as `p/q` strings.
//!
//! Exit codes: 0 success, 1 input error, 2 budget exceeded, 3 polynomiality
//! check failed, 4 bijection mismatch.

mod report;
mod select;

use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{rngs::StdRng, seq::SliceRandom, SeedableRng};
use serde_json::{json, Value};

pub use report::Report;
pub use select::{
    table1_row, verify_bijection, BijectionReport, Caps, CounterKind, Selector, Table1Row,
};

use crate::birkhoff::{build_restricted_birkhoff, BirkhoffSpec, Margins};
use crate::ehrhart::{ehrhart_polynomial, quasi_polynomial, DEFAULT_VERIFY_EXTRA};
use crate::error::{Error, Result};
use crate::exactgeom::{facet_count, lattice_points, parse_rat, vertices, Rat, RatMatrix};
use crate::gtpatterns::{stretched_kostka, PartitionVec};
use crate::posets::{
    orbit, product_of_chains, rowmotion_chain, stanley_thomas_word, transfer, transfer_inverse,
};
use crate::rsk::{rho, rho_inverse};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_NOT_POLYNOMIAL: i32 = 3;
pub const EXIT_BIJECTION: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "B")]
    B,
    #[value(name = "M")]
    M,
    #[value(name = "GT")]
    Gt,
    #[value(name = "O")]
    O,
    #[value(name = "C")]
    C,
}

#[derive(Parser, Debug)]
#[command(
    name = "rbk",
    version,
    about = "Exact lattice-point counts, Ehrhart polynomials and RSK for restricted Birkhoff polytopes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,
    /// Seed for commands that sample points.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count lattice points of dilates.
    Count {
        #[command(flatten)]
        sel: SelectorArgs,
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Fit the Ehrhart polynomial (or quasi-polynomial) from exact counts.
    Ehrhart {
        #[command(flatten)]
        sel: SelectorArgs,
        #[arg(long, default_value_t = DEFAULT_VERIFY_EXTRA)]
        verify_extra: usize,
        /// Search for the minimal quasi-period instead.
        #[arg(long)]
        quasi: bool,
        /// Period bound for `--quasi`; computed from the vertices when omitted.
        #[arg(long)]
        denominator_lcm: Option<u64>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// List the vertices, exactly and sorted.
    Vertices {
        #[command(flatten)]
        sel: SelectorArgs,
    },
    /// Count facets, or print the vertex/facet grid of B_n^k.
    Facets {
        #[command(flatten)]
        sel: SelectorArgs,
        #[arg(long)]
        table1: bool,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Apply the piecewise-linear RSK map to a matrix file ("-" for stdin).
    Rsk {
        file: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Check that RSK bijects the (1/t)-lattice points of B_n^k and M_n^k.
    VerifyBijection {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// Rowmotion orbit of a point of C([n]x[n]) with its Stanley-Thomas words.
    Rowmotion {
        #[arg(long)]
        n: usize,
        /// Matrix file; a random point of (1/2)B_n^2 is sampled when omitted.
        #[arg(long)]
        point: Option<String>,
        /// Denominator scale for sampling: points of (1/2)(1/t)Z.
        #[arg(long, default_value_t = 1)]
        t: u64,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
    },
    /// Kostka number K_{t lambda, t mu}.
    Kostka {
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<u64>,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// Transfer map between O([n]x[m]) and C([n]x[m]) on a matrix file.
    Transfer {
        file: String,
        #[arg(long)]
        inverse: bool,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct SelectorArgs {
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Second chain length for O and C (defaults to n).
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    pub alpha: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    pub beta: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    pub lambda: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    pub mu: Vec<u64>,
}

impl SelectorArgs {
    pub fn selector(&self) -> Result<Selector> {
        let family = self
            .family
            .ok_or_else(|| Error::InvalidInput("--family is required".into()))?;
        let need_n = || {
            self.n
                .or(if self.alpha.is_empty() {
                    None
                } else {
                    Some(self.alpha.len())
                })
                .ok_or_else(|| Error::InvalidInput("--n is required".into()))
        };
        let margins = |n: usize| -> Result<Margins> {
            match (self.alpha.is_empty(), self.beta.is_empty()) {
                (true, true) => Ok(Margins::ones(n)),
                (false, false) => {
                    let m = Margins::new(self.alpha.clone(), self.beta.clone())?;
                    if m.n() != n {
                        return Err(Error::InvalidInput("--n disagrees with the margins".into()));
                    }
                    Ok(m)
                }
                _ => Err(Error::InvalidInput("--alpha and --beta go together".into())),
            }
        };
        let k_or_n = |n: usize| self.k.unwrap_or(n as u64);
        match family {
            Family::B | Family::M => {
                let n = need_n()?;
                let k = k_or_n(n);
                if n == 0 || k == 0 {
                    return Err(Error::InvalidInput("need n >= 1 and k >= 1".into()));
                }
                let margins = margins(n)?;
                Ok(if family == Family::B {
                    Selector::Birkhoff { margins, k }
                } else {
                    Selector::Monotone { margins, k }
                })
            }
            Family::Gt => Ok(Selector::GelfandTsetlin {
                lambda: PartitionVec::new(self.lambda.clone())?,
                mu: self.mu.clone(),
            }),
            Family::O | Family::C => {
                let n = need_n()?;
                let m = self.m.unwrap_or(n);
                if n == 0 || m == 0 {
                    return Err(Error::InvalidInput("chains must be nonempty".into()));
                }
                Ok(if family == Family::O {
                    Selector::Order { n, m }
                } else {
                    Selector::Chain { n, m }
                })
            }
        }
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct RangeArgs {
    #[arg(long)]
    pub t: Option<u64>,
    /// Inclusive range such as `0..10`.
    #[arg(long)]
    pub t_range: Option<String>,
}

impl RangeArgs {
    pub fn values(&self) -> Result<Vec<u64>> {
        match (&self.t, &self.t_range) {
            (Some(t), None) => Ok(vec![*t]),
            (None, Some(r)) => parse_range(r),
            (None, None) => Ok(vec![1]),
            _ => Err(Error::InvalidInput(
                "give --t or --t-range, not both".into(),
            )),
        }
    }
}

pub fn parse_range(s: &str) -> Result<Vec<u64>> {
    let bad = || Error::InvalidInput(format!("bad range {s:?}; expected a..b"));
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .or_else(|| s.split_once(':'))
        .ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

#[derive(Args, Debug, Clone, Default)]
pub struct CapArgs {
    #[arg(long)]
    pub max_nodes: Option<u64>,
    #[arg(long)]
    pub max_states: Option<usize>,
}

impl CapArgs {
    pub fn caps(&self) -> Caps {
        let mut caps = Caps::default();
        if let Some(n) = self.max_nodes {
            caps.max_nodes = n;
        }
        caps.max_states = self.max_states;
        caps
    }
}

/// Parses a matrix file: one row per line, whitespace-separated entries,
/// `#` starts a comment line. Rows may be of any common length.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<Rat>>> {
    let rows: Vec<Vec<Rat>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(parse_rat)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    if rows.is_empty() {
        return Err(Error::InvalidInput("empty matrix".into()));
    }
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::InvalidInput("rows have different lengths".into()));
    }
    Ok(rows)
}

pub fn parse_square_matrix(text: &str) -> Result<RatMatrix> {
    RatMatrix::from_rows(parse_matrix(text)?)
}

fn read_input(path: &str) -> Result<String> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
    Ok(s)
}

fn strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn matrix_json(rows: &[Vec<Rat>]) -> Value {
    json!(rows.iter().map(|r| strings(r)).collect::<Vec<_>>())
}

fn matrix_text(rows: &[Vec<Rat>]) -> String {
    rows.iter()
        .map(|r| strings(r).join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Result of a command: the report and the exit code it implies.
pub struct Outcome {
    pub report: Report,
    pub code: i32,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome {
            report,
            code: EXIT_OK,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        Error::NotAPolynomial { .. } | Error::NoPeriodFound(_) | Error::DegreeOverflow(_) => {
            EXIT_NOT_POLYNOMIAL
        }
        _ => EXIT_INPUT,
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Count { sel, range, caps } => {
            cmd_count(&sel.selector()?, &range.values()?, &caps.caps())
        }
        Command::Ehrhart {
            sel,
            verify_extra,
            quasi,
            denominator_lcm,
            caps,
        } => cmd_ehrhart(
            &sel.selector()?,
            *verify_extra,
            *quasi,
            *denominator_lcm,
            caps.caps(),
        ),
        Command::Vertices { sel } => cmd_vertices(&sel.selector()?),
        Command::Facets { sel, table1, max_n } => {
            if *table1 {
                cmd_table1(*max_n)
            } else {
                cmd_facets(&sel.selector()?)
            }
        }
        Command::Rsk { file, inverse } => cmd_rsk(&read_input(file)?, *inverse),
        Command::VerifyBijection { n, k, t } => cmd_verify_bijection(*n, *k, *t),
        Command::Rowmotion { n, point, t, steps } => {
            let text = point.as_deref().map(read_input).transpose()?;
            cmd_rowmotion(*n, text.as_deref(), *t, *steps, cli.seed)
        }
        Command::Kostka { lambda, mu, t } => cmd_kostka(lambda, mu, *t),
        Command::Transfer { file, inverse } => cmd_transfer(&read_input(file)?, *inverse),
    }
}

pub fn cmd_count(sel: &Selector, ts: &[u64], caps: &Caps) -> Result<Outcome> {
    use rayon::prelude::*;
    let results: Vec<(u64, u128, CounterKind, u128)> = ts
        .par_iter()
        .map(|&t| {
            let start = Instant::now();
            let (c, kind) = sel.count(t, caps)?;
            Ok((t, c, kind, start.elapsed().as_millis()))
        })
        .collect::<Result<_>>()?;
    let mut report = Report::new().field("polytope", sel.label());
    if let [(t, c, kind, ms)] = results[..] {
        report = report
            .field("t", t)
            .field("count", c.to_string())
            .field("counter", kind.to_string())
            .field("wall_time_ms", ms as u64);
    }
    let rows = results
        .iter()
        .map(|(t, c, k, ms)| vec![t.to_string(), c.to_string(), k.to_string(), ms.to_string()])
        .collect();
    Ok(report
        .table(&["t", "count", "counter", "wall_time_ms"], rows)
        .into())
}

pub fn cmd_ehrhart(
    sel: &Selector,
    verify_extra: usize,
    quasi: bool,
    denominator_lcm: Option<u64>,
    caps: Caps,
) -> Result<Outcome> {
    let dim = sel.dim()?;
    let report = Report::new()
        .field("polytope", sel.label())
        .field("dim", dim);
    if quasi {
        let lcm = match denominator_lcm {
            Some(l) => l,
            None => sel.denominator_lcm()?,
        };
        let f = sel.count_function(caps, lcm * (dim as u64 + 2))?;
        let q = quasi_polynomial(&f, lcm)?;
        let rows = q
            .constituents
            .iter()
            .enumerate()
            .map(|(r, p)| vec![r.to_string(), p.coeff_strings().join(", ")])
            .collect();
        return Ok(report
            .field("counter", f.label())
            .field("denominator_lcm", lcm)
            .field("period", q.period)
            .field("period_collapse", q.collapsed())
            .field("rejected_periods", q.rejected.clone())
            .table(&["residue", "coefficients"], rows)
            .into());
    }
    let f = sel.count_function(caps, dim as u64 + 1 + verify_extra as u64)?;
    let fit = ehrhart_polynomial(&f, verify_extra)?;
    let pairs = |v: &[(u64, u128)]| {
        v.iter()
            .map(|(t, c)| format!("{t}:{c}"))
            .collect::<Vec<_>>()
    };
    Ok(report
        .field("counter", f.label())
        .field("coefficients", fit.polynomial.coeff_strings())
        .field("polynomial", fit.polynomial.to_string())
        .field("fitted", pairs(&fit.fitted))
        .field("verified", pairs(&fit.verified))
        .field("value_at_zero_is_one", fit.constant_term_is_one)
        .into())
}

pub fn cmd_vertices(sel: &Selector) -> Result<Outcome> {
    let v = vertices(&sel.polytope()?)?;
    let rows = v
        .vertices
        .iter()
        .map(|x| vec![strings(x).join(" ")])
        .collect();
    Ok(Report::new()
        .field("polytope", sel.label())
        .field("count", v.len())
        .field(
            "vertices",
            Value::Array(v.vertices.iter().map(|x| json!(strings(x))).collect()),
        )
        .table(&["vertex"], rows)
        .into())
}

pub fn cmd_facets(sel: &Selector) -> Result<Outcome> {
    let p = sel.polytope()?;
    let facets = match facet_count(&p) {
        Ok(f) => Value::from(f),
        Err(Error::ZeroDimensional) => Value::from("1 (point)"),
        Err(e) => return Err(e),
    };
    Ok(Report::new()
        .field("polytope", sel.label())
        .field("facets", facets)
        .into())
}

pub fn cmd_table1(max_n: usize) -> Result<Outcome> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n as u64 {
            let r = table1_row(n, k)?;
            rows.push(vec![
                n.to_string(),
                k.to_string(),
                r.dim.to_string(),
                r.facets_label(),
                r.vertices.to_string(),
            ]);
        }
    }
    Ok(Report::new()
        .field("max_n", max_n)
        .table(&["n", "k", "dim", "facets", "vertices"], rows)
        .into())
}

pub fn cmd_rsk(text: &str, inverse: bool) -> Result<Outcome> {
    let x = parse_square_matrix(text)?;
    let y = if inverse { rho_inverse(&x)? } else { rho(&x)? };
    let rows = y.rows();
    Ok(Report::new()
        .field("direction", if inverse { "inverse" } else { "forward" })
        .field("matrix", matrix_text(&rows))
        .field("rows", matrix_json(&rows))
        .into())
}

pub fn cmd_verify_bijection(n: usize, k: u64, t: u64) -> Result<Outcome> {
    let r = verify_bijection(n, k, t)?;
    let report = Report::new()
        .field("n", n)
        .field("k", k)
        .field("t", t)
        .field("birkhoff_points", r.source)
        .field("monotone_points", r.target)
        .field("mismatches", r.mismatches)
        .field("result", r.to_string());
    Ok(Outcome {
        report,
        code: if r.ok { EXIT_OK } else { EXIT_BIJECTION },
    })
}

/// A random point of `(1/2) B_n^2` with denominators dividing `2t`.
pub fn sample_half_birkhoff(n: usize, t: u64, seed: u64) -> Result<Vec<Rat>> {
    let pts = lattice_points(&build_restricted_birkhoff(BirkhoffSpec::new(n, 2)?).dilate(t))?;
    let mut rng = StdRng::seed_from_u64(seed);
    let x = pts.choose(&mut rng).expect("B_n^2 has lattice points");
    let scale = Rat::new(1.into(), (2 * t as i64).into());
    Ok(x.iter().map(|v| v * &scale).collect())
}

pub fn cmd_rowmotion(
    n: usize,
    point: Option<&str>,
    t: u64,
    steps: usize,
    seed: u64,
) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let p = product_of_chains(n, n);
    let g: Vec<Rat> = match point {
        Some(text) => {
            let m = parse_square_matrix(text)?;
            if m.n() != n {
                return Err(Error::InvalidInput(format!("expected a {n}x{n} matrix")));
            }
            m.entries().to_vec()
        }
        None => sample_half_birkhoff(n, t.max(1), seed)?,
    };
    if !p.in_chain_polytope(&g) {
        return Err(Error::NotInChainPolytope);
    }
    let half_b = build_restricted_birkhoff(BirkhoffSpec::new(n, 2.min(n as u64))?);
    let in_half = |h: &[Rat]| {
        let doubled: Vec<Rat> = h.iter().map(|v| v * Rat::from_integer(2.into())).collect();
        n >= 2 && half_b.contains(&doubled)
    };
    let orb = orbit(&g, steps, |h| rowmotion_chain(&p, h))?;
    let words: Vec<_> = orb
        .iter()
        .map(|h| stanley_thomas_word(&p, h))
        .collect::<Result<_>>()?;
    let rotates = (0..orb.len()).all(|i| {
        let next = &words[(i + 1) % orb.len()];
        *next == words[i].rotated_right()
    });
    let rows = orb
        .iter()
        .zip(&words)
        .enumerate()
        .map(|(i, (h, w))| vec![i.to_string(), strings(h).join(" "), strings(&w.0).join(" ")])
        .collect();
    Ok(Report::new()
        .field("n", n)
        .field("start", strings(&g))
        .field("orbit_length", orb.len())
        .field("divides_2n", (2 * n).is_multiple_of(orb.len()))
        .field("stays_in_half_birkhoff", orb.iter().all(|h| in_half(h)))
        .field("st_words_rotate", rotates)
        .table(&["step", "point", "st_word"], rows)
        .into())
}

pub fn cmd_kostka(lambda: &[u64], mu: &[u64], t: u64) -> Result<Outcome> {
    let mut parts = lambda.to_vec();
    if parts.len() < mu.len() {
        parts.resize(mu.len(), 0);
    }
    let lam = PartitionVec::new(parts)?;
    let k = stretched_kostka(&lam, mu, t)?;
    Ok(Report::new()
        .field("lambda", lambda.to_vec())
        .field("mu", mu.to_vec())
        .field("t", t)
        .field("kostka", k.to_string())
        .into())
}

pub fn cmd_transfer(text: &str, inverse: bool) -> Result<Outcome> {
    let rows = parse_matrix(text)?;
    let (n, m) = (rows.len(), rows[0].len());
    let p = product_of_chains(n, m);
    let f: Vec<Rat> = rows.into_iter().flatten().collect();
    let g = if inverse {
        transfer_inverse(&p, &f)?
    } else {
        transfer(&p, &f)?
    };
    let out: Vec<Vec<Rat>> = g.chunks(m).map(|c| c.to_vec()).collect();
    Ok(Report::new()
        .field(
            "direction",
            if inverse {
                "chain to order"
            } else {
                "order to chain"
            },
        )
        .field("matrix", matrix_text(&out))
        .field("rows", matrix_json(&out))
        .into())
}

/// Parses `args`, runs the command and writes the report; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.report.render(cli.format).as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
