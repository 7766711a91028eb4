//! Command-line front end. `run` turns parsed arguments into a [`Report`]
//! plus a text rendering; the binary only handles I/O and the exit status.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::exact::{Scalar, TruncatedSeries};
use crate::genfun::{self, Method};
use crate::quiver::{self, Block, QuiverPresentation};
use crate::report::{render_text, Report, Table, Verdict};
use crate::sl2rep::{self, SimpleFinDim, SimpleHC};
use crate::symalg::{self, Gen};
use crate::verify::{self, Options};
use crate::younglat;

/// Environment variable naming the series cache directory. Unset means no cache.
pub const CACHE_ENV: &str = "GALILEI_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "galilei",
    version,
    about = "Exact computations for sl2 ⋉ L(n) representation theory"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// JSON document with fields command, params, results, verdicts, wall_time_ms.
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight generating functions of Sym L(k).
    #[command(subcommand)]
    Genfun(GenfunCmd),
    /// sl2 decompositions and Harish-Chandra tensor products.
    #[command(subcommand)]
    Sl2(Sl2Cmd),
    /// Derivations and invariants of Sym L(4).
    #[command(subcommand)]
    Symalg(SymalgCmd),
    /// The labelled Young lattice and its path matrices.
    #[command(subcommand)]
    Young(YoungCmd),
    /// Block quivers, radical filtrations, projective decompositions.
    #[command(subcommand)]
    Quiver(QuiverCmd),
    /// Acceptance suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Enum,
    Recur,
    Closed,
    All,
}

#[derive(Debug, Subcommand)]
pub enum GenfunCmd {
    /// Coefficients of F^(k)_l.
    Series {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, default_value_t = genfun::DEFAULT_DEGREE)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Enum)]
        method: MethodArg,
    },
    /// Hilbert series of the invariants and its generator/relation degrees.
    Invariants {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = genfun::DEFAULT_DEGREE)]
        degree: usize,
    },
    /// (F_l - F_{l+2}) / (F_0 - F_2) and its first negative coefficient.
    Freeness {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, default_value_t = genfun::DEFAULT_DEGREE)]
        degree: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Sl2Cmd {
    /// Decomposition of Sym^n L(k).
    Sym {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
    /// Multiplicities of L(l) in Q(0), or its degree-by-degree table.
    Q0(Q0Args),
    /// L(k) ⊗ S for a simple Harish-Chandra module S.
    Tensor {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        simple: SimpleHC,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct Q0Args {
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    table: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum SymalgCmd {
    /// Check that C2 and C3 are killed by e, f and h.
    CheckInvariants,
    /// Rank certificate for ad_e^i (w_-4^i w_-2^(k-i)), i < k.
    Independence {
        #[arg(long)]
        k: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum YoungCmd {
    /// The path matrix M_n.
    Matrix {
        #[arg(long)]
        n: u32,
        /// Print every entry, not only the shape and rank.
        #[arg(long)]
        emit: bool,
    },
    /// Rank of M_n at x = n.
    Rank {
        #[arg(long)]
        upto: u32,
    },
    /// Factorization of det N_n.
    Det {
        #[arg(long)]
        upto: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum QuiverCmd {
    /// Radical layers of the projective cover of a simple.
    Radical {
        #[arg(long)]
        top: SimpleHC,
        #[arg(long)]
        depth: usize,
    },
    /// Q(k) as a sum of indecomposable projectives.
    DecomposeQ {
        #[arg(long)]
        k: u32,
    },
    /// Vertices, arrows and relations of the three blocks.
    Blocks {
        /// Largest vertex index shown.
        #[arg(long, default_value_t = 16)]
        max_index: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Every acceptance suite.
    All {
        /// Smaller ranges, for a fast smoke run.
        #[arg(long)]
        quick: bool,
    },
}

/// Result of one command before timing is attached.
struct Outcome {
    params: Value,
    results: Value,
    verdicts: Vec<Verdict>,
    text: String,
}

/// Runs a parsed command line. Returns the report and its text rendering.
pub fn run(cli: &Cli) -> Result<(Report, String)> {
    let start = Instant::now();
    let (command, outcome) = dispatch(&cli.command)?;
    let report = Report {
        command,
        params: outcome.params,
        results: outcome.results,
        verdicts: outcome.verdicts,
        wall_time_ms: start.elapsed().as_millis() as u64,
    };
    let text = render_text(&report, &outcome.text);
    Ok((report, text))
}

/// The rendered output for the chosen format.
pub fn render(cli: &Cli, report: &Report, text: &str) -> String {
    match cli.format {
        Format::Text => text.to_string(),
        Format::Structured => report.to_json() + "\n",
    }
}

fn dispatch(cmd: &Command) -> Result<(String, Outcome)> {
    Ok(match cmd {
        Command::Genfun(GenfunCmd::Series {
            k,
            l,
            degree,
            method,
        }) => (
            format!(
                "genfun series --k {k} --l {l} --degree {degree} --method {}",
                format!("{method:?}").to_lowercase()
            ),
            genfun_series(*k, *l, *degree, *method)?,
        ),
        Command::Genfun(GenfunCmd::Invariants { k, degree }) => (
            format!("genfun invariants --k {k} --degree {degree}"),
            genfun_invariants(*k, *degree)?,
        ),
        Command::Genfun(GenfunCmd::Freeness { k, l, degree }) => (
            format!("genfun freeness --k {k} --l {l} --degree {degree}"),
            genfun_freeness(*k, *l, *degree)?,
        ),
        Command::Sl2(Sl2Cmd::Sym { k, n }) => (format!("sl2 sym --k {k} --n {n}"), sl2_sym(*k, *n)),
        Command::Sl2(Sl2Cmd::Q0(a)) => match (a.l, a.table) {
            (Some(l), _) => (format!("sl2 q0 --l {l}"), sl2_q0_single(l)),
            (None, t) => {
                let t = t.unwrap_or(4);
                (format!("sl2 q0 --table {t}"), sl2_q0_table(t))
            }
        },
        Command::Sl2(Sl2Cmd::Tensor { k, simple }) => (
            format!("sl2 tensor --k {k} --simple {simple}"),
            sl2_tensor(*k, *simple),
        ),
        Command::Symalg(SymalgCmd::CheckInvariants) => {
            ("symalg check-invariants".into(), symalg_invariants())
        }
        Command::Symalg(SymalgCmd::Independence { k }) => (
            format!("symalg independence --k {k}"),
            symalg_independence(*k),
        ),
        Command::Young(YoungCmd::Matrix { n, emit }) => {
            if *n == 0 {
                bail!("--n must be at least 1");
            }
            (
                format!("young matrix --n {n}{}", if *emit { " --emit" } else { "" }),
                young_matrix(*n, *emit),
            )
        }
        Command::Young(YoungCmd::Rank { upto }) => {
            (format!("young rank --upto {upto}"), young_rank(*upto))
        }
        Command::Young(YoungCmd::Det { upto }) => {
            (format!("young det --upto {upto}"), young_det(*upto)?)
        }
        Command::Quiver(QuiverCmd::Radical { top, depth }) => (
            format!("quiver radical --top {top} --depth {depth}"),
            quiver_radical(*top, *depth),
        ),
        Command::Quiver(QuiverCmd::DecomposeQ { k }) => {
            (format!("quiver decompose-q --k {k}"), quiver_decompose(*k))
        }
        Command::Quiver(QuiverCmd::Blocks { max_index }) => (
            format!("quiver blocks --max-index {max_index}"),
            quiver_blocks(*max_index),
        ),
        Command::Verify(VerifyCmd::All { quick }) => (
            format!("verify all{}", if *quick { " --quick" } else { "" }),
            verify_all(*quick),
        ),
    })
}

fn coeff_strings(s: &TruncatedSeries) -> Vec<String> {
    s.coeffs().iter().map(Scalar::to_string).collect()
}

fn series_table(columns: &[(&str, &TruncatedSeries)]) -> String {
    let mut header = vec!["degree"];
    header.extend(columns.iter().map(|c| c.0));
    let mut t = Table::new(&header);
    let order = columns.iter().map(|c| c.1.order()).min().unwrap_or(0);
    for d in 0..=order {
        let mut row = vec![d.to_string()];
        row.extend(columns.iter().map(|c| c.1.coeff(d).to_string()));
        t.row(&row);
    }
    t.to_string()
}

fn cache_path(dir: Option<&Path>, key: &str) -> Option<PathBuf> {
    let digest = hex::encode(Sha256::digest(key.as_bytes()));
    Some(dir?.join(format!("{digest}.json")))
}

fn content_hash(coeffs: &[String]) -> String {
    hex::encode(Sha256::digest(coeffs.join(",").as_bytes()))
}

/// Series by `method`, through the cache directory named by [`CACHE_ENV`] if set.
pub fn cached_series(method: Method, k: u32, l: u32, n: usize) -> Result<TruncatedSeries> {
    let dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    cached_series_in(dir.as_deref(), method, k, l, n)
}

/// Series by `method`, read from or written to `dir`. Entries whose content
/// hash does not match are ignored and rewritten.
pub fn cached_series_in(
    dir: Option<&Path>,
    method: Method,
    k: u32,
    l: u32,
    n: usize,
) -> Result<TruncatedSeries> {
    let key = format!("series/{method:?}/{k}/{l}/{n}");
    let path = cache_path(dir, &key);
    if let Some(p) = &path {
        if let Ok(bytes) = fs::read(p) {
            if let Ok(v) = serde_json::from_slice::<Value>(&bytes) {
                let coeffs: Option<Vec<String>> = serde_json::from_value(v["coeffs"].clone()).ok();
                if let Some(c) = coeffs {
                    if v["key"] == key && v["sha256"] == content_hash(&c) {
                        let parsed: Result<Vec<Scalar>, _> =
                            c.iter().map(|s| s.parse::<Scalar>()).collect();
                        if let Ok(parsed) = parsed {
                            return Ok(TruncatedSeries::new(parsed));
                        }
                    }
                }
            }
        }
    }
    let s = genfun::f_series(method, k, l, n)?;
    if let Some(p) = &path {
        let coeffs = coeff_strings(&s);
        let doc = json!({"key": key, "sha256": content_hash(&coeffs), "coeffs": coeffs});
        if let Some(dir) = p.parent() {
            fs::create_dir_all(dir)
                .with_context(|| format!("creating cache directory {}", dir.display()))?;
        }
        fs::write(p, serde_json::to_vec(&doc)?)
            .with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(s)
}

fn genfun_series(k: u32, l: u32, degree: usize, method: MethodArg) -> Result<Outcome> {
    let methods: Vec<Method> = match method {
        MethodArg::Enum => vec![Method::Enum],
        MethodArg::Recur => vec![Method::Recur],
        MethodArg::Closed => vec![Method::Closed],
        MethodArg::All => {
            let mut m = vec![Method::Enum];
            if k >= 2 {
                m.push(Method::Recur);
            }
            if genfun::has_closed_form(k, l) {
                m.push(Method::Closed);
            }
            m
        }
    };
    let mut computed = Vec::new();
    for m in &methods {
        computed.push((*m, cached_series(*m, k, l, degree)?));
    }
    let names: Vec<String> = computed
        .iter()
        .map(|(m, _)| format!("{m:?}").to_lowercase())
        .collect();
    let cols: Vec<(&str, &TruncatedSeries)> = names
        .iter()
        .map(String::as_str)
        .zip(computed.iter().map(|c| &c.1))
        .collect();
    let mut text = series_table(&cols);
    let mut verdicts = Vec::new();
    if method == MethodArg::All {
        let base = &computed[0].1;
        for (m, s) in &computed[1..] {
            let first = (0..=degree).find(|&d| s.coeff(d) != base.coeff(d));
            verdicts.push(Verdict::new(
                format!("{m:?} agrees with enumeration to degree {degree}").to_lowercase(),
                first.is_none(),
                first
                    .map(|d| format!("first mismatch at degree {d}"))
                    .unwrap_or_default(),
            ));
        }
        if methods.len() < 3 {
            let _ = writeln!(
                text,
                "\n(methods available for k={k}, l={l}: {})",
                names.join(", ")
            );
        }
    }
    let results: Value = computed
        .iter()
        .map(|(m, s)| (format!("{m:?}").to_lowercase(), json!(coeff_strings(s))))
        .collect::<serde_json::Map<_, _>>()
        .into();
    Ok(Outcome {
        params: json!({"k": k, "l": l, "degree": degree, "method": format!("{method:?}").to_lowercase()}),
        results,
        verdicts,
        text,
    })
}

fn genfun_invariants(k: u32, degree: usize) -> Result<Outcome> {
    let s = genfun::invariant_series(k, degree)?;
    let mut text = format!("F_0 - F_2 = {s}\n");
    let mut verdicts = Vec::new();
    let structure = genfun::detect_structure(&s);
    match &structure {
        Ok(st) => {
            let _ = writeln!(text, "generator degrees: {:?}", st.generator_degrees);
            match st.relation_degree {
                Some(r) => writeln!(text, "relation degree: {r}")?,
                None => writeln!(text, "polynomial algebra")?,
            }
            verdicts.push(Verdict::check(
                "the detected structure reproduces the series",
                st.series(degree) == s,
            ));
        }
        Err(e) => {
            let _ = writeln!(text, "structure: {e}");
            verdicts.push(Verdict::new(
                "invariant structure recognized",
                false,
                e.to_string(),
            ));
        }
    }
    Ok(Outcome {
        params: json!({"k": k, "degree": degree}),
        results: json!({"series": coeff_strings(&s), "structure": structure.ok()}),
        verdicts,
        text,
    })
}

fn genfun_freeness(k: u32, l: u32, degree: usize) -> Result<Outcome> {
    let f = genfun::freeness_quotient(k, l, degree)?;
    let mut text = format!("(F_{l} - F_{}) / (F_0 - F_2) = {}\n", l + 2, f.quotient);
    match f.first_negative {
        Some(d) => writeln!(text, "first negative coefficient: degree {d}")?,
        None => writeln!(text, "no negative coefficient up to degree {degree}")?,
    }
    Ok(Outcome {
        params: json!({"k": k, "l": l, "degree": degree}),
        results: json!({"quotient": coeff_strings(&f.quotient), "first_negative": f.first_negative}),
        verdicts: Vec::new(),
        text,
    })
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn sl2_sym(k: u32, n: u32) -> Outcome {
    let d = sl2rep::sym_power_decompose(k, n);
    let dim: u128 = d.iter().map(|(l, m)| l.dim() as u128 * m as u128).sum();
    let expect = binomial((n + k) as u64, k as u64);
    Outcome {
        params: json!({"k": k, "n": n}),
        results: json!({"decomposition": d}),
        verdicts: vec![Verdict::new(
            format!("dimensions add up to C({}, {k}) = {expect}", n + k),
            dim == expect,
            format!("sum {dim}"),
        )],
        text: format!("Sym^{n} L({k}) = {d}\n"),
    }
}

fn q0_from_series(l: u32) -> u64 {
    (0..=l / 2)
        .map(|k| sl2rep::q00_degree_part(k).count(&SimpleFinDim(l)))
        .sum()
}

fn sl2_q0_single(l: u32) -> Outcome {
    let m = sl2rep::q0_multiplicity(l);
    let s = q0_from_series(l);
    Outcome {
        params: json!({"l": l}),
        results: json!({"multiplicity": m, "from_series": s}),
        verdicts: vec![Verdict::check(
            "closed formula agrees with the degree-by-degree count",
            m as u64 == s,
        )],
        text: format!("[Q(0) : L({l})] = {m}\n"),
    }
}

fn sl2_q0_table(max: u32) -> Outcome {
    let mut t = Table::new(&["k", "degree k part of Q(0,0)"]);
    let mut rows = Vec::new();
    for k in 0..=max {
        let p = sl2rep::q00_degree_part(k);
        t.row(&[k.to_string(), p.to_string()]);
        rows.push(json!({"k": k, "part": p}));
    }
    Outcome {
        params: json!({"table": max}),
        results: json!(rows),
        verdicts: Vec::new(),
        text: t.to_string(),
    }
}

fn sl2_tensor(k: u32, s: SimpleHC) -> Outcome {
    let r = sl2rep::hc_tensor(k, s);
    let bound = 2 * (k + s.index()) + 20;
    let mut rhs = crate::multiset::Multiset::new();
    for (t, m) in r.iter() {
        rhs.add(&t.g_types(bound).scaled(m));
    }
    let ok = sl2rep::tensor_g_types(k, s, bound) == rhs;
    Outcome {
        params: json!({"k": k, "simple": s}),
        results: json!({"result": r}),
        verdicts: vec![Verdict::check(
            format!("g-types agree with Clebsch-Gordan up to L({bound})"),
            ok,
        )],
        text: format!("L({k}) ⊗ {s} = {r}\n"),
    }
}

fn symalg_invariants() -> Outcome {
    let mut text = String::new();
    let mut verdicts = Vec::new();
    let mut results = Vec::new();
    for (name, inv) in [("C2", symalg::build_c2()), ("C3", symalg::build_c3())] {
        let _ = writeln!(text, "{name} = {}", inv.element);
        for g in [Gen::E, Gen::F, Gen::H] {
            let r = symalg::adjoint_action(g, &inv.element);
            let _ = writeln!(
                text,
                "  {g:?}.{name} = {}",
                if r.is_zero() {
                    "0".to_string()
                } else {
                    r.to_string()
                }
            );
        }
        let ok = symalg::is_invariant(&inv.element);
        verdicts.push(Verdict::check(format!("{name} is invariant"), ok));
        results.push(json!({"name": name, "element": inv.element.to_string(), "degree": inv.degree, "invariant": ok}));
    }
    Outcome {
        params: json!({}),
        results: json!(results),
        verdicts,
        text,
    }
}

fn symalg_independence(k: u32) -> Outcome {
    let c = symalg::independence_check(k);
    Outcome {
        params: json!({"k": k}),
        text: format!(
            "{} vectors over {} monomials, rank {}\n",
            c.vectors, c.monomials, c.rank
        ),
        verdicts: vec![Verdict::check(
            format!("the {k} vectors are linearly independent"),
            c.independent,
        )],
        results: json!(c),
    }
}

fn young_matrix(n: u32, emit: bool) -> Outcome {
    let m = younglat::path_matrix(n);
    let rank = younglat::rank_at(n);
    let mut text = format!(
        "M_{n}: {} x {}, rank {rank} at x = {n}\n",
        m.rows.len(),
        m.cols.len()
    );
    if emit {
        let mut header = vec![String::new()];
        header.extend(m.cols.iter().map(|c| c.to_string()));
        let mut t = Table::new(&header);
        for (r, row) in m.rows.iter().zip(m.to_strings()) {
            let mut cells = vec![r.to_string()];
            cells.extend(row);
            t.row(&cells);
        }
        text.push_str(&t.to_string());
    }
    let mut results = json!({"rows": m.rows, "cols": m.cols, "rank_at_n": rank});
    if emit {
        results["entries"] = json!(m.to_strings());
    }
    Outcome {
        params: json!({"n": n, "emit": emit}),
        results,
        verdicts: vec![Verdict::check(
            format!("rank M_{n} at x={n} is {n}"),
            rank == n as usize,
        )],
        text,
    }
}

fn young_rank(upto: u32) -> Outcome {
    let mut t = Table::new(&["n", "rank", "verdict"]);
    let mut verdicts = Vec::new();
    let mut rows = Vec::new();
    for n in 1..=upto {
        let r = younglat::rank_at(n);
        let pass = r == n as usize;
        t.row(&[
            n.to_string(),
            r.to_string(),
            format!("rank = n: {}", if pass { "PASS" } else { "FAIL" }),
        ]);
        rows.push(json!({"n": n, "rank": r}));
        verdicts.push(Verdict::check(format!("rank M_{n} at x={n} is {n}"), pass));
    }
    Outcome {
        params: json!({"upto": upto}),
        results: json!(rows),
        verdicts,
        text: t.to_string(),
    }
}

fn young_det(upto: u32) -> Result<Outcome> {
    let mut t = Table::new(&["n", "content", "linear factors"]);
    let mut verdicts = Vec::new();
    let mut rows = Vec::new();
    for n in 2..=upto {
        let r = younglat::verify_det_factorization(n)?;
        let f = &r.factorization;
        t.row(&[
            n.to_string(),
            f.cofactor.to_string(),
            f.factor_strings()
                .iter()
                .map(|s| format!("({s})"))
                .collect::<String>(),
        ]);
        verdicts.push(Verdict::check(
            format!(
                "det N_{n} is a nonzero integer times x - i with i < {n}, nonzero at x = {n}..{}",
                upto.max(n)
            ),
            r.pass() && r.nonzero_on(n, upto.max(n)),
        ));
        rows.push(json!(r));
    }
    Ok(Outcome {
        params: json!({"upto": upto}),
        results: json!(rows),
        verdicts,
        text: t.to_string(),
    })
}

fn quiver_radical(top: SimpleHC, depth: usize) -> Outcome {
    let f = quiver::radical_filtration(top, depth);
    let mut t = Table::new(&["layer", "simples"]);
    for (i, l) in f.layers.iter().enumerate() {
        t.row(&[i.to_string(), l.to_string()]);
    }
    Outcome {
        params: json!({"top": top, "depth": depth}),
        text: format!("{f}\n\n{t}"),
        results: json!(f),
        verdicts: Vec::new(),
    }
}

fn quiver_decompose(k: u32) -> Outcome {
    let q = quiver::decompose_Q(k);
    let ok = q == quiver::decompose_q_by_g_types(k);
    Outcome {
        params: json!({"k": k}),
        text: format!("Q({k}) = {q}\n"),
        results: json!({"decomposition": q}),
        verdicts: vec![Verdict::check("multiplicity of P_V equals [V : L(k)]", ok)],
    }
}

fn quiver_blocks(max_index: u32) -> Outcome {
    let mut text = String::new();
    let mut results = Vec::new();
    for b in Block::ALL {
        let q = QuiverPresentation::new(b, max_index);
        let vs: Vec<String> = q.vertices.iter().map(|v| v.to_string()).collect();
        let arrows: Vec<String> = q
            .arrows
            .iter()
            .map(|a| format!("{}: {} -> {}", a.name, a.source, a.target))
            .collect();
        let rels = q.relation_strings();
        let _ = writeln!(text, "{b}\n  vertices: {}\n  arrows:", vs.join(", "));
        for a in &arrows {
            let _ = writeln!(text, "    {a}");
        }
        let _ = writeln!(text, "  relations:");
        for r in &rels {
            let _ = writeln!(text, "    {r}");
        }
        results.push(
            json!({"block": b.number(), "vertices": vs, "arrows": q.arrows, "relations": rels}),
        );
    }
    Outcome {
        params: json!({"max_index": max_index}),
        results: json!(results),
        verdicts: Vec::new(),
        text,
    }
}

fn verify_all(quick: bool) -> Outcome {
    let start = Instant::now();
    let suites = verify::run_all(Options { quick });
    let elapsed = start.elapsed().as_millis() as u64;
    let mut text = String::new();
    let mut verdicts = Vec::new();
    for s in &suites {
        let _ = writeln!(
            text,
            "[{}] {}: {} ({} ms)",
            s.id,
            s.name,
            if s.pass() { "PASS" } else { "FAIL" },
            s.wall_time_ms
        );
        for v in &s.verdicts {
            let mut v = v.clone();
            v.claim = format!("[{}] {}", s.id, v.claim);
            verdicts.push(v);
        }
    }
    verdicts.push(Verdict::new(
        "[10] verify all finishes within 5 minutes",
        elapsed < verify::TIME_LIMIT_MS,
        format!("{elapsed} ms"),
    ));
    Outcome {
        params: json!({"quick": quick}),
        results: json!(suites),
        verdicts,
        text,
    }
}
