use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spectra_forge::algebra::{gcd_union, FiniteGroup, GroupSpec, GroupSubset};
use spectra_forge::finring::{power_residues, FiniteRing};
use spectra_forge::graphs::{cayley, mirror_dicayley, CayleyKind, Graph};
use spectra_forge::products::{named_product, path2, ProductKind};
use spectra_forge::spectra::{
    cayley_spectrum, compare, mirror_spectrum, product_spectrum_formula, verified_spectrum, MirrorKind, Spectrum,
    CROSS_CHECK_TOL,
};
use spectra_forge::theorems::{build_even_odd_pair, run_suite, Outcome, Suite, VerificationReport, DEFAULT_SEED};
use spectra_forge::Error;

#[derive(Parser)]
#[command(name = "spectra-forge", version, about = "Cayley and mirror di-Cayley graphs and their spectra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and write it out.
    Build {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spectrum of a graph, confirmed by a second route.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare two spectra: two `--graph` files, or the difference and sum
    /// graphs of one descriptor.
    Compare {
        #[command(flatten)]
        graph: GraphArgs,
        /// Eigenvalue matching tolerance.
        #[arg(long, default_value_t = CROSS_CHECK_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run a claim suite and print one JSON line per report.
    Verify {
        #[arg(long, default_value = "examples")]
        suite: String,
        #[arg(long, env = "SPECTRA_FORGE_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and certify the mirror pairs over a ring.
    Pair {
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Summarize JSON-line reports from a file (or stdin) per claim.
    Report {
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Group descriptor: cyclic:n, dihedral:n, dicyclic:n, sym:n, prod:(…).
    #[arg(long, conflicts_with = "ring")]
    group: Option<String>,
    /// Ring descriptor: factors such as zpk:2^2, gf:3^2, gr:2^2:2, quot:3^1:2 joined by `*`.
    #[arg(long)]
    ring: Option<String>,
    /// Connection set: `1,3`, `units`, `pk:k` or `gcd:d1,d2,…`.
    #[arg(long)]
    set: Option<String>,
    #[arg(long, value_enum, default_value = "diff")]
    kind: Kind,
    /// Build the mirror graph with T = {e}, S or S ∪ {e}.
    #[arg(long)]
    mirror: Option<String>,
    /// Product of the Cayley graph with P2.
    #[arg(long, conflicts_with = "mirror")]
    product: Option<String>,
    /// Use the looped P2 in `--product`.
    #[arg(long, requires = "product")]
    looped: bool,
    /// Graph JSON file (as written by `build --format json`); repeat for `compare`.
    #[arg(long = "graph", conflicts_with_all = ["group", "ring"])]
    graphs: Vec<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Diff,
    Sum,
}

impl From<Kind> for CayleyKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Diff => CayleyKind::Difference,
            Kind::Sum => CayleyKind::Sum,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Table,
}

/// Failures mapped to exit statuses: 2 for bad input, 3 for violated
/// hypotheses, 1 for everything else.
struct Failure {
    status: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_)
            | Error::InvalidParameter(_)
            | Error::IndexOutOfRange { .. }
            | Error::OrderTooLarge { .. }
            | Error::NotPrime(_)
            | Error::NotDivisor { .. }
            | Error::SizeBound { .. }
            | Error::InvalidGroup(_)
            | Error::InvalidRing(_)
            | Error::MismatchedGroup { .. } => 2,
            Error::HypothesisViolation(_) | Error::NotField(_) | Error::NonAbelian(_) => 3,
            _ => 1,
        };
        Failure { status, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { status: 1, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { status: 2, message: message.into() }
}

/// The group together with the ring it came from, if any.
struct Source {
    group: Arc<FiniteGroup>,
    ring: Option<FiniteRing>,
}

impl GraphArgs {
    fn source(&self) -> Result<Source, Failure> {
        match (&self.group, &self.ring) {
            (Some(g), None) => Ok(Source { group: g.parse::<GroupSpec>()?.build()?, ring: None }),
            (None, Some(r)) => {
                let ring: FiniteRing = r.parse()?;
                Ok(Source { group: ring.additive_group().clone(), ring: Some(ring) })
            }
            _ => Err(usage("give exactly one of --group or --ring")),
        }
    }

    fn mirror(&self) -> Result<Option<MirrorKind>, Failure> {
        self.mirror.as_deref().map(str::parse).transpose().map_err(Failure::from)
    }

    fn product(&self) -> Result<Option<ProductKind>, Failure> {
        self.product.as_deref().map(str::parse).transpose().map_err(Failure::from)
    }

    /// Everything is parsed before any graph is built.
    fn resolve(&self) -> Result<Resolved, Failure> {
        let src = self.source()?;
        let set = self.set.as_deref().ok_or_else(|| usage("--set is required with --group or --ring"))?;
        let s = parse_set(&src, set)?;
        let mirror = self.mirror()?;
        let product = self.product()?;
        Ok(Resolved { group: src.group, s, kind: self.kind.into(), mirror, product, looped: self.looped })
    }
}

struct Resolved {
    group: Arc<FiniteGroup>,
    s: GroupSubset,
    kind: CayleyKind,
    mirror: Option<MirrorKind>,
    product: Option<ProductKind>,
    looped: bool,
}

impl Resolved {
    fn t(&self, mk: MirrorKind) -> GroupSubset {
        match mk {
            MirrorKind::Identity => GroupSubset::identity_only(&self.group),
            MirrorKind::Same => self.s.clone(),
            MirrorKind::SameWithIdentity => self.s.with_identity(),
        }
    }

    fn graph(&self, kind: CayleyKind) -> Result<Graph, Failure> {
        let x = cayley(&self.group, &self.s, kind)?;
        Ok(match (self.mirror, self.product) {
            (Some(mk), _) => mirror_dicayley(&self.group, &self.s, &self.t(mk), kind)?,
            (None, Some(pk)) => named_product(&x, &path2(self.looped), pk)?,
            (None, None) => x,
        })
    }

    fn spectrum(&self, kind: CayleyKind) -> Result<Spectrum, Failure> {
        Ok(match (self.mirror, self.product) {
            (Some(mk), _) => mirror_spectrum(&self.group, &self.s, &self.t(mk), kind)?,
            (None, Some(pk)) => {
                let p2 = path2(self.looped);
                let p2_spec = verified_spectrum(&p2, None)?;
                let base = cayley_spectrum(&self.group, &self.s, kind)?;
                let graph = named_product(&cayley(&self.group, &self.s, kind)?, &p2, pk)?;
                verified_spectrum(&graph, Some(product_spectrum_formula(&base, &p2_spec, pk)))?
            }
            (None, None) => cayley_spectrum(&self.group, &self.s, kind)?,
        })
    }

    fn name(&self, kind: CayleyKind) -> String {
        let x = if kind == CayleyKind::Sum { "X+" } else { "X" };
        match (self.mirror, self.product) {
            (Some(mk), _) => format!("M{x}({}; S, T={})", self.group.label(), mk.tag()),
            (None, Some(pk)) => format!("{x}({}, S) {} P2", self.group.label(), pk.name()),
            (None, None) => format!("{x}({}, S)", self.group.label()),
        }
    }
}

/// Splits on commas outside parentheses, so product labels like `(1,2)` survive.
fn split_list(s: &str) -> Vec<&str> {
    let (mut out, mut depth, mut start) = (Vec::new(), 0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|t| !t.is_empty());
    out
}

fn parse_set(src: &Source, d: &str) -> Result<GroupSubset, Failure> {
    let d = d.trim();
    if d == "units" {
        let ring = src.ring.as_ref().ok_or_else(|| usage("`units` needs --ring"))?;
        return Ok(ring.units());
    }
    if let Some(k) = d.strip_prefix("pk:") {
        let ring = src.ring.as_ref().ok_or_else(|| usage("`pk:k` needs --ring"))?;
        let k: u64 = k.trim().parse().map_err(|_| usage(format!("bad k in `{d}`")))?;
        return Ok(power_residues(ring, k)?);
    }
    if let Some(ds) = d.strip_prefix("gcd:") {
        let divisors = split_list(ds)
            .into_iter()
            .map(|x| x.parse::<usize>().map_err(|_| usage(format!("bad divisor `{x}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(gcd_union(&src.group, &divisors)?);
    }
    let g = &src.group;
    let members = split_list(d)
        .into_iter()
        .map(|tok| {
            if let Ok(i) = tok.parse::<usize>() {
                return Ok(i);
            }
            g.element_labels()
                .iter()
                .position(|l| l == tok)
                .ok_or_else(|| usage(format!("`{tok}` is neither an index nor an element of {}", g.label())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupSubset::new(g, members)?)
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    Ok(Graph::from_json(&fs::read_to_string(path)?)?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn graph_text(g: &Graph, name: &str, format: Format) -> String {
    match format {
        Format::Json => g.to_json() + "\n",
        Format::Dot => g.to_dot(name),
        Format::Csv => {
            let mut s = String::new();
            for u in 0..g.n() {
                let row: Vec<String> = g.row(u).iter().map(u8::to_string).collect();
                s.push_str(&row.join(","));
                s.push('\n');
            }
            s
        }
        Format::Table => {
            let f = g.structure_report();
            let degree = f.out_regular.map_or("irregular".to_string(), |d| format!("{d}-regular"));
            format!(
                "{name}: {} vertices, {} arcs, {}, {}, {} looped vertices, {} components, {} twin classes\n",
                f.vertices,
                g.arc_count(),
                if f.directed { "directed" } else { "undirected" },
                degree,
                f.loop_vertices.len(),
                f.components,
                f.twin_classes.len()
            )
        }
    }
}

fn spectrum_text(spec: &Spectrum, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Table => {
            let c = spec.classify();
            format!(
                "{}\nintegral {} parity {:?} symmetric {}\n",
                spec.to_table(),
                c.integral,
                c.parity,
                c.symmetric
            )
        }
        Format::Json => serde_json::to_string(&spec.to_json_value()).expect("spectrum serializes") + "\n",
        Format::Csv => spec.to_csv(),
        Format::Dot => return Err(usage("spectra have no DOT form")),
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Build { graph, format, out } => {
            let r = graph.resolve()?;
            let g = r.graph(r.kind)?;
            emit(&out, &graph_text(&g, &r.name(r.kind), format))?;
            Ok(0)
        }
        Command::Spectrum { graph, format, out } => {
            let spec = if graph.graphs.is_empty() {
                let r = graph.resolve()?;
                r.spectrum(r.kind)?
            } else {
                let [path] = graph.graphs.as_slice() else {
                    return Err(usage("`spectrum` takes one --graph"));
                };
                verified_spectrum(&read_graph(path)?, None)?
            };
            emit(&out, &spectrum_text(&spec, format)?)?;
            Ok(0)
        }
        Command::Compare { graph, tol, format } => {
            let (a, b, labels) = if graph.graphs.is_empty() {
                let r = graph.resolve()?;
                let (d, s) = (CayleyKind::Difference, CayleyKind::Sum);
                (r.spectrum(d)?, r.spectrum(s)?, (r.name(d), r.name(s)))
            } else {
                let [pa, pb] = graph.graphs.as_slice() else {
                    return Err(usage("`compare` takes two --graph files"));
                };
                let a = verified_spectrum(&read_graph(pa)?, None)?;
                let b = verified_spectrum(&read_graph(pb)?, None)?;
                (a, b, (pa.display().to_string(), pb.display().to_string()))
            };
            let c = compare(&a, &b, tol);
            let text = match format {
                Format::Json => serde_json::json!({
                    "left": labels.0,
                    "right": labels.1,
                    "isospectral": c.isospectral,
                    "max_residual": c.max_residual.is_finite().then_some(c.max_residual),
                    "left_spectrum": a.to_json_value(),
                    "right_spectrum": b.to_json_value(),
                })
                .to_string()
                    + "\n",
                Format::Table => format!(
                    "{}: {}\n{}: {}\nisospectral {}\n",
                    labels.0,
                    a.to_table(),
                    labels.1,
                    b.to_table(),
                    c.isospectral
                ),
                _ => return Err(usage("compare prints table or json")),
            };
            emit(&None, &text)?;
            Ok(0)
        }
        Command::Verify { suite, seed, out } => {
            let suite: Suite = suite.parse()?;
            let reports = run_suite(suite, seed);
            let mut text = String::new();
            for r in &reports {
                text.push_str(&r.to_json_line());
                text.push('\n');
            }
            emit(&out, &text)?;
            let failed = reports.iter().filter(|r| r.failed()).count();
            eprintln!("{} reports, {failed} failed", reports.len());
            Ok(u8::from(failed > 0))
        }
        Command::Pair { ring, format } => {
            let ring: FiniteRing = ring.parse()?;
            let pair = build_even_odd_pair(&ring)?;
            let cert = &pair.certification;
            let text = match format {
                Format::Json => {
                    let p = |c: &spectra_forge::theorems::CertifiedPair| {
                        serde_json::json!({
                            "mirror": c.mirror.tag(),
                            "spectrum": c.spectrum.to_json_value(),
                            "sum_spectrum": c.sum_spectrum.to_json_value(),
                            "isospectral": c.isospectral,
                        })
                    };
                    serde_json::json!({
                        "ring": pair.ring,
                        "base": pair.base.to_json_value(),
                        "pairs": [p(&pair.zero_pair), p(&pair.even_pair), p(&pair.odd_pair)],
                        "certification": cert,
                    })
                    .to_string()
                        + "\n"
                }
                Format::Table => {
                    let mut s = format!("R = {}\nSpec X(R,R*) = {}\n", pair.ring, pair.base.to_table());
                    for (name, c) in [("T={0}", &pair.zero_pair), ("even T=R*", &pair.even_pair), ("odd T=R*∪{0}", &pair.odd_pair)] {
                        s.push_str(&format!("{name}: MX  {}\n", c.spectrum.to_table()));
                        s.push_str(&format!("{name}: MX+ {}\n", c.sum_spectrum.to_table()));
                        s.push_str(&format!("{name}: isospectral {}\n", c.isospectral));
                    }
                    s.push_str(&format!("certification: {}\n", cert.to_json_line()));
                    s
                }
                _ => return Err(usage("pair prints table or json")),
            };
            emit(&None, &text)?;
            Ok(u8::from(cert.failed()))
        }
        Command::Report { input } => {
            let mut text = String::new();
            match input {
                Some(p) => text = fs::read_to_string(p)?,
                None => {
                    io::stdin().read_to_string(&mut text)?;
                }
            }
            let mut rows: Vec<(String, [usize; 3])> = Vec::new();
            for line in text.lines().filter(|l| !l.trim().is_empty()) {
                let r = VerificationReport::from_json_line(line)?;
                let i = match r.outcome {
                    Outcome::Pass => 0,
                    Outcome::Fail => 1,
                    Outcome::Skipped => 2,
                };
                match rows.iter_mut().find(|(c, _)| *c == r.claim_id) {
                    Some((_, n)) => n[i] += 1,
                    None => {
                        let mut n = [0; 3];
                        n[i] = 1;
                        rows.push((r.claim_id, n));
                    }
                }
            }
            rows.sort();
            let mut s = format!("{:<28} {:>6} {:>6} {:>8}\n", "claim", "pass", "fail", "skipped");
            for (c, [p, f, k]) in &rows {
                s.push_str(&format!("{c:<28} {p:>6} {f:>6} {k:>8}\n"));
            }
            emit(&None, &s)?;
            Ok(u8::from(rows.iter().any(|(_, n)| n[1] > 0)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.status)
        }
    }
}
