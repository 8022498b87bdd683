//! The `pathdeg` command line: argument definitions, graph loading and a
//! deterministic report for every subcommand.
//!
//! Every constructive output (certificate, coloring, order) is re-checked
//! before it is reported, and the outcome of each check is part of the
//! report. The process exits with status 0 exactly when all checks pass.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bounds::{self, BoundResult, Expansion, ExpansionParams};
use crate::colorings::{self, EdgeColoring};
use crate::density;
use crate::formats;
use crate::generators::GeneratorSpec;
use crate::graph::{Girth, Graph, GraphError};
use crate::reduction::{self, DegeneracyVerdict};
use crate::wcol::{self, LinearOrder, WcolBoundParams};
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "pathdeg", version, about = "Path degeneracy of graphs: certificates, colorings, weak orders, girth bounds")]
pub struct Cli {
    /// Print the report as one JSON object.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Edge-list or .g6 file, `g6:STRING`, `fixture:NAME`, `cycle:N`,
    /// `path:N`, `complete:N` or `theta:L1,L2,...`.
    #[arg(long)]
    pub graph: String,
    /// Replace every edge by a path with this many internal vertices.
    #[arg(long, default_value_t = 0)]
    pub subdivide: usize,
}

#[derive(Debug, Clone, Args)]
pub struct CycleCap {
    /// Give up on cycle enumeration beyond this many cycles.
    #[arg(long = "cycle-cap", default_value_t = 10_000_000)]
    pub cycle_cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graph summary and the largest p for which it is p-path degenerate.
    Analyze {
        #[command(flatten)]
        graph: GraphArgs,
        /// Largest p to try.
        #[arg(long, default_value_t = 32)]
        limit: usize,
    },
    /// Decide p-path degeneracy and print a certificate or witness.
    Check {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short)]
        p: usize,
        /// Cut every ear to length exactly p.
        #[arg(long)]
        exact_ears: bool,
        /// Also run the exhaustive backtracking search.
        #[arg(long)]
        oracle: bool,
        /// State budget of the backtracking search.
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        /// Shrink the witness to an edge-minimal irreducible subgraph.
        #[arg(long)]
        minimal: bool,
        /// Also write the certificate to this file.
        #[arg(long)]
        out: Option<String>,
    },
    /// Edge coloring with r+1 colors in which every cycle C sees
    /// min(|C|, r+1) colors.
    ColorArb {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short)]
        r: usize,
        #[command(flatten)]
        cap: CycleCap,
        #[arg(long)]
        out: Option<String>,
    },
    /// Proper edge coloring with max(degree, r) colors in which every cycle
    /// C sees min(|C|, r) colors.
    ColorAcyclic {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short)]
        r: usize,
        #[command(flatten)]
        cap: CycleCap,
        #[arg(long)]
        out: Option<String>,
    },
    /// Vertex order with small weak reachability sets up to radius r, from
    /// a 2q-reduction certificate.
    WcolOrder {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        q: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// Evaluate girth thresholds and the numeric helpers behind them.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Check a coloring, order or certificate read from a file.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Maximum subgraph density, mad and brute-force shallow-minor density.
    Density {
        #[command(flatten)]
        graph: GraphArgs,
        /// Also compute the density at depth r (a half-integer such as 0, 1/2, 1).
        #[arg(long)]
        nabla: Option<String>,
        /// Bag-system cap for the shallow-minor search.
        #[arg(long, default_value_t = density::NABLA_DEFAULT_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum BoundsCommand {
    /// Classes with Exp(r) <= a (r + 1/2)^b.
    Polynomial {
        #[arg(short)]
        a: f64,
        #[arg(short)]
        b: f64,
        #[arg(short)]
        p: usize,
    },
    /// Minor-closed classes with mad at most d.
    MinorClosed {
        #[arg(short)]
        d: f64,
        #[arg(short)]
        p: usize,
    },
    /// K_k-minor-free graphs.
    Clique {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        p: usize,
        #[arg(long, default_value_t = bounds::THOMASON_GAMMA)]
        gamma: f64,
    },
    /// Classes with sub-exponential expansion.
    Subexp {
        /// `const:C`, `poly:A,B`, `subexp:C,E` or `exp2`.
        #[arg(long)]
        expansion: String,
        #[arg(short)]
        p: usize,
        #[arg(long, default_value_t = 1000)]
        r_max: usize,
    },
    /// Girth of non-degenerate subdivided cubic graphs in a class of
    /// expansion O(r^b).
    LowerPoly {
        #[arg(short)]
        b: f64,
        #[arg(short)]
        p: usize,
        #[arg(long, default_value_t = 0.75)]
        alpha: f64,
    },
    /// Weak coloring bound for high-girth graphs.
    Wcol {
        #[arg(short)]
        r: usize,
        #[arg(short)]
        q: usize,
    },
    /// W_{-1}(t).
    Lambert {
        #[arg(short, allow_hyphen_values = true)]
        t: f64,
    },
    /// Least beta with x > A ln x + B for all x > beta.
    Beta {
        #[arg(long = "A")]
        a: f64,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// An edge coloring in `u v color` lines.
    Coloring {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        coloring: String,
        /// Every cycle C must see min(|C|, threshold) colors.
        #[arg(long)]
        threshold: usize,
        /// Also require a proper coloring.
        #[arg(long)]
        proper: bool,
        #[command(flatten)]
        cap: CycleCap,
    },
    /// A vertex order (ids in rank order) against the weak order target.
    Order {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        order: String,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        q: usize,
    },
    /// A reduction certificate.
    Certificate {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        certificate: String,
        #[arg(short)]
        p: usize,
        #[arg(long)]
        exact_ears: bool,
    },
}

/// Ordered fields, named checks and line-format attachments.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub fields: Vec<(String, Value)>,
    pub checks: Vec<(String, bool)>,
    pub attachments: Vec<(String, String)>,
}

impl Report {
    fn field(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.push((key.to_string(), value.into()));
    }

    fn check(&mut self, name: &str, ok: bool) {
        self.checks.push((name.to_string(), ok));
    }

    fn attach(&mut self, name: &str, text: String) {
        self.attachments.push((name.to_string(), text));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn attachment(&self, name: &str) -> Option<&str> {
        self.attachments.iter().find(|(k, _)| k == name).map(|(_, v)| v.as_str())
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    /// One object with keys in report order; checks under `"checks"`.
    pub fn to_json(&self) -> String {
        let checks: Vec<String> = self.checks.iter().map(|(k, ok)| format!("{}:{ok}", Value::from(k.as_str()))).collect();
        let mut parts: Vec<String> = self.fields.iter().map(|(k, v)| format!("{}:{v}", Value::from(k.as_str()))).collect();
        parts.push(format!("\"checks\":{{{}}}", checks.join(",")));
        parts.push(format!("\"passed\":{}", self.passed()));
        parts.extend(self.attachments.iter().map(|(k, v)| format!("{}:{}", Value::from(k.as_str()), Value::from(v.as_str()))));
        format!("{{{}}}", parts.join(","))
    }

    /// `key: value` lines, then `check name: pass|FAIL`, then each
    /// attachment under a `# name` line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            match v {
                Value::String(s) => writeln!(out, "{k}: {s}").unwrap(),
                other => writeln!(out, "{k}: {other}").unwrap(),
            }
        }
        for (k, ok) in &self.checks {
            writeln!(out, "check {k}: {}", if *ok { "pass" } else { "FAIL" }).unwrap();
        }
        for (k, text) in &self.attachments {
            writeln!(out, "# {k}").unwrap();
            out.push_str(text);
        }
        out
    }
}

fn read_file(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.to_string(), message: e.to_string() })
}

fn write_file(path: &str, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|e| Error::Io { path: path.to_string(), message: e.to_string() })
}

/// Resolves a `--graph` value: `g6:` strings, existing files (graph6 when
/// the name ends in `.g6`, edge list otherwise), then generator specs.
pub fn load_graph(source: &str) -> Result<Graph, Error> {
    if let Some(s) = source.strip_prefix("g6:") {
        return Ok(formats::parse_graph6(s)?);
    }
    if Path::new(source).is_file() {
        let text = read_file(source)?;
        return Ok(if source.ends_with(".g6") {
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            formats::parse_graph6(line)?
        } else {
            formats::parse_edge_list(&text)?
        });
    }
    match source.parse::<GeneratorSpec>() {
        Ok(spec) => Ok(spec.generate()?),
        Err(e) if source.contains(':') => Err(e.into()),
        Err(_) => Err(Error::Io { path: source.to_string(), message: "no such file, fixture or generator".into() }),
    }
}

fn graph_of(args: &GraphArgs) -> Result<Graph, Error> {
    let g = load_graph(&args.graph)?;
    Ok(if args.subdivide > 0 { g.subdivide(args.subdivide) } else { g })
}

fn girth_value(g: Girth) -> Value {
    match g {
        Girth::Finite(x) => json!(x),
        Girth::Infinite => json!("inf"),
    }
}

fn summarize(report: &mut Report, command: &str, args: &GraphArgs, g: &Graph) {
    report.field("command", command);
    report.field("graph", args.graph.as_str());
    report.field("subdivide", args.subdivide);
    report.field("order", g.order());
    report.field("size", g.size());
    report.field("girth", girth_value(g.girth()));
    report.field("mad", density::mad(g).to_string());
}

fn ids(vs: &[usize]) -> Value {
    json!(vs)
}

/// Runs one parsed command.
pub fn run(cli: &Cli) -> Result<Report, Error> {
    let mut report = Report::default();
    match &cli.command {
        Command::Analyze { graph, limit } => analyze(&mut report, graph, *limit)?,
        Command::Check { graph, p, exact_ears, oracle, budget, minimal, out } => {
            check(&mut report, graph, *p, *exact_ears, oracle.then_some(*budget), *minimal)?;
            if let (Some(path), Some(cert)) = (out, report.attachment("certificate")) {
                write_file(path, cert)?;
            }
        }
        Command::ColorArb { graph, r, cap, out } => {
            color(&mut report, graph, *r, false, cap.cycle_cap)?;
            write_attachment(&report, "coloring", out)?;
        }
        Command::ColorAcyclic { graph, r, cap, out } => {
            color(&mut report, graph, *r, true, cap.cycle_cap)?;
            write_attachment(&report, "coloring", out)?;
        }
        Command::WcolOrder { graph, r, q, out } => {
            wcol_order(&mut report, graph, *r, *q)?;
            write_attachment(&report, "order", out)?;
        }
        Command::Bounds(cmd) => bounds_report(&mut report, cmd)?,
        Command::Verify(cmd) => verify(&mut report, cmd)?,
        Command::Density { graph, nabla, cap } => density_report(&mut report, graph, nabla.as_deref(), *cap)?,
    }
    Ok(report)
}

fn write_attachment(report: &Report, name: &str, out: &Option<String>) -> Result<(), Error> {
    if let (Some(path), Some(text)) = (out, report.attachment(name)) {
        write_file(path, text)?;
    }
    Ok(())
}

fn analyze(report: &mut Report, args: &GraphArgs, limit: usize) -> Result<(), Error> {
    let g = graph_of(args)?;
    summarize(report, "analyze", args, &g);
    report.field("min_degree", if g.order() > 0 { g.min_degree() } else { 0 });
    report.field("max_degree", g.max_degree());
    report.field("components", g.components().len());
    report.field("forest", g.is_forest());
    report.field("strict_ears", g.strict_ears().len());
    match reduction::path_degeneracy(&g, limit) {
        Some(k) => {
            report.field("path_degeneracy", k);
            if k >= 2 {
                let seq = reduction::check(&g, k, false)?.sequence().clone();
                report.check("certificate_replays", reduction::check_certificate(&g, k, false, &seq.steps).is_ok());
            }
            if let DegeneracyVerdict::NotDegenerate { prefix, witness } = reduction::check(&g, k + 1, false)? {
                report.field("witness_order", witness.graph.order());
                report.check("witness_irreducible", witness_is_sound(&g, k + 1, &prefix.steps, &witness));
            }
        }
        None => {
            report.field("path_degeneracy", format!(">={limit}"));
            let seq = reduction::check(&g, limit, false)?.sequence().clone();
            report.check("certificate_replays", reduction::check_certificate(&g, limit, false, &seq.steps).is_ok());
        }
    }
    Ok(())
}

// The prefix replays to exactly the witness, which admits no reduction.
fn witness_is_sound(g: &Graph, p: usize, prefix: &[reduction::ReductionStep], witness: &reduction::Subgraph) -> bool {
    let replays = reduction::replay(g, p, false, prefix).map(|r| r.remaining == witness.vertices).unwrap_or(false);
    let irreducible = matches!(reduction::find_p_reduction(&witness.graph, p, false), Ok(None));
    replays && irreducible && !witness.is_empty()
}

fn check(
    report: &mut Report,
    args: &GraphArgs,
    p: usize,
    exact: bool,
    oracle_budget: Option<usize>,
    minimal: bool,
) -> Result<(), Error> {
    let g = graph_of(args)?;
    summarize(report, "check", args, &g);
    report.field("p", p);
    report.field("exact_ears", exact);
    let verdict = reduction::check(&g, p, exact)?;
    report.field("degenerate", verdict.is_degenerate());
    match &verdict {
        DegeneracyVerdict::Degenerate(seq) => {
            report.field("steps", seq.steps.len());
            report.field("ear_steps", seq.ear_steps().count());
            let lines = seq.to_lines();
            let parsed = reduction::parse_certificate(&lines)?;
            report.check("certificate_replays", reduction::check_certificate(&g, p, exact, &parsed).is_ok());
            report.attach("certificate", lines);
        }
        DegeneracyVerdict::NotDegenerate { prefix, witness } => {
            report.field("steps", prefix.steps.len());
            report.check("witness_irreducible", witness_is_sound(&g, p, &prefix.steps, witness));
            let shown = if minimal { reduction::minimal_irreducible_witness(&g, p)? } else { witness.clone() };
            report.field("witness_order", shown.graph.order());
            report.field("witness_size", shown.graph.size());
            report.field("witness_vertices", ids(&shown.vertices));
            if minimal {
                let edge_minimal = shown
                    .graph
                    .edges()
                    .all(|(u, v)| reduction::is_p_path_degenerate(&shown.graph.without_edge(u, v), p).map(|d| d.is_degenerate()).unwrap_or(false));
                report.check("witness_edge_minimal", edge_minimal);
            }
            report.attach("prefix", prefix.to_lines());
        }
    }
    if let Some(budget) = oracle_budget {
        let oracle = reduction::backtrack_degenerate(&g, p, budget)?;
        report.field("oracle_degenerate", oracle);
        report.check("oracle_agrees", oracle == verdict.is_degenerate());
    }
    Ok(())
}

fn color(report: &mut Report, args: &GraphArgs, r: usize, acyclic: bool, cap: usize) -> Result<(), Error> {
    let g = graph_of(args)?;
    summarize(report, if acyclic { "color-acyclic" } else { "color-arb" }, args, &g);
    report.field("r", r);
    let (c, threshold, budget) = if acyclic {
        (colorings::acyclic_edge_coloring(&g, r)?, r, if g.is_forest() { g.max_degree() } else { g.max_degree().max(r) })
    } else {
        (colorings::arboricity_coloring(&g, r)?, r + 1, if g.is_forest() { 1 } else { r + 1 })
    };
    report.field("colors", c.color_count());
    report.field("palette_bound", budget);
    report.check("color_count_within_bound", c.color_count() <= budget);
    if acyclic {
        report.check("proper", colorings::verify_proper(&g, &c)?);
    }
    report.check("cycle_rainbow", colorings::verify_cycle_rainbow(&g, &c, threshold, cap)?);
    report.attach("coloring", c.to_lines());
    Ok(())
}

fn order_profile(report: &mut Report, g: &Graph, pi: &LinearOrder, params: WcolBoundParams) {
    let mut good = true;
    let mut sizes = Vec::new();
    let mut targets = Vec::new();
    for x in 0..=params.r() {
        let s = wcol::wcol_under_order(g, pi, x);
        good &= wcol::fits_target(s, x, params).expect("x <= r");
        sizes.push(s);
        targets.push(format!("{:.6}", wcol::wcol_target(x, params).expect("x <= r")));
    }
    let bound = wcol::wcol_integer_bound(params);
    report.field("max_wreach", json!(sizes));
    report.field("target", json!(targets));
    report.field("wcol_bound", bound);
    report.check("good_order", good);
    report.check("wcol_within_bound", sizes[params.r()] <= bound);
}

fn wcol_order(report: &mut Report, args: &GraphArgs, r: usize, q: usize) -> Result<(), Error> {
    let g = graph_of(args)?;
    summarize(report, "wcol-order", args, &g);
    report.field("r", r);
    report.field("q", q);
    let params = WcolBoundParams::new(r, q)?;
    let pi = wcol::weak_order(&g, params)?;
    order_profile(report, &g, &pi, params);
    report.attach("order", pi.to_line());
    Ok(())
}

fn bound_fields(report: &mut Report, b: &BoundResult) {
    report.field("theorem", b.theorem.name());
    report.field("threshold", b.threshold);
    report.field("integer_girth_threshold", b.integer_girth_threshold);
}

fn bounds_report(report: &mut Report, cmd: &BoundsCommand) -> Result<(), Error> {
    report.field("command", "bounds");
    match cmd {
        BoundsCommand::Polynomial { a, b, p } => {
            report.field("kind", "polynomial");
            report.field("a", *a);
            report.field("b", *b);
            report.field("p", *p);
            let params = ExpansionParams::new(*a, *b)?;
            report.field("gamma", bounds::polynomial_gamma(params, *p)?);
            bound_fields(report, &bounds::girth_bound_polynomial(params, *p)?);
        }
        BoundsCommand::MinorClosed { d, p } => {
            report.field("kind", "minor-closed");
            report.field("d", *d);
            report.field("p", *p);
            bound_fields(report, &bounds::girth_bound_minor_closed(*d, *p)?);
        }
        BoundsCommand::Clique { k, p, gamma } => {
            report.field("kind", "clique");
            report.field("k", *k);
            report.field("p", *p);
            report.field("gamma", *gamma);
            bound_fields(report, &bounds::girth_bound_clique(*k, *p, *gamma)?);
        }
        BoundsCommand::Subexp { expansion, p, r_max } => {
            report.field("kind", "subexp");
            report.field("expansion", expansion.as_str());
            report.field("p", *p);
            let e: Expansion = expansion.parse()?;
            bound_fields(report, &bounds::girth_bound_subexponential(|r| e.eval(r), *p, *r_max)?);
        }
        BoundsCommand::LowerPoly { b, p, alpha } => {
            report.field("kind", "lower-poly");
            report.field("b", *b);
            report.field("p", *p);
            report.field("alpha", *alpha);
            report.field("girth", bounds::lower_bound_poly(*b, *p, *alpha)?);
        }
        BoundsCommand::Wcol { r, q } => {
            report.field("kind", "wcol");
            report.field("r", *r);
            report.field("q", *q);
            report.field("wcol_bound", bounds::wcol_girth_rule(*r, *q)?);
        }
        BoundsCommand::Lambert { t } => {
            report.field("kind", "lambert");
            report.field("t", *t);
            let w = bounds::lambert_w_minus1(*t)?;
            report.field("w", w);
            let residual = (w * w.exp() - t).abs();
            report.field("residual", residual);
            report.check("residual_small", residual <= 1e-12);
        }
        BoundsCommand::Beta { a, b } => {
            report.field("kind", "beta");
            report.field("A", *a);
            report.field("B", *b);
            report.field("beta", bounds::threshold_beta(*a, *b)?);
        }
    }
    Ok(())
}

fn verify(report: &mut Report, cmd: &VerifyCommand) -> Result<(), Error> {
    match cmd {
        VerifyCommand::Coloring { graph, coloring, threshold, proper, cap } => {
            let g = graph_of(graph)?;
            summarize(report, "verify-coloring", graph, &g);
            let c = EdgeColoring::parse(&read_file(coloring)?)?;
            report.field("threshold", *threshold);
            report.field("colors", c.color_count());
            match colorings::find_poor_cycle(&g, &c, *threshold, cap.cycle_cap) {
                Ok(bad) => {
                    if let Some(cycle) = &bad {
                        report.field("poor_cycle", ids(cycle));
                    }
                    report.check("cycle_rainbow", bad.is_none());
                }
                Err(colorings::ColoringError::Graph(e @ GraphError::TooManyCycles { .. })) => return Err(e.into()),
                Err(e) => {
                    report.field("error", e.to_string());
                    report.check("complete", false);
                    return Ok(());
                }
            }
            if *proper {
                report.check("proper", colorings::verify_proper(&g, &c)?);
            }
        }
        VerifyCommand::Order { graph, order, r, q } => {
            let g = graph_of(graph)?;
            summarize(report, "verify-order", graph, &g);
            let pi = LinearOrder::parse(&read_file(order)?)?;
            if pi.len() != g.order() {
                report.field("error", format!("order lists {} vertices, graph has {}", pi.len(), g.order()));
                report.check("order_matches_graph", false);
                return Ok(());
            }
            report.field("r", *r);
            report.field("q", *q);
            order_profile(report, &g, &pi, WcolBoundParams::new(*r, *q)?);
        }
        VerifyCommand::Certificate { graph, certificate, p, exact_ears } => {
            let g = graph_of(graph)?;
            summarize(report, "verify-certificate", graph, &g);
            report.field("p", *p);
            report.field("exact_ears", *exact_ears);
            let steps = reduction::parse_certificate(&read_file(certificate)?)?;
            report.field("steps", steps.len());
            let outcome = reduction::check_certificate(&g, *p, *exact_ears, &steps);
            if let Err(e) = &outcome {
                report.field("error", e.to_string());
            }
            report.check("certificate_replays", outcome.is_ok());
        }
    }
    Ok(())
}

/// Reads `0`, `1/2`, `1.5`, `3` as twice the half-integer.
pub fn parse_half_integer(s: &str) -> Result<usize, Error> {
    let bad = || Error::Usage(format!("`{s}` is not a non-negative half-integer"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let (num, den): (usize, usize) = (num.trim().parse().map_err(|_| bad())?, den.trim().parse().map_err(|_| bad())?);
        return match den {
            1 => Ok(2 * num),
            2 => Ok(num),
            _ => Err(bad()),
        };
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let whole: usize = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| bad())? };
        let frac = frac.trim_end_matches('0');
        return match frac {
            "" => Ok(2 * whole),
            "5" => Ok(2 * whole + 1),
            _ => Err(bad()),
        };
    }
    s.parse::<usize>().map(|n| 2 * n).map_err(|_| bad())
}

fn density_report(report: &mut Report, args: &GraphArgs, nabla: Option<&str>, cap: usize) -> Result<(), Error> {
    let g = graph_of(args)?;
    summarize(report, "density", args, &g);
    if g.order() == 0 {
        return Ok(());
    }
    let (d, witness) = density::densest_subgraph(&g)?;
    report.field("max_density", d.to_string());
    report.field("densest_vertices", ids(&witness));
    let inside: Vec<usize> = witness.clone();
    let h = g.induced(&inside);
    report.check("witness_attains_density", density::DensityValue::new(h.size() as u64, h.order() as u64) == d);
    if g.order() <= 16 {
        report.check("bruteforce_agrees", density::max_subgraph_density_bruteforce(&g)? == d);
    }
    if let Some(r) = nabla {
        let twice_r = parse_half_integer(r)?;
        report.field("nabla_r", r);
        let value = density::nabla_r_bruteforce(&g, twice_r, cap)?;
        report.field("nabla", value.to_string());
        report.check("nabla_at_least_density", value >= d);
    }
    Ok(())
}

/// Error record printed on failure.
pub fn error_record(e: &Error) -> String {
    let kind = match e {
        Error::Graph(_) => "graph",
        Error::Generator(_) => "generator",
        Error::Reduction(_) => "reduction",
        Error::Certificate(_) => "certificate",
        Error::Coloring(_) => "coloring",
        Error::Wcol(_) => "wcol",
        Error::Bounds(_) => "bounds",
        Error::Density(_) => "density",
        Error::Format(_) => "format",
        Error::Io { .. } => "io",
        Error::Usage(_) => "usage",
    };
    json!({ "error": e.to_string(), "kind": kind }).to_string()
}

/// Parses `args`, runs, prints, and returns the exit status: 0 when every
/// check passed, 1 when some check failed, 2 on errors.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("{}", error_record(&e));
            2
        }
    }
}
