//! `twinedge`: construct, verify and analyze improper twin edge colorings.
//!
//! Exit codes: 0 for success or "yes", 1 for "no" (decision commands and
//! failed verification), 2 for input or limit errors.

mod families;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use twinedge::deciders::{
    chordal_analysis, cocomp_coloring_types, decide_bounded_degree, decide_cochordal, decide_cocomp,
    decide_split, recognize_split, DeciderError,
};
use twinedge::gadgets::{build_h, degree_bound, reduce_degree, sat_to_allodd_instance};
use twinedge::graph::connected_components;
use twinedge::io;
use twinedge::oracle::{all_odd_all_optimal, chi_it_bruteforce, chi_it_predict, chromatic_number, Limits};
use twinedge::{construct, monotone_extend, verify_twin, Graph, TwinVerdict, VertexColoring};

#[derive(Parser)]
#[command(name = "twinedge", version, about = "Improper twin edge colorings")]
struct Cli {
    /// Print one JSON object instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a twin edge coloring from a proper vertex coloring.
    Construct {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(short = 'c', long = "coloring")]
        coloring: PathBuf,
        /// Edge coloring output file (standard output if omitted).
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// Use this many colors (at least the palette of the input coloring).
        #[arg(short = 't', long = "colors")]
        colors: Option<usize>,
    },
    /// Check that an edge coloring induces a proper vertex coloring.
    Verify {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(short = 'e', long = "edge-coloring")]
        edges: PathBuf,
    },
    /// Exact values by exhaustive search.
    Exact {
        #[arg(value_enum)]
        quantity: Quantity,
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        /// Largest vertex count to search.
        #[arg(long)]
        limit: Option<usize>,
        /// For chi-it: use the parity criterion instead of searching edge colorings.
        #[arg(long)]
        predict: bool,
    },
    /// Decide whether every optimal k-coloring has only odd classes.
    Decide {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, value_enum, default_value_t = Class::Auto)]
        class: Class,
        /// Co-comparability order file, for --class cocomp.
        #[arg(long)]
        order: Option<PathBuf>,
        /// Also report the twin chromatic index.
        #[arg(long)]
        twin: bool,
        /// Vertex limit for the exhaustive fallback.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        what: Generator,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    Chi,
    ChiIt,
    AllOdd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Class {
    Auto,
    Bounded,
    Split,
    Cochordal,
    Cocomp,
    Brute,
}

impl Class {
    fn name(self) -> &'static str {
        match self {
            Class::Auto => "auto",
            Class::Bounded => "bounded",
            Class::Split => "split",
            Class::Cochordal => "cochordal",
            Class::Cocomp => "cocomp",
            Class::Brute => "brute",
        }
    }
}

#[derive(Subcommand)]
enum Generator {
    /// Reduction graph of a 3-CNF formula.
    Sat {
        #[arg(short = 'f', long = "formula")]
        formula: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// The bounded-degree gadget H(p, l).
    Hgadget {
        #[arg(short = 'p')]
        p: usize,
        #[arg(short = 'l')]
        ell: usize,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Replace high-degree vertices by H gadgets.
    ReduceDegree {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Named graphs with a proper coloring: complete N, cycle N, path N,
    /// petersen, k4k2.
    Family {
        name: String,
        args: Vec<usize>,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
}

/// Outcome of a successful run.
enum Outcome {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let out = Printer { json: cli.json };
    match &cli.command {
        Command::Construct {
            graph,
            coloring,
            output,
            colors,
        } => cmd_construct(&out, graph, coloring, output.as_deref(), *colors),
        Command::Verify { graph, edges } => cmd_verify(&out, graph, edges),
        Command::Exact {
            quantity,
            graph,
            limit,
            predict,
        } => cmd_exact(&out, *quantity, graph, limits(*limit), *predict),
        Command::Decide {
            graph,
            k,
            class,
            order,
            twin,
            limit,
        } => cmd_decide(&out, graph, *k, *class, order.as_deref(), *twin, limits(*limit)),
        Command::Gen { what } => cmd_gen(&out, what),
    }
}

fn limits(limit: Option<usize>) -> Limits {
    limit.map_or_else(Limits::default, Limits::with_max_vertices)
}

/// Either key=value lines or one JSON object.
struct Printer {
    json: bool,
}

impl Printer {
    fn emit(&self, value: serde_json::Value, lines: &[String]) {
        if self.json {
            to_stdout(&format!("{value}\n"));
        } else {
            to_stdout(&lines.iter().map(|l| format!("{l}\n")).collect::<String>());
        }
    }
}

/// Writes to stdout; a reader that has gone away (closed pipe) is not an error.
fn to_stdout(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    io::parse_dimacs(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn outcome(b: bool) -> Outcome {
    if b {
        Outcome::Yes
    } else {
        Outcome::No
    }
}

// ---------------------------------------------------------------------------

fn cmd_construct(
    out: &Printer,
    graph: &Path,
    coloring: &Path,
    output: Option<&Path>,
    colors: Option<usize>,
) -> Result<Outcome> {
    let g = load_graph(graph)?;
    let f = io::parse_vertex_coloring(&read(coloring)?, g.n())
        .with_context(|| format!("in {}", coloring.display()))?;
    let (s, report) = match colors {
        Some(t) => monotone_extend(&g, &f, t)?,
        None => construct(&g, &f)?,
    };
    let text = io::write_edge_coloring(&g, &s);
    match output {
        Some(path) => write(path, &text)?,
        None => to_stdout(&text),
    }
    let components: Vec<_> = report
        .per_component
        .iter()
        .map(|c| {
            json!({
                "component": c.component + 1,
                "first_vertex": c.first_vertex + 1,
                "size": c.size,
                "strategy": c.strategy.tag(),
            })
        })
        .collect();
    let mut lines = vec![
        format!("modulus={}", s.modulus()),
        format!("input_palette={}", f.k()),
        format!("components={}", report.per_component.len()),
    ];
    lines.extend(report.per_component.iter().map(|c| {
        format!(
            "component={} first_vertex={} size={} strategy={}",
            c.component + 1,
            c.first_vertex + 1,
            c.size,
            c.strategy
        )
    }));
    if let Some(path) = output {
        lines.push(format!("output={}", path.display()));
    }
    let value = json!({
        "modulus": s.modulus(),
        "input_palette": f.k(),
        "components": components,
        "output": output.map(|p| p.display().to_string()),
    });
    // With the coloring on standard output, the summary goes to standard
    // error so the output stays a valid edge coloring file.
    if output.is_none() && !out.json {
        for line in &lines {
            eprintln!("{line}");
        }
    } else if output.is_some() {
        out.emit(value, &lines);
    } else {
        eprintln!("{value}");
    }
    Ok(Outcome::Yes)
}

fn cmd_verify(out: &Printer, graph: &Path, edges: &Path) -> Result<Outcome> {
    let g = load_graph(graph)?;
    let s = io::parse_edge_coloring(&read(edges)?, &g).with_context(|| format!("in {}", edges.display()))?;
    match verify_twin(&g, &s)? {
        TwinVerdict::Valid => {
            out.emit(
                json!({"verdict": "valid", "modulus": s.modulus()}),
                &[format!("verdict=valid modulus={}", s.modulus())],
            );
            Ok(Outcome::Yes)
        }
        TwinVerdict::Conflict { u, v, color } => {
            out.emit(
                json!({"verdict": "conflict", "modulus": s.modulus(), "u": u + 1, "v": v + 1, "color": color}),
                &[format!(
                    "verdict=conflict u={} v={} color={color} modulus={}",
                    u + 1,
                    v + 1,
                    s.modulus()
                )],
            );
            Ok(Outcome::No)
        }
    }
}

fn cmd_exact(
    out: &Printer,
    quantity: Quantity,
    graph: &Path,
    limits: Limits,
    predict: bool,
) -> Result<Outcome> {
    let g = load_graph(graph)?;
    match quantity {
        Quantity::Chi => {
            let chi = chromatic_number(&g, &limits)?;
            out.emit(json!({ "chi": chi }), &[format!("chi={chi}")]);
            Ok(Outcome::Yes)
        }
        Quantity::ChiIt => {
            let (value, method) = if predict {
                (chi_it_predict(&g, &limits)?, "predict")
            } else {
                (chi_it_bruteforce(&g, &limits)?, "search")
            };
            out.emit(
                json!({ "chi_it": value, "method": method }),
                &[format!("chi_it={value} method={method}")],
            );
            Ok(Outcome::Yes)
        }
        Quantity::AllOdd => {
            let verdict = all_odd_all_optimal(&g, &limits)?;
            out.emit(
                json!({ "all_odd": verdict }),
                &[format!("all_odd={}", yes_no(verdict))],
            );
            Ok(outcome(verdict))
        }
    }
}

// ---------------------------------------------------------------------------

struct DecideInput<'a> {
    g: &'a Graph,
    k: usize,
    order: Option<&'a [usize]>,
    limits: Limits,
}

/// The all-odd verdict for `class`, after checking that the graph is in the
/// class and that `k` is its chromatic number.
fn decide_in(class: Class, input: &DecideInput) -> Result<bool> {
    let DecideInput { g, k, order, limits } = *input;
    let mismatch = |chi: usize| anyhow::anyhow!("k = {k} but the chromatic number is {chi}");
    match class {
        Class::Auto => unreachable!("resolved before dispatch"),
        Class::Bounded => Ok(decide_bounded_degree(g, k)?),
        Class::Split => {
            let d = recognize_split(g)?;
            if d.clique.len() != k {
                return Err(mismatch(d.clique.len()));
            }
            Ok(decide_split(g)?)
        }
        Class::Cochordal => {
            let chi = match chordal_analysis(&g.complement()) {
                Ok(a) => a.max_independent_set.len(),
                Err(DeciderError::NotChordal(c)) => return Err(DeciderError::NotCochordal(c).into()),
                Err(e) => return Err(e.into()),
            };
            if chi != k {
                return Err(mismatch(chi));
            }
            Ok(decide_cochordal(g)?)
        }
        Class::Cocomp => {
            let Some(order) = order else {
                bail!("--class cocomp needs --order");
            };
            Ok(decide_cocomp(g, order, k)?)
        }
        Class::Brute => {
            let chi = chromatic_number(g, &limits)?;
            if chi != k {
                return Err(mismatch(chi));
            }
            Ok(all_odd_all_optimal(g, &limits)?)
        }
    }
}

/// First class, in the order bounded, split, co-chordal, co-comparability
/// (with an order), whose recognizer accepts `g`; otherwise brute force.
fn resolve_class(g: &Graph, k: usize, order: Option<&[usize]>) -> Class {
    if g.n() > 0 && g.max_degree() < k {
        return Class::Bounded;
    }
    if recognize_split(g).is_ok() {
        return Class::Split;
    }
    if chordal_analysis(&g.complement()).is_ok() {
        return Class::Cochordal;
    }
    if let Some(order) = order {
        if twinedge::deciders::verify_cocomp_order(g, order).is_ok() {
            return Class::Cocomp;
        }
    }
    Class::Brute
}

/// Per component: `Some(all-odd verdict)` when its chromatic number is `k`,
/// `None` when it is smaller.
fn component_verdict(class: Class, input: &DecideInput) -> Result<Option<bool>> {
    let DecideInput { g, k, order, limits } = *input;
    match class {
        Class::Bounded => {
            let clique = g.n() == k && (0..g.n()).all(|v| g.degree(v) + 1 == k);
            let odd_cycle = k == 3 && g.n() % 2 == 1 && (0..g.n()).all(|v| g.degree(v) == 2);
            Ok((clique || odd_cycle).then_some(clique))
        }
        Class::Split => {
            let d = recognize_split(g)?;
            Ok(if d.clique.len() == k {
                Some(decide_split(g)?)
            } else {
                None
            })
        }
        Class::Cochordal => {
            let chi = chordal_analysis(&g.complement())?.max_independent_set.len();
            Ok(if chi == k {
                Some(decide_cochordal(g)?)
            } else {
                None
            })
        }
        Class::Cocomp => {
            let order = order.expect("checked by the whole-graph decision");
            match cocomp_coloring_types(g, order, k) {
                Ok(types) => Ok(Some(types.iter().all(|t| t.all_odd()))),
                Err(DeciderError::PreconditionViolated(_)) => Ok(None),
                Err(e) => Err(e.into()),
            }
        }
        Class::Brute => {
            let chi = chromatic_number(g, &limits)?;
            Ok(if chi == k {
                Some(all_odd_all_optimal(g, &limits)?)
            } else {
                None
            })
        }
        Class::Auto => unreachable!("resolved before dispatch"),
    }
}

fn cmd_decide(
    out: &Printer,
    graph: &Path,
    k: usize,
    class: Class,
    order: Option<&Path>,
    twin: bool,
    limits: Limits,
) -> Result<Outcome> {
    let g = load_graph(graph)?;
    let order = match order {
        Some(path) => {
            Some(io::parse_order(&read(path)?, g.n()).with_context(|| format!("in {}", path.display()))?)
        }
        None => None,
    };
    let class = match class {
        Class::Auto => resolve_class(&g, k, order.as_deref()),
        c => c,
    };
    let input = DecideInput {
        g: &g,
        k,
        order: order.as_deref(),
        limits,
    };
    let verdict = decide_in(class, &input)?;
    let mut value = json!({ "verdict": yes_no(verdict), "class": class.name(), "k": k });
    let mut line = format!("verdict={} class={} k={k}", yes_no(verdict), class.name());
    if twin {
        // chi'_it = k + 1 iff k = 2 (mod 4) and some component of chromatic
        // number k has only all-odd optimal colorings.
        let mut promoted = false;
        if k % 4 == 2 {
            for comp in connected_components(&g) {
                let h = g.induced_subgraph(&comp);
                let sub_order: Option<Vec<usize>> = order.as_ref().map(|o| {
                    let mut index = vec![usize::MAX; g.n()];
                    for (i, &v) in comp.iter().enumerate() {
                        index[v] = i;
                    }
                    o.iter()
                        .filter(|&&v| index[v] != usize::MAX)
                        .map(|&v| index[v])
                        .collect()
                });
                let sub = DecideInput {
                    g: &h,
                    k,
                    order: sub_order.as_deref(),
                    limits,
                };
                if component_verdict(class, &sub)? == Some(true) {
                    promoted = true;
                    break;
                }
            }
        }
        let chi_it = if promoted { k + 1 } else { k.max(2) };
        value["chi_it"] = json!(chi_it);
        line.push_str(&format!(" chi_it={chi_it}"));
    }
    out.emit(value, &[line]);
    Ok(outcome(verdict))
}

// ---------------------------------------------------------------------------

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))
}

struct Artifacts<'a> {
    graph: &'a Graph,
    coloring: Option<&'a VertexColoring>,
    roles: Option<String>,
}

fn write_artifacts(
    out: &Printer,
    dir: &Path,
    a: Artifacts,
    extra: &[(&str, serde_json::Value)],
) -> Result<()> {
    ensure_dir(dir)?;
    let graph_path = dir.join("graph.dimacs");
    write(&graph_path, &io::write_dimacs(a.graph))?;
    let mut value = json!({
        "vertices": a.graph.n(),
        "edges": a.graph.m(),
        "max_degree": if a.graph.n() == 0 { 0 } else { a.graph.max_degree() },
        "graph": graph_path.display().to_string(),
    });
    let mut lines = vec![
        format!("vertices={}", a.graph.n()),
        format!("edges={}", a.graph.m()),
        format!("max_degree={}", value["max_degree"]),
        format!("graph={}", graph_path.display()),
    ];
    if let Some(c) = a.coloring {
        let path = dir.join("coloring.txt");
        write(&path, &io::write_vertex_coloring(c))?;
        value["coloring"] = json!(path.display().to_string());
        lines.push(format!("coloring={}", path.display()));
    }
    if let Some(roles) = a.roles {
        let path = dir.join("roles.txt");
        write(&path, &roles)?;
        value["roles"] = json!(path.display().to_string());
        lines.push(format!("roles={}", path.display()));
    }
    for (key, v) in extra {
        value[*key] = v.clone();
        let shown = match v {
            serde_json::Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        lines.push(format!("{key}={shown}"));
    }
    out.emit(value, &lines);
    Ok(())
}

fn cmd_gen(out: &Printer, what: &Generator) -> Result<Outcome> {
    match what {
        Generator::Sat { formula, k, out: dir } => {
            let f = io::parse_cnf(&read(formula)?).with_context(|| format!("in {}", formula.display()))?;
            let inst = sat_to_allodd_instance(&f, *k)?;
            let p = &inst.preprocessing;
            write_artifacts(
                out,
                dir,
                Artifacts {
                    graph: &inst.graph,
                    coloring: Some(&inst.witness_coloring),
                    roles: Some(io::write_roles(&inst.roles)),
                },
                &[
                    ("k", json!(inst.k)),
                    ("variables", json!(inst.formula.num_vars)),
                    ("clauses", json!(inst.formula.clauses.len())),
                    ("added_variable", json!(p.added_variable)),
                    ("doubled", json!(p.doubled)),
                ],
            )?;
        }
        Generator::Hgadget { p, ell, k, out: dir } => {
            let h = build_h(*p, *ell, *k)?;
            let mut colors = vec![k - 1; h.graph.n()];
            let mut roles = vec![String::new(); h.graph.n()];
            for (i, clique) in h.cliques.iter().enumerate() {
                for (c, &v) in clique.iter().enumerate() {
                    colors[v] = c;
                    roles[v] = format!("clique({})", i + 1);
                }
            }
            for (t, &v) in h.s.iter().enumerate() {
                roles[v] = format!("s({},{})", t / ell + 1, t % ell + 1);
            }
            let coloring = VertexColoring::new(*k, colors)?;
            write_artifacts(
                out,
                dir,
                Artifacts {
                    graph: &h.graph,
                    coloring: Some(&coloring),
                    roles: Some(io::write_roles(&roles)),
                },
                &[("s", json!(h.s.len()))],
            )?;
        }
        Generator::ReduceDegree { graph, k, out: dir } => {
            let g = load_graph(graph)?;
            let r = reduce_degree(&g, *k)?;
            write_artifacts(
                out,
                dir,
                Artifacts {
                    graph: &r,
                    coloring: None,
                    roles: None,
                },
                &[("bound", json!(degree_bound(*k)))],
            )?;
        }
        Generator::Family { name, args, out: dir } => {
            let (g, c) = families::build(name, args)?;
            write_artifacts(
                out,
                dir,
                Artifacts {
                    graph: &g,
                    coloring: Some(&c),
                    roles: None,
                },
                &[("family", json!(name))],
            )?;
        }
    }
    Ok(Outcome::Yes)
}
