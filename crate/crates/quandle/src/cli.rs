//! The `quandle` command line.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use quandle_core::perm::{format_element_cycles, parse_element_cycles};
use quandle_core::{
    automorphism_group, cocycle_invariant, endomorphisms, good_involutions, hom_quandle, homs, inner_group,
    is_isomorphic, quandle_polynomial, quiver, quiver_dot, symmetric_cohomology, synthesize_link, theta_cocycle,
    AbelianGroupSummary, CochainComplexSlice, Coefficients, LinkingGraph, MapGroup, SearchLimits,
    SymmetricQuandle,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::formats::{load_diagram, load_linking_graph, load_maps, load_quandle, LinkingGraphJson, QuandleJson};

/// Environment variable overriding the node cap of every enumeration.
pub const SEARCH_CAP_VAR: &str = "QUANDLE_SEARCH_CAP";

/// Finite quandles, their invariants, and quandle invariants of links.
///
/// QUANDLE arguments are JSON files ({"order": m, "table": [[...]]}) or
/// constructor expressions: "P n (cycles)", "T m", "R m".
#[derive(Debug, Parser)]
#[command(name = "quandle", version)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Cayley table.
    Show { quandle: String },
    /// Check the quandle axioms.
    Verify { quandle: String },
    /// Decide whether two quandles are isomorphic.
    Iso { first: String, second: String },
    /// Automorphism group.
    Aut { quandle: String },
    /// Inner automorphism group.
    Inn { quandle: String },
    /// All homomorphisms between two quandles.
    Homs { source: String, target: String },
    /// The Hom quandle Hom(X, A) for an abelian target A.
    Homquandle {
        source: String,
        target: String,
        /// Write the Hom quandle as quandle JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quandle polynomial.
    Poly { quandle: String },
    /// Good involutions, in cycle notation over the elements.
    Goodinv { quandle: String },
    /// Quandle or symmetric quandle cohomology.
    Cohomology(CohomologyArgs),
    /// Colorings of a link diagram.
    Color { diagram: PathBuf, quandle: String },
    /// Pairwise linking numbers of a link diagram.
    Lk { diagram: PathBuf },
    /// Build a link diagram with a given linking graph.
    Synth(SynthArgs),
    /// Quandle quiver of a link diagram.
    Quiver {
        diagram: PathBuf,
        quandle: String,
        /// "all" for every endomorphism, or a JSON file of image arrays.
        #[arg(long, default_value = "all")]
        endos: String,
        /// Write Graphviz source here instead of printing it.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Cocycle invariant for the cocycle t^(χ(0,1) + ... + χ(0,n)).
    Phi {
        diagram: PathBuf,
        quandle: String,
        #[arg(long)]
        theta: usize,
    },
}

#[derive(Debug, Args)]
pub struct CohomologyArgs {
    quandle: String,
    #[arg(long, default_value_t = 2)]
    degree: usize,
    /// Z, Q or Zp for a prime p.
    #[arg(long, default_value = "Z")]
    coeff: Coefficients,
    /// Good involution in cycle notation over the elements, e.g. "(1 2)".
    #[arg(long)]
    rho: Option<String>,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    /// Linking graph JSON ({"m": m, "weights": [[...]]}).
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    graph: Option<PathBuf>,
    /// Use a random linking graph on this many vertices.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 3)]
    max_weight: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the diagram here instead of printing it.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn search_limits() -> Result<SearchLimits> {
    match std::env::var(SEARCH_CAP_VAR) {
        Ok(v) => {
            let node_cap = v.trim().parse().with_context(|| format!("{SEARCH_CAP_VAR}={v:?} is not a number"))?;
            Ok(SearchLimits { node_cap })
        }
        Err(_) => Ok(SearchLimits::default()),
    }
}

/// What a command prints: human text and the equivalent JSON.
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Self { text: text.into(), json }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
            s.push('\n');
            s
        } else {
            let mut s = self.text.clone();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    }
}

fn table_text(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn tuple_text(v: &[usize]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn group_output(g: &MapGroup) -> Output {
    let mut text = format!(
        "order {}\nabelian: {}\ncyclic: {}",
        g.order(),
        yes_no(g.table.is_abelian()),
        yes_no(g.table.is_cyclic())
    );
    for f in &g.elements {
        text.push('\n');
        text.push_str(&format_element_cycles(f.image()));
    }
    let elements: Vec<&[usize]> = g.elements.iter().map(|f| f.image()).collect();
    Output::new(
        text,
        json!({
            "order": g.order(),
            "abelian": g.table.is_abelian(),
            "cyclic": g.table.is_cyclic(),
            "elements": elements,
        }),
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn summary_json(h: &AbelianGroupSummary, coeff: Coefficients) -> Value {
    let torsion: Vec<String> = h.torsion().iter().map(|d| d.to_string()).collect();
    json!({
        "coefficients": coeff.to_string(),
        "rank": h.rank(),
        "torsion": torsion,
        "group": h.to_string(),
    })
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn random_graph(m: usize, max_weight: i64, seed: u64) -> LinkingGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            edges.push((i, j, rng.random_range(-max_weight..=max_weight)));
        }
    }
    LinkingGraph::from_edges(m, &edges)
}

pub fn execute(command: &Command) -> Result<Output> {
    let limits = search_limits()?;
    Ok(match command {
        Command::Show { quandle } => {
            let q = load_quandle(quandle)?;
            Output::new(table_text(&q.rows()), serde_json::to_value(QuandleJson::from_quandle(&q))?)
        }
        Command::Verify { quandle } => {
            let q = load_quandle(quandle)?;
            Output::new(format!("quandle: OK (order {})", q.order()), json!({ "ok": true, "order": q.order() }))
        }
        Command::Iso { first, second } => {
            let (a, b) = (load_quandle(first)?, load_quandle(second)?);
            match is_isomorphic(&a, &b, limits)? {
                Some(f) => Output::new(
                    format!("isomorphic: {}", tuple_text(f.image())),
                    json!({ "isomorphic": true, "map": f.image() }),
                ),
                None => Output::new("not isomorphic", json!({ "isomorphic": false, "map": null })),
            }
        }
        Command::Aut { quandle } => group_output(&automorphism_group(&load_quandle(quandle)?, limits)?),
        Command::Inn { quandle } => group_output(&inner_group(&load_quandle(quandle)?)),
        Command::Homs { source, target } => {
            let found = homs(&load_quandle(source)?, &load_quandle(target)?, limits)?;
            let mut text = format!("{} homomorphisms", found.len());
            for f in &found {
                text.push('\n');
                text.push_str(&tuple_text(f.image()));
            }
            let maps: Vec<&[usize]> = found.iter().map(|f| f.image()).collect();
            Output::new(text, json!({ "count": found.len(), "maps": maps }))
        }
        Command::Homquandle { source, target, out } => {
            let h = hom_quandle(&load_quandle(source)?, &load_quandle(target)?, limits)?;
            let rows = h.quandle.rows();
            if let Some(path) = out {
                let body = serde_json::to_string_pretty(&QuandleJson::from_quandle(&h.quandle))?;
                write_file(path, &(body + "\n"))?;
            }
            let mut text = format!("order {}", h.quandle.order());
            for (k, f) in h.labels.iter().enumerate() {
                text.push_str(&format!("\n{k} = {}", tuple_text(f.image())));
            }
            text.push('\n');
            text.push_str(&table_text(&rows));
            let labels: Vec<&[usize]> = h.labels.iter().map(|f| f.image()).collect();
            Output::new(text, json!({ "order": h.quandle.order(), "table": rows, "labels": labels }))
        }
        Command::Poly { quandle } => {
            let p = quandle_polynomial(&load_quandle(quandle)?);
            let terms: Vec<[i64; 3]> = p.terms().iter().map(|&(s, t, c)| [s as i64, t as i64, c]).collect();
            Output::new(p.to_string(), json!({ "polynomial": p.to_string(), "terms": terms }))
        }
        Command::Goodinv { quandle } => {
            let found = good_involutions(&load_quandle(quandle)?);
            let text = if found.is_empty() {
                String::from("no good involutions")
            } else {
                found.iter().map(|s| format_element_cycles(s.rho())).collect::<Vec<_>>().join("\n")
            };
            let maps: Vec<&[usize]> = found.iter().map(|s| s.rho()).collect();
            Output::new(text, json!({ "involutions": maps }))
        }
        Command::Cohomology(args) => {
            let q = load_quandle(&args.quandle)?;
            let h = match &args.rho {
                Some(cycles) => {
                    let rho = parse_element_cycles(cycles, q.order())?;
                    let sq = SymmetricQuandle::new(q, rho)?;
                    symmetric_cohomology(&sq, args.degree, args.coeff)?
                }
                None => CochainComplexSlice::new(&q, args.degree)?.cohomology(args.coeff)?,
            };
            Output::new(h.to_string(), summary_json(&h, args.coeff))
        }
        Command::Color { diagram, quandle } => {
            let d = load_diagram(diagram)?;
            let q = load_quandle(quandle)?;
            let found = d.colorings(&q, limits)?;
            let mut text = format!("{} colorings", found.len());
            let mut list = Vec::new();
            for c in &found {
                let base = c.base_colors(&d);
                text.push_str(&format!("\n{} arcs {}", tuple_text(&base), tuple_text(c.colors())));
                list.push(json!({ "base": base, "arcs": c.colors() }));
            }
            Output::new(text, json!({ "count": found.len(), "colorings": list }))
        }
        Command::Lk { diagram } => {
            let g = load_diagram(diagram)?.linking_graph()?;
            let rows: Vec<String> = g
                .weights()
                .iter()
                .map(|r| r.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" "))
                .collect();
            Output::new(rows.join("\n"), serde_json::to_value(LinkingGraphJson::from_graph(&g))?)
        }
        Command::Synth(args) => {
            let g = match (&args.graph, args.random) {
                (Some(path), _) => load_linking_graph(path)?,
                (None, Some(m)) => {
                    if args.max_weight < 0 {
                        bail!("--max-weight must be nonnegative");
                    }
                    random_graph(m, args.max_weight, args.seed)
                }
                (None, None) => bail!("give a linking graph file or --random"),
            };
            let d = synthesize_link(&g);
            let lnk = d.to_lnk();
            let text = match &args.out {
                Some(path) => {
                    write_file(path, &lnk)?;
                    format!(
                        "wrote {} ({} crossings, {} components)",
                        path.display(),
                        d.crossings().len(),
                        d.component_count()
                    )
                }
                None => lnk.clone(),
            };
            let graph = LinkingGraphJson::from_graph(&g);
            Output::new(text, json!({ "lnk": lnk, "m": graph.m, "weights": graph.weights }))
        }
        Command::Quiver { diagram, quandle, endos, dot } => {
            let d = load_diagram(diagram)?;
            let q = load_quandle(quandle)?;
            let maps = if endos == "all" { endomorphisms(&q, limits)? } else { load_maps(Path::new(endos), q.order())? };
            let quiv = quiver(&d, &q, &maps, limits)?;
            let source = quiver_dot(&quiv);
            let text = match dot {
                Some(path) => {
                    write_file(path, &source)?;
                    format!("{} vertices, {} edges", quiv.vertex_count(), quiv.edge_count())
                }
                None => source,
            };
            Output::new(text, json!({ "vertices": quiv.labels(), "edges": quiv.edges() }))
        }
        Command::Phi { diagram, quandle, theta } => {
            let d = load_diagram(diagram)?;
            let q = load_quandle(quandle)?;
            if q.order() != theta + 1 {
                bail!("--theta {theta} needs a quandle of order {}, got {}", theta + 1, q.order());
            }
            let value = cocycle_invariant(&d, &q, &theta_cocycle(*theta), limits)?;
            Output::new(value.to_string(), json!({ "value": value.to_string(), "terms": value.terms() }))
        }
    })
}

/// Parses arguments, runs the command and prints its output; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli.command) {
        Ok(out) => {
            print!("{}", out.render(cli.json));
            0
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    }
}
