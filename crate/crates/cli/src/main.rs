use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use simint::construct::{
    construct_3partite, construct_bipartite, construct_cycle, construct_from_ecc, construct_from_edges,
    construct_from_path_decomposition,
};
use simint::cover::{ecc_exact, ecc_greedy, parse_cover, write_cover};
use simint::decomposition::{parse_decomposition, write_decomposition};
use simint::graph::{parse_graph, parse_weights};
use simint::oracle::{brute_force_with, domination_number, OracleCaps, Problem};
use simint::params::{
    linear_mim_exact, lmim_witness, path_alpha_exact, path_decomposition_from_rep, pathwidth_exact, si_decide,
    si_exact, thinness_witness,
};
use simint::reduce::{
    coloring_gadget, misp_to_idsp_gadget, parse_disjoint_paths, parse_misp, preprocess_degree_one,
    solve_disjoint_paths, solve_misp,
};
use simint::selftest::{run_all, run_criterion, DEFAULT_SEED};
use simint::simrep::{read_rep, verify_representation, write_rep};
use simint::solve::{dominating_set_fpt, enumerate_maximal_cliques, independent_set_fpt, max_weight_clique};
use simint::{Error, Graph, SimRep};

#[derive(Parser)]
#[command(name = "simint", version, about = "Simultaneous interval representations of graphs")]
struct Cli {
    /// `text` prints witnesses before the summary line, `machine` only the summary.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    /// Worker threads for the parallel searches; output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Vertex cap for the exhaustive subset oracles.
    #[arg(long, global = true)]
    subset_cap: Option<usize>,
    #[arg(long, global = true)]
    chromatic_cap: Option<usize>,
    #[arg(long, global = true)]
    matching_cap: Option<usize>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Verb {
    /// Build a representation of a graph.
    Construct {
        #[arg(long, value_enum)]
        method: Method,
        /// Edge-list file; not used by `3partite` and `cycle`.
        graph: Option<PathBuf>,
        /// Edge clique cover for `ecc`; the greedy cover when omitted.
        #[arg(long)]
        cover: Option<PathBuf>,
        /// Path decomposition for `pathdecomp`; an optimal one when omitted.
        #[arg(long)]
        decomposition: Option<PathBuf>,
        /// Part sizes for `3partite`, as `a,b,c`.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Cycle length for `cycle`.
        #[arg(long)]
        n: Option<usize>,
        /// Write the representation here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a representation file against its graph, or against `--graph`.
    Verify {
        rep: PathBuf,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Exact simultaneous interval number, or a decision for one `d`.
    Si {
        #[arg(long, conflicts_with = "decide", required_unless_present = "decide")]
        exact: bool,
        #[arg(long)]
        decide: Option<usize>,
        graph: PathBuf,
        /// Write the witness representation here.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exact value of another width parameter.
    Param {
        #[arg(value_enum)]
        which: Param,
        graph: PathBuf,
    },
    /// Certificate read off a representation.
    Witness {
        #[arg(value_enum)]
        which: WitnessKind,
        rep: PathBuf,
    },
    /// Maximal cliques through the labels; `--weights` adds the heaviest clique.
    Cliques {
        rep: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Bounded search for an independent or dominating set of size `k`.
    Solve {
        #[arg(value_enum)]
        problem: SolveProblem,
        #[arg(long)]
        k: usize,
        rep: PathBuf,
    },
    /// Gadget generators.
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        instance: PathBuf,
        /// Write the representation here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Write `{k, m, q, target}` as JSON here.
        #[arg(long)]
        meta: Option<PathBuf>,
        /// Also decide the source instance and the gadget exhaustively.
        #[arg(long)]
        check: bool,
    },
    /// Run the acceptance criteria.
    Selftest {
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Edges,
    Ecc,
    Bipartite,
    #[value(name = "3partite")]
    Tripartite,
    Cycle,
    Pathdecomp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Param {
    Ecc,
    Pw,
    Lmim,
    Palpha,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKind {
    Thin,
    Lmim,
    Pathdecomp,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveProblem {
    Is,
    Ds,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceKind {
    Coloring,
    Idsp,
}

/// What a verb printed and how it should exit.
struct Outcome {
    body: String,
    summary: Vec<(&'static str, String)>,
    /// `false` for a "no" answer or a violation.
    yes: bool,
}

impl Outcome {
    fn new() -> Self {
        Outcome { body: String::new(), summary: Vec::new(), yes: true }
    }

    fn kv(mut self, key: &'static str, value: impl ToString) -> Self {
        self.summary.push((key, value.to_string()));
        self
    }

    fn line(mut self, text: impl AsRef<str>) -> Self {
        self.body.push_str(text.as_ref());
        if !self.body.ends_with('\n') {
            self.body.push('\n');
        }
        self
    }
}

enum Failure {
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_cap_exceeded() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// Source answer, gadget answer and the gadget's optimum.
type Verdict = Box<dyn FnOnce() -> Run<(bool, bool, usize)>>;

fn read(path: &Path) -> Run<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Run<()> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Run<Graph> {
    parse_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_rep(path: &Path) -> Run<(Graph, SimRep)> {
    read_rep(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn list(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Sends a representation to `out`, or into the body.
fn emit_rep(o: Outcome, g: &Graph, rep: &SimRep, out: Option<&Path>) -> Run<Outcome> {
    let text = write_rep(g, rep);
    match out {
        Some(p) => {
            write(p, &text)?;
            Ok(o.kv("out", p.display()))
        }
        None => Ok(o.line(text)),
    }
}

fn caps(cli: &Cli) -> OracleCaps {
    let mut caps = OracleCaps::default();
    if let Some(c) = cli.subset_cap {
        caps.subset = c;
    }
    if let Some(c) = cli.chromatic_cap {
        caps.chromatic = c;
    }
    if let Some(c) = cli.matching_cap {
        caps.induced_matching = c;
    }
    caps
}

fn run(cli: &Cli) -> Run<Outcome> {
    let o = Outcome::new();
    match &cli.verb {
        Verb::Construct { method, graph, cover, decomposition, sizes, n, out } => {
            let need_graph = || -> Run<Graph> {
                let p = graph.as_ref().ok_or_else(|| Failure::Input("this method needs a graph file".into()))?;
                load_graph(p)
            };
            let (g, rep) = match method {
                Method::Edges => {
                    let g = need_graph()?;
                    let rep = construct_from_edges(&g)?;
                    (g, rep)
                }
                Method::Ecc => {
                    let g = need_graph()?;
                    let c = match cover {
                        Some(p) => parse_cover(&read(p)?)?,
                        None => ecc_greedy(&g)?,
                    };
                    let rep = construct_from_ecc(&g, &c)?;
                    (g, rep)
                }
                Method::Bipartite => {
                    let g = need_graph()?;
                    let (x, y) = g.bipartition().ok_or_else(|| Failure::Input("graph is not bipartite".into()))?;
                    let rep = construct_bipartite(&g, (&x, &y))?;
                    (g, rep)
                }
                Method::Tripartite => match sizes.as_slice() {
                    &[a, b, c] => construct_3partite((a, b, c))?,
                    _ => return Err(Failure::Input("--sizes needs three part sizes".into())),
                },
                Method::Cycle => construct_cycle(n.ok_or_else(|| Failure::Input("--n is required for cycle".into()))?)?,
                Method::Pathdecomp => {
                    let g = need_graph()?;
                    let pd = match decomposition {
                        Some(p) => parse_decomposition(&read(p)?)?,
                        None => pathwidth_exact(&g)?.1,
                    };
                    let rep = construct_from_path_decomposition(&g, &pd)?;
                    (g, rep)
                }
            };
            let o = emit_rep(o, &g, &rep, out.as_deref())?;
            Ok(o.kv("n", rep.n()).kv("d", rep.d()))
        }
        Verb::Verify { rep, graph } => {
            let (mut g, r) = load_rep(rep)?;
            if let Some(p) = graph {
                g = load_graph(p)?;
            }
            let o = match verify_representation(&g, &r)? {
                None => o.kv("valid", true),
                Some(v) => {
                    let mut o = o.line(format!("violation: {v}")).kv("valid", false);
                    o.yes = false;
                    o
                }
            };
            Ok(o.kv("d", r.d()))
        }
        Verb::Si { exact: _, decide, graph, out } => {
            let g = load_graph(graph)?;
            match decide {
                Some(d) => match si_decide(&g, *d)? {
                    Some(rep) => Ok(emit_rep(o, &g, &rep, out.as_deref())?.kv("result", "yes").kv("d", d)),
                    None => {
                        let mut o = o.kv("result", "no").kv("d", d);
                        o.yes = false;
                        Ok(o)
                    }
                },
                None => {
                    let (si, rep) = si_exact(&g)?;
                    Ok(emit_rep(o, &g, &rep, out.as_deref())?.kv("si", si))
                }
            }
        }
        Verb::Param { which, graph } => {
            let g = load_graph(graph)?;
            Ok(match which {
                Param::Ecc => {
                    let (v, cover) = ecc_exact(&g)?;
                    o.line(write_cover(&cover)).kv("ecc", v)
                }
                Param::Pw => {
                    let (v, pd) = pathwidth_exact(&g)?;
                    o.line(write_decomposition(&pd)).kv("pw", v)
                }
                Param::Lmim => {
                    let (v, w) = linear_mim_exact(&g)?;
                    o.line(format!("order {}", list(&w.order))).kv("lmim", v)
                }
                Param::Palpha => o.kv("palpha", path_alpha_exact(&g)?),
            })
        }
        Verb::Witness { which, rep } => {
            let (g, r) = load_rep(rep)?;
            Ok(match which {
                WitnessKind::Thin => {
                    let w = thinness_witness(&g, &r)?;
                    w.validate(&g)?;
                    let mut o = o.line(format!("order {}", list(&w.order)));
                    for c in &w.partition {
                        o = o.line(format!("class {}", list(c)));
                    }
                    o.kv("classes", w.classes()).kv("bound", format!("2^{}", r.d()))
                }
                WitnessKind::Lmim => {
                    let w = lmim_witness(&g, &r)?;
                    let mut o = o.line(format!("order {}", list(&w.order)));
                    if let Some(cuts) = &w.cuts {
                        o = o.line(format!("cuts {}", list(cuts)));
                    }
                    let value = w.value().map_or("unverified".to_string(), |v| v.to_string());
                    let verified = w.verified();
                    let mut o = o.kv("value", value).kv("bound", w.bound).kv("verified", verified);
                    o.yes = w.cuts.is_none() || verified;
                    o
                }
                WitnessKind::Pathdecomp => {
                    let pd = path_decomposition_from_rep(&g, &r)?;
                    o.line(write_decomposition(&pd)).kv("bags", pd.bags.len()).kv("width", pd.width())
                }
            })
        }
        Verb::Cliques { rep, weights } => {
            let (g, r) = load_rep(rep)?;
            let cliques = enumerate_maximal_cliques(&g, &r)?;
            let mut o = o;
            for c in &cliques {
                o = o.line(list(c));
            }
            o = o.kv("cliques", cliques.len());
            if let Some(p) = weights {
                let g = g.clone().with_weights(parse_weights(&read(p)?, g.n())?)?;
                let (w, c) = max_weight_clique(&g, &r)?;
                o = o.line(format!("heaviest {}", list(&c))).kv("weight", w);
            }
            Ok(o)
        }
        Verb::Solve { problem, k, rep } => {
            let (g, r) = load_rep(rep)?;
            let out = match problem {
                SolveProblem::Is => independent_set_fpt(&g, &r, *k)?,
                SolveProblem::Ds => dominating_set_fpt(&g, &r, *k)?,
            };
            let mut o = o;
            if let Some(w) = &out.witness {
                o = o.line(list(w));
            }
            let value = out.witness.as_ref().map_or(*k, |w| w.len());
            let mut o = o.kv("result", if out.found { "yes" } else { "no" }).kv("value", value).kv("nodes", out.nodes);
            o.yes = out.found;
            Ok(o)
        }
        Verb::Reduce { kind, instance, out, meta, check } => {
            let text = read(instance)?;
            let caps = caps(cli);
            let (g, rep, fields, verdict) = match kind {
                ReduceKind::Coloring => {
                    let inst = preprocess_degree_one(&parse_disjoint_paths(&text)?)?;
                    let gadget = coloring_gadget(&inst)?;
                    let fields = vec![("k", gadget.k)];
                    let k = gadget.k;
                    let graph = gadget.graph.clone();
                    let verdict: Verdict = Box::new(move || {
                        let yes = solve_disjoint_paths(&inst)?.is_some();
                        let chi = brute_force_with(Problem::ChromaticNumber, &graph, &caps)?.value;
                        Ok((yes, chi == k, chi))
                    });
                    (gadget.graph, gadget.rep, fields, verdict)
                }
                ReduceKind::Idsp => {
                    let inst = parse_misp(&text)?;
                    let gadget = misp_to_idsp_gadget(&inst)?;
                    let fields = vec![("k", gadget.k), ("m", gadget.m), ("q", gadget.q), ("target", gadget.target)];
                    let target = gadget.target;
                    let graph = gadget.graph.clone();
                    let verdict: Verdict = Box::new(move || {
                        let yes = solve_misp(&inst).is_some();
                        let gamma = domination_number(&graph, true, &caps)?;
                        Ok((yes, gamma == target, gamma))
                    });
                    (gadget.graph, gadget.rep, fields, verdict)
                }
            };
            if let Some(p) = meta {
                let doc: serde_json::Map<String, serde_json::Value> =
                    fields.iter().map(|&(k, v)| (k.to_string(), v.into())).collect();
                write(p, &format!("{}\n", serde_json::Value::Object(doc)))?;
            }
            let mut o = emit_rep(o, &g, &rep, out.as_deref())?.kv("n", rep.n()).kv("d", rep.d());
            for (k, v) in fields {
                o = o.kv(k, v);
            }
            if *check {
                let (source, gadget, value) = verdict()?;
                o = o.kv("source", if source { "yes" } else { "no" }).kv("gadget_value", value);
                o = o.kv("agree", source == gadget);
                o.yes = source == gadget;
            }
            Ok(o)
        }
        Verb::Selftest { criterion } => {
            let reports = match criterion {
                Some(id) => vec![run_criterion(*id, cli.seed)?],
                None => run_all(cli.seed),
            };
            let mut o = o;
            for r in &reports {
                o = o.line(r.to_string());
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            o = o.kv("seed", cli.seed).kv("passed", reports.len() - failed).kv("failed", failed);
            o.yes = failed == 0;
            Ok(o)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(o) => {
            if cli.format == Format::Text {
                print!("{}", o.body);
            }
            let kvs: Vec<String> = o.summary.iter().map(|(k, v)| format!("{k}={v}")).collect();
            println!("ok {}", kvs.join(" "));
            ExitCode::from(if o.yes { 0 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
