//! Command-line front end: solve fixed-order and free-order page problems,
//! validate embedding documents, render arc diagrams, and generate test
//! graphs.
//!
//! Exit codes: 0 feasible / crossing-free, 1 infeasible / crossings found,
//! 2 malformed input or usage error. Reports go to standard output and are
//! byte-stable for fixed inputs and flags; wall times go to standard error.

use std::fmt::Write as _;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bookemb::cover::minimum_vertex_cover;
use bookemb::doc::EmbeddingDoc;
use bookemb::fixed_order_pw::{min_pages_fixed_order_pw, solve_fixed_order_pw};
use bookemb::fixed_order_vc::{min_pages_fixed_order_vc, solve_fixed_order_vc};
use bookemb::gen;
use bookemb::kernel::{min_pages_bt, solve_bt};
use bookemb::oracle::{fobt_oracle, min_pages_fixed_order_oracle, validate};
use bookemb::parse::{format_graph, parse_graph};
use bookemb::render::render_svg;
use bookemb::{guard_profile, BookEmbedding, Graph, LinearOrder, PageAssignment};

#[derive(Parser)]
#[command(name = "bookemb", version, about = "book embedding solvers and tools")]
struct Cli {
    /// Cap the worker thread count (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Pages for a fixed spine order: input must carry an `order` line.
    Fobt {
        /// Graph text file, or `-` for standard input.
        input: String,
        /// Page budget; omitted means search for the minimum.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Write the embedding document here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pages over all spine orders (book thickness).
    Bt {
        /// Graph text file, or `-` for standard input.
        input: String,
        /// Page budget; omitted means search for the minimum.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate an embedding document and list any crossings.
    Check {
        /// Document file, or `-` for standard input. Text before the first
        /// `{` is ignored, so a solver report pipes in unchanged.
        doc: String,
    },
    /// Draw an embedding document as an arc diagram.
    Render {
        /// Document file, or `-` for standard input.
        doc: String,
        /// Output image path (`.svg`).
        #[arg(long)]
        out: PathBuf,
    },
    /// Emit a graph in the text format.
    Gen(GenArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Vc,
    Pw,
    Oracle,
    Auto,
}

#[derive(Args)]
struct GenArgs {
    /// Append an `order` line.
    #[arg(long, global = true, value_enum)]
    order: Option<OrderKind>,
    /// Seed for random edges and shuffled orders.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    family: Family,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderKind {
    Identity,
    Shuffled,
}

#[derive(Subcommand)]
enum Family {
    /// Complete graph K_n.
    Kn { n: usize },
    /// Complete bipartite graph K_{a,b}.
    Kab { a: usize, b: usize },
    /// Path on n vertices.
    Path { n: usize },
    /// Cycle on n vertices.
    Cycle { n: usize },
    /// Each pair becomes an edge independently with probability p.
    Random { n: usize, p: f64 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // Ignore the error: the global pool can only be sized once.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<u8, String> {
    match cmd {
        Cmd::Fobt { input, k, algo, out } => cmd_fobt(&input, k, algo, out.as_deref()),
        Cmd::Bt { input, k, out } => cmd_bt(&input, k, out.as_deref()),
        Cmd::Check { doc } => cmd_check(&doc),
        Cmd::Render { doc, out } => cmd_render(&doc, &out),
        Cmd::Gen(args) => cmd_gen(args),
    }
}

fn read_text(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading standard input: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn read_doc(path: &str) -> Result<EmbeddingDoc, String> {
    let text = read_text(path)?;
    let start = text.find('{').ok_or("no JSON object in input")?;
    EmbeddingDoc::from_json(&text[start..]).map_err(|e| e.to_string())
}

fn read_graph(path: &str) -> Result<(Graph, Option<LinearOrder>), String> {
    parse_graph(&read_text(path)?).map_err(|e| e.to_string())
}

/// Validates the result, prints the report, and writes the document; the
/// shared tail of `fobt` and `bt`.
fn finish(
    g: &Graph,
    report: &str,
    emb: Option<BookEmbedding>,
    out: Option<&std::path::Path>,
) -> Result<u8, String> {
    print!("{report}");
    let Some(emb) = emb else {
        println!("feasible: no");
        return Ok(1);
    };
    let checked = validate(g, &emb).map_err(|e| format!("internal: bad embedding: {e}"))?;
    if !checked.ok {
        return Err("internal: solver emitted a crossing embedding".into());
    }
    println!("feasible: yes");
    println!("pages used: {}", emb.assignment.pages_used());
    let doc = EmbeddingDoc::from_embedding(g, &emb).to_json();
    match out {
        Some(path) => {
            std::fs::write(path, doc).map_err(|e| format!("writing {}: {e}", path.display()))?;
            println!("document written to {}", path.display());
        }
        None => print!("{doc}"),
    }
    Ok(0)
}

fn cmd_fobt(
    input: &str,
    k: Option<usize>,
    algo: Algo,
    out: Option<&std::path::Path>,
) -> Result<u8, String> {
    let (g, order) = read_graph(input)?;
    let order = order.ok_or("input has no order line; `fobt` needs a spine order")?;
    let tau = minimum_vertex_cover(&g).len();
    let kappa = guard_profile(&g, &order).pathwidth();
    let algo = match algo {
        Algo::Auto if tau <= kappa => Algo::Vc,
        Algo::Auto => Algo::Pw,
        other => other,
    };
    let start = Instant::now();
    let (k_line, asg): (String, Option<PageAssignment>) = match k {
        Some(k) => {
            let asg = match algo {
                Algo::Vc => solve_fixed_order_vc(&g, &order, k),
                Algo::Pw => solve_fixed_order_pw(&g, &order, k),
                Algo::Oracle => fobt_oracle(&g, &order, k),
                Algo::Auto => unreachable!("resolved above"),
            };
            (format!("k: {k}"), asg)
        }
        None => {
            let (best, asg) = match algo {
                Algo::Vc => min_pages_fixed_order_vc(&g, &order),
                Algo::Pw => min_pages_fixed_order_pw(&g, &order),
                Algo::Oracle => min_pages_fixed_order_oracle(&g, &order),
                Algo::Auto => unreachable!("resolved above"),
            };
            (format!("minimum pages: {best}"), Some(asg))
        }
    };
    eprintln!("wall time: {:.3?}", start.elapsed());
    let mut report = String::new();
    writeln!(report, "problem: fixed-order book thickness").unwrap();
    writeln!(report, "n: {}", g.n()).unwrap();
    writeln!(report, "m: {}", g.m()).unwrap();
    writeln!(report, "tau: {tau}").unwrap();
    writeln!(report, "kappa: {kappa}").unwrap();
    let name = match algo {
        Algo::Vc => "vc",
        Algo::Pw => "pw",
        Algo::Oracle => "oracle",
        Algo::Auto => unreachable!(),
    };
    writeln!(report, "algorithm: {name}").unwrap();
    writeln!(report, "{k_line}").unwrap();
    finish(&g, &report, asg.map(|a| BookEmbedding::new(order.clone(), a)), out)
}

fn cmd_bt(input: &str, k: Option<usize>, out: Option<&std::path::Path>) -> Result<u8, String> {
    let (g, _) = read_graph(input)?;
    let tau = minimum_vertex_cover(&g).len();
    let start = Instant::now();
    let (k_line, emb) = match k {
        Some(k) => (format!("k: {k}"), solve_bt(&g, k)),
        None => {
            let (best, emb) = min_pages_bt(&g);
            (format!("minimum pages: {best}"), Some(emb))
        }
    };
    eprintln!("wall time: {:.3?}", start.elapsed());
    let mut report = String::new();
    writeln!(report, "problem: book thickness").unwrap();
    writeln!(report, "n: {}", g.n()).unwrap();
    writeln!(report, "m: {}", g.m()).unwrap();
    writeln!(report, "tau: {tau}").unwrap();
    writeln!(report, "algorithm: kernel").unwrap();
    writeln!(report, "{k_line}").unwrap();
    finish(&g, &report, emb, out)
}

fn cmd_check(doc: &str) -> Result<u8, String> {
    let (g, emb) = read_doc(doc)?.into_parts().map_err(|e| e.to_string())?;
    let report = validate(&g, &emb).map_err(|e| e.to_string())?;
    println!("n: {}", g.n());
    println!("edges: {}", g.m());
    println!("k: {}", emb.assignment.k());
    println!("crossings: {}", report.violations.len());
    for ((u1, v1), (u2, v2)) in &report.violations {
        println!("  ({u1},{v1}) x ({u2},{v2})");
    }
    Ok(u8::from(!report.ok))
}

fn cmd_render(doc: &str, out: &std::path::Path) -> Result<u8, String> {
    let (g, emb) = read_doc(doc)?.into_parts().map_err(|e| e.to_string())?;
    let svg = render_svg(&g, &emb);
    std::fs::write(out, svg).map_err(|e| format!("writing {}: {e}", out.display()))?;
    println!("image written to {}", out.display());
    Ok(0)
}

fn cmd_gen(args: GenArgs) -> Result<u8, String> {
    let g = match args.family {
        Family::Kn { n } => gen::complete(n),
        Family::Kab { a, b } => gen::complete_bipartite(a, b),
        Family::Path { n } => gen::path(n),
        Family::Cycle { n } => gen::cycle(n),
        Family::Random { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(format!("edge probability {p} is not in [0, 1]"));
            }
            gen::random_graph(n, p, args.seed)
        }
    };
    let order = args.order.map(|kind| match kind {
        OrderKind::Identity => LinearOrder::identity(g.n()),
        OrderKind::Shuffled => gen::shuffled_order(g.n(), args.seed),
    });
    print!("{}", format_graph(&g, order.as_ref()));
    Ok(0)
}
