use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mrf_toric::fiberwalk::{fiber_connected, margins, mcmc_walk, WalkOptions, DEFAULT_FIBER_LIMIT};
use mrf_toric::graphs::{glue, StateGraph};
use mrf_toric::ideal::text::format_binomial;
use mrf_toric::ideal::{markov_basis, MarkovBasis, MarkovOptions, VariableSet};
use mrf_toric::model::{model_matrix, ModelMatrix};
use mrf_toric::monoid::{self, ColumnSumMatrix, DEFAULT_DIVISION_LIMIT};
use mrf_toric::stabilize::{scale_component, stabilize, StabilizeOptions};
use mrf_toric::tfp::{glue_vs_tfp, tfp_ideal_with, GroupedIdeal, TfpMethod};
use mrf_toric::{io, Budget, Error, Result};

#[derive(Parser)]
#[command(name = "mrf-toric", version, about = "Toric ideals, Markov bases and fibre products of Markov random fields")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seconds per computation (per instance for `stabilize`).
    #[arg(long, default_value_t = 600, global = true)]
    time_limit: u64,
    /// Refuse computations in more ring variables than this.
    #[arg(long, global = true)]
    max_variables: Option<usize>,
    /// Skip S-pairs above this degree; results are flagged as truncated.
    #[arg(long, global = true)]
    max_degree_truncate: Option<u32>,
    /// Random seed (recorded in the output of randomized commands).
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
}

impl Global {
    fn budget(&self) -> Budget {
        let mut b = Budget::unlimited().with_time_limit(Duration::from_secs(self.time_limit));
        if let Some(v) = self.max_variables {
            b = b.with_max_variables(v);
        }
        if let Some(d) = self.max_degree_truncate {
            b = b.with_max_degree(d);
        }
        b
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Graph operations.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Model matrices.
    #[command(subcommand)]
    Model(ModelCmd),
    /// Toric ideals.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Toric fibre products.
    #[command(subcommand)]
    Tfp(TfpCmd),
    /// Fibers of contingency tables.
    #[command(subcommand)]
    Fiber(FiberCmd),
    /// Constant-column-sum matrices and rank-one ideals.
    #[command(subcommand)]
    Monoid(MonoidCmd),
    /// Markov degrees of a glued family over a range of multiplicities.
    Stabilize {
        spec: PathBuf,
        /// Component whose multiplicity varies (1-based).
        #[arg(long, default_value_t = 1)]
        component: usize,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Glue the components of a spec along the shared nodes.
    Glue { spec: PathBuf },
    /// Maximal cliques.
    Cliques { graph: PathBuf },
}

#[derive(Subcommand)]
enum ModelCmd {
    /// The matrix of the monomial parameterization.
    Matrix { graph: PathBuf },
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Minimal Markov basis of a graph's model, or of a matrix with `--matrix`.
    Markov {
        input: PathBuf,
        /// Treat the input as an integer matrix instead of a graph.
        #[arg(long)]
        matrix: bool,
        /// Run a second saturation sweep and check it changes nothing.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Elimination,
    Lattice,
}

impl From<MethodArg> for TfpMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => TfpMethod::Auto,
            MethodArg::Elimination => TfpMethod::Elimination,
            MethodArg::Lattice => TfpMethod::Lattice,
        }
    }
}

#[derive(Subcommand)]
enum TfpCmd {
    /// Product of two grouped ideals, or of two graph models with `--shared`.
    Compute {
        x: PathBuf,
        y: PathBuf,
        /// Inputs are graphs, grouped by their states on these nodes.
        #[arg(long, value_delimiter = ',')]
        shared: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Compare the glued model's ideal with the iterated fibre product.
    VerifyGlue { spec: PathBuf },
}

#[derive(Subcommand)]
enum FiberCmd {
    /// Connectivity of the fiber of a table under the model's Markov basis.
    Check {
        graph: PathBuf,
        table: PathBuf,
        #[arg(long, default_value_t = DEFAULT_FIBER_LIMIT)]
        limit: usize,
    },
    /// Random walk on the fiber of a table.
    Walk {
        graph: PathBuf,
        table: PathBuf,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        /// Keep every k-th state.
        #[arg(long, default_value_t = 1)]
        thin: usize,
    },
}

#[derive(Subcommand)]
enum MonoidCmd {
    /// Search for β = γ + π*α with π ordered-surjective.
    Divides {
        alpha: PathBuf,
        beta: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DIVISION_LIMIT)]
        limit: usize,
    },
    /// First divisible pair in a sequence of matrices.
    WqoSearch {
        sequence: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DIVISION_LIMIT)]
        limit: usize,
    },
    /// Determinantal generators of the rank-one ideal of [n]^S.
    RankOne {
        #[arg(long)]
        n: usize,
        /// |S|.
        #[arg(long)]
        size: usize,
        /// Also compare with the pull-backs from smaller sets.
        #[arg(long)]
        check_generation: bool,
    },
}

struct Output {
    json: Value,
    text: String,
    csv: Option<String>,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output { json, text, csv: None }
    }

    fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }
}

fn emit(out: Output, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out.json)?),
        Format::Text => print!("{}", out.text),
        Format::Csv => match out.csv {
            Some(c) => print!("{c}"),
            None => return Err(Error::Validation("csv output is not available for this command".into())),
        },
    }
    Ok(())
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn histogram_text(h: &std::collections::BTreeMap<u32, usize>) -> String {
    let parts: Vec<String> = h.iter().map(|(d, c)| format!("{d}:{c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn markov_output(mb: &MarkovBasis, vars: &VariableSet) -> Output {
    let gens: Vec<String> = mb.gens.iter().map(|g| format_binomial(g, vars)).collect();
    let json = json!({
        "variables": vars.names(),
        "generators": gens,
        "degree_histogram": mb.histogram,
        "max_degree": mb.max_degree(),
        "lattice_rank": mb.lattice_rank,
        "truncated": mb.truncated,
    });
    let csv = lines(std::iter::once("degree,binomial".to_string()).chain(
        mb.gens.iter().zip(&gens).map(|(g, s)| format!("{},{s}", g.degree())),
    ));
    Output::new(json, lines(gens)).with_csv(csv)
}

fn graph_model(path: &Path) -> Result<(StateGraph, ModelMatrix)> {
    let g = io::read_graph(path)?;
    let m = model_matrix(&g)?;
    Ok((g, m))
}

fn run(cli: Cli) -> Result<()> {
    let global = &cli.global;
    let out = match cli.command {
        Command::Graph(GraphCmd::Glue { spec }) => {
            let g = glue(&io::read_glue_spec(&spec)?)?;
            let text = lines(
                g.nodes().iter().zip(g.states()).map(|(n, s)| format!("{n} {s}")).chain(
                    g.edge_labels().into_iter().map(|(a, b)| format!("{a} -- {b}")),
                ),
            );
            Output::new(io::graph_to_json(&g), text)
        }
        Command::Graph(GraphCmd::Cliques { graph }) => {
            let cliques = io::read_graph(&graph)?.maximal_clique_labels();
            Output::new(json!(cliques), lines(cliques.iter().map(|c| c.join(" "))))
        }
        Command::Model(ModelCmd::Matrix { graph }) => {
            let (_, m) = graph_model(&graph)?;
            let csv = lines(m.entries.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(",")));
            Output::new(m.to_json(), m.to_text()).with_csv(csv)
        }
        Command::Ideal(IdealCmd::Markov { input, matrix, verify }) => {
            let options = MarkovOptions { verify_fixed_point: verify, ..Default::default() };
            let (entries, vars) = if matrix {
                let a = io::parse_integer_matrix(&io::read_file(&input)?)?;
                let n = a.first().map_or(0, Vec::len);
                (a, VariableSet::numbered("x", n))
            } else {
                let (_, m) = graph_model(&input)?;
                let vars = m.variables();
                (m.entries, vars)
            };
            let mb = markov_basis(&entries, vars.len(), &options, &global.budget())?;
            markov_output(&mb, &vars)
        }
        Command::Tfp(TfpCmd::Compute { x, y, shared, method }) => {
            let budget = global.budget();
            let (gx, gy) = match &shared {
                Some(s) => (
                    GroupedIdeal::of_graph(&io::read_graph(&x)?, s, &budget)?,
                    GroupedIdeal::of_graph(&io::read_graph(&y)?, s, &budget)?,
                ),
                None => (
                    io::parse_grouped_ideal(&io::read_file(&x)?, "x")?,
                    io::parse_grouped_ideal(&io::read_file(&y)?, "x")?,
                ),
            };
            let r = tfp_ideal_with(&gx, &gy, method.into(), &budget)?;
            let vars = io::grouped_variables(&r.ideal, "z");
            let mut json = io::grouped_ideal_to_json(&r.ideal, "z");
            json["method"] = serde_json::to_value(r.method)?;
            json["truncated"] = json!(r.truncated);
            Output::new(json, lines(r.ideal.gens().iter().map(|g| format_binomial(g, &vars))))
        }
        Command::Tfp(TfpCmd::VerifyGlue { spec }) => {
            let r = glue_vs_tfp(&io::read_glue_spec(&spec)?, &global.budget())?;
            let text = format!(
                "{}\nglued: {} generators {}\nproduct: {} generators {}\n",
                r.verdict(),
                r.glued_generators,
                histogram_text(&r.glued_histogram),
                r.tfp_generators,
                histogram_text(&r.tfp_histogram)
            );
            let mut json = serde_json::to_value(&r)?;
            json["verdict"] = json!(r.verdict());
            Output::new(json, text)
        }
        Command::Fiber(FiberCmd::Check { graph, table, limit }) => {
            let (_, m) = graph_model(&graph)?;
            let t = io::parse_table(&io::read_file(&table)?, &m.variables())?;
            let mb = markov_basis(&m.entries, m.ncols(), &MarkovOptions::default(), &global.budget())?;
            let c = fiber_connected(&m.entries, &margins(&m.entries, &t), &mb.gens, limit)?;
            let text = format!(
                "{}: {} tables, {} component(s), {} moves\n",
                if c.connected { "CONNECTED" } else { "DISCONNECTED" },
                c.size,
                c.components,
                mb.gens.len()
            );
            let mut json = serde_json::to_value(&c)?;
            json["moves"] = json!(mb.gens.len());
            Output::new(json, text)
        }
        Command::Fiber(FiberCmd::Walk { graph, table, steps, thin }) => {
            let (_, m) = graph_model(&graph)?;
            let vars = m.variables();
            let t = io::parse_table(&io::read_file(&table)?, &vars)?;
            let mb = markov_basis(&m.entries, m.ncols(), &MarkovOptions::default(), &global.budget())?;
            let opts = WalkOptions { steps, seed: global.seed, thin };
            let walk = mcmc_walk(&m.entries, &t, &mb.gens, &opts)?;
            let row = |t: &Vec<i64>| t.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
            let csv = lines(std::iter::once(vars.names().join(",")).chain(walk.iter().map(row)));
            let text = lines(walk.iter().map(|t| row(t).replace(',', " ")));
            let json = json!({
                "seed": global.seed,
                "steps": steps,
                "thin": thin,
                "variables": vars.names(),
                "tables": walk,
            });
            Output::new(json, text).with_csv(csv)
        }
        Command::Monoid(cmd) => monoid_command(cmd, global)?,
        Command::Stabilize { spec, component, from, to } => {
            let spec = io::read_glue_spec(&spec)?;
            if component == 0 || from > to {
                return Err(Error::Validation("need component ≥ 1 and from ≤ to".into()));
            }
            let ms = scale_component(&spec, component - 1, from..=to)?;
            let options = StabilizeOptions {
                time_limit: Some(Duration::from_secs(global.time_limit)),
                max_variables: global.max_variables,
                max_degree: global.max_degree_truncate,
                markov: MarkovOptions::default(),
            };
            let report = stabilize(&spec, &ms, &options)?;
            let mut text = lines(report.instances.iter().map(|i| {
                let mult: Vec<String> = i.multiplicities.iter().map(usize::to_string).collect();
                format!(
                    "({}) {:?} generators={} max_degree={} {} ms {}",
                    mult.join(","),
                    i.status,
                    i.n_generators.map_or("-".into(), |n| n.to_string()),
                    i.max_degree.map_or("-".into(), |d| d.to_string()),
                    i.wall_ms,
                    histogram_text(&i.degree_histogram)
                )
                .to_lowercase()
            }));
            if let Some(p) = &report.plateau {
                text.push_str(&format!(
                    "plateau: max degree {} from {:?} over {} instances ({})\n",
                    p.max_degree.map_or("-".into(), |d| d.to_string()),
                    p.from,
                    p.length,
                    p.note
                ));
            }
            Output::new(serde_json::to_value(&report)?, text).with_csv(report.to_csv())
        }
    };
    emit(out, global.format)
}

fn matrix_text(m: &ColumnSumMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| m.columns().iter().map(|c| c[i].to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    lines(rows)
}

fn division_json(d: &monoid::Division) -> Value {
    let pi: Vec<usize> = d.pi.values().iter().map(|v| v + 1).collect();
    json!({ "divides": true, "pi": pi, "gamma": d.gamma.columns() })
}

fn monoid_command(cmd: MonoidCmd, global: &Global) -> Result<Output> {
    Ok(match cmd {
        MonoidCmd::Divides { alpha, beta, limit } => {
            let a = io::parse_column_matrix(&io::read_file(&alpha)?)?;
            let b = io::parse_column_matrix(&io::read_file(&beta)?)?;
            match monoid::divides(&a, &b, limit)? {
                Some(d) => {
                    let pi: Vec<String> = d.pi.values().iter().map(|v| (v + 1).to_string()).collect();
                    let text = format!("DIVIDES\npi = ({})\ngamma =\n{}", pi.join(","), matrix_text(&d.gamma));
                    Output::new(division_json(&d), text)
                }
                None => Output::new(json!({ "divides": false }), "DOES NOT DIVIDE\n".into()),
            }
        }
        MonoidCmd::WqoSearch { sequence, limit } => {
            let seq = io::parse_column_matrices(&io::read_file(&sequence)?)?;
            match monoid::wqo_search(&seq, limit)? {
                Some((i, j, d)) => {
                    let mut json = division_json(&d);
                    json["pair"] = json!([i + 1, j + 1]);
                    Output::new(json, format!("({}, {})\n", i + 1, j + 1))
                }
                None => Output::new(json!({ "pair": null }), "no divisible pair\n".into()),
            }
        }
        MonoidCmd::RankOne { n, size, check_generation } => {
            if n == 0 || size == 0 {
                return Err(Error::Validation("n and size must be positive".into()));
            }
            let gens = monoid::rank_one_ideal(n, size);
            let vars = monoid::tensor_variables(n, size);
            let mut json = io::ideal_to_json(&vars, &gens);
            let mut text = lines(gens.iter().map(|g| format_binomial(g, &vars)));
            if check_generation {
                let r = monoid::generation_bound_check(n, size, &global.budget())?;
                text.push_str(&format!(
                    "generated by pull-backs (|S'| <= {}): {}\n",
                    r.bound.min(size),
                    r.equal
                ));
                json["generation"] = serde_json::to_value(&r)?;
            }
            Output::new(json, text)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource() { 3 } else { 2 })
        }
    }
}
