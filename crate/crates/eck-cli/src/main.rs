//! Command-line front end for the edge-coloring toolkit: solve instances
//! with any engine, kernelize, emit reductions, cross-validate engines on a
//! corpus, benchmark, and verify witness files.
//!
//! Exit codes: 0 = YES / success, 1 = NO / failed check, 2 = error or
//! budget exhaustion. The env var `ECK_BUDGET_MS` caps per-run wall time.
//! All randomness flows through `--seed` (default 0), and with timing off
//! (the default) every command's output is byte-identical across runs.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use eck_core::formats::{parse_coloring, parse_graph, parse_rbds, print_coloring, print_graph, print_labeled_graph};
use eck_core::fpt::{
    divide_and_color_config, reduce_to_rainbow, solve_via_rainbow_with, DivideColorConfig,
    RAINBOW_K_CAP,
};
use eck_core::gadgets::{delete_and_color, reduce_rbds};
use eck_core::ilp::{
    aux_functions, build_ilp, enumerate_types, render_lp, solve_via_ilp_with, PartialGuess,
    DEFAULT_VC_CAP,
};
use eck_core::kernel::{kernelize_with, EarlyOutcome, KernelTrace};
use eck_core::oracle::{solve_exact_capped_with, EXACT_EDGE_CAP};
use eck_core::vertex_cover::min_vertex_cover_capped;
use eck_core::{verify_coloring, EckError, Graph, MecsInstance, MecsSolution, WorkBudget};

#[derive(Parser)]
#[command(name = "eck", version, about = "Solvers and tooling for keeping l edges p-edge-colorable")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    /// Exhaustive search over edge subsets; exact, capped at 24 edges.
    Oracle,
    /// Randomized divide-and-color; one-sided (YES answers are proven).
    DivideColor,
    /// Exact reduction to rainbow matching; capped at l = 12.
    Rainbow,
    /// Vertex-cover-parameterized integer program; exact for small covers.
    Ilp,
}

impl Engine {
    fn name(self) -> &'static str {
        match self {
            Engine::Oracle => "oracle",
            Engine::DivideColor => "divide-color",
            Engine::Rainbow => "rainbow",
            Engine::Ilp => "ilp",
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one instance and print the verdict plus a verified coloring.
    Solve {
        /// Graph file (`n m` header, then `u v` lines).
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Engine::Oracle)]
        engine: Engine,
        /// Number of edges the colored subgraph must reach.
        #[arg(long)]
        l: usize,
        /// Number of matchings (colors) available.
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Multiplier on the divide-and-color round count.
        #[arg(long, default_value_t = 1.0)]
        rounds_factor: f64,
        /// Largest vertex cover the ilp engine accepts.
        #[arg(long, default_value_t = DEFAULT_VC_CAP)]
        vc_cap: usize,
        /// Write the ilp engine's base model in plain text (ilp only).
        #[arg(long)]
        dump_lp: Option<PathBuf>,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Shrink an instance with the deletion rules and record the trace.
    Kernelize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        p: usize,
        /// Write the full trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write the kernel graph in the plain graph format.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the labeled-graph instance whose rainbow matchings of size k
    /// are exactly the colorings sought.
    ReduceRainbow {
        graph: PathBuf,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the hardness reduction from a red-blue domination instance.
    GenGadget {
        /// Domination instance (`R B m k` header, then `r b` lines).
        #[arg(long)]
        rbds: PathBuf,
        /// Output graph file.
        #[arg(long)]
        out: PathBuf,
        /// Output geometry JSON.
        #[arg(long)]
        layout: Option<PathBuf>,
    },
    /// Run every engine over a corpus and report verdict disagreements.
    CrossValidate {
        /// Directory containing `manifest.csv` (lines `file,l,p`).
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Emit benchmark records as CSV.
    Bench {
        /// One of: stars, cycles, random, gadgets, all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Measure wall time (off by default so output is reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Check a coloring file against a graph and a target edge count.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        p: usize,
    },
}

/// Fresh per-run budget honouring the `ECK_BUDGET_MS` deadline if set.
fn budget() -> WorkBudget {
    match std::env::var("ECK_BUDGET_MS").ok().and_then(|s| s.parse::<u64>().ok()) {
        Some(ms) => WorkBudget::new(u64::MAX, Some(Instant::now() + Duration::from_millis(ms))),
        None => WorkBudget::unlimited(),
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_graph(&text)?)
}

fn run_engine(
    engine: Engine,
    inst: &MecsInstance,
    seed: u64,
    rounds_factor: f64,
    vc_cap: usize,
) -> eck_core::Result<MecsSolution> {
    let mut b = budget();
    match engine {
        Engine::Oracle => solve_exact_capped_with(inst, EXACT_EDGE_CAP, &mut b),
        Engine::DivideColor => {
            let cfg = DivideColorConfig { rounds_factor, ..DivideColorConfig::default() };
            divide_and_color_config(inst, seed, &cfg, &mut b)
        }
        Engine::Rainbow => solve_via_rainbow_with(inst, RAINBOW_K_CAP, &mut b),
        Engine::Ilp => solve_via_ilp_with(inst, vc_cap, &mut b),
    }
}

/// Renders the verdict and coloring, re-verifying the witness first; the
/// CLI never emits an unchecked witness.
fn solution_report(g: &Graph, l: usize, sol: &MecsSolution) -> Result<String> {
    let mut out = String::new();
    if sol.verdict {
        let w = sol
            .witness
            .as_ref()
            .ok_or_else(|| anyhow!("engine returned YES without a witness"))?;
        verify_coloring(g, w).map_err(|e| anyhow!("engine produced an invalid witness: {e}"))?;
        if w.colored_count() < l {
            bail!("engine witness covers {} edges, target was {l}", w.colored_count());
        }
        out.push_str("YES\n");
        if let Some(o) = sol.optimum {
            let _ = writeln!(out, "# optimum {o}");
        }
        out.push_str(&print_coloring(g, w));
    } else {
        out.push_str("NO\n");
        if let Some(o) = sol.optimum {
            let _ = writeln!(out, "# optimum {o}");
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    graph: PathBuf,
    engine: Engine,
    l: usize,
    p: usize,
    seed: u64,
    rounds_factor: f64,
    vc_cap: usize,
    dump_lp: Option<PathBuf>,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    if p == 0 {
        bail!("p must be at least 1");
    }
    let g = read_graph(&graph)?;
    let inst = MecsInstance::new(g, l, p);

    if let Some(path) = dump_lp {
        if engine != Engine::Ilp {
            bail!("--dump-lp only applies to the ilp engine");
        }
        let cover = min_vertex_cover_capped(&inst.graph, vc_cap)?;
        let types = enumerate_types(&inst.graph, &cover)?;
        let aux = aux_functions(&inst.graph, &cover);
        let guess = PartialGuess { h_prime: vec![], p0: 0, phi_prime: vec![], p };
        let model = build_ilp(&guess, &types, &aux);
        fs::write(&path, render_lp(&model, &types))
            .with_context(|| format!("writing {}", path.display()))?;
    }

    let sol = run_engine(engine, &inst, seed, rounds_factor, vc_cap)?;
    let report = solution_report(&inst.graph, l, &sol)?;
    if let Some(path) = out {
        fs::write(&path, &report).with_context(|| format!("writing {}", path.display()))?;
    }
    print!("{report}");
    Ok(ExitCode::from(if sol.verdict { 0 } else { 1 }))
}

fn early_name(e: &Option<EarlyOutcome>) -> &'static str {
    match e {
        None => "none",
        Some(EarlyOutcome::PrecheckYes) => "precheck-yes",
        Some(EarlyOutcome::SingleColorExact { .. }) => "single-color",
        Some(EarlyOutcome::BoundFallback { .. }) => "bound-fallback",
    }
}

fn cmd_kernelize(
    input: PathBuf,
    l: usize,
    p: usize,
    trace_path: Option<PathBuf>,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    if p == 0 {
        bail!("p must be at least 1");
    }
    let g = read_graph(&input)?;
    let inst = MecsInstance::new(g, l, p);
    let trace: KernelTrace = kernelize_with(&inst, &mut budget())?;
    if let Some(path) = &trace_path {
        let json = serde_json::to_string_pretty(&trace)?;
        fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &out {
        fs::write(path, print_graph(&trace.final_instance.graph))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let f = &trace.final_instance;
    println!(
        "kernel: n={} m={} l={} p={} steps={} early={}",
        f.graph.n(),
        f.graph.m(),
        f.l,
        f.p,
        trace.steps.len(),
        early_name(&trace.early),
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce_rainbow(graph: PathBuf, l: usize, p: usize, out: Option<PathBuf>) -> Result<ExitCode> {
    if p == 0 {
        bail!("p must be at least 1");
    }
    let g = read_graph(&graph)?;
    let inst = MecsInstance::new(g, l, p);
    let ri = reduce_to_rainbow(&inst);
    let text = format!("# rainbow target k = {}\n{}", ri.k, print_labeled_graph(&ri.lg));
    match out {
        Some(path) => fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen_gadget(rbds: PathBuf, out: PathBuf, layout_path: Option<PathBuf>) -> Result<ExitCode> {
    let text = fs::read_to_string(&rbds).with_context(|| format!("reading {}", rbds.display()))?;
    let inst = parse_rbds(&text)?;
    let mut red_seen = vec![false; inst.red_count];
    let mut blue_seen = vec![false; inst.blue_count];
    for &(r, b) in &inst.edges {
        red_seen[r] = true;
        blue_seen[b] = true;
    }
    if let Some(r) = red_seen.iter().position(|&s| !s) {
        bail!("red vertex {r} has no edge; the reduction needs every vertex attached");
    }
    if let Some(b) = blue_seen.iter().position(|&s| !s) {
        bail!("blue vertex {b} has no edge; the reduction needs every vertex attached");
    }
    let layout = reduce_rbds(&inst);
    fs::write(&out, print_graph(&layout.mecs.graph))
        .with_context(|| format!("writing {}", out.display()))?;
    if let Some(path) = &layout_path {
        let json = serde_json::to_string_pretty(&layout)?;
        fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    println!(
        "gadget: n={} m={} l={} p={}",
        layout.mecs.graph.n(),
        layout.mecs.graph.m(),
        layout.mecs.l,
        layout.mecs.p
    );
    Ok(ExitCode::SUCCESS)
}

fn yn(v: bool) -> &'static str {
    if v {
        "YES"
    } else {
        "NO"
    }
}

fn cmd_cross_validate(corpus: PathBuf, seed: u64) -> Result<ExitCode> {
    let manifest = corpus.join("manifest.csv");
    let text = fs::read_to_string(&manifest)
        .with_context(|| format!("reading {}", manifest.display()))?;
    let mut checked = 0usize;
    let mut skipped = 0usize;
    let mut disagreements = 0usize;
    let mut divide_misses = 0usize;

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            bail!("manifest line {}: expected `file,l,p`, got `{line}`", lineno + 1);
        }
        let file = parts[0];
        let l: usize = parts[1].parse().with_context(|| format!("manifest line {}: bad l", lineno + 1))?;
        let p: usize = parts[2].parse().with_context(|| format!("manifest line {}: bad p", lineno + 1))?;
        let g = read_graph(&corpus.join(file))?;
        let inst = MecsInstance::new(g, l, p);

        let oracle = match solve_exact_capped_with(&inst, EXACT_EDGE_CAP, &mut budget()) {
            Ok(s) => s,
            Err(EckError::TooLarge(_)) | Err(EckError::Budget(_)) => {
                println!("{file} l={l} p={p} SKIP (exact reference unavailable)");
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let want = oracle.verdict;
        let mut line = format!("{file} l={l} p={p} oracle={}", yn(want));
        let mut disagreed = false;

        match solve_via_rainbow_with(&inst, RAINBOW_K_CAP, &mut budget()) {
            Ok(s) => {
                let _ = write!(line, " rainbow={}", yn(s.verdict));
                disagreed |= s.verdict != want;
            }
            Err(EckError::Budget(_)) => line.push_str(" rainbow=BUDGET"),
            Err(e) => return Err(e.into()),
        }

        match solve_via_ilp_with(&inst, DEFAULT_VC_CAP, &mut budget()) {
            Ok(s) => {
                let _ = write!(line, " ilp={}", yn(s.verdict));
                disagreed |= s.verdict != want;
            }
            Err(EckError::Budget(_)) | Err(EckError::TooManyTypes(_)) => line.push_str(" ilp=BUDGET"),
            Err(e) => return Err(e.into()),
        }

        let trace = kernelize_with(&inst, &mut budget())?;
        match solve_exact_capped_with(&trace.final_instance, EXACT_EDGE_CAP, &mut budget()) {
            Ok(s) => {
                let _ = write!(line, " kernel={}", yn(s.verdict));
                disagreed |= s.verdict != want;
            }
            Err(EckError::TooLarge(_)) | Err(EckError::Budget(_)) => line.push_str(" kernel=BUDGET"),
            Err(e) => return Err(e.into()),
        }

        match divide_and_color_config(&inst, seed, &DivideColorConfig::default(), &mut budget()) {
            Ok(s) => {
                if s.verdict && !want {
                    line.push_str(" divide=YES");
                    disagreed = true; // a YES from the one-sided engine must be real
                } else if !s.verdict && want {
                    line.push_str(" divide=NO[miss]");
                    divide_misses += 1;
                } else {
                    let _ = write!(line, " divide={}", yn(s.verdict));
                }
            }
            Err(EckError::Budget(_)) => line.push_str(" divide=BUDGET"),
            Err(e) => return Err(e.into()),
        }

        if disagreed {
            line.push_str(" DISAGREE");
            disagreements += 1;
        }
        println!("{line}");
        checked += 1;
    }

    println!(
        "checked={checked} skipped={skipped} disagreements={disagreements} divide-misses={divide_misses}"
    );
    Ok(ExitCode::from(if disagreements > 0 { 1 } else { 0 }))
}

struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

struct BenchWriter {
    csv: String,
    timing: bool,
    seed: u64,
}

impl BenchWriter {
    fn new(timing: bool, seed: u64) -> Self {
        BenchWriter {
            csv: "instance,n,m,l,p,engine,verdict,optimum,witness_size,kernel_vertices,kernel_bound,wall_ms,seed\n".into(),
            timing,
            seed,
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn row(
        &mut self,
        instance: &str,
        inst: &MecsInstance,
        engine: &str,
        verdict: &str,
        optimum: Option<usize>,
        witness_size: usize,
        kernel_vertices: Option<usize>,
        kernel_bound: Option<usize>,
        wall_ms: u128,
    ) {
        let opt = optimum.map(|o| o.to_string()).unwrap_or_default();
        let kv = kernel_vertices.map(|v| v.to_string()).unwrap_or_default();
        let kb = kernel_bound.map(|v| v.to_string()).unwrap_or_default();
        let _ = writeln!(
            self.csv,
            "{instance},{},{},{},{},{engine},{verdict},{opt},{witness_size},{kv},{kb},{wall_ms},{}",
            inst.graph.n(),
            inst.graph.m(),
            inst.l,
            inst.p,
            self.seed,
        );
    }

    /// Runs one engine and appends its record; budget errors become BUDGET.
    fn engine_row(&mut self, instance: &str, inst: &MecsInstance, engine: Engine, seed: u64) {
        let start = Instant::now();
        let result = run_engine(engine, inst, seed, 1.0, DEFAULT_VC_CAP);
        let wall = if self.timing { start.elapsed().as_millis() } else { 0 };
        match result {
            Ok(sol) => {
                let ws = sol.witness.as_ref().map(|w| w.colored_count()).unwrap_or(0);
                self.row(instance, inst, engine.name(), yn(sol.verdict), sol.optimum, ws, None, None, wall);
            }
            Err(_) => {
                self.row(instance, inst, engine.name(), "BUDGET", None, 0, None, None, wall);
            }
        }
    }

    /// Kernelizes, then settles the kernel exactly; records the size bound.
    fn kernel_row(&mut self, instance: &str, inst: &MecsInstance) -> Result<()> {
        let start = Instant::now();
        let trace = kernelize_with(inst, &mut budget())?;
        let verdict = match solve_exact_capped_with(&trace.final_instance, EXACT_EDGE_CAP, &mut budget()) {
            Ok(s) => yn(s.verdict),
            Err(_) => "BUDGET",
        };
        let wall = if self.timing { start.elapsed().as_millis() } else { 0 };
        let bound = trace.modulator.as_ref().map(|x| (inst.p + 1) * x.len());
        self.row(
            instance,
            inst,
            "kernel",
            verdict,
            None,
            0,
            Some(trace.final_instance.graph.n()),
            bound,
            wall,
        );
        Ok(())
    }
}

fn star_graph(leaves: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
    Graph::from_edges(n, &edges)
}

fn cmd_bench(suite: String, out: Option<PathBuf>, seed: u64, timing: bool) -> Result<ExitCode> {
    let known = ["stars", "cycles", "random", "gadgets", "all"];
    if !known.contains(&suite.as_str()) {
        bail!("unknown suite `{suite}`; expected one of {known:?}");
    }
    let all = suite == "all";
    let mut w = BenchWriter::new(timing, seed);

    if all || suite == "stars" {
        // Kernel sweep: stars have a one-vertex modulator, so the kernel
        // must shrink to ≤ (p+1)·|X| vertices no matter how many leaves.
        for t in 2..=8 {
            let inst = MecsInstance::new(star_graph(t), t, 2);
            let name = format!("star-{t}");
            w.kernel_row(&name, &inst)?;
            w.engine_row(&name, &inst, Engine::Oracle, seed);
        }
    }
    if all || suite == "cycles" {
        for n in 3..=9 {
            let inst = MecsInstance::new(cycle_graph(n), n - 1, 2);
            let name = format!("cycle-{n}");
            w.engine_row(&name, &inst, Engine::Oracle, seed);
            w.engine_row(&name, &inst, Engine::Rainbow, seed);
        }
    }
    if all || suite == "random" {
        let mut rng = SplitMix(seed.wrapping_add(0xa076_1d64_78bd_642f));
        let mut made = 0;
        while made < 6 {
            let n = 4 + rng.below(4);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.below(100) < 45 {
                        g.add_edge(u, v);
                    }
                }
            }
            if g.m() == 0 || g.m() > 12 {
                continue;
            }
            let p = 2 + made % 2;
            let l = (2 * g.m() / 3).clamp(1, 8);
            let inst = MecsInstance::new(g, l, p);
            let name = format!("rand-{made}");
            w.engine_row(&name, &inst, Engine::Oracle, seed);
            w.engine_row(&name, &inst, Engine::Rainbow, seed);
            w.engine_row(&name, &inst, Engine::Ilp, seed);
            w.engine_row(&name, &inst, Engine::DivideColor, seed);
            made += 1;
        }
    }
    if all || suite == "gadgets" {
        let rbds = eck_core::formats::RbdsInstance {
            red_count: 1,
            blue_count: 1,
            edges: vec![(0, 0)],
            k: 1,
        };
        let layout = reduce_rbds(&rbds);
        for k in [0usize, 1] {
            let g = layout.mecs.graph.clone();
            let m = g.m();
            let inst = MecsInstance::new(g, m - k, 3);
            let start = Instant::now();
            let verdict = match delete_and_color(&inst.graph, k, &mut budget()) {
                Ok((yes, _)) => yn(yes),
                Err(_) => "BUDGET",
            };
            let wall = if timing { start.elapsed().as_millis() } else { 0 };
            let name = format!("gadget-1edge-k{k}");
            w.row(&name, &inst, "delete-color", verdict, None, 0, None, None, wall);
        }
    }

    match out {
        Some(path) => fs::write(&path, &w.csv).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{}", w.csv),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(graph: PathBuf, coloring: PathBuf, l: usize, p: usize) -> Result<ExitCode> {
    if p == 0 {
        bail!("p must be at least 1");
    }
    let g = read_graph(&graph)?;
    let text = fs::read_to_string(&coloring)
        .with_context(|| format!("reading {}", coloring.display()))?;
    let c = parse_coloring(&text, &g, p)?;
    match verify_coloring(&g, &c) {
        Ok(()) => {
            let count = c.colored_count();
            if count >= l {
                println!("valid: {count} edges colored (target {l})");
                Ok(ExitCode::from(0))
            } else {
                println!("invalid: only {count} edges colored (target {l})");
                Ok(ExitCode::from(1))
            }
        }
        Err(reason) => {
            println!("invalid: {reason}");
            Ok(ExitCode::from(1))
        }
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Solve { graph, engine, l, p, seed, rounds_factor, vc_cap, dump_lp, out } => {
            cmd_solve(graph, engine, l, p, seed, rounds_factor, vc_cap, dump_lp, out)
        }
        Cmd::Kernelize { input, l, p, trace, out } => cmd_kernelize(input, l, p, trace, out),
        Cmd::ReduceRainbow { graph, l, p, out } => cmd_reduce_rainbow(graph, l, p, out),
        Cmd::GenGadget { rbds, out, layout } => cmd_gen_gadget(rbds, out, layout),
        Cmd::CrossValidate { corpus, seed } => cmd_cross_validate(corpus, seed),
        Cmd::Bench { suite, out, seed, timing } => cmd_bench(suite, out, seed, timing),
        Cmd::Verify { graph, coloring, l, p } => cmd_verify(graph, coloring, l, p),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
