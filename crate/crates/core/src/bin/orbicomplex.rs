use clap::{Parser, Subcommand};
use orbicomplex::census::{run_census, CensusOptions};
use orbicomplex::normal::{is_essential_sphere, reconstruct, vertex_solutions};
use orbicomplex::orbtri::{format, validate, OrbifoldTriangulation};
use orbicomplex::recognize::recognize;
use orbicomplex::simplify::DEFAULT_BUDGET;
use orbicomplex::spine::{complexity_weight, exceptional_complexity};
use orbicomplex::surgery::{additivity_predict, efficient_split_with, estimate_bounds, Leaf, SplitOptions};
use orbicomplex::{OrbError, Result};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "orbicomplex", version, about = "Complexity of closed orientable 3-orbifolds")]
struct Cli {
    /// Seed for tie-breaking among equal-weight splitting spheres.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Move budget for each simplification attempt.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate decorated triangulations and tabulate classes by complexity.
    Census {
        #[arg(long)]
        max_tets: usize,
        #[arg(long, default_value_t = 1)]
        max_order: u32,
        #[arg(long)]
        max_weight: u64,
        /// Results file; resumed if a matching checkpoint exists.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Stop after this many new entries.
        #[arg(long)]
        max_entries: Option<usize>,
    },
    /// Print the complexity weight of the dual spine.
    Complexity { file: PathBuf },
    /// Split into irreducible summands.
    Split { file: PathBuf },
    /// List spherical vertex normal surfaces and their essentiality.
    Spheres { file: PathBuf },
    /// Run the structural checks.
    Validate { file: PathBuf },
}

fn load(path: &Path) -> Result<OrbifoldTriangulation> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| OrbError::Invalid(format!("{}: {e}", path.display())))?;
    format::parse(&text)
}

fn split_options(cli: &Cli) -> SplitOptions {
    SplitOptions {
        seed: cli.seed,
        budget: cli.budget,
        ..SplitOptions::default()
    }
}

fn census(cli: &Cli) -> Result<()> {
    let Command::Census { max_tets, max_order, max_weight, output, threads, max_entries } = &cli.command else {
        unreachable!()
    };
    let mut opts = CensusOptions::new(*max_tets, *max_order, *max_weight);
    opts.split = split_options(cli);
    opts.threads = *threads;
    opts.max_entries = *max_entries;
    let run = run_census(&opts, output.as_deref())?;
    let t = &run.table;
    println!("entries\t{}", t.entries.len());
    println!("classes\t{}", t.classes.len());
    if !run.complete {
        println!("stopped early; rerun to resume");
    }
    println!("# complexity\tclass\tmembers\tmin_weight\tirreducible");
    for c in &t.classes {
        let value = if c.complexity.upper_bound_only {
            format!("<={}", c.complexity.value)
        } else {
            c.complexity.value.to_string()
        };
        println!("{value}\t{}\t{}\t{}\t{}", c.class, c.members, c.min_weight, c.irreducible);
    }
    Ok(())
}

fn complexity(tri: &OrbifoldTriangulation, budget: usize) -> Result<()> {
    validate(tri).into_result()?;
    let w = complexity_weight(tri);
    println!("vertexCount\t{}", w.vertex_count);
    println!("singularContribution\t{}", w.singular_contribution);
    println!("total\t{}", w.total());
    if let (_, Some(kind)) = recognize(tri, budget)? {
        println!("recognized\t{kind}\tc={}", exceptional_complexity(kind)?);
    }
    Ok(())
}

fn split(tri: &OrbifoldTriangulation, opts: &SplitOptions) -> Result<()> {
    let r = efficient_split_with(tri, opts)?;
    println!("system");
    for (class, w) in &r.system {
        println!("  {class:?}\tweight {w}");
    }
    println!("summands");
    let mut known = Vec::new();
    for s in &r.summands {
        let c = match s.kind {
            Some(k) => Some(exceptional_complexity(k)?),
            None => None,
        };
        known.push(c);
        let name = match s.leaf() {
            Leaf::Exceptional(k) => k.to_string(),
            Leaf::Signature(sig) => sig,
        };
        let c = c.map_or("?".to_string(), |c| c.to_string());
        println!("  {name}\ttets {}\tc {c}", s.tri.tet_count());
    }
    println!("sums");
    for (k, a, b) in &r.expression.sums {
        println!("  {k:?}\t{a} {b}");
    }
    let canon = if r.nu_is_canonical() { "" } else { " (not canonical: vertex sums present)" };
    println!("nu{canon}");
    for (p, n) in r.nu() {
        println!("  {p}\t{n}");
    }
    if r.incomplete {
        println!("incomplete\tsome spheres undecided within budget");
    }
    println!("weight of input\t{}", complexity_weight(tri).total());
    if let Some(cs) = known.iter().copied().collect::<Option<Vec<u64>>>() {
        if r.expression.has_vertex_sums() {
            let (lo, hi) = estimate_bounds(&r.expression, &cs)?;
            println!("estimate\t[{lo}, {hi}]");
        } else {
            println!("predicted\t{}", additivity_predict(&r.expression, &cs)?);
        }
    } else {
        println!("predicted\tunavailable: some summand complexities are unknown");
    }
    Ok(())
}

fn spheres(tri: &OrbifoldTriangulation) -> Result<()> {
    validate(tri).into_result()?;
    for c in vertex_solutions(tri, None)? {
        let surf = reconstruct(tri, &c)?;
        let [comp] = &surf.components[..] else { continue };
        if !comp.is_sphere() {
            continue;
        }
        let verdict = if comp.class.is_spherical() && comp.separating {
            format!("{:?}", is_essential_sphere(tri, &c)?)
        } else {
            "-".into()
        };
        let link = comp.vertex_link.map_or(String::new(), |v| format!("\tlink of vertex {v}"));
        println!("{:?}\t{:?}\tweight {}\t{verdict}{link}", c.as_slice(), comp.class, c.weight(tri));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Census { .. } => census(cli),
        Command::Complexity { file } => complexity(&load(file)?, cli.budget),
        Command::Split { file } => split(&load(file)?, &split_options(cli)),
        Command::Spheres { file } => spheres(&load(file)?),
        Command::Validate { file } => {
            let report = validate(&load(file)?);
            for c in &report.checks {
                let mark = if c.passed { "ok" } else { "FAIL" };
                println!("{mark}\t{}\t{}", c.name, c.detail);
            }
            if report.is_valid() {
                Ok(())
            } else {
                Err(OrbError::Invalid("validation failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
