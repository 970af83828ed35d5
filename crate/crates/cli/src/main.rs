use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use multispec::carnot::{algebra_from_json, catalog, polynomial_derham, CATALOG};
use multispec::format::{read_file, to_json};
use multispec::oracle::{classical_pages, compare};
use multispec::report::{star_verdict, Report, ReportOptions};
use multispec::rumin::Rumin;
use multispec::spectral::Spectral;
use multispec::Multicomplex;

#[derive(Parser)]
#[command(name = "multispec", version, about = "Rumin complexes and spectral-sequence complexes of multicomplexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a multicomplex file is well formed and satisfies the relations.
    Validate { file: PathBuf },
    /// Harmonic spaces, nonzero d_c^r blocks and cohomology.
    Rumin { file: PathBuf },
    /// Enumerate the spectral complexes.
    Spectral {
        file: PathBuf,
        #[arg(long, default_value_t = 256)]
        max_chains: usize,
        /// Also print dim Z_r - dim B_r for r = 1..=R.
        #[arg(long)]
        pages: Option<usize>,
    },
    /// Compare against the classical filtration spectral sequence.
    Oracle { file: PathBuf },
    /// Hodge-star duality checks for exterior-algebra instances.
    Star { file: PathBuf },
    /// Full report.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the truncated de Rham multicomplex of a named algebra or an
    /// algebra JSON file.
    Catalog {
        name: String,
        #[arg(long, default_value_t = 3)]
        poly_degree: u32,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

fn load(path: &Path) -> Result<Multicomplex, String> {
    read_file(path).map_err(|e| e.to_string())
}

fn name_of(path: &Path) -> String {
    path.file_stem().map_or_else(|| "instance".into(), |s| s.to_string_lossy().into_owned())
}

fn cmd_validate(path: &Path) -> Result<bool, String> {
    let mc = load(path)?;
    let (lo, hi) = mc.degree_range().unwrap_or((0, -1));
    println!(
        "valid: Q = {}, s = {}, {} spaces, total dimension {}, degrees {lo}..{hi}",
        mc.q(),
        mc.s(),
        mc.spaces().len(),
        mc.total_dim()
    );
    Ok(true)
}

fn cmd_rumin(path: &Path) -> Result<bool, String> {
    let mc = load(path)?;
    let rumin = Rumin::build(&mc);
    let spectral = Spectral::new(&rumin);
    println!("harmonic spaces and nonzero d_c^r:");
    for k in rumin.degrees() {
        for p in spectral.weights(k) {
            let dim = rumin.e0(p, k).dim();
            if dim > 0 {
                let orders: Vec<String> = spectral
                    .index_set(p, k)
                    .into_iter()
                    .map(|j| format!("d_c^{j} rank {}", rumin.dc_block(j, p, k).rank()))
                    .collect();
                println!("  k={k} p={p} dim {dim}  {}", orders.join(", "));
            }
        }
    }
    let total = mc.total_cohomology();
    println!("cohomology (k: Rumin / total):");
    for (k, h) in rumin.cohomology() {
        println!("  {k}: {h} / {}", total.get(&k).copied().unwrap_or(0));
    }
    let checks = rumin.check();
    for f in &checks.failures {
        println!("identity fails: {f}");
    }
    Ok(checks.ok())
}

fn cmd_spectral(path: &Path, max_chains: usize, pages: Option<usize>) -> Result<bool, String> {
    let mc = load(path)?;
    let report = Report::build(&mc, &name_of(path), &ReportOptions { max_chains, oracle: false, star: false });
    let text = report.to_text();
    let start = text.find("spectral complexes").unwrap_or(0);
    let end = text.find("\ncohomology").unwrap_or(text.len());
    print!("{}", &text[start..end]);
    if let Some(r_max) = pages {
        let rumin = Rumin::build(&mc);
        let spectral = Spectral::new(&rumin);
        println!("\npage dimensions (k, p: r = 1..={r_max}):");
        for k in rumin.degrees() {
            for p in spectral.weights(k) {
                let dims: Vec<String> = (1..=r_max).map(|r| spectral.page_dim(r, p, k).to_string()).collect();
                println!("  {k}, {p}: {}", dims.join(" "));
            }
        }
    }
    Ok(report.chains.iter().all(|c| c.delta_squared_zero))
}

fn cmd_oracle(path: &Path) -> Result<bool, String> {
    let mc = load(path)?;
    let rumin = Rumin::build(&mc);
    let spectral = Spectral::new(&rumin);
    let pages = classical_pages(&mc, spectral.r_infinity());
    let mismatches = compare(&pages, &spectral);
    let recursion = pages.recursion_failures();
    for m in &mismatches {
        println!("{} at r={}, p={}, k={}: engine {}, oracle {}", m.what, m.r, m.p, m.h, m.engine, m.oracle);
    }
    for (r, p, h) in &recursion {
        println!("page recursion fails at r={r}, p={p}, k={h}");
    }
    let ok = mismatches.is_empty() && recursion.is_empty();
    if ok {
        println!("all pages match ({} cells, r <= {})", pages.dims.len(), spectral.r_infinity());
    }
    Ok(ok)
}

fn cmd_star(path: &Path) -> Result<bool, String> {
    let mc = load(path)?;
    let rumin = Rumin::build(&mc);
    let spectral = Spectral::new(&rumin);
    let en = spectral.enumerate(256);
    let verdict = star_verdict(&mc, &rumin, &spectral, &en)
        .ok_or_else(|| "the multicomplex carries no exterior-algebra structure".to_string())?;
    println!("⋆⋆ sign law: {}", verdict.star_squared);
    println!("isometry: {}", verdict.isometry);
    println!("E_0 closure: {}", verdict.e0_closure);
    println!("δ_i failing orders: {:?}", verdict.delta_failures);
    println!("δ_c^i failing orders: {:?}", verdict.delta_c_failures);
    for m in &verdict.station_mismatches {
        println!("{m}");
    }
    println!("star duality {}", if verdict.ok() { "holds" } else { "fails" });
    Ok(verdict.ok())
}

fn cmd_report(path: &Path, format: Format) -> Result<bool, String> {
    let mc = load(path)?;
    let report = Report::build(&mc, &name_of(path), &ReportOptions::default());
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
        Format::Dot => print!("{}", report.to_dot()),
    }
    Ok(true)
}

fn cmd_catalog(name: &str, poly_degree: u32, emit: Option<&Path>) -> Result<bool, String> {
    let spec = if name.ends_with(".json") {
        let text = std::fs::read_to_string(name).map_err(|e| format!("{name}: {e}"))?;
        algebra_from_json(&text).map_err(|e| e.to_string())?
    } else {
        catalog(name, poly_degree).map_err(|e| e.to_string())?
    };
    let mc = polynomial_derham(&spec).map_err(|e| e.to_string())?;
    let json = to_json(&mc);
    match emit {
        Some(path) => {
            std::fs::write(path, json + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
            println!(
                "wrote {} (Q = {}, total dimension {})",
                path.display(),
                mc.q(),
                mc.total_dim()
            );
        }
        None => println!("{json}"),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate { file } => cmd_validate(file),
        Command::Rumin { file } => cmd_rumin(file),
        Command::Spectral { file, max_chains, pages } => cmd_spectral(file, *max_chains, *pages),
        Command::Oracle { file } => cmd_oracle(file),
        Command::Star { file } => cmd_star(file),
        Command::Report { file, format } => cmd_report(file, *format),
        Command::Catalog { name, poly_degree, emit } => {
            if name == "list" {
                println!("{}", CATALOG.join("\n"));
                Ok(true)
            } else {
                cmd_catalog(name, *poly_degree, emit.as_deref())
            }
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
