use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use czkit::admissibility::{check_admissibility, Verdict, DEFAULT_DEPTH};
use czkit::experiments::{run_experiment, LabConfig, EXPERIMENTS};
use czkit::identities::{run_identity_suite, SuiteConfig};
use czkit::kernel::KernelSpec;
use czkit::lab::{
    beurling_maximal, beurling_sq_maximal, beurling_sq_truncated, beurling_truncated, hardy_littlewood,
    hilbert_maximal, hilbert_pv, hilbert_truncated, iterated_m2, m_delta, m_llogl, m_sharp, Grid1d, Grid2d,
    TruncationGrid,
};

#[derive(Parser)]
#[command(name = "czkit", about = "Maximal singular integral toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide admissibility of an odd polynomial kernel file.
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: u32,
        /// Also print a `key=value` block.
        #[arg(long)]
        kv: bool,
    },
    /// Run the exact identity suite.
    Identities {
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        #[arg(long = "N-max", default_value_t = 6)]
        big_n_max: u32,
    },
    /// Run a numerical experiment (or `all`) and write its CSV files.
    Exp {
        name: String,
        #[arg(long, default_value = "out")]
        out: PathBuf,
        #[arg(long)]
        mesh: Option<f64>,
        #[arg(long)]
        window: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Evaluate one operator on a grid function loaded from CSV.
    Eval {
        op: Operator,
        file: PathBuf,
        /// Evaluation point: `x` in 1D, `x,y` in 2D.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        /// Truncation radius for truncated operators, `δ` for `m-delta`.
        #[arg(long)]
        eps: Option<f64>,
    },
    Version,
}

#[derive(Clone, Copy, ValueEnum)]
enum Operator {
    HilbertTruncated,
    HilbertMaximal,
    HilbertPv,
    M,
    M2,
    MDelta,
    MSharp,
    MLlogl,
    BeurlingTruncated,
    BeurlingSqTruncated,
    BeurlingMaximal,
    BeurlingSqMaximal,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("CZKIT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> czkit::Result<bool> {
    match cmd {
        Command::Check { file, depth, kv } => {
            let k = KernelSpec::load(&file)?;
            let report = check_admissibility(&k, depth)?;
            println!("{report}");
            if kv {
                println!();
                for (key, v) in report.key_values() {
                    println!("{key}={v}");
                }
            }
            Ok(report.verdict == Verdict::Pass)
        }
        Command::Identities { n_max, big_n_max } => {
            let cfg = SuiteConfig { n_max, big_n_max, ..SuiteConfig::default() };
            let checks = run_identity_suite(&cfg);
            for c in &checks {
                println!("{c}");
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            println!("{} checks, {failed} failed", checks.len());
            Ok(failed == 0)
        }
        Command::Exp { name, out, mesh, window, seed } => {
            let mut cfg = LabConfig::default();
            cfg.mesh = mesh.unwrap_or(cfg.mesh);
            cfg.window = window.unwrap_or(cfg.window);
            cfg.seed = seed.unwrap_or(cfg.seed);
            let names: Vec<&str> = if name == "all" { EXPERIMENTS.to_vec() } else { vec![name.as_str()] };
            let mut ok = true;
            for n in names {
                let res = run_experiment(n, &cfg)?;
                for path in res.write_csv(&out)? {
                    println!("wrote {}", path.display());
                }
                for (k, v) in &res.summary {
                    println!("  {k} = {v:.6e}");
                }
                for (k, pass) in &res.checks {
                    println!("{} {}/{k}", if *pass { "PASS" } else { "FAIL" }, res.name);
                }
                ok &= res.passed();
            }
            Ok(ok)
        }
        Command::Eval { op, file, at, eps } => {
            println!("{}", eval(op, &file, &at, eps)?);
            Ok(true)
        }
        Command::Version => {
            println!("czkit {}", env!("CARGO_PKG_VERSION"));
            Ok(true)
        }
    }
}

fn parse_point(s: &str) -> czkit::Result<Vec<f64>> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| czkit::Error::OutOfRange(format!("bad coordinate `{t}`"))))
        .collect()
}

fn need_eps(eps: Option<f64>) -> czkit::Result<f64> {
    eps.filter(|e| *e > 0.0).ok_or_else(|| czkit::Error::OutOfRange("--eps must be a positive number".into()))
}

fn eval(op: Operator, file: &Path, at: &str, eps: Option<f64>) -> czkit::Result<String> {
    use Operator::*;
    let p = parse_point(at)?;
    match op {
        HilbertTruncated | HilbertMaximal | HilbertPv | M | M2 | MDelta | MSharp | MLlogl => {
            let [x] = p[..] else {
                return Err(czkit::Error::OutOfRange("1D operators take `--at x`".into()));
            };
            let f = Grid1d::load_csv(file)?;
            let cells = f.to_cells();
            let v = match op {
                HilbertTruncated => hilbert_truncated(&f, x, need_eps(eps)?),
                HilbertMaximal => {
                    let grid = TruncationGrid::for_grid(f.mesh(), f.end() - f.origin() + (x - f.origin()).abs());
                    hilbert_maximal(&f, x, &grid)
                }
                HilbertPv => hilbert_pv(&f, x).unwrap_or(f64::INFINITY),
                M => hardy_littlewood(&cells, x),
                M2 => iterated_m2(&cells, x),
                MDelta => m_delta(&cells, x, eps.unwrap_or(0.5)),
                MSharp => m_sharp(&cells, x),
                _ => m_llogl(&cells, x),
            };
            Ok(format!("{v:.16e}"))
        }
        BeurlingTruncated | BeurlingSqTruncated | BeurlingMaximal | BeurlingSqMaximal => {
            let [x, y] = p[..] else {
                return Err(czkit::Error::OutOfRange("2D operators take `--at x,y`".into()));
            };
            let g = Grid2d::load_csv(file)?;
            let z = Complex64::new(x, y);
            let (nx, ny) = g.shape();
            let diam = g.mesh() * (nx.max(ny) as f64) + z.norm();
            let grid = TruncationGrid::for_grid(g.mesh(), 2.0 * diam);
            let v = match op {
                BeurlingTruncated => beurling_truncated(&g, z, need_eps(eps)?),
                BeurlingSqTruncated => beurling_sq_truncated(&g, z, need_eps(eps)?),
                BeurlingMaximal => return Ok(format!("{:.16e}", beurling_maximal(&g, z, &grid))),
                _ => return Ok(format!("{:.16e}", beurling_sq_maximal(&g, z, &grid))),
            };
            Ok(format!("{:.16e} {:.16e}", v.re, v.im))
        }
    }
}
