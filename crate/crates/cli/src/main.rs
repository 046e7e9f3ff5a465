use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use gridpath::bounds::bound_report;
use gridpath::constructions::{
    check_path, circuit_f222, conclusion_path_222, m_path, minimize_aabb_volume, pbar_path,
    pbarbar_path, s5_solve, CircuitVariant, EpsilonPathParams, DEFAULT_S5_X,
};
use gridpath::geom::{set_default_eps, tight_aabb};
use gridpath::iox::{export_figure, read_chain, write_chain, Projection};
use gridpath::mlai::generate_line;
use gridpath::{
    generate_mlai, maabb, raabb, verify_with, Aabb, Chain, ChainKind, GridSpec, VerifyOptions,
};

/// Build and check covering paths of k-dimensional point grids.
#[derive(Parser)]
#[command(name = "gridpath", version)]
struct Cli {
    /// Geometric tolerance in grid units (must precede the subcommand).
    #[arg(long, env = "GRIDPATH_EPS")]
    eps: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a chain document.
    Gen {
        #[command(subcommand)]
        what: Gen,
    },
    /// Verify a chain document and print the report as JSON.
    Verify {
        /// Chain document, or - for standard input.
        file: PathBuf,
        /// Grid dimensions, e.g. 3,3,3.
        #[arg(long, value_delimiter = ',', required = true)]
        grid: Vec<usize>,
        /// maabb, raabb, tight, or custom followed by LO..HI for each axis.
        #[arg(long = "box", num_args = 1.., required = true)]
        bbox: Vec<String>,
        /// Verify as this kind instead of the kind in the document.
        #[arg(long)]
        mode: Option<Mode>,
    },
    /// Print the link-count bounds for a grid.
    Bounds {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
    /// Render a chain document as SVG.
    Export {
        file: PathBuf,
        #[arg(long)]
        proj: Proj,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Solve for the bridge Steiner point of the 3x3x3 check path.
    S5 {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
}

#[derive(Subcommand)]
enum Gen {
    /// The layer generator for any sorted grid.
    Mlai {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// One of the fixed small-grid constructions.
    Fixed {
        #[arg(long)]
        name: Fixed,
        /// Bridge x for check333, or the apex parameter for pbar222.
        #[arg(long, allow_negative_numbers = true)]
        x: Option<f64>,
        /// Perturbation for pbarbar222.
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Fixed {
    M33,
    M333,
    Check33,
    Check333,
    F222,
    Fprime222,
    Pbar222,
    Pbarbar222,
    Conclusion222,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Path,
    Trail,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Proj {
    Xy,
    Xz,
    Yz,
    Iso,
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn write_output(path: &Path, text: &str) -> Result<()> {
    if path.as_os_str() == "-" {
        io::stdout().write_all(text.as_bytes())?;
        Ok(())
    } else {
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))
    }
}

fn fixed_chain(name: Fixed, x: Option<f64>, eps: Option<f64>) -> Result<Chain> {
    let takes_x = matches!(name, Fixed::Check333 | Fixed::Pbar222);
    if x.is_some() && !takes_x {
        bail!("--x only applies to check333 and pbar222");
    }
    if eps.is_some() && !matches!(name, Fixed::Pbarbar222) {
        bail!("--eps after the name only applies to pbarbar222");
    }
    let chain = match name {
        Fixed::M33 => m_path(2)?,
        Fixed::M333 => m_path(3)?,
        Fixed::Check33 => check_path(2, DEFAULT_S5_X)?,
        Fixed::Check333 => check_path(3, x.unwrap_or(DEFAULT_S5_X))?,
        Fixed::F222 => circuit_f222(CircuitVariant::F)?,
        Fixed::Fprime222 => circuit_f222(CircuitVariant::FPrime)?,
        Fixed::Pbar222 => pbar_path(x.unwrap_or_else(minimize_aabb_volume))?,
        Fixed::Pbarbar222 => pbarbar_path(EpsilonPathParams::new(eps.unwrap_or(1e-7))?)?,
        Fixed::Conclusion222 => conclusion_path_222()?,
    };
    Ok(chain)
}

fn parse_box(spec: &[String], chain: &Chain, grid: &GridSpec) -> Result<Aabb> {
    let (kind, rest) = spec.split_first().context("--box needs a value")?;
    if kind != "custom" && !rest.is_empty() {
        bail!("only --box custom takes ranges");
    }
    Ok(match kind.as_str() {
        "maabb" => maabb(grid),
        "raabb" => raabb(grid),
        "tight" => tight_aabb(chain.vertices())?,
        "custom" => {
            let intervals = rest
                .iter()
                .map(|r| {
                    let (lo, hi) = r
                        .split_once("..")
                        .with_context(|| format!("range {r:?} is not LO..HI"))?;
                    Ok((lo.trim().parse::<f64>()?, hi.trim().parse::<f64>()?))
                })
                .collect::<Result<Vec<_>>>()?;
            Aabb::from_intervals(&intervals)?
        }
        other => bail!("unknown box {other:?}; expected maabb, raabb, tight or custom"),
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(eps) = cli.eps {
        set_default_eps(eps)?;
    }
    match cli.command {
        Command::Gen { what } => {
            let (chain, out) = match what {
                Gen::Mlai { dims, out } => {
                    let grid = GridSpec::new(dims)?;
                    let chain = if grid.k() == 1 {
                        generate_line(&grid)?
                    } else {
                        generate_mlai(&grid)?
                    };
                    (chain, out)
                }
                Gen::Fixed { name, x, eps, out } => (fixed_chain(name, x, eps)?, out),
            };
            write_output(&out, &write_chain(&chain))?;
        }
        Command::Verify {
            file,
            grid,
            bbox,
            mode,
        } => {
            let chain = read_chain(&read_input(&file)?)?;
            let grid = GridSpec::new(grid)?;
            let bbox = parse_box(&bbox, &chain, &grid)?;
            let opts = VerifyOptions {
                mode: mode.map(|m| match m {
                    Mode::Path => ChainKind::Path,
                    Mode::Trail => ChainKind::Trail,
                    Mode::Cycle => ChainKind::Cycle,
                }),
                ..VerifyOptions::default()
            };
            let report = verify_with(&chain, &grid, &bbox, &opts)?;
            let passed = report.passed();
            let mut json = serde_json::to_value(&report)?;
            json["passed"] = passed.into();
            println!("{}", serde_json::to_string_pretty(&json)?);
            if !passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bounds { dims } => {
            print!("{}", bound_report(&GridSpec::new(dims)?));
        }
        Command::Export { file, proj, out } => {
            let chain = read_chain(&read_input(&file)?)?;
            let proj = match proj {
                Proj::Xy => Projection::Xy,
                Proj::Xz => Projection::Xz,
                Proj::Yz => Projection::Yz,
                Proj::Iso => Projection::Iso,
            };
            write_output(&out, &export_figure(&chain, proj)?)?;
        }
        Command::S5 { x } => {
            let s = s5_solve(x)?;
            println!("{}", serde_json::to_string_pretty(&s)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
