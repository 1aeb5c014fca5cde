//! Command-line interface. Every command prints a JSON run report.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::covers::{path_cover_number, zero_forcing_number, Forest, BRUTE_FORCE_CAP};
use crate::io::{
    default_seed, nums, parse_assignment, parse_lambda_list, parse_rat_list, read_json, read_tree, read_weights,
    write_csv, write_json, LambdaFile, Reporter, RunReport,
};
use crate::lambda::{region_of, LambdaTuple};
use crate::numeric::cluster_multiplicities;
use crate::pth::{
    cubic_family_spectrum, gap_vector, label_sorted, ph_construct, ph_spectrum, random_splits, recognize,
    recognize_search, splitting_counterexample, t31_constraints_check, zero_one_counterexample_check, Splits,
};
use crate::repro;
use crate::rigid::{level_figure_data, rigid_multiplicity_list, solve_rigid};
use crate::scalar::{fmt_f64, fmt_rat, parse_rat, rat, rat_to_f64};
use crate::tree::RootedTree;
use crate::weights::{WeightFile, DEFAULT_WEIGHT_TOL};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "hedge-iep", version, about = "Path-to-hedge spectra, path covers and spectral rigidity on trees")]
pub struct Cli {
    /// Seed for random choices; defaults to $HEDGE_IEP_SEED or 0.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rooted hedges.
    #[command(subcommand)]
    Hedge(HedgeCmd),
    /// Path cover number, zero forcing number and a witness cover.
    Covers {
        tree: PathBuf,
        /// Cross-check against exhaustive search.
        #[arg(long)]
        oracle: bool,
    },
    /// Weighted trees.
    #[command(subcommand)]
    Weights(WeightsCmd),
    /// Distinguished eigenvalue tuples.
    #[command(subcommand)]
    Lambda(LambdaCmd),
    /// Path-to-hedge construction.
    #[command(subcommand)]
    Pth(PthCmd),
    /// Completely rigid spectrum.
    #[command(subcommand)]
    Rigid(RigidCmd),
    /// Reproduce a worked example, or `all`.
    Repro { id: String },
}

#[derive(Subcommand, Debug)]
pub enum HedgeCmd {
    /// Height, level sizes, ℓ vector and lush flag.
    Info { tree: PathBuf },
    /// Write a named hedge to a tree file.
    Gen {
        #[arg(value_enum)]
        kind: HedgeKind,
        /// Height (lush-min, perfect, random-lush).
        #[arg(long, default_value_t = 2)]
        height: usize,
        /// Branching (perfect).
        #[arg(long, default_value_t = 3)]
        branching: usize,
        /// Vertex cap (random-lush).
        #[arg(long, default_value_t = 40)]
        max_vertices: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum HedgeKind {
    TBf,
    LushMin,
    Perfect,
    RandomLush,
    ZeroOne,
}

#[derive(Subcommand, Debug)]
pub enum WeightsCmd {
    /// Eigenvalues with multiplicities.
    Spectrum {
        file: PathBuf,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
}

#[derive(Args, Debug)]
pub struct LambdaArgs {
    /// `α1,α2,β2,β3,β4` as rationals or decimals.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["lambda_file", "alpha1"])]
    pub lambda: Option<String>,
    /// JSON file with keys alpha1..beta4.
    #[arg(long)]
    pub lambda_file: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["alpha2", "beta2", "beta3", "beta4"])]
    pub alpha1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta3: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta4: Option<String>,
}

impl LambdaArgs {
    fn resolve(&self) -> Result<LambdaTuple<BigRational>> {
        if let Some(s) = &self.lambda {
            return parse_lambda_list(s);
        }
        if let Some(p) = &self.lambda_file {
            return read_json::<LambdaFile>(p)?.to_lambda();
        }
        let parts = [&self.alpha1, &self.alpha2, &self.beta2, &self.beta3, &self.beta4];
        if parts.iter().all(|p| p.is_some()) {
            let joined: Vec<&str> = parts.iter().map(|p| p.as_deref().unwrap()).collect();
            return parse_lambda_list(&joined.join(","));
        }
        Err(usage("give --lambda, --lambda-file, or all of --alpha1 ... --beta4"))
    }
}

#[derive(Subcommand, Debug)]
pub enum LambdaCmd {
    /// Build `C_n` and write it as a weight file.
    Build {
        #[command(flatten)]
        lam: LambdaArgs,
        #[arg(long, default_value_t = 9)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Region containing five values.
    Region {
        #[arg(num_args = 5, allow_hyphen_values = true)]
        values: Vec<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitKind {
    Uniform,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Counterexample {
    Splitting,
    Zeroone,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SweepParam {
    X,
}

#[derive(Subcommand, Debug)]
pub enum PthCmd {
    /// Build a member of PH(C, T).
    Construct {
        #[command(flatten)]
        lam: LambdaArgs,
        #[arg(long)]
        tree: PathBuf,
        #[arg(long, value_enum, default_value_t = SplitKind::Uniform)]
        splits: SplitKind,
        #[arg(long)]
        out: PathBuf,
    },
    /// Spectrum predicted by the level formula, checked against an eigensolve.
    Spectrum {
        #[command(flatten)]
        lam: LambdaArgs,
        /// Use this path weight file instead of a tuple.
        #[arg(long)]
        path_file: Option<PathBuf>,
        #[arg(long)]
        tree: PathBuf,
    },
    /// Run the collapse cascade on a weight file.
    Recognize {
        file: PathBuf,
        /// `alpha1=…,alpha2=…,beta2=…,beta3=…,beta4=…`; searched when omitted.
        #[arg(long, allow_hyphen_values = true)]
        assign: Option<String>,
        #[arg(long, default_value_t = DEFAULT_WEIGHT_TOL)]
        tol: f64,
    },
    /// Gap vectors along the one-parameter height-three family.
    RsSweep {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long, value_enum, default_value_t = SweepParam::X)]
        param: SweepParam,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 50)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Certify one of the two counterexamples on a tree.
    Counterexample {
        #[arg(value_enum)]
        kind: Counterexample,
        tree: PathBuf,
        /// Tuple for the splitting construction.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum RigidCmd {
    /// Solve for the rigid point by both routes.
    Solve,
    /// Ordered multiplicity list on a lush hedge of height at least 8.
    List {
        #[arg(long)]
        tree: PathBuf,
    },
    /// Level spectra at the rigid point as CSV.
    Levels {
        #[arg(long, default_value_t = 40)]
        max: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

fn usage(msg: &str) -> Error {
    Error::Usage(msg.into())
}

/// Exit code for an error: 2 for bad input, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_)
        | Error::Parse(_)
        | Error::InvalidTree(_)
        | Error::CycleDetected(_)
        | Error::Disconnected
        | Error::MultipleRoots(_)
        | Error::UnknownExample(_)
        | Error::WrongArity { .. }
        | Error::Usage(_) => 2,
        _ => 1,
    }
}

/// Runs a parsed command; returns the reports it produced.
pub fn execute(cli: &Cli) -> Result<Vec<RunReport>> {
    let seed = cli.seed.unwrap_or_else(default_seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Reporter::new(std::env::args().skip(1).collect::<Vec<_>>().join(" "), seed);
    match &cli.command {
        Command::Repro { id } if id == "all" => {
            return repro::IDS.iter().map(|id| repro::run(id, seed)).collect();
        }
        Command::Repro { id } => return Ok(vec![repro::run(id, seed)?]),
        Command::Hedge(HedgeCmd::Info { tree }) => {
            r.input_file(tree);
            let t = read_tree(tree)?;
            r.output("vertices", t.n());
            r.output("height", t.height());
            r.output("hedge", t.is_hedge());
            if t.is_hedge() {
                let p = t.profile()?;
                r.output("levelSizes", &p.level_sizes);
                r.output("ell", &p.ell);
                r.output("lush", t.is_lush()?);
            }
        }
        Command::Hedge(HedgeCmd::Gen { kind, height, branching, max_vertices, out }) => {
            let t = match kind {
                HedgeKind::TBf => RootedTree::t_bf(),
                HedgeKind::LushMin => RootedTree::lush_min(*height),
                HedgeKind::Perfect => RootedTree::perfect(*branching, *height),
                HedgeKind::RandomLush => RootedTree::random_lush(*height, *max_vertices, &mut rng),
                HedgeKind::ZeroOne => repro::zero_one_tree(),
            };
            write_json(out, &t.relabeled_preorder().to_file())?;
            r.output("vertices", t.n());
            r.output("out", out.display().to_string());
        }
        Command::Covers { tree, oracle } => {
            r.input_file(tree);
            let t = read_tree(tree)?;
            let (p, cover) = path_cover_number(&t);
            let (z, zset) = zero_forcing_number(&t);
            r.output("P", p);
            r.output("Z", z);
            r.output("forcingSet", zset.iter().map(|&v| t.label(v)).collect::<Vec<_>>());
            let labelled: Vec<Vec<usize>> =
                cover.paths.iter().map(|path| path.iter().map(|&v| t.label(v)).collect()).collect();
            r.output("cover", labelled);
            r.check("P = Z", p == z, "");
            if *oracle {
                if t.n() > BRUTE_FORCE_CAP {
                    return Err(usage(&format!("--oracle supports at most {BRUTE_FORCE_CAP} vertices")));
                }
                let f = Forest::from_tree(&t);
                let bp = f.brute_force_path_cover();
                let bz = f.brute_force_zero_forcing();
                r.check("P matches exhaustive search", bp == p, format!("{bp}"));
                r.check("Z matches exhaustive search", bz == z, format!("{bz}"));
            }
        }
        Command::Weights(WeightsCmd::Spectrum { file, tol }) => {
            r.input_file(file);
            let w = read_weights(file)?;
            let s = cluster_multiplicities(&w.eigenvalues()?, *tol);
            r.output("eigenvalues", nums(&s.values()));
            r.output("multiplicities", s.multiplicities());
        }
        Command::Lambda(LambdaCmd::Build { lam, n, out }) => {
            let lam = lam.resolve()?;
            let c = lam.build_c(*n)?;
            r.output("region", lam.region);
            let (a, b) = c.path_coefficients().expect("built on a path");
            r.output("a", a.iter().map(fmt_rat).collect::<Vec<_>>());
            r.output("b", b.iter().map(fmt_rat).collect::<Vec<_>>());
            if let Some(out) = out {
                write_json(out, &WeightFile::from_rational(&c)?)?;
            }
        }
        Command::Lambda(LambdaCmd::Region { values }) => {
            let v = parse_rat_list(&values.join(","))?;
            let arr: [BigRational; 5] = v.try_into().expect("clap enforces five values");
            r.output("region", region_of(&arr)?);
        }
        Command::Pth(cmd) => pth(cmd, &mut r, &mut rng)?,
        Command::Rigid(cmd) => rigid(cmd, &mut r, seed)?,
    }
    Ok(vec![r.finish()])
}

fn pth(cmd: &PthCmd, r: &mut Reporter, rng: &mut ChaCha8Rng) -> Result<()> {
    match cmd {
        PthCmd::Construct { lam, tree, splits, out } => {
            r.input_file(tree);
            let t = read_tree(tree)?;
            let lam = lam.resolve()?;
            let c = lam.build_c(t.height() + 1)?;
            let sp = match splits {
                SplitKind::Uniform => Splits::Uniform,
                SplitKind::Random => random_splits(&t, rng),
            };
            let w = ph_construct(&c, &t, &sp)?;
            write_json(out, &WeightFile::from_rational(&w)?)?;
            r.output("region", lam.region);
            r.output("out", out.display().to_string());
        }
        PthCmd::Spectrum { lam, path_file, tree } => {
            r.input_file(tree);
            let t = read_tree(tree)?;
            let c = match path_file {
                Some(p) => {
                    r.input_file(p);
                    read_weights(p)?
                }
                None => lam.resolve()?.build_c(t.height() + 1)?,
            };
            let formula = ph_spectrum(&c, &t.profile()?, 1e-7)?;
            r.output("eigenvalues", nums(&formula.values()));
            r.output("multiplicities", formula.multiplicities());
            let w = ph_construct(&c, &t, &Splits::Uniform)?;
            let direct = cluster_multiplicities(&w.eigenvalues()?, 1e-7);
            r.check("eigensolve agrees with the level formula", direct.approx_eq(&formula, 1e-8), "");
        }
        PthCmd::Recognize { file, assign, tol } => {
            r.input_file(file);
            let w = read_weights(file)?;
            let found: Vec<LambdaTuple<f64>> = match assign {
                Some(a) => {
                    let lam = parse_assignment(a)?;
                    let (member, path, recovered) = match recognize(&w, &lam, 0.0) {
                        Ok(x) => {
                            r.output("exact", true);
                            (x.ph_member, x.path.to_f64(), x.recovered)
                        }
                        Err(_) => {
                            let x = recognize(&w.to_f64(), &lam.to_f64(), *tol)?;
                            r.output("exact", false);
                            (x.ph_member, x.path, x.recovered)
                        }
                    };
                    r.check("PH membership", member, "");
                    r.output("path", path_json(&path));
                    vec![recovered]
                }
                None => recognize_search(&w.to_f64(), *tol)?.into_iter().map(|x| x.recovered).collect(),
            };
            r.output("assignments", found.iter().map(|l| nums(&l.values())).collect::<Vec<_>>());
        }
        PthCmd::RsSweep { tree, param: SweepParam::X, from, to, steps, out, jobs } => {
            r.input_file(tree);
            let t = read_tree(tree)?;
            if t.height() != 3 || !t.is_lush()? {
                return Err(Error::NotLush);
            }
            let ell: Vec<usize> = t.profile()?.ell;
            let parse = |s: &str| parse_rat(s).ok_or_else(|| usage(&format!("cannot read {s:?}")));
            let (lo, hi) = (parse(from)?, parse(to)?);
            if *steps < 2 {
                return Err(usage("--steps must be at least 2"));
            }
            let xs: Vec<BigRational> = (0..*steps)
                .map(|k| lo.clone() + (hi.clone() - lo.clone()) * rat(k as i64, *steps as i64 - 1))
                .collect();
            let pool = rayon::ThreadPoolBuilder::new().num_threads((*jobs).max(1)).build().map_err(|e| Error::Io(e.to_string()))?;
            let rows: Vec<Result<(Vec<String>, bool)>> = pool.install(|| {
                xs.par_iter()
                    .map(|x| {
                        let s = cubic_family_spectrum(x, &ell)?;
                        let holds = t31_constraints_check(&label_sorted(&s.values()))?.holds(0.0) == [true; 4];
                        let g = gap_vector(&s.values())?;
                        let mut row = vec![fmt_f64(rat_to_f64(x))];
                        row.extend(g.iter().map(|q| fmt_f64(rat_to_f64(q))));
                        Ok((row, holds))
                    })
                    .collect()
            });
            let rows: Vec<(Vec<String>, bool)> = rows.into_iter().collect::<Result<_>>()?;
            r.check("constraints hold at every point", rows.iter().all(|(_, h)| *h), "");
            let table: Vec<Vec<String>> = rows.into_iter().map(|(row, _)| row).collect();
            write_csv(out, &["x", "gap1", "gap2", "gap3", "gap4", "gap5", "gap6", "gap7"], &table)?;
            r.output("points", table.len());
        }
        PthCmd::Counterexample { kind, tree, lambda } => {
            r.input_file(tree);
            let t = read_tree(tree)?;
            match kind {
                Counterexample::Splitting => {
                    let lam = match lambda {
                        Some(s) => parse_lambda_list(s)?,
                        None => crate::lambda::cubic_family(&rat(2, 5)),
                    };
                    let rep = splitting_counterexample(&t, &lam)?;
                    r.check("certified", rep.certifies(), "");
                    r.output("report", rep);
                }
                Counterexample::Zeroone => {
                    let rep = zero_one_counterexample_check(&t)?;
                    r.check("contradiction", rep.contradiction, if rep.contradiction { "" } else { "inconclusive" });
                    r.output("report", rep);
                }
            }
        }
    }
    Ok(())
}

fn path_json(w: &crate::weights::WeightFn<f64>) -> serde_json::Value {
    let (a, b) = w.path_coefficients().unwrap_or_default();
    json!({"a": nums(&a), "b": nums(&b)})
}

fn rigid(cmd: &RigidCmd, r: &mut Reporter, seed: u64) -> Result<()> {
    let sol = solve_rigid(seed)?;
    match cmd {
        RigidCmd::Solve => {
            r.output("xi", crate::io::num(crate::xi::xi_f64()));
            for (name, v) in sol.named_values() {
                r.output(name, json!({"value": crate::io::num(v.to_f64()), "exact": v.display()}));
            }
            r.output("routeA", nums(&sol.route_a));
            r.check("routes agree", sol.max_route_gap < 1e-9, format!("{:e}", sol.max_route_gap));
        }
        RigidCmd::List { tree } => {
            r.input_file(tree);
            let t = read_tree(tree)?;
            if !t.is_lush()? {
                return Err(Error::NotLush);
            }
            let entries = rigid_multiplicity_list(&sol, &t.profile()?)?;
            let list: Vec<usize> = entries.iter().map(|e| e.multiplicity).collect();
            r.output("sum", list.iter().sum::<usize>());
            r.output("list", list);
            r.output("entries", entries);
        }
        RigidCmd::Levels { max, out } => {
            let fig = level_figure_data(&sol, *max)?;
            let rows: Vec<Vec<String>> = fig
                .points
                .iter()
                .map(|p| {
                    let shared: Vec<String> = p.shared_with.iter().map(|l| l.to_string()).collect();
                    vec![p.level.to_string(), p.index.to_string(), fmt_f64(p.value), shared.join(";")]
                })
                .collect();
            write_csv(out, &["level", "index", "value", "shared_with"], &rows)?;
            r.check("b_i positive", fig.b_positive, "");
            r.check("strict interlacing", fig.min_interlace_gap > 1e-9, format!("{:e}", fig.min_interlace_gap));
            r.output("points", rows.len());
        }
    }
    Ok(())
}

/// Parses arguments, runs, prints reports and returns the exit code.
pub fn main_with_args(args: impl IntoIterator<Item = String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(reports) => {
            let text = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(&reports)
            }
            .expect("reports serialize");
            match &cli.report {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, text + "\n") {
                        eprintln!("error: {e}");
                        return 2;
                    }
                }
                None => {
                    use std::io::Write;
                    let _ = writeln!(std::io::stdout(), "{text}");
                }
            }
            if reports.iter().all(RunReport::passed) {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
