use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use compshuffle::charfn::{chi, chi_weighted, dalpha_bruteforce, verify_charfn, CornerWeight};
use compshuffle::dpa::relations::check_relations_with;
use compshuffle::dpa::VElem;
use compshuffle::dyck::{verify_bijection, DyckPath};
use compshuffle::json::to_json;
use compshuffle::report::VerifyReport;
use compshuffle::shapes::{Composition, Partition};
use compshuffle::shuffle::{d_alpha_operator, n_alpha, n_involution, nabla_c, verify_shuffle, y_alpha, C_ORDER};
use compshuffle::symfn::macdonald::{pi_mu, wt_mu};
use compshuffle::symfn::{macdonald_h, nabla, Basis, SymFunc};
use compshuffle::{Error, QtScalar};

/// Exact computations around the compositional shuffle theorem.
///
/// Paths are strings over N/E (or +/-) read from the origin, compositions and partitions are
/// comma separated ("3,1"), scalars are rational functions in q and t with explicit `*`
/// ("1/t", "q^2*t - 1"). Symmetric functions print in the Schur basis.
#[derive(Parser)]
#[command(name = "compshuffle", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Largest degree any command may touch.
    #[arg(long, global = true, env = "SHUFFLE_MAX_DEGREE", default_value_t = 6)]
    max_degree: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic function chi(pi, wt).
    Chi {
        #[arg(long)]
        path: Option<String>,
        /// `one` (default), `zero`, a scalar put on every corner, `mu=<partition>` for the
        /// Macdonald path and weights, or a JSON list of {"corner":[i,j],"weight":"..."}.
        #[arg(long, default_value = "one")]
        weight: String,
    },
    /// The zeta map with sigma and bounce data.
    Zeta {
        #[arg(long)]
        path: String,
    },
    /// Every statistic of a path.
    Stats {
        #[arg(long)]
        path: String,
    },
    /// Modified Macdonald polynomial H_mu.
    Macdonald {
        #[arg(long)]
        mu: Partition,
    },
    /// nabla of a symmetric function.
    Nabla {
        /// JSON symmetric function.
        #[arg(long, conflicts_with = "schur")]
        input: Option<String>,
        /// Shorthand for a single Schur function.
        #[arg(long)]
        schur: Option<Partition>,
    },
    /// N_alpha in V_l.
    Nalpha {
        #[arg(long)]
        alpha: Composition,
    },
    /// D_alpha by one of the three routes.
    Dalpha {
        #[arg(long)]
        alpha: Composition,
        #[arg(long, value_enum, default_value_t = Method::Op)]
        method: Method,
    },
    /// The antilinear involution N.
    Ninv {
        /// JSON element of V_k.
        #[arg(long, conflicts_with_all = ["alpha", "schur"])]
        input: Option<String>,
        /// Apply to y_alpha.
        #[arg(long, conflicts_with = "schur")]
        alpha: Option<Composition>,
        /// Apply to a Schur function in V_0.
        #[arg(long)]
        schur: Option<Partition>,
    },
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// d_-^l N_alpha
    Op,
    /// sum over paths with touch' = alpha
    Brute,
    /// nabla C_alpha(1)
    Nabla,
}

#[derive(Subcommand)]
enum Verify {
    /// Three routes to D_alpha for every alpha of size n, and their sum.
    Shuffle {
        #[arg(long)]
        n: usize,
    },
    /// Defining relations of the algebra on V_k.
    Relations {
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        /// Degree of the random elements.
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Degree up to which the monomial basis is checked exhaustively.
        #[arg(long, default_value_t = 3)]
        exhaustive_degree: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
    /// zeta statistics for every path of size at most n.
    Bijection {
        #[arg(long, default_value_t = 7)]
        n: usize,
    },
    /// Characteristic function identities for every path of size at most n.
    Charfn {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
}

type Res<T> = Result<T, String>;

fn err(e: Error) -> String {
    e.to_string()
}

fn guard(what: &str, degree: usize, bound: usize) -> Res<()> {
    if degree > bound {
        return Err(format!("{} has degree {} above the bound {} (set SHUFFLE_MAX_DEGREE to raise it)", what, degree, bound));
    }
    Ok(())
}

fn parse_path(text: &str, bound: usize) -> Res<DyckPath> {
    let p: DyckPath = text.parse().map_err(err)?;
    guard("path", p.size(), bound)?;
    Ok(p)
}

fn parse_weight(text: &str, pi: Option<DyckPath>, bound: usize) -> Res<(DyckPath, CornerWeight)> {
    if let Some(mu) = text.strip_prefix("mu=") {
        let mu: Partition = mu.parse().map_err(err)?;
        guard("partition", mu.size(), bound)?;
        let own = pi_mu(&mu);
        if pi.as_ref().is_some_and(|p| *p != own) {
            return Err(format!("mu={} uses its own path {}", mu, own));
        }
        return Ok((own, wt_mu(&mu)));
    }
    let pi = pi.ok_or("--path is required unless --weight mu=... is given")?;
    let wt = match text {
        "one" => CornerWeight::ones(),
        "zero" => CornerWeight::constant(&pi, QtScalar::zero()),
        t if t.trim_start().starts_with('[') => serde_json::from_str(t).map_err(|e| e.to_string())?,
        t => CornerWeight::constant(&pi, t.parse().map_err(err)?),
    };
    let corners = pi.corners();
    if let Some(k) = wt.0.keys().find(|k| !corners.contains(k)) {
        return Err(format!("{:?} is not a corner of {}", k, pi));
    }
    Ok((pi, wt))
}

fn sym_input(input: &Option<String>, schur: &Option<Partition>, bound: usize) -> Res<SymFunc> {
    let f = match (input, schur) {
        (Some(j), _) => serde_json::from_str::<SymFunc>(j).map_err(|e| e.to_string())?,
        (None, Some(l)) => SymFunc::s(l.parts()),
        (None, None) => return Err("give --input or --schur".into()),
    };
    guard("input", f.max_degree(), bound)?;
    Ok(f)
}

fn sym_out(f: &SymFunc, json: bool) -> String {
    let s = f.to_basis(Basis::S);
    if json {
        to_json(&s)
    } else {
        format!("{}\n", s)
    }
}

fn velem_out(v: &VElem, json: bool) -> String {
    if json {
        to_json(v)
    } else {
        format!("V_{}: {}\n", v.level(), v)
    }
}

fn list(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn report_out(r: &VerifyReport, json: bool) -> String {
    if json {
        return to_json(r);
    }
    let mut out = format!("{}\n", if r.pass { "PASS" } else { "FAIL" });
    for c in &r.checks {
        let status = if c.pass() { "pass" } else { "fail" };
        out += &format!("  {:<28} {} ({} cases)", c.name, status, c.cases);
        if !c.pass() {
            let shown: Vec<&str> = c.failures.iter().take(5).map(String::as_str).collect();
            out += &format!(": {}", shown.join(" "));
        }
        out.push('\n');
    }
    out
}

/// Returns the text to print and whether every check held.
fn run(cli: &Cli) -> Res<(String, bool)> {
    let json = cli.json;
    let bound = cli.max_degree;
    let text = match &cli.command {
        Command::Chi { path, weight } => {
            let pi = path.as_deref().map(|p| parse_path(p, bound)).transpose()?;
            let (pi, wt) = parse_weight(weight, pi, bound)?;
            let f = if wt.0.values().all(QtScalar::is_one) { chi(&pi) } else { chi_weighted(&pi, &wt) };
            sym_out(&f, json)
        }
        Command::Zeta { path } => {
            let pi: DyckPath = path.parse().map_err(err)?;
            let (img, sigma) = pi.zeta();
            let v = serde_json::json!({
                "path": pi.to_string(),
                "image": img.to_string(),
                "sigma": sigma,
                "area_seq": pi.area_sequence(),
                "bounce_seq": img.bounce_sequence(),
                "touch_prime_bounces": img.touch_prime_bounces(),
                "touch_prime": img.touch_prime().parts(),
                "area": pi.area(),
                "dinv": pi.dinv(),
                "bounce": img.bounce(),
                "area_image": img.area(),
            });
            if json {
                to_json(&v)
            } else {
                format!(
                    "path      {}\nimage     {}\nsigma     {}\nbounce    {}\nt         {}\ntouch'    {}\n(area, dinv) = ({}, {}) -> (bounce, area) = ({}, {})\n",
                    pi,
                    img,
                    list(&sigma),
                    list(&img.bounce_sequence()),
                    list(&img.touch_prime_bounces()),
                    img.touch_prime(),
                    pi.area(),
                    pi.dinv(),
                    img.bounce(),
                    img.area()
                )
            }
        }
        Command::Stats { path } => {
            let st = path.parse::<DyckPath>().map_err(err)?.stats();
            if json {
                to_json(&st)
            } else {
                let v = serde_json::to_value(&st).map_err(|e| e.to_string())?;
                let mut out = String::new();
                for (k, x) in v.as_object().into_iter().flatten() {
                    out += &format!("{:<11} {}\n", k, x);
                }
                out
            }
        }
        Command::Macdonald { mu } => {
            guard("partition", mu.size(), bound)?;
            sym_out(&macdonald_h(mu), json)
        }
        Command::Nabla { input, schur } => sym_out(&nabla(&sym_input(input, schur, bound)?), json),
        Command::Nalpha { alpha } => {
            guard("composition", alpha.size(), bound)?;
            velem_out(&n_alpha(alpha.parts()).map_err(err)?, json)
        }
        Command::Dalpha { alpha, method } => {
            guard("composition", alpha.size(), bound)?;
            let f = match method {
                Method::Op => d_alpha_operator(alpha.parts()).map_err(err)?,
                Method::Brute => dalpha_bruteforce(alpha),
                Method::Nabla => nabla_c(alpha.parts()),
            };
            sym_out(&f, json)
        }
        Command::Ninv { input, alpha, schur } => {
            let v = match (input, alpha) {
                (Some(j), _) => serde_json::from_str::<VElem>(j).map_err(|e| e.to_string())?,
                (None, Some(a)) => y_alpha(a.parts()),
                (None, None) => VElem::from_sym(sym_input(&None, schur, bound)?),
            };
            guard("input", v.degree().unwrap_or(0), bound)?;
            velem_out(&n_involution(&v).map_err(err)?, json)
        }
        Command::Verify(v) => return verify(v, cli),
    };
    Ok((text, true))
}

fn verify(v: &Verify, cli: &Cli) -> Res<(String, bool)> {
    let (json, bound) = (cli.json, cli.max_degree);
    Ok(match v {
        Verify::Shuffle { n } => {
            guard("n", *n, bound)?;
            let r = verify_shuffle(*n).map_err(err)?;
            let text = if json {
                to_json(&r)
            } else {
                let mut out = format!("{}\nconvention: {}\n", if r.pass { "PASS" } else { "FAIL" }, C_ORDER);
                for rec in &r.records {
                    let status = if rec.pass { "pass" } else { "fail" };
                    out += &format!("  alpha = {:<12} {}  D = {}\n", rec.alpha.to_string(), status, rec.d_op);
                }
                out += &format!("  sum = (-1)^n nabla e_n: {}\n", if r.sum_check { "pass" } else { "fail" });
                out
            };
            (text, r.pass)
        }
        Verify::Relations { k_max, degree, exhaustive_degree, trials } => {
            guard("degree", (*degree).max(*exhaustive_degree), bound)?;
            let r = check_relations_with(*k_max, *exhaustive_degree, *degree, *trials, cli.seed);
            let text = if json {
                to_json(&r)
            } else {
                let failing: Vec<String> =
                    r.failures().map(|f| format!("  {} at V_{} degree {}\n", f.relation, f.level, f.degree)).collect();
                format!(
                    "{}\n  {} records over levels <= {}, seed {}\n{}",
                    if r.all_pass { "PASS" } else { "FAIL" },
                    r.records.len(),
                    k_max,
                    cli.seed,
                    failing.concat()
                )
            };
            (text, r.all_pass)
        }
        Verify::Bijection { n } => {
            let r = verify_bijection(*n);
            (report_out(&r, json), r.pass)
        }
        Verify::Charfn { n } => {
            guard("n", *n, bound)?;
            let r = verify_charfn(*n).map_err(err)?;
            (report_out(&r, json), r.pass)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build_global() {
        eprintln!("error: {}", e);
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok((text, ok)) => {
            print!("{}", text);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
