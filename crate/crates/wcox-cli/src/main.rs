//! Command-line front end: configuration ingestion, subcommand dispatch,
//! report emission.
//!
//! Exit status: 0 on pass, 1 on any suite/verification failure, 2 on
//! invalid configuration or malformed input.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use wcox::harness::{self, CampaignEntry, Radii};
use wcox::{
    cells, compute_bound, f_coeff, kl, t_mult, CoxeterSystem, Element, SystemConfig, VerifyOptions,
    DEFAULT_BALL_CAP,
};

/// Exact workbench for weighted Coxeter groups of rank 3: word problem,
/// Hecke algebra with unequal parameters, boundedness verification,
/// Kazhdan-Lusztig cells and the per-case lemma suites.
#[derive(Parser)]
#[command(name = "wcox", version, max_term_width = 100)]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,

    /// Worker threads for the scan phases (1 = fully sequential).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Write the report JSON here instead of standard output
    /// (campaign default: wcox-campaign.json).
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigArgs {
    /// JSON config file (single config, or {"battery": [...]} for campaign).
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,

    /// Bond order m_sr (0 = infinity).
    #[arg(long, global = true)]
    m_sr: Option<u32>,

    /// Bond order m_st (0 = infinity).
    #[arg(long, global = true)]
    m_st: Option<u32>,

    /// Bond order m_rt (0 = infinity).
    #[arg(long, global = true)]
    m_rt: Option<u32>,

    /// Weight L(r) (positive integer).
    #[arg(long, global = true)]
    w_r: Option<u32>,

    /// Weight L(s).
    #[arg(long, global = true)]
    w_s: Option<u32>,

    /// Weight L(t).
    #[arg(long, global = true)]
    w_t: Option<u32>,

    /// Ball radius override (per-subcommand meaning).
    #[arg(long, global = true)]
    max_len: Option<usize>,

    /// Ball element cap.
    #[arg(long, global = true, default_value_t = DEFAULT_BALL_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the system into the five-case reduction.
    Classify,
    /// Enumerate the ball of elements up to --max-len (default 6).
    Ball,
    /// Hecke product T_x * T_y in the T-basis.
    Mult { x: String, y: String },
    /// Structure constant f_{x,y,z}.
    F { x: String, y: String, z: String },
    /// The parabolic bound N with its breakdown and argmax set M.
    Bound,
    /// Scan all ball pairs for v^{-N} T_x T_y in H_{<=0} plus facts (a),(b).
    Verify {
        /// Radius for x (default 6; --max-len overrides both).
        #[arg(long)]
        x_max_len: Option<usize>,
        /// Radius for y (default 6).
        #[arg(long)]
        y_max_len: Option<usize>,
    },
    /// Kazhdan-Lusztig basis element c_w in the T-basis.
    Cw { w: String },
    /// Structure constant h_{x,y,z} in the c-basis.
    H { x: String, y: String, z: String },
    /// Truncated a-function of w over a search ball (default 4).
    Afn {
        w: String,
        #[arg(long, default_value_t = 4)]
        search_ball: usize,
    },
    /// The sets M and Lambda inside the ball (default radius 5).
    Lambda,
    /// Cell preorder graph with SCC partition (default radius 4).
    Cells {
        /// Also write the plain edge list (lines "w z L|R|LR") here.
        #[arg(long)]
        edges: Option<std::path::PathBuf>,
    },
    /// Run lemma suites: family 4, 5 or 6, word, length, hecke or all.
    Lemmas { section: String },
    /// Run the full battery: bound, boundedness, suites, cell checks.
    Campaign,
}

/// On-disk configuration: a single system plus optional radii, or a battery.
#[derive(Clone, Serialize, Deserialize, Default)]
struct FileConfig {
    #[serde(default)]
    bonds: Option<wcox::Bonds>,
    #[serde(default)]
    weights: Option<wcox::Weights>,
    #[serde(default)]
    radii: Option<Radii>,
    #[serde(default)]
    cap: Option<usize>,
    #[serde(default)]
    battery: Option<Vec<BatteryEntry>>,
}

#[derive(Clone, Serialize, Deserialize)]
struct BatteryEntry {
    bonds: wcox::Bonds,
    weights: wcox::Weights,
    #[serde(default)]
    radii: Option<Radii>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let threads = cli.threads.unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .stack_size(8 << 20)
        .build()
        .context("building thread pool")?;
    pool.install(|| dispatch(cli))
}

fn load_file_config(cli: &Cli) -> Result<FileConfig> {
    match &cli.config.config {
        None => Ok(FileConfig::default()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?;
            serde_json::from_str(&text).context("parsing config JSON")
        }
    }
}

/// Flags override file values; everything must be present in the merge.
fn system_config(cli: &Cli, file: &FileConfig) -> Result<SystemConfig> {
    let a = &cli.config;
    let fb = file.bonds;
    let fw = file.weights;
    let need = |flag: &str, v: Option<u32>| {
        v.ok_or_else(|| anyhow!("missing {flag} (flag or config file)"))
    };
    Ok(SystemConfig {
        bonds: wcox::Bonds {
            m_sr: need("--m-sr", a.m_sr.or(fb.map(|b| b.m_sr)))?,
            m_st: need("--m-st", a.m_st.or(fb.map(|b| b.m_st)))?,
            m_rt: need("--m-rt", a.m_rt.or(fb.map(|b| b.m_rt)))?,
        },
        weights: wcox::Weights {
            r: need("--w-r", a.w_r.or(fw.map(|w| w.r)))?,
            s: need("--w-s", a.w_s.or(fw.map(|w| w.s)))?,
            t: need("--w-t", a.w_t.or(fw.map(|w| w.t)))?,
        },
    })
}

fn build_system(cli: &Cli, file: &FileConfig) -> Result<CoxeterSystem> {
    let cfg = system_config(cli, file)?;
    CoxeterSystem::new(cfg).map_err(|e| anyhow!("{e}"))
}

fn parse_element(sys: &CoxeterSystem, text: &str) -> Result<Element> {
    sys.normal_form(text).map_err(|e| anyhow!("{e}"))
}

fn emit<T: Serialize>(cli: &Cli, value: &T) -> Result<()> {
    let text = if cli.pretty {
        serde_json::to_string_pretty(value)?
    } else {
        serde_json::to_string(value)?
    };
    match &cli.out {
        None => println!("{text}"),
        Some(path) => {
            std::fs::write(path, text + "\n")
                .with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}

fn status(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode> {
    let file = load_file_config(cli)?;
    let cap = cli.config.cap.min(file.cap.unwrap_or(usize::MAX));
    match &cli.command {
        Command::Classify => {
            let sys = build_system(cli, &file)?;
            let shape = sys.classify();
            emit(cli, &json!({ "config": sys.config(), "case": shape }))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Ball => {
            let sys = build_system(cli, &file)?;
            let max_len = cli.config.max_len.unwrap_or(6);
            let ball = sys.ball(max_len, cap).map_err(|e| anyhow!("{e}"))?;
            let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
            for x in &ball {
                *counts.entry(x.len()).or_default() += 1;
            }
            emit(
                cli,
                &json!({
                    "config": sys.config(),
                    "max_len": max_len,
                    "size": ball.len(),
                    "counts_by_length": counts,
                    "elements": ball,
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Mult { x, y } => {
            let sys = build_system(cli, &file)?;
            let (x, y) = (parse_element(&sys, x)?, parse_element(&sys, y)?);
            check_product_len(&[x, y])?;
            let product = t_mult(&sys, x, y);
            emit(
                cli,
                &json!({
                    "x": x, "y": y,
                    "product": product,
                    "display": product.to_string(),
                    "group_product": sys.mult(x, y),
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::F { x, y, z } => {
            let sys = build_system(cli, &file)?;
            let (x, y, z) = (
                parse_element(&sys, x)?,
                parse_element(&sys, y)?,
                parse_element(&sys, z)?,
            );
            check_product_len(&[x, y])?;
            let f = f_coeff(&sys, x, y, z);
            emit(
                cli,
                &json!({ "x": x, "y": y, "z": z, "f": f, "deg": f.deg() }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound => {
            let sys = build_system(cli, &file)?;
            emit(
                cli,
                &json!({ "config": sys.config(), "bound": compute_bound(&sys) }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            x_max_len,
            y_max_len,
        } => {
            let sys = build_system(cli, &file)?;
            let both = cli.config.max_len;
            let mut opts = VerifyOptions::new(
                x_max_len.or(both).unwrap_or(6),
                y_max_len.or(both).unwrap_or(6),
            );
            opts.ball_cap = cap;
            let report = wcox::hecke::verify_bound(&sys, &opts).map_err(|e| anyhow!("{e}"))?;
            let pass = report.pass;
            emit(cli, &report)?;
            Ok(status(pass))
        }
        Command::Cw { w } => {
            let sys = build_system(cli, &file)?;
            let w = parse_element(&sys, w)?;
            let mut tables = kl::KlTables::new(w.len());
            let cw = tables.c(&sys, w).map_err(|e| anyhow!("{e}"))?;
            emit(
                cli,
                &json!({ "w": w, "c_w": cw, "display": cw.to_string() }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::H { x, y, z } => {
            let sys = build_system(cli, &file)?;
            let (x, y, z) = (
                parse_element(&sys, x)?,
                parse_element(&sys, y)?,
                parse_element(&sys, z)?,
            );
            check_product_len(&[x, y])?;
            let mut tables = kl::KlTables::new(x.len() + y.len());
            let h = tables.h_coeff(&sys, x, y, z).map_err(|e| anyhow!("{e}"))?;
            emit(
                cli,
                &json!({ "x": x, "y": y, "z": z, "h": h, "deg": h.deg() }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Afn { w, search_ball } => {
            let sys = build_system(cli, &file)?;
            let w = parse_element(&sys, w)?;
            let mut tables = kl::KlTables::new(2 * search_ball + w.len());
            let a = tables
                .a_truncated(&sys, w, *search_ball)
                .map_err(|e| anyhow!("{e}"))?;
            emit(
                cli,
                &json!({
                    "w": w,
                    "search_ball": search_ball,
                    "a_truncated": a,
                    "n": compute_bound(&sys).n,
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Lambda => {
            let sys = build_system(cli, &file)?;
            let max_len = cli.config.max_len.unwrap_or(5);
            let sets = cells::lowest_cell_sets(&sys, max_len);
            let bound = compute_bound(&sys);
            emit(
                cli,
                &json!({
                    "config": sys.config(),
                    "n": bound.n,
                    "ball": max_len,
                    "m": sets.m_set,
                    "lambda": sets.lambda,
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cells { edges } => {
            let sys = build_system(cli, &file)?;
            let max_len = cli.config.max_len.unwrap_or(4);
            let mut tables = kl::KlTables::new(max_len + 1);
            let graph =
                cells::cell_graph(&sys, &mut tables, max_len, cap).map_err(|e| anyhow!("{e}"))?;
            if let Some(path) = edges {
                std::fs::write(path, graph.edge_list_text())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            emit(cli, &graph)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Lemmas { section } => {
            let sys = build_system(cli, &file)?;
            let radii = file.radii.unwrap_or_default();
            let word_ball = cli.config.max_len.unwrap_or(radii.word_ball);
            let hecke_ball = cli.config.max_len.unwrap_or(radii.hecke_ball);
            let mut reports = Vec::new();
            let want_word = matches!(section.as_str(), "4" | "5" | "6" | "word" | "all");
            let want_length = matches!(section.as_str(), "4" | "5" | "6" | "length" | "all");
            let want_hecke = matches!(section.as_str(), "5" | "6" | "hecke" | "all");
            if !(want_word || want_length || want_hecke) {
                bail!("unknown lemma section {section:?} (expected 4, 5, 6, word, length, hecke or all)");
            }
            if want_word {
                reports.extend(
                    harness::word_lemma_suites(&sys, word_ball).map_err(|e| anyhow!("{e}"))?,
                );
            }
            if want_length {
                reports.extend(
                    harness::length_lemma_suites(&sys, word_ball).map_err(|e| anyhow!("{e}"))?,
                );
            }
            if want_hecke {
                reports.extend(
                    harness::hecke_lemma_suites(&sys, hecke_ball).map_err(|e| anyhow!("{e}"))?,
                );
            }
            if let Some(prefix) = match section.as_str() {
                "4" => Some("L4"),
                "5" => Some("L5"),
                "6" => Some("L6"),
                _ => None,
            } {
                reports.retain(|r| r.suite.starts_with(prefix));
            }
            let pass = reports.iter().all(|r| r.pass());
            emit(cli, &json!({ "config": sys.config(), "suites": reports }))?;
            Ok(status(pass))
        }
        Command::Campaign => {
            let battery: Vec<CampaignEntry> = match &file.battery {
                Some(entries) => entries
                    .iter()
                    .map(|e| CampaignEntry {
                        config: SystemConfig {
                            bonds: e.bonds,
                            weights: e.weights,
                        },
                        radii: e.radii.unwrap_or_default(),
                        bound_override: None,
                    })
                    .collect(),
                None if file.bonds.is_some() || any_system_flag(&cli.config) => {
                    let mut entry = CampaignEntry::new(system_config(cli, &file)?);
                    entry.radii = file.radii.unwrap_or_default();
                    vec![entry]
                }
                None => harness::default_battery(),
            };
            let report = harness::run_campaign(&battery).map_err(|e| anyhow!("{e}"))?;
            print_campaign_table(&report);
            let text = if cli.pretty {
                serde_json::to_string_pretty(&report)?
            } else {
                serde_json::to_string(&report)?
            };
            let out = cli
                .out
                .clone()
                .unwrap_or_else(|| std::path::PathBuf::from("wcox-campaign.json"));
            std::fs::write(&out, text + "\n")
                .with_context(|| format!("writing {}", out.display()))?;
            println!("report written to {}", out.display());
            Ok(status(report.pass))
        }
    }
}

fn any_system_flag(a: &ConfigArgs) -> bool {
    [a.m_sr, a.m_st, a.m_rt, a.w_r, a.w_s, a.w_t]
        .iter()
        .any(Option::is_some)
}

fn check_product_len(parts: &[Element]) -> Result<()> {
    let total: usize = parts.iter().map(|p| p.len()).sum();
    if total > wcox::MAX_WORD_LEN {
        bail!(
            "combined word length {total} exceeds the cap ({})",
            wcox::MAX_WORD_LEN
        );
    }
    Ok(())
}

fn print_campaign_table(report: &harness::CampaignReport) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(
        out,
        "{:<28} {:<16} {:>6} {:>12} {:>10} {:>8}",
        "config (m_rt,m_sr,m_st | L)", "case", "N", "pairs", "suites", "status"
    );
    for c in &report.configs {
        let b = c.config.bonds;
        let w = c.config.weights;
        let fmt_m = |m: u32| {
            if m == 0 {
                "inf".to_string()
            } else {
                m.to_string()
            }
        };
        let ran = c
            .suites
            .iter()
            .filter(|s| s.status != harness::SuiteStatus::NotApplicable)
            .count();
        let _ = writeln!(
            out,
            "{:<28} {:<16} {:>6} {:>12} {:>10} {:>8}",
            format!(
                "({},{},{} | {},{},{})",
                fmt_m(b.m_rt),
                fmt_m(b.m_sr),
                fmt_m(b.m_st),
                w.r,
                w.s,
                w.t
            ),
            c.case.kind.tag(),
            c.bound.n,
            c.verify.pairs_checked + c.prop_7_4.pairs_checked,
            ran,
            if c.pass { "pass" } else { "FAIL" },
        );
    }
    let _ = writeln!(
        out,
        "{} configs, {} passed, {} failed",
        report.summary.configs, report.summary.passed, report.summary.failed
    );
}
