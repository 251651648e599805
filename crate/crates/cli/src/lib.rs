//! The `sandlab` command line: argument parsing, input resolution and report
//! formatting. `main.rs` only wires [`run`] to the process.

pub mod corpus;
mod manifest;

use std::fmt::Write;
use std::path::Path;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use sandlab_core::analysis::{
    check_injective_bounded, check_nilpotent_bounded, check_preimage_bounded, verify_right_inverse,
    verify_witness_pair, AnalysisError, ConfigSampler, SearchClass, SearchOptions, Verdict,
    Witness, WitnessReport,
};
use sandlab_core::automaton::{CoreGrowthError, IterateLimits, SandAutomaton};
use sandlab_core::format::{
    emit_config, emit_rule, parse_config, parse_rule, render_ascii, ParseError, RenderOptions,
};
use sandlab_core::metric::distance;
use sandlab_core::zoo::{
    build_l_preimage, crown_lift, periodic_splice, ConstructionError, ZooName,
};
use sandlab_core::Config;

pub use manifest::{OutputMode, RunManifest};

/// Environment variable capping the core length of intermediate configurations.
pub const MAX_CORE_VAR: &str = "SANDLAB_MAX_CORE";

#[derive(Debug, Parser)]
#[command(
    name = "sandlab",
    version,
    about = "Exact sand automata simulation and bounded verification"
)]
pub struct Cli {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a rule `--steps` times and print the result
    Simulate {
        #[arg(long)]
        rule: String,
        #[arg(long)]
        config: String,
        #[arg(long, default_value_t = 1)]
        steps: u64,
        #[arg(long, value_enum)]
        render: Option<RenderMode>,
        #[command(flatten)]
        view: View,
    },
    /// Draw a configuration as grain stacks
    Render {
        #[arg(long)]
        config: String,
        #[command(flatten)]
        view: View,
    },
    /// Distance between two configurations
    Distance { first: String, second: String },
    /// List the built-in automata, or print one as a rule file
    Zoo { name: Option<String> },
    /// Pre-image of a configuration under L
    Preimage {
        #[arg(long)]
        config: String,
    },
    /// Lift two colliding finite configurations to colliding periodic ones
    Crown {
        #[arg(long)]
        rule: String,
        first: String,
        second: String,
    },
    /// Cut a periodic pre-image of a periodic target out of any pre-image
    Splice {
        #[arg(long)]
        rule: String,
        /// A pre-image of the target
        #[arg(long)]
        config: String,
        #[arg(long)]
        target: String,
        /// A period of the target
        #[arg(long)]
        period: u64,
    },
    /// Search for two distinct configurations with the same image
    CheckInjective {
        #[arg(long)]
        rule: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Search for a pre-image of `--config`
    CheckSurjective {
        #[arg(long)]
        rule: String,
        #[arg(long)]
        config: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Iterate until the zero configuration or the step bound
    CheckNilpotent {
        #[arg(long)]
        rule: String,
        #[arg(long)]
        config: String,
        #[arg(long)]
        steps: u64,
    },
    /// Check that two distinct configurations have the same image
    VerifyWitness {
        #[arg(long)]
        rule: String,
        first: String,
        second: String,
    },
    /// Test `rule(inverse(c)) = c` on seeded random configurations
    VerifyInverse {
        #[arg(long)]
        rule: String,
        #[arg(long)]
        inverse: String,
        #[arg(long, default_value_t = 500)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest finite height drawn
        #[arg(long, default_value_t = 3)]
        height: i64,
        /// Also draw +inf and -inf columns
        #[arg(long)]
        with_infinities: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderMode {
    Ascii,
}

#[derive(Debug, Args)]
pub struct View {
    /// Columns to draw, `LO:HI` inclusive
    #[arg(long, allow_hyphen_values = true)]
    columns: Option<String>,
    /// Append an exact dump block that `parse_dump` reads back
    #[arg(long)]
    dump: bool,
    /// Clip stacks taller than this
    #[arg(long, default_value_t = 16)]
    max_rows: u64,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Configuration class: F (finite), P (periodic) or EC (eventually constant)
    #[arg(long, default_value = "F")]
    class: SearchClass,
    /// Window radius n for F and EC: columns -n..=n
    #[arg(long)]
    window: Option<u64>,
    /// Largest period for P
    #[arg(long)]
    period: Option<u64>,
    /// Largest absolute height
    #[arg(long, default_value_t = 2)]
    height: u64,
    /// Also enumerate +inf and -inf columns
    #[arg(long)]
    with_infinities: bool,
    /// Refuse searches with more candidates than this
    #[arg(long, default_value_t = SearchOptions::default().max_candidates)]
    max_candidates: u64,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Growth(#[from] CoreGrowthError),
}

/// What a run prints and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

/// Reads `SANDLAB_MAX_CORE`-style values.
pub fn limits_from(value: Option<&str>) -> Result<IterateLimits, CliError> {
    match value {
        None => Ok(IterateLimits::default()),
        Some(v) => v
            .trim()
            .parse()
            .ok()
            .filter(|&n: &usize| n > 0)
            .map(|max_core| IterateLimits { max_core })
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "{MAX_CORE_VAR}: expected a positive integer, got `{v}`"
                ))
            }),
    }
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })
}

/// A built-in name (`S`, `Sr`, `L`, `X`, `Y`, `identity`) or a rule file.
pub fn resolve_rule(arg: &str) -> Result<SandAutomaton, CliError> {
    if let Ok(name) = ZooName::from_str(arg) {
        return Ok(name.automaton());
    }
    if arg.eq_ignore_ascii_case("identity") {
        return Ok(SandAutomaton::identity(1));
    }
    if !Path::new(arg).exists() {
        return Err(CliError::Usage(format!(
            "`{arg}` is neither a built-in automaton (S, Sr, L, X, Y, identity) nor a file"
        )));
    }
    parse_rule(&read(arg)?).map_err(|source| CliError::Parse {
        path: arg.into(),
        source,
    })
}

/// A config file, or the name of a corpus entry.
pub fn resolve_config(arg: &str) -> Result<Config, CliError> {
    let (path, text) = if Path::new(arg).exists() {
        (arg.to_string(), read(arg)?)
    } else if let Some(text) = corpus::lookup(arg) {
        (format!("corpus:{arg}"), text.to_string())
    } else {
        return Err(CliError::Usage(format!(
            "`{arg}` is neither a file nor a corpus entry"
        )));
    };
    parse_config(&text).map_err(|source| CliError::Parse { path, source })
}

fn columns(view: &View, c: &Config) -> Result<(i64, i64), CliError> {
    if let Some(spec) = &view.columns {
        let bad = || CliError::Usage(format!("--columns: expected LO:HI, got `{spec}`"));
        let (lo, hi) = spec.split_once(':').ok_or_else(bad)?;
        let (lo, hi): (i64, i64) = (
            lo.trim().parse().map_err(|_| bad())?,
            hi.trim().parse().map_err(|_| bad())?,
        );
        if lo > hi {
            return Err(bad());
        }
        return Ok((lo, hi));
    }
    let pl = c.left_tail().len() as i64;
    let pr = c.right_tail().len() as i64;
    Ok((
        c.core_start().min(0) - pl.max(2),
        (c.core_end() - 1).max(0) + pr.max(2),
    ))
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}

#[derive(Serialize)]
struct Json<'a, T: Serialize> {
    manifest: &'a RunManifest,
    #[serde(flatten)]
    body: T,
}

fn to_json<T: Serialize>(manifest: &RunManifest, body: T) -> String {
    let mut s = serde_json::to_string_pretty(&Json { manifest, body }).expect("reports serialize");
    s.push('\n');
    s
}

fn report_text(m: &RunManifest, rep: &WitnessReport) -> String {
    let mut s = format!("{m}\nverdict: {}\n", rep.verdict);
    if let Some(g) = rep.grade {
        let g = serde_json::to_value(g).expect("grade serializes");
        writeln!(s, "grade: {}", g.as_str().unwrap_or_default()).unwrap();
    }
    writeln!(s, "candidates: {}", rep.candidates).unwrap();
    let b = &rep.bounds;
    let mut bounds = Vec::new();
    if let Some(c) = b.class {
        bounds.push(format!("class={c}"));
    }
    for (k, v) in [
        ("window", b.window),
        ("height", b.height),
        ("period", b.period),
        ("steps", b.steps),
        ("samples", b.samples),
        ("seed", b.seed),
    ] {
        if let Some(v) = v {
            bounds.push(format!("{k}={v}"));
        }
    }
    if !bounds.is_empty() {
        writeln!(s, "bounds: {}", bounds.join(" ")).unwrap();
    }
    if !rep.note.is_empty() {
        writeln!(s, "note: {}", rep.note).unwrap();
    }
    match &rep.witness {
        None => {}
        Some(Witness::Pair { first, second }) => {
            write!(
                s,
                "witness: pair\nfirst:\n{}second:\n{}",
                indent(&emit_config(first)),
                indent(&emit_config(second))
            )
            .unwrap();
        }
        Some(Witness::Preimage { config }) => {
            write!(s, "witness: pre-image\n{}", indent(&emit_config(config))).unwrap();
        }
        Some(Witness::ZeroAt { step }) => writeln!(s, "witness: zero at step {step}").unwrap(),
        Some(Witness::Counterexample { config }) => {
            write!(
                s,
                "witness: counterexample\n{}",
                indent(&emit_config(config))
            )
            .unwrap();
        }
    }
    s
}

fn report(m: &RunManifest, rep: &WitnessReport) -> String {
    match m.output {
        OutputMode::Text => report_text(m, rep),
        OutputMode::Json => to_json(m, rep),
    }
}

fn search_bound(args: &SearchArgs) -> Result<(&'static str, u64), CliError> {
    match (args.class, args.window, args.period) {
        (SearchClass::P, Some(_), _) => Err(CliError::Usage(
            "class P takes --period, not --window".into(),
        )),
        (SearchClass::P, None, p) => Ok(("period", p.unwrap_or(4))),
        (_, _, Some(_)) => Err(CliError::Usage(format!(
            "class {} takes --window, not --period",
            args.class
        ))),
        (_, w, None) => Ok(("window", w.unwrap_or(2))),
    }
}

fn search_manifest(
    m: RunManifest,
    args: &SearchArgs,
) -> Result<(RunManifest, u64, SearchOptions), CliError> {
    let (key, bound) = search_bound(args)?;
    let m = m
        .param("class", args.class)
        .param(key, bound)
        .param("height", args.height)
        .param("with-infinities", args.with_infinities)
        .param("max-candidates", args.max_candidates);
    let opts = SearchOptions {
        with_infinities: args.with_infinities,
        max_candidates: args.max_candidates,
    };
    Ok((m, bound, opts))
}

/// Executes one command. `max_core` is the raw `SANDLAB_MAX_CORE` value.
pub fn run(cli: &Cli, max_core: Option<&str>) -> Result<Outcome, CliError> {
    let mode = if cli.json {
        OutputMode::Json
    } else {
        OutputMode::Text
    };
    let limits = limits_from(max_core)?;
    match &cli.command {
        Command::Simulate {
            rule,
            config,
            steps,
            render,
            view,
        } => {
            let m = RunManifest::new("simulate", mode)
                .input("rule", rule)
                .input("config", config)
                .param("steps", steps)
                .param("max-core", limits.max_core);
            let a = resolve_rule(rule)?;
            let end = a.iterate(&resolve_config(config)?, *steps, &limits)?;
            if mode == OutputMode::Json {
                #[derive(Serialize)]
                struct Body<'a> {
                    config: &'a Config,
                }
                return Ok(Outcome::ok(to_json(&m, Body { config: &end })));
            }
            let body = match render {
                Some(RenderMode::Ascii) => {
                    let (lo, hi) = columns(view, &end)?;
                    let opts = RenderOptions {
                        max_rows: view.max_rows,
                        dump: view.dump,
                    };
                    render_ascii(&end, lo, hi, &opts)
                }
                None => emit_config(&end),
            };
            Ok(Outcome::ok(format!("{m}\n{body}")))
        }
        Command::Render { config, view } => {
            let c = resolve_config(config)?;
            let (lo, hi) = columns(view, &c)?;
            let opts = RenderOptions {
                max_rows: view.max_rows,
                dump: view.dump,
            };
            let text = render_ascii(&c, lo, hi, &opts);
            if mode == OutputMode::Json {
                let m = RunManifest::new("render", mode)
                    .input("config", config)
                    .param("columns", format!("{lo}:{hi}"));
                #[derive(Serialize)]
                struct Body {
                    first: i64,
                    values: Vec<sandlab_core::Height>,
                    render: String,
                }
                let body = Body {
                    first: lo,
                    values: c.window(lo, hi),
                    render: text,
                };
                return Ok(Outcome::ok(to_json(&m, body)));
            }
            Ok(Outcome::ok(text))
        }
        Command::Distance { first, second } => {
            let d = distance(&resolve_config(first)?, &resolve_config(second)?);
            if mode == OutputMode::Json {
                let m = RunManifest::new("distance", mode)
                    .input("first", first)
                    .input("second", second);
                #[derive(Serialize)]
                struct Body {
                    distance: String,
                    exponent: Option<u64>,
                }
                return Ok(Outcome::ok(to_json(
                    &m,
                    Body {
                        distance: d.to_string(),
                        exponent: d.exponent(),
                    },
                )));
            }
            Ok(Outcome::ok(format!("{d}\n")))
        }
        Command::Zoo { name } => {
            let Some(name) = name else {
                let mut s = String::new();
                for n in ZooName::ALL {
                    let a = n.automaton();
                    writeln!(
                        s,
                        "{:<3} radius {}  {}",
                        n.to_string(),
                        a.radius(),
                        describe(n)
                    )
                    .unwrap();
                }
                if mode == OutputMode::Json {
                    let m = RunManifest::new("zoo", mode);
                    #[derive(Serialize)]
                    struct Body {
                        automata: Vec<String>,
                    }
                    let automata = ZooName::ALL.iter().map(|n| n.to_string()).collect();
                    return Ok(Outcome::ok(to_json(&m, Body { automata })));
                }
                return Ok(Outcome::ok(s));
            };
            let a = ZooName::from_str(name)
                .map_err(CliError::Usage)?
                .automaton();
            if mode == OutputMode::Json {
                let m = RunManifest::new("zoo", mode).input("rule", name);
                #[derive(Serialize)]
                struct Body<'a> {
                    automaton: &'a SandAutomaton,
                }
                return Ok(Outcome::ok(to_json(&m, Body { automaton: &a })));
            }
            Ok(Outcome::ok(emit_rule(&a)))
        }
        Command::Preimage { config } => {
            let m = RunManifest::new("preimage", mode)
                .input("rule", "L")
                .input("config", config);
            let pre = build_l_preimage(&resolve_config(config)?)?;
            Ok(Outcome::ok(config_out(&m, "preimage", &pre)))
        }
        Command::Crown {
            rule,
            first,
            second,
        } => {
            let m = RunManifest::new("crown", mode)
                .input("rule", rule)
                .input("first", first)
                .input("second", second);
            let a = resolve_rule(rule)?;
            let (d1, d2) = crown_lift(&resolve_config(first)?, &resolve_config(second)?, &a)?;
            if mode == OutputMode::Json {
                #[derive(Serialize)]
                struct Body<'a> {
                    first: &'a Config,
                    second: &'a Config,
                    period: Option<usize>,
                }
                let period = d1.period().max(d2.period());
                return Ok(Outcome::ok(to_json(
                    &m,
                    Body {
                        first: &d1,
                        second: &d2,
                        period,
                    },
                )));
            }
            Ok(Outcome::ok(format!(
                "{m}\nfirst:\n{}second:\n{}",
                indent(&emit_config(&d1)),
                indent(&emit_config(&d2))
            )))
        }
        Command::Splice {
            rule,
            config,
            target,
            period,
        } => {
            let m = RunManifest::new("splice", mode)
                .input("rule", rule)
                .input("config", config)
                .input("target", target)
                .param("period", period);
            let a = resolve_rule(rule)?;
            let sp = periodic_splice(
                &a,
                &resolve_config(config)?,
                &resolve_config(target)?,
                *period,
            )?;
            if mode == OutputMode::Json {
                return Ok(Outcome::ok(to_json(&m, &sp)));
            }
            Ok(Outcome::ok(format!(
                "{m}\nk1: {}\nk2: {}\nmultiples-scanned: {}\nconfig:\n{}",
                sp.k1,
                sp.k2,
                sp.multiples_scanned,
                indent(&emit_config(&sp.config))
            )))
        }
        Command::CheckInjective { rule, search } => {
            let m = RunManifest::new("check-injective", mode).input("rule", rule);
            let (m, bound, opts) = search_manifest(m, search)?;
            let rep = check_injective_bounded(
                &resolve_rule(rule)?,
                search.class,
                bound,
                search.height,
                &opts,
            )?;
            Ok(Outcome::ok(report(&m, &rep)))
        }
        Command::CheckSurjective {
            rule,
            config,
            search,
        } => {
            let m = RunManifest::new("check-surjective", mode)
                .input("rule", rule)
                .input("config", config);
            let (m, bound, opts) = search_manifest(m, search)?;
            let a = resolve_rule(rule)?;
            let target = resolve_config(config)?;
            let rep =
                check_preimage_bounded(&a, &target, search.class, bound, search.height, &opts)?;
            Ok(Outcome::ok(report(&m, &rep)))
        }
        Command::CheckNilpotent {
            rule,
            config,
            steps,
        } => {
            let m = RunManifest::new("check-nilpotent", mode)
                .input("rule", rule)
                .input("config", config)
                .param("steps", steps)
                .param("max-core", limits.max_core);
            let rep = check_nilpotent_bounded(
                &resolve_rule(rule)?,
                &resolve_config(config)?,
                *steps,
                &limits,
            )?;
            Ok(Outcome::ok(report(&m, &rep)))
        }
        Command::VerifyWitness {
            rule,
            first,
            second,
        } => {
            let m = RunManifest::new("verify-witness", mode)
                .input("rule", rule)
                .input("first", first)
                .input("second", second);
            let verified = verify_witness_pair(
                &resolve_rule(rule)?,
                &resolve_config(first)?,
                &resolve_config(second)?,
            );
            let stdout = if mode == OutputMode::Json {
                #[derive(Serialize)]
                struct Body {
                    verified: bool,
                }
                to_json(&m, Body { verified })
            } else {
                format!("{m}\nverified: {verified}\n")
            };
            Ok(Outcome {
                stdout,
                code: if verified { 0 } else { 1 },
            })
        }
        Command::VerifyInverse {
            rule,
            inverse,
            samples,
            seed,
            height,
            with_infinities,
        } => {
            let mut m = RunManifest::new("verify-inverse", mode)
                .input("rule", rule)
                .input("inverse", inverse)
                .param("samples", samples)
                .param("height", height)
                .param("with-infinities", with_infinities);
            m.seed = Some(*seed);
            if *height < 0 {
                return Err(CliError::Usage("--height must be nonnegative".into()));
            }
            let sampler = ConfigSampler {
                height: *height,
                with_infinities: *with_infinities,
                ..ConfigSampler::default()
            };
            let rep = verify_right_inverse(
                &resolve_rule(rule)?,
                &resolve_rule(inverse)?,
                *samples,
                *seed,
                &sampler,
            );
            let code = if rep.verdict == Verdict::ExhaustedNoWitness {
                0
            } else {
                1
            };
            Ok(Outcome {
                stdout: report(&m, &rep),
                code,
            })
        }
    }
}

fn config_out(m: &RunManifest, key: &'static str, c: &Config) -> String {
    match m.output {
        OutputMode::Text => format!("{m}\n{}", emit_config(c)),
        OutputMode::Json => {
            let mut body = serde_json::Map::new();
            body.insert(
                key.into(),
                serde_json::to_value(c).expect("configs serialize"),
            );
            to_json(m, body)
        }
    }
}

fn describe(n: ZooName) -> &'static str {
    match n {
        ZooName::S => "sandpile: a grain falls right onto a neighbor at least 2 lower",
        ZooName::Sr => "mirrored sandpile: grains fall left",
        ZooName::L => "each column steps once toward its left neighbor",
        ZooName::X => "injective on finite configurations, not on periodic ones",
        ZooName::Y => "injective on finite and periodic configurations, not on all",
    }
}
