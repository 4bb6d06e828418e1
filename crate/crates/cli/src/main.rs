//! Command-line front end: evaluates diagram files or builtin diagrams with
//! both engines, and runs the verification suites as a CI-friendly gate.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qbracket::functor::{eval_directed, eval_undirected, identity_suite, EvalConfig};
use qbracket::halftwist::{kr_factorization_check, verify_ribbon_square, HalfTwistVariant};
use qbracket::qrep::RibbonFlavor;
use qbracket::skein::{jones, kauffman_bracket};
use qbracket::tangle::{
    apply_move, catalog_diagram, insert_curl, insert_zigzag, parse, random_diagram, Move, Side,
    CATALOG_NAMES,
};
use qbracket::{Orientation, SlicedDiagram};

#[derive(Parser)]
#[command(name = "qbracket", version, about = "Exact bracket and quantum invariants of framed links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bracket polynomial of a closed framed diagram.
    Bracket {
        /// Diagram file, or a builtin name.
        diagram: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the writhe-normalized invariant of a directed link.
    Jones {
        diagram: String,
        /// Direct component K with cK=+ or cK=-; repeat per component.
        #[arg(long = "orient", value_name = "cK=+|-")]
        orient: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the representation-theoretic functor on the diagram.
    Qeval {
        diagram: String,
        /// Ribbon normalization: s (standard) or t (half-twist).
        #[arg(long, value_enum)]
        ribbon: Option<Ribbon>,
        /// Type the strands by flow direction.
        #[arg(long)]
        directed: bool,
        /// Forget directions (the default).
        #[arg(long, conflicts_with = "directed")]
        undirected: bool,
        #[arg(long = "orient", value_name = "cK=+|-")]
        orient: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the writhe of a directed diagram.
    Writhe {
        diagram: String,
        #[arg(long = "orient", value_name = "cK=+|-")]
        orient: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the number of link components.
    Components {
        diagram: String,
        #[arg(long)]
        json: bool,
    },
    /// Full invariant report: every engine, every orientation, all checks.
    Report {
        diagram: String,
        /// Restrict the report to one orientation.
        #[arg(long = "orient", value_name = "cK=+|-")]
        orient: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification suites; exits nonzero on any failure.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random diagrams per randomized suite.
        #[arg(long, default_value_t = 50)]
        cases: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ribbon {
    /// Standard ribbon normalization; value picks up (-1)^(w+#L).
    S,
    /// Half-twist ribbon normalization; value equals the bracket.
    T,
}

impl Ribbon {
    fn flavor(self) -> RibbonFlavor {
        match self {
            Ribbon::S => RibbonFlavor::Standard,
            Ribbon::T => RibbonFlavor::HalfTwist,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// Reads the argument as a file path when one exists, falling back to the
/// builtin table.
fn load_diagram(arg: &str) -> Result<SlicedDiagram> {
    let path = Path::new(arg);
    if path.exists() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        return parse(&text).map_err(|e| anyhow!("{arg}: {e}"));
    }
    catalog_diagram(arg).ok_or_else(|| {
        anyhow!("no file or builtin diagram named '{arg}'; builtins: {}", CATALOG_NAMES.join(", "))
    })
}

/// Parses repeated `cK=+|-` flags. `None` when no flags were given.
fn parse_orient(flags: &[String], comps: usize) -> Result<Option<Orientation>> {
    if flags.is_empty() {
        return Ok(None);
    }
    let mut signs: Vec<Option<bool>> = vec![None; comps];
    for flag in flags {
        let (name, dir) = flag
            .split_once('=')
            .ok_or_else(|| anyhow!("bad orientation flag '{flag}'; expected cK=+ or cK=-"))?;
        let index: usize = name
            .strip_prefix('c')
            .and_then(|k| k.parse().ok())
            .ok_or_else(|| anyhow!("bad component name '{name}' in '{flag}'"))?;
        if index >= comps {
            bail!("component c{index} out of range; the diagram has {comps} component(s)");
        }
        let forward = match dir {
            "+" => true,
            "-" => false,
            _ => bail!("bad direction '{dir}' in '{flag}'; expected + or -"),
        };
        if signs[index].replace(forward).is_some() {
            bail!("component c{index} directed twice");
        }
    }
    let missing: Vec<String> = signs
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_none())
        .map(|(i, _)| format!("c{i}"))
        .collect();
    if !missing.is_empty() {
        bail!("missing directions for {}", missing.join(", "));
    }
    let signs = signs.into_iter().map(|s| s.expect("all present")).collect();
    Ok(Some(Orientation::from_signs(signs)))
}

/// Fills in the all-forward default where the value cannot depend on it:
/// knots and the empty diagram.
fn orientation_or_default(
    parsed: Option<Orientation>,
    comps: usize,
    what: &str,
) -> Result<Orientation> {
    match parsed {
        Some(o) => Ok(o),
        None if comps <= 1 => Ok(Orientation::all_forward(comps)),
        None => bail!(
            "{what} depends on the direction of each of the {comps} components; \
             pass --orient c0=+|- through c{}=+|-",
            comps - 1
        ),
    }
}

fn orient_string(o: &Orientation) -> String {
    (0..o.len()).map(|k| if o.is_forward(k) { '+' } else { '-' }).collect()
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Bracket { diagram, json } => {
            let d = load_diagram(&diagram)?;
            let value = kauffman_bracket(&d)?.to_string();
            if json {
                print_json(&serde_json::json!({ "diagram": diagram, "bracket": value }))?;
            } else {
                println!("{value}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Jones { diagram, orient, json } => {
            let d = load_diagram(&diagram)?;
            let comps = d.num_components()?;
            let o = orientation_or_default(parse_orient(&orient, comps)?, comps, "the invariant")?;
            let value = jones(&d, &o)?.to_string();
            if json {
                print_json(&serde_json::json!({
                    "diagram": diagram,
                    "orientation": orient_string(&o),
                    "jones": value,
                }))?;
            } else {
                println!("{value}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Qeval { diagram, ribbon, directed, undirected: _, orient, json } => {
            let d = load_diagram(&diagram)?;
            let value = if directed {
                let flavor = ribbon.unwrap_or(Ribbon::T);
                let comps = d.num_components()?;
                let parsed = parse_orient(&orient, comps)?;
                let o = match flavor {
                    // Direction-independent, so any direction serves.
                    Ribbon::T => parsed.unwrap_or_else(|| Orientation::all_forward(comps)),
                    Ribbon::S => {
                        orientation_or_default(parsed, comps, "standard-ribbon evaluation")?
                    }
                };
                eval_directed(&d, &o, &EvalConfig::with_flavor(flavor.flavor()))?
            } else {
                if ribbon.is_some() {
                    bail!("--ribbon applies only to --directed evaluation");
                }
                if !orient.is_empty() {
                    bail!("--orient applies only to --directed evaluation");
                }
                eval_undirected(&d, &EvalConfig::default())?
            };
            let value = value.to_string();
            if json {
                print_json(&serde_json::json!({
                    "diagram": diagram,
                    "mode": if directed { "directed" } else { "undirected" },
                    "value": value,
                }))?;
            } else {
                println!("{value}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Writhe { diagram, orient, json } => {
            let d = load_diagram(&diagram)?;
            let comps = d.num_components()?;
            let o = orientation_or_default(parse_orient(&orient, comps)?, comps, "the writhe")?;
            let w = d.writhe(&o)?;
            if json {
                print_json(&serde_json::json!({
                    "diagram": diagram,
                    "orientation": orient_string(&o),
                    "writhe": w,
                }))?;
            } else {
                println!("{w}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Components { diagram, json } => {
            let d = load_diagram(&diagram)?;
            let comps = d.num_components()?;
            if json {
                print_json(&serde_json::json!({ "diagram": diagram, "components": comps }))?;
            } else {
                println!("{comps}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { diagram, orient, json } => {
            let d = load_diagram(&diagram)?;
            let comps = d.num_components()?;
            let report = build_report(&diagram, &d, parse_orient(&orient, comps)?)?;
            if json {
                print_json(&report)?;
            } else {
                print_report_text(&report);
            }
            if report.consistent {
                Ok(ExitCode::SUCCESS)
            } else {
                bail!("report is internally inconsistent; see the failed rows above");
            }
        }
        Command::Check { seed, cases, json } => {
            let rows = run_check_suite(seed, cases);
            let all = rows.iter().all(|r| r.passed);
            if json {
                print_json(&serde_json::json!({
                    "seed": seed,
                    "cases": cases,
                    "checks": rows,
                    "all_passed": all,
                }))?;
            } else {
                for row in &rows {
                    println!("{}: {}", row.name, if row.passed { "pass" } else { "FAIL" });
                }
            }
            if all {
                Ok(ExitCode::SUCCESS)
            } else {
                let failed: Vec<&str> =
                    rows.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect();
                bail!("failing checks: {}", failed.join(", "));
            }
        }
    }
}

#[derive(Serialize)]
struct InvariantReport {
    diagram: String,
    components: usize,
    crossings: usize,
    bracket: String,
    undirected_functor: String,
    orientations: Vec<OrientationRow>,
    checks: Vec<CheckRow>,
    consistent: bool,
}

#[derive(Serialize)]
struct OrientationRow {
    orientation: String,
    writhe: i64,
    jones: String,
    half_twist_functor: String,
    standard_functor: String,
    half_twist_matches_bracket: bool,
    standard_sign_matches: bool,
}

#[derive(Serialize)]
struct CheckRow {
    name: String,
    passed: bool,
}

/// Evaluates every engine on the diagram. With no orientation given, all
/// orientations are listed for up to four components, otherwise only the
/// all-forward one.
fn build_report(
    id: &str,
    d: &SlicedDiagram,
    only: Option<Orientation>,
) -> Result<InvariantReport> {
    let comps = d.num_components()?;
    let bracket = kauffman_bracket(d)?;
    let undirected = eval_undirected(d, &EvalConfig::default())?;
    let orientations: Vec<Orientation> = match only {
        Some(o) => vec![o],
        None if comps <= 4 => Orientation::enumerate(comps).collect(),
        None => vec![Orientation::all_forward(comps)],
    };
    let half_twist = EvalConfig::default();
    let standard = EvalConfig::with_flavor(RibbonFlavor::Standard);
    let mut rows = Vec::new();
    for o in orientations {
        let w = d.writhe(&o)?;
        let ht = eval_directed(d, &o, &half_twist)?;
        let st = eval_directed(d, &o, &standard)?;
        let flip = (w + comps as i64).rem_euclid(2) == 1;
        let expected_st = if flip { -bracket.clone() } else { bracket.clone() };
        rows.push(OrientationRow {
            orientation: orient_string(&o),
            writhe: w,
            jones: jones(d, &o)?.to_string(),
            half_twist_matches_bracket: ht == bracket,
            standard_sign_matches: st == expected_st,
            half_twist_functor: ht.to_string(),
            standard_functor: st.to_string(),
        });
    }
    let checks: Vec<CheckRow> = identity_suite()
        .checks
        .iter()
        .map(|c| CheckRow { name: c.name.to_string(), passed: c.passed })
        .collect();
    let consistent = undirected == bracket
        && rows.iter().all(|r| r.half_twist_matches_bracket && r.standard_sign_matches)
        && checks.iter().all(|c| c.passed);
    Ok(InvariantReport {
        diagram: id.to_string(),
        components: comps,
        crossings: d.crossing_count(),
        bracket: bracket.to_string(),
        undirected_functor: undirected.to_string(),
        orientations: rows,
        checks,
        consistent,
    })
}

fn print_report_text(r: &InvariantReport) {
    println!("diagram: {}", r.diagram);
    println!("components: {}", r.components);
    println!("crossings: {}", r.crossings);
    println!("bracket: {}", r.bracket);
    println!("undirected functor: {}", r.undirected_functor);
    for row in &r.orientations {
        let label = if row.orientation.is_empty() { "(none)" } else { &row.orientation };
        println!(
            "orientation {label}: writhe {w}, jones {j}, half-twist {ht} ({htm}), standard {st} ({stm})",
            w = row.writhe,
            j = row.jones,
            ht = row.half_twist_functor,
            htm = if row.half_twist_matches_bracket { "= bracket" } else { "MISMATCH" },
            st = row.standard_functor,
            stm = if row.standard_sign_matches { "sign ok" } else { "SIGN MISMATCH" },
        );
    }
    let passed = r.checks.iter().filter(|c| c.passed).count();
    println!("identity checks: {passed}/{} pass", r.checks.len());
    for c in r.checks.iter().filter(|c| !c.passed) {
        println!("  failed: {}", c.name);
    }
}

/// The full verification battery: categorical identities, half-twist
/// algebra, and seeded randomized cross-checks of the two engines.
fn run_check_suite(seed: u64, cases: u32) -> Vec<CheckRow> {
    let mut rows: Vec<CheckRow> = identity_suite()
        .checks
        .iter()
        .map(|c| CheckRow { name: c.name.to_string(), passed: c.passed })
        .collect();
    for (label, variant) in
        [("real", HalfTwistVariant::Real), ("imaginary", HalfTwistVariant::Imaginary)]
    {
        rows.push(CheckRow {
            name: format!("half_twist_square_{label}"),
            passed: verify_ribbon_square(variant, 8),
        });
        rows.push(CheckRow {
            name: format!("braiding_factorization_{label}"),
            passed: kr_factorization_check(variant),
        });
    }

    let half_twist = EvalConfig::default();
    let standard = EvalConfig::with_flavor(RibbonFlavor::Standard);
    let mut agreement = true;
    let mut sign_ok = true;
    let mut moves_ok = true;
    for i in 0..cases {
        let d = random_diagram(10, 6, seed.wrapping_add(i as u64));
        let k = kauffman_bracket(&d).expect("random diagrams stay in budget");
        let comps = d.num_components().expect("random diagrams are closed");
        agreement &= eval_undirected(&d, &half_twist).expect("within width cap") == k;
        let orientations: Vec<Orientation> = if comps <= 3 {
            Orientation::enumerate(comps).collect()
        } else {
            vec![Orientation::all_forward(comps)]
        };
        for o in &orientations {
            agreement &= eval_directed(&d, o, &half_twist).expect("within width cap") == k;
            let w = d.writhe(o).expect("orientation covers the diagram");
            let flip = (w + comps as i64).rem_euclid(2) == 1;
            let want = if flip { -k.clone() } else { k.clone() };
            sign_ok &= eval_directed(&d, o, &standard).expect("within width cap") == want;
        }

        // Random diagrams open with a single cup, so boundary 1 always has
        // two strands: every site below is applicable by construction.
        let pos = (i % 2) as usize;
        let side = if i % 2 == 0 { Side::Left } else { Side::Right };
        let braided = apply_move(&d, Move::R2 { level: 1, pos: 0 }).expect("R2 site");
        moves_ok &= kauffman_bracket(&braided).expect("same budget") == k;
        let curled = insert_curl(&d, 1, pos, i % 3 == 0, side).expect("curl site");
        let swapped = apply_move(&curled, Move::FramedR1 { slice: 1, pos }).expect("curl found");
        moves_ok &= kauffman_bracket(&swapped).expect("same budget")
            == kauffman_bracket(&curled).expect("same budget");
        let zigzag = insert_zigzag(&d, 1, pos, side).expect("zigzag site");
        let slid = apply_move(&zigzag, Move::SlideCupCap { slice: 1, pos }).expect("zigzag found");
        moves_ok &= kauffman_bracket(&slid).expect("same budget") == k;
    }
    rows.push(CheckRow { name: "random_engine_agreement".into(), passed: agreement });
    rows.push(CheckRow { name: "random_standard_sign".into(), passed: sign_ok });
    rows.push(CheckRow { name: "random_move_invariance".into(), passed: moves_ok });
    rows
}
