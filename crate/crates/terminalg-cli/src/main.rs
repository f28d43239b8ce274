//! `terminalg` — exact verification tools for nilpotent terminal algebras.
//!
//! Subcommands: `verify-catalog`, `check`, `cohomology`, `extend`,
//! `degenerate`, `invariants`, `catalog dump`. The environment variable
//! `TERMINALG_SEED` overrides `--seed` where one applies.

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use terminalg::algebra::Algebra;
use terminalg::catalog::{self, fingerprint, IsoBudget};
use terminalg::cohomology;
use terminalg::degeneration::{verify_degeneration, DegenOutcome};
use terminalg::harness::{self, HarnessConfig};
use terminalg::jsonio::{
    describe_algebra, dump_catalog, AlgebraJson, CocycleJson, ExtensionSpecJson, WitnessJson,
};

#[derive(Parser)]
#[command(
    name = "terminalg",
    version,
    about = "Exact tools for nilpotent terminal algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the whole verification harness over the bundled catalog.
    VerifyCatalog(VerifyArgs),
    /// Check one identity on an algebra (file or catalog name).
    Check {
        /// Path to an algebra JSON file, or a catalog instance like "T3_01(2)".
        algebra: String,
        /// One of: terminal, leibniz, jordan, nilpotent, commutative.
        identity: String,
    },
    /// Print the cocycle spaces and cohomology of an algebra.
    Cohomology {
        algebra: String,
        #[arg(long)]
        json: bool,
    },
    /// Build a central extension from a spec file and analyze it.
    Extend {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Verify a degeneration witness file.
    Degenerate {
        witness: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the isomorphism-invariant fingerprint of an algebra.
    Invariants {
        algebra: String,
        #[arg(long)]
        json: bool,
    },
    /// Catalog data commands.
    Catalog {
        #[command(subcommand)]
        sub: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Emit the bundled catalog (metadata plus sampled algebras) as JSON.
    Dump,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run only checks whose id starts with this prefix (e.g. "h2").
    #[arg(long)]
    only: Option<String>,
    /// Per-family parameter samples.
    #[arg(long, default_value_t = 3)]
    samples: usize,
    /// Seed for the randomized checks (TERMINALG_SEED overrides).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Also list passing records in the text report.
    #[arg(long)]
    verbose: bool,
    /// Write the report to this path as well.
    #[arg(long)]
    report: Option<String>,
    /// Stop printing after the first failure.
    #[arg(long)]
    fail_fast: bool,
    /// Candidate budget for isomorphism witness searches.
    #[arg(long, default_value_t = 40_000)]
    iso_budget: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::VerifyCatalog(args) => verify_catalog(args),
        Command::Check { algebra, identity } => check(&algebra, &identity),
        Command::Cohomology { algebra, json } => cohomology_cmd(&algebra, json),
        Command::Extend { spec, json } => extend(&spec, json),
        Command::Degenerate { witness, json } => degenerate(&witness, json),
        Command::Invariants { algebra, json } => invariants(&algebra, json),
        Command::Catalog {
            sub: CatalogCommand::Dump,
        } => {
            let dump = dump_catalog();
            println!("{}", serde_json::to_string_pretty(&dump)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verify_catalog(args: VerifyArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let seed = std::env::var("TERMINALG_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(args.seed);
    let config = HarnessConfig {
        seed,
        samples: args.samples,
        only: args.only,
        iso_budget: IsoBudget {
            max_candidates: args.iso_budget,
        },
        ..HarnessConfig::default()
    };
    let report = harness::run(&config);
    let rendered = if args.json {
        serde_json::to_string_pretty(&report)?
    } else if args.fail_fast {
        match report.failures().next() {
            Some(first) => format!(
                "{} {} {} : {}\n(first failure shown; {} failures total)\n",
                first.check_id, first.subject, first.params, first.detail, report.fail
            ),
            None => report.to_text(args.verbose),
        }
    } else {
        report.to_text(args.verbose)
    };
    println!("{rendered}");
    if let Some(path) = args.report {
        std::fs::write(path, rendered)?;
    }
    Ok(if report.fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

/// Loads an algebra from a JSON file path or a catalog instance name.
fn load_algebra(arg: &str) -> Result<Algebra, Box<dyn std::error::Error>> {
    if Path::new(arg).exists() {
        let text = std::fs::read_to_string(arg)?;
        let parsed: AlgebraJson = serde_json::from_str(&text).map_err(|e| format!("{arg}: {e}"))?;
        Ok(parsed.to_algebra()?)
    } else {
        let (name, params) = catalog::parse_instance(arg)?;
        Ok(catalog::catalog().build(&name, &params)?)
    }
}

fn check(algebra: &str, identity: &str) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let a = load_algebra(algebra)?;
    let (holds, witness): (bool, Option<String>) = match identity {
        "terminal" => {
            let w = a.terminal_witness();
            (
                w.is_none(),
                w.map(|t| format!("(a,b,x,y) = e{},e{},e{},e{}", t.0, t.1, t.2, t.3)),
            )
        }
        "leibniz" => {
            let w = a.left_leibniz_witness();
            (
                w.is_none(),
                w.map(|t| format!("(x,y,z) = e{},e{},e{}", t.0, t.1, t.2)),
            )
        }
        "jordan" => {
            let w = a.jordan_witness();
            (
                w.is_none(),
                w.map(|t| {
                    if t.2 == 0 {
                        format!("non-commutative pair e{},e{}", t.0, t.1)
                    } else {
                        format!("(x1,x2,x3,y) = e{},e{},e{},e{}", t.0, t.1, t.2, t.3)
                    }
                }),
            )
        }
        "nilpotent" => {
            let (nil, idx) = a.is_nilpotent();
            (
                nil,
                idx.map(|k| format!("index {k}"))
                    .or(Some("chain never reaches zero".into())),
            )
        }
        "commutative" => (a.is_commutative(), None),
        other => return Err(format!("unknown identity `{other}`").into()),
    };
    println!("{holds}");
    match (identity, holds, witness) {
        ("nilpotent", true, Some(w)) => println!("{w}"),
        (_, false, Some(w)) => println!("witness: {w}"),
        _ => {}
    }
    Ok(if holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cohomology_cmd(algebra: &str, json: bool) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let a = load_algebra(algebra)?;
    let coh = cohomology::cohomology(&a);
    let z2t = cohomology::terminal_cocycles(&a);
    let z2l = cohomology::leibniz_cocycles(&a);
    let b2 = cohomology::coboundaries(&a);
    if json {
        let as_json = |cs: &[cohomology::Cocycle]| -> Vec<CocycleJson> {
            cs.iter().map(CocycleJson::from_cocycle).collect()
        };
        let out = serde_json::json!({
            "algebra": a.label(),
            "dim_z2t": coh.dim_z2t(),
            "dim_b2": coh.dim_b2(),
            "dim_h2t": coh.dim_h2t(),
            "dim_h2l": coh.dim_h2l(),
            "z2t": as_json(&z2t),
            "z2l": as_json(&z2l),
            "b2": as_json(&b2),
            "h2t_representatives": as_json(coh.h2t_representatives()),
            "h2l_representatives": as_json(coh.h2l_representatives()),
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!("algebra: {}", a.label());
        println!(
            "dims: Z2T {}  B2 {}  H2T {}  H2L {}",
            coh.dim_z2t(),
            coh.dim_b2(),
            coh.dim_h2t(),
            coh.dim_h2l()
        );
        let show = |name: &str, cs: &[cohomology::Cocycle]| {
            println!("{name}:");
            for c in cs {
                println!("  {c:?}");
            }
        };
        show("Z2T basis", &z2t);
        show("B2 basis", &b2);
        show("H2T representatives", coh.h2t_representatives());
        show("H2L representatives", coh.h2l_representatives());
    }
    Ok(ExitCode::SUCCESS)
}

fn extend(spec: &str, json: bool) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(spec)?;
    let parsed: ExtensionSpecJson = serde_json::from_str(&text)?;
    let resolved = parsed.resolve()?;
    let ext = terminalg::extensions::central_extension(&resolved);
    let identity = terminalg::extensions::verify_extension_identity(&resolved);
    let in_ts = cohomology::in_t_s(resolved.base(), resolved.thetas());
    let split = terminalg::extensions::is_split(&resolved);
    let leibniz_class = cohomology::is_leibniz_class(resolved.base(), resolved.thetas());
    if json {
        let out = serde_json::json!({
            "extension": AlgebraJson::from_algebra(&ext),
            "terminal": identity.extension_terminal,
            "cocycles_terminal": identity.cocycles_terminal,
            "in_t_s": in_ts,
            "split": split.as_ref().ok(),
            "split_error": split.as_ref().err().map(|e| e.to_string()),
            "leibniz_class": leibniz_class,
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!(
            "extension of {} by {} cocycle(s):",
            resolved.base().label(),
            resolved.s()
        );
        for line in describe_algebra(&ext) {
            println!("  {line}");
        }
        println!("terminal: {}", identity.extension_terminal);
        println!("cocycles in Z2T: {}", identity.cocycles_terminal);
        println!("in T_s: {in_ts}");
        match split {
            Ok(s) => println!("split: {s}"),
            Err(e) => println!("split: precondition fails ({e})"),
        }
        println!("Leibniz class: {leibniz_class}");
    }
    Ok(ExitCode::SUCCESS)
}

fn degenerate(witness: &str, json: bool) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(witness)?;
    let parsed: WitnessJson = serde_json::from_str(&text)?;
    let (source, target, basis) = parsed.resolve()?;
    let outcome = verify_degeneration(&source, &target, &basis)?;
    match outcome {
        DegenOutcome::Pass => {
            if json {
                println!("{}", serde_json::json!({"status": "pass"}));
            } else {
                println!("pass: {} -> {}", source.display(), target.label());
            }
            Ok(ExitCode::SUCCESS)
        }
        DegenOutcome::Fail(failures) => {
            if json {
                let rows: Vec<String> = failures.iter().map(|f| f.describe()).collect();
                println!(
                    "{}",
                    serde_json::json!({"status": "fail", "failures": rows})
                );
            } else {
                println!("fail: {} -> {}", source.display(), target.label());
                for f in &failures {
                    println!("  {}", f.describe());
                }
            }
            Ok(ExitCode::FAILURE)
        }
    }
}

fn invariants(algebra: &str, json: bool) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let a = load_algebra(algebra)?;
    let fp = fingerprint(&a);
    if json {
        println!("{}", serde_json::to_string_pretty(&fp)?);
    } else {
        println!("algebra: {}", a.label());
        println!("{fp:#?}");
    }
    Ok(ExitCode::SUCCESS)
}
