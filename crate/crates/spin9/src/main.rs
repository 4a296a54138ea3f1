//! Command-line driver for the verification suites.
//!
//! Subcommands run one suite each; `all` runs everything. Reports go to
//! stdout as text and, with `--json FILE`, to disk as deterministic JSON.
//! Exit status: 0 all checks pass, 1 at least one check failed, 2 usage
//! error.

use spin9::report::{Report, ReportSet};
use spin9::suites::{self, SuiteOptions};
use std::process::ExitCode;
use std::time::Instant;

const USAGE: &str = "\
usage: spin9 <subcommand> [flags]

subcommands:
  clifford                relations and block checks for the involutions
  liealg                  bases, projections, covector table diff, complement projections
  spinorforms             kernel dimensions, decompositions, commutants
  omega8 [--out FILE]     compute the invariant 8-form, self-duality, invariance
  identities              codifferential and differential identities, the two 3-form maps
  charclass               Pontrjagin identities, divisibility, intersections, Cayley plane
  twistor                 fiber algebra, torsion and curvature residuals, endomorphism family
  all                     every suite in order

flags:
  --json FILE             write the deterministic JSON report to FILE
  --out FILE              (omega8) write the form in the text serialization
  --seed N                seed for the randomized draws (default 9)
  --draws K               number of randomized draws (default 20)
  --deep                  include the long-running checks
  --timings               include elapsed milliseconds in the JSON report
";

struct Args {
    subcommand: String,
    json: Option<String>,
    out: Option<String>,
    seed: u64,
    draws: usize,
    deep: bool,
    timings: bool,
}

fn parse_args() -> Result<Args, String> {
    let mut args = std::env::args().skip(1);
    let subcommand = args
        .next()
        .ok_or_else(|| "missing subcommand".to_string())?;
    let known = [
        "clifford",
        "liealg",
        "spinorforms",
        "omega8",
        "identities",
        "charclass",
        "twistor",
        "all",
    ];
    if !known.contains(&subcommand.as_str()) {
        return Err(format!("unknown subcommand {subcommand}"));
    }
    let mut parsed = Args {
        subcommand,
        json: None,
        out: None,
        seed: 9,
        draws: 20,
        deep: false,
        timings: false,
    };
    while let Some(flag) = args.next() {
        match flag.as_str() {
            "--json" => {
                parsed.json = Some(args.next().ok_or("--json needs a file")?);
            }
            "--out" => {
                if parsed.subcommand != "omega8" {
                    return Err("--out only applies to omega8".to_string());
                }
                parsed.out = Some(args.next().ok_or("--out needs a file")?);
            }
            "--seed" => {
                parsed.seed = args
                    .next()
                    .ok_or("--seed needs a number")?
                    .parse()
                    .map_err(|e| format!("bad seed: {e}"))?;
            }
            "--draws" => {
                parsed.draws = args
                    .next()
                    .ok_or("--draws needs a number")?
                    .parse()
                    .map_err(|e| format!("bad draw count: {e}"))?;
            }
            "--deep" => parsed.deep = true,
            "--timings" => parsed.timings = true,
            other => return Err(format!("unknown flag {other}")),
        }
    }
    Ok(parsed)
}

fn main() -> ExitCode {
    let args = match parse_args() {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}\n{USAGE}");
            return ExitCode::from(2);
        }
    };
    let opts = SuiteOptions {
        seed: args.seed,
        draws: args.draws,
        deep: args.deep,
    };
    let mut reports: Vec<Report> = Vec::new();
    match args.subcommand.as_str() {
        "clifford" => reports.push(timed(args.timings, suites::clifford_suite)),
        "liealg" => reports.push(timed(args.timings, suites::liealg_suite)),
        "spinorforms" => reports.push(timed(args.timings, || suites::spinorforms_suite(&opts))),
        "omega8" => {
            let art = suites::compute_omega8_artifacts();
            if let Some(path) = &args.out {
                if let Err(e) = std::fs::write(path, art.omega.form.serialize()) {
                    eprintln!("error: writing {path}: {e}");
                    return ExitCode::from(2);
                }
                println!(
                    "wrote {} terms to {path} (kernel dimension 1)",
                    art.omega.form.coeffs.len()
                );
            }
            reports.push(timed(args.timings, || suites::omega8_suite(&art)));
        }
        "identities" => {
            let art = suites::compute_omega8_artifacts();
            reports.push(timed(args.timings, || {
                suites::identities_suite(&art, &opts)
            }));
        }
        "charclass" => reports.push(timed(args.timings, suites::charclass_suite)),
        "twistor" => reports.push(timed(args.timings, || suites::twistor_suite(&opts))),
        "all" => {
            let t0 = Instant::now();
            for suite in suites::all_suites(&opts) {
                reports.push(suite);
            }
            if args.timings {
                if let Some(last) = reports.last_mut() {
                    last.elapsed_ms = Some(t0.elapsed().as_millis());
                }
            }
        }
        _ => unreachable!(),
    }
    let set = ReportSet { reports };
    print!("{}", set.render_text());
    if let Some(path) = &args.json {
        if let Err(e) = std::fs::write(path, set.to_json()) {
            eprintln!("error: writing {path}: {e}");
            return ExitCode::from(2);
        }
    }
    if set.failures() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn timed(timings: bool, f: impl FnOnce() -> Report) -> Report {
    let t0 = Instant::now();
    let mut r = f();
    if timings {
        r.elapsed_ms = Some(t0.elapsed().as_millis());
    }
    r
}
