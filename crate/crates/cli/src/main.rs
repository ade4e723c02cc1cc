use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use fano64::bundles::{chi_rank2, degree_p1_bundle, p1_bundle_anticanonical, solve_c2_for_degree, RankTwoBundleData};
use fano64::elimination::{reproduce, CaseRecord, ReproduceReport, Stage, Verdict};
use fano64::ledger::genus_of_degree;
use fano64::surfaces::{BaseSurface, SurfaceClass};
use fano64::toric::{anticanonical_polytope, cone_summaries, fmt_point, polytope_degree, validate_fan, Fan};
use fano64::wps::{
    wps_anticanonical_index, wps_degree, wps_edge_singularity, wps_is_gorenstein, wps_vertex_singularity, Weights,
};
use fano64::{Error, Int, Rational};
use serde_json::{json, Value};

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;

#[derive(Parser)]
#[command(name = "fano64", version, about = "Exact invariants of Fano threefolds and their degree-64 classification")]
struct Cli {
    /// Print one JSON document instead of a table.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of P(E) for a rank-2 bundle E on P2 or F0..F4.
    Bundle {
        #[arg(long)]
        base: String,
        /// `a` on P2 (multiple of L), `a,b` on Fn (a h + b l).
        #[arg(long, allow_hyphen_values = true)]
        c1: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "solve_degree", required_unless_present = "solve_degree")]
        c2: Option<Int>,
        /// Solve for c2 so that (-K)^3 equals this degree.
        #[arg(long, allow_hyphen_values = true)]
        solve_degree: Option<Int>,
    },
    /// Invariants and singularities of a weighted projective 3-space.
    Wps {
        #[arg(num_args = 4, required = true)]
        weights: Vec<u64>,
    },
    /// Inspect a fan read from a JSON fan file.
    Toric {
        file: PathBuf,
        action: ToricAction,
        /// Expected anticanonical degree; a different value exits with status 2.
        #[arg(long, allow_hyphen_values = true)]
        expect: Option<Rational>,
    },
    /// Run the full case analysis and print the classification.
    Reproduce {
        /// Only records of one stage: 5 P1-bundles, 6 projections, 7 quadric bundles, 8 rank-2 sections.
        #[arg(long, value_parser = parse_stage)]
        section: Option<Stage>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ToricAction {
    Validate,
    Degree,
    Singularities,
}

fn parse_stage(s: &str) -> Result<Stage, String> {
    s.parse::<u8>()
        .ok()
        .and_then(Stage::from_number)
        .ok_or_else(|| format!("unknown section '{s}', expected one of 5, 6, 7, 8"))
}

/// What a subcommand produced: the text or JSON to print and its status.
struct Outcome {
    table: String,
    machine: Value,
    code: u8,
}

impl Outcome {
    fn ok(table: String, machine: Value) -> Self {
        Outcome { table, machine, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let result = match cli.command {
        Command::Bundle { base, c1, c2, solve_degree } => cmd_bundle(&base, &c1, c2, solve_degree),
        Command::Wps { weights } => cmd_wps(&weights),
        Command::Toric { file, action, expect } => cmd_toric(&file, action, expect),
        Command::Reproduce { section } => cmd_reproduce(section),
    };
    match result {
        Ok(out) => {
            let text = if cli.machine {
                serde_json::to_string_pretty(&out.machine).expect("JSON values serialize") + "\n"
            } else {
                out.table
            };
            // A closed pipe (e.g. `| head`) is not an error of ours.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn parse_base(s: &str) -> Result<BaseSurface, Error> {
    let base: BaseSurface = s.parse()?;
    match base.hirzebruch_index() {
        Some(n) if n > 4 => Err(Error::Usage(format!("base must be one of P2, F0..F4, got {base}"))),
        _ => Ok(base),
    }
}

fn parse_c1(base: BaseSurface, s: &str) -> Result<SurfaceClass, Error> {
    let parts: Vec<Int> = s
        .split(',')
        .map(|p| p.trim().parse::<Int>().map_err(|_| Error::Parse(format!("bad c1 coefficient '{p}'"))))
        .collect::<Result<_, _>>()?;
    match (base, parts.as_slice()) {
        (BaseSurface::ProjectivePlane, [a]) => Ok(SurfaceClass::plane(a.clone())),
        (BaseSurface::Hirzebruch(n), [a, b]) => Ok(SurfaceClass::ruled(n, a.clone(), b.clone())),
        (BaseSurface::ProjectivePlane, _) => Err(Error::Usage(format!("c1 on P2 takes one coefficient, got '{s}'"))),
        (BaseSurface::Hirzebruch(_), _) => Err(Error::Usage(format!("c1 on {base} takes two coefficients a,b, got '{s}'"))),
    }
}

fn cmd_bundle(base: &str, c1: &str, c2: Option<Int>, solve: Option<Int>) -> Result<Outcome, Error> {
    let base = parse_base(base)?;
    let c1 = parse_c1(base, c1)?;
    let mut table = format!("base: {base}\nc1: {c1}\n");
    let c2 = match (c2, solve) {
        (Some(c2), _) => c2,
        (None, Some(target)) => {
            let sol = solve_c2_for_degree(base, &c1, target.clone())?;
            let flag = if sol.integral { "INTEGRAL" } else { "NON-INTEGRAL" };
            table += &format!("target degree: {target}\nc2: {} ({flag})\n", sol.c2);
            let mut machine = json!({
                "base": base,
                "c1": c1,
                "target_degree": target.to_string(),
                "c2": sol.c2,
                "integral": sol.integral,
            });
            if let Some(c2) = sol.c2.to_integer() {
                let data = RankTwoBundleData::new(base, c1, c2)?;
                let chi = chi_rank2(&data);
                table += &format!("-K_Y: {}\nchi(E): {chi}\n", p1_bundle_anticanonical(&data));
                machine["anticanonical"] = json!(p1_bundle_anticanonical(&data).to_string());
                machine["chi"] = json!(chi);
            }
            return Ok(Outcome::ok(table, machine));
        }
        (None, None) => return Err(Error::Usage("pass --c2 or --solve-degree".into())),
    };
    let data = RankTwoBundleData::new(base, c1.clone(), c2.clone())?;
    let anti = p1_bundle_anticanonical(&data);
    let degree = degree_p1_bundle(&data);
    let chi = chi_rank2(&data);
    table += &format!("c2: {c2}\n-K_Y: {anti}\ndegree: {degree}\nchi(E): {chi}\n");
    let machine = json!({
        "base": base,
        "c1": c1,
        "c2": c2.to_string(),
        "anticanonical": anti.to_string(),
        "degree": degree.to_string(),
        "chi": chi,
    });
    Ok(Outcome::ok(table, machine))
}

fn cmd_wps(weights: &[u64]) -> Result<Outcome, Error> {
    let arr: [u64; 4] = weights
        .try_into()
        .map_err(|_| Error::Usage(format!("expected four weights, got {}", weights.len())))?;
    let w = Weights::new(arr)?;
    let degree = wps_degree(&w);
    let index = wps_anticanonical_index(&w);
    let gorenstein = wps_is_gorenstein(&w);
    let genus = degree
        .to_integer()
        .and_then(|d| i64::try_from(d).ok())
        .and_then(|d| genus_of_degree(d).ok());

    let mut table = format!("{w}\ndegree: {degree}\n");
    match &genus {
        Some(g) => table += &format!("genus: {}\nambient dimension: {}\n", g.genus, g.ambient_dim),
        None => table += "genus: n/a (degree is not a positive even integer)\n",
    }
    table += &format!("anticanonical index: {index}\nGorenstein: {}\n", if gorenstein { "yes" } else { "no" });

    let mut vertices = Vec::new();
    table += "vertices:\n";
    for i in 0..4 {
        let q = wps_vertex_singularity(&w, i)?;
        table += &format!("  P{i}: {q}\n");
        vertices.push(json!({ "vertex": i, "type": q.to_string(), "quotient": q }));
    }
    let mut edges = Vec::new();
    table += "edges:\n";
    for i in 0..4 {
        for j in i + 1..4 {
            let q = wps_edge_singularity(&w, i, j)?;
            table += &format!("  P{i}P{j}: {q}\n");
            edges.push(json!({ "edge": [i, j], "type": q.to_string(), "quotient": q }));
        }
    }
    let machine = json!({
        "weights": w,
        "degree": degree,
        "genus": genus.map(|g| g.genus),
        "ambient_dim": genus.map(|g| g.ambient_dim),
        "index": index,
        "gorenstein": gorenstein,
        "vertices": vertices,
        "edges": edges,
    });
    Ok(Outcome::ok(table, machine))
}

fn cmd_toric(file: &PathBuf, action: ToricAction, expect: Option<Rational>) -> Result<Outcome, Error> {
    if expect.is_some() && !matches!(action, ToricAction::Degree) {
        return Err(Error::Usage("--expect applies to the degree action only".into()));
    }
    let text = std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
    let fan = Fan::from_json(&text)?;
    match action {
        ToricAction::Validate => {
            let report = validate_fan(&fan);
            let mut table = String::new();
            if report.is_clean() {
                table += "fan is clean\n";
            } else {
                table += &format!("{} finding(s):\n", report.findings.len());
                for f in &report.findings {
                    table += &format!("  {f}\n");
                }
            }
            let failures = report.gorenstein_failures();
            if !failures.is_empty() {
                table += &format!("Gorenstein support fails on cone(s) {failures:?}\n");
            }
            let machine = json!({
                "clean": report.is_clean(),
                "findings": report.findings,
                "messages": report.findings.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "gorenstein_failures": failures,
            });
            Ok(Outcome::ok(table, machine))
        }
        ToricAction::Degree => {
            let poly = anticanonical_polytope(&fan)?;
            let degree = polytope_degree(&poly)?;
            let report = validate_fan(&fan);
            let mut table = format!(
                "degree: {degree}\npolytope: {} vertices, {} facets\n",
                poly.vertices().len(),
                poly.facet_count()
            );
            for v in poly.vertices() {
                table += &format!("  {}\n", fmt_point(v));
            }
            if !report.is_clean() {
                table += &format!("warning: the fan has {} validation finding(s):\n", report.findings.len());
                for f in &report.findings {
                    table += &format!("  {f}\n");
                }
            }
            let mut code = 0;
            if let Some(expected) = &expect {
                let matches = &degree == expected;
                table += &format!(
                    "expected: {expected}\ncomputed: {degree}\ncheck: {}\n",
                    if matches { "MATCH" } else { "MISMATCH" }
                );
                if !matches {
                    code = EXIT_MISMATCH;
                }
            }
            let machine = json!({
                "degree": degree,
                "vertices": poly.vertices().iter().map(fmt_point).collect::<Vec<_>>(),
                "facets": poly.facet_count(),
                "clean": report.is_clean(),
                "findings": report.findings.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "expected": expect,
                "matches": expect.as_ref().map(|e| e == &degree),
            });
            Ok(Outcome { table, machine, code })
        }
        ToricAction::Singularities => {
            let summaries = cone_summaries(&fan);
            let mut table = String::new();
            for s in &summaries {
                let index = s.lattice_index.as_ref().map_or("-".to_string(), ToString::to_string);
                let sing = s.singularity.as_ref().map_or("-".to_string(), ToString::to_string);
                let support = s
                    .gorenstein_support
                    .as_ref()
                    .map_or("none".to_string(), ToString::to_string);
                table += &format!("cone {} {:?}: index {index}, {sing}, Gorenstein support {support}", s.cone, s.rays);
                if let Some(note) = &s.note {
                    table += &format!(" ({note})");
                }
                table += "\n";
            }
            Ok(Outcome::ok(table, json!(summaries)))
        }
    }
}

fn record_line(r: &CaseRecord) -> String {
    let values: Vec<String> = r.values.iter().map(|q| format!("{} = {}", q.name, q.value)).collect();
    let mut line = format!("  [{}] {:<14} {}", r.stage.number(), r.verdict.short(), r.label);
    if !values.is_empty() {
        line += &format!(" | {}", values.join(", "));
    }
    line
}

fn render_report(report: &ReproduceReport) -> String {
    let mut out = String::new();
    if report.stages.len() == Stage::ALL.len() {
        out += "Fano threefolds with canonical Gorenstein singularities and (-K)^3 = 64:\n";
        for item in &report.classification {
            out += &format!("  {}. {} (degree {})\n", item.number, item.name, item.degree);
            out += &format!("     {}\n", item.construction);
            for chain in &item.chains {
                out += &format!("     chain: {chain}\n");
            }
            for q in &item.cross_checks {
                out += &format!("     {} = {}\n", q.name, q.value);
            }
        }
        out += "\nReference chains:\n";
        for c in &report.chains {
            out += &format!("  {}: {} (expected {})\n", c.label, c.chain, c.expected);
        }
        out += "\n";
    }
    for &stage in &report.stages {
        out += &format!("Stage {stage}:\n");
        for r in report.records.iter().filter(|r| r.stage == stage) {
            out += &record_line(r);
            out += "\n";
            if let Verdict::ArithmeticContradiction { reason, .. } = &r.verdict {
                out += &format!("      {reason}\n");
            }
        }
        out += "\n";
    }
    let count = |f: fn(&Verdict) -> bool| report.records.iter().filter(|r| f(&r.verdict)).count();
    out += &format!(
        "{} records: {} arithmetic contradictions, {} geometric arguments, {} survivors\n",
        report.records.len(),
        count(|v| matches!(v, Verdict::ArithmeticContradiction { .. })),
        count(|v| matches!(v, Verdict::GeometricArgument { .. })),
        count(|v| matches!(v, Verdict::Survives { .. })),
    );
    if report.ok() {
        out += "all witnesses verified, all checks hold, all chains land on their degree\n";
    } else {
        out += "MISMATCH:\n";
        for p in &report.problems {
            out += &format!("  {p}\n");
        }
    }
    out
}

fn cmd_reproduce(section: Option<Stage>) -> Result<Outcome, Error> {
    let report = reproduce(section)?;
    let code = if report.ok() { 0 } else { EXIT_MISMATCH };
    if !report.ok() {
        for p in &report.problems {
            eprintln!("mismatch: {p}");
        }
    }
    Ok(Outcome {
        table: render_report(&report),
        machine: json!(report),
        code,
    })
}
