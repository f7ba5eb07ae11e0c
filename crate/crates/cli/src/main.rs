//! Command-line tables over the exact moduli computations.
//!
//! Every subcommand prints deterministic text or JSON derived from exact
//! rational arithmetic; identical invocations produce byte-identical output.
//! Exit codes: 0 on success, 1 on a verification failure, 2 on usage errors.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use stablemap_core::chow::{by_name, GradedQuotient, Presentation};
use stablemap_core::correlators::{parse_insertions, via_ring, Engine};
use stablemap_core::golden;
use stablemap_core::localization::{euler_class, integrals_table, spec_main, Space};
use stablemap_core::poly::{varset, MultiPoly};
use stablemap_core::relations::find_relations;
use stablemap_core::serre::{betti_m02, poincare_m01, poincare_m02};
use stablemap_core::verify;
use stablemap_core::Rat;

#[derive(Parser)]
#[command(name = "stablemap", version, about = "Exact tables for stable-map moduli over the projective line")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Poincare polynomial and Euler characteristic of a pointed space.
    Serre(SerreArgs),
    /// Betti numbers of the two-pointed degree-two space.
    Betti(BettiArgs),
    /// Torus fixed-point graphs with automorphism orders and Euler classes.
    Graphs(GraphsArgs),
    /// Table of top-degree divisor-monomial integrals.
    Integrals(IntegralsArgs),
    /// Serialize, load, and verify a graded ring presentation.
    Presentation(PresentationArgs),
    /// Ring relations recovered from the integral pairing matrices.
    Relations(RelationsArgs),
    /// Two-point gravitational correlator table at degree two.
    Correlators(CorrelatorsArgs),
    /// Run the complete verification battery.
    VerifyAll,
}

#[derive(Args)]
struct SerreArgs {
    /// Target projective space dimension.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=16))]
    r: u32,
    /// Number of marked points (1 or 2).
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=2))]
    points: u32,
}

#[derive(Args)]
struct BettiArgs {
    /// Target projective space dimension.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=16))]
    r: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceId {
    M01d2,
    M02d2,
}

impl SpaceId {
    fn space(self) -> Space {
        match self {
            SpaceId::M01d2 => Space::OnePoint,
            SpaceId::M02d2 => Space::TwoPoint,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct GraphsArgs {
    /// Which moduli space's fixed loci to list.
    #[arg(long, value_enum)]
    space: SpaceId,
}

#[derive(Args)]
struct IntegralsArgs {
    /// Which moduli space to integrate over.
    #[arg(long, value_enum)]
    space: SpaceId,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct PresentationArgs {
    /// Catalog name (m01d1, m02d1, m03d1, m03d0, m01d2, m02d2, m02d2min).
    #[arg(long, alias = "space", conflicts_with = "load")]
    name: Option<String>,
    /// Load a presentation document from a JSON file instead.
    #[arg(long)]
    load: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Re-check every defining relation and calibration in the built ring.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct RelationsArgs {
    /// Restrict to one degree (all degrees 0..=4 otherwise).
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..=4))]
    degree: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Ring,
    Axioms,
    Both,
}

#[derive(Args)]
struct CorrelatorsArgs {
    /// Evaluation route: ring integral, axiom recursion, or both cross-checked.
    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
}

/// Declarative JSON schema for a graded ring presentation.
#[derive(Serialize, Deserialize)]
struct PresentationDoc {
    name: String,
    generators: Vec<String>,
    top_degree: u32,
    /// Each relation is a monomial -> coefficient map.
    relations: Vec<BTreeMap<String, String>>,
    calibrations: Vec<CalibrationDoc>,
}

#[derive(Serialize, Deserialize)]
struct CalibrationDoc {
    monomial: String,
    value: String,
}

fn pres_to_doc(p: &Presentation) -> PresentationDoc {
    PresentationDoc {
        name: p.name.clone(),
        generators: p.gens.iter().cloned().collect(),
        top_degree: p.top_degree,
        relations: p
            .relations
            .iter()
            .map(|r| r.to_string_map().into_iter().collect())
            .collect(),
        calibrations: p
            .calibrations
            .iter()
            .map(|(m, v)| CalibrationDoc {
                monomial: stablemap_core::poly::mono_to_string(m, &p.gens),
                value: v.to_string(),
            })
            .collect(),
    }
}

fn doc_to_pres(doc: PresentationDoc) -> Result<Presentation, String> {
    let gens = varset(&doc.generators.iter().map(|s| s.as_str()).collect::<Vec<_>>());
    let mut relations = Vec::new();
    for rel in &doc.relations {
        relations.push(MultiPoly::from_string_map(
            &gens,
            rel.iter().map(|(m, c)| (m.as_str(), c.as_str())),
        )?);
    }
    let mut calibrations = Vec::new();
    for c in &doc.calibrations {
        let mono = stablemap_core::poly::parse_mono(&c.monomial, &gens)?;
        let value: Rat = c.value.parse()?;
        calibrations.push((mono, value));
    }
    Ok(Presentation {
        name: doc.name,
        gens,
        relations,
        top_degree: doc.top_degree,
        calibrations,
    })
}

/// Report row for one degree of the relation search.
#[derive(Serialize)]
struct DegreeReport {
    degree: u32,
    monomials: Vec<String>,
    kernel: Vec<Vec<String>>,
    betti: i64,
    #[serde(rename = "match")]
    matches: bool,
}

fn degree_report(degree: u32) -> DegreeReport {
    let search = find_relations(degree);
    let vars = stablemap_core::relations::divisor_vars();
    let monomials = search
        .spanning
        .iter()
        .map(|m| stablemap_core::poly::mono_to_string(m, &vars))
        .collect();
    let kernel: Vec<Vec<String>> = search
        .kernel
        .iter()
        .map(|v| v.iter().map(|c| c.to_string()).collect())
        .collect();
    let betti = betti_m02(1, degree as i64);
    let matches = search.spanning.len() - search.kernel.len() == betti as usize;
    DegreeReport {
        degree,
        monomials,
        kernel,
        betti,
        matches,
    }
}

enum Failure {
    /// Verification failed: exit 1.
    Check(String),
    /// Bad input outside clap's reach: exit 2.
    Usage(String),
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Serre(a) => {
            let p = match a.points {
                1 => poincare_m01(a.r),
                _ => poincare_m02(a.r),
            };
            println!("{}, chi={}", p, p.eval_one());
        }
        Command::Betti(a) => {
            for j in 0..=(3 * a.r as i64 + 1) {
                println!("b{} = {}", j, betti_m02(a.r, j));
            }
        }
        Command::Graphs(a) => {
            let space = a.space.space();
            let spec = spec_main();
            println!(
                "# fixed loci of {} at lambda0={} lambda1={}",
                space.id(),
                spec.lambda(0),
                spec.lambda(1)
            );
            for (i, g) in space.graph_catalog().iter().enumerate() {
                println!(
                    "Z{}: key={} aut={} euler={}",
                    i + 1,
                    g.canonical_key(),
                    g.aut_order(),
                    euler_class(g, &spec)
                );
            }
        }
        Command::Integrals(a) => {
            let space = a.space.space();
            let table = integrals_table(space);
            match a.format {
                Format::Text => {
                    for (name, val) in &table {
                        println!("{name} = {val}");
                    }
                }
                Format::Json => {
                    let map: BTreeMap<String, String> = table
                        .into_iter()
                        .map(|(n, v)| (n, v.to_string()))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&map).unwrap());
                }
            }
        }
        Command::Presentation(a) => {
            let pres = match (&a.name, &a.load) {
                (Some(name), None) => by_name(name)
                    .ok_or_else(|| Failure::Usage(format!("unknown presentation {name:?}")))?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                    let doc: PresentationDoc = serde_json::from_str(&text)
                        .map_err(|e| Failure::Usage(format!("bad presentation document: {e}")))?;
                    doc_to_pres(doc).map_err(Failure::Usage)?
                }
                _ => return Err(Failure::Usage("pass exactly one of --name or --load".into())),
            };
            let q = GradedQuotient::build(pres).map_err(Failure::Check)?;
            match a.format {
                Format::Text => {
                    println!("name: {}", q.pres.name);
                    println!("generators: {}", q.pres.gens.join(", "));
                    println!("top degree: {}", q.pres.top_degree);
                    let dims: Vec<String> = q.dims().iter().map(|d| d.to_string()).collect();
                    println!("graded dimensions: ({})", dims.join(", "));
                    if a.verify {
                        for (i, rel) in q.pres.relations.iter().enumerate() {
                            if !q.is_zero_mod(rel) {
                                return Err(Failure::Check(format!("relation {} not satisfied", i + 1)));
                            }
                            println!("relation {}: {} = 0 ok", i + 1, rel);
                        }
                        for (m, v) in &q.pres.calibrations {
                            let mono = MultiPoly::monomial(&q.pres.gens, m.clone(), Rat::one());
                            let got = q.integrate(&mono).map_err(Failure::Check)?;
                            if &got != v {
                                return Err(Failure::Check(format!(
                                    "calibration {} integrates to {} instead of {}",
                                    mono, got, v
                                )));
                            }
                            println!("calibration {} = {} ok", mono, v);
                        }
                    }
                }
                Format::Json => {
                    if a.verify {
                        for rel in &q.pres.relations {
                            if !q.is_zero_mod(rel) {
                                return Err(Failure::Check(format!("relation {rel} not satisfied")));
                            }
                        }
                    }
                    let doc = pres_to_doc(&q.pres);
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
        }
        Command::Relations(a) => {
            let degrees: Vec<u32> = match a.degree {
                Some(k) => vec![k],
                None => (0..=4).collect(),
            };
            let reports: Vec<DegreeReport> = degrees.into_iter().map(degree_report).collect();
            match a.format {
                Format::Text => {
                    for r in &reports {
                        println!(
                            "degree {}: spanning={} kernel={} betti={} match={}",
                            r.degree,
                            r.monomials.len(),
                            r.kernel.len(),
                            r.betti,
                            r.matches
                        );
                        println!("  monomials: {}", r.monomials.join(", "));
                        for v in &r.kernel {
                            println!("  kernel: [{}]", v.join(", "));
                        }
                    }
                }
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&reports).unwrap());
                }
            }
            if reports.iter().any(|r| !r.matches) {
                return Err(Failure::Check("relation count mismatch against Betti numbers".into()));
            }
        }
        Command::Correlators(a) => {
            let mut engine = Engine::new();
            let ring = GradedQuotient::build(by_name("m02d2").unwrap()).map_err(Failure::Check)?;
            let mut disagreements = 0;
            for (key, _) in golden::GRAVITATIONAL_CORRELATORS {
                let ins = parse_insertions(key).map_err(Failure::Check)?;
                match a.method {
                    Method::Ring => {
                        let v = via_ring(&ring, 2, &ins).map_err(Failure::Check)?;
                        println!("{key} = {v}");
                    }
                    Method::Axioms => {
                        println!("{key} = {}", engine.eval(2, &ins));
                    }
                    Method::Both => {
                        let r = via_ring(&ring, 2, &ins).map_err(Failure::Check)?;
                        let x = engine.eval(2, &ins);
                        if r == x {
                            println!("{key} = {r} AGREE");
                        } else {
                            println!("{key} = {r} vs {x} DISAGREE");
                            disagreements += 1;
                        }
                    }
                }
            }
            if disagreements > 0 {
                return Err(Failure::Check(format!("{disagreements} correlators disagree")));
            }
        }
        Command::VerifyAll => {
            let checks = verify::run_all();
            let mut failed = 0;
            for c in &checks {
                if c.passed {
                    println!("pass {}: {}", c.name, c.details);
                } else {
                    println!("FAIL {}: {}", c.name, c.details);
                    failed += 1;
                }
            }
            if failed > 0 {
                return Err(Failure::Check(format!("{failed} checks failed")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
