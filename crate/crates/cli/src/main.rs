//! `ghm`: command-line front end for `ghm-core`.
//!
//! Without `--json` the bare result is printed as one JSON object; with it,
//! a [`RunReport`] wraps the result. Exit status is 0 on success, 2 when the
//! input falls outside the class an algorithm needs, 1 otherwise.

mod args;
mod bench;

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::Parser as _;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use args::*;
use ghm_core::c4free::{c4h_all_eccentricities, c4h_center, c4h_diametral_pair, chordal_diameter_certify};
use ghm_core::chordal::{chordal_diameter_traced, chordal_diameter_with, chordal_ecc_plus_one};
use ghm_core::helly::{helly_diametral_pair, helly_radius, small_eccentricities, SampleParams};
use ghm_core::oracles::{
    desk_bound, generate, is_c4_free, is_chordal, is_helly_ballfamily, is_split, GraphKind, Witness,
};
use ghm_core::split::{disjoint_set, split_diameter_pair, split_helly_diametral_pair, SetFamily, SparseSplit};
use ghm_core::{Error, Graph};

const SCHEMA: u32 = 1;

#[derive(Serialize)]
struct RunReport {
    schema: u32,
    command: String,
    input_sha256: Option<String>,
    seed: Option<u64>,
    result: Value,
    certificates: Vec<String>,
    witnesses: Vec<(usize, usize)>,
    wall_ms: f64,
}

#[derive(Default)]
struct Outcome {
    result: Value,
    certificates: Vec<String>,
    witnesses: Vec<(usize, usize)>,
    /// The command already wrote its own plain output.
    printed: bool,
}

impl Outcome {
    fn new(result: Value) -> Self {
        Outcome { result, ..Default::default() }
    }

    fn pair(mut self, x: usize, y: usize) -> Self {
        self.witnesses.push((x, y));
        self
    }
}

struct Input {
    text: String,
    hash: String,
}

fn read_input(io: &Io) -> anyhow::Result<Input> {
    let mut text = String::new();
    if io.input.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
    } else {
        text = std::fs::read_to_string(&io.input).with_context(|| format!("reading {}", io.input.display()))?;
    }
    let hash = hex::encode(Sha256::digest(text.as_bytes()));
    Ok(Input { text, hash })
}

fn parse_graph(io: &Io, input: &Input) -> Result<Graph, Error> {
    match io.format {
        Format::Edgelist => Graph::parse_edge_list(&input.text),
        Format::Dimacs => Graph::parse_dimacs(&input.text),
    }
}

/// The seed, required in report mode so that every run can be replayed.
fn seed(io: &Io) -> anyhow::Result<u64> {
    match io.seed {
        Some(s) => Ok(s),
        None if io.json => bail!("--seed is required with --json"),
        None => Ok(0),
    }
}

fn params(s: &Sampling) -> anyhow::Result<SampleParams> {
    Ok(SampleParams { c: s.c, seed: seed(&s.io)?, eps: s.eps, repeats: s.repeats, verify_class: s.verify_class })
}

fn emit(command: &str, io: &Io, input: Option<&Input>, started: Instant, out: Outcome) {
    if io.json {
        let report = RunReport {
            schema: SCHEMA,
            command: command.into(),
            input_sha256: input.map(|i| i.hash.clone()),
            seed: io.seed,
            result: out.result,
            certificates: out.certificates,
            witnesses: out.witnesses,
            wall_ms: started.elapsed().as_secs_f64() * 1e3,
        };
        println!("{}", serde_json::to_string(&report).unwrap());
    } else if !out.printed {
        println!("{}", serde_json::to_string(&out.result).unwrap());
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let started = Instant::now();
    match cli.cmd {
        Cmd::Helly { op } => {
            let (name, io) = match &op {
                HellyOp::Radius(s) => ("helly radius", &s.io),
                HellyOp::Diameter(s) => ("helly diameter", &s.io),
                HellyOp::EccLe { io, .. } => ("helly ecc-le", io),
            };
            let input = read_input(io)?;
            let g = parse_graph(io, &input)?;
            let out = match &op {
                HellyOp::Radius(s) => {
                    let p = params(s)?;
                    let r = helly_radius(&g, &p)?;
                    let mut out = Outcome::new(
                        json!({"radius": r.radius, "diam_upper": r.diam_upper, "center": r.center, "landmarks": r.landmarks}),
                    );
                    if s.verify_class {
                        out.certificates.push("helly-ballfamily".into());
                    }
                    out
                }
                HellyOp::Diameter(s) => {
                    let p = params(s)?;
                    let d = helly_diametral_pair(&g, &p)?;
                    let mut out = Outcome::new(json!({"diameter": d.d, "pair": [d.x, d.y]})).pair(d.x, d.y);
                    if s.verify_class {
                        out.certificates.push("helly-ballfamily".into());
                    }
                    out
                }
                HellyOp::EccLe { k, sources, .. } => {
                    let a: Vec<usize> = if sources.is_empty() { g.vertices().collect() } else { sources.clone() };
                    let (b, state) = small_eccentricities(&g, &a, *k)?;
                    Outcome::new(json!({"k": k, "vertices": b.to_sorted_vec(), "groups": state.groups.len()}))
                }
            };
            emit(name, io, Some(&input), started, out);
        }
        Cmd::C4h { op, io } => {
            let input = read_input(&io)?;
            let g = parse_graph(&io, &input)?;
            let (name, out) = match op {
                C4hOp::Center => {
                    let (r, centers) = c4h_center(&g)?;
                    ("c4h center", Outcome::new(json!({"radius": r, "center": centers[0], "centers": centers})))
                }
                C4hOp::Diameter => {
                    let c = c4h_diametral_pair(&g)?;
                    let mut v = serde_json::to_value(&c)?;
                    v["diameter"] = json!(c.d);
                    v["pair"] = json!([c.x, c.y]);
                    ("c4h diameter", Outcome::new(v).pair(c.x, c.y))
                }
                C4hOp::AllEcc => ("c4h all-ecc", Outcome::new(json!({"ecc": c4h_all_eccentricities(&g)?}))),
                C4hOp::CertifyChordal => {
                    let verdict = chordal_diameter_certify(&g)?;
                    let mut out = Outcome::new(serde_json::to_value(&verdict)?);
                    out.certificates.push("chordal-peo".into());
                    if let ghm_core::c4free::ChordalDiameter::CertifiedDiam { x, y, .. } = verdict {
                        out = out.pair(x, y);
                    }
                    ("c4h certify-chordal", out)
                }
            };
            emit(name, &io, Some(&input), started, out);
        }
        Cmd::Split { op, io, kernel } => {
            let input = read_input(&io)?;
            let h = SparseSplit::parse(&input.text)?;
            let (name, out) = match op {
                SplitOp::Diam => {
                    let (x, y, d) = split_diameter_pair(&h, kernel.into())?;
                    ("split diam", Outcome::new(json!({"diameter": d, "pair": [x, y]})).pair(x, y))
                }
                SplitOp::Pair => {
                    let p = split_helly_diametral_pair(&h)?;
                    ("split pair", Outcome::new(json!({"diameter": p.d, "pair": [p.x, p.y]})).pair(p.x, p.y))
                }
                SplitOp::Disjoint => {
                    let family = SetFamily::new(h.clique.len(), h.nbrs.clone());
                    let hit = disjoint_set(&family, kernel.into()).map(|(i, j)| [h.stable[i], h.stable[j]]);
                    ("split disjoint", Outcome::new(json!({"disjoint": hit.is_some(), "pair": hit})))
                }
            };
            emit(name, &io, Some(&input), started, out);
        }
        Cmd::Chordal { op } => {
            let (name, a) = match &op {
                ChordalOp::Diam(a) => ("chordal diam", a),
                ChordalOp::EccApprox(a) => ("chordal ecc-approx", a),
                ChordalOp::EmitSplits(a) => ("chordal emit-splits", a),
            };
            let input = read_input(&a.io)?;
            let g = parse_graph(&a.io, &input)?;
            let p = SampleParams { seed: seed(&a.io)?, repeats: a.repeats, ..SampleParams::default() };
            let mut out = match op {
                ChordalOp::Diam(_) => {
                    let d = chordal_diameter_with(&g, &p, a.kernel.into())?;
                    Outcome::new(json!({"diameter": d.d, "pair": [d.x, d.y], "depth": d.depth, "steps": d.steps, "instances": d.instances}))
                        .pair(d.x, d.y)
                }
                ChordalOp::EccApprox(_) => {
                    let e = chordal_ecc_plus_one(&g)?;
                    Outcome::new(json!({"ecc": e.ecc, "steps": e.levels.len()}))
                }
                ChordalOp::EmitSplits(_) => emit_splits(&g, &p, a, &a.io)?,
            };
            out.certificates.push("chordal-peo".into());
            emit(name, &a.io, Some(&input), started, out);
        }
        Cmd::Oracle { op: OracleOp::Check { io } } => {
            let input = read_input(&io)?;
            let g = parse_graph(&io, &input)?;
            let helly = is_helly_ballfamily(&g, desk_bound())?;
            let witness = match helly.witness {
                Witness::Balls { family } => json!(family.balls),
                _ => Value::Null,
            };
            let out = Outcome {
                result: json!({
                    "helly": helly.member,
                    "witness": witness,
                    "chordal": is_chordal(&g).member,
                    "c4_free": is_c4_free(&g).member,
                    "split": is_split(&g).member,
                }),
                certificates: vec![
                    "helly-ballfamily".into(),
                    "chordal-peo".into(),
                    "c4-free".into(),
                    "split-degree".into(),
                ],
                witnesses: Vec::new(),
                printed: false,
            };
            emit("oracle check", &io, Some(&input), started, out);
        }
        Cmd::Gen(a) => gen(a, started)?,
        Cmd::Bench(a) => bench::run(&a)?,
    }
    Ok(())
}

fn emit_splits(g: &Graph, p: &SampleParams, a: &ChordalArgs, io: &Io) -> anyhow::Result<Outcome> {
    let (d, steps) = chordal_diameter_traced(g, p, a.kernel.into())?;
    let mut listed = Vec::new();
    let mut text = String::new();
    for (i, step) in steps.iter().enumerate() {
        for inst in &step.instances {
            let body = inst.h.to_text();
            let file = format!("step{i:04}_r{:02}.split", inst.repeat);
            if let Some(dir) = &a.out {
                std::fs::create_dir_all(dir)?;
                std::fs::write(dir.join(&file), &body)?;
            }
            text.push_str(&format!(
                "# step {i} depth {} repeat {} diameter {}\n{body}",
                step.depth, inst.repeat, inst.diameter
            ));
            listed.push(json!({"step": i, "depth": step.depth, "repeat": inst.repeat, "diameter": inst.diameter,
                "stable": inst.h.stable.len(), "clique": inst.h.clique.len(), "ell": inst.h.ell(), "file": a.out.as_ref().map(|_| file)}));
        }
    }
    let mut out = Outcome::new(json!({"diameter": d.d, "instances": listed})).pair(d.x, d.y);
    if a.out.is_none() && !io.json {
        print!("{text}");
        out.printed = true;
    }
    Ok(out)
}

fn gen(a: GenArgs, started: Instant) -> anyhow::Result<()> {
    let seed = match a.seed {
        Some(s) => s,
        None if a.json => bail!("--seed is required with --json"),
        None => 0,
    };
    let kind = match a.kind {
        GenKind::Path => GraphKind::Path { n: a.n },
        GenKind::Star => GraphKind::Star { n: a.n },
        GenKind::Tree => GraphKind::RandomTree { n: a.n, seed },
        GenKind::King => GraphKind::King { rows: a.rows, cols: a.cols },
        GenKind::Block => GraphKind::BlockGraph { n: a.n, seed },
        GenKind::RandomChordal => GraphKind::RandomChordal { n: a.n, seed },
        GenKind::RandomChordalHelly => GraphKind::RandomChordalHelly { n: a.n, seed },
        GenKind::RandomSplitHelly => GraphKind::RandomSplitHelly { n: a.n, seed },
        GenKind::Fixture => {
            GraphKind::Fixture { name: a.name.clone().ok_or_else(|| anyhow!("--name is required for fixtures"))? }
        }
    };
    let g = generate(&kind)?;
    let text = g.to_edge_list();
    if let Some(path) = &a.out {
        std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
    }
    if !a.json {
        if a.out.is_none() {
            print!("{text}");
        }
        return Ok(());
    }
    let mut certs = vec![
        json!({"class": "chordal", "member": is_chordal(&g).member}),
        json!({"class": "c4-free", "member": is_c4_free(&g).member}),
        json!({"class": "split", "member": is_split(&g).member}),
    ];
    if g.n() <= desk_bound() {
        certs.push(json!({"class": "helly", "member": is_helly_ballfamily(&g, desk_bound())?.member}));
    }
    let mut result = json!({"generator": kind, "n": g.n(), "m": g.m(), "certificates": certs});
    if a.out.is_none() {
        result["edgelist"] = json!(text);
    }
    let report = RunReport {
        schema: SCHEMA,
        command: "gen".into(),
        input_sha256: None,
        seed: Some(seed),
        result,
        certificates: vec!["recognizers".into()],
        witnesses: Vec::new(),
        wall_ms: started.elapsed().as_secs_f64() * 1e3,
    };
    println!("{}", serde_json::to_string(&report)?);
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::ClassViolation(_) | Error::NotChordal | Error::NotHellyDetected | Error::NotAClique(..)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
