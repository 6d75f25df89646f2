use std::io::Write;

use serde_json::{json, Value};

use rootforge::catalog::{ambient_for, InclusionChain};
use rootforge::hermitian::RootClass;
use rootforge::pisys::{check_pi_system, generate, rebase_hermitian, weyl_equivalent_with_budget};
use rootforge::rootsys::{pretty, Root, RootSystem};
use rootforge::wdd::{
    dominate, push_coroot, sl2_admissible, weights_of, CorootEmbedding, WeightedDiagram,
};

use crate::args::{BuildArgs, CatalogCommand, DiagramArgs, EquivArgs, PiArgs, PiCommand, SystemArgs, WddCommand};
use crate::input::{self, PiFile};
use crate::{CliError, Status};

type Out<'a> = &'a mut dyn Write;

fn emit_json(out: Out, v: &Value) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

fn join_roots(v: &[Root]) -> String {
    v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(";")
}

fn system_label(args: &SystemArgs, s: &RootSystem) -> String {
    match (args.family, args.rank) {
        (Some(f), Some(r)) => format!("{f}{r}"),
        _ => format!("rank {} system", s.rank()),
    }
}

pub fn build(args: &BuildArgs, out: Out) -> Result<Status, CliError> {
    let s = input::system(&args.system, None)?;
    if args.json {
        emit_json(
            out,
            &json!({
                "rank": s.rank(),
                "cartan": s.cartan().entries(),
                "roots": s.len(),
                "positive": s.positive_roots().len(),
                "highest_root": s.highest_root(),
                "positive_roots": s.positive_roots(),
            }),
        )?;
        return Ok(Status::Ok);
    }
    writeln!(
        out,
        "{}: rank {}, {} roots, {} positive",
        system_label(&args.system, &s),
        s.rank(),
        s.len(),
        s.positive_roots().len()
    )?;
    writeln!(out, "highest root {}", s.highest_root())?;
    for r in s.positive_roots() {
        writeln!(out, "{r}  {}", pretty(r))?;
    }
    Ok(Status::Ok)
}

fn class_word(c: RootClass) -> &'static str {
    match c {
        RootClass::Compact => "compact",
        RootClass::NoncompactPositive => "noncompact",
        RootClass::NoncompactNegative => "noncompact (negative)",
    }
}

fn pi_common(args: &PiArgs) -> Result<(input::PiInput, rootforge::pisys::PiSystem), CliError> {
    let inp = input::pi_input(args)?;
    let pi = check_pi_system(&inp.system, inp.generators.clone())?;
    Ok((inp, pi))
}

pub fn pisystem(cmd: &PiCommand, out: Out) -> Result<Status, CliError> {
    match cmd {
        PiCommand::Check(args) => {
            let (_, pi) = pi_common(args)?;
            if args.json {
                emit_json(out, &json!({ "valid": true, "generators": pi.generators() }))?;
            } else {
                writeln!(out, "valid Π-system of {} roots", pi.len())?;
            }
        }
        PiCommand::Generate(args) => {
            let (_, pi) = pi_common(args)?;
            let sub = generate(&pi);
            let types: Vec<String> = sub.dynkin_types().iter().map(|t| t.to_string()).collect();
            if args.json {
                emit_json(
                    out,
                    &json!({
                        "generators": pi.generators(),
                        "roots": sub.len(),
                        "types": types,
                        "positive_roots": sub.positive_roots(),
                    }),
                )?;
            } else {
                writeln!(out, "{} roots, type {}", sub.len(), types.join("+"))?;
                for r in sub.positive_roots() {
                    writeln!(out, "{r}  {}", pretty(&r))?;
                }
            }
        }
        PiCommand::Rebase(args) => {
            let (inp, pi) = pi_common(args)?;
            let rb = rebase_hermitian(&inp.marking()?, &generate(&pi))?;
            if args.json {
                let rows: Vec<Value> = rb
                    .basis
                    .iter()
                    .zip(&rb.marks)
                    .map(|(b, c)| json!({ "root": b, "class": class_word(*c) }))
                    .collect();
                emit_json(out, &json!({ "basis": rows }))?;
            } else {
                for (b, c) in rb.basis.iter().zip(&rb.marks) {
                    writeln!(out, "{b}  {}  {}", pretty(b), class_word(*c))?;
                }
            }
        }
        PiCommand::Name(args) => {
            let (inp, pi) = pi_common(args)?;
            let rb = rebase_hermitian(&inp.marking()?, &generate(&pi))?;
            let name = rb.name(&inp.system)?;
            if args.json {
                emit_json(out, &json!({ "name": name, "basis": rb.basis }))?;
            } else {
                writeln!(out, "{name}")?;
            }
        }
        PiCommand::Equiv(args) => return equiv(args, out),
    }
    Ok(Status::Ok)
}

fn equiv(args: &EquivArgs, out: Out) -> Result<Status, CliError> {
    let (inp, pi) = pi_common(&args.first)?;
    let other = match (&args.other, &args.other_file) {
        (Some(g), _) => input::parse_roots(g)?,
        (None, Some(path)) => input::read_json::<PiFile>(path)?.generators,
        (None, None) => return Err(CliError::Input("pass --other or --other-file".into())),
    };
    let a = generate(&pi);
    let b = generate(&check_pi_system(&inp.system, other)?);
    let budget = input::budget(args.budget)?;
    let word = weyl_equivalent_with_budget(&inp.system, &a, &b, budget)?;
    if args.first.json {
        emit_json(out, &json!({ "equivalent": word.is_some(), "word": word }))?;
    } else {
        match word {
            Some(w) => {
                writeln!(out, "equivalent")?;
                writeln!(out, "word: {w}")?;
            }
            None => writeln!(out, "not equivalent")?,
        }
    }
    Ok(Status::Ok)
}

fn print_diagram(out: Out, s: &RootSystem, w: &WeightedDiagram) -> Result<(), CliError> {
    writeln!(out, "{w}")?;
    writeln!(out, "layout: {}", w.layout(s))?;
    Ok(())
}

fn diagram_json(s: &RootSystem, w: &WeightedDiagram) -> Value {
    json!({ "diagram": w, "layout": w.layout(s) })
}

pub fn wdd(cmd: &WddCommand, out: Out) -> Result<Status, CliError> {
    match cmd {
        WddCommand::Weights { system, coroot, json } => {
            let s = input::system(system, None)?;
            let w = weights_of(&s, &input::coroot(coroot)?)?;
            if *json {
                emit_json(out, &diagram_json(&s, &w))?;
            } else {
                print_diagram(out, &s, &w)?;
            }
        }
        WddCommand::Dominate(DiagramArgs { system, weights, json }) => {
            let s = input::system(system, None)?;
            let (d, word) = dominate(&s, &input::diagram(weights)?)?;
            if *json {
                let mut v = diagram_json(&s, &d);
                v["word"] = json!(word);
                emit_json(out, &v)?;
            } else {
                print_diagram(out, &s, &d)?;
                writeln!(out, "word: {word}")?;
            }
        }
        WddCommand::Admissible(DiagramArgs { system, weights, json }) => {
            let s = input::system(system, None)?;
            let w = input::diagram(weights)?;
            let ok = sl2_admissible(&s, &w)?;
            let (d, _) = dominate(&s, &w)?;
            if *json {
                let mut v = diagram_json(&s, &d);
                v["admissible"] = json!(ok);
                emit_json(out, &v)?;
            } else {
                writeln!(out, "{ok}")?;
                writeln!(out, "dominant: {}", d.layout(&s))?;
            }
        }
        WddCommand::Push {
            system,
            embedding,
            gens,
            coroot,
            json,
        } => {
            let h = input::coroot(coroot)?;
            let given = system.family.is_some() || system.cartan.is_some() || system.system_file.is_some();
            let ambient = if given { Some(input::system(system, None)?) } else { None };
            let emb: CorootEmbedding = match (embedding, gens, &ambient) {
                (Some(path), _, _) => input::read_json(path)?,
                (None, Some(g), Some(s)) => CorootEmbedding::from_generators(s, &input::parse_roots(g)?)?,
                (None, Some(_), None) => return Err(CliError::Input("--gens needs a root system".into())),
                (None, None, _) => return Err(CliError::Input("pass --embedding or --gens".into())),
            };
            let pushed = push_coroot(&emb, &h)?;
            let diagram = match &ambient {
                Some(s) => Some(weights_of(s, &pushed)?),
                None => None,
            };
            if *json {
                let mut v = json!({ "coroot": pushed });
                if let (Some(s), Some(d)) = (&ambient, &diagram) {
                    v["diagram"] = json!(d);
                    v["layout"] = json!(d.layout(s));
                }
                emit_json(out, &v)?;
            } else {
                writeln!(out, "{pushed}")?;
                if let (Some(s), Some(d)) = (&ambient, &diagram) {
                    writeln!(out, "diagram: {d}")?;
                    writeln!(out, "layout: {}", d.layout(s))?;
                }
            }
        }
    }
    Ok(Status::Ok)
}

fn chain_json(c: &InclusionChain) -> Value {
    let steps: Vec<Value> = c
        .steps
        .iter()
        .zip(&c.levels)
        .map(|(e, level)| {
            json!({
                "ambient": e.ambient,
                "name": e.subalgebra,
                "source": e.source,
                "generators": e.generators(),
                "outer_generators": level,
            })
        })
        .collect();
    json!({
        "names": c.names(),
        "steps": steps,
        "composed": c.composed_generators(),
    })
}

pub fn catalog(cmd: &CatalogCommand, out: Out) -> Result<Status, CliError> {
    match cmd {
        CatalogCommand::List {
            ambient,
            all,
            catalog,
            json,
        } => {
            let cat = input::catalog(catalog.as_deref())?;
            let name = input::name(ambient)?;
            let report = cat.enumerate(&name)?;
            if let Some(f) = report.failures.first() {
                return Err(rootforge::Error::CatalogRow(format!("{}: {}", f.source, f.failure)).into());
            }
            let entries = if *all { report.instances.clone() } else { report.maximal() };
            let records: Vec<_> = entries.iter().map(|e| e.record()).collect();
            if *json {
                emit_json(
                    out,
                    &json!({ "ambient": report.ambient, "entries": records, "audits": report.audits }),
                )?;
            } else {
                for r in &records {
                    let mark = if r.corrected { "  (corrected)" } else { "" };
                    writeln!(out, "{}  {}  {}{mark}", r.name, r.source, join_roots(&r.generators))?;
                }
                for a in &report.audits {
                    writeln!(out, "audit {}: {}; {}", a.source, a.failure, a.reason)?;
                }
            }
        }
        CatalogCommand::Chains {
            target,
            ambient,
            depth,
            catalog,
            json,
        } => {
            let cat = input::catalog(catalog.as_deref())?;
            let ambient = input::name(ambient)?;
            ambient_for(&ambient)?;
            let chains = cat.inclusion_chains(&input::name(target)?, &ambient, *depth)?;
            if *json {
                let v: Vec<Value> = chains.iter().map(chain_json).collect();
                emit_json(out, &json!({ "ambient": ambient, "target": target, "chains": v }))?;
            } else {
                writeln!(out, "{} chains", chains.len())?;
                for c in &chains {
                    writeln!(out, "{c}")?;
                    for (e, level) in c.steps.iter().zip(&c.levels) {
                        writeln!(out, "  {}  {}", e.subalgebra, join_roots(level))?;
                    }
                }
            }
        }
        CatalogCommand::Export => {
            writeln!(out, "{}", serde_json::to_string_pretty(&rootforge::catalog::Catalog::builtin())?)?;
        }
    }
    Ok(Status::Ok)
}
