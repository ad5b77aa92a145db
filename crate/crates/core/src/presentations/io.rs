//! JSON and plain-text serialization of presentations.
//!
//! Text format, one item per line:
//!
//! ```text
//! # family: sl3-sylow
//! # field: p=3 a=2 modulus=1,0,1
//! # labels: roles
//! # generators: x1_1 x1_2 x2_1 x2_2
//! x1_1^3  # A1
//! x1_1 x2_1 x1_1^-1 x2_1^-1  # A2
//! ```
//!
//! A letter is `x<i>_<k>` optionally followed by `^<n>`; `i` is a node id
//! when `labels` is `nodes` and a role number (`α=1, β=2, α+β=3, 2α+β=4`)
//! when it is `roles`. The identity relator is written `1`. A trailing
//! `# <family>` names the relator family. Optional headers `# diagram:` (JSON)
//! and `# note <key>: <value>` carry metadata.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{GeneratorSymbol, Label, Presentation, Relator, Role, Word};
use crate::ffield::{FieldDescriptor, FiniteField};
use crate::rootsys::DynkinDiagram;
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
struct GeneratorJson {
    node: Value,
    k: usize,
}

#[derive(Serialize, Deserialize, Default)]
struct MetaJson {
    #[serde(default)]
    relator_families: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    diagram: Option<DynkinDiagram>,
    #[serde(default)]
    notes: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    family: String,
    field: FieldDescriptor,
    generators: Vec<GeneratorJson>,
    relators: Vec<Vec<(String, i64)>>,
    #[serde(default)]
    meta: MetaJson,
}

pub fn to_json_value(pres: &Presentation) -> Value {
    let doc = PresentationJson {
        family: pres.family.clone(),
        field: pres.field.clone(),
        generators: pres
            .generators
            .iter()
            .map(|g| GeneratorJson {
                node: match g.label {
                    Label::Node(n) => Value::from(n),
                    Label::Role(r) => Value::from(r.name()),
                },
                k: g.k,
            })
            .collect(),
        relators: pres
            .relators
            .iter()
            .map(|r| {
                r.word
                    .letters()
                    .iter()
                    .map(|&(g, e)| (format!("g{g}"), e))
                    .collect()
            })
            .collect(),
        meta: MetaJson {
            relator_families: pres.relators.iter().map(|r| r.family.clone()).collect(),
            diagram: pres.diagram.clone(),
            notes: pres.notes.clone(),
        },
    };
    serde_json::to_value(doc).expect("presentation is serializable")
}

pub fn to_json(pres: &Presentation) -> String {
    let mut s = serde_json::to_string_pretty(&to_json_value(pres)).expect("serializable");
    s.push('\n');
    s
}

fn parse_gen_ref(s: &str) -> Result<usize> {
    s.strip_prefix('g')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| Error::Malformed(format!("bad generator reference {s:?}")))
}

pub fn from_json(text: &str) -> Result<Presentation> {
    let doc: PresentationJson = serde_json::from_str(text)?;
    FiniteField::from_descriptor(&doc.field)?;
    let generators = doc
        .generators
        .iter()
        .map(|g| {
            let label = match &g.node {
                Value::Number(n) => n
                    .as_u64()
                    .map(|n| Label::Node(n as usize))
                    .ok_or_else(|| Error::Malformed(format!("bad node id {n}"))),
                Value::String(s) => Role::from_name(s)
                    .map(Label::Role)
                    .ok_or_else(|| Error::Malformed(format!("unknown role {s:?}"))),
                other => Err(Error::Malformed(format!("bad generator node {other}"))),
            }?;
            Ok(GeneratorSymbol { label, k: g.k })
        })
        .collect::<Result<Vec<_>>>()?;
    let families = doc.meta.relator_families;
    let relators = doc
        .relators
        .iter()
        .enumerate()
        .map(|(idx, letters)| {
            let word = Word::from_letters(
                letters
                    .iter()
                    .map(|(g, e)| Ok((parse_gen_ref(g)?, *e)))
                    .collect::<Result<Vec<_>>>()?,
            );
            let family = families.get(idx).cloned().unwrap_or_default();
            Ok(Relator { family, word })
        })
        .collect::<Result<Vec<_>>>()?;
    let pres = Presentation {
        family: doc.family,
        field: doc.field,
        generators,
        relators,
        diagram: doc.meta.diagram,
        notes: doc.meta.notes,
    };
    pres.validate()?;
    Ok(pres)
}

fn gen_name(g: &GeneratorSymbol) -> String {
    match g.label {
        Label::Node(n) => format!("x{n}_{}", g.k),
        Label::Role(r) => format!("x{}_{}", r.number(), g.k),
    }
}

fn word_text(pres: &Presentation, w: &Word) -> String {
    if w.is_identity() {
        return "1".into();
    }
    let parts: Vec<String> = w
        .letters()
        .iter()
        .map(|&(g, e)| {
            let name = gen_name(&pres.generators[g]);
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    parts.join(" ")
}

pub fn to_text(pres: &Presentation) -> Result<String> {
    let roles = pres
        .generators
        .iter()
        .all(|g| matches!(g.label, Label::Role(_)));
    let nodes = pres
        .generators
        .iter()
        .all(|g| matches!(g.label, Label::Node(_)));
    if !roles && !nodes {
        return Err(Error::Malformed(
            "text format needs all generators labelled by nodes or all by roles".into(),
        ));
    }
    let f = &pres.field;
    let modulus: Vec<String> = f.modulus.iter().map(u32::to_string).collect();
    let gens: Vec<String> = pres.generators.iter().map(gen_name).collect();
    let mut out = String::new();
    writeln!(out, "# family: {}", pres.family).unwrap();
    writeln!(out, "# field: p={} a={} modulus={}", f.p, f.a, modulus.join(",")).unwrap();
    writeln!(out, "# labels: {}", if nodes && !roles { "nodes" } else { "roles" }).unwrap();
    writeln!(out, "# generators: {}", gens.join(" ")).unwrap();
    if let Some(d) = &pres.diagram {
        writeln!(out, "# diagram: {}", serde_json::to_string(d)?).unwrap();
    }
    for (k, v) in &pres.notes {
        writeln!(out, "# note {k}: {v}").unwrap();
    }
    for r in &pres.relators {
        let body = word_text(pres, &r.word);
        if r.family.is_empty() {
            writeln!(out, "{body}").unwrap();
        } else {
            writeln!(out, "{body}  # {}", r.family).unwrap();
        }
    }
    Ok(out)
}

fn parse_letter(tok: &str, line: usize) -> Result<(String, i64)> {
    let err = |msg: &str| Error::Parse {
        line,
        msg: format!("{msg}: {tok:?}"),
    };
    let (name, exp) = match tok.split_once('^') {
        Some((n, e)) => (n, e.parse::<i64>().map_err(|_| err("bad exponent"))?),
        None => (tok, 1),
    };
    let body = name.strip_prefix('x').ok_or_else(|| err("letter must start with x"))?;
    let (i, k) = body.split_once('_').ok_or_else(|| err("letter must be x<i>_<k>"))?;
    if i.parse::<usize>().is_err() || k.parse::<usize>().is_err() {
        return Err(err("bad letter indices"));
    }
    if exp == 0 {
        return Err(err("zero exponent"));
    }
    Ok((name.to_string(), exp))
}

pub fn from_text(text: &str) -> Result<Presentation> {
    let mut family = None;
    let mut field = None;
    let mut labels = None;
    let mut gen_names: Option<Vec<String>> = None;
    let mut diagram = None;
    let mut notes = BTreeMap::new();
    let mut relators = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let perr = |msg: String| Error::Parse { line: line_no, msg };
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(h) = line.strip_prefix('#') {
            let h = h.trim();
            if let Some(rest) = h.strip_prefix("note ") {
                let (k, v) = rest
                    .split_once(": ")
                    .ok_or_else(|| perr("note needs `key: value`".into()))?;
                notes.insert(k.to_string(), v.to_string());
                continue;
            }
            let (key, value) = h
                .split_once(':')
                .ok_or_else(|| perr("header needs `key: value`".into()))?;
            let value = value.trim();
            match key.trim() {
                "family" => family = Some(value.to_string()),
                "field" => {
                    let mut p = None;
                    let mut a = None;
                    let mut modulus = None;
                    for part in value.split_whitespace() {
                        match part.split_once('=') {
                            Some(("p", v)) => p = v.parse().ok(),
                            Some(("a", v)) => a = v.parse().ok(),
                            Some(("modulus", v)) => {
                                modulus = v
                                    .split(',')
                                    .map(|c| c.parse().ok())
                                    .collect::<Option<Vec<u32>>>()
                            }
                            _ => return Err(perr(format!("bad field item {part:?}"))),
                        }
                    }
                    match (p, a, modulus) {
                        (Some(p), Some(a), Some(modulus)) => {
                            field = Some(FieldDescriptor { p, a, modulus })
                        }
                        _ => return Err(perr("field needs p=, a= and modulus=".into())),
                    }
                }
                "labels" => match value {
                    "nodes" | "roles" => labels = Some(value.to_string()),
                    _ => return Err(perr(format!("unknown labels {value:?}"))),
                },
                "generators" => {
                    gen_names = Some(value.split_whitespace().map(str::to_string).collect())
                }
                "diagram" => {
                    diagram = Some(
                        serde_json::from_str::<DynkinDiagram>(value)
                            .map_err(|e| perr(e.to_string()))?,
                    )
                }
                other => return Err(perr(format!("unknown header {other:?}"))),
            }
            continue;
        }
        let names = gen_names
            .as_ref()
            .ok_or_else(|| perr("relator before `# generators:` header".into()))?;
        let (body, fam) = match line.split_once('#') {
            Some((b, f)) => (b.trim(), f.trim().to_string()),
            None => (line, String::new()),
        };
        let word = if body == "1" {
            Word::identity()
        } else {
            let mut letters = Vec::new();
            for tok in body.split_whitespace() {
                let (name, e) = parse_letter(tok, line_no)?;
                let g = names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| perr(format!("undeclared generator {name}")))?;
                letters.push((g, e));
            }
            Word::from_letters(letters)
        };
        relators.push(Relator { family: fam, word });
    }
    let missing = |what: &str| Error::Parse {
        line: 0,
        msg: format!("missing `# {what}:` header"),
    };
    let field = field.ok_or_else(|| missing("field"))?;
    FiniteField::from_descriptor(&field)?;
    let labels = labels.ok_or_else(|| missing("labels"))?;
    let generators = gen_names
        .ok_or_else(|| missing("generators"))?
        .iter()
        .map(|name| {
            let (n, e) = parse_letter(name, 0)?;
            if e != 1 {
                return Err(Error::Malformed(format!("generator {name} has an exponent")));
            }
            let (i, k) = n[1..].split_once('_').unwrap();
            let (i, k): (usize, usize) = (i.parse().unwrap(), k.parse().unwrap());
            let label = if labels == "nodes" {
                Label::Node(i)
            } else {
                Label::Role(
                    Role::from_number(i)
                        .ok_or_else(|| Error::Malformed(format!("no role numbered {i}")))?,
                )
            };
            Ok(GeneratorSymbol { label, k })
        })
        .collect::<Result<Vec<_>>>()?;
    let pres = Presentation {
        family: family.ok_or_else(|| missing("family"))?,
        field,
        generators,
        relators,
        diagram,
        notes,
    };
    pres.validate()?;
    Ok(pres)
}

/// Reads either format, by sniffing the first non-blank character.
pub fn parse_any(text: &str) -> Result<Presentation> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_text(text)
    }
}
