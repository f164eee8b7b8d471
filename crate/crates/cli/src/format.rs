//! Instance files (`cox v1` / `gens` / `edge u v m`) and generator-word files (`name := letters`).

use twistcox::{DefiningGraph, Element, Group, Label};

use crate::error::{CliError, CliResult};

pub const HEADER: &str = "cox v1";

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parses one instance. Absent pairs are labelled infinity.
pub fn parse_instance(text: &str) -> CliResult<DefiningGraph> {
    let mut blocks = parse_catalog(text)?;
    match blocks.len() {
        1 => Ok(blocks.remove(0)),
        0 => Err(CliError::parse(1, format!("missing {HEADER:?} header"))),
        n => Err(CliError::Input(format!("expected one instance, found {n}"))),
    }
}

/// Parses a sequence of instances, each starting with its own header.
pub fn parse_catalog(text: &str) -> CliResult<Vec<DefiningGraph>> {
    let mut out = Vec::new();
    let mut current: Option<Option<DefiningGraph>> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let directive = words.next().unwrap_or_default();
        let args: Vec<&str> = words.collect();
        match directive {
            "cox" => {
                if args != ["v1"] {
                    return Err(CliError::parse(
                        line_no,
                        format!("unsupported header {line:?}"),
                    ));
                }
                finish(&mut out, current.take(), line_no)?;
                current = Some(None);
            }
            "gens" => {
                let slot = current.as_mut().ok_or_else(|| {
                    CliError::parse(line_no, format!("{HEADER:?} must come first"))
                })?;
                if slot.is_some() {
                    return Err(CliError::parse(line_no, "second gens line"));
                }
                if args.is_empty() {
                    return Err(CliError::parse(
                        line_no,
                        "gens needs at least one generator",
                    ));
                }
                *slot = Some(
                    DefiningGraph::new(&args)
                        .map_err(|e| CliError::parse(line_no, e.to_string()))?,
                );
            }
            "edge" => {
                let graph = current
                    .as_mut()
                    .and_then(Option::as_mut)
                    .ok_or_else(|| CliError::parse(line_no, "edge before gens"))?;
                let [u, v, m] = args[..] else {
                    return Err(CliError::parse(line_no, "expected `edge u v m`"));
                };
                let m: u32 = m.parse().map_err(|_| {
                    CliError::parse(line_no, format!("label {m:?} is not a finite integer"))
                })?;
                let a = graph
                    .gen_or_err(u)
                    .map_err(|e| CliError::parse(line_no, e.to_string()))?;
                let b = graph
                    .gen_or_err(v)
                    .map_err(|e| CliError::parse(line_no, e.to_string()))?;
                if graph.m(a, b).is_some() {
                    return Err(CliError::parse(line_no, format!("duplicate edge {u} {v}")));
                }
                graph
                    .set_label(a, b, Label::Finite(m))
                    .map_err(|e| CliError::parse(line_no, e.to_string()))?;
            }
            other => {
                return Err(CliError::parse(
                    line_no,
                    format!("unknown directive {other:?}"),
                ))
            }
        }
    }
    finish(&mut out, current, text.lines().count())?;
    Ok(out)
}

fn finish(
    out: &mut Vec<DefiningGraph>,
    block: Option<Option<DefiningGraph>>,
    line: usize,
) -> CliResult<()> {
    match block {
        None => Ok(()),
        Some(None) => Err(CliError::parse(line, "instance without gens line")),
        Some(Some(g)) => {
            out.push(g);
            Ok(())
        }
    }
}

/// Canonical text: header, generators in order, finite edges in generator order.
pub fn serialize_instance(g: &DefiningGraph) -> String {
    let mut s = format!("{HEADER}\ngens {}\n", g.names().join(" "));
    for (a, b, m) in g.edges() {
        s.push_str(&format!("edge {} {} {m}\n", g.name(a), g.name(b)));
    }
    s
}

/// `name := letters` lines, letters being ambient generator names separated by spaces.
pub fn parse_words(text: &str, g: &Group) -> CliResult<(Vec<String>, Vec<Element>)> {
    let mut names = Vec::new();
    let mut elements = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let (name, word) = line
            .split_once(":=")
            .ok_or_else(|| CliError::parse(i + 1, "expected `name := letters`"))?;
        let name = name.trim();
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(CliError::parse(
                i + 1,
                format!("bad generator name {name:?}"),
            ));
        }
        if names.iter().any(|n| n == name) {
            return Err(CliError::parse(
                i + 1,
                format!("duplicate generator {name}"),
            ));
        }
        let element = g
            .parse(word.trim())
            .map_err(|e| CliError::parse(i + 1, e.to_string()))?;
        names.push(name.to_string());
        elements.push(element);
    }
    if names.is_empty() {
        return Err(CliError::Input("word file lists no generators".into()));
    }
    Ok((names, elements))
}
