//! Line-oriented text formats and the report envelope.
//!
//! Every reader skips blank lines and `#` comments and reports the 1-based
//! line number of the first offending line. Writers emit the canonical form,
//! so `parse(write(x)) == x` for every format.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Value};
use thiserror::Error;

use crate::graph::{edge, Graph, MinorRecipe, VertexId};
use crate::grid::{GridPath, GridPoint};
use crate::interval::{IntervalRepresentation, PathDecomposition};
use crate::representation::{GridRepresentation, Mode};
use crate::transform::OrthogonalDrawing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 for errors about the file as a whole.
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Non-empty, comment-stripped lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap().trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn number<T: FromStr>(line: usize, token: &str, what: &str) -> Result<T, ParseError> {
    token
        .parse()
        .or_else(|_| err(line, format!("expected {what}, found `{token}`")))
}

fn exact_fields<'a>(
    line: usize,
    text: &'a str,
    n: usize,
    shape: &str,
) -> Result<Vec<&'a str>, ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != n {
        return err(
            line,
            format!("expected `{shape}`, found {} fields", fields.len()),
        );
    }
    Ok(fields)
}

fn point(line: usize, token: &str) -> Result<GridPoint, ParseError> {
    let Some((x, y)) = token.split_once(',') else {
        return err(line, format!("expected a corner `x,y`, found `{token}`"));
    };
    Ok(GridPoint::new(
        number(line, x, "an integer x")?,
        number(line, y, "an integer y")?,
    ))
}

/// Splits `lhs : corners [closed]` into the label part and a checked path.
fn labelled_path(line: usize, text: &str) -> Result<(&str, GridPath), ParseError> {
    let Some((label, rest)) = text.split_once(':') else {
        return err(line, "expected `:` between the label and the corners");
    };
    let mut tokens: Vec<&str> = rest.split_whitespace().collect();
    let closed = tokens.last() == Some(&"closed");
    if closed {
        tokens.pop();
    }
    if tokens.is_empty() {
        return err(line, "a path needs at least one corner");
    }
    let corners = tokens
        .iter()
        .map(|t| point(line, t))
        .collect::<Result<Vec<_>, _>>()?;
    let path = GridPath::new(corners, closed).or_else(|e| err(line, e.to_string()))?;
    Ok((label.trim(), path))
}

fn write_corners(out: &mut String, path: &GridPath) {
    for c in path.corners() {
        write!(out, " {},{}", c.x, c.y).unwrap();
    }
    if path.is_closed() {
        out.push_str(" closed");
    }
    out.push('\n');
}

// Graph: `n m` then `u v` per edge, vertices `0..n`.

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let Some((first, header)) = lines.next() else {
        return err(0, "empty graph file: expected `n m`");
    };
    let f = exact_fields(first, header, 2, "n m")?;
    let n: usize = number(first, f[0], "a vertex count")?;
    let m: usize = number(first, f[1], "an edge count")?;
    let mut g = Graph::with_vertices(n);
    let mut seen = 0;
    for (line, text) in lines {
        let f = exact_fields(line, text, 2, "u v")?;
        let u: VertexId = number(line, f[0], "a vertex id")?;
        let v: VertexId = number(line, f[1], "a vertex id")?;
        if u >= n || v >= n {
            return err(line, format!("vertex id out of range 0..{n}"));
        }
        g.add_edge(u, v).or_else(|e| err(line, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return err(
            first,
            format!("header announces {m} edges, file has {seen}"),
        );
    }
    Ok(g)
}

/// Ids are written as they are; gaps in the id range become isolated vertices
/// on reading.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.next_vertex_id(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

// Intervals: `v l r` per vertex.

pub fn parse_intervals(text: &str) -> Result<IntervalRepresentation, ParseError> {
    let mut pairs = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, text) in content_lines(text) {
        let f = exact_fields(line, text, 3, "v l r")?;
        let v: VertexId = number(line, f[0], "a vertex id")?;
        let l: i64 = number(line, f[1], "an integer left end")?;
        let r: i64 = number(line, f[2], "an integer right end")?;
        if l > r {
            return err(line, format!("left end {l} exceeds right end {r}"));
        }
        if !seen.insert(v) {
            return err(line, format!("vertex {v} listed twice"));
        }
        pairs.push((v, (l, r)));
    }
    Ok(IntervalRepresentation::from_pairs(pairs))
}

pub fn write_intervals(ir: &IntervalRepresentation) -> String {
    let mut out = String::new();
    for (v, i) in &ir.intervals {
        writeln!(out, "{v} {} {}", i.left, i.right).unwrap();
    }
    out
}

// Decomposition: one bag per line, `-` for an empty bag.

pub fn parse_decomposition(text: &str) -> Result<PathDecomposition, ParseError> {
    let mut bags = Vec::new();
    for (line, text) in content_lines(text) {
        let mut bag = BTreeSet::new();
        if text != "-" {
            for token in text.split_whitespace() {
                if !bag.insert(number(line, token, "a vertex id")?) {
                    return err(line, format!("vertex {token} repeated in one bag"));
                }
            }
        }
        bags.push(bag);
    }
    Ok(PathDecomposition::new(bags))
}

pub fn write_decomposition(pd: &PathDecomposition) -> String {
    let mut out = String::new();
    for bag in &pd.bags {
        if bag.is_empty() {
            out.push('-');
        }
        let ids: Vec<String> = bag.iter().map(ToString::to_string).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

// Representation: optional `mode <m>` line, then `v : x,y ... [closed]`.

/// Reads a representation; without a `mode` line the mode is `default_mode`.
pub fn parse_representation(
    text: &str,
    default_mode: Mode,
) -> Result<GridRepresentation, ParseError> {
    let mut rep = GridRepresentation::new(default_mode);
    for (index, (line, text)) in content_lines(text).enumerate() {
        if let Some(m) = text.strip_prefix("mode ") {
            if index != 0 {
                return err(line, "`mode` must be the first line");
            }
            rep.mode = m.trim().parse().or_else(|e: String| err(line, e))?;
            continue;
        }
        let (label, path) = labelled_path(line, text)?;
        let v: VertexId = number(line, label, "a vertex id")?;
        if rep.insert(v, path).is_some() {
            return err(line, format!("vertex {v} has two paths"));
        }
    }
    Ok(rep)
}

/// Writes the representation translated so its box starts at `(1, 1)`.
pub fn write_representation(rep: &GridRepresentation) -> String {
    let mut out = format!("mode {}\n", rep.mode);
    for (v, path) in &rep.normalized().paths {
        write!(out, "{v} :").unwrap();
        write_corners(&mut out, path);
    }
    out
}

// Orthogonal drawing: `vertices` section of `v x y`, `edges` section of
// `u v : x,y ...`.

pub fn parse_drawing(text: &str) -> Result<OrthogonalDrawing, ParseError> {
    #[derive(PartialEq)]
    enum Section {
        None,
        Vertices,
        Edges,
    }
    let mut d = OrthogonalDrawing::new();
    let mut section = Section::None;
    for (line, text) in content_lines(text) {
        match text {
            "vertices" => section = Section::Vertices,
            "edges" => section = Section::Edges,
            _ if section == Section::Vertices => {
                let f = exact_fields(line, text, 3, "v x y")?;
                let v: VertexId = number(line, f[0], "a vertex id")?;
                let p = GridPoint::new(
                    number(line, f[1], "an integer x")?,
                    number(line, f[2], "an integer y")?,
                );
                if d.positions.insert(v, p).is_some() {
                    return err(line, format!("vertex {v} placed twice"));
                }
            }
            _ if section == Section::Edges => {
                let (label, path) = labelled_path(line, text)?;
                let f = exact_fields(line, label, 2, "u v")?;
                let u: VertexId = number(line, f[0], "a vertex id")?;
                let v: VertexId = number(line, f[1], "a vertex id")?;
                if u == v {
                    return err(line, "an edge route needs two distinct endpoints");
                }
                if d.routes.insert(edge(u, v), path).is_some() {
                    return err(line, format!("edge {{{u}, {v}}} routed twice"));
                }
            }
            _ => return err(line, "expected a `vertices` or `edges` section header"),
        }
    }
    Ok(d)
}

pub fn write_drawing(d: &OrthogonalDrawing) -> String {
    let mut out = String::from("vertices\n");
    for (v, p) in &d.positions {
        writeln!(out, "{v} {} {}", p.x, p.y).unwrap();
    }
    out.push_str("edges\n");
    for ((u, v), path) in &d.routes {
        write!(out, "{u} {v} :").unwrap();
        write_corners(&mut out, path);
    }
    out
}

// Minor recipe: `delete-vertex v`, `delete-edge u v`, `contract u v`.

pub fn parse_minor_recipe(text: &str) -> Result<MinorRecipe, ParseError> {
    let mut r = MinorRecipe::default();
    for (line, text) in content_lines(text) {
        let f: Vec<&str> = text.split_whitespace().collect();
        let id = |i: usize| number::<VertexId>(line, f[i], "a vertex id");
        match (f[0], f.len()) {
            ("delete-vertex", 2) => r = r.delete_vertex(id(1)?),
            ("delete-edge", 3) if f[1] != f[2] => r = r.delete_edge(id(1)?, id(2)?),
            ("contract", 3) if f[1] != f[2] => r = r.contract(id(1)?, id(2)?),
            ("delete-edge" | "contract", 3) => return err(line, "the two vertices must differ"),
            ("delete-vertex" | "delete-edge" | "contract", _) => {
                return err(line, format!("wrong number of arguments to `{}`", f[0]))
            }
            (verb, _) => {
                return err(
                    line,
                    format!(
                        "unknown step `{verb}` (expected delete-vertex, delete-edge or contract)"
                    ),
                )
            }
        }
    }
    Ok(r)
}

pub fn write_minor_recipe(r: &MinorRecipe) -> String {
    let mut out = String::new();
    for (u, v) in &r.deleted_edges {
        writeln!(out, "delete-edge {u} {v}").unwrap();
    }
    for v in &r.deleted_vertices {
        writeln!(out, "delete-vertex {v}").unwrap();
    }
    for (u, v) in &r.contractions {
        writeln!(out, "contract {u} {v}").unwrap();
    }
    out
}

// Report envelope.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected text or json)")),
        }
    }
}

/// Named sections of serialisable values, rendered as `key: value` text or
/// as one JSON object.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub ok: bool,
    sections: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command: &str, ok: bool) -> Self {
        Self {
            command: command.into(),
            ok,
            sections: Vec::new(),
        }
    }

    pub fn section(mut self, name: &str, value: &impl Serialize) -> Self {
        let value = serde_json::to_value(value).expect("report values serialise");
        self.sections.push((name.into(), value));
        self
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.sections
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), Value::from(self.command.clone()));
        map.insert("ok".into(), Value::from(self.ok));
        for (name, value) in &self.sections {
            map.insert(name.clone(), value.clone());
        }
        Value::Object(map)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).unwrap();
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = format!("command: {}\nok: {}\n", self.command, self.ok);
                for (name, value) in &self.sections {
                    flatten(&mut out, name, value);
                }
                out
            }
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => items
            .iter()
            .map(|i| match i {
                Value::Array(_) | Value::Object(_) => None,
                _ => scalar(i),
            })
            .collect::<Option<Vec<_>>>()
            .map(|parts| format!("[{}]", parts.join(", "))),
        Value::Object(_) => None,
    }
}

fn flatten(out: &mut String, key: &str, value: &Value) {
    if let Some(s) = scalar(value) {
        writeln!(out, "{key}: {s}").unwrap();
        return;
    }
    match value {
        Value::Object(map) if map.is_empty() => writeln!(out, "{key}: {{}}").unwrap(),
        Value::Object(map) => {
            for (k, v) in map {
                flatten(out, &format!("{key}.{k}"), v);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(out, &format!("{key}.{i}"), v);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
