//! Line-oriented diagram files.
//!
//! ```text
//! # two squares on the torus
//! polygons 2
//! A 4
//! B 4
//! gluing
//! A.0 B.2 +
//! A.1 B.3 +
//! A.2 B.0 +
//! A.3 B.1 +
//! ```
//!
//! Side indices are 0-based and counterclockwise. `+` glues the sides with
//! opposite boundary directions, `-` with matching directions. `#` starts a
//! comment. Lines within a section may appear in any order.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::gluing::{GluingSpec, Orientation, Pairing, Polygon, SideRef};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

enum Section {
    Header,
    Polygons { remaining: usize },
    AwaitGluing,
    Gluing,
}

pub fn parse_diagram(text: &str) -> Result<GluingSpec, ParseError> {
    let mut spec = GluingSpec::default();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut declared_at: Vec<usize> = Vec::new();
    // (line of first use) per side, indexed by polygon then edge
    let mut used: Vec<Vec<Option<usize>>> = Vec::new();
    let mut section = Section::Header;
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match section {
            Section::Header => {
                if tokens.len() != 2 || tokens[0] != "polygons" {
                    return Err(err(line_no, "expected `polygons <count>`"));
                }
                let count: usize = tokens[1]
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid polygon count `{}`", tokens[1])))?;
                if count == 0 {
                    return Err(err(line_no, "a diagram needs at least one polygon"));
                }
                section = Section::Polygons { remaining: count };
            }
            Section::Polygons { remaining } => {
                if tokens == ["gluing"] {
                    return Err(err(
                        line_no,
                        format!("`gluing` found with {remaining} polygon(s) still undeclared"),
                    ));
                }
                if tokens.len() != 2 {
                    return Err(err(line_no, "expected `<id> <sides>`"));
                }
                let id = tokens[0];
                if id.contains('.') {
                    return Err(err(
                        line_no,
                        format!("polygon id `{id}` may not contain `.`"),
                    ));
                }
                let sides: usize = tokens[1]
                    .parse()
                    .map_err(|_| err(line_no, format!("invalid side count `{}`", tokens[1])))?;
                if sides == 0 {
                    return Err(err(line_no, format!("polygon `{id}` has no sides")));
                }
                if index.contains_key(id) {
                    return Err(err(line_no, format!("duplicate polygon id `{id}`")));
                }
                index.insert(id.to_string(), spec.polygons.len());
                spec.polygons.push(Polygon {
                    id: id.to_string(),
                    sides,
                });
                declared_at.push(line_no);
                used.push(vec![None; sides]);
                section = if remaining == 1 {
                    Section::AwaitGluing
                } else {
                    Section::Polygons {
                        remaining: remaining - 1,
                    }
                };
            }
            Section::AwaitGluing => {
                if tokens != ["gluing"] {
                    return Err(err(line_no, "expected `gluing` after the polygon list"));
                }
                section = Section::Gluing;
            }
            Section::Gluing => {
                if tokens == ["gluing"] {
                    return Err(err(line_no, "duplicate `gluing` section"));
                }
                if tokens.len() != 3 {
                    return Err(err(line_no, "expected `<id>.<edge> <id>.<edge> <+|->`"));
                }
                let mut sides = [SideRef {
                    polygon: 0,
                    edge: 0,
                }; 2];
                for (slot, token) in sides.iter_mut().zip(&tokens[..2]) {
                    let (id, edge) = token.rsplit_once('.').ok_or_else(|| {
                        err(line_no, format!("malformed edge reference `{token}`"))
                    })?;
                    let polygon = *index
                        .get(id)
                        .ok_or_else(|| err(line_no, format!("unknown polygon `{id}`")))?;
                    let edge: usize = edge
                        .parse()
                        .map_err(|_| err(line_no, format!("invalid edge index in `{token}`")))?;
                    if edge >= spec.polygons[polygon].sides {
                        return Err(err(
                            line_no,
                            format!(
                                "edge {edge} out of range for polygon `{id}` with {} sides",
                                spec.polygons[polygon].sides
                            ),
                        ));
                    }
                    if let Some(first) = used[polygon][edge] {
                        return Err(err(
                            line_no,
                            format!("edge `{token}` already glued on line {first}"),
                        ));
                    }
                    used[polygon][edge] = Some(line_no);
                    *slot = SideRef { polygon, edge };
                }
                let orientation = match tokens[2] {
                    "+" => Orientation::Reversing,
                    "-" => Orientation::Twisted,
                    other => {
                        return Err(err(line_no, format!("invalid orientation flag `{other}`")))
                    }
                };
                spec.pairings.push(Pairing {
                    a: sides[0],
                    b: sides[1],
                    orientation,
                });
            }
        }
    }

    match section {
        Section::Header => return Err(err(last_line.max(1), "missing `polygons` header")),
        Section::Polygons { remaining } => {
            return Err(err(
                last_line.max(1),
                format!("{remaining} polygon(s) missing"),
            ))
        }
        Section::AwaitGluing => return Err(err(last_line, "missing `gluing` section")),
        Section::Gluing => {}
    }
    for (p, sides) in used.iter().enumerate() {
        if let Some(edge) = sides.iter().position(Option::is_none) {
            return Err(err(
                declared_at[p],
                format!("edge `{}.{edge}` is never glued", spec.polygons[p].id),
            ));
        }
    }
    Ok(spec)
}

pub fn write_diagram(spec: &GluingSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "polygons {}", spec.polygons.len());
    for p in &spec.polygons {
        let _ = writeln!(out, "{} {}", p.id, p.sides);
    }
    out.push_str("gluing\n");
    for pairing in &spec.pairings {
        let a = &spec.polygons[pairing.a.polygon];
        let b = &spec.polygons[pairing.b.polygon];
        let _ = writeln!(
            out,
            "{}.{} {}.{} {}",
            a.id,
            pairing.a.edge,
            b.id,
            pairing.b.edge,
            pairing.orientation.symbol()
        );
    }
    out
}
