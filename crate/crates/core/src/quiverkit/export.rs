use super::{Quiver, Relation};
use serde::Serialize;
use std::fmt::Write;

#[derive(Serialize)]
struct ArrowOut<'a> {
    src: &'a str,
    dst: &'a str,
    label: &'a str,
    #[serde(rename = "type")]
    kind: &'a str,
}

#[derive(Serialize)]
struct TermOut<'a> {
    coef: i64,
    path: Vec<&'a str>,
}

#[derive(Serialize)]
struct RelationOut<'a> {
    terms: Vec<TermOut<'a>>,
}

#[derive(Serialize)]
struct QuiverOut<'a> {
    vertices: &'a [String],
    arrows: Vec<ArrowOut<'a>>,
    relations: Vec<RelationOut<'a>>,
}

fn signed(c: i64, p: u64) -> i64 {
    if p > 0 && 2 * c > p as i64 {
        c - p as i64
    } else {
        c
    }
}

pub(super) fn quiver_json(q: &Quiver, rels: &[Relation], p: u64) -> String {
    let out = QuiverOut {
        vertices: q.vertices(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| ArrowOut { src: &q.vertices()[a.src], dst: &q.vertices()[a.dst], label: &a.label, kind: &a.kind })
            .collect(),
        relations: rels
            .iter()
            .map(|r| RelationOut {
                terms: r
                    .terms()
                    .iter()
                    .map(|(c, path)| TermOut {
                        coef: signed(*c, p),
                        path: path.iter().map(|&a| q.arrow(a).label.as_str()).collect(),
                    })
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&out).expect("serializable")
}

const STYLES: [&str; 4] = ["solid", "dashed", "dotted", "bold"];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub(super) fn quiver_dot(q: &Quiver, rels: &[Relation], p: u64) -> String {
    let mut kinds: Vec<&str> = Vec::new();
    for a in q.arrows() {
        if !kinds.contains(&a.kind.as_str()) {
            kinds.push(&a.kind);
        }
    }
    let mut s = String::from("digraph Q {\n  rankdir=RL;\n");
    for r in rels {
        let _ = writeln!(s, "  // relation {}", r.render(q, p));
    }
    for v in q.vertices() {
        let _ = writeln!(s, "  {};", quote(v));
    }
    for a in q.arrows() {
        let style = STYLES[kinds.iter().position(|k| *k == a.kind).unwrap_or(0) % STYLES.len()];
        let _ = writeln!(
            s,
            "  {} -> {} [label={}, style={style}];",
            quote(&q.vertices()[a.src]),
            quote(&q.vertices()[a.dst]),
            quote(&a.label)
        );
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use crate::quiverkit::borel2_presentation;

    #[test]
    fn json_shape() {
        let q = borel2_presentation(2, 2).unwrap();
        let v: serde_json::Value = serde_json::from_str(&q.to_json()).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
        assert_eq!(v["arrows"][0]["type"], "α");
        assert_eq!(v["relations"][0]["terms"][0]["path"].as_array().unwrap().len(), 2);
        let dot = q.to_dot();
        assert!(dot.starts_with("digraph Q {"));
        assert!(dot.contains("// relation (α^2)_2"));
    }
}
