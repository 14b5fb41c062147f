//! Plain-text file formats.
//!
//! * Edge list: one edge per line as two whitespace-separated 0-based ids.
//!   An optional first line `n <count>` fixes the vertex count (otherwise it
//!   is the largest id plus one). Text after `#` is a comment.
//! * Attributes: CSV, one row per vertex in id order. An optional first line
//!   starting with `#` names the columns; a name ending in `:cat` marks a
//!   categorical column, expanded to one binary column per distinct value in
//!   order of first appearance.
//! * Labels and member lists: one non-negative integer per line.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::attributes::AttributeMatrix;
use crate::error::{Error, Result};
use crate::graph::{BuildReport, Graph};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse_error(path: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_string(),
        line,
        message: message.into(),
    }
}

pub fn load_graph(path: &Path) -> Result<(Graph, BuildReport)> {
    parse_edge_list(&read(path)?, &path.display().to_string())
}

/// Parses edge-list text. `origin` names the source in error messages.
pub fn parse_edge_list(text: &str, origin: &str) -> Result<(Graph, BuildReport)> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut max_id = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(parse_error(
                    origin,
                    line_no,
                    "vertex count must come before edges",
                ));
            }
            let [_, count] = fields[..] else {
                return Err(parse_error(origin, line_no, "expected `n <count>`"));
            };
            declared = Some(
                count
                    .parse::<usize>()
                    .map_err(|e| parse_error(origin, line_no, format!("bad vertex count: {e}")))?,
            );
            continue;
        }
        let [a, b] = fields[..] else {
            return Err(parse_error(
                origin,
                line_no,
                format!("expected two vertex ids, found {} fields", fields.len()),
            ));
        };
        let id = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| parse_error(origin, line_no, format!("bad vertex id {s:?}: {e}")))
        };
        let (a, b) = (id(a)?, id(b)?);
        if let Some(n) = declared {
            if a >= n || b >= n {
                return Err(parse_error(
                    origin,
                    line_no,
                    format!("vertex id out of range for n = {n}"),
                ));
            }
        }
        max_id = max_id.max(Some(a.max(b)));
        edges.push((a, b));
    }
    let n = declared.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
    Graph::from_edges_with_report(n, &edges)
}

pub fn format_edge_list(graph: &Graph) -> String {
    let mut out = format!("n {}\n", graph.num_vertices());
    for (a, b) in graph.edges() {
        writeln!(out, "{a} {b}").expect("writing to a String cannot fail");
    }
    out
}

pub fn write_graph(path: &Path, graph: &Graph) -> Result<()> {
    write(path, &format_edge_list(graph))
}

/// Attribute matrix plus the name of every (expanded) column.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedAttributes {
    pub matrix: AttributeMatrix,
    pub names: Vec<String>,
}

/// Loads an attribute CSV. With `expected_rows` set, a different row count
/// is an error.
pub fn load_attributes(path: &Path, expected_rows: Option<usize>) -> Result<LoadedAttributes> {
    parse_attributes(&read(path)?, &path.display().to_string(), expected_rows)
}

pub fn parse_attributes(
    text: &str,
    origin: &str,
    expected_rows: Option<usize>,
) -> Result<LoadedAttributes> {
    let (header, body, first_line) = match text.strip_prefix('#') {
        Some(rest) => {
            let (h, b) = rest.split_once('\n').unwrap_or((rest, ""));
            (Some(h.trim()), b, 2)
        }
        None => (None, text, 1),
    };
    let declared: Option<Vec<String>> =
        header.map(|h| h.split(',').map(|s| s.trim().to_string()).collect());

    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(body.as_bytes());
    let mut rows: Vec<Vec<String>> = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| {
            let line = e
                .position()
                .map_or(first_line + i, |p| p.line() as usize + first_line - 1);
            parse_error(origin, line, e.to_string())
        })?;
        rows.push(rec.iter().map(str::to_string).collect());
    }

    let width = declared
        .as_ref()
        .map(Vec::len)
        .or_else(|| rows.first().map(Vec::len))
        .unwrap_or(0);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != width {
            return Err(parse_error(
                origin,
                first_line + i,
                format!("expected {width} fields, found {}", row.len()),
            ));
        }
    }
    if let Some(n) = expected_rows {
        if rows.len() != n {
            return Err(Error::input(format!(
                "{origin}: {} attribute rows for {n} vertices",
                rows.len()
            )));
        }
    }

    let names: Vec<String> =
        declared.unwrap_or_else(|| (0..width).map(|c| format!("a{c}")).collect());
    let mut out_names = Vec::new();
    let mut columns: Vec<Vec<f64>> = Vec::new();
    for (c, name) in names.iter().enumerate() {
        if let Some(base) = name.strip_suffix(":cat") {
            let mut levels: Vec<&str> = Vec::new();
            for row in &rows {
                if !levels.contains(&row[c].as_str()) {
                    levels.push(&row[c]);
                }
            }
            for level in &levels {
                out_names.push(format!("{base}={level}"));
                columns.push(
                    rows.iter()
                        .map(|r| f64::from(u8::from(r[c] == *level)))
                        .collect(),
                );
            }
        } else {
            let mut col = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let v: f64 = row[c].parse().map_err(|_| {
                    parse_error(
                        origin,
                        first_line + i,
                        format!("non-numeric value {:?} in column {name}", row[c]),
                    )
                })?;
                if !v.is_finite() {
                    return Err(parse_error(
                        origin,
                        first_line + i,
                        format!("non-finite value in column {name}"),
                    ));
                }
                col.push(v);
            }
            out_names.push(name.clone());
            columns.push(col);
        }
    }

    let n = rows.len();
    let d = columns.len();
    let mut data = vec![0.0; n * d];
    for (c, col) in columns.iter().enumerate() {
        for (r, &v) in col.iter().enumerate() {
            data[r * d + c] = v;
        }
    }
    Ok(LoadedAttributes {
        matrix: AttributeMatrix::from_row_major(n, d, data)?,
        names: out_names,
    })
}

/// CSV without a header. Values use the shortest representation that reads
/// back to the same `f64`.
pub fn format_attributes(x: &AttributeMatrix) -> String {
    let mut out = String::new();
    for r in 0..x.num_rows() {
        let cells: Vec<String> = x.row(r).iter().map(f64::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn write_attributes(path: &Path, x: &AttributeMatrix) -> Result<()> {
    write(path, &format_attributes(x))
}

/// One non-negative integer per line; blank lines and `#` comments skipped.
pub fn parse_ids(text: &str, origin: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(
            line.parse()
                .map_err(|e| parse_error(origin, idx + 1, format!("bad integer {line:?}: {e}")))?,
        );
    }
    Ok(out)
}

pub fn load_ids(path: &Path) -> Result<Vec<usize>> {
    parse_ids(&read(path)?, &path.display().to_string())
}

pub fn write_ids(path: &Path, ids: &[usize]) -> Result<()> {
    let mut out = String::with_capacity(ids.len() * 4);
    for id in ids {
        writeln!(out, "{id}").expect("writing to a String cannot fail");
    }
    write(path, &out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph() {
        let (g, _) = parse_edge_list("n 3\n0 1\n1 2\n", "t").unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn cleanup_is_reported() {
        let (g, rep) = parse_edge_list("# comment\n0 1\n1 0\n2 2 # loop\n", "t").unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.num_edges(), 1);
        assert_eq!(rep.self_loops_dropped, 1);
        assert_eq!(rep.duplicates_merged, 1);
    }

    #[test]
    fn edge_errors_carry_line_numbers() {
        let err = parse_edge_list("0 1\n\n1 x\n", "g.txt").unwrap_err();
        assert!(err.to_string().starts_with("g.txt:3:"), "{err}");
        let err = parse_edge_list("n 2\n0 2\n", "g.txt").unwrap_err();
        assert!(err.to_string().starts_with("g.txt:2:"), "{err}");
        assert!(parse_edge_list("0 1 2\n", "g").is_err());
    }

    #[test]
    fn numeric_csv() {
        let a = parse_attributes("1,2\n3,4.5\n-1,0\n", "t", Some(3)).unwrap();
        assert_eq!(a.matrix.num_cols(), 2);
        assert_eq!(a.matrix.row(1), &[3.0, 4.5]);
        assert!(parse_attributes("1,2\n", "t", Some(2)).is_err());
    }

    #[test]
    fn categorical_one_hot() {
        let a = parse_attributes("# x,color:cat\n1,a\n2,b\n3,a\n", "t", None).unwrap();
        assert_eq!(a.names, vec!["x", "color=a", "color=b"]);
        assert_eq!(a.matrix.row(0), &[1.0, 1.0, 0.0]);
        assert_eq!(a.matrix.row(1), &[2.0, 0.0, 1.0]);
        assert_eq!(a.matrix.row(2), &[3.0, 1.0, 0.0]);
    }

    #[test]
    fn bad_cells_rejected() {
        let err = parse_attributes("1\nNaN\n", "a.csv", None).unwrap_err();
        assert!(err.to_string().starts_with("a.csv:2:"), "{err}");
        let err = parse_attributes("# x\n1\nfoo\n", "a.csv", None).unwrap_err();
        assert!(err.to_string().starts_with("a.csv:3:"), "{err}");
        assert!(parse_attributes("1,2\n3\n", "a.csv", None).is_err());
    }

    #[test]
    fn ids() {
        assert_eq!(parse_ids("3\n\n1 # x\n", "t").unwrap(), vec![3, 1]);
        assert!(parse_ids("-1\n", "t").is_err());
    }

    #[test]
    fn attribute_text_round_trips() {
        let x =
            AttributeMatrix::from_rows(vec![vec![0.1, 1e-300, -3.25], vec![1.0 / 3.0, 7.0, 2e20]])
                .unwrap();
        let back = parse_attributes(&format_attributes(&x), "t", Some(2)).unwrap();
        assert_eq!(back.matrix, x);
    }
}
