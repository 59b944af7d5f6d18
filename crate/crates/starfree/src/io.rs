//! Bit-exact graph file formats: graph6 and DIMACS .col.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IoError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("DIMACS parse error at line {line}: {reason}")]
    Dimacs { line: usize, reason: String },
}

fn g6_err(offset: usize, reason: impl Into<String>) -> IoError {
    IoError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn col_err(line: usize, reason: impl Into<String>) -> IoError {
    IoError::Dimacs {
        line,
        reason: reason.into(),
    }
}

/// Encodes a graph in the standard graph6 format: short header for
/// n <= 62, the 18-bit long form above that, then the upper triangle
/// packed 6 bits per printable byte.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    } else {
        out.push(126);
        out.push(126);
        for shift in (0..36).step_by(6).rev() {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses a graph6 string. Trailing whitespace is tolerated; anything else
/// malformed is reported with its byte offset.
pub fn read_graph6(text: &str) -> Result<Graph, IoError> {
    fn take(bytes: &[u8], pos: &mut usize, err_on_end: &str) -> Result<u8, IoError> {
        if *pos >= bytes.len() {
            return Err(g6_err(*pos, err_on_end));
        }
        let b = bytes[*pos];
        if !(63..=126).contains(&b) {
            return Err(g6_err(
                *pos,
                format!("byte {b:#x} outside graph6 range 63..=126"),
            ));
        }
        *pos += 1;
        Ok(b - 63)
    }

    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(0, "empty input"));
    }
    let mut pos = 0;
    let first = take(bytes, &mut pos, "missing size header")?;
    let n: usize = if first < 63 {
        first as usize
    } else {
        // first byte was '~'
        let b1 = take(bytes, &mut pos, "truncated long-form size header")?;
        if b1 == 63 {
            // '~~': 36-bit size
            let mut n: u64 = 0;
            for _ in 0..6 {
                n = (n << 6) | take(bytes, &mut pos, "truncated 36-bit size header")? as u64;
            }
            n as usize
        } else {
            let mut n: u64 = b1 as u64;
            for _ in 0..2 {
                n = (n << 6) | take(bytes, &mut pos, "truncated 18-bit size header")? as u64;
            }
            n as usize
        }
    };
    if n > 1_000_000 {
        return Err(g6_err(0, format!("vertex count {n} beyond supported scale")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n);
    let mut bit_idx = 0usize;
    let (mut i, mut j) = (0usize, 1usize);
    while bit_idx < nbits {
        let payload = take(bytes, &mut pos, "truncated edge bit payload")?;
        for shift in (0..6).rev() {
            if bit_idx >= nbits {
                if payload >> shift & 1 != 0 {
                    return Err(g6_err(pos - 1, "nonzero padding bits"));
                }
                continue;
            }
            if payload >> shift & 1 == 1 {
                g.add_edge(i, j);
            }
            bit_idx += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    if pos < bytes.len() {
        return Err(g6_err(pos, "trailing bytes after edge payload"));
    }
    Ok(g)
}

/// Encodes a graph in DIMACS .col format (1-based vertices).
pub fn write_dimacs_col(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Parses DIMACS .col text. Returns the graph plus any warnings (currently
/// only a header/edge-count mismatch, where the actual edges win).
pub fn read_dimacs_col(text: &str) -> Result<(Graph, Vec<String>), IoError> {
    let mut header: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(col_err(line_no, "duplicate problem line"));
                }
                if tokens.len() != 4 || tokens[1] != "edge" {
                    return Err(col_err(line_no, "expected 'p edge <n> <m>'"));
                }
                let n: usize = tokens[2]
                    .parse()
                    .map_err(|_| col_err(line_no, "bad vertex count"))?;
                declared_m = tokens[3]
                    .parse()
                    .map_err(|_| col_err(line_no, "bad edge count"))?;
                header = Some(n);
            }
            "e" => {
                let n = header.ok_or_else(|| col_err(line_no, "edge before 'p edge' header"))?;
                if tokens.len() != 3 {
                    return Err(col_err(line_no, "expected 'e <u> <v>'"));
                }
                let u: usize = tokens[1]
                    .parse()
                    .map_err(|_| col_err(line_no, "bad endpoint"))?;
                let v: usize = tokens[2]
                    .parse()
                    .map_err(|_| col_err(line_no, "bad endpoint"))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(col_err(
                        line_no,
                        format!("endpoint out of range 1..={n}"),
                    ));
                }
                if u == v {
                    return Err(col_err(line_no, "self-loop rejected"));
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(col_err(line_no, format!("unknown line type '{other}'")));
            }
        }
    }
    let n = header.ok_or_else(|| col_err(text.lines().count().max(1), "missing 'p edge' header"))?;
    let g = Graph::build(n, &edges).expect("endpoints validated above");
    let mut warnings = Vec::new();
    if g.edge_count() != declared_m {
        warnings.push(format!(
            "header declares {} edges but {} distinct edges were read; using actual edges",
            declared_m,
            g.edge_count()
        ));
    }
    Ok((g, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn c5_graph6_matches_published_encoding() {
        // Hand-packed per the public graph6 description: header 'D' (n=5),
        // triangle bits 1 01 001 1001 -> 101001 100100 -> "hc".
        let g6 = write_graph6(&cycle(5));
        assert_eq!(g6, "Dhc");
        assert_eq!(read_graph6("Dhc").unwrap(), cycle(5));
    }

    #[test]
    fn known_small_encodings() {
        assert_eq!(write_graph6(&complete(5)), "D~{");
        assert_eq!(read_graph6("D~{").unwrap(), complete(5));
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert_eq!(read_graph6("?").unwrap().n(), 0);
        assert_eq!(write_graph6(&path(2)), "A_");
    }

    #[test]
    fn long_form_roundtrip() {
        let g = path(100);
        let g6 = write_graph6(&g);
        assert_eq!(&g6[..4], "~?@c"); // 126, then 100 in three 6-bit chunks
        assert_eq!(read_graph6(&g6).unwrap(), g);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        match read_graph6("D") {
            Err(IoError::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected truncation error, got {other:?}"),
        }
        match read_graph6("D\x1fW") {
            Err(IoError::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected bad byte error, got {other:?}"),
        }
        match read_graph6("DhcW") {
            Err(IoError::Graph6 { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("expected trailing byte error, got {other:?}"),
        }
    }

    #[test]
    fn dimacs_p3() {
        let (g, warnings) = read_dimacs_col("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, path(3));
        assert!(warnings.is_empty());
    }

    #[test]
    fn dimacs_count_mismatch_warns_actual_wins() {
        let (g, warnings) = read_dimacs_col("p edge 3 5\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn dimacs_errors_carry_line_numbers() {
        match read_dimacs_col("p edge 3 1\ne 1 4\n") {
            Err(IoError::Dimacs { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected range error, got {other:?}"),
        }
        match read_dimacs_col("e 1 2\n") {
            Err(IoError::Dimacs { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected missing header error, got {other:?}"),
        }
    }

    #[test]
    fn dimacs_roundtrip() {
        let g = crate::graph::petersen();
        let (back, warnings) = read_dimacs_col(&write_dimacs_col(&g)).unwrap();
        assert_eq!(back, g);
        assert!(warnings.is_empty());
    }
}
