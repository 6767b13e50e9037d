//! Plain-text formats. Every reader reports the offending line number.
//!
//! Blank lines and `#` comments are ignored everywhere.
//!
//! * graph: `n m`, then `m` lines `u v` (0-indexed).
//! * Kirkman system: `n c` with `n = 3 mod 6` and `c = (n-1)/2`, then `c`
//!   blocks `class i` followed by `n/3` lines `a b c`.
//! * coloring rounds: `n r p`, then `r` blocks of `C(n,2)` color ids in
//!   colex edge order. A block may span lines and may be introduced by a
//!   `round i` line. A single coloring is the case `r = 1`.
//! * clique certificate: a descriptor such as `M(C5)^4`, then one vertex
//!   sequence per line.

use std::fmt::Write as _;

use crate::colorings::ColoringRounds;
use crate::designs::{is_resolvable, ClassViolation, KirkmanSystem, Triple};
use crate::error::{Error, Result};
use crate::graph::{edge_count, Color, EdgeColoring, SimpleGraph};
use crate::shannon::{CliqueCertificate, GraphDescriptor};
use crate::verify::Verdict;

/// Largest vertex count any reader accepts.
pub const MAX_VERTICES: usize = 20_000;

/// Non-empty, comment-stripped lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

fn numbers<const N: usize>(line_no: usize, line: &str, what: &str) -> Result<[usize; N]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != N {
        return Err(Error::parse(
            line_no,
            format!("expected {N} integers for {what}, found {:?}", line),
        ));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| Error::parse(line_no, format!("{f:?} is not a non-negative integer")))?;
    }
    Ok(out)
}

fn check_vertices(line_no: usize, n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::parse(
            line_no,
            format!("{n} vertices exceeds the limit of {MAX_VERTICES}"),
        ));
    }
    Ok(())
}

pub fn read_graph(text: &str) -> Result<SimpleGraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header \"n m\""))?;
    let [n, m] = numbers::<2>(hl, header, "the header")?;
    check_vertices(hl, n)?;
    let mut g = SimpleGraph::empty(n);
    let mut read = 0;
    for (ln, line) in lines {
        let [u, v] = numbers::<2>(ln, line, "an edge")?;
        if u == v || u >= n || v >= n {
            return Err(Error::parse(ln, format!("invalid edge {u} {v} for n = {n}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(ln, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v)?;
        read += 1;
        if read > m {
            return Err(Error::parse(ln, format!("more than the {m} edges declared")));
        }
    }
    if read != m {
        return Err(Error::parse(
            last_line(text),
            format!("header declares {m} edges, found {read}"),
        ));
    }
    Ok(g)
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").expect("write to string");
    }
    out
}

pub fn read_kts(text: &str) -> Result<KirkmanSystem> {
    let mut lines = content_lines(text).peekable();
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header \"n c\""))?;
    let [n, c] = numbers::<2>(hl, header, "the header")?;
    check_vertices(hl, n)?;
    if n % 6 != 3 {
        return Err(Error::parse(hl, format!("no Kirkman system has n = {n}; need n = 3 mod 6")));
    }
    if c != (n - 1) / 2 {
        return Err(Error::parse(
            hl,
            format!("a Kirkman system on {n} points has {} classes, header says {c}", (n - 1) / 2),
        ));
    }
    let per_class = n / 3;
    let mut classes: Vec<Vec<Triple>> = Vec::with_capacity(c);
    let mut class_lines = Vec::with_capacity(c);
    // (triple, line) for every triple, to locate pair violations
    let mut located: Vec<(Triple, usize)> = Vec::new();
    while let Some((ln, line)) = lines.next() {
        let idx = classes.len();
        let label: Option<usize> = line
            .strip_prefix("class")
            .and_then(|rest| rest.trim().parse().ok());
        if label != Some(idx) {
            return Err(Error::parse(ln, format!("expected \"class {idx}\", found {line:?}")));
        }
        if idx >= c {
            return Err(Error::parse(ln, format!("more than the {c} classes declared")));
        }
        let mut class = Vec::with_capacity(per_class);
        while class.len() < per_class {
            let (tl, tline) = lines
                .next()
                .ok_or_else(|| Error::parse(last_line(text), format!("class {idx} is incomplete")))?;
            let t = numbers::<3>(tl, tline, "a triple")?;
            if t.iter().any(|&p| p >= n) || t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
                return Err(Error::parse(tl, format!("invalid triple {tline:?} for n = {n}")));
            }
            let mut sorted = t;
            sorted.sort_unstable();
            located.push((sorted, tl));
            class.push(t);
        }
        if let Some(&(ln, line)) = lines.peek() {
            if !line.starts_with("class") {
                return Err(Error::parse(ln, format!("class {idx} has more than {per_class} triples")));
            }
        }
        classes.push(class);
        class_lines.push(ln);
    }
    if classes.len() != c {
        return Err(Error::parse(
            last_line(text),
            format!("header declares {c} classes, found {}", classes.len()),
        ));
    }
    let ks = KirkmanSystem::new(n, classes)?;
    match is_resolvable(&ks) {
        Verdict::Pass => Ok(ks),
        Verdict::Fail(ClassViolation::NotPartition { class, point }) => Err(Error::parse(
            class_lines[class],
            format!("class {class} does not cover point {point} exactly once"),
        )),
        Verdict::Fail(ClassViolation::NotSteiner(v)) => {
            let (a, b) = v.pair;
            let line = if v.coverage == 0 {
                last_line(text)
            } else {
                located
                    .iter()
                    .filter(|(t, _)| t.contains(&a) && t.contains(&b))
                    .nth(1)
                    .map_or(hl, |&(_, l)| l)
            };
            Err(Error::parse(
                line,
                format!("pair {{{a}, {b}}} lies in {} triples, expected 1", v.coverage),
            ))
        }
    }
}

pub fn write_kts(ks: &KirkmanSystem) -> String {
    let mut out = format!("{} {}\n", ks.n(), ks.class_count());
    for (i, class) in ks.classes().iter().enumerate() {
        writeln!(out, "class {i}").expect("write to string");
        for t in class {
            writeln!(out, "{} {} {}", t[0], t[1], t[2]).expect("write to string");
        }
    }
    out
}

pub fn read_rounds(text: &str) -> Result<ColoringRounds> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header \"n r p\""))?;
    let [n, r, p] = numbers::<3>(hl, header, "the header")?;
    check_vertices(hl, n)?;
    if n < 2 {
        return Err(Error::parse(hl, "need at least 2 vertices"));
    }
    if p == 0 || p > Color::MAX as usize + 1 {
        return Err(Error::parse(hl, format!("palette size {p} out of range")));
    }
    let per_round = edge_count(n);
    let mut rounds = Vec::new();
    let mut current: Vec<Color> = Vec::new();
    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("round") {
            let idx: Option<usize> = rest.trim().parse().ok();
            if !current.is_empty() || idx != Some(rounds.len()) {
                return Err(Error::parse(
                    ln,
                    format!("unexpected {line:?} while reading round {}", rounds.len()),
                ));
            }
            continue;
        }
        for tok in line.split_whitespace() {
            if rounds.len() == r {
                return Err(Error::parse(ln, format!("more data than the {r} rounds declared")));
            }
            let c: usize = tok
                .parse()
                .map_err(|_| Error::parse(ln, format!("{tok:?} is not a color id")))?;
            if c >= p {
                return Err(Error::parse(ln, format!("color {c} outside palette of size {p}")));
            }
            current.push(c as Color);
            if current.len() == per_round {
                rounds.push(EdgeColoring::new(n, p, std::mem::take(&mut current))?);
            }
        }
    }
    if rounds.len() != r || !current.is_empty() {
        return Err(Error::parse(
            last_line(text),
            format!(
                "expected {r} rounds of {per_round} colors, found {} full rounds and {} extra colors",
                rounds.len(),
                current.len()
            ),
        ));
    }
    ColoringRounds::new(n, p, rounds)
}

pub fn write_rounds(rounds: &ColoringRounds) -> String {
    let mut out = format!("{} {} {}\n", rounds.n(), rounds.len(), rounds.palette());
    for round in rounds.rounds() {
        let ids: Vec<String> = round.colors().iter().map(Color::to_string).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

/// A single coloring as a one-round file.
pub fn write_coloring(c: &EdgeColoring) -> String {
    write_rounds(&ColoringRounds::new(c.n(), c.k(), vec![c.clone()]).expect("consistent round"))
}

/// Reads a file that must contain exactly one round.
pub fn read_coloring(text: &str) -> Result<EdgeColoring> {
    let rounds = read_rounds(text)?;
    if rounds.len() != 1 {
        return Err(Error::parse(1, format!("expected a single coloring, found {} rounds", rounds.len())));
    }
    Ok(rounds.rounds()[0].clone())
}

pub fn read_certificate(text: &str) -> Result<CliqueCertificate> {
    let mut lines = content_lines(text);
    let (dl, desc) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing graph descriptor"))?;
    let descriptor: GraphDescriptor = desc
        .parse()
        .map_err(|e: Error| Error::parse(dl, e.to_string()))?;
    let mut vertices = Vec::new();
    for (ln, line) in lines {
        let seq = descriptor
            .parse_sequence(line)
            .map_err(|e| Error::parse(ln, e.to_string()))?;
        vertices.push(seq);
    }
    if vertices.is_empty() {
        return Err(Error::parse(last_line(text), "certificate lists no vertices"));
    }
    Ok(CliqueCertificate {
        descriptor,
        vertices,
    })
}

pub fn write_certificate(cert: &CliqueCertificate) -> String {
    let mut out = format!("{}\n", cert.descriptor);
    for seq in &cert.vertices {
        out.push_str(&cert.descriptor.format_sequence(seq));
        out.push('\n');
    }
    out
}

/// What a coloring-valued input file turned out to be.
#[derive(Clone, Debug, PartialEq)]
pub enum ColoringInput {
    Kts(KirkmanSystem),
    Rounds(ColoringRounds),
}

/// Tells a Kirkman system from a rounds file by the presence of `class`
/// lines.
pub fn read_coloring_input(text: &str) -> Result<ColoringInput> {
    if content_lines(text).any(|(_, l)| l.starts_with("class")) {
        read_kts(text).map(ColoringInput::Kts)
    } else {
        read_rounds(text).map(ColoringInput::Rounds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::binary_four_color_rounds;
    use crate::designs::{kts9_base, kts_power_of_three};

    fn parse_line(e: Error) -> usize {
        match e {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn graph_round_trip() {
        let g = crate::shannon::grotzsch();
        assert_eq!(read_graph(&write_graph(&g)).unwrap(), g);
        let txt = "# C4\n4 4\n0 1\n1 2 # middle\n\n2 3\n3 0\n";
        assert_eq!(read_graph(txt).unwrap(), SimpleGraph::cycle(4));
    }

    #[test]
    fn graph_diagnostics() {
        assert_eq!(parse_line(read_graph("3 1\n0 3\n").unwrap_err()), 2);
        assert_eq!(parse_line(read_graph("3 2\n0 1\n1 0\n").unwrap_err()), 3);
        assert_eq!(parse_line(read_graph("3 1\n0 1\n1 2\n").unwrap_err()), 3);
        assert_eq!(parse_line(read_graph("3 2\n0 1\n").unwrap_err()), 2);
        assert_eq!(parse_line(read_graph("3\n").unwrap_err()), 1);
        assert_eq!(parse_line(read_graph("").unwrap_err()), 1);
        assert_eq!(parse_line(read_graph("99999999 0\n").unwrap_err()), 1);
        assert_eq!(parse_line(read_graph("2 1\n0 x\n").unwrap_err()), 2);
    }

    #[test]
    fn kts_round_trip() {
        for ks in [kts9_base(), kts_power_of_three(3).unwrap()] {
            assert_eq!(read_kts(&write_kts(&ks)).unwrap(), ks);
        }
    }

    #[test]
    fn kts_diagnostics() {
        let good = write_kts(&kts9_base());
        let lines: Vec<&str> = good.lines().collect();
        // swap one point between two triples of class 0: 0 1 2 / 3 4 5 -> 0 1 3 / 2 4 5
        let mut broken: Vec<String> = lines.iter().map(|s| s.to_string()).collect();
        assert_eq!(lines[1], "class 0");
        let (a, b) = (lines[2].to_string(), lines[3].to_string());
        let mut ta: Vec<usize> = a.split(' ').map(|x| x.parse().unwrap()).collect();
        let mut tb: Vec<usize> = b.split(' ').map(|x| x.parse().unwrap()).collect();
        std::mem::swap(&mut ta[2], &mut tb[0]);
        broken[2] = format!("{} {} {}", ta[0], ta[1], ta[2]);
        broken[3] = format!("{} {} {}", tb[0], tb[1], tb[2]);
        let err = read_kts(&broken.join("\n")).unwrap_err();
        assert!(parse_line(err) >= 2);

        let mut dup = lines.clone();
        dup[3] = dup[2];
        assert_eq!(parse_line(read_kts(&dup.join("\n")).unwrap_err()), 2);

        assert_eq!(parse_line(read_kts("9 4\nclass 1\n").unwrap_err()), 2);
        assert_eq!(parse_line(read_kts("8 4\n").unwrap_err()), 1);
        assert_eq!(parse_line(read_kts("9 3\n").unwrap_err()), 1);
        assert_eq!(parse_line(read_kts("19995 9997\n").unwrap_err()), 1);
        assert_eq!(parse_line(read_kts("9 4\nclass 0\n0 1 2\n").unwrap_err()), 3);
        assert_eq!(parse_line(read_kts("3 1\nclass 0\n0 1 9\n").unwrap_err()), 3);
        assert_eq!(parse_line(read_kts("3 1\nclass 0\n0 1 2\n0 1 2\n").unwrap_err()), 4);
        assert!(read_kts("3 1\nclass 0\n2 1 0\n").is_ok());
    }

    #[test]
    fn pg32_fixture_loads() {
        let ks = read_kts(include_str!("../tests/data/kts15_pg32.kts")).unwrap();
        assert_eq!((ks.n(), ks.class_count()), (15, 7));
    }

    #[test]
    fn rounds_round_trip() {
        let r = binary_four_color_rounds(16).unwrap();
        assert_eq!(read_rounds(&write_rounds(&r)).unwrap(), r);
        let c = crate::colorings::hamiltonian_decomposition_coloring(7).unwrap();
        assert_eq!(read_coloring(&write_coloring(&c)).unwrap(), c);
        let split = "3 2 2\nround 0\n0 1\n1\nround 1\n1 1 0\n";
        assert_eq!(read_rounds(split).unwrap().len(), 2);
    }

    #[test]
    fn rounds_diagnostics() {
        assert_eq!(parse_line(read_rounds("3 1 2\n0 1 2\n").unwrap_err()), 2);
        assert_eq!(parse_line(read_rounds("3 1 2\n0 1\n1 0\n").unwrap_err()), 3);
        assert_eq!(parse_line(read_rounds("3 2 2\n0 1 0\n").unwrap_err()), 2);
        assert_eq!(parse_line(read_rounds("3 1 0\n").unwrap_err()), 1);
        assert_eq!(parse_line(read_rounds("3 1 2\nround 1\n0 1 1\n").unwrap_err()), 2);
        assert!(read_coloring("3 2 2\n0 0 0\n1 1 1\n").is_err());
    }

    #[test]
    fn certificate_round_trip() {
        for cert in [CliqueCertificate::grotzsch_28(), CliqueCertificate::shannon_c5()] {
            assert_eq!(read_certificate(&write_certificate(&cert)).unwrap(), cert);
        }
        assert_eq!(parse_line(read_certificate("C5^2\n00\n1\n").unwrap_err()), 3);
        assert_eq!(parse_line(read_certificate("X^2\n00\n").unwrap_err()), 1);
        assert_eq!(parse_line(read_certificate("C5^2\n").unwrap_err()), 1);
    }

    #[test]
    fn detects_input_kind() {
        let ks = kts9_base();
        assert!(matches!(read_coloring_input(&write_kts(&ks)), Ok(ColoringInput::Kts(_))));
        let c = crate::colorings::hamiltonian_decomposition_coloring(5).unwrap();
        assert!(matches!(
            read_coloring_input(&write_coloring(&c)),
            Ok(ColoringInput::Rounds(_))
        ));
    }
}
