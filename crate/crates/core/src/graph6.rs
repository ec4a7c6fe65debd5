//! graph6 encoding (short and long size prefixes) and `.g6` corpus reading.
//!
//! The size prefix is one byte `n + 63` for `n <= 62`, `~` plus three
//! 6-bit groups for `n <= 258047`, and `~~` plus six groups beyond that.
//! Adjacency bits follow in column order `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed big-endian six at a time, each group offset by 63. Padding at the
//! end of the last group must be zero.

use std::io::BufRead;

use crate::error::{Error, Graph6Error, Result};
use crate::graph::{Graph, VertexSet};

pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = 68_719_476_735;

/// Number of graphs on `n` vertices up to isomorphism, `n = 1..=10`.
pub const KNOWN_GRAPH_COUNTS: [usize; 10] = [1, 2, 4, 11, 34, 156, 1044, 12_346, 274_668, 12_005_168];

pub fn decode_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    match bytes.first() {
        None => return Err(Graph6Error::Empty),
        Some(b':') => return Err(Graph6Error::Sparse6),
        Some(b'&') => return Err(Graph6Error::Digraph6),
        _ => {}
    }
    if let Some(offset) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(Graph6Error::BadCharacter { byte: bytes[offset], offset });
    }
    let (n, body) = decode_size(bytes)?;
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Length { expected, found: body.len() });
    }
    let pad = expected * 6 - bit_count;
    if pad > 0 && (body[expected - 1] - BIAS) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }

    let mut rows = vec![VertexSet::new(n); n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - BIAS;
            if group >> (5 - k % 6) & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(rows))
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let groups = |s: &[u8]| s.iter().fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
    if bytes[0] != 126 {
        return Ok(((bytes[0] - BIAS) as usize, &bytes[1..]));
    }
    if bytes.get(1) == Some(&126) {
        let digits = bytes.get(2..8).ok_or(Graph6Error::TruncatedSize)?;
        Ok((groups(digits), &bytes[8..]))
    } else {
        let digits = bytes.get(1..4).ok_or(Graph6Error::TruncatedSize)?;
        Ok((groups(digits), &bytes[4..]))
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= LONG_MAX, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    let push_groups = |out: &mut Vec<u8>, value: usize, count: usize| {
        for i in (0..count).rev() {
            out.push(((value >> (6 * i)) & 0x3f) as u8 + BIAS);
        }
    };
    if n <= SHORT_MAX {
        out.push(n as u8 + BIAS);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        push_groups(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_groups(&mut out, n, 6);
    }

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + BIAS);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// What [`CorpusReader`] does with a line that fails to decode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReadMode {
    /// Yield the error and stop.
    FailFast,
    /// Record the error (see [`CorpusReader::skipped`]) and continue.
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    /// 1-based physical line number.
    pub line: usize,
    pub graph: Graph,
}

/// Lazily decodes a `.g6` stream: one graph per line, LF or CRLF, blank
/// lines skipped, an optional `>>graph6<<` header tolerated on any line.
pub struct CorpusReader<R> {
    lines: std::io::Lines<R>,
    line: usize,
    mode: ReadMode,
    done: bool,
    skipped: Vec<(usize, Graph6Error)>,
}

impl<R: BufRead> CorpusReader<R> {
    pub fn new(reader: R, mode: ReadMode) -> Self {
        CorpusReader { lines: reader.lines(), line: 0, mode, done: false, skipped: Vec::new() }
    }

    /// Lines rejected so far in [`ReadMode::Skip`].
    pub fn skipped(&self) -> &[(usize, Graph6Error)] {
        &self.skipped
    }
}

impl<R: BufRead> Iterator for CorpusReader<R> {
    type Item = Result<CorpusEntry>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            let text = match self.lines.next()? {
                Ok(t) => t,
                Err(e) => {
                    self.done = true;
                    return Some(Err(e.into()));
                }
            };
            self.line += 1;
            let text = text.trim_end_matches('\r');
            let text = text.strip_prefix(HEADER).unwrap_or(text);
            if text.is_empty() {
                continue;
            }
            match decode_graph6(text) {
                Ok(graph) => return Some(Ok(CorpusEntry { line: self.line, graph })),
                Err(source) => match self.mode {
                    ReadMode::FailFast => {
                        self.done = true;
                        return Some(Err(Error::Corpus { line: self.line, error: source }));
                    }
                    ReadMode::Skip => self.skipped.push((self.line, source)),
                },
            }
        }
        None
    }
}

pub fn read_corpus<R: BufRead>(reader: R, mode: ReadMode) -> CorpusReader<R> {
    CorpusReader::new(reader, mode)
}

/// Reads a whole corpus from a string in fail-fast mode.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    read_corpus(text.as_bytes(), ReadMode::FailFast).collect()
}

/// Ingestion gate: a corpus claiming to hold every graph on `n` vertices
/// must have the known count (checked for `n <= 7`).
pub fn check_corpus_count(n: usize, found: usize) -> Result<()> {
    match KNOWN_GRAPH_COUNTS.get(n.wrapping_sub(1)) {
        Some(&expected) if expected != found => Err(Error::CorpusCount { n, found, expected }),
        _ => Ok(()),
    }
}

pub fn write_corpus<'a, W, I>(mut out: W, graphs: I) -> Result<()>
where
    W: std::io::Write,
    I: IntoIterator<Item = &'a Graph>,
{
    for g in graphs {
        writeln!(out, "{}", encode_graph6(g))?;
    }
    Ok(())
}
