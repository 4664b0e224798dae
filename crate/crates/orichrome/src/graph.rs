//! Multigraph data model and text-format ingestion.
//!
//! Vertices are 1-based in the external formats and 0-based in memory.
//! The stored edge order is load-bearing: edge `e` with endpoints `(u, v)`
//! defines the reference orientation `u -> v`, and every [`Orientation`] is
//! a per-edge flip mask relative to that reference. Reversing a stored pair
//! flips the sign of every downstream census coefficient, so the input
//! order is kept verbatim and never canonicalized.
//!
//! Loops and parallel edges are first-class citizens. A loop still has two
//! formal orientations (flip bit clear or set); they contribute the same
//! out-degree but opposite agreement parity.

use std::fmt;

use thiserror::Error;

/// Errors from multigraph construction and the text-format parsers.
///
/// Parse errors carry the 1-based line number of the offending input line.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: endpoint {value} out of range 1..={n}")]
    EndpointOutOfRange { line: usize, value: u64, n: usize },
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("line {line}: unexpected line after {expected} edges")]
    TrailingLine { line: usize, expected: usize },
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("edge ({u}, {v}) out of range for {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("line {line}: duplicate problem line")]
    DuplicateProblemLine { line: usize },
    #[error("missing problem line")]
    MissingProblemLine,
    #[error("flip mask has {got} entries, graph has {expected} edges")]
    FlipLengthMismatch { got: usize, expected: usize },
}

/// An undirected multigraph with an ordered edge list.
///
/// Endpoints are 0-based internally. Loops (`u == v`) and repeated pairs are
/// allowed. The edge list is immutable after construction; its order defines
/// the reference orientation used by the census and polynomial engines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    /// Builds a multigraph from 0-based endpoints.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
        }
        Ok(Multigraph { n, edges })
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Multigraph::new(n, Vec::new()).expect("empty graph needs n >= 1")
    }

    /// Complete graph on `n` vertices, edges `(i, j)` for `i < j` in
    /// lexicographic order.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((i, j));
            }
        }
        Multigraph::new(n, edges).expect("complete graph needs n >= 1")
    }

    /// Cycle on `n` vertices: edges `(0,1), (1,2), ..., (n-1,0)`.
    ///
    /// `n = 1` gives a single loop, `n = 2` a pair of parallel edges; both
    /// are legitimate multigraphs here.
    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::new(n, edges).expect("cycle needs n >= 1")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in stored order; pair `(u, v)` is the reference orientation
    /// `u -> v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Copy of the graph with the stored pair of edge `index` swapped.
    ///
    /// The edge set is unchanged but the reference orientation of that edge
    /// reverses, which negates every census coefficient downstream.
    pub fn with_edge_reversed(&self, index: usize) -> Self {
        let mut edges = self.edges.clone();
        let (u, v) = edges[index];
        edges[index] = (v, u);
        Multigraph { n: self.n, edges }
    }

    /// Copy of the graph with vertex `i` renamed to `perm[i]`.
    ///
    /// `perm` must be a permutation of `0..n`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self, GraphError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || !perm
                .iter()
                .all(|&p| p < self.n && !std::mem::replace(&mut seen[p], true))
        {
            return Err(GraphError::Malformed {
                line: 0,
                message: format!("not a permutation of 0..{}", self.n),
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Multigraph::new(self.n, edges)
    }

    /// The all-unflipped orientation (every edge as stored).
    pub fn reference_orientation(&self) -> Orientation<'_> {
        Orientation {
            graph: self,
            flips: vec![false; self.edges.len()],
        }
    }

    /// An orientation given by an explicit flip mask.
    pub fn orientation(&self, flips: Vec<bool>) -> Result<Orientation<'_>, GraphError> {
        if flips.len() != self.edges.len() {
            return Err(GraphError::FlipLengthMismatch {
                got: flips.len(),
                expected: self.edges.len(),
            });
        }
        Ok(Orientation { graph: self, flips })
    }

    /// Parses the plain edge-list format.
    ///
    /// First significant line is `n m`, followed by exactly `m` lines `u v`
    /// with 1-based endpoints. Lines starting with `#` are comments; blank
    /// lines are skipped; CRLF is tolerated.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut n = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match header {
                None => {
                    let (hn, hm) = parse_two_ints(line, lineno, "vertex and edge counts")?;
                    if hn == 0 {
                        return Err(GraphError::EmptyVertexSet);
                    }
                    n = hn as usize;
                    header = Some((n, hm as usize));
                }
                Some((_, m)) => {
                    if edges.len() == m {
                        return Err(GraphError::TrailingLine {
                            line: lineno,
                            expected: m,
                        });
                    }
                    let (u, v) = parse_two_ints(line, lineno, "edge endpoints")?;
                    edges.push(endpoints_to_internal(u, v, n, lineno)?);
                }
            }
        }
        let (n, m) = header.ok_or(GraphError::Malformed {
            line: 0,
            message: "empty input".into(),
        })?;
        if edges.len() != m {
            return Err(GraphError::WrongEdgeCount {
                expected: m,
                found: edges.len(),
            });
        }
        Multigraph::new(n, edges)
    }

    /// Parses the DIMACS `.col` subset: `c` comment lines, one
    /// `p edge <n> <m>` problem line, and `m` lines `e <u> <v>`.
    pub fn parse_dimacs(text: &str) -> Result<Self, GraphError> {
        let mut problem: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                if problem.is_some() {
                    return Err(GraphError::DuplicateProblemLine { line: lineno });
                }
                let fields: Vec<&str> = rest.split_whitespace().collect();
                if fields.len() != 3 || fields[0] != "edge" {
                    return Err(GraphError::Malformed {
                        line: lineno,
                        message: format!("expected `p edge <n> <m>`, got `{line}`"),
                    });
                }
                let n: u64 = parse_int(fields[1], lineno)?;
                let m: u64 = parse_int(fields[2], lineno)?;
                if n == 0 {
                    return Err(GraphError::EmptyVertexSet);
                }
                problem = Some((n as usize, m as usize));
            } else if let Some(rest) = line.strip_prefix('e') {
                let (n, m) = problem.ok_or(GraphError::MissingProblemLine)?;
                if edges.len() == m {
                    return Err(GraphError::TrailingLine {
                        line: lineno,
                        expected: m,
                    });
                }
                let (u, v) = parse_two_ints(rest.trim(), lineno, "edge endpoints")?;
                edges.push(endpoints_to_internal(u, v, n, lineno)?);
            } else {
                return Err(GraphError::Malformed {
                    line: lineno,
                    message: format!("unrecognized line `{line}`"),
                });
            }
        }
        let (n, m) = problem.ok_or(GraphError::MissingProblemLine)?;
        if edges.len() != m {
            return Err(GraphError::WrongEdgeCount {
                expected: m,
                found: edges.len(),
            });
        }
        Multigraph::new(n, edges)
    }

    /// Parses either supported format, sniffing DIMACS by its problem line.
    pub fn parse_auto(text: &str) -> Result<Self, GraphError> {
        match sniff_format(text) {
            GraphFormat::Dimacs => Multigraph::parse_dimacs(text),
            GraphFormat::EdgeList => Multigraph::parse_edge_list(text),
        }
    }

    /// Emits the edge-list format with 1-based endpoints.
    ///
    /// `parse_edge_list(to_canonical_text(g))` reproduces `g` exactly,
    /// including edge order.
    pub fn to_canonical_text(&self) -> String {
        use fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }
}

/// The two supported input formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

/// Guesses the input format: the first significant line decides.
///
/// A leading `p edge` (or a `c` comment, which only DIMACS allows) selects
/// DIMACS; anything else is treated as the edge-list format.
pub fn sniff_format(text: &str) -> GraphFormat {
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with("p ") || line.starts_with('c') {
            return GraphFormat::Dimacs;
        }
        return GraphFormat::EdgeList;
    }
    GraphFormat::EdgeList
}

fn parse_int(field: &str, line: usize) -> Result<u64, GraphError> {
    field.parse().map_err(|_| GraphError::Malformed {
        line,
        message: format!("expected an integer, got `{field}`"),
    })
}

fn parse_two_ints(line_text: &str, line: usize, what: &str) -> Result<(u64, u64), GraphError> {
    let fields: Vec<&str> = line_text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(GraphError::Malformed {
            line,
            message: format!("expected {what} as two integers, got `{line_text}`"),
        });
    }
    Ok((parse_int(fields[0], line)?, parse_int(fields[1], line)?))
}

fn endpoints_to_internal(
    u: u64,
    v: u64,
    n: usize,
    line: usize,
) -> Result<(usize, usize), GraphError> {
    for value in [u, v] {
        if value == 0 || value > n as u64 {
            return Err(GraphError::EndpointOutOfRange { line, value, n });
        }
    }
    Ok((u as usize - 1, v as usize - 1))
}

/// Agreement parity of an orientation relative to the reference: even means
/// the two differ in an even number of edge reversals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// `+1` for even, `-1` for odd: the sign the orientation's monomial
    /// carries in the expanded edge-difference product.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

/// One of the `2^m` orientations of a multigraph, stored as a flip mask
/// against the reference orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation<'g> {
    graph: &'g Multigraph,
    flips: Vec<bool>,
}

impl<'g> Orientation<'g> {
    pub fn graph(&self) -> &'g Multigraph {
        self.graph
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    /// Out-degree of every vertex under this orientation.
    ///
    /// A loop contributes exactly 1 to its vertex under either of its two
    /// formal orientations, so the entries always sum to the edge count.
    pub fn out_degrees(&self) -> Vec<u32> {
        let mut degrees = vec![0u32; self.graph.n];
        for (e, &(u, v)) in self.graph.edges.iter().enumerate() {
            if u == v || !self.flips[e] {
                degrees[u] += 1;
            } else {
                degrees[v] += 1;
            }
        }
        degrees
    }

    /// Number of set flip entries, reduced to even/odd.
    pub fn parity(&self) -> Parity {
        if self.flips.iter().filter(|&&f| f).count() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}
