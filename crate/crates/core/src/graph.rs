//! Simple undirected graphs on a small labelled vertex set, vertex subsets as
//! bitmasks, and the induced-subgraph counts that the root-system side of the
//! crate is phrased in.

use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};

/// Hard ceiling imposed by the `u32` bitmask representation of [`VertexSet`].
pub const MAX_BITMASK_VERTICES: usize = 32;

/// Identifier of the pseudo-random generator used by [`generate_graph`].
pub const RANDOM_GRAPH_ALGORITHM: &str = "splitmix64/lex-pairs/53bit-uniform";

/// A subset of the vertex range `[0, l)` stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// All vertices `0..l`.
    pub fn full(l: usize) -> Self {
        if l >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << l) - 1)
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0, |m, v| m | (1 << v)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    /// Smallest member, if any.
    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1 << v))
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut sub = Some(0u32);
        std::iter::from_fn(move || {
            let cur = sub?;
            sub = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(VertexSet(cur))
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph on vertices `0..l`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    l: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new(l: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        if l > MAX_BITMASK_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{l} vertices exceeds the bitmask limit of {MAX_BITMASK_VERTICES}"
            )));
        }
        let mut adj = vec![VertexSet::EMPTY; l];
        for (u, v) in edges {
            if u >= l || v >= l {
                return Err(Error::InvalidGraph(format!("edge {u} {v} has an endpoint outside 0..{l}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Ok(Graph { l, adj })
    }

    pub fn edgeless(l: usize) -> Result<Self> {
        Graph::new(l, [])
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.l
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.l)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.l)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_count(self.vertices())
    }

    /// Number of edges with both ends in `s`.
    pub fn edge_count(&self, s: VertexSet) -> usize {
        s.iter().map(|v| self.adj[v].intersection(s).len()).sum::<usize>() / 2
    }

    /// Number of edges with one end in `s` and the other in `t`.
    ///
    /// Panics if `s` and `t` overlap.
    pub fn cross_edge_count(&self, s: VertexSet, t: VertexSet) -> usize {
        assert!(s.is_disjoint(t), "cross_edge_count: {s:?} and {t:?} overlap");
        s.iter().map(|v| self.adj[v].intersection(t).len()).sum()
    }

    /// Whether the subgraph induced by `s` is connected. Panics on an empty set.
    pub fn is_connected(&self, s: VertexSet) -> bool {
        let start = s.min_vertex().expect("is_connected: empty vertex set");
        self.reach(VertexSet::singleton(start), s) == s
    }

    /// Whether the whole graph is connected.
    pub fn is_connected_graph(&self) -> bool {
        self.is_connected(self.vertices())
    }

    fn reach(&self, seed: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = seed;
        let mut frontier = seed;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Vertex sets of the connected components, ordered by minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.min_vertex() {
            let comp = self.reach(VertexSet::singleton(v), left);
            out.push(comp);
            left = left.difference(comp);
        }
        out
    }

    /// Bilinear form on the root lattice, evaluated on `beta(s)` and `beta(t)`
    /// by summing the simple-root values: 2 on the diagonal, -1 on adjacent
    /// pairs, 0 otherwise.
    pub fn root_form(&self, s: VertexSet, t: VertexSet) -> i64 {
        let mut total = 0i64;
        for a in s.iter() {
            for b in t.iter() {
                total += if a == b {
                    2
                } else if self.has_edge(a, b) {
                    -1
                } else {
                    0
                };
            }
        }
        total
    }

    /// `<beta(s), beta(s) - 2 rho>` for a connected support `s`, which is
    /// `-2 e(s)`.
    pub fn form_beta_beta_minus_2rho(&self, s: VertexSet) -> i64 {
        assert!(!s.is_empty() && self.is_connected(s), "form_beta_beta_minus_2rho: {s:?} is not connected");
        -2 * self.edge_count(s) as i64
    }

    /// Subgraph induced by `s`, relabelled to `0..|s|` in increasing vertex
    /// order. The returned vector maps new labels to old ones.
    pub fn induced(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        let old: Vec<usize> = s.to_vec();
        let mut pos = vec![usize::MAX; self.l];
        for (i, &v) in old.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| s.contains(u) && s.contains(v))
            .map(|(u, v)| (pos[u], pos[v]));
        Ok((Graph::new(old.len(), edges)?, old))
    }

    /// Spanning subgraph that keeps all vertices but only edges lying inside
    /// one of `blocks`.
    pub fn restrict_to_blocks(&self, blocks: &[VertexSet]) -> Graph {
        let edges = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| blocks.iter().any(|b| b.contains(u) && b.contains(v)));
        Graph::new(self.l, edges).expect("subgraph of a valid graph")
    }

    /// Disjoint union, with `other`'s vertices shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.l;
        let edges = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(self.l + other.l, edges)
    }

    /// Renders in the edge-list text format accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.l);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("l", &self.l).field("edges", &self.edges()).finish()
    }
}

/// Parses the edge-list format: first content line is the vertex count, each
/// following non-empty line is `u v`, lines starting with `#` are comments.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing vertex count".into() })?;
    let l: usize = header.parse().map_err(|_| Error::Parse {
        line: header_line,
        message: format!("expected a vertex count, found {header:?}"),
    })?;
    if l == 0 || l > MAX_BITMASK_VERTICES {
        return Err(Error::Parse {
            line: header_line,
            message: format!("vertex count must be in 1..={MAX_BITMASK_VERTICES}, found {l}"),
        });
    }

    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let err = |message: String| Error::Parse { line: line_no, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!("expected two vertex indices, found {line:?}")));
        }
        let parse = |s: &str| s.parse::<usize>().map_err(|_| err(format!("invalid vertex index {s:?}")));
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        if u >= l || v >= l {
            return Err(err(format!("vertex index out of range 0..{l} in {line:?}")));
        }
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    Graph::new(l, edges)
}

/// Named graph families accepted by [`generate_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Random,
    Edgeless,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "star" => Family::Star,
            "random" => Family::Random,
            "edgeless" | "empty" => Family::Edgeless,
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Random => "random",
            Family::Edgeless => "edgeless",
        })
    }
}

/// Canonical member of a graph family on `n` vertices.
///
/// Stars are centred at vertex 0. Random graphs include each pair `u < v`,
/// visited in lexicographic order, when the next SplitMix64 output mapped to
/// `[0, 1)` via its top 53 bits is below `p`.
pub fn generate_graph(family: Family, n: usize, seed: Option<u64>, p: Option<f64>) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("graph size must be at least 1".into()));
    }
    let edges: Vec<(usize, usize)> = match family {
        Family::Path => (1..n).map(|v| (v - 1, v)).collect(),
        Family::Cycle => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!("a cycle needs at least 3 vertices, got {n}")));
            }
            (0..n).map(|v| (v, (v + 1) % n)).collect()
        }
        Family::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        Family::Star => (1..n).map(|v| (0, v)).collect(),
        Family::Edgeless => Vec::new(),
        Family::Random => {
            let p = p.ok_or_else(|| Error::InvalidParameter("random graphs need p".into()))?;
            let seed = seed.ok_or_else(|| Error::InvalidParameter("random graphs need a seed".into()))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!("edge probability {p} is outside [0, 1]")));
            }
            let mut rng = SplitMix64::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                    if x < p {
                        edges.push((u, v));
                    }
                }
            }
            edges
        }
    };
    Graph::new(n, edges)
}

/// Enumerates every connected vertex set `S` with `seed ⊆ S ⊆ pool` that is
/// reachable by growing from `seed` through neighbours, each exactly once.
/// `seed` must itself be connected and non-empty.
pub(crate) fn for_each_connected_superset(
    g: &Graph,
    seed: VertexSet,
    pool: VertexSet,
    f: &mut impl FnMut(VertexSet),
) {
    let mut frontier = VertexSet::EMPTY;
    for v in seed.iter() {
        frontier = frontier.union(g.neighbors(v));
    }
    let frontier = frontier.intersection(pool).difference(seed);
    grow(g, seed, frontier, VertexSet::EMPTY, pool, f);
}

fn grow(
    g: &Graph,
    current: VertexSet,
    candidates: VertexSet,
    excluded: VertexSet,
    pool: VertexSet,
    f: &mut impl FnMut(VertexSet),
) {
    f(current);
    let mut excluded = excluded;
    for u in candidates.iter() {
        let next = current.with(u);
        let extended = candidates
            .union(g.neighbors(u).intersection(pool))
            .difference(next)
            .difference(excluded)
            .without(u);
        grow(g, next, extended, excluded, pool, f);
        excluded = excluded.with(u);
    }
}

/// All connected vertex subsets of `g`, grouped by minimum vertex and then in
/// discovery order.
pub fn connected_subsets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for v in 0..g.order() {
        let pool = VertexSet::full(g.order()).difference(VertexSet::full(v));
        for_each_connected_superset(g, VertexSet::singleton(v), pool, &mut |s| out.push(s));
    }
    out
}
