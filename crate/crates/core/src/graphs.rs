//! Dense directed graphs, Cayley graphs and mirror di-Cayley graphs.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{FiniteGroup, GroupSubset};
use crate::error::{Error, Result};

/// Largest graph accepted by `small_isomorphic`.
pub const ISOMORPHISM_LIMIT: usize = 10;

/// Edge rule for Cayley-type graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CayleyKind {
    /// `h → g` iff `g h⁻¹ ∈ S`.
    Difference,
    /// `h → g` iff `g h ∈ S`.
    Sum,
}

impl CayleyKind {
    pub const ALL: [CayleyKind; 2] = [CayleyKind::Difference, CayleyKind::Sum];

    pub fn tag(&self) -> &'static str {
        match self {
            CayleyKind::Difference => "diff",
            CayleyKind::Sum => "sum",
        }
    }
}

/// Dense 0/1 adjacency; entry `(u, v) = 1` is an arc `u → v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u8>,
    labels: Vec<String>,
    flags: GraphFlags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphFlags {
    pub undirected: bool,
    pub has_loops: bool,
    pub regular_degree: Option<usize>,
}

impl Graph {
    pub fn from_adjacency(n: usize, adj: Vec<u8>, labels: Vec<String>) -> Result<Self> {
        if adj.len() != n * n || labels.len() != n {
            return Err(Error::InvalidParameter(format!(
                "adjacency of length {} and {} labels for {n} vertices",
                adj.len(),
                labels.len()
            )));
        }
        if adj.iter().any(|&x| x > 1) {
            return Err(Error::InvalidParameter("adjacency entries must be 0 or 1".into()));
        }
        Ok(Self::finish(n, adj, labels))
    }

    fn finish(n: usize, adj: Vec<u8>, labels: Vec<String>) -> Self {
        let at = |u: usize, v: usize| adj[u * n + v];
        let undirected = (0..n).all(|u| (u + 1..n).all(|v| at(u, v) == at(v, u)));
        let has_loops = (0..n).any(|u| at(u, u) == 1);
        let rows: Vec<usize> = (0..n).map(|u| (0..n).map(|v| at(u, v) as usize).sum()).collect();
        let cols: Vec<usize> = (0..n).map(|v| (0..n).map(|u| at(u, v) as usize).sum()).collect();
        let regular_degree = match rows.first() {
            Some(&d) if rows.iter().chain(&cols).all(|&x| x == d) => Some(d),
            None => Some(0),
            _ => None,
        };
        Graph { n, adj, labels, flags: GraphFlags { undirected, has_loops, regular_degree } }
    }

    pub fn empty(n: usize) -> Self {
        Self::finish(n, vec![0; n * n], (0..n).map(|i| i.to_string()).collect())
    }

    /// Builds a graph from arcs; `symmetric` adds the reverse of each.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)], symmetric: bool) -> Result<Self> {
        let mut adj = vec![0u8; n * n];
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange { index: u.max(v), order: n });
            }
            adj[u * n + v] = 1;
            if symmetric {
                adj[v * n + u] = 1;
            }
        }
        Ok(Self::finish(n, adj, (0..n).map(|i| i.to_string()).collect()))
    }

    pub fn cycle(n: usize) -> Self {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_arcs(n, &arcs, true).expect("in range")
    }

    pub fn path(n: usize) -> Self {
        let arcs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_arcs(n, &arcs, true).expect("in range")
    }

    pub fn complete(n: usize) -> Self {
        let arcs: Vec<_> = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
        Self::from_arcs(n, &arcs, false).expect("in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &[u8] {
        &self.adj
    }

    pub fn row(&self, u: usize) -> &[u8] {
        &self.adj[u * self.n..(u + 1) * self.n]
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v] == 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameter("label count mismatch".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn flags(&self) -> GraphFlags {
        self.flags
    }

    pub fn is_undirected(&self) -> bool {
        self.flags.undirected
    }

    pub fn has_loops(&self) -> bool {
        self.flags.has_loops
    }

    pub fn regular_degree(&self) -> Option<usize> {
        self.flags.regular_degree
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|&x| x as usize).sum()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).map(|u| self.adj[u * self.n + v] as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.out_degree(u).max(self.in_degree(u))).max().unwrap_or(0)
    }

    pub fn loop_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_arc(u, u)).collect()
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(|&x| x as usize).sum()
    }

    /// Adjacency as a row-major `f64` matrix.
    pub fn to_f64(&self) -> Vec<f64> {
        self.adj.iter().map(|&x| x as f64).collect()
    }

    pub fn transpose(&self) -> Graph {
        let n = self.n;
        let adj = (0..n * n).map(|i| self.adj[(i % n) * n + i / n]).collect();
        Self::finish(n, adj, self.labels.clone())
    }

    /// Adds a loop at every vertex.
    pub fn with_loops(&self) -> Graph {
        let mut adj = self.adj.clone();
        for u in 0..self.n {
            adj[u * self.n + u] = 1;
        }
        Self::finish(self.n, adj, self.labels.clone())
    }

    /// Edge-set union over the same vertex set.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::InvalidParameter(format!("vertex counts {} and {} differ", self.n, other.n)));
        }
        let adj = self.adj.iter().zip(&other.adj).map(|(a, b)| a | b).collect();
        Ok(Self::finish(self.n, adj, self.labels.clone()))
    }

    /// First coordinate `(u, v)` where the adjacency tables differ.
    pub fn first_difference(&self, other: &Graph) -> Option<(usize, usize)> {
        if self.n != other.n {
            return Some((self.n.min(other.n), 0));
        }
        self.adj
            .iter()
            .zip(&other.adj)
            .position(|(a, b)| a != b)
            .map(|i| (i / self.n, i % self.n))
    }

    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }

    /// Weakly connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if comp[v] == usize::MAX && (self.has_arc(u, v) || self.has_arc(v, u)) {
                        comp[v] = id;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Two-colouring by BFS; only defined for undirected loopless graphs.
    pub fn is_bipartite(&self) -> Result<bool> {
        if !self.is_undirected() || self.has_loops() {
            return Err(Error::BipartiteUndefined);
        }
        let n = self.n;
        let mut colour = vec![u8::MAX; n];
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if self.has_arc(u, v) {
                        if colour[v] == u8::MAX {
                            colour[v] = 1 - colour[u];
                            queue.push_back(v);
                        } else if colour[v] == colour[u] {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Classes (size ≥ 2) of vertices with identical out-neighbourhoods.
    pub fn twin_classes(&self) -> Vec<Vec<usize>> {
        let mut by_row: HashMap<&[u8], Vec<usize>> = HashMap::new();
        for u in 0..self.n {
            by_row.entry(self.row(u)).or_default().push(u);
        }
        let mut classes: Vec<Vec<usize>> = by_row.into_values().filter(|c| c.len() > 1).collect();
        classes.sort();
        classes
    }

    pub fn structure_report(&self) -> StructureReport {
        let out_degrees: Vec<usize> = (0..self.n).map(|u| self.out_degree(u)).collect();
        let in_degrees: Vec<usize> = (0..self.n).map(|u| self.in_degree(u)).collect();
        let constant = |d: &[usize]| match d.first() {
            Some(&x) if d.iter().all(|&y| y == x) => Some(x),
            _ => None,
        };
        StructureReport {
            vertices: self.n,
            directed: !self.is_undirected(),
            loop_vertices: self.loop_vertices(),
            out_regular: constant(&out_degrees),
            in_regular: constant(&in_degrees),
            bipartite: self.is_bipartite().ok(),
            components: self.components().len(),
            twin_classes: self.twin_classes(),
        }
    }

    /// Disjoint union, vertices of each graph in turn.
    pub fn disjoint_union(graphs: &[&Graph]) -> Graph {
        let n: usize = graphs.iter().map(|g| g.n).sum();
        let mut adj = vec![0u8; n * n];
        let mut labels = Vec::with_capacity(n);
        let mut offset = 0;
        for (k, g) in graphs.iter().enumerate() {
            for u in 0..g.n {
                for v in 0..g.n {
                    adj[(offset + u) * n + offset + v] = g.adj[u * g.n + v];
                }
                labels.push(format!("{k}:{}", g.labels[u]));
            }
            offset += g.n;
        }
        Self::finish(n, adj, labels)
    }

    /// Graph on `perm`-relabelled vertices: vertex `u` becomes `perm[u]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        let mut adj = vec![0u8; n * n];
        let mut labels = vec![String::new(); n];
        for u in 0..n {
            labels[perm[u]] = self.labels[u].clone();
            for v in 0..n {
                adj[perm[u] * n + perm[v]] = self.adj[u * n + v];
            }
        }
        Ok(Self::finish(n, adj, labels))
    }

    /// DOT rendering. Undirected graphs use `--`; in directed graphs a
    /// reciprocal pair is drawn once with `dir=none`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let undirected = self.is_undirected();
        let (kw, arrow) = if undirected { ("graph", "--") } else { ("digraph", "->") };
        let _ = writeln!(s, "{kw} \"{}\" {{", name.replace('"', "'"));
        for (u, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  {u} [label=\"{}\"];", l.replace('"', "'"));
        }
        for u in 0..self.n {
            for v in 0..self.n {
                if !self.has_arc(u, v) {
                    continue;
                }
                let paired = self.has_arc(v, u);
                if paired && v < u {
                    continue;
                }
                if undirected || !paired || u == v {
                    let _ = writeln!(s, "  {u} {arrow} {v};");
                } else {
                    let _ = writeln!(s, "  {u} {arrow} {v} [dir=none];");
                }
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            labels: self.labels.clone(),
            adjacency: (0..self.n)
                .map(|u| self.row(u).iter().map(|&x| if x == 1 { '1' } else { '0' }).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Graph> {
        let g: GraphJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        g.into_graph()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub labels: Vec<String>,
    /// One `0`/`1` string per row.
    pub adjacency: Vec<String>,
}

impl GraphJson {
    pub fn into_graph(self) -> Result<Graph> {
        if self.adjacency.len() != self.n {
            return Err(Error::Parse(format!("{} rows for {} vertices", self.adjacency.len(), self.n)));
        }
        let mut adj = Vec::with_capacity(self.n * self.n);
        for row in &self.adjacency {
            if row.len() != self.n {
                return Err(Error::Parse(format!("row `{row}` has the wrong length")));
            }
            for c in row.chars() {
                adj.push(match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::Parse(format!("bad adjacency character `{c}`"))),
                });
            }
        }
        Graph::from_adjacency(self.n, adj, self.labels)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub vertices: usize,
    pub directed: bool,
    pub loop_vertices: Vec<usize>,
    pub out_regular: Option<usize>,
    pub in_regular: Option<usize>,
    /// `None` when the graph is directed or has loops.
    pub bipartite: Option<bool>,
    pub components: usize,
    pub twin_classes: Vec<Vec<usize>>,
}

/// `X(G,S)` or `X⁺(G,S)`.
pub fn cayley(group: &FiniteGroup, s: &GroupSubset, kind: CayleyKind) -> Result<Graph> {
    s.ensure_over(group)?;
    let n = group.order();
    let mut adj = vec![0u8; n * n];
    crate::par::for_each_row(&mut adj, n, |h, row| {
        let h_inv = group.invert_unchecked(h);
        for &x in s.members() {
            let g = match kind {
                CayleyKind::Difference => group.combine_unchecked(x, h),
                CayleyKind::Sum => group.combine_unchecked(x, h_inv),
            };
            row[g] = 1;
        }
    });
    Ok(Graph::finish(n, adj, group.element_labels().to_vec()))
}

/// Index of vertex `(g, i)` in a mirror di-Cayley graph.
#[inline]
pub fn mirror_index(g: usize, i: usize) -> usize {
    2 * g + i
}

/// `MX(G;S,T)` / `MX⁺(G;S,T)` on `G × {0,1}`, vertex `(g, i)` at `2g + i`.
///
/// Arcs inside a mirror follow the `S` rule, arcs between mirrors the `T` rule.
pub fn mirror_dicayley(group: &FiniteGroup, s: &GroupSubset, t: &GroupSubset, kind: CayleyKind) -> Result<Graph> {
    s.ensure_over(group)?;
    t.ensure_over(group)?;
    let n = group.order();
    let big = 2 * n;
    let mut adj = vec![0u8; big * big];
    crate::par::for_each_row(&mut adj, big, |src, row| {
        let (h, i) = (src / 2, src % 2);
        let h_inv = group.invert_unchecked(h);
        let target = |x: usize| match kind {
            CayleyKind::Difference => group.combine_unchecked(x, h),
            CayleyKind::Sum => group.combine_unchecked(x, h_inv),
        };
        for &x in s.members() {
            row[mirror_index(target(x), i)] = 1;
        }
        for &x in t.members() {
            row[mirror_index(target(x), 1 - i)] = 1;
        }
    });
    let labels = (0..big)
        .map(|v| format!("({},{})", group.element_label(v / 2), v % 2))
        .collect();
    Ok(Graph::finish(big, adj, labels))
}

/// Brute-force isomorphism test for graphs with at most ten vertices.
pub fn small_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    for g in [a, b] {
        if g.n > ISOMORPHISM_LIMIT {
            return Err(Error::SizeBound { what: "isomorphism input", size: g.n, cap: ISOMORPHISM_LIMIT });
        }
    }
    if a.n != b.n || a.arc_count() != b.arc_count() {
        return Ok(false);
    }
    let signature = |g: &Graph, u: usize| (g.out_degree(u), g.in_degree(u), g.has_arc(u, u));
    let mut sa: Vec<_> = (0..a.n).map(|u| signature(a, u)).collect();
    let mut sb: Vec<_> = (0..b.n).map(|u| signature(b, u)).collect();
    let (ra, rb) = (sa.clone(), sb.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }
    let mut map = vec![usize::MAX; a.n];
    let mut used = vec![false; b.n];
    fn extend(
        u: usize,
        a: &Graph,
        b: &Graph,
        ra: &[(usize, usize, bool)],
        rb: &[(usize, usize, bool)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if u == a.n {
            return true;
        }
        for v in 0..b.n {
            if used[v] || ra[u] != rb[v] {
                continue;
            }
            let consistent = (0..u).all(|w| {
                a.has_arc(u, w) == b.has_arc(v, map[w]) && a.has_arc(w, u) == b.has_arc(map[w], v)
            });
            if !consistent {
                continue;
            }
            map[u] = v;
            used[v] = true;
            if extend(u + 1, a, b, ra, rb, map, used) {
                return true;
            }
            used[v] = false;
        }
        map[u] = usize::MAX;
        false
    }
    Ok(extend(0, a, b, &ra, &rb, &mut map, &mut used))
}
