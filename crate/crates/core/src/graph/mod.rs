//! Simple graphs on vertices `1..=n`, vertex labelings, proper colorings and
//! acyclic orientations.
//!
//! Vertices are 1-based everywhere in the public API. Internally adjacency
//! and reachability are `u64` bitmasks with bit `v-1` standing for vertex `v`,
//! which caps graphs at [`MAX_VERTICES`].

pub(crate) mod format;

use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::{Partition, Permutation};
use crate::error::{Error, Result};

pub use format::{parse_graph, GraphFile, ParseError};

pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

/// Vertices of a bitmask, 1-based, ascending.
pub(crate) fn vertices_of(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize + 1;
        mask &= mask - 1;
        Some(v)
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// `(u, v)` with `u < v`, sorted.
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Rejects loops, repeated edges (in either direction) and vertices
    /// outside `1..=n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if adj[u - 1] & bit(v) != 0 {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u - 1] |= bit(v);
            adj[v - 1] |= bit(u);
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Graph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("edgeless graph")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::new(n, edges.collect::<Vec<_>>()).expect("complete graph")
    }

    /// The path `1 - 2 - … - n`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|u| (u, u + 1)).collect::<Vec<_>>()).expect("path")
    }

    /// The star `K_{1,leaves}` with centre 1.
    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (2..=leaves + 1).map(|v| (1, v)).collect::<Vec<_>>()).expect("star")
    }

    /// The cycle `1 - 2 - … - n - 1`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        edges.push((1, n));
        Graph::new(n, edges).expect("cycle")
    }

    /// Number of possible edges on `n` vertices.
    pub fn pair_count(n: usize) -> usize {
        n * n.saturating_sub(1) / 2
    }

    /// The labeled graph whose edges are the pairs `(u, v)`, `u < v`, in
    /// lexicographic order, selected by the bits of `mask`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let pairs = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        let edges: Vec<_> = pairs
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        Graph::new(n, edges).expect("distinct pairs")
    }

    /// All `2^(n choose 2)` labeled graphs on `n` vertices.
    pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
        let pairs = Graph::pair_count(n);
        assert!(pairs < 64, "too many labeled graphs on {n} vertices");
        (0..1u64 << pairs).map(move |m| Graph::from_edge_mask(n, m))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u - 1] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        vertices_of(self.adj[v - 1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub(crate) fn all_vertices_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub(crate) fn is_stable(&self, mask: u64) -> bool {
        vertices_of(mask).all(|v| self.adj[v - 1] & mask == 0)
    }

    /// No induced `K_{1,3}`.
    pub fn is_claw_free(&self) -> bool {
        (1..=self.n).all(|centre| {
            let nbrs: Vec<usize> = self.neighbors(centre).collect();
            for (i, &a) in nbrs.iter().enumerate() {
                for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &c in &nbrs[j + 1..] {
                        if !self.has_edge(a, c) && !self.has_edge(b, c) {
                            return false;
                        }
                    }
                }
            }
            true
        })
    }

    /// Every proper coloring with colors in `1..=k`, lazily.
    pub fn proper_colorings_bounded(&self, k: usize) -> BoundedColorings<'_> {
        BoundedColorings {
            graph: self,
            k,
            colors: vec![0; self.n],
            pos: 0,
            done: false,
        }
    }

    /// For each partition `λ ⊢ n`, the number of set partitions of the vertex
    /// set into stable blocks whose sorted sizes are `λ`.
    pub fn stable_partitions_by_type(&self) -> BTreeMap<Partition, u64> {
        fn rec(g: &Graph, remaining: u64, sizes: &mut Vec<usize>, out: &mut BTreeMap<Partition, u64>) {
            if remaining == 0 {
                *out.entry(Partition::from_unsorted(sizes.clone())).or_default() += 1;
                return;
            }
            let first = remaining.trailing_zeros() as usize + 1;
            let candidates = remaining & !g.adj[first - 1] & !bit(first);
            // submasks of `candidates`, each joined with `first`
            let mut sub = candidates;
            loop {
                let block = sub | bit(first);
                if g.is_stable(block) {
                    sizes.push(block.count_ones() as usize);
                    rec(g, remaining & !block, sizes, out);
                    sizes.pop();
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & candidates;
            }
        }
        let mut out = BTreeMap::new();
        rec(self, self.all_vertices_mask(), &mut Vec::new(), &mut out);
        out
    }

    /// All acyclic orientations, found by orienting edges one at a time and
    /// pruning as soon as an arc would close a directed cycle.
    pub fn acyclic_orientations(&self) -> Vec<Orientation<'_>> {
        fn rec<'g>(
            g: &'g Graph,
            idx: usize,
            reach: &[u64],
            forward: &mut Vec<bool>,
            out: &mut Vec<Orientation<'g>>,
        ) {
            if idx == g.edges.len() {
                out.push(Orientation::from_directions_unchecked(g, forward.clone(), true));
                return;
            }
            let (u, v) = g.edges[idx];
            for (tail, head, dir) in [(u, v, true), (v, u, false)] {
                if reach[head - 1] & bit(tail) != 0 {
                    continue;
                }
                let mut next = reach.to_vec();
                let gained = reach[head - 1] | bit(head);
                for x in 1..=g.n {
                    if x == tail || reach[x - 1] & bit(tail) != 0 {
                        next[x - 1] |= gained;
                    }
                }
                forward.push(dir);
                rec(g, idx + 1, &next, forward, out);
                forward.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, 0, &vec![0; self.n], &mut Vec::with_capacity(self.edges.len()), &mut out);
        out
    }

    /// Every orientation, acyclic or not, in edge-direction-vector order.
    pub fn all_orientations(&self) -> impl Iterator<Item = Orientation<'_>> {
        let m = self.edges.len();
        assert!(m < 64, "too many orientations");
        (0..1u64 << m).map(move |bits| {
            let forward = (0..m).map(|i| bits >> i & 1 == 0).collect();
            Orientation::from_directions(self, forward).expect("one direction per edge")
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} edges=[", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "]")
    }
}

/// A bijection between vertices and labels `1..=n`. `label(v)` is the label
/// carried by vertex `v`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Labeling {
    labels: Vec<usize>,
}

impl Labeling {
    /// `labels[v-1]` is the label of vertex `v`.
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        Permutation::new(labels.clone()).map_err(|_| Error::InvalidLabeling(labels.clone()))?;
        Ok(Labeling { labels })
    }

    pub fn identity(n: usize) -> Self {
        Labeling {
            labels: (1..=n).collect(),
        }
    }

    /// All `n!` labelings in lexicographic order of their label vectors.
    pub fn all(n: usize) -> impl Iterator<Item = Labeling> {
        Permutation::all(n).into_iter().map(|p| Labeling {
            labels: p.images().to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// The vertex carrying each label: `vertex_of()[l-1]` has label `l`.
    pub fn vertex_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.labels.len()];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l - 1] = i + 1;
        }
        out
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::GraphMismatch {
                expected: g.n(),
                actual: self.n(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A map from vertices to positive colors. `color(v)` is the color of `v`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v - 1]
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c > 0)
            && g.edges().iter().all(|&(u, v)| self.color(u) != self.color(v))
    }

    /// Edges `{u,v}` whose labeling and coloring increase in the same direction.
    pub fn ascents(&self, g: &Graph, zeta: &Labeling) -> Result<usize> {
        zeta.check(g)?;
        if self.colors.len() != g.n() {
            return Err(Error::GraphMismatch {
                expected: g.n(),
                actual: self.colors.len(),
            });
        }
        Ok(g.edges()
            .iter()
            .filter(|&&(u, v)| {
                let (lo, hi) = if zeta.label(u) < zeta.label(v) { (u, v) } else { (v, u) };
                self.color(lo) < self.color(hi)
            })
            .count())
    }
}

pub struct BoundedColorings<'g> {
    graph: &'g Graph,
    k: usize,
    colors: Vec<usize>,
    /// vertex index (0-based) whose color is advanced next
    pos: usize,
    done: bool,
}

impl Iterator for BoundedColorings<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.done {
            return None;
        }
        let n = self.graph.n();
        if n == 0 {
            self.done = true;
            return Some(Coloring::new(Vec::new()));
        }
        loop {
            let v = self.pos;
            let earlier = self.graph.adj[v] & ((1u64 << v) - 1);
            let mut c = self.colors[v] + 1;
            while c <= self.k && vertices_of(earlier).any(|u| self.colors[u - 1] == c) {
                c += 1;
            }
            if c > self.k {
                self.colors[v] = 0;
                if v == 0 {
                    self.done = true;
                    return None;
                }
                self.pos -= 1;
                continue;
            }
            self.colors[v] = c;
            if v + 1 == n {
                return Some(Coloring::new(self.colors.clone()));
            }
            self.pos = v + 1;
        }
    }
}

/// A choice of direction for every edge of a graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation<'g> {
    graph: &'g Graph,
    /// `forward[i]` orients edge `(u, v)` (with `u < v`) as `u -> v`.
    forward: Vec<bool>,
    out: Vec<u64>,
    acyclic: bool,
}

impl<'g> Orientation<'g> {
    /// One flag per edge of `graph`, in its canonical edge order.
    pub fn from_directions(graph: &'g Graph, forward: Vec<bool>) -> Result<Self> {
        if forward.len() != graph.edge_count() {
            return Err(Error::GraphMismatch {
                expected: graph.edge_count(),
                actual: forward.len(),
            });
        }
        let mut o = Orientation::from_directions_unchecked(graph, forward, false);
        o.acyclic = o.topological_order().is_some();
        Ok(o)
    }

    /// Orientation from explicit `(tail, head)` arcs covering every edge once.
    pub fn from_arcs(graph: &'g Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut forward: Vec<Option<bool>> = vec![None; graph.edge_count()];
        for &(tail, head) in arcs {
            let key = (tail.min(head), tail.max(head));
            let idx = graph
                .edges
                .binary_search(&key)
                .map_err(|_| Error::NotAnEdge(tail, head))?;
            if forward[idx].replace(tail < head).is_some() {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
        }
        let forward = forward
            .into_iter()
            .collect::<Option<Vec<bool>>>()
            .ok_or(Error::GraphMismatch {
                expected: graph.edge_count(),
                actual: arcs.len(),
            })?;
        Orientation::from_directions(graph, forward)
    }

    fn from_directions_unchecked(graph: &'g Graph, forward: Vec<bool>, acyclic: bool) -> Self {
        let mut out = vec![0u64; graph.n()];
        for (&(u, v), &fwd) in graph.edges.iter().zip(&forward) {
            let (tail, head) = if fwd { (u, v) } else { (v, u) };
            out[tail - 1] |= bit(head);
        }
        Orientation {
            graph,
            forward,
            out,
            acyclic,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// `(tail, head)` pairs in the graph's edge order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph
            .edges
            .iter()
            .zip(&self.forward)
            .map(|(&(u, v), &fwd)| if fwd { (u, v) } else { (v, u) })
    }

    pub fn is_acyclic(&self) -> bool {
        self.acyclic
    }

    pub(crate) fn out_mask(&self, v: usize) -> u64 {
        self.out[v - 1]
    }

    /// Vertices with no outgoing arc; isolated vertices included.
    pub fn sink_vertices(&self) -> Vec<usize> {
        (1..=self.graph.n()).filter(|&v| self.out[v - 1] == 0).collect()
    }

    pub fn sinks(&self) -> usize {
        self.out.iter().filter(|&&m| m == 0).count()
    }

    /// Arcs `(u, v)` with `ζ(u) > ζ(v)`.
    pub fn descents(&self, zeta: &Labeling) -> Result<usize> {
        zeta.check(self.graph)?;
        Ok(self.arcs().filter(|&(u, v)| zeta.label(u) > zeta.label(v)).count())
    }

    pub fn reversed(&self) -> Orientation<'g> {
        let forward = self.forward.iter().map(|f| !f).collect();
        Orientation::from_directions_unchecked(self.graph, forward, self.acyclic)
    }

    /// Kahn's algorithm with the smallest available vertex first; `None` if
    /// there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.graph.n();
        let mut indeg = vec![0usize; n];
        for m in &self.out {
            for v in vertices_of(*m) {
                indeg[v - 1] += 1;
            }
        }
        let mut ready: std::collections::BTreeSet<usize> =
            (1..=n).filter(|&v| indeg[v - 1] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for w in vertices_of(self.out[v - 1]) {
                indeg[w - 1] -= 1;
                if indeg[w - 1] == 0 {
                    ready.insert(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// `reach[v-1]` is the set of vertices reachable from `v` by a nonempty
    /// directed path. Requires acyclicity.
    pub(crate) fn reachability(&self) -> Result<Vec<u64>> {
        let order = self.topological_order().ok_or(Error::CyclicOrientation)?;
        let mut reach = vec![0u64; self.graph.n()];
        for &v in order.iter().rev() {
            let mut r = self.out[v - 1];
            for w in vertices_of(self.out[v - 1]) {
                r |= reach[w - 1];
            }
            reach[v - 1] = r;
        }
        Ok(reach)
    }
}

impl fmt::Debug for Orientation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.arcs()).finish()
    }
}

impl fmt::Display for Orientation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self.arcs().map(|(u, v)| format!("{u}->{v}")).collect();
        write!(f, "{}", arcs.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // Oracle: all k^n maps, filtered.
    fn count_colorings_brute(g: &Graph, k: usize) -> usize {
        let n = g.n();
        if n == 0 {
            return 1;
        }
        let mut count = 0;
        let mut colors = vec![1usize; n];
        if k == 0 {
            return 0;
        }
        loop {
            if Coloring::new(colors.clone()).is_proper(g) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                colors[i] += 1;
                if colors[i] <= k {
                    break;
                }
                colors[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(Graph::new(3, [(1, 2), (2, 1)]), Err(Error::DuplicateEdge(1, 2)));
        assert_eq!(Graph::new(3, [(1, 4)]), Err(Error::VertexOutOfRange { vertex: 4, n: 3 }));
        let g = Graph::new(3, [(3, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 3)]);
        assert_eq!(Graph::all_labeled(4).count(), 64);
    }

    #[test]
    fn bounded_colorings() {
        let p3 = Graph::path(3);
        assert_eq!(p3.proper_colorings_bounded(2).count(), 2);
        assert_eq!(p3.proper_colorings_bounded(3).count(), 12);
        assert_eq!(Graph::complete(2).proper_colorings_bounded(1).count(), 0);
        assert_eq!(Graph::empty(0).proper_colorings_bounded(0).count(), 1);
        let two: Vec<Vec<usize>> = p3.proper_colorings_bounded(2).map(|c| c.colors().to_vec()).collect();
        assert_eq!(two, vec![vec![1, 2, 1], vec![2, 1, 2]]);
        for n in 0..=4 {
            for g in Graph::all_labeled(n) {
                for k in 0..=4 {
                    let all: Vec<Coloring> = g.proper_colorings_bounded(k).collect();
                    assert!(all.iter().all(|c| c.is_proper(&g) && c.colors().iter().all(|&x| x <= k)));
                    let distinct: std::collections::HashSet<_> = all.iter().collect();
                    assert_eq!(distinct.len(), all.len());
                    assert_eq!(all.len(), count_colorings_brute(&g, k), "{g} k={k}");
                }
            }
        }
    }

    // Oracle: every set partition of the vertices via restricted growth
    // strings, kept when all blocks are stable.
    fn stable_partitions_brute(g: &Graph) -> BTreeMap<Partition, u64> {
        fn rec(g: &Graph, v: usize, blocks: &mut Vec<Vec<usize>>, out: &mut BTreeMap<Partition, u64>) {
            if v > g.n() {
                let stable = blocks
                    .iter()
                    .all(|b| b.iter().all(|&x| b.iter().all(|&y| !g.has_edge(x, y))));
                if stable {
                    let sizes = blocks.iter().map(Vec::len).collect();
                    *out.entry(Partition::from_unsorted(sizes)).or_default() += 1;
                }
                return;
            }
            for i in 0..blocks.len() {
                blocks[i].push(v);
                rec(g, v + 1, blocks, out);
                blocks[i].pop();
            }
            blocks.push(vec![v]);
            rec(g, v + 1, blocks, out);
            blocks.pop();
        }
        let mut out = BTreeMap::new();
        rec(g, 1, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn stable_partition_counts() {
        assert_eq!(Graph::empty(3).stable_partitions_by_type()[&p(&[3])], 1);
        let k3 = Graph::complete(3).stable_partitions_by_type();
        assert_eq!(k3.len(), 1);
        assert_eq!(k3[&p(&[1, 1, 1])], 1);
        assert_eq!(Graph::path(3).stable_partitions_by_type()[&p(&[2, 1])], 1);
        for n in 1..=5 {
            for g in Graph::all_labeled(n) {
                assert_eq!(g.stable_partitions_by_type(), stable_partitions_brute(&g), "{g}");
            }
        }
    }

    #[test]
    fn acyclic_orientation_counts() {
        assert_eq!(Graph::complete(2).acyclic_orientations().len(), 2);
        let claw = Graph::star(3);
        assert_eq!(claw.acyclic_orientations().len(), 8);
        assert_eq!(Graph::complete(3).acyclic_orientations().len(), 6);
        let empty = Graph::empty(3);
        let only = empty.acyclic_orientations();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].sinks(), 3);
        assert_eq!(Graph::complete(5).acyclic_orientations().len(), 120);
        for n in 1..=5 {
            for g in Graph::all_labeled(n) {
                let fast: Vec<_> = g.acyclic_orientations();
                let brute: Vec<_> = g.all_orientations().filter(Orientation::is_acyclic).collect();
                assert_eq!(fast.len(), brute.len(), "{g}");
                for o in &fast {
                    assert!(o.is_acyclic());
                    assert!(o.topological_order().is_some());
                    assert!(o.sinks() >= 1);
                    assert!(brute.contains(o));
                }
            }
        }
    }

    #[test]
    fn sink_counts() {
        let p3 = Graph::path(3);
        let chain = Orientation::from_arcs(&p3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(chain.sinks(), 1);
        assert_eq!(chain.sink_vertices(), vec![3]);
        let claw = Graph::star(3);
        let outward = Orientation::from_arcs(&claw, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(outward.sinks(), 3);
        let k3 = Graph::complete(3);
        let cyclic = Orientation::from_arcs(&k3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(!cyclic.is_acyclic());
        assert!(Orientation::from_arcs(&k3, &[(1, 2), (2, 3)]).is_err());
        assert_eq!(Orientation::from_arcs(&p3, &[(1, 3), (2, 3)]), Err(Error::NotAnEdge(1, 3)));
    }

    #[test]
    fn descent_and_ascent_statistics() {
        let k2 = Graph::complete(2);
        let id = Labeling::identity(2);
        let up = Orientation::from_arcs(&k2, &[(1, 2)]).unwrap();
        let down = Orientation::from_arcs(&k2, &[(2, 1)]).unwrap();
        assert_eq!(up.descents(&id).unwrap(), 0);
        assert_eq!(down.descents(&id).unwrap(), 1);
        assert_eq!(Coloring::new(vec![5, 2, 7]).ascents(&Graph::empty(3), &Labeling::identity(3)).unwrap(), 0);
        assert_eq!(Coloring::new(vec![1, 2]).ascents(&k2, &id).unwrap(), 1);
        assert_eq!(Coloring::new(vec![2, 1]).ascents(&k2, &id).unwrap(), 0);
        let swapped = Labeling::new(vec![2, 1]).unwrap();
        assert_eq!(Coloring::new(vec![2, 1]).ascents(&k2, &swapped).unwrap(), 1);
        assert!(up.descents(&Labeling::identity(3)).is_err());

        for n in 1..=5 {
            for g in Graph::all_labeled(n) {
                for o in g.acyclic_orientations() {
                    for zeta in [Labeling::identity(n), Labeling::new((1..=n).rev().collect()).unwrap()] {
                        let total = o.descents(&zeta).unwrap() + o.reversed().descents(&zeta).unwrap();
                        assert_eq!(total, g.edge_count());
                    }
                }
            }
        }
    }

    #[test]
    fn labeling_validation() {
        assert!(Labeling::new(vec![1, 3]).is_err());
        let l = Labeling::new(vec![3, 1, 2]).unwrap();
        assert_eq!(l.vertex_of(), vec![2, 3, 1]);
        assert_eq!(Labeling::all(4).count(), 24);
    }

    // Oracle: induced subgraph check over every 4-subset.
    fn claw_free_brute(g: &Graph) -> bool {
        let n = g.n();
        for mask in 0u64..(1 << n) {
            if mask.count_ones() != 4 {
                continue;
            }
            let vs: Vec<usize> = vertices_of(mask).collect();
            let degrees: Vec<usize> = vs
                .iter()
                .map(|&a| vs.iter().filter(|&&b| g.has_edge(a, b)).count())
                .collect();
            let mut sorted = degrees.clone();
            sorted.sort();
            if sorted == [1, 1, 1, 3] {
                return false;
            }
        }
        true
    }

    #[test]
    fn claw_freeness() {
        assert!(!Graph::star(3).is_claw_free());
        assert!(Graph::complete(4).is_claw_free());
        for n in 1..=8 {
            assert!(Graph::path(n).is_claw_free());
        }
        for n in 1..=5 {
            for g in Graph::all_labeled(n) {
                assert_eq!(g.is_claw_free(), claw_free_brute(&g), "{g}");
            }
        }
    }
}
