//! Simple graphs on up to 32 vertices: induced-forest detection, stable
//! sets, canonical labeling and isomorph-free enumeration.

use std::collections::HashSet;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Undirected simple graph as symmetric adjacency bit rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u32>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > 32 {
            return Err(Error::Capacity(format!("graph on {n} vertices (max 32)")));
        }
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::IndexOutOfRange { index: u.max(v), n: self.n });
        }
        if u == v {
            return Err(Error::Input("self-loops are not allowed".into()));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Vertex sets of connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut seen: u32 = 0;
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u32 << v;
            loop {
                let mut grown = comp;
                let mut rest = comp;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    grown |= self.adj[u];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Number of edges inside the vertex set `mask`.
    pub fn edges_within(&self, mask: u32) -> usize {
        let mut count = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            count += (self.adj[v] & rest).count_ones() as usize;
        }
        count
    }

    /// Looks for a k-vertex subset inducing a forest; returns the
    /// lexicographically first witness. Subsets containing a cycle are never
    /// extended; acyclicity is maintained by a per-branch union-find.
    pub fn induced_forest(&self, k: usize) -> Option<Vec<usize>> {
        if k > self.n {
            return None;
        }
        let mut chosen = Vec::with_capacity(k);
        let mut uf: Vec<usize> = (0..self.n).collect();
        if self.forest_dfs(k, 0, &mut chosen, &mut uf) {
            Some(chosen)
        } else {
            None
        }
    }

    pub fn has_induced_forest(&self, k: usize) -> bool {
        self.induced_forest(k).is_some()
    }

    fn forest_dfs(&self, k: usize, start: usize, chosen: &mut Vec<usize>, uf: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            return true;
        }
        if self.n - start < k - chosen.len() {
            return false;
        }
        for v in start..self.n {
            // roots of already-chosen neighbors of v; two in one tree => cycle
            let mut roots = Vec::new();
            let mut cycle = false;
            for &u in chosen.iter() {
                if self.has_edge(u, v) {
                    let r = uf_find(uf, u);
                    if roots.contains(&r) {
                        cycle = true;
                        break;
                    }
                    roots.push(r);
                }
            }
            if cycle {
                continue;
            }
            let saved = uf.clone();
            for r in roots {
                uf[r] = v;
            }
            chosen.push(v);
            if self.forest_dfs(k, v + 1, chosen, uf) {
                return true;
            }
            chosen.pop();
            *uf = saved;
        }
        false
    }

    /// Exact maximum stable-set size by branch and bound.
    pub fn max_stable_set(&self) -> usize {
        let full = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let mut best = 0;
        self.mis_dfs(full, 0, &mut best);
        best
    }

    fn mis_dfs(&self, cand: u32, size: usize, best: &mut usize) {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        if cand == 0 {
            *best = size;
            return;
        }
        let v = cand.trailing_zeros() as usize;
        self.mis_dfs(cand & !(self.adj[v] | 1 << v), size + 1, best);
        self.mis_dfs(cand & !(1 << v), size, best);
    }

    /// Canonical byte string: equal strings iff isomorphic graphs.
    /// Degree/neighborhood refinement, then backtracking over the remaining
    /// vertex orderings for the lexicographically minimal adjacency encoding.
    pub fn canon(&self) -> Vec<u8> {
        let chunks = self.canon_chunks();
        let mut out = Vec::with_capacity(1 + 4 * chunks.len());
        out.push(self.n as u8);
        for c in chunks {
            out.extend_from_slice(&c.to_be_bytes());
        }
        out
    }

    /// Reconstructs the canonically labeled graph from `canon` output.
    pub fn from_canon_bytes(bytes: &[u8]) -> Result<SimpleGraph> {
        let n = *bytes.first().ok_or_else(|| Error::Input("empty canon string".into()))? as usize;
        let mut g = SimpleGraph::empty(n)?;
        for p in 0..n {
            let off = 1 + 4 * p;
            let chunk = u32::from_be_bytes(
                bytes[off..off + 4]
                    .try_into()
                    .map_err(|_| Error::Input("truncated canon string".into()))?,
            );
            for i in 0..p {
                if chunk >> (p - 1 - i) & 1 == 1 {
                    g.add_edge(i, p)?;
                }
            }
        }
        Ok(g)
    }

    /// Per-position adjacency chunks of the minimal encoding; chunk p holds
    /// bits adj(perm[0],perm[p])..adj(perm[p-1],perm[p]), high bit first.
    fn canon_chunks(&self) -> Vec<u32> {
        let n = self.n;
        if n == 0 {
            return Vec::new();
        }
        let colors = self.refine_colors();
        // group vertices by color; groups in increasing color order
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (colors[v], v));
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for &v in &order {
            match groups.last() {
                Some(g) if colors[g[0]] == colors[v] => groups.last_mut().unwrap().push(v),
                _ => groups.push(vec![v]),
            }
        }
        let mut pos_group = Vec::with_capacity(n);
        for (gi, g) in groups.iter().enumerate() {
            pos_group.extend(std::iter::repeat(gi).take(g.len()));
        }
        let mut best: Option<Vec<u32>> = None;
        let mut perm: Vec<usize> = Vec::with_capacity(n);
        let mut chunks: Vec<u32> = Vec::with_capacity(n);
        let mut used: u32 = 0;
        self.canon_dfs(&groups, &pos_group, &mut perm, &mut chunks, &mut used, &mut best);
        best.expect("at least one ordering exists")
    }

    /// Invariant: when `best` is Some, the current path's chunks equal the
    /// best prefix. A strictly smaller chunk clears `best`; the subtree then
    /// rebuilds the minimum and later siblings compare against it.
    fn canon_dfs(
        &self,
        groups: &[Vec<usize>],
        pos_group: &[usize],
        perm: &mut Vec<usize>,
        chunks: &mut Vec<u32>,
        used: &mut u32,
        best: &mut Option<Vec<u32>>,
    ) {
        let p = perm.len();
        if p == self.n {
            if best.is_none() {
                *best = Some(chunks.clone());
            }
            return;
        }
        for &v in &groups[pos_group[p]] {
            if *used >> v & 1 == 1 {
                continue;
            }
            let mut chunk: u32 = 0;
            for (i, &u) in perm.iter().enumerate() {
                chunk |= u32::from(self.has_edge(u, v)) << (p - 1 - i);
            }
            if let Some(b) = best.as_ref() {
                if chunk > b[p] {
                    continue;
                }
                if chunk < b[p] {
                    *best = None;
                }
            }
            perm.push(v);
            chunks.push(chunk);
            *used |= 1 << v;
            self.canon_dfs(groups, pos_group, perm, chunks, used, best);
            *used &= !(1 << v);
            chunks.pop();
            perm.pop();
        }
    }

    /// Iterated neighborhood refinement; returns one invariant color per
    /// vertex. Color values are stable hashes of the refinement history, so
    /// isomorphic graphs produce identical color multisets.
    fn refine_colors(&self) -> Vec<u64> {
        let n = self.n;
        let mut colors: Vec<u64> = (0..n).map(|v| mix(self.degree(v) as u64)).collect();
        let mut classes = count_distinct(&colors);
        for _ in 0..n {
            let mut next = Vec::with_capacity(n);
            for v in 0..n {
                let mut sig: Vec<u64> = (0..n)
                    .filter(|&u| self.has_edge(u, v))
                    .map(|u| colors[u])
                    .collect();
                sig.sort_unstable();
                let mut h = mix(colors[v]);
                for s in sig {
                    h = mix(h ^ mix(s));
                }
                next.push(h);
            }
            let next_classes = count_distinct(&next);
            colors = next;
            if next_classes == classes {
                break;
            }
            classes = next_classes;
        }
        colors
    }

    /// Serializes to `GRAPH n` plus one line of C(n,2) upper-triangle bits.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        writeln!(out, "GRAPH {}", self.n).unwrap();
        let mut bits = String::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                bits.push(if self.has_edge(i, j) { '1' } else { '0' });
            }
        }
        writeln!(out, "{bits}").unwrap();
        out
    }

    pub fn parse(text: &str) -> Result<SimpleGraph> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Parse { line: 1, msg: "empty input".into() })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 2 || fields[0] != "GRAPH" {
            return Err(Error::Parse { line: 1, msg: "expected `GRAPH n`".into() });
        }
        let n: usize = fields[1]
            .parse()
            .map_err(|_| Error::Parse { line: 1, msg: "bad vertex count".into() })?;
        let want = n * n.saturating_sub(1) / 2;
        let bits = lines.next().unwrap_or("").trim();
        if bits.len() != want {
            return Err(Error::Parse { line: 2, msg: format!("expected {want} bits") });
        }
        let mut g = SimpleGraph::empty(n)?;
        let mut it = bits.chars();
        for i in 0..n {
            for j in i + 1..n {
                match it.next() {
                    Some('1') => g.add_edge(i, j)?,
                    Some('0') => {}
                    _ => return Err(Error::Parse { line: 2, msg: "bits must be 0/1".into() }),
                }
            }
        }
        Ok(g)
    }
}

fn uf_find(uf: &mut [usize], mut i: usize) -> usize {
    while uf[i] != i {
        uf[i] = uf[uf[i]];
        i = uf[i];
    }
    i
}

pub(crate) fn count_distinct(v: &[u64]) -> usize {
    let mut s: Vec<u64> = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

/// splitmix64 finalizer; deterministic across runs.
pub(crate) fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// One representative per isomorphism class of graphs on `n` vertices with
/// at most `max_edges` edges (no bound if `None`), by vertex augmentation
/// with canonical-form rejection at every level. Output sorted by canonical
/// string.
pub fn enumerate_graphs(n: usize, max_edges: Option<usize>) -> Result<Vec<SimpleGraph>> {
    if n > 10 || n == 10 && max_edges.is_none() {
        return Err(Error::Capacity(format!(
            "graph enumeration on {n} vertices needs an edge bound above 9"
        )));
    }
    if n == 0 {
        return Ok(vec![SimpleGraph::empty(0)?]);
    }
    let bound = max_edges.unwrap_or(usize::MAX);
    let mut level: Vec<SimpleGraph> = vec![SimpleGraph::empty(1)?];
    for k in 1..n {
        let keys: HashSet<Vec<u8>> = level
            .par_iter()
            .map(|g| {
                let mut local = Vec::new();
                for mask in 0u32..1 << k {
                    if g.edge_count() + mask.count_ones() as usize > bound {
                        continue;
                    }
                    let mut child = g.clone();
                    child.n = k + 1;
                    child.adj.push(mask);
                    for v in 0..k {
                        if mask >> v & 1 == 1 {
                            child.adj[v] |= 1 << k;
                        }
                    }
                    local.push(child.canon());
                }
                local
            })
            .reduce(Vec::new, |mut a, mut b| {
                a.append(&mut b);
                a
            })
            .into_iter()
            .collect();
        let mut sorted: Vec<Vec<u8>> = keys.into_iter().collect();
        sorted.sort();
        level = sorted
            .iter()
            .map(|k| SimpleGraph::from_canon_bytes(k))
            .collect::<Result<Vec<_>>>()?;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clique_union(sizes: &[usize]) -> SimpleGraph {
        let n: usize = sizes.iter().sum();
        let mut g = SimpleGraph::empty(n).unwrap();
        let mut base = 0;
        for &s in sizes {
            for i in 0..s {
                for j in i + 1..s {
                    g.add_edge(base + i, base + j).unwrap();
                }
            }
            base += s;
        }
        g
    }

    #[test]
    fn forest_detection() {
        let g = clique_union(&[5, 4]);
        assert!(!g.has_induced_forest(5));
        let e = SimpleGraph::empty(5).unwrap();
        assert!(e.has_induced_forest(5));
        assert!(g.has_induced_forest(0));
        let g3 = clique_union(&[3, 3, 1]);
        let w = g3.induced_forest(5).unwrap();
        assert_eq!(w.len(), 5);
        assert!(g3.edges_within(w.iter().fold(0u32, |m, &v| m | 1 << v)) <= 4);
    }

    #[test]
    fn stable_sets() {
        assert_eq!(clique_union(&[6]).max_stable_set(), 1);
        assert_eq!(clique_union(&[5, 4]).max_stable_set(), 2);
        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.max_stable_set(), 2);
    }

    #[test]
    fn canon_invariance() {
        let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c4b = SimpleGraph::from_edges(4, &[(2, 1), (1, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(c4.canon(), c4b.canon());
        let p4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let k3k1 = clique_union(&[3, 1]);
        assert_ne!(p4.canon(), k3k1.canon());
        let back = SimpleGraph::from_canon_bytes(&c4.canon()).unwrap();
        assert_eq!(back.canon(), c4.canon());
    }

    #[test]
    fn canon_distinguishes_all_4_vertex_graphs() {
        // brute-force dedup oracle over all labeled graphs on 4 vertices
        let mut canons = HashSet::new();
        for bits in 0u32..64 {
            let mut g = SimpleGraph::empty(4).unwrap();
            let mut b = bits;
            for i in 0..4 {
                for j in i + 1..4 {
                    if b & 1 == 1 {
                        g.add_edge(i, j).unwrap();
                    }
                    b >>= 1;
                }
            }
            canons.insert(g.canon());
        }
        assert_eq!(canons.len(), 11);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(1, None).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(4, None).unwrap().len(), 11);
        assert_eq!(enumerate_graphs(5, None).unwrap().len(), 34);
        assert_eq!(enumerate_graphs(6, None).unwrap().len(), 156);
        assert_eq!(enumerate_graphs(5, Some(0)).unwrap().len(), 1);
    }

    #[test]
    fn format_round_trip() {
        for g in [clique_union(&[3, 2]), SimpleGraph::empty(1).unwrap(), SimpleGraph::empty(0).unwrap()] {
            let text = g.serialize();
            let back = SimpleGraph::parse(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.serialize(), text);
        }
    }

    #[test]
    fn stable_set_equals_clique_of_complement() {
        for g in enumerate_graphs(6, None).unwrap() {
            let mut comp = SimpleGraph::empty(6).unwrap();
            for i in 0..6 {
                for j in i + 1..6 {
                    if !g.has_edge(i, j) {
                        comp.add_edge(i, j).unwrap();
                    }
                }
            }
            // max clique of complement by brute force
            let mut best = 0;
            for mask in 0u32..64 {
                let k = mask.count_ones() as usize;
                if k > best && comp.edges_within(mask) == k * (k - 1) / 2 {
                    best = k;
                }
            }
            assert_eq!(g.max_stable_set(), best);
        }
    }
}
