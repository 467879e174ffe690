//! Quandle quivers: colorings of a diagram joined by the action of a set of
//! endomorphisms, with DOT export and exact isomorphism testing.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::link::{Coloring, LinkDiagram};
use crate::morphism::QuandleMap;
use crate::quandle::Quandle;
use crate::search::{NodeCounter, SearchCapExceeded, SearchLimits};

/// Vertex bound for exact isomorphism search unless raised explicitly.
pub const DEFAULT_ISOMORPHISM_BOUND: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("map {index} is not an endomorphism of the quandle")]
    NotAnEndomorphism { index: usize },
    #[error("quiver with {vertices} vertices exceeds the isomorphism search bound {bound}")]
    TooLarge { vertices: usize, bound: usize },
    #[error(transparent)]
    CapExceeded(#[from] SearchCapExceeded),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<Coloring>,
    labels: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Coloring] {
        &self.vertices
    }

    /// Base-arc colors of each vertex.
    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    /// Edges in order of source vertex, then of the endomorphism list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(a, b)| a == b).count()
    }

    fn adjacency(&self) -> Vec<Vec<u32>> {
        let n = self.vertices.len();
        let mut a = vec![vec![0u32; n]; n];
        for &(s, t) in &self.edges {
            a[s][t] += 1;
        }
        a
    }
}

/// Vertices are the colorings of `d` by `q` (in canonical order) and each coloring
/// `c` has one edge to `f∘c` for every `f` in `endos`.
pub fn quiver(d: &LinkDiagram, q: &Quandle, endos: &[QuandleMap], limits: SearchLimits) -> Result<Quiver, QuiverError> {
    for (index, f) in endos.iter().enumerate() {
        if f.source_order() != q.order() || !f.is_homomorphism(q, q) {
            return Err(QuiverError::NotAnEndomorphism { index });
        }
    }
    let vertices = d.colorings(q, limits)?;
    let index: BTreeMap<&[usize], usize> = vertices.iter().enumerate().map(|(k, c)| (c.colors(), k)).collect();
    let mut edges = Vec::with_capacity(vertices.len() * endos.len());
    for (s, c) in vertices.iter().enumerate() {
        for f in endos {
            let image = c.map(|x| f.apply(x));
            let t = index[image.colors()];
            edges.push((s, t));
        }
    }
    let labels = vertices.iter().map(|c| c.base_colors(d)).collect();
    Ok(Quiver { vertices, labels, edges })
}

/// Graphviz source with vertices `v0, v1, …` labelled by base-arc colors.
pub fn quiver_dot(q: &Quiver) -> String {
    let mut s = String::from("digraph quiver {\n");
    for (k, label) in q.labels.iter().enumerate() {
        let body: Vec<String> = label.iter().map(|c| format!("{c}")).collect();
        s.push_str(&format!("  v{k} [label=\"({})\"];\n", body.join(",")));
    }
    for &(a, b) in &q.edges {
        s.push_str(&format!("  v{a} -> v{b};\n"));
    }
    s.push_str("}\n");
    s
}

/// Whether `map` (vertex of `a` to vertex of `b`) is a bijection carrying the edge
/// multiset of `a` onto that of `b`.
pub fn verify_quiver_isomorphism(a: &Quiver, b: &Quiver, map: &[usize]) -> bool {
    let n = a.vertex_count();
    if b.vertex_count() != n || map.len() != n || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in map {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let mut mapped: Vec<(usize, usize)> = a.edges.iter().map(|&(s, t)| (map[s], map[t])).collect();
    let mut target = b.edges.clone();
    mapped.sort_unstable();
    target.sort_unstable();
    mapped == target
}

pub fn quiver_isomorphic(a: &Quiver, b: &Quiver) -> Result<bool, QuiverError> {
    Ok(find_quiver_isomorphism(a, b, DEFAULT_ISOMORPHISM_BOUND, SearchLimits::default())?.is_some())
}

/// A vertex bijection `a → b` preserving edge multiplicities, if one exists.
pub fn find_quiver_isomorphism(
    a: &Quiver,
    b: &Quiver,
    max_vertices: usize,
    limits: SearchLimits,
) -> Result<Option<Vec<usize>>, QuiverError> {
    let n = a.vertex_count();
    for v in [n, b.vertex_count()] {
        if v > max_vertices {
            return Err(QuiverError::TooLarge { vertices: v, bound: max_vertices });
        }
    }
    if n != b.vertex_count() || a.edge_count() != b.edge_count() || a.loop_count() != b.loop_count() {
        return Ok(None);
    }
    let (adj_a, adj_b) = (a.adjacency(), b.adjacency());
    let Some((class_a, class_b)) = refine_jointly(&adj_a, &adj_b) else {
        return Ok(None);
    };
    let mut search = IsoSearch {
        adj_a: &adj_a,
        adj_b: &adj_b,
        class_a: &class_a,
        class_b: &class_b,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        counter: NodeCounter::new(limits),
    };
    if search.run(0)? {
        debug_assert!(verify_quiver_isomorphism(a, b, &search.map));
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

/// Colour refinement on the disjoint union of both graphs. Returns matching
/// stable vertex classes, or `None` when the class histograms differ.
fn refine_jointly(adj_a: &[Vec<u32>], adj_b: &[Vec<u32>]) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = adj_a.len();
    let adj = |v: usize, w: usize| -> u32 {
        match (v < n, w < n) {
            (true, true) => adj_a[v][w],
            (false, false) => adj_b[v - n][w - n],
            _ => 0,
        }
    };
    let mut class = vec![0usize; 2 * n];
    let mut class_count = 1;
    loop {
        let signatures: Vec<(usize, Vec<(usize, u32, u32)>)> = (0..2 * n)
            .map(|v| {
                let mut nbrs: Vec<(usize, u32, u32)> = (0..2 * n)
                    .filter(|&w| adj(v, w) > 0 || adj(w, v) > 0)
                    .map(|w| (class[w], adj(v, w), adj(w, v)))
                    .collect();
                nbrs.sort_unstable();
                (class[v], nbrs)
            })
            .collect();
        let mut ids: BTreeMap<&(usize, Vec<(usize, u32, u32)>), usize> = BTreeMap::new();
        for s in &signatures {
            let next = ids.len();
            ids.entry(s).or_insert(next);
        }
        let refined: Vec<usize> = signatures.iter().map(|s| ids[s]).collect();
        let count = ids.len();
        class = refined;
        if count == class_count {
            break;
        }
        class_count = count;
    }
    let (ca, cb) = class.split_at(n);
    let mut ha = ca.to_vec();
    let mut hb = cb.to_vec();
    ha.sort_unstable();
    hb.sort_unstable();
    (ha == hb).then(|| (ca.to_vec(), cb.to_vec()))
}

struct IsoSearch<'a> {
    adj_a: &'a [Vec<u32>],
    adj_b: &'a [Vec<u32>],
    class_a: &'a [usize],
    class_b: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    counter: NodeCounter,
}

impl IsoSearch<'_> {
    fn run(&mut self, u: usize) -> Result<bool, SearchCapExceeded> {
        let n = self.map.len();
        if u == n {
            return Ok(true);
        }
        for v in 0..n {
            if self.used[v] || self.class_a[u] != self.class_b[v] {
                continue;
            }
            self.counter.tick()?;
            if self.adj_a[u][u] != self.adj_b[v][v] {
                continue;
            }
            let consistent = (0..u).all(|w| {
                let x = self.map[w];
                self.adj_a[u][w] == self.adj_b[v][x] && self.adj_a[w][u] == self.adj_b[x][v]
            });
            if !consistent {
                continue;
            }
            self.map[u] = v;
            self.used[v] = true;
            if self.run(u + 1)? {
                return Ok(true);
            }
            self.used[v] = false;
        }
        self.map[u] = usize::MAX;
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::parse_diagram;
    use crate::morphism::endomorphisms;
    use crate::perm::Permutation;

    const HOPF: &str = "X 0 1 0 +\nX 1 0 1 +\n";
    const TORUS_2_4: &str = "X 3 1 2 +\nX 1 2 0 +\nX 2 0 3 +\nX 0 3 1 +\n";

    fn p3() -> Quandle {
        Quandle::p_quandle(&Permutation::parse_cycles("(1 2)", 2).unwrap())
    }

    fn end(q: &Quandle) -> Vec<QuandleMap> {
        endomorphisms(q, SearchLimits::default()).unwrap()
    }

    #[test]
    fn hopf_quiver() {
        let q = p3();
        let h = parse_diagram(HOPF).unwrap();
        let quiv = quiver(&h, &q, &end(&q), SearchLimits::default()).unwrap();
        assert_eq!((quiv.vertex_count(), quiv.edge_count()), (5, 35));
        let id = quiver(&h, &q, &[QuandleMap::identity(3)], SearchLimits::default()).unwrap();
        assert_eq!(id.loop_count(), 5);
        let none = quiver(&h, &q, &[], SearchLimits::default()).unwrap();
        assert_eq!(none.edge_count(), 0);
        assert!(quiver_dot(&none).ends_with("v4 [label=\"(2,2)\"];\n}\n"));
    }

    #[test]
    fn unknot_trivial_quandle() {
        let t2 = Quandle::trivial(2);
        let u = parse_diagram("O 0\n").unwrap();
        let quiv = quiver(&u, &t2, &end(&t2), SearchLimits::default()).unwrap();
        assert_eq!((quiv.vertex_count(), quiv.edge_count()), (2, 8));
    }

    #[test]
    fn dot_single_loop() {
        let t1 = Quandle::trivial(1);
        let u = parse_diagram("O 0\n").unwrap();
        let quiv = quiver(&u, &t1, &[QuandleMap::identity(1)], SearchLimits::default()).unwrap();
        assert_eq!(quiver_dot(&quiv), "digraph quiver {\n  v0 [label=\"(0)\"];\n  v0 -> v0;\n}\n");
    }

    #[test]
    fn rejects_non_endomorphism() {
        let q = p3();
        let h = parse_diagram(HOPF).unwrap();
        let bad = QuandleMap::new(vec![1, 0, 2], 3);
        assert_eq!(
            quiver(&h, &q, &[QuandleMap::identity(3), bad], SearchLimits::default()),
            Err(QuiverError::NotAnEndomorphism { index: 1 })
        );
    }

    #[test]
    fn isomorphism_examples() {
        let q = p3();
        let s = end(&q);
        let limits = SearchLimits::default();
        let hopf = quiver(&parse_diagram(HOPF).unwrap(), &q, &s, limits).unwrap();
        let torus = quiver(&parse_diagram(TORUS_2_4).unwrap(), &q, &s, limits).unwrap();
        assert_eq!(quiver_isomorphic(&hopf, &torus), Ok(false));
        let kinked = parse_diagram("X 3 2 3 +\nX 2 3 0 +\nX 0 0 1 +\nX 1 2 2 -\n").unwrap();
        let kq = quiver(&kinked, &q, &s, limits).unwrap();
        let map = find_quiver_isomorphism(&hopf, &kq, 24, limits).unwrap().unwrap();
        assert!(verify_quiver_isomorphism(&hopf, &kq, &map));
        assert!(!verify_quiver_isomorphism(&hopf, &kq, &[0, 0, 1, 2, 3]));
        assert_eq!(
            find_quiver_isomorphism(&torus, &torus, 4, limits),
            Err(QuiverError::TooLarge { vertices: 9, bound: 4 })
        );
    }

    #[test]
    fn permuted_quiver_is_isomorphic() {
        let q = p3();
        let torus = quiver(&parse_diagram(TORUS_2_4).unwrap(), &q, &end(&q), SearchLimits::default()).unwrap();
        let n = torus.vertex_count();
        let perm: Vec<usize> = (0..n).map(|k| (k * 4 + 3) % n).collect();
        let shuffled = Quiver {
            vertices: torus.vertices.clone(),
            labels: torus.labels.clone(),
            edges: torus.edges.iter().rev().map(|&(s, t)| (perm[s], perm[t])).collect(),
        };
        let map = find_quiver_isomorphism(&torus, &shuffled, 24, SearchLimits::default()).unwrap().unwrap();
        assert!(verify_quiver_isomorphism(&torus, &shuffled, &map));
        let mut broken = shuffled.clone();
        broken.edges[0].1 = (broken.edges[0].1 + 1) % n;
        assert_eq!(quiver_isomorphic(&torus, &broken), Ok(false));
    }
}
