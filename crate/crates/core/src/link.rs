//! Oriented link diagrams as signed crossing data, quandle colorings, linking
//! numbers and synthesis of links with a prescribed linking graph.
//!
//! Arcs are cut at undercrossings only. A crossing record is
//! `(under_in, over, under_out, sign)`, and the coloring rule is
//! `c(under_out) = c(under_in) * c(over)` at positive crossings and
//! `c(under_out) = c(under_in) bar c(over)` at negative ones.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::quandle::Quandle;
use crate::search::{NodeCounter, SearchCapExceeded, SearchLimits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn of(w: i64) -> Sign {
        if w < 0 {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub under_in: usize,
    pub over: usize,
    pub under_out: usize,
    pub sign: Sign,
}

impl Crossing {
    pub fn new(under_in: usize, over: usize, under_out: usize, sign: Sign) -> Self {
        Self { under_in, over, under_out, sign }
    }

    /// Whether the colors satisfy the crossing rule.
    pub fn is_colored_by(&self, q: &Quandle, colors: &[usize]) -> bool {
        colors[self.under_out] == self.output(q, colors[self.under_in], colors[self.over])
    }

    #[inline]
    fn output(&self, q: &Quandle, under: usize, over: usize) -> usize {
        match self.sign {
            Sign::Positive => q.op(under, over),
            Sign::Negative => q.bar(under, over),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("diagram has no crossings and no free loops")]
    Empty,
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("arc {arc} enters more than one undercrossing")]
    RepeatedUnderIn { arc: usize },
    #[error("arc {arc} leaves more than one undercrossing")]
    RepeatedUnderOut { arc: usize },
    #[error("arc {arc} does not close up (it must both enter and leave an undercrossing, or be a free loop)")]
    DanglingArc { arc: usize },
    #[error("free loop {arc} also passes under a crossing")]
    FreeLoopWithUndercrossing { arc: usize },
    #[error("free loop {arc} declared twice")]
    DuplicateFreeLoop { arc: usize },
    #[error("component {index} out of range (diagram has {count})")]
    ComponentOutOfRange { index: usize, count: usize },
    #[error("linking number needs two distinct components, got {0} twice")]
    SameComponent(usize),
    #[error("signed crossing sum {sum} between components {i} and {j} is odd")]
    OddLinkingSum { i: usize, j: usize, sum: i64 },
    #[error("edge order must list each nonzero edge (i < j) exactly once")]
    BadEdgeOrder,
    #[error("arc {arc} out of range (diagram has {count} arcs)")]
    ArcOutOfRange { arc: usize, count: usize },
}

/// A validated oriented link diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    arc_count: usize,
    crossings: Vec<Crossing>,
    free_loops: Vec<usize>,
    /// Arcs of each component in traversal order starting from its least arc;
    /// components sorted by least arc.
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
}

impl LinkDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: Vec<usize>) -> Result<Self, LinkError> {
        if crossings.is_empty() && free_loops.is_empty() {
            return Err(LinkError::Empty);
        }
        let arc_count = crossings
            .iter()
            .flat_map(|c| [c.under_in, c.over, c.under_out])
            .chain(free_loops.iter().copied())
            .max()
            .map_or(0, |a| a + 1);
        let mut entering = vec![usize::MAX; arc_count];
        let mut leaving = vec![usize::MAX; arc_count];
        for (k, c) in crossings.iter().enumerate() {
            if entering[c.under_in] != usize::MAX {
                return Err(LinkError::RepeatedUnderIn { arc: c.under_in });
            }
            entering[c.under_in] = k;
            if leaving[c.under_out] != usize::MAX {
                return Err(LinkError::RepeatedUnderOut { arc: c.under_out });
            }
            leaving[c.under_out] = k;
        }
        let mut is_free = vec![false; arc_count];
        for &a in &free_loops {
            if is_free[a] {
                return Err(LinkError::DuplicateFreeLoop { arc: a });
            }
            if entering[a] != usize::MAX || leaving[a] != usize::MAX {
                return Err(LinkError::FreeLoopWithUndercrossing { arc: a });
            }
            is_free[a] = true;
        }
        for a in 0..arc_count {
            if !is_free[a] && (entering[a] == usize::MAX || leaving[a] == usize::MAX) {
                return Err(LinkError::DanglingArc { arc: a });
            }
        }
        let mut component_of = vec![usize::MAX; arc_count];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for start in 0..arc_count {
            if component_of[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut arcs = Vec::new();
            let mut a = start;
            loop {
                component_of[a] = id;
                arcs.push(a);
                if is_free[a] {
                    break;
                }
                a = crossings[entering[a]].under_out;
                if a == start {
                    break;
                }
            }
            components.push(arcs);
        }
        let mut free_loops = free_loops;
        free_loops.sort_unstable();
        Ok(Self { arc_count, crossings, free_loops, components, component_of })
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> &[usize] {
        &self.free_loops
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_of(&self, arc: usize) -> usize {
        self.component_of[arc]
    }

    /// Least arc of each component.
    pub fn base_arcs(&self) -> Vec<usize> {
        self.components.iter().map(|c| c[0]).collect()
    }

    fn check_component(&self, i: usize) -> Result<(), LinkError> {
        if i >= self.components.len() {
            return Err(LinkError::ComponentOutOfRange { index: i, count: self.components.len() });
        }
        Ok(())
    }

    /// Half the signed number of crossings between components `i` and `j`.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64, LinkError> {
        self.check_component(i)?;
        self.check_component(j)?;
        if i == j {
            return Err(LinkError::SameComponent(i));
        }
        let sum: i64 = self
            .crossings
            .iter()
            .filter(|c| {
                let (u, o) = (self.component_of[c.under_in], self.component_of[c.over]);
                (u == i && o == j) || (u == j && o == i)
            })
            .map(|c| c.sign.value())
            .sum();
        if sum % 2 != 0 {
            return Err(LinkError::OddLinkingSum { i, j, sum });
        }
        Ok(sum / 2)
    }

    pub fn linking_graph(&self) -> Result<LinkingGraph, LinkError> {
        let m = self.component_count();
        let mut weights = vec![vec![0i64; m]; m];
        for i in 0..m {
            for j in i + 1..m {
                let w = self.linking_number(i, j)?;
                weights[i][j] = w;
                weights[j][i] = w;
            }
        }
        Ok(LinkingGraph { m, weights })
    }

    /// Adds a Reidemeister I kink at the end of `arc`. The arc keeps its
    /// overcrossings; a new arc carries it from the kink to its next undercrossing.
    pub fn with_kink(&self, arc: usize, sign: Sign) -> Result<LinkDiagram, LinkError> {
        if arc >= self.arc_count {
            return Err(LinkError::ArcOutOfRange { arc, count: self.arc_count });
        }
        let mut crossings = self.crossings.clone();
        let mut free_loops = self.free_loops.clone();
        if let Some(k) = free_loops.iter().position(|&a| a == arc) {
            free_loops.remove(k);
            crossings.push(Crossing::new(arc, arc, arc, sign));
        } else {
            let fresh = self.arc_count;
            let next = crossings.iter().position(|c| c.under_in == arc).unwrap();
            crossings[next].under_in = fresh;
            crossings.push(Crossing::new(arc, fresh, fresh, sign));
        }
        LinkDiagram::new(crossings, free_loops)
    }

    /// Whether `colors` (one per arc) satisfies the rule at every crossing.
    pub fn is_coloring(&self, q: &Quandle, colors: &[usize]) -> bool {
        colors.len() == self.arc_count
            && colors.iter().all(|&c| c < q.order())
            && self.crossings.iter().all(|c| c.is_colored_by(q, colors))
    }

    /// All colorings by `q`, sorted by base-arc colors and then by the full color vector.
    pub fn colorings(&self, q: &Quandle, limits: SearchLimits) -> Result<Vec<Coloring>, SearchCapExceeded> {
        let mut search = ColoringSearch::new(self, q, limits);
        search.run(0)?;
        let base = self.base_arcs();
        let mut out = search.found;
        out.sort_by_cached_key(|c| (base.iter().map(|&a| c.colors[a]).collect::<Vec<_>>(), c.colors.clone()));
        Ok(out.into_iter().map(|c| Coloring { colors: c.colors }).collect())
    }

    pub fn coloring_count(&self, q: &Quandle, limits: SearchLimits) -> Result<usize, SearchCapExceeded> {
        Ok(self.colorings(q, limits)?.len())
    }

    /// The diagram in `.lnk` text form.
    pub fn to_lnk(&self) -> String {
        let mut s = String::new();
        for c in &self.crossings {
            s.push_str(&format!("X {} {} {} {}\n", c.under_in, c.over, c.under_out, c.sign));
        }
        for a in &self.free_loops {
            s.push_str(&format!("O {a}\n"));
        }
        s
    }
}

/// Parses `.lnk` text: `X <under_in> <over> <under_out> <+|->` per crossing,
/// `O <arc>` per free loop, blank lines and `#` comments ignored.
pub fn parse_diagram(text: &str) -> Result<LinkDiagram, LinkError> {
    let mut crossings = Vec::new();
    let mut free_loops = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let arc = |s: &str| {
            s.parse::<usize>().map_err(|_| LinkError::Parse { line, reason: format!("bad arc label {s:?}") })
        };
        match fields.as_slice() {
            ["X", a, b, c, s] => {
                let sign = match *s {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    _ => return Err(LinkError::Parse { line, reason: format!("bad sign {s:?}") }),
                };
                crossings.push(Crossing::new(arc(a)?, arc(b)?, arc(c)?, sign));
            }
            ["O", a] => free_loops.push(arc(a)?),
            _ => {
                return Err(LinkError::Parse {
                    line,
                    reason: String::from("expected \"X under_in over under_out +|-\" or \"O arc\""),
                })
            }
        }
    }
    LinkDiagram::new(crossings, free_loops)
}

/// An assignment of quandle elements to the arcs of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, arc: usize) -> usize {
        self.colors[arc]
    }

    /// Colors of the base arcs, one per component.
    pub fn base_colors(&self, d: &LinkDiagram) -> Vec<usize> {
        d.components.iter().map(|c| self.colors[c[0]]).collect()
    }

    /// Pushes the coloring through a map of quandle elements.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Coloring {
        Coloring { colors: self.colors.iter().map(|&c| f(c)).collect() }
    }
}

struct Found {
    colors: Vec<usize>,
}

struct ColoringSearch<'a> {
    q: &'a Quandle,
    crossings: &'a [Crossing],
    order: Vec<usize>,
    // crossing producing the arc at each position, when it is determined by earlier arcs
    forced_by: Vec<Option<usize>>,
    // crossings whose three arcs are all assigned once the position is filled
    completes: Vec<Vec<usize>>,
    colors: Vec<usize>,
    counter: NodeCounter,
    found: Vec<Found>,
}

impl<'a> ColoringSearch<'a> {
    fn new(d: &'a LinkDiagram, q: &'a Quandle, limits: SearchLimits) -> Self {
        let order: Vec<usize> = d.components.iter().flatten().copied().collect();
        let mut position = vec![0; d.arc_count];
        for (p, &a) in order.iter().enumerate() {
            position[a] = p;
        }
        let mut forced_by = vec![None; order.len()];
        let mut completes = vec![Vec::new(); order.len()];
        for (k, c) in d.crossings.iter().enumerate() {
            let p = position[c.under_out];
            if position[c.under_in] < p && position[c.over] < p {
                forced_by[p] = Some(k);
            }
            let last = position[c.under_in].max(position[c.over]).max(p);
            completes[last].push(k);
        }
        Self {
            q,
            crossings: &d.crossings,
            order,
            forced_by,
            completes,
            colors: vec![usize::MAX; d.arc_count],
            counter: NodeCounter::new(limits),
            found: Vec::new(),
        }
    }

    fn run(&mut self, pos: usize) -> Result<(), SearchCapExceeded> {
        if pos == self.order.len() {
            self.found.push(Found { colors: self.colors.clone() });
            return Ok(());
        }
        let arc = self.order[pos];
        let candidates = match self.forced_by[pos] {
            Some(k) => {
                let c = self.crossings[k];
                let v = c.output(self.q, self.colors[c.under_in], self.colors[c.over]);
                v..v + 1
            }
            None => 0..self.q.order(),
        };
        for v in candidates {
            self.counter.tick()?;
            self.colors[arc] = v;
            if self.completes[pos].iter().all(|&k| self.crossings[k].is_colored_by(self.q, &self.colors)) {
                self.run(pos + 1)?;
            }
        }
        self.colors[arc] = usize::MAX;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkingGraphError {
    #[error("weight matrix must be {m}x{m}")]
    NotSquare { m: usize },
    #[error("weight at ({i},{i}) must be zero")]
    NonzeroDiagonal { i: usize },
    #[error("weights at ({i},{j}) and ({j},{i}) differ")]
    NotSymmetric { i: usize, j: usize },
}

/// Complete graph on the components, weighted by pairwise linking numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkingGraph {
    m: usize,
    weights: Vec<Vec<i64>>,
}

impl LinkingGraph {
    pub fn new(m: usize, weights: Vec<Vec<i64>>) -> Result<Self, LinkingGraphError> {
        if weights.len() != m || weights.iter().any(|r| r.len() != m) {
            return Err(LinkingGraphError::NotSquare { m });
        }
        for i in 0..m {
            if weights[i][i] != 0 {
                return Err(LinkingGraphError::NonzeroDiagonal { i });
            }
            for j in 0..i {
                if weights[i][j] != weights[j][i] {
                    return Err(LinkingGraphError::NotSymmetric { i, j });
                }
            }
        }
        Ok(Self { m, weights })
    }

    /// Graph with the given weights on edges `(i, j)`, `i < j`, zero elsewhere.
    pub fn from_edges(m: usize, edges: &[(usize, usize, i64)]) -> Self {
        let mut weights = vec![vec![0; m]; m];
        for &(i, j, w) in edges {
            weights[i][j] = w;
            weights[j][i] = w;
        }
        Self { m, weights }
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn weight(&self, i: usize, j: usize) -> i64 {
        self.weights[i][j]
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    /// Nonzero edges `(i, j, w)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in i + 1..self.m {
                if self.weights[i][j] != 0 {
                    out.push((i, j, self.weights[i][j]));
                }
            }
        }
        out
    }
}

/// A link whose linking graph is `g`: one circle per vertex and, for each nonzero
/// edge `(i, j, w)`, a clasp of `2|w|` crossings of sign `sgn(w)` in which the two
/// strands alternate passing over. Clasps follow the lexicographic edge order.
pub fn synthesize_link(g: &LinkingGraph) -> LinkDiagram {
    let order: Vec<(usize, usize)> = g.edges().iter().map(|&(i, j, _)| (i, j)).collect();
    synthesize_link_ordered(g, &order).expect("lexicographic edge order is valid")
}

/// [`synthesize_link`] with the clasps placed along each component in the given edge order.
pub fn synthesize_link_ordered(g: &LinkingGraph, edge_order: &[(usize, usize)]) -> Result<LinkDiagram, LinkError> {
    let expected: BTreeSet<(usize, usize)> = g.edges().iter().map(|&(i, j, _)| (i, j)).collect();
    let given: BTreeSet<(usize, usize)> = edge_order.iter().map(|&(i, j)| (i.min(j), i.max(j))).collect();
    if given != expected || given.len() != edge_order.len() {
        return Err(LinkError::BadEdgeOrder);
    }
    // per component: (crossing id, passes under)
    let mut events: Vec<Vec<(usize, bool)>> = vec![Vec::new(); g.m];
    let mut signs = Vec::new();
    for &(a, b) in edge_order {
        let (i, j) = (a.min(b), a.max(b));
        let w = g.weights[i][j];
        for k in 0..2 * w.unsigned_abs() as usize {
            let id = signs.len();
            signs.push(Sign::of(w));
            let i_over = k % 2 == 0;
            events[i].push((id, !i_over));
            events[j].push((id, i_over));
        }
    }
    let n = signs.len();
    let (mut under_in, mut over, mut under_out) = (vec![0; n], vec![0; n], vec![0; n]);
    let mut free_loops = Vec::new();
    let mut next_arc = 0;
    for ev in &events {
        let unders: Vec<usize> = ev.iter().enumerate().filter(|(_, e)| e.1).map(|(p, _)| p).collect();
        if unders.is_empty() {
            for &(id, _) in ev {
                over[id] = next_arc;
            }
            free_loops.push(next_arc);
            next_arc += 1;
            continue;
        }
        let u = unders.len();
        // arc r runs from the r-th undercrossing to the next one
        let mut r = u - 1;
        for &(id, under) in ev {
            if under {
                under_in[id] = next_arc + r;
                r = (r + 1) % u;
                under_out[id] = next_arc + r;
            } else {
                over[id] = next_arc + r;
            }
        }
        next_arc += u;
    }
    let crossings = (0..n).map(|k| Crossing::new(under_in[k], over[k], under_out[k], signs[k])).collect();
    LinkDiagram::new(crossings, free_loops)
}
