//! Quandle homomorphisms, automorphism and inner automorphism groups, Hom quandles.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::quandle::{Quandle, QuandleError};
use crate::search::{NodeCounter, SearchCapExceeded, SearchLimits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error(transparent)]
    CapExceeded(#[from] SearchCapExceeded),
    #[error("target quandle is not abelian")]
    NotAbelian,
    #[error("labels do not match the elements of the Hom quandle")]
    BadRelabeling,
    #[error("pointwise operation is not a quandle: {0}")]
    NotAQuandle(QuandleError),
    #[error("table is not a group: {0}")]
    NotAGroup(&'static str),
}

/// A map between finite quandles, `image[x]` being the image of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuandleMap {
    target_order: usize,
    image: Vec<usize>,
}

impl QuandleMap {
    pub fn new(image: Vec<usize>, target_order: usize) -> Self {
        debug_assert!(image.iter().all(|&v| v < target_order));
        Self { target_order, image }
    }

    pub fn identity(m: usize) -> Self {
        Self::new((0..m).collect(), m)
    }

    pub fn source_order(&self) -> usize {
        self.image.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// `x ↦ self(other(x))`.
    pub fn compose(&self, other: &QuandleMap) -> QuandleMap {
        assert_eq!(other.target_order, self.source_order(), "maps are not composable");
        QuandleMap::new(other.image.iter().map(|&x| self.image[x]).collect(), self.target_order)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source_order() != self.target_order {
            return false;
        }
        let mut seen = vec![false; self.target_order];
        self.image.iter().all(|&v| !core::mem::replace(&mut seen[v], true))
    }

    /// Checks `f(x*y) = f(x)*f(y)` for every pair.
    pub fn is_homomorphism(&self, source: &Quandle, target: &Quandle) -> bool {
        let m = source.order();
        self.source_order() == m
            && self.target_order == target.order()
            && (0..m).all(|x| {
                (0..m).all(|y| self.image[source.op(x, y)] == target.op(self.image[x], self.image[y]))
            })
    }
}

/// Finds homomorphisms by fixing images in index order and checking each constraint
/// `f(x*y) = f(x)*f(y)` as soon as all three of its images are assigned.
struct HomSearch<'a> {
    source: &'a Quandle,
    target: &'a Quandle,
    injective: bool,
    // constraints (x, y) whose largest index among x, y, x*y is k
    checks: Vec<Vec<(usize, usize)>>,
    image: Vec<usize>,
    used: Vec<bool>,
    counter: NodeCounter,
}

impl<'a> HomSearch<'a> {
    fn new(source: &'a Quandle, target: &'a Quandle, injective: bool, limits: SearchLimits) -> Self {
        let m = source.order();
        let mut checks = vec![Vec::new(); m];
        for x in 0..m {
            for y in 0..m {
                let k = x.max(y).max(source.op(x, y));
                checks[k].push((x, y));
            }
        }
        Self {
            source,
            target,
            injective,
            checks,
            image: vec![0; m],
            used: vec![false; target.order()],
            counter: NodeCounter::new(limits),
        }
    }

    /// Visits every solution; `visit` returns `false` to stop early.
    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> Result<bool, SearchCapExceeded> {
        if self.injective && self.source.order() > self.target.order() {
            return Ok(true);
        }
        self.extend(0, visit)
    }

    fn extend(
        &mut self,
        k: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Result<bool, SearchCapExceeded> {
        if k == self.source.order() {
            return Ok(visit(&self.image));
        }
        for v in 0..self.target.order() {
            if self.injective && self.used[v] {
                continue;
            }
            self.counter.tick()?;
            self.image[k] = v;
            let consistent = self.checks[k].iter().all(|&(x, y)| {
                self.image[self.source.op(x, y)] == self.target.op(self.image[x], self.image[y])
            });
            if !consistent {
                continue;
            }
            self.used[v] = true;
            let go_on = self.extend(k + 1, visit)?;
            self.used[v] = false;
            if !go_on {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// All homomorphisms `source → target`, sorted lexicographically by image array.
pub fn homs(source: &Quandle, target: &Quandle, limits: SearchLimits) -> Result<Vec<QuandleMap>, MorphismError> {
    let mut out = Vec::new();
    HomSearch::new(source, target, false, limits).run(&mut |img| {
        out.push(QuandleMap::new(img.to_vec(), target.order()));
        true
    })?;
    Ok(out)
}

pub fn endomorphisms(q: &Quandle, limits: SearchLimits) -> Result<Vec<QuandleMap>, MorphismError> {
    homs(q, q, limits)
}

/// A bijective homomorphism `x → y`, if one exists.
pub fn is_isomorphic(x: &Quandle, y: &Quandle, limits: SearchLimits) -> Result<Option<QuandleMap>, MorphismError> {
    if x.order() != y.order() {
        return Ok(None);
    }
    let mut found = None;
    HomSearch::new(x, y, true, limits).run(&mut |img| {
        found = Some(QuandleMap::new(img.to_vec(), y.order()));
        false
    })?;
    Ok(found)
}

/// Multiplication table of a finite group on `{0..order-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    order: usize,
    table: Vec<usize>,
    identity: usize,
}

impl FiniteGroupTable {
    /// Validates closure, associativity, identity and inverses exhaustively.
    pub fn new(order: usize, table: Vec<usize>) -> Result<Self, MorphismError> {
        if order == 0 || table.len() != order * order {
            return Err(MorphismError::NotAGroup("table shape"));
        }
        if table.iter().any(|&v| v >= order) {
            return Err(MorphismError::NotAGroup("not closed"));
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| mul(e, g) == g && mul(g, e) == g))
            .ok_or(MorphismError::NotAGroup("no identity"))?;
        for a in 0..order {
            if !(0..order).any(|b| mul(a, b) == identity) {
                return Err(MorphismError::NotAGroup("missing inverse"));
            }
            for b in 0..order {
                for c in 0..order {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(MorphismError::NotAGroup("not associative"));
                    }
                }
            }
        }
        Ok(Self { order, table, identity })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|g| self.element_order(g) == self.order)
    }
}

/// A group of quandle automorphisms with its composition table;
/// `table.mul(i, j)` is the index of `elements[i] ∘ elements[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapGroup {
    pub elements: Vec<QuandleMap>,
    pub table: FiniteGroupTable,
}

impl MapGroup {
    /// `elements` must be sorted and closed under composition.
    fn from_sorted(elements: Vec<QuandleMap>) -> Result<Self, MorphismError> {
        let index: BTreeMap<&[usize], usize> = elements
            .iter()
            .enumerate()
            .map(|(i, f)| (f.image(), i))
            .collect();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for f in &elements {
            for g in &elements {
                let fg = f.compose(g);
                table.push(*index.get(fg.image()).ok_or(MorphismError::NotAGroup("not closed"))?);
            }
        }
        Ok(Self { table: FiniteGroupTable::new(n, table)?, elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// `Aut(X)`: bijective endomorphisms under composition.
pub fn automorphism_group(q: &Quandle, limits: SearchLimits) -> Result<MapGroup, MorphismError> {
    let mut autos = Vec::new();
    HomSearch::new(q, q, true, limits).run(&mut |img| {
        autos.push(QuandleMap::new(img.to_vec(), q.order()));
        true
    })?;
    MapGroup::from_sorted(autos)
}

/// `Inn(X)`: the group generated by the column bijections `S_y`.
pub fn inner_group(q: &Quandle) -> MapGroup {
    let m = q.order();
    let generators: Vec<QuandleMap> = (0..m).map(|y| QuandleMap::new(q.column(y), m)).collect();
    let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    let mut frontier = vec![QuandleMap::identity(m)];
    seen.insert(frontier[0].image().to_vec(), ());
    while let Some(f) = frontier.pop() {
        for g in &generators {
            let h = g.compose(&f);
            if seen.insert(h.image().to_vec(), ()).is_none() {
                frontier.push(h);
            }
        }
    }
    let elements = seen.into_keys().map(|img| QuandleMap::new(img, m)).collect();
    MapGroup::from_sorted(elements).expect("closure of permutations is a group")
}

/// `Hom(X, A)` with the pointwise operation; `labels[i]` is the map behind element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomQuandle {
    pub quandle: Quandle,
    pub labels: Vec<QuandleMap>,
}

impl HomQuandle {
    /// Renumbers elements so that element `i` is the map with image `order[i]`.
    pub fn relabeled(&self, order: &[Vec<usize>]) -> Result<HomQuandle, MorphismError> {
        let n = self.labels.len();
        if order.len() != n {
            return Err(MorphismError::BadRelabeling);
        }
        let old_of_new: Vec<usize> = order
            .iter()
            .map(|img| self.labels.iter().position(|f| f.image() == img.as_slice()))
            .collect::<Option<_>>()
            .ok_or(MorphismError::BadRelabeling)?;
        let mut new_of_old = vec![usize::MAX; n];
        for (new, &old) in old_of_new.iter().enumerate() {
            if new_of_old[old] != usize::MAX {
                return Err(MorphismError::BadRelabeling);
            }
            new_of_old[old] = new;
        }
        let mut table = Vec::with_capacity(n * n);
        for &a in &old_of_new {
            for &b in &old_of_new {
                table.push(new_of_old[self.quandle.op(a, b)]);
            }
        }
        Ok(HomQuandle {
            quandle: Quandle::from_flat(n, table).map_err(MorphismError::NotAQuandle)?,
            labels: old_of_new.iter().map(|&i| self.labels[i].clone()).collect(),
        })
    }

    pub fn index_of(&self, image: &[usize]) -> Option<usize> {
        self.labels.iter().position(|f| f.image() == image)
    }
}

pub fn hom_quandle(source: &Quandle, target: &Quandle, limits: SearchLimits) -> Result<HomQuandle, MorphismError> {
    if !target.is_abelian() {
        return Err(MorphismError::NotAbelian);
    }
    let labels = homs(source, target, limits)?;
    let index: BTreeMap<&[usize], usize> = labels
        .iter()
        .enumerate()
        .map(|(i, f)| (f.image(), i))
        .collect();
    let n = labels.len();
    let mut table = Vec::with_capacity(n * n);
    for f in &labels {
        for g in &labels {
            let pointwise: Vec<usize> = f
                .image()
                .iter()
                .zip(g.image())
                .map(|(&a, &b)| target.op(a, b))
                .collect();
            table.push(index[pointwise.as_slice()]);
        }
    }
    Ok(HomQuandle {
        quandle: Quandle::from_flat(n, table).map_err(MorphismError::NotAQuandle)?,
        labels,
    })
}
