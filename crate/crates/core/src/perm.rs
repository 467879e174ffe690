//! Permutations of `{1..n}` stored as image arrays.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Largest degree for which [`Permutation::centralizer`] enumerates `S_n` by default.
pub const CENTRALIZER_BOUND: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("permutation degree must be positive")]
    ZeroDegree,
    #[error("image is not a bijection of {{1..{n}}}: value {value} at point {point}")]
    NotABijection { n: usize, point: usize, value: usize },
    #[error("point {point} is outside {{{lo}..{hi}}}")]
    PointOutOfRange { point: usize, lo: usize, hi: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("malformed cycle notation at byte {position}: {reason}")]
    Malformed { position: usize, reason: &'static str },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree {n} exceeds enumeration bound {bound}")]
    DegreeOverBound { n: usize, bound: usize },
}

/// A bijection of `{1..n}`; `image[i - 1]` holds the image of point `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            image: (1..=n).collect(),
        }
    }

    /// Builds a permutation from 1-based images, checking bijectivity.
    pub fn from_image(image: Vec<usize>) -> Result<Self, PermutationError> {
        let n = image.len();
        if n == 0 {
            return Err(PermutationError::ZeroDegree);
        }
        let mut seen = vec![false; n + 1];
        for (i, &v) in image.iter().enumerate() {
            if v == 0 || v > n || seen[v] {
                return Err(PermutationError::NotABijection {
                    n,
                    point: i + 1,
                    value: v,
                });
            }
            seen[v] = true;
        }
        Ok(Self { image })
    }

    /// Parses disjoint cycles such as `"(1 2 3)(4 5)"`; `"()"` and `""` give the identity.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self, PermutationError> {
        if n == 0 {
            return Err(PermutationError::ZeroDegree);
        }
        let cycles = parse_cycle_list(text, 1, n)?;
        let mut image: Vec<usize> = (1..=n).collect();
        apply_cycles(&cycles, &mut image, 1)?;
        Ok(Self { image })
    }

    /// Builds a permutation from a list of disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermutationError> {
        if n == 0 {
            return Err(PermutationError::ZeroDegree);
        }
        for c in cycles {
            for &p in c {
                if p == 0 || p > n {
                    return Err(PermutationError::PointOutOfRange { point: p, lo: 1, hi: n });
                }
            }
        }
        let mut image: Vec<usize> = (1..=n).collect();
        apply_cycles(cycles, &mut image, 1)?;
        Ok(Self { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// The 1-based image array.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Image of the 1-based point `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermutationError> {
        self.check_degree(other)?;
        Ok(Permutation {
            image: other.image.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.degree()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v - 1] = i + 1;
        }
        Permutation { image }
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut image: Vec<usize> = (1..=self.degree()).collect();
        for _ in 0..k.unsigned_abs() {
            for v in image.iter_mut() {
                *v = base.apply(*v);
            }
        }
        Permutation { image }
    }

    /// Orbits as sorted point lists, ordered by least element; fixed points are singletons.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut orbits: Vec<Vec<usize>> = self.cycles_with_fixed();
        for o in orbits.iter_mut() {
            o.sort_unstable();
        }
        orbits
    }

    /// Cycles in traversal order, each starting at its least point, ordered by that point.
    pub fn cycles_with_fixed(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Length of the orbit containing `x`.
    pub fn orbit_len(&self, x: usize) -> usize {
        let mut len = 1;
        let mut y = self.apply(x);
        while y != x {
            y = self.apply(y);
            len += 1;
        }
        len
    }

    /// Cycle lengths sorted in descending order (a partition of `n`).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles_with_fixed().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Number of cycles, counting fixed points.
    pub fn cycle_count(&self) -> usize {
        self.cycles_with_fixed().len()
    }

    pub fn fixed_point_count(&self) -> usize {
        self.image.iter().enumerate().filter(|(i, &v)| v == i + 1).count()
    }

    /// Least `m ≥ 1` with `self^m = id`, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, l| num_integer::lcm(acc, l as u64))
    }

    pub fn is_involution(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| self.apply(v) == i + 1)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.degree() == other.degree()
            && (1..=self.degree()).all(|x| self.apply(other.apply(x)) == other.apply(self.apply(x)))
    }

    pub fn is_conjugate(&self, other: &Permutation) -> Result<bool, PermutationError> {
        self.check_degree(other)?;
        Ok(self.cycle_type() == other.cycle_type())
    }

    /// Some `h` with `self = h⁻¹ ∘ other ∘ h`, aligning cycles of equal length in least-element order.
    pub fn conjugator(&self, other: &Permutation) -> Result<Option<Permutation>, PermutationError> {
        if !self.is_conjugate(other)? {
            return Ok(None);
        }
        // h∘self = other∘h: h maps each self-cycle onto an other-cycle of the same length.
        let by_len = |p: &Permutation| {
            let mut cycles = p.cycles_with_fixed();
            cycles.sort_by_key(|c| c.len());
            cycles
        };
        let src = by_len(self);
        let dst = by_len(other);
        let mut image = vec![0; self.degree()];
        for (a, b) in src.iter().zip(dst.iter()) {
            for (x, y) in a.iter().zip(b.iter()) {
                image[x - 1] = *y;
            }
        }
        Ok(Some(Permutation { image }))
    }

    /// All `g ∈ S_n` commuting with `self`, by filtering `S_n`; lexicographic order.
    pub fn centralizer(&self) -> Result<Vec<Permutation>, PermutationError> {
        self.centralizer_bounded(CENTRALIZER_BOUND)
    }

    pub fn centralizer_bounded(&self, bound: usize) -> Result<Vec<Permutation>, PermutationError> {
        let n = self.degree();
        if n > bound {
            return Err(PermutationError::DegreeOverBound { n, bound });
        }
        Ok(all_permutations(n).filter(|g| g.commutes_with(self)).collect())
    }

    /// `∏ c_ℓ! · ℓ^{c_ℓ}` over cycle lengths `ℓ` with multiplicity `c_ℓ`.
    pub fn centralizer_order(&self) -> u128 {
        let mut counts = vec![0u32; self.degree() + 1];
        for l in self.cycle_type() {
            counts[l] += 1;
        }
        let mut order: u128 = 1;
        for (l, &c) in counts.iter().enumerate().skip(1) {
            for k in 1..=c as u128 {
                order *= k * l as u128;
            }
        }
        order
    }

    /// Cycle notation without fixed points; the identity prints as `()`.
    pub fn format_cycles(&self) -> String {
        format_cycle_list(
            self.cycles_with_fixed()
                .into_iter()
                .filter(|c| c.len() > 1)
                .collect::<Vec<_>>()
                .as_slice(),
        )
    }

    fn check_degree(&self, other: &Permutation) -> Result<(), PermutationError> {
        if self.degree() != other.degree() {
            return Err(PermutationError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

/// Lexicographic iterator over `S_n`.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

pub fn all_permutations(n: usize) -> Permutations {
    Permutations {
        next: if n == 0 { None } else { Some((1..=n).collect()) },
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { image: current })
    }
}

fn next_lexicographic(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// One permutation per cycle type of `S_n`, with cycles on consecutive points.
/// Ordered by partition, descending lexicographically, so the `n`-cycle comes first
/// and the identity last.
pub fn conjugacy_class_representatives(n: usize) -> Vec<Permutation> {
    let mut parts = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut parts);
    parts
        .into_iter()
        .map(|lengths| {
            let mut image = Vec::with_capacity(n);
            let mut start = 1;
            for l in lengths {
                for k in 0..l {
                    image.push(start + (k + 1) % l);
                }
                start += l;
            }
            Permutation { image }
        })
        .collect()
}

fn partitions(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        cur.push(part);
        partitions(rest - part, part, cur, out);
        cur.pop();
    }
}

pub(crate) fn parse_cycle_list(
    text: &str,
    lo: usize,
    hi: usize,
) -> Result<Vec<Vec<usize>>, PermutationError> {
    let bytes = text.as_bytes();
    let mut cycles = Vec::new();
    let mut i = 0;
    let malformed = |position, reason| PermutationError::Malformed { position, reason };
    while i < bytes.len() {
        match bytes[i] {
            b if b.is_ascii_whitespace() => i += 1,
            b'(' => {
                i += 1;
                let mut cycle = Vec::new();
                loop {
                    while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                        i += 1;
                    }
                    if i == bytes.len() {
                        return Err(malformed(i, "unclosed '('"));
                    }
                    match bytes[i] {
                        b')' => {
                            i += 1;
                            break;
                        }
                        b'0'..=b'9' => {
                            let start = i;
                            let mut value: usize = 0;
                            while i < bytes.len() && bytes[i].is_ascii_digit() {
                                value = value
                                    .checked_mul(10)
                                    .and_then(|v| v.checked_add((bytes[i] - b'0') as usize))
                                    .ok_or_else(|| malformed(start, "number too large"))?;
                                i += 1;
                            }
                            if value < lo || value > hi {
                                return Err(PermutationError::PointOutOfRange { point: value, lo, hi });
                            }
                            cycle.push(value);
                        }
                        b'(' => return Err(malformed(i, "nested '('")),
                        _ => return Err(malformed(i, "unexpected character")),
                    }
                }
                cycles.push(cycle);
            }
            b')' => return Err(malformed(i, "unmatched ')'")),
            _ => return Err(malformed(i, "expected '('")),
        }
    }
    Ok(cycles)
}

/// Writes the cycles into `image`, whose index `k` holds the image of point `k + offset`.
pub(crate) fn apply_cycles(
    cycles: &[Vec<usize>],
    image: &mut [usize],
    offset: usize,
) -> Result<(), PermutationError> {
    let mut used = vec![false; image.len()];
    for cycle in cycles {
        for (k, &p) in cycle.iter().enumerate() {
            if used[p - offset] {
                return Err(PermutationError::RepeatedPoint(p));
            }
            used[p - offset] = true;
            image[p - offset] = cycle[(k + 1) % cycle.len()];
        }
    }
    Ok(())
}

pub(crate) fn format_cycle_list(cycles: &[Vec<usize>]) -> String {
    use core::fmt::Write;
    if cycles.is_empty() {
        return String::from("()");
    }
    let mut s = String::new();
    for c in cycles {
        s.push('(');
        for (k, p) in c.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{p}");
        }
        s.push(')');
    }
    s
}

/// Cycle notation for a bijection of `{0..m-1}` given as an image array.
pub fn format_element_cycles(map: &[usize]) -> String {
    let mut seen = vec![false; map.len()];
    let mut cycles = Vec::new();
    for start in 0..map.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = map[x];
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
    }
    format_cycle_list(&cycles)
}

/// Parses cycle notation over the points `{0..m-1}` into an image array.
pub fn parse_element_cycles(text: &str, m: usize) -> Result<Vec<usize>, PermutationError> {
    if m == 0 {
        return Err(PermutationError::ZeroDegree);
    }
    let cycles = parse_cycle_list(text, 0, m - 1)?;
    let mut image: Vec<usize> = (0..m).collect();
    apply_cycles(&cycles, &mut image, 0)?;
    Ok(image)
}
