//! Quandle and symmetric quandle cohomology in low degrees.
//!
//! Chains are taken modulo the degenerate subcomplex by deleting every tuple
//! with two equal neighbours from the basis. Cochains are integer vectors on the
//! remaining tuples, and the coboundary `δ^n` is the transpose of `∂_{n+1}`, so
//! `(δf)(x, y) = f(x) − f(x*y)`. For a good involution ρ the symmetric complex is
//! the subcomplex of cochains vanishing on every generator of `D^ρ`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::invariants::SymmetricQuandle;
use crate::matrix::{IntMatrix, ModMatrix};
use crate::quandle::Quandle;

/// Largest chain degree for which boundary matrices are built.
pub const MAX_CHAIN_DEGREE: usize = 4;
/// Largest `m^n` for which the tuples of `X^n` are enumerated.
pub const MAX_TUPLES: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("degree {degree} outside the supported range {min}..={max}")]
    DegreeOutOfRange { degree: usize, min: usize, max: usize },
    #[error("{order}^{degree} tuples exceed the bound {bound}")]
    TooLarge { order: usize, degree: usize, bound: usize },
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("vector has length {len}, expected {expected}")]
    LengthMismatch { len: usize, expected: usize },
}

/// Coefficient group `A` for cochains: ℤ, ℚ or ℤ/p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Integers,
    Rationals,
    IntegersMod(u64),
}

impl Coefficients {
    fn check(self) -> Result<Self, CohomologyError> {
        if let Coefficients::IntegersMod(p) = self {
            if !is_prime(p) || p >= 1 << 32 {
                return Err(CohomologyError::NotPrime(p));
            }
        }
        Ok(self)
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl FromStr for Coefficients {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "Z" => Ok(Coefficients::Integers),
            "Q" => Ok(Coefficients::Rationals),
            _ => s
                .strip_prefix('Z')
                .and_then(|p| p.parse::<u64>().ok())
                .filter(|&p| is_prime(p))
                .map(Coefficients::IntegersMod)
                .ok_or_else(|| alloc::format!("unknown coefficients {s:?}; expected Z, Q or Zp for a prime p")),
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => f.write_str("Z"),
            Coefficients::Rationals => f.write_str("Q"),
            Coefficients::IntegersMod(p) => write!(f, "Z{p}"),
        }
    }
}

/// Isomorphism type of a cohomology group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbelianGroupSummary {
    /// `ℤ^rank ⊕ ⨁ ℤ/d_i` with `d_1 | d_2 | …`, all `d_i ≥ 2`.
    Integral { rank: usize, torsion: Vec<BigInt> },
    Rational { dimension: usize },
    Modular { prime: u64, dimension: usize },
}

impl AbelianGroupSummary {
    /// Free rank over ℤ, or dimension over a field.
    pub fn rank(&self) -> usize {
        match self {
            AbelianGroupSummary::Integral { rank, .. } => *rank,
            AbelianGroupSummary::Rational { dimension } | AbelianGroupSummary::Modular { dimension, .. } => *dimension,
        }
    }

    pub fn torsion(&self) -> &[BigInt] {
        match self {
            AbelianGroupSummary::Integral { torsion, .. } => torsion,
            _ => &[],
        }
    }
}

impl fmt::Display for AbelianGroupSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbelianGroupSummary::Integral { rank, torsion } => {
                let mut parts: Vec<String> = Vec::new();
                if *rank > 0 {
                    parts.push(alloc::format!("Z^{rank}"));
                }
                parts.extend(torsion.iter().map(|d| alloc::format!("Z/{d}")));
                if parts.is_empty() {
                    f.write_str("0")
                } else {
                    f.write_str(&parts.join(" (+) "))
                }
            }
            AbelianGroupSummary::Rational { dimension } => write!(f, "Q^{dimension}"),
            AbelianGroupSummary::Modular { prime, dimension } => write!(f, "Z{prime}^{dimension}"),
        }
    }
}

/// The non-degenerate tuples of `X^n` in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleBasis {
    order: usize,
    degree: usize,
    tuples: Vec<Vec<usize>>,
    // dense index over all m^n tuples; usize::MAX marks degenerate ones
    index: Vec<usize>,
}

impl TupleBasis {
    pub fn new(order: usize, degree: usize) -> Result<Self, CohomologyError> {
        let total = order
            .checked_pow(degree as u32)
            .filter(|&t| t <= MAX_TUPLES)
            .ok_or(CohomologyError::TooLarge { order, degree, bound: MAX_TUPLES })?;
        if degree == 0 {
            return Ok(Self { order, degree, tuples: Vec::new(), index: vec![usize::MAX] });
        }
        let mut tuples = Vec::new();
        let mut index = vec![usize::MAX; total];
        let mut t = vec![0usize; degree];
        for code in 0..total {
            let mut c = code;
            for k in (0..degree).rev() {
                t[k] = c % order;
                c /= order;
            }
            if t.windows(2).all(|w| w[0] != w[1]) {
                index[code] = tuples.len();
                tuples.push(t.clone());
            }
        }
        Ok(Self { order, degree, tuples, index })
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// Basis index of a tuple, or `None` when it is degenerate (zero in the quotient).
    pub fn index_of(&self, t: &[usize]) -> Option<usize> {
        if self.degree == 0 {
            return None;
        }
        let code = t.iter().fold(0, |acc, &x| acc * self.order + x);
        let i = self.index[code];
        (i != usize::MAX).then_some(i)
    }
}

/// Matrix of `∂_n: C_n^Q → C_{n−1}^Q` (rows indexed by degree-`n−1` tuples).
pub fn boundary_matrix(q: &Quandle, n: usize) -> Result<IntMatrix, CohomologyError> {
    if !(1..=MAX_CHAIN_DEGREE).contains(&n) {
        return Err(CohomologyError::DegreeOutOfRange { degree: n, min: 1, max: MAX_CHAIN_DEGREE });
    }
    let lower = TupleBasis::new(q.order(), n - 1)?;
    let upper = TupleBasis::new(q.order(), n)?;
    Ok(boundary_between(q, &lower, &upper))
}

fn boundary_between(q: &Quandle, lower: &TupleBasis, upper: &TupleBasis) -> IntMatrix {
    let n = upper.degree;
    let mut m = IntMatrix::zeros(lower.len(), upper.len());
    if n <= 1 {
        return m;
    }
    let mut face = Vec::with_capacity(n - 1);
    for (col, x) in upper.tuples.iter().enumerate() {
        for i in 0..n {
            // sign (−1)^{i+1} for the 1-based position i+1
            let sign: i64 = if i % 2 == 0 { -1 } else { 1 };
            face.clear();
            face.extend(x.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v));
            if let Some(r) = lower.index_of(&face) {
                m.add_to(r, col, sign);
            }
            face.clear();
            face.extend(x[..i].iter().map(|&v| q.op(v, x[i])));
            face.extend_from_slice(&x[i + 1..]);
            if let Some(r) = lower.index_of(&face) {
                m.add_to(r, col, -sign);
            }
        }
    }
    m
}

/// Generators of `D_n^ρ`, `(x_1..x_n) + (x_1*x_i, …, x_{i−1}*x_i, ρ(x_i), x_{i+1}, …, x_n)`,
/// written in the non-degenerate basis; zero and repeated rows are dropped.
pub fn symmetric_relations(q: &Quandle, rho: &[usize], basis: &TupleBasis) -> IntMatrix {
    let n = basis.degree;
    let m = q.order();
    let mut rows: BTreeSet<Vec<(usize, i64)>> = BTreeSet::new();
    if n == 0 {
        return IntMatrix::zeros(0, 0);
    }
    let total = m.pow(n as u32);
    let mut x = vec![0usize; n];
    let mut y = vec![0usize; n];
    for code in 0..total {
        let mut c = code;
        for k in (0..n).rev() {
            x[k] = c % m;
            c /= m;
        }
        for i in 0..n {
            for k in 0..i {
                y[k] = q.op(x[k], x[i]);
            }
            y[i] = rho[x[i]];
            y[i + 1..].copy_from_slice(&x[i + 1..]);
            let mut entries: Vec<(usize, i64)> = Vec::with_capacity(2);
            for t in [&x, &y] {
                if let Some(j) = basis.index_of(t) {
                    match entries.iter_mut().find(|(k, _)| *k == j) {
                        Some(e) => e.1 += 1,
                        None => entries.push((j, 1)),
                    }
                }
            }
            entries.sort_unstable();
            if !entries.is_empty() {
                rows.insert(entries);
            }
        }
    }
    let mut r = IntMatrix::zeros(rows.len(), basis.len());
    for (i, row) in rows.iter().enumerate() {
        for &(j, v) in row {
            r.add_to(i, j, v);
        }
    }
    r
}

/// Cochain groups `C^{n−1}, C^n, C^{n+1}` with the coboundaries between them.
#[derive(Debug, Clone)]
pub struct CochainComplexSlice {
    order: usize,
    degree: usize,
    lower: TupleBasis,
    middle: TupleBasis,
    /// `δ^{n−1}: C^{n−1} → C^n`, rows indexed by `middle`.
    delta_lower: IntMatrix,
    /// `δ^n: C^n → C^{n+1}`, rows indexed by `upper`.
    delta_upper: IntMatrix,
    /// `D^ρ` generators in degrees `n−1` and `n`.
    relations: Option<(IntMatrix, IntMatrix)>,
}

impl CochainComplexSlice {
    /// The quandle cochain complex around degree `n` (`1 ≤ n ≤ 3`).
    pub fn new(q: &Quandle, n: usize) -> Result<Self, CohomologyError> {
        if !(1..MAX_CHAIN_DEGREE).contains(&n) {
            return Err(CohomologyError::DegreeOutOfRange { degree: n, min: 1, max: MAX_CHAIN_DEGREE - 1 });
        }
        let m = q.order();
        let lower = TupleBasis::new(m, n - 1)?;
        let middle = TupleBasis::new(m, n)?;
        let upper = TupleBasis::new(m, n + 1)?;
        let delta_lower = boundary_between(q, &lower, &middle).transpose();
        let delta_upper = boundary_between(q, &middle, &upper).transpose();
        Ok(Self { order: m, degree: n, lower, middle, delta_lower, delta_upper, relations: None })
    }

    /// The symmetric quandle cochain complex around degree `n`.
    pub fn symmetric(sq: &SymmetricQuandle, n: usize) -> Result<Self, CohomologyError> {
        let mut slice = Self::new(sq.quandle(), n)?;
        let lower = symmetric_relations(sq.quandle(), sq.rho(), &slice.lower);
        let middle = symmetric_relations(sq.quandle(), sq.rho(), &slice.middle);
        slice.relations = Some((lower, middle));
        Ok(slice)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Tuples indexing cochains of the middle degree.
    pub fn basis(&self) -> &TupleBasis {
        &self.middle
    }

    pub fn delta_lower(&self) -> &IntMatrix {
        &self.delta_lower
    }

    pub fn delta_upper(&self) -> &IntMatrix {
        &self.delta_upper
    }

    pub fn relations(&self) -> Option<&(IntMatrix, IntMatrix)> {
        self.relations.as_ref()
    }

    /// `δ^n ∘ δ^{n−1} = 0`.
    pub fn delta_squared_vanishes(&self) -> bool {
        self.delta_upper.mul(&self.delta_lower).is_zero()
    }

    /// Conditions cutting out cocycles in the middle degree: `D^ρ` vanishing stacked on `δ^n`.
    fn cocycle_conditions(&self) -> IntMatrix {
        match &self.relations {
            Some((_, r)) => r.stack(&self.delta_upper),
            None => self.delta_upper.clone(),
        }
    }

    /// `δ^{n−1}` restricted to the admissible cochains of degree `n−1`, over ℤ.
    fn coboundary_generators(&self) -> IntMatrix {
        match &self.relations {
            Some((r, _)) => self.delta_lower.mul(&r.kernel_basis()),
            None => self.delta_lower.clone(),
        }
    }

    fn coboundary_generators_mod(&self, p: u64) -> ModMatrix {
        let d = self.delta_lower.to_mod(p);
        match &self.relations {
            Some((r, _)) => {
                let k = r.to_mod(p).kernel_basis();
                d.mul(&ModMatrix::from_columns(self.lower.len(), p, &k))
            }
            None => d,
        }
    }

    pub fn cohomology(&self, coeff: Coefficients) -> Result<AbelianGroupSummary, CohomologyError> {
        let n = self.middle.len();
        Ok(match coeff.check()? {
            Coefficients::Integers => {
                let cocycle_rank = n - self.cocycle_conditions().rank();
                let invariants = self.coboundary_generators().smith_invariants();
                let torsion = invariants.into_iter().filter(|d| !d.is_one()).collect::<Vec<_>>();
                let boundary_rank = self.coboundary_generators().rank();
                AbelianGroupSummary::Integral { rank: cocycle_rank - boundary_rank, torsion }
            }
            Coefficients::Rationals => {
                let cocycle_rank = n - self.cocycle_conditions().rank();
                AbelianGroupSummary::Rational { dimension: cocycle_rank - self.coboundary_generators().rank() }
            }
            Coefficients::IntegersMod(p) => {
                let cocycle_dim = n - self.cocycle_conditions().to_mod(p).rank();
                let boundary_dim = self.coboundary_generators_mod(p).rank();
                AbelianGroupSummary::Modular { prime: p, dimension: cocycle_dim - boundary_dim }
            }
        })
    }

    /// A basis of the cocycles in the middle degree (a ℤ-basis over ℤ or ℚ, entries
    /// in `0..p` over ℤ/p), indexed by [`Self::basis`].
    pub fn cocycle_basis(&self, coeff: Coefficients) -> Result<Vec<Vec<BigInt>>, CohomologyError> {
        Ok(match coeff.check()? {
            Coefficients::Integers | Coefficients::Rationals => {
                let k = self.cocycle_conditions().kernel_basis();
                (0..k.cols()).map(|j| k.column(j)).collect()
            }
            Coefficients::IntegersMod(p) => self
                .cocycle_conditions()
                .to_mod(p)
                .kernel_basis()
                .into_iter()
                .map(|v| v.into_iter().map(BigInt::from).collect())
                .collect(),
        })
    }

    pub fn is_cocycle(&self, v: &[BigInt], coeff: Coefficients) -> Result<bool, CohomologyError> {
        self.check_len(v)?;
        let image = self.cocycle_conditions().mul_vec(v);
        Ok(match coeff.check()? {
            Coefficients::Integers | Coefficients::Rationals => image.iter().all(Zero::is_zero),
            Coefficients::IntegersMod(p) => {
                let p = BigInt::from(p);
                image.iter().all(|x| (x % &p).is_zero())
            }
        })
    }

    /// Whether `v` is `δ^{n−1}` of an admissible cochain with coefficients in `coeff`.
    pub fn is_coboundary(&self, v: &[BigInt], coeff: Coefficients) -> Result<bool, CohomologyError> {
        self.check_len(v)?;
        Ok(match coeff.check()? {
            Coefficients::Integers => self.coboundary_generators().column_echelon().spans(v),
            Coefficients::Rationals => {
                let g = self.coboundary_generators();
                let mut cols: Vec<Vec<BigInt>> = (0..g.cols()).map(|j| g.column(j)).collect();
                let before = g.rank();
                cols.push(v.to_vec());
                IntMatrix::from_columns(v.len(), &cols).rank() == before
            }
            Coefficients::IntegersMod(p) => {
                let g = self.coboundary_generators_mod(p);
                let pb = BigInt::from(p);
                let w: Vec<u64> = v
                    .iter()
                    .map(|x| num_integer::Integer::mod_floor(x, &pb).to_u64().unwrap())
                    .collect();
                g.with_column(&w).rank() == g.rank()
            }
        })
    }

    fn check_len(&self, v: &[BigInt]) -> Result<(), CohomologyError> {
        if v.len() != self.middle.len() {
            return Err(CohomologyError::LengthMismatch { len: v.len(), expected: self.middle.len() });
        }
        Ok(())
    }

    /// Converts a degree-2 cochain vector into a [`Cocycle2`] assignment.
    pub fn to_cocycle2(&self, v: &[BigInt], coeff: Coefficients) -> Option<Cocycle2> {
        if self.degree != 2 || v.len() != self.middle.len() {
            return None;
        }
        let mut values = vec![0i64; self.order * self.order];
        for (t, x) in self.middle.tuples.iter().zip(v) {
            values[t[0] * self.order + t[1]] = x.to_i64()?;
        }
        Some(Cocycle2 { order: self.order, values, coefficients: coeff })
    }

    /// Cochain vector of a [`Cocycle2`], dropping the diagonal.
    pub fn from_cocycle2(&self, phi: &Cocycle2) -> Option<Vec<BigInt>> {
        if self.degree != 2 || phi.order != self.order {
            return None;
        }
        Some(self.middle.tuples.iter().map(|t| BigInt::from(phi.value(t[0], t[1]))).collect())
    }
}

/// `H^n_Q(X; A)`.
pub fn cohomology_q(q: &Quandle, n: usize, coeff: Coefficients) -> Result<AbelianGroupSummary, CohomologyError> {
    CochainComplexSlice::new(q, n)?.cohomology(coeff)
}

/// `H^n_{Q,ρ}(X; A)`.
pub fn symmetric_cohomology(
    sq: &SymmetricQuandle,
    n: usize,
    coeff: Coefficients,
) -> Result<AbelianGroupSummary, CohomologyError> {
    CochainComplexSlice::symmetric(sq, n)?.cohomology(coeff)
}

/// A 2-cochain `C_{(x,y)}` on all ordered pairs, valued in `coefficients`
/// (integer representatives; residues for ℤ/p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle2 {
    order: usize,
    values: Vec<i64>,
    coefficients: Coefficients,
}

impl Cocycle2 {
    pub fn zero(order: usize, coefficients: Coefficients) -> Self {
        Self { order, values: vec![0; order * order], coefficients }
    }

    pub fn from_fn(order: usize, coefficients: Coefficients, f: impl Fn(usize, usize) -> i64) -> Self {
        let values = (0..order * order).map(|k| f(k / order, k % order)).collect();
        Self { order, values, coefficients }
    }

    /// Sum of indicator functions `χ_{(x,y)}` over `pairs`.
    pub fn indicator_sum(order: usize, coefficients: Coefficients, pairs: &[(usize, usize)]) -> Self {
        let mut c = Self::zero(order, coefficients);
        for &(x, y) in pairs {
            c.values[x * order + y] += 1;
        }
        c
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    #[inline]
    pub fn value(&self, x: usize, y: usize) -> i64 {
        self.values[x * self.order + y]
    }

    fn vanishes(&self, v: i64) -> bool {
        match self.coefficients {
            Coefficients::IntegersMod(p) => v.rem_euclid(p as i64) == 0,
            _ => v == 0,
        }
    }
}

/// Both 2-cocycle conditions: `f(x,x) = 0`, and
/// `f(x0,x1) + f(x0*x1,x2) − f(x0,x2) − f(x0*x2,x1*x2) = 0` for all triples.
pub fn is_2cocycle(q: &Quandle, phi: &Cocycle2) -> bool {
    let m = q.order();
    if phi.order != m {
        return false;
    }
    if !(0..m).all(|x| phi.vanishes(phi.value(x, x))) {
        return false;
    }
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let s = phi.value(a, b) + phi.value(q.op(a, b), c)
                    - phi.value(a, c)
                    - phi.value(q.op(a, c), q.op(b, c));
                if !phi.vanishes(s) {
                    return false;
                }
            }
        }
    }
    true
}

/// Exponent cochain of `θ = t^{Σ_i χ_{(0,i)}}` on the P-quandle of an `n`-cycle:
/// `1` on pairs `(0, y)` with `y ≠ 0` and `0` elsewhere.
pub fn theta_cocycle(n: usize) -> Cocycle2 {
    Cocycle2::from_fn(n + 1, Coefficients::Integers, |x, y| i64::from(x == 0 && y != 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::good_involutions;
    use crate::perm::Permutation;
    use alloc::string::ToString;

    fn pq(c: &str, n: usize) -> Quandle {
        Quandle::p_quandle(&Permutation::parse_cycles(c, n).unwrap())
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn tuple_basis_excludes_degenerate() {
        let b = TupleBasis::new(3, 3).unwrap();
        assert_eq!(b.len(), 3 * 2 * 2);
        assert_eq!(b.index_of(&[0, 0, 1]), None);
        assert_eq!(b.index_of(&[0, 1, 0]), Some(0));
        assert!(TupleBasis::new(11, 6).is_err());
    }

    #[test]
    fn boundary_degree_two() {
        let p3 = pq("(1 2)", 2);
        let d = boundary_matrix(&p3, 2).unwrap();
        let basis = TupleBasis::new(3, 2).unwrap();
        let col = basis.index_of(&[1, 0]).unwrap();
        // ∂(1,0) = (1) − (1*0) = (1) − (2)
        assert_eq!(d.column(col), big(&[0, 1, -1]));
        let t2 = boundary_matrix(&Quandle::trivial(2), 2).unwrap();
        assert!(t2.is_zero());
        assert!(matches!(boundary_matrix(&p3, 5), Err(CohomologyError::DegreeOutOfRange { .. })));
    }

    #[test]
    fn boundary_squares_to_zero() {
        for q in [pq("(1 2)", 2), Quandle::dihedral(3), Quandle::trivial(3), Quandle::dihedral(4)] {
            for n in 2..=4 {
                let a = boundary_matrix(&q, n - 1).unwrap();
                let b = boundary_matrix(&q, n).unwrap();
                assert!(a.mul(&b).is_zero(), "n={n}");
            }
        }
    }

    #[test]
    fn h2_examples() {
        let z = Coefficients::Integers;
        let h = cohomology_q(&pq("(1 2 3)", 3), 2, z).unwrap();
        assert_eq!(h, AbelianGroupSummary::Integral { rank: 2, torsion: Vec::new() });
        assert_eq!(h.to_string(), "Z^2");
        let h = cohomology_q(&pq("(1 2)(3 4)", 4), 2, Coefficients::Rationals).unwrap();
        assert_eq!(h.rank(), 6);
        assert_eq!(cohomology_q(&Quandle::trivial(3), 2, z).unwrap().rank(), 6);
        // R_3 has trivial second cohomology over ℤ
        assert_eq!(cohomology_q(&Quandle::dihedral(3), 2, z).unwrap().to_string(), "0");
    }

    #[test]
    fn dihedral_torsion() {
        // H_2 = 0 and H_3 = ℤ/3 for R_3, so H^3(ℤ) = 0 while H^3(ℤ/3) is 1-dimensional
        let z = Coefficients::Integers;
        let r3 = Quandle::dihedral(3);
        assert_eq!(cohomology_q(&r3, 3, z).unwrap().to_string(), "0");
        assert_eq!(cohomology_q(&r3, 2, Coefficients::IntegersMod(3)).unwrap().rank(), 0);
        assert_eq!(cohomology_q(&r3, 3, Coefficients::IntegersMod(3)).unwrap().rank(), 1);
        assert_eq!(cohomology_q(&r3, 3, Coefficients::IntegersMod(2)).unwrap().rank(), 0);
    }

    #[test]
    fn cocycle_checks() {
        let p3 = pq("(1 2)", 2);
        let z = Coefficients::Integers;
        assert!(is_2cocycle(&p3, &theta_cocycle(2)));
        assert!(is_2cocycle(&pq("(1 2 3)", 3), &theta_cocycle(3)));
        assert!(is_2cocycle(&p3, &Cocycle2::zero(3, z)));
        assert!(is_2cocycle(&p3, &Cocycle2::indicator_sum(3, z, &[(1, 0)])));
        assert!(!is_2cocycle(&p3, &Cocycle2::indicator_sum(3, z, &[(0, 1)])));
        let diag = Cocycle2::indicator_sum(3, z, &[(1, 1)]);
        assert!(!is_2cocycle(&Quandle::trivial(3), &diag));
        let two = Cocycle2::from_fn(3, Coefficients::IntegersMod(2), |x, y| if x == y { 2 } else { 0 });
        assert!(is_2cocycle(&p3, &two));
    }

    #[test]
    fn theta_values() {
        let t = theta_cocycle(3);
        assert_eq!(t.value(0, 3), 1);
        assert_eq!(t.value(0, 0), 0);
        assert_eq!(t.value(2, 0), 0);
    }

    #[test]
    fn symmetric_p3() {
        let p3 = pq("(1 2)", 2);
        let sq = good_involutions(&p3).into_iter().find(|s| s.rho() == [0, 2, 1]).unwrap();
        let z2 = Coefficients::IntegersMod(2);
        let slice = CochainComplexSlice::symmetric(&sq, 2).unwrap();
        // only constant-on-{1,2} 1-cochains are admissible, so nothing is a coboundary
        assert_eq!(slice.cohomology(z2).unwrap().rank(), 2);
        for pairs in [[(0, 1), (0, 2)], [(1, 0), (2, 0)]] {
            let v = slice.from_cocycle2(&Cocycle2::indicator_sum(3, z2, &pairs)).unwrap();
            assert!(slice.is_cocycle(&v, z2).unwrap());
            assert!(!slice.is_coboundary(&v, z2).unwrap());
        }
        let single = slice.from_cocycle2(&Cocycle2::indicator_sum(3, z2, &[(1, 0)])).unwrap();
        assert!(!slice.is_cocycle(&single, z2).unwrap());
        assert!(slice.is_coboundary(&vec![BigInt::zero(); single.len()], z2).unwrap());
    }

    #[test]
    fn coefficients_parse() {
        assert_eq!("Z".parse::<Coefficients>(), Ok(Coefficients::Integers));
        assert_eq!("Q".parse::<Coefficients>(), Ok(Coefficients::Rationals));
        assert_eq!("Z5".parse::<Coefficients>(), Ok(Coefficients::IntegersMod(5)));
        assert!("Z4".parse::<Coefficients>().is_err());
        assert!("R".parse::<Coefficients>().is_err());
        assert!(cohomology_q(&Quandle::trivial(2), 2, Coefficients::IntegersMod(4)).is_err());
    }
}
