//! Dense integer matrices with exact elimination over ℤ, ℚ and ℤ/p.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src], from column `from` on.
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for j in from..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let d = s * q;
                self.data[dst * self.cols + j] -= d;
            }
        }
    }

    /// col[dst] -= q * col[src], from row `from` on.
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for i in from..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let d = s * q;
                self.data[i * self.cols + dst] -= d;
            }
        }
    }

    /// Nonzero invariant factors `d_1 | d_2 | …` of the Smith normal form.
    ///
    /// Pivots are chosen by least absolute value and cleared by integer row and
    /// column operations; the resulting diagonal is normalised to a divisibility
    /// chain with gcd/lcm exchanges.
    pub fn smith_invariants(&self) -> Vec<BigInt> {
        let mut a = self.clone();
        let (r, c) = (a.rows, a.cols);
        let mut diag = Vec::new();
        for t in 0..r.min(c) {
            let Some((pi, pj)) = a.min_abs_entry(t, t..r, t..c) else {
                break;
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            loop {
                let pivot = a.get(t, t).clone();
                for i in t + 1..r {
                    if !a.get(i, t).is_zero() {
                        let q = a.get(i, t).div_floor(&pivot);
                        a.row_axpy(i, t, &q, t);
                    }
                }
                for j in t + 1..c {
                    if !a.get(t, j).is_zero() {
                        let q = a.get(t, j).div_floor(&pivot);
                        a.col_axpy(j, t, &q, t);
                    }
                }
                // remainders smaller than the pivot left in row/column t become the next pivot
                let mut best: Option<(usize, usize)> = None;
                let mut best_abs = pivot.abs();
                for i in t + 1..r {
                    let v = a.get(i, t);
                    if !v.is_zero() && v.abs() < best_abs {
                        best_abs = v.abs();
                        best = Some((i, t));
                    }
                }
                for j in t + 1..c {
                    let v = a.get(t, j);
                    if !v.is_zero() && v.abs() < best_abs {
                        best_abs = v.abs();
                        best = Some((t, j));
                    }
                }
                match best {
                    Some((i, j)) => {
                        a.swap_rows(t, i);
                        a.swap_cols(t, j);
                    }
                    None => break,
                }
            }
            diag.push(a.get(t, t).abs());
        }
        for i in 0..diag.len() {
            for j in i + 1..diag.len() {
                let g = diag[i].gcd(&diag[j]);
                let l = &diag[i] / &g * &diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
        diag
    }

    fn min_abs_entry(
        &self,
        _t: usize,
        rows: core::ops::Range<usize>,
        cols: core::ops::Range<usize>,
    ) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in rows {
            for j in cols.clone() {
                let v = self.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if best.as_ref().is_none_or(|(_, _, b)| v.abs() < *b) {
                    let one = v.abs().is_one();
                    best = Some((i, j, v.abs()));
                    if one {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        self.column_echelon().rank
    }

    /// Integer column reduction `self · V = E` with `V` unimodular and `E` in
    /// column-echelon form: column `k < rank` has its pivot at `pivot_rows[k]`,
    /// zero entries in the pivot rows of earlier columns, and columns `≥ rank` vanish.
    pub fn column_echelon(&self) -> ColumnEchelon {
        let mut e = self.clone();
        let mut v = IntMatrix::identity(self.cols);
        let mut pivot_rows = Vec::new();
        let mut pc = 0;
        for i in 0..e.rows {
            if pc == e.cols {
                break;
            }
            loop {
                let mut best: Option<(usize, BigInt)> = None;
                for j in pc..e.cols {
                    let x = e.get(i, j);
                    if !x.is_zero() && best.as_ref().is_none_or(|(_, b)| x.abs() < *b) {
                        best = Some((j, x.abs()));
                    }
                }
                let Some((j, _)) = best else { break };
                e.swap_cols(pc, j);
                v.swap_cols(pc, j);
                let pivot = e.get(i, pc).clone();
                let mut clean = true;
                for j in pc + 1..e.cols {
                    if e.get(i, j).is_zero() {
                        continue;
                    }
                    let q = e.get(i, j).div_floor(&pivot);
                    e.col_axpy(j, pc, &q, 0);
                    v.col_axpy(j, pc, &q, 0);
                    if !e.get(i, j).is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    pivot_rows.push(i);
                    pc += 1;
                    break;
                }
            }
        }
        ColumnEchelon {
            rank: pc,
            echelon: e,
            transform: v,
            pivot_rows,
        }
    }

    /// A ℤ-basis of `{x : self·x = 0}`, as the columns of the returned matrix.
    pub fn kernel_basis(&self) -> IntMatrix {
        let ce = self.column_echelon();
        let cols: Vec<Vec<BigInt>> = (ce.rank..self.cols).map(|j| ce.transform.column(j)).collect();
        IntMatrix::from_columns(self.cols, &cols)
    }

    /// Reduction modulo `p`, entries in `0..p`.
    pub fn to_mod(&self, p: u64) -> ModMatrix {
        let pb = BigInt::from(p);
        ModMatrix {
            rows: self.rows,
            cols: self.cols,
            p,
            data: self
                .data
                .iter()
                .map(|v| v.mod_floor(&pb).to_u64().expect("reduced residue fits"))
                .collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ColumnEchelon {
    pub rank: usize,
    pub echelon: IntMatrix,
    pub transform: IntMatrix,
    pub pivot_rows: Vec<usize>,
}

impl ColumnEchelon {
    /// Whether `v` lies in the ℤ-span of the original matrix's columns.
    pub fn spans(&self, v: &[BigInt]) -> bool {
        let mut w = v.to_vec();
        for (k, &row) in self.pivot_rows.iter().enumerate() {
            let pivot = self.echelon.get(row, k);
            let (q, rem) = w[row].div_rem(pivot);
            if !rem.is_zero() {
                return false;
            }
            if q.is_zero() {
                continue;
            }
            for (i, wi) in w.iter_mut().enumerate() {
                let e = self.echelon.get(i, k);
                if !e.is_zero() {
                    *wi -= e * &q;
                }
            }
        }
        w.iter().all(Zero::is_zero)
    }
}

/// Dense matrix over `ℤ/p` for a prime `p < 2^32`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        assert!((2..(1 << 32)).contains(&p), "modulus out of range");
        Self { rows, cols, p, data: vec![0; rows * cols] }
    }

    pub fn from_columns(rows: usize, p: u64, columns: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(rows, columns.len(), p);
        for (j, col) in columns.iter().enumerate() {
            for (i, &v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v % p;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn mul(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, other.rows);
        let p = self.p;
        let mut out = Self::zeros(self.rows, other.cols, p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.get(k, j)) % p;
                }
            }
        }
        out
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat; p is prime
        let (mut base, mut e, mut acc) = (a % self.p, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (ModMatrix, Vec<usize>) {
        let p = self.p;
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(pr) = (r..a.rows).find(|&i| a.get(i, c) != 0) else {
                continue;
            };
            for j in 0..a.cols {
                a.data.swap(r * a.cols + j, pr * a.cols + j);
            }
            let inv = a.inv(a.get(r, c));
            for j in c..a.cols {
                let idx = r * a.cols + j;
                a.data[idx] = a.data[idx] * inv % p;
            }
            for i in 0..a.rows {
                let f = a.get(i, c);
                if i == r || f == 0 {
                    continue;
                }
                for j in c..a.cols {
                    let s = a.get(r, j);
                    if s != 0 {
                        let idx = i * a.cols + j;
                        a.data[idx] = (a.data[idx] + (p - f) * s) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let (a, pivots) = self.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![0u64; self.cols];
                v[f] = 1;
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = (p - a.get(r, f)) % p;
                }
                v
            })
            .collect()
    }

    pub fn stack(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        ModMatrix { rows: self.rows + other.rows, cols: self.cols, p: self.p, data }
    }

    /// Appends `v` as a new column.
    pub fn with_column(&self, v: &[u64]) -> ModMatrix {
        assert_eq!(v.len(), self.rows);
        let mut out = Self::zeros(self.rows, self.cols + 1, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * out.cols + j] = self.get(i, j);
            }
            out.data[i * out.cols + self.cols] = v[i] % self.p;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn smith_small() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(m.smith_invariants(), big(&[2, 6, 12]));
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(m.smith_invariants(), big(&[1, 6]));
        assert!(IntMatrix::zeros(3, 2).smith_invariants().is_empty());
        assert_eq!(IntMatrix::from_rows(&[vec![0, 4], vec![0, 6]]).smith_invariants(), big(&[2]));
    }

    #[test]
    fn kernel_and_rank() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        // kernel basis is saturated: x = (2, -1, 0) must be an integer combination
        let ce = k.column_echelon();
        assert!(ce.spans(&big(&[2, -1, 0])));
        assert!(ce.spans(&big(&[3, 0, -1])));
    }

    #[test]
    fn span_membership() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3], vec![0, 0]]);
        let ce = m.column_echelon();
        assert!(ce.spans(&big(&[4, 3, 0])));
        assert!(!ce.spans(&big(&[1, 0, 0])));
        assert!(!ce.spans(&big(&[0, 0, 1])));
    }

    #[test]
    fn modular_rank() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(m.to_mod(2).rank(), 1);
        assert_eq!(m.to_mod(3).rank(), 1);
        assert_eq!(m.to_mod(5).rank(), 2);
        let k = IntMatrix::from_rows(&[vec![1, 1, 0]]).to_mod(2).kernel_basis();
        assert_eq!(k, vec![vec![1, 1, 0], vec![0, 0, 1]]);
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r)
        })
    }

    proptest! {
        #[test]
        fn smith_consistent_with_ranks(rows in arb_matrix()) {
            let m = IntMatrix::from_rows(&rows);
            let inv = m.smith_invariants();
            prop_assert_eq!(inv.len(), m.rank());
            for w in inv.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
            // rank mod p drops exactly by the invariant factors divisible by p
            for p in [2u64, 3, 5] {
                let pb = BigInt::from(p);
                let expect = inv.iter().filter(|d| !(*d % &pb).is_zero()).count();
                prop_assert_eq!(m.to_mod(p).rank(), expect);
            }
            let k = m.kernel_basis();
            prop_assert_eq!(k.cols(), m.cols() - m.rank());
            prop_assert!(m.mul(&k).is_zero());
        }

        #[test]
        fn product_of_invariants_is_gcd_of_minors_for_square(rows in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 3), 3)) {
            // for a 3×3 matrix, |det| equals the product of invariant factors when nonsingular
            let m = IntMatrix::from_rows(&rows);
            let r = &rows;
            let det = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
            let inv = m.smith_invariants();
            if det != 0 {
                let prod = inv.iter().fold(BigInt::one(), |a, b| a * b);
                prop_assert_eq!(prod, BigInt::from(det.abs()));
            } else {
                prop_assert!(inv.len() < 3);
            }
        }
    }
}
