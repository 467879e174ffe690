//! Finite quandles as validated Cayley tables.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::perm::Permutation;

/// The first quandle axiom found to fail, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("empty table")]
    Empty,
    #[error("row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry {x}*{y} = {value} is outside 0..{order}")]
    EntryOutOfRange { x: usize, y: usize, value: usize, order: usize },
    #[error("idempotence fails: {x}*{x} = {value}")]
    Idempotence { x: usize, value: usize },
    #[error("column {column} is not a bijection: {x1}*{column} = {x2}*{column} = {value}")]
    ColumnNotBijective { column: usize, x1: usize, x2: usize, value: usize },
    #[error("self-distributivity fails at x={x}, y={y}, z={z}")]
    Distributivity { x: usize, y: usize, z: usize },
}

/// A finite quandle on `{0..order-1}` with `table[x * order + y] = x*y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quandle {
    order: usize,
    table: Vec<usize>,
    bar: Vec<usize>,
}

impl Quandle {
    /// Validates a row-major Cayley table against all three axioms.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let order = rows.len();
        let mut flat = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(QuandleError::NotSquare { row, len: r.len(), order });
            }
            flat.extend_from_slice(r);
        }
        Self::from_flat(order, flat)
    }

    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self, QuandleError> {
        if order == 0 {
            return Err(QuandleError::Empty);
        }
        debug_assert_eq!(table.len(), order * order);
        for x in 0..order {
            for y in 0..order {
                let value = table[x * order + y];
                if value >= order {
                    return Err(QuandleError::EntryOutOfRange { x, y, value, order });
                }
            }
        }
        for x in 0..order {
            let value = table[x * order + x];
            if value != x {
                return Err(QuandleError::Idempotence { x, value });
            }
        }
        let mut bar = vec![usize::MAX; order * order];
        for y in 0..order {
            for x in 0..order {
                let value = table[x * order + y];
                let slot = &mut bar[value * order + y];
                if *slot != usize::MAX {
                    return Err(QuandleError::ColumnNotBijective { column: y, x1: *slot, x2: x, value });
                }
                *slot = x;
            }
        }
        let op = |a: usize, b: usize| table[a * order + b];
        for x in 0..order {
            for y in 0..order {
                let xy = op(x, y);
                for z in 0..order {
                    if op(xy, z) != op(op(x, z), op(y, z)) {
                        return Err(QuandleError::Distributivity { x, y, z });
                    }
                }
            }
        }
        Ok(Self { order, table, bar })
    }

    /// `T_m`: `x*y = x`.
    pub fn trivial(m: usize) -> Self {
        assert!(m >= 1, "quandle order must be positive");
        let table = (0..m).flat_map(|x| core::iter::repeat_n(x, m)).collect();
        Self::from_flat(m, table).expect("trivial quandle satisfies the axioms")
    }

    /// `R_m`: `x*y = 2y - x mod m`.
    pub fn dihedral(m: usize) -> Self {
        assert!(m >= 1, "quandle order must be positive");
        let table = (0..m)
            .flat_map(|x| (0..m).map(move |y| (2 * y + m - x) % m))
            .collect();
        Self::from_flat(m, table).expect("dihedral quandle satisfies the axioms")
    }

    /// The order-`n+1` quandle on `{0..n}` whose only non-identity column is column 0,
    /// acting by `sigma` on the positive elements and fixing 0.
    pub fn p_quandle(sigma: &Permutation) -> Self {
        let n = sigma.degree();
        let m = n + 1;
        let mut table = Vec::with_capacity(m * m);
        for x in 0..m {
            for y in 0..m {
                table.push(if y == 0 && x != 0 { sigma.apply(x) } else { x });
            }
        }
        Self::from_flat(m, table).expect("P-quandles satisfy the axioms")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    /// The unique `z` with `z*y = x`.
    #[inline]
    pub fn bar(&self, x: usize, y: usize) -> usize {
        self.bar[x * self.order + y]
    }

    /// The column bijection `S_y: x ↦ x*y`.
    pub fn column(&self, y: usize) -> Vec<usize> {
        (0..self.order).map(|x| self.op(x, y)).collect()
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|x| self.row(x).to_vec()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.order).all(|x| self.row(x).iter().all(|&v| v == x))
    }

    /// `(x*y)*(z*w) = (x*z)*(y*w)` for all quadruples.
    pub fn is_abelian(&self) -> bool {
        let m = self.order;
        for x in 0..m {
            for y in 0..m {
                let xy = self.op(x, y);
                for z in 0..m {
                    let xz = self.op(x, z);
                    for w in 0..m {
                        if self.op(xy, self.op(z, w)) != self.op(xz, self.op(y, w)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use alloc::vec;

    /// Conjugation quandle `g*h = h⁻¹gh` of a group given by its multiplication table.
    pub(crate) fn conjugation_quandle(mul: &[Vec<usize>], identity: usize) -> Quandle {
        let n = mul.len();
        let inv: Vec<usize> = (0..n)
            .map(|g| (0..n).find(|&h| mul[g][h] == identity).unwrap())
            .collect();
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|g| (0..n).map(|h| mul[mul[inv[h]][g]][h]).collect())
            .collect();
        Quandle::from_table(&rows).unwrap()
    }

    pub(crate) fn s3_table() -> (Vec<Vec<usize>>, usize) {
        let elems: Vec<Permutation> = crate::perm::all_permutations(3).collect();
        let idx = |p: &Permutation| elems.iter().position(|q| q == p).unwrap();
        let mul = elems
            .iter()
            .map(|a| elems.iter().map(|b| idx(&a.compose(b).unwrap())).collect())
            .collect();
        (mul, 0)
    }

    fn p3() -> Quandle {
        Quandle::p_quandle(&Permutation::parse_cycles("(1 2)", 2).unwrap())
    }

    #[test]
    fn order_three_tables() {
        assert_eq!(Quandle::trivial(3).rows(), vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]);
        assert_eq!(Quandle::dihedral(3).rows(), vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]);
        assert_eq!(p3().rows(), vec![vec![0, 0, 0], vec![2, 1, 1], vec![1, 2, 2]]);
        let from = Quandle::from_table(&[vec![0, 0, 0], vec![2, 1, 1], vec![1, 2, 2]]).unwrap();
        assert_eq!(from, p3());
        assert_eq!(Quandle::dihedral(1).order(), 1);
    }

    #[test]
    fn axiom_violations() {
        assert_eq!(
            Quandle::from_table(&[vec![0, 0], vec![0, 1]]),
            Err(QuandleError::ColumnNotBijective { column: 0, x1: 0, x2: 1, value: 0 })
        );
        assert_eq!(
            Quandle::from_table(&[vec![1, 0], vec![0, 1]]),
            Err(QuandleError::Idempotence { x: 0, value: 1 })
        );
        assert!(matches!(
            Quandle::from_table(&[vec![0, 5], vec![1, 1]]),
            Err(QuandleError::EntryOutOfRange { value: 5, .. })
        ));
        assert!(matches!(
            Quandle::from_table(&[vec![0, 1], vec![1]]),
            Err(QuandleError::NotSquare { row: 1, .. })
        ));
        assert_eq!(Quandle::from_table(&[]), Err(QuandleError::Empty));
        // idempotent with bijective columns, but not self-distributive
        let rows = vec![vec![0, 2, 0], vec![2, 1, 1], vec![1, 0, 2]];
        assert!(matches!(
            Quandle::from_table(&rows),
            Err(QuandleError::Distributivity { .. })
        ));
    }

    #[test]
    fn p_quandle_columns() {
        let sigma = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        let q = Quandle::p_quandle(&sigma);
        assert_eq!(q.column(0), vec![0, 2, 3, 1]);
        for y in 1..4 {
            assert_eq!(q.column(y), vec![0, 1, 2, 3]);
        }
        assert_eq!(Quandle::p_quandle(&Permutation::identity(4)), Quandle::trivial(5));
    }

    #[test]
    fn bar_examples() {
        let q = p3();
        assert_eq!(q.bar(1, 0), 2);
        assert_eq!(Quandle::trivial(3).bar(2, 1), 2);
        for q in [p3(), Quandle::dihedral(5), Quandle::trivial(2)] {
            for x in 0..q.order() {
                for y in 0..q.order() {
                    assert_eq!(q.bar(q.op(x, y), y), x);
                    assert_eq!(q.op(q.bar(x, y), y), x);
                }
            }
        }
    }

    #[test]
    fn column_examples() {
        assert_eq!(p3().column(0), vec![0, 2, 1]);
        assert_eq!(p3().column(1), vec![0, 1, 2]);
        assert_eq!(Quandle::dihedral(3).column(0), vec![0, 2, 1]);
    }

    #[test]
    fn abelian_examples() {
        let sigma = Permutation::parse_cycles("(1 2 3)", 4).unwrap();
        assert!(Quandle::p_quandle(&sigma).is_abelian());
        assert!(Quandle::trivial(5).is_abelian());
        let (mul, e) = s3_table();
        let conj = conjugation_quandle(&mul, e);
        assert_eq!(conj.order(), 6);
        assert!(!conj.is_abelian());
    }

    #[test]
    fn p_quandles_abelian_exhaustive() {
        for n in 1..=4 {
            for sigma in crate::perm::all_permutations(n) {
                assert!(Quandle::p_quandle(&sigma).is_abelian(), "{sigma}");
            }
        }
    }
}
