//! Quandle polynomials and good involutions.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::perm::Permutation;
use crate::quandle::Quandle;

/// `Σ c_ij s^i t^j` with nonzero integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TwoVarPolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl TwoVarPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coefficient: i64, s: u32, t: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(coefficient, s, t);
        p
    }

    pub fn add_term(&mut self, coefficient: i64, s: u32, t: u32) {
        let c = self.terms.entry((s, t)).or_insert(0);
        *c += coefficient;
        if *c == 0 {
            self.terms.remove(&(s, t));
        }
    }

    pub fn coefficient(&self, s: u32, t: u32) -> i64 {
        self.terms.get(&(s, t)).copied().unwrap_or(0)
    }

    /// `(s-exponent, t-exponent, coefficient)`, descending by t-degree then s-degree.
    pub fn terms(&self) -> Vec<(u32, u32, i64)> {
        let mut v: Vec<(u32, u32, i64)> = self.terms.iter().map(|(&(s, t), &c)| (s, t, c)).collect();
        v.sort_by(|a, b| (b.1, b.0).cmp(&(a.1, a.0)));
        v
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for TwoVarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (s, t, c)) in terms.into_iter().enumerate() {
            let magnitude = c.unsigned_abs();
            match (k, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if magnitude != 1 || (s == 0 && t == 0) {
                write!(f, "{magnitude}")?;
            }
            for (var, e) in [("s", s), ("t", t)] {
                match e {
                    0 => {}
                    1 => f.write_str(var)?,
                    _ => write!(f, "{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// `Σ_x s^{r(x)} t^{c(x)}` with `r(x) = |{y : x*y = x}|` and `c(x) = |{y : y*x = y}|`.
pub fn quandle_polynomial(q: &Quandle) -> TwoVarPolynomial {
    let m = q.order();
    let mut p = TwoVarPolynomial::zero();
    for x in 0..m {
        let r = (0..m).filter(|&y| q.op(x, y) == x).count() as u32;
        let c = (0..m).filter(|&y| q.op(y, x) == y).count() as u32;
        p.add_term(1, r, c);
    }
    p
}

/// Closed form for the P-quandle of `sigma`, with `α` its number of fixed points:
/// `α s^{n+1}t^{n+1} + (n-α) s^n t^{n+1} + s^{n+1} t^{1+α}`.
pub fn p_polynomial_formula(sigma: &Permutation) -> TwoVarPolynomial {
    let n = sigma.degree() as u32;
    let alpha = sigma.fixed_point_count() as u32;
    let mut p = TwoVarPolynomial::zero();
    p.add_term(alpha as i64, n + 1, n + 1);
    p.add_term((n - alpha) as i64, n, n + 1);
    p.add_term(1, n + 1, 1 + alpha);
    p
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("map has {len} entries, quandle has order {order}")]
    WrongLength { len: usize, order: usize },
    #[error("map is not an involution at {x}")]
    NotInvolution { x: usize },
    #[error("rho(x*y) != rho(x)*y at x={x}, y={y}")]
    LeftLaw { x: usize, y: usize },
    #[error("x*rho(y) != x bar y at x={x}, y={y}")]
    RightLaw { x: usize, y: usize },
}

/// A quandle with a good involution `rho`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricQuandle {
    quandle: Quandle,
    rho: Vec<usize>,
}

impl SymmetricQuandle {
    pub fn new(quandle: Quandle, rho: Vec<usize>) -> Result<Self, InvolutionError> {
        check_good_involution(&quandle, &rho)?;
        Ok(Self { quandle, rho })
    }

    pub fn quandle(&self) -> &Quandle {
        &self.quandle
    }

    pub fn rho(&self) -> &[usize] {
        &self.rho
    }
}

pub fn check_good_involution(q: &Quandle, rho: &[usize]) -> Result<(), InvolutionError> {
    let m = q.order();
    if rho.len() != m {
        return Err(InvolutionError::WrongLength { len: rho.len(), order: m });
    }
    for x in 0..m {
        if rho[x] >= m || rho[rho[x]] != x {
            return Err(InvolutionError::NotInvolution { x });
        }
    }
    for x in 0..m {
        for y in 0..m {
            if rho[q.op(x, y)] != q.op(rho[x], y) {
                return Err(InvolutionError::LeftLaw { x, y });
            }
            if q.op(x, rho[y]) != q.bar(x, y) {
                return Err(InvolutionError::RightLaw { x, y });
            }
        }
    }
    Ok(())
}

/// All maps `ρ` on `{0..m-1}` with `ρ∘ρ = id` (identity included), lexicographic.
pub fn involutions(m: usize) -> Vec<Vec<usize>> {
    fn go(rho: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(x) = rho.iter().position(|&v| v == usize::MAX) else {
            out.push(rho.clone());
            return;
        };
        for y in x..rho.len() {
            if rho[y] != usize::MAX {
                continue;
            }
            rho[x] = y;
            rho[y] = x;
            go(rho, out);
            rho[x] = usize::MAX;
            rho[y] = usize::MAX;
        }
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; m], &mut out);
    out.sort();
    out
}

/// Every good involution of `q`, found by filtering all involutions of the underlying set.
pub fn good_involutions(q: &Quandle) -> Vec<SymmetricQuandle> {
    involutions(q.order())
        .into_iter()
        .filter(|rho| check_good_involution(q, rho).is_ok())
        .map(|rho| SymmetricQuandle { quandle: q.clone(), rho })
        .collect()
}
