//! Elements of `ℤ[t, t⁻¹]` and the quandle 2-cocycle invariant of a link.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use thiserror::Error;

use crate::cohomology::{is_2cocycle, Cocycle2, Coefficients};
use crate::link::{Coloring, LinkDiagram, Sign};
use crate::quandle::Quandle;
use crate::search::{SearchCapExceeded, SearchLimits};

/// `Σ c_k t^k` with finitely many nonzero integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    terms: BTreeMap<i64, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coefficient: i64, exponent: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(coefficient, exponent);
        e
    }

    pub fn add_term(&mut self, coefficient: i64, exponent: i64) {
        let c = self.terms.entry(exponent).or_insert(0);
        *c += coefficient;
        if *c == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: i64) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> Vec<(i64, i64)> {
        self.terms.iter().map(|(&e, &c)| (e, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The augmentation `t ↦ 1`.
    pub fn evaluate_at_one(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;

    fn add(self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(c, e);
        }
        out
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&e, &c)) in self.terms.iter().enumerate() {
            match (k, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.unsigned_abs();
            if magnitude != 1 || e == 0 {
                write!(f, "{magnitude}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("cochain is not a 2-cocycle of the quandle")]
    NotACocycle,
    #[error("cocycle invariant needs integer exponents, got coefficients {0}")]
    NonIntegralCoefficients(Coefficients),
    #[error(transparent)]
    CapExceeded(#[from] SearchCapExceeded),
}

/// Exponent of the product of crossing weights of one coloring: the sum over
/// crossings of `ε·e(x, y)`, where `y` colors the over arc and `x` is the
/// under arc entering a positive crossing or leaving a negative one.
pub fn coloring_weight(d: &LinkDiagram, phi: &Cocycle2, coloring: &Coloring) -> i64 {
    d.crossings()
        .iter()
        .map(|c| {
            let y = coloring.color(c.over);
            match c.sign {
                Sign::Positive => phi.value(coloring.color(c.under_in), y),
                Sign::Negative => -phi.value(coloring.color(c.under_out), y),
            }
        })
        .sum()
}

/// `Φ_φ(D) = Σ_colorings t^{weight}`.
pub fn cocycle_invariant(
    d: &LinkDiagram,
    q: &Quandle,
    phi: &Cocycle2,
    limits: SearchLimits,
) -> Result<GroupRingElement, InvariantError> {
    if phi.coefficients() != Coefficients::Integers {
        return Err(InvariantError::NonIntegralCoefficients(phi.coefficients()));
    }
    if !is_2cocycle(q, phi) {
        return Err(InvariantError::NotACocycle);
    }
    let mut out = GroupRingElement::zero();
    for c in d.colorings(q, limits)? {
        out.add_term(1, coloring_weight(d, phi, &c));
    }
    Ok(out)
}
