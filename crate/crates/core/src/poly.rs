//! Sparse polynomials with exact rational coefficients, and term orders.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{default_names, Monomial};

/// A term order on monomials of a fixed arity. Lex and grevlex are global
/// (well-orders); a weight order compares the weight first and defers ties to
/// its tiebreak, and is global exactly when every variable beats 1 under the
/// composite comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    GrevLex,
    Weight { weights: Vec<i64>, tiebreak: Box<TermOrder> },
}

impl TermOrder {
    pub fn weight(weights: Vec<i64>, tiebreak: TermOrder) -> TermOrder {
        TermOrder::Weight { weights, tiebreak: Box::new(tiebreak) }
    }

    /// Elimination order for the variable `aux` in a ring of the given arity:
    /// any monomial containing `aux` beats any monomial without it.
    pub fn eliminate(aux: usize, arity: usize) -> TermOrder {
        let mut weights = vec![0i64; arity];
        weights[aux] = 1;
        TermOrder::weight(weights, TermOrder::GrevLex)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            TermOrder::Lex => {
                for (x, y) in a.exponents().iter().zip(b.exponents()) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            TermOrder::GrevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    match y.cmp(x) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            TermOrder::Weight { weights, tiebreak } => {
                let wa = weight_value(weights, a);
                let wb = weight_value(weights, b);
                match wa.cmp(&wb) {
                    Ordering::Equal => tiebreak.cmp(a, b),
                    ord => ord,
                }
            }
        }
    }

    /// Global means every variable is larger than 1; division terminates.
    pub fn is_global(&self, arity: usize) -> bool {
        let one = Monomial::one(arity);
        (0..arity).all(|i| self.cmp(&Monomial::variable(i, arity), &one) == Ordering::Greater)
    }
}

pub(crate) fn weight_value(weights: &[i64], m: &Monomial) -> i128 {
    weights
        .iter()
        .zip(m.exponents())
        .map(|(&w, &e)| w as i128 * e as i128)
        .sum()
}

/// A sparse polynomial over Q. Terms are kept in the canonical monomial
/// order with no zero coefficients, so equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigRational::one())
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(arity), c);
        }
        p
    }

    pub fn variable(i: usize, arity: usize) -> Self {
        Self::term(Monomial::variable(i, arity), BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let arity = m.arity();
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(arity: usize, terms: Vec<(Monomial, BigRational)>) -> Result<Self> {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            if m.arity() != arity {
                return Err(Error::ArityMismatch { left: arity, right: m.arity() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Leading term under the given order.
    pub fn leading(&self, order: &TermOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<Monomial> {
        self.leading(order).map(|(m, _)| m.clone())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { arity: self.arity, terms }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial { arity: self.arity, terms }
    }

    /// Multiply by a single term c * u.
    pub fn mul_term(&self, u: &Monomial, c: &BigRational) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(self.arity));
        }
        let mut out = Polynomial::zero(self.arity);
        for (m, k) in &self.terms {
            out.terms.insert(m.checked_mul(u)?, k * c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in &other.terms {
            for (n, k) in &self.terms {
                out.add_term(n.checked_mul(m)?, k * c);
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, n: u32) -> Result<Polynomial> {
        let mut out = Polynomial::one(self.arity);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Divide all coefficients so the leading coefficient becomes 1.
    pub fn monic(&self, order: &TermOrder) -> Polynomial {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Substitute x_i -> sum_j matrix[i][j] x_j (a linear change of
    /// coordinates). The matrix is arity x arity.
    pub fn substitute_linear(&self, matrix: &[Vec<BigRational>]) -> Result<Polynomial> {
        let arity = self.arity;
        let images: Vec<Polynomial> = (0..arity)
            .map(|i| {
                let terms = matrix[i]
                    .iter()
                    .enumerate()
                    .map(|(j, c)| (Monomial::variable(j, arity), c.clone()))
                    .collect();
                Polynomial::from_terms(arity, terms)
            })
            .collect::<Result<_>>()?;
        let mut out = Polynomial::zero(arity);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(arity, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&images[i].checked_pow(e)?)?;
                }
            }
            out = out.add(&prod)?;
        }
        Ok(out)
    }

    /// Append fresh (unused) variables at the end of the ring.
    pub fn extend_arity(&self, new_arity: usize) -> Polynomial {
        assert!(new_arity >= self.arity);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exponents().to_vec();
                exps.resize(new_arity, 0);
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Polynomial { arity: new_arity, terms }
    }

    /// Substitute a rational value for one variable, keeping the arity.
    pub fn set_variable(&self, var: usize, value: &BigRational) -> Polynomial {
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let mut exps = m.exponents().to_vec();
            exps[var] = 0;
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff *= value;
            }
            out.add_term(Monomial::new(exps), coeff);
        }
        out
    }

    /// Drop trailing variables; they must be absent from every term.
    pub fn shrink_arity(&self, new_arity: usize) -> Result<Polynomial> {
        let mut out = Polynomial::zero(new_arity);
        for (m, c) in &self.terms {
            if m.exponents()[new_arity..].iter().any(|&e| e > 0) {
                return Err(Error::Invalid(
                    "cannot shrink arity: trailing variable occurs".to_string(),
                ));
            }
            out.add_term(Monomial::new(m.exponents()[..new_arity].to_vec()), c.clone());
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        acc
    }

    fn check_arity(&self, other: &Polynomial) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch { left: self.arity, right: other.arity })
        }
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // Print highest degree first for readability.
        let mut parts = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (sign, abs) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    parts.push('-');
                }
            } else {
                parts.push_str(if sign == "-" { " - " } else { " + " });
            }
            let coeff_is_one = abs.is_one();
            if m.is_one() {
                parts.push_str(&format_rational(&abs));
            } else if coeff_is_one {
                parts.push_str(&m.format_with(names));
            } else {
                parts.push_str(&format!("{}*{}", format_rational(&abs), m.format_with(names)));
            }
        }
        parts
    }
}

fn format_rational(c: &BigRational) -> String {
    if c.denom() == &BigInt::one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&default_names(self.arity)))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Convenience: integer-coefficient construction for tests and examples.
pub fn poly_from_int_terms(arity: usize, terms: &[(&[u32], i64)]) -> Polynomial {
    let list = terms
        .iter()
        .map(|(exps, c)| {
            (Monomial::new(exps.to_vec()), BigRational::from_integer(BigInt::from(*c)))
        })
        .collect();
    Polynomial::from_terms(arity, list).expect("term arities match")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_orders_degree_then_reverse() {
        let o = TermOrder::GrevLex;
        let x3 = Monomial::new(vec![3, 0]);
        let y3 = Monomial::new(vec![0, 3]);
        let xy2 = Monomial::new(vec![1, 2]);
        assert_eq!(o.cmp(&x3, &y3), Ordering::Greater);
        assert_eq!(o.cmp(&x3, &xy2), Ordering::Greater);
        assert_eq!(o.cmp(&xy2, &y3), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let o = TermOrder::Lex;
        let x = Monomial::new(vec![1, 0]);
        let y5 = Monomial::new(vec![0, 5]);
        assert_eq!(o.cmp(&x, &y5), Ordering::Greater);
    }

    #[test]
    fn weight_order_with_tiebreak() {
        let o = TermOrder::weight(vec![2, 1], TermOrder::GrevLex);
        let x3 = Monomial::new(vec![3, 0]); // weight 6
        let y3 = Monomial::new(vec![0, 3]); // weight 3
        assert_eq!(o.cmp(&x3, &y3), Ordering::Greater);
        // Equal weights defer to grevlex.
        let a = Monomial::new(vec![1, 2]); // weight 4
        let b = Monomial::new(vec![2, 0]); // weight 4
        assert_eq!(o.cmp(&a, &b), TermOrder::GrevLex.cmp(&a, &b));
    }

    #[test]
    fn elimination_order_prefers_aux_variable() {
        let o = TermOrder::eliminate(2, 3);
        let u = Monomial::new(vec![0, 0, 1]);
        let x5 = Monomial::new(vec![5, 0, 0]);
        assert_eq!(o.cmp(&u, &x5), Ordering::Greater);
        assert!(o.is_global(3));
    }

    #[test]
    fn negative_weight_is_not_global() {
        let o = TermOrder::weight(vec![-1, 1], TermOrder::GrevLex);
        assert!(!o.is_global(2));
        assert!(TermOrder::Lex.is_global(2));
        assert!(TermOrder::GrevLex.is_global(4));
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let f = poly_from_int_terms(2, &[(&[3, 0], 1), (&[0, 3], 1)]);
        let g = poly_from_int_terms(2, &[(&[0, 3], -1)]);
        let sum = f.add(&g).unwrap();
        assert_eq!(sum, poly_from_int_terms(2, &[(&[3, 0], 1)]));
        assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn product_expands() {
        // (x + y)^2 = x^2 + 2xy + y^2
        let f = poly_from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let sq = f.checked_pow(2).unwrap();
        assert_eq!(
            sq,
            poly_from_int_terms(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)])
        );
    }

    #[test]
    fn leading_term_depends_on_order() {
        let f = poly_from_int_terms(2, &[(&[3, 0], 2), (&[0, 3], 5)]);
        assert_eq!(f.leading_monomial(&TermOrder::GrevLex).unwrap(), Monomial::new(vec![3, 0]));
        let o = TermOrder::weight(vec![0, 1], TermOrder::GrevLex);
        assert_eq!(f.leading_monomial(&o).unwrap(), Monomial::new(vec![0, 3]));
    }

    #[test]
    fn homogeneity() {
        assert!(poly_from_int_terms(2, &[(&[3, 0], 1), (&[1, 2], 4)]).is_homogeneous());
        assert!(!poly_from_int_terms(2, &[(&[3, 0], 1), (&[1, 1], 4)]).is_homogeneous());
        assert!(Polynomial::zero(2).is_homogeneous());
    }

    #[test]
    fn substitution_and_evaluation() {
        // f = x^2 under x -> x + y becomes x^2 + 2xy + y^2.
        let f = poly_from_int_terms(2, &[(&[2, 0], 1)]);
        let m = vec![
            vec![rationalize(1), rationalize(1)],
            vec![rationalize(0), rationalize(1)],
        ];
        let g = f.substitute_linear(&m).unwrap();
        assert_eq!(g, poly_from_int_terms(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]));
        let v = g.eval(&[rationalize(1), rationalize(2)]);
        assert_eq!(v, rationalize(9));
    }

    #[test]
    fn set_variable_specializes() {
        // f = t^2 x + t y + x at t = 1 gives 2x + y (t is variable 2).
        let f = poly_from_int_terms(3, &[(&[1, 0, 2], 1), (&[0, 1, 1], 1), (&[1, 0, 0], 1)]);
        let g = f.set_variable(2, &rationalize(1));
        assert_eq!(g, poly_from_int_terms(3, &[(&[1, 0, 0], 2), (&[0, 1, 0], 1)]));
        let h = g.shrink_arity(2).unwrap();
        assert_eq!(h, poly_from_int_terms(2, &[(&[1, 0], 2), (&[0, 1], 1)]));
    }

    fn rationalize(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn display_is_readable() {
        let f = poly_from_int_terms(2, &[(&[3, 0], 1), (&[1, 2], -2), (&[0, 0], 1)]);
        assert_eq!(format!("{f}"), "x1^3 - 2*x1*x2^2 + 1");
    }
}
