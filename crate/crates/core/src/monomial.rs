//! Monomials and monomial ideals with exact combinatorial arithmetic.
//!
//! A `MonomialIdeal` always stores its canonical minimal generating set: an
//! antichain under divisibility, sorted by (degree, then graded-reverse-lex),
//! so structural equality coincides with ideal equality.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent of a single variable. Checked arithmetic everywhere: powers up to
/// n * maxdeg must fit, and overflow is an error rather than a silent wrap.
pub type Exponent = u32;

/// A monomial x_0^{e_0} ... x_{m-1}^{e_{m-1}} in a ring of fixed arity m.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<Exponent>,
}

impl Monomial {
    pub fn new(exps: Vec<Exponent>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial 1.
    pub fn one(arity: usize) -> Self {
        Monomial { exps: vec![0; arity] }
    }

    /// The single variable x_i.
    pub fn variable(i: usize, arity: usize) -> Self {
        assert!(i < arity, "variable index out of range");
        let mut exps = vec![0; arity];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn exponent(&self, i: usize) -> Exponent {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    fn check_arity(&self, other: &Monomial) -> Result<()> {
        if self.arity() == other.arity() {
            Ok(())
        } else {
            Err(Error::ArityMismatch { left: self.arity(), right: other.arity() })
        }
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn checked_pow(&self, n: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(n).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if divisor.arity() != self.arity() || !divisor.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&divisor.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Ok(Monomial { exps })
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_arity(other)?;
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Ok(Monomial { exps })
    }

    /// Canonical comparison: total degree first, then graded-reverse-lex
    /// (later variables weigh against a monomial). Any fixed total order
    /// would do; this one groups generators by degree for readable output.
    pub fn cmp_canonical(&self, other: &Monomial) -> Ordering {
        debug_assert_eq!(self.arity(), other.arity());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {
                for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                    match b.cmp(a) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }

    /// Render with the given variable names, e.g. `x1*x3^2`.
    pub fn format_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 1 {
                parts.push(names[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", names[i], e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

pub(crate) fn default_names(arity: usize) -> Vec<String> {
    (1..=arity).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&default_names(self.arity())))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_canonical(other)
    }
}

/// Max generator degree and lcm of a nonzero monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    /// Maximum degree among the minimal generators.
    pub max_gen_degree: u64,
    /// Componentwise exponent maximum over the generators.
    pub lcm: Monomial,
}

impl DegreeStats {
    pub fn lcm_degree(&self) -> u64 {
        self.lcm.degree()
    }
}

/// A monomial ideal, held as its sorted minimal generating antichain.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    arity: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The zero ideal (no generators).
    pub fn zero(arity: usize) -> Self {
        MonomialIdeal { arity, gens: Vec::new() }
    }

    /// The unit ideal (generated by 1).
    pub fn unit(arity: usize) -> Self {
        MonomialIdeal { arity, gens: vec![Monomial::one(arity)] }
    }

    /// Minimalize an arbitrary generating set: keep the divisibility-minimal
    /// elements, sort canonically. The generated ideal is unchanged.
    pub fn from_gens(arity: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.arity() != arity {
                return Err(Error::ArityMismatch { left: arity, right: g.arity() });
            }
        }
        Ok(Self::minimalize_sorted(arity, gens))
    }

    fn minimalize_sorted(arity: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort();
        gens.dedup();
        // After sorting by degree, a divisor always precedes its multiples.
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal { arity, gens: minimal }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    fn check_arity(&self, other: &MonomialIdeal) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch { left: self.arity, right: other.arity })
        }
    }

    /// Membership: true iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.arity() != self.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: m.arity() });
        }
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// Ideal containment: other ⊆ self.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_arity(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Product ideal I*J (pairwise generator products, minimalized).
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                prods.push(f.checked_mul(g)?);
            }
        }
        Ok(Self::minimalize_sorted(self.arity, prods))
    }

    /// I^n by repeated product with intermediate minimalization; I^0 is the
    /// unit ideal, and 0^n = 0 for n >= 1.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        if n == 0 {
            return Ok(Self::unit(self.arity));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Intersection: pairwise lcms of generators, minimalized.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                lcms.push(f.lcm(g)?);
            }
        }
        Ok(Self::minimalize_sorted(self.arity, lcms))
    }

    /// Colon by a single monomial: I : g = ({ lcm(f,g)/g : f in gens }).
    pub fn quotient_by_monomial(&self, g: &Monomial) -> Result<MonomialIdeal> {
        if g.arity() != self.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: g.arity() });
        }
        let quots = self
            .gens
            .iter()
            .map(|f| {
                let l = f.lcm(g)?;
                Ok(l.checked_div(g).expect("lcm is divisible by its factor"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::minimalize_sorted(self.arity, quots))
    }

    /// Colon ideal I : J = ∩_{g in gens(J)} (I : g). J must be nonzero.
    pub fn quotient(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other)?;
        if other.is_zero() {
            return Err(Error::ColonByZeroIdeal);
        }
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.gens {
            let q = self.quotient_by_monomial(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("nonzero ideal has a generator"))
    }

    /// Stable colon I : J^∞, the fixed point of repeated colon by J. Equals
    /// the intersection of the primary components of I whose associated
    /// primes do not contain J.
    pub fn stable_quotient(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut current = self.clone();
        loop {
            let next = current.quotient(other)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Max generator degree and generator lcm. Errors on the zero ideal.
    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let max_gen_degree = self.gens.iter().map(|g| g.degree()).max().unwrap();
        let mut lcm = Monomial::one(self.arity);
        for g in &self.gens {
            lcm = lcm.lcm(g)?;
        }
        Ok(DegreeStats { max_gen_degree, lcm })
    }

    /// The irrelevant ideal (x_1, ..., x_m).
    pub fn irrelevant(arity: usize) -> Self {
        let gens = (0..arity).map(|i| Monomial::variable(i, arity)).collect();
        MonomialIdeal { arity, gens }
    }

    /// Render with default variable names.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let body = self.gens.iter().map(|g| g.format_with(names)).collect::<Vec<_>>().join(", ");
        format!("({body})")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&default_names(self.arity)))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn mono(exps: &[Exponent]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(arity: usize, gens: &[&[Exponent]]) -> MonomialIdeal {
        MonomialIdeal::from_gens(arity, gens.iter().map(|e| mono(e)).collect()).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        // {x^2, x^3, xy} -> {x^2, xy}
        let i = ideal(2, &[&[2, 0], &[3, 0], &[1, 1]]);
        assert_eq!(i.gens(), &[mono(&[2, 0]), mono(&[1, 1])]);
    }

    #[test]
    fn minimalize_empty_is_zero() {
        let i = MonomialIdeal::from_gens(3, vec![]).unwrap();
        assert!(i.is_zero());
        assert!(!i.is_unit());
    }

    #[test]
    fn unit_and_zero_are_distinguished() {
        assert!(MonomialIdeal::unit(2).is_unit());
        assert!(MonomialIdeal::zero(2).is_zero());
        assert_ne!(MonomialIdeal::unit(2), MonomialIdeal::zero(2));
    }

    #[test]
    fn power_of_maximal_ideal() {
        // (x,y)^2 = (x^2, xy, y^2)
        let m = MonomialIdeal::irrelevant(2);
        let sq = m.power(2).unwrap();
        assert_eq!(sq, ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
    }

    #[test]
    fn power_zero_is_unit() {
        let i = ideal(2, &[&[1, 0]]);
        assert!(i.power(0).unwrap().is_unit());
    }

    #[test]
    fn power_of_principal() {
        // (x^3)^4 = (x^12)
        let i = ideal(1, &[&[3]]);
        assert_eq!(i.power(4).unwrap(), ideal(1, &[&[12]]));
    }

    #[test]
    fn intersect_principal() {
        // (x) ∩ (y) = (xy)
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(2, &[&[1, 1]]));
    }

    #[test]
    fn triple_intersection_from_components() {
        // (x1,x2^2) ∩ (x3,x4^2) ∩ (x1,x3) = (x1x3, x1x4^2, x2^2x3)
        let a = ideal(4, &[&[1, 0, 0, 0], &[0, 2, 0, 0]]);
        let b = ideal(4, &[&[0, 0, 1, 0], &[0, 0, 0, 2]]);
        let c = ideal(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        let i = a.intersect(&b).unwrap().intersect(&c).unwrap();
        let expected = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 2], &[0, 2, 1, 0]]);
        assert_eq!(i, expected);
    }

    #[test]
    fn quotient_by_variable() {
        // (x^2 y) : (y) = (x^2)
        let i = ideal(2, &[&[2, 1]]);
        let j = ideal(2, &[&[0, 1]]);
        assert_eq!(i.quotient(&j).unwrap(), ideal(2, &[&[2, 0]]));
    }

    #[test]
    fn quotient_by_generator_is_unit() {
        let i = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 2], &[0, 2, 1, 0]]);
        let j = ideal(4, &[&[1, 0, 1, 0]]);
        assert!(i.quotient(&j).unwrap().is_unit());
    }

    #[test]
    fn quotient_by_zero_errors() {
        let i = ideal(2, &[&[1, 0]]);
        assert_eq!(i.quotient(&MonomialIdeal::zero(2)), Err(Error::ColonByZeroIdeal));
    }

    #[test]
    fn stable_quotient_reaches_component_intersection() {
        // I = (x1x3, x1x4^2, x2^2x3), J = (x1,x3):
        // I : J^∞ = (x1,x2^2) ∩ (x3,x4^2)
        let i = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 2], &[0, 2, 1, 0]]);
        let j = ideal(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        let a = ideal(4, &[&[1, 0, 0, 0], &[0, 2, 0, 0]]);
        let b = ideal(4, &[&[0, 0, 1, 0], &[0, 0, 0, 2]]);
        assert_eq!(i.stable_quotient(&j).unwrap(), a.intersect(&b).unwrap());
    }

    #[test]
    fn stable_quotient_of_prime_by_itself_is_unit() {
        let p = ideal(2, &[&[1, 0], &[0, 1]]);
        assert!(p.stable_quotient(&p).unwrap().is_unit());
    }

    #[test]
    fn degree_stats_of_running_example() {
        let i = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 2], &[0, 2, 1, 0]]);
        let stats = i.degree_stats().unwrap();
        assert_eq!(stats.max_gen_degree, 3);
        assert_eq!(stats.lcm, mono(&[1, 2, 1, 2]));
        assert_eq!(stats.lcm_degree(), 6);
    }

    #[test]
    fn degree_stats_zero_errors() {
        assert_eq!(MonomialIdeal::zero(2).degree_stats(), Err(Error::ZeroIdeal));
    }

    #[test]
    fn membership() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(i.contains(&mono(&[2, 1])).unwrap());
        assert!(!i.contains(&mono(&[0, 3])).unwrap());
    }

    #[test]
    fn arity_mismatch_rejected() {
        let i = ideal(2, &[&[1, 0]]);
        assert!(matches!(i.contains(&mono(&[1, 0, 0])), Err(Error::ArityMismatch { .. })));
        let j = ideal(3, &[&[1, 0, 0]]);
        assert!(matches!(i.intersect(&j), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn exponent_overflow_is_an_error() {
        let big = Monomial::new(vec![Exponent::MAX]);
        assert_eq!(big.checked_mul(&big), Err(Error::ExponentOverflow));
        assert_eq!(big.checked_pow(2), Err(Error::ExponentOverflow));
    }

    #[test]
    fn canonical_order_groups_by_degree() {
        let mut gens = vec![mono(&[0, 2]), mono(&[1, 0]), mono(&[2, 0]), mono(&[1, 1])];
        gens.sort();
        assert_eq!(gens, vec![mono(&[1, 0]), mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])]);
    }

    #[test]
    fn display_uses_default_names() {
        let i = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 2]]);
        assert_eq!(format!("{i}"), "(x1*x3, x1*x4^2)");
        assert_eq!(format!("{}", MonomialIdeal::unit(2)), "(1)");
    }
}
