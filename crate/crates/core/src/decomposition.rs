//! Irreducible decomposition of monomial ideals, minimal primes, height, and
//! J-symbolic powers by component deletion.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::monomial::{Exponent, Monomial, MonomialIdeal};

/// An irreducible monomial ideal: generated by pure powers x_i^{a_i} over its
/// support. Empty support represents the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleComponent {
    /// Exponent per variable; 0 means the variable is absent.
    powers: Vec<Exponent>,
}

impl IrreducibleComponent {
    pub fn new(powers: Vec<Exponent>) -> Self {
        IrreducibleComponent { powers }
    }

    pub fn arity(&self) -> usize {
        self.powers.len()
    }

    pub fn support(&self) -> Vec<usize> {
        self.powers.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn powers(&self) -> &[Exponent] {
        &self.powers
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let arity = self.powers.len();
        let gens = self
            .powers
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let mut exps = vec![0; arity];
                exps[i] = e;
                Monomial::new(exps)
            })
            .collect();
        MonomialIdeal::from_gens(arity, gens).expect("pure powers have matching arity")
    }

    /// Does the radical (the prime on this support) contain the ideal J?
    /// True iff every generator of J involves a support variable.
    pub fn radical_contains(&self, j: &MonomialIdeal) -> Result<bool> {
        if j.arity() != self.arity() {
            return Err(Error::ArityMismatch { left: self.arity(), right: j.arity() });
        }
        Ok(j.gens().iter().all(|g| g.support().any(|i| self.powers[i] > 0)))
    }
}

/// An irredundant irreducible decomposition.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub source: MonomialIdeal,
    pub components: Vec<IrreducibleComponent>,
}

impl Decomposition {
    /// Intersection of all components; must equal the source.
    pub fn intersection(&self) -> Result<MonomialIdeal> {
        intersect_components(self.source.arity(), &self.components)
    }
}

fn intersect_components(arity: usize, comps: &[IrreducibleComponent]) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(arity);
    for c in comps {
        acc = acc.intersect(&c.to_ideal())?;
    }
    Ok(acc)
}

/// Irreducible decomposition by generator splitting: a generator with two or
/// more support variables factors as g1*g2 with coprime parts, and
/// (I', g1 g2) = (I', g1) ∩ (I', g2). Recursion splits the canonically first
/// such generator, peeling off its first variable's pure power.
pub fn irreducible_decomposition(ideal: &MonomialIdeal, caps: &Caps) -> Result<Decomposition> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let arity = ideal.arity();
    let mut done: Vec<IrreducibleComponent> = Vec::new();
    let mut stack: Vec<MonomialIdeal> = vec![ideal.clone()];
    while let Some(current) = stack.pop() {
        if done.len() + stack.len() > caps.max_components {
            return Err(Error::ResourceCap { what: "decomposition components", limit: caps.max_components });
        }
        match current.gens().iter().find(|g| g.support_size() >= 2) {
            None => {
                // All generators are pure powers: irreducible (or unit).
                let mut powers = vec![0; arity];
                for g in current.gens() {
                    if let Some(i) = g.support().next() {
                        powers[i] = g.exponent(i);
                    }
                }
                done.push(IrreducibleComponent::new(powers));
            }
            Some(g) => {
                let split_var = g.support().next().expect("support size >= 2");
                let mut pure = vec![0; arity];
                pure[split_var] = g.exponent(split_var);
                let mut rest_exps = g.exponents().to_vec();
                rest_exps[split_var] = 0;

                let others: Vec<Monomial> = current.gens().iter().filter(|h| *h != g).cloned().collect();
                let mut left = others.clone();
                left.push(Monomial::new(pure));
                let mut right = others;
                right.push(Monomial::new(rest_exps));
                stack.push(MonomialIdeal::from_gens(arity, left)?);
                stack.push(MonomialIdeal::from_gens(arity, right)?);
            }
        }
    }
    done.sort();
    done.dedup();
    let components = remove_redundant(arity, done)?;
    Ok(Decomposition { source: ideal.clone(), components })
}

/// Drop any component containing the intersection of all others.
fn remove_redundant(arity: usize, mut comps: Vec<IrreducibleComponent>) -> Result<Vec<IrreducibleComponent>> {
    let mut i = 0;
    while i < comps.len() {
        if comps.len() == 1 {
            break;
        }
        let others: Vec<IrreducibleComponent> =
            comps.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, c)| c.clone()).collect();
        let inter = intersect_components(arity, &others)?;
        let this = comps[i].to_ideal();
        if this.contains_ideal(&inter)? {
            comps.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(comps)
}

/// Minimal associated primes (as variable index sets) and the height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalPrimes {
    /// Supports of the minimal primes, each sorted, the list sorted.
    pub primes: Vec<Vec<usize>>,
    /// Minimum support size.
    pub height: usize,
}

pub fn minimal_primes_and_height(ideal: &MonomialIdeal, caps: &Caps) -> Result<MinimalPrimes> {
    let decomp = irreducible_decomposition(ideal, caps)?;
    let mut supports: Vec<Vec<usize>> = decomp.components.iter().map(|c| c.support()).collect();
    supports.sort();
    supports.dedup();
    let minimal: Vec<Vec<usize>> = supports
        .iter()
        .filter(|s| {
            !supports.iter().any(|t| t.len() < s.len() && t.iter().all(|v| s.contains(v)))
        })
        .cloned()
        .collect();
    let height = minimal.iter().map(|s| s.len()).min().expect("nonzero proper ideal has a prime");
    Ok(MinimalPrimes { primes: minimal, height })
}

/// Height of a nonzero proper monomial ideal.
pub fn height(ideal: &MonomialIdeal, caps: &Caps) -> Result<usize> {
    Ok(minimal_primes_and_height(ideal, caps)?.height)
}

/// The n-th J-symbolic power I^(n) = I^n : J^∞, computed by the stable colon.
pub fn j_symbolic_power(ideal: &MonomialIdeal, j: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    if j.is_zero() {
        return Err(Error::ColonByZeroIdeal);
    }
    ideal.power(n)?.stable_quotient(j)
}

/// The same power obtained by deleting from an irreducible decomposition of
/// I^n every component whose radical contains J. Must agree with
/// [`j_symbolic_power`] on all inputs; kept as an independent route.
pub fn j_symbolic_power_via_components(
    ideal: &MonomialIdeal,
    j: &MonomialIdeal,
    n: u32,
    caps: &Caps,
) -> Result<MonomialIdeal> {
    if j.is_zero() {
        return Err(Error::ColonByZeroIdeal);
    }
    let power = ideal.power(n)?;
    if power.is_unit() {
        return Ok(power);
    }
    if power.is_zero() {
        return Ok(power);
    }
    let decomp = irreducible_decomposition(&power, caps)?;
    let kept: Vec<IrreducibleComponent> = decomp
        .components
        .into_iter()
        .filter_map(|c| match c.radical_contains(j) {
            Ok(true) => None,
            Ok(false) => Some(Ok(c)),
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_>>()?;
    intersect_components(ideal.arity(), &kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(exps: &[Exponent]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(arity: usize, gens: &[&[Exponent]]) -> MonomialIdeal {
        MonomialIdeal::from_gens(arity, gens.iter().map(|e| mono(e)).collect()).unwrap()
    }

    fn running_example() -> MonomialIdeal {
        ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 2], &[0, 2, 1, 0]])
    }

    #[test]
    fn decomposition_of_running_example() {
        let caps = Caps::default();
        let d = irreducible_decomposition(&running_example(), &caps).unwrap();
        let mut powers: Vec<Vec<Exponent>> =
            d.components.iter().map(|c| c.powers().to_vec()).collect();
        powers.sort();
        let mut expected = vec![
            vec![1, 0, 1, 0], // (x1, x3)
            vec![1, 2, 0, 0], // (x1, x2^2)
            vec![0, 0, 1, 2], // (x3, x4^2)
        ];
        expected.sort();
        assert_eq!(powers, expected);
        assert_eq!(d.intersection().unwrap(), running_example());
    }

    #[test]
    fn already_irreducible_is_returned_as_is() {
        let caps = Caps::default();
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let d = irreducible_decomposition(&i, &caps).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].powers(), &[2, 3]);
    }

    #[test]
    fn zero_and_unit_are_rejected() {
        let caps = Caps::default();
        assert!(matches!(
            irreducible_decomposition(&MonomialIdeal::zero(2), &caps),
            Err(Error::ZeroIdeal)
        ));
        assert!(matches!(
            irreducible_decomposition(&MonomialIdeal::unit(2), &caps),
            Err(Error::UnitIdeal)
        ));
    }

    #[test]
    fn minimal_primes_of_running_example() {
        let caps = Caps::default();
        let mp = minimal_primes_and_height(&running_example(), &caps).unwrap();
        assert_eq!(mp.primes, vec![vec![0, 1], vec![0, 2], vec![2, 3]]);
        assert_eq!(mp.height, 2);
    }

    #[test]
    fn minimal_primes_of_principal() {
        let caps = Caps::default();
        let mp = minimal_primes_and_height(&ideal(1, &[&[3]]), &caps).unwrap();
        assert_eq!(mp.primes, vec![vec![0]]);
        assert_eq!(mp.height, 1);
    }

    #[test]
    fn minimal_primes_of_edge_cycle() {
        // (xy, yz, zx): primes {x,y}, {y,z}, {x,z}, height 2.
        let caps = Caps::default();
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let mp = minimal_primes_and_height(&i, &caps).unwrap();
        assert_eq!(mp.primes, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(mp.height, 2);
    }

    #[test]
    fn j_symbolic_power_matches_component_route() {
        let caps = Caps::default();
        let i = running_example();
        let j = ideal(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        for n in 1..=2 {
            let colon = j_symbolic_power(&i, &j, n).unwrap();
            let comp = j_symbolic_power_via_components(&i, &j, n, &caps).unwrap();
            assert_eq!(colon, comp);
        }
    }

    #[test]
    fn j_symbolic_power_of_running_example_is_two_component_power() {
        let i = running_example();
        let j = ideal(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        let a = ideal(4, &[&[1, 0, 0, 0], &[0, 2, 0, 0]]);
        let b = ideal(4, &[&[0, 0, 1, 0], &[0, 0, 0, 2]]);
        for n in 1..=3 {
            let expected = a.power(n).unwrap().intersect(&b.power(n).unwrap()).unwrap();
            assert_eq!(j_symbolic_power(&i, &j, n).unwrap(), expected);
        }
    }

    #[test]
    fn prime_power_is_already_symbolic_when_j_outside() {
        // I = (x1, x2) is a complete-intersection prime; for J not inside it
        // the symbolic power equals the ordinary one.
        let caps = Caps::default();
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let j = ideal(3, &[&[0, 0, 1]]);
        let sym = j_symbolic_power(&i, &j, 3).unwrap();
        assert_eq!(sym, i.power(3).unwrap());
        assert_eq!(sym, j_symbolic_power_via_components(&i, &j, 3, &caps).unwrap());
    }
}
