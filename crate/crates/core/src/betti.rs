//! Multigraded Betti numbers of monomial ideals via upper Koszul simplicial
//! complexes, Castelnuovo-Mumford regularity, projective dimension, the
//! Cohen-Macaulay test, and the stable-ideal shortcut.
//!
//! For a monomial ideal I and a multidegree b, the upper Koszul complex
//! K^b(I) has the squarefree sets tau <= b with x^(b-tau) in I as faces, and
//! beta_{i,b}(I) = rank of the reduced homology of K^b(I) in dimension i-1.
//! Only multidegrees in the lcm lattice of the generators can contribute.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::linalg::{rank_mod_p, rank_rational, rational};
use crate::monomial::{Monomial, MonomialIdeal};

/// Coefficient field for homology ranks. Exact rationals are the default;
/// a prime field is available as a fast pre-pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomologyField {
    Rationals,
    Prime(u64),
}

/// A simplicial complex on a fixed vertex set, stored by its facets as bit
/// masks. The void complex (no faces) and the irrelevant complex { {} } are
/// distinct: the latter has the empty face as its only facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    /// Build from an arbitrary face list; keeps the maximal ones.
    pub fn from_faces(vertices: usize, faces: &[u32]) -> Self {
        assert!(vertices <= 32);
        let mut sorted: Vec<u32> = faces.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let facets: Vec<u32> = sorted
            .iter()
            .filter(|&&f| !sorted.iter().any(|&g| g != f && g & f == f))
            .copied()
            .collect();
        SimplicialComplex { vertices, facets }
    }

    pub fn void(vertices: usize) -> Self {
        SimplicialComplex { vertices, facets: Vec::new() }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn facets(&self) -> &[u32] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Only face is the empty set.
    pub fn is_irrelevant(&self) -> bool {
        self.facets == [0]
    }

    /// All faces (downward closure of the facets), sorted.
    pub fn all_faces(&self) -> Vec<u32> {
        let mut faces: BTreeSet<u32> = BTreeSet::new();
        for &f in &self.facets {
            // Enumerate all submasks of f, including 0.
            let mut sub = f;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        faces.into_iter().collect()
    }

    /// Euler characteristic of the reduced chain complex: the alternating
    /// face count with the empty face at dimension -1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.all_faces()
            .iter()
            .map(|f| if f.count_ones() % 2 == 1 { 1 } else { -1 })
            .sum()
    }
}

/// Ranks of reduced simplicial homology. Entry `i` of the returned vector is
/// the rank of the homology in dimension i-1, so the index lines up with the
/// homological index of Betti numbers: beta_{i,b} = ranks[i].
pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: HomologyField) -> Vec<usize> {
    let faces = complex.all_faces();
    if faces.is_empty() {
        return Vec::new();
    }
    let max_k = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
    let mut grouped: Vec<Vec<u32>> = vec![Vec::new(); max_k + 1];
    for &f in &faces {
        grouped[f.count_ones() as usize].push(f);
    }
    // Position lookup per group for boundary assembly.
    let index_of: Vec<BTreeMap<u32, usize>> = grouped
        .iter()
        .map(|g| g.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();

    // boundary_rank[k] = rank of the boundary map from k-subsets to (k-1)-subsets.
    let mut boundary_rank = vec![0usize; max_k + 2];
    for k in 1..=max_k {
        if grouped[k].is_empty() || grouped[k - 1].is_empty() {
            continue;
        }
        let mut rows: Vec<Vec<i64>> = vec![vec![0; grouped[k].len()]; grouped[k - 1].len()];
        for (col, &face) in grouped[k].iter().enumerate() {
            let mut sign = 1i64;
            let mut bits = face;
            while bits != 0 {
                let v = bits.trailing_zeros();
                let sub = face & !(1 << v);
                let row = index_of[k - 1][&sub];
                rows[row][col] = sign;
                sign = -sign;
                bits &= bits - 1;
            }
        }
        boundary_rank[k] = match field {
            HomologyField::Rationals => {
                let rat: Vec<Vec<BigRational>> =
                    rows.iter().map(|r| r.iter().map(|&x| rational(x)).collect()).collect();
                rank_rational(rat)
            }
            HomologyField::Prime(p) => rank_mod_p(&rows, p),
        };
    }
    (0..=max_k)
        .map(|k| grouped[k].len() - boundary_rank[k] - boundary_rank[k + 1])
        .collect()
}

/// The upper Koszul complex K^b(I): faces are the squarefree tau <= b with
/// x^(b-tau) in I.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, b: &Monomial) -> Result<SimplicialComplex> {
    let m = ideal.arity();
    if b.arity() != m {
        return Err(Error::ArityMismatch { left: m, right: b.arity() });
    }
    let support: Vec<usize> = b.support().collect();
    let mut faces = Vec::new();
    for mask in 0u32..(1 << support.len()) {
        let mut exps = b.exponents().to_vec();
        for (pos, &var) in support.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                exps[var] -= 1;
            }
        }
        if ideal.contains(&Monomial::new(exps))? {
            let mut vertex_mask = 0u32;
            for (pos, &var) in support.iter().enumerate() {
                if mask & (1 << pos) != 0 {
                    vertex_mask |= 1 << var;
                }
            }
            faces.push(vertex_mask);
        }
    }
    Ok(SimplicialComplex::from_faces(m, &faces))
}

/// The lcm lattice: all joins of nonempty generator subsets, deduplicated.
/// Built by incremental closure rather than enumerating the powerset.
pub fn lcm_lattice(ideal: &MonomialIdeal, caps: &Caps) -> Result<Vec<Monomial>> {
    let mut lattice: BTreeSet<Monomial> = ideal.gens().iter().cloned().collect();
    let mut frontier: Vec<Monomial> = lattice.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in ideal.gens() {
                let join = m.lcm(g)?;
                if lattice.insert(join.clone()) {
                    if lattice.len() > caps.max_lattice_points {
                        return Err(Error::ResourceCap {
                            what: "lcm lattice points",
                            limit: caps.max_lattice_points,
                        });
                    }
                    next.push(join);
                }
            }
        }
        frontier = next;
    }
    Ok(lattice.into_iter().collect())
}

/// The table beta_{i,b}(I) over all contributing multidegrees.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultidegreeBetti {
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl MultidegreeBetti {
    pub fn insert(&mut self, i: usize, b: Monomial, rank: usize) {
        if rank > 0 {
            self.entries.insert((i, b), rank);
        }
    }

    pub fn get(&self, i: usize, b: &Monomial) -> usize {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Monomial, usize)> {
        self.entries.iter().map(|((i, b), &r)| (*i, b, r))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti number in homological index i.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((j, _), _)| *j == i).map(|(_, &r)| r).sum()
    }

    /// reg(I) = max over nonzero entries of deg(b) - i.
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|(i, b)| b.degree() as i64 - *i as i64)
            .max()
            .expect("a nonzero ideal has beta_0 entries")
    }

    /// Largest homological index with a nonzero entry. For an ideal I this is
    /// pd(I); the quotient has pd(R/I) = pd(I) + 1.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().expect("nonzero ideal")
    }

    /// Multidegrees with nonzero entry in homological index i.
    pub fn multidegrees_at(&self, i: usize) -> Vec<(Monomial, usize)> {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|((_, b), &r)| (b.clone(), r))
            .collect()
    }
}

fn check_betti_caps(ideal: &MonomialIdeal, caps: &Caps) -> Result<()> {
    if ideal.arity() > caps.max_variables {
        return Err(Error::ResourceCap { what: "variables", limit: caps.max_variables });
    }
    if ideal.gens().len() > caps.max_generators {
        return Err(Error::ResourceCap { what: "minimal generators", limit: caps.max_generators });
    }
    Ok(())
}

/// Multigraded Betti numbers of a nonzero monomial ideal. Homology over
/// distinct multidegrees is independent; results are merged in sorted order.
pub fn multigraded_betti(
    ideal: &MonomialIdeal,
    field: HomologyField,
    caps: &Caps,
) -> Result<MultidegreeBetti> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    check_betti_caps(ideal, caps)?;
    let mut betti = MultidegreeBetti::default();
    for b in lcm_lattice(ideal, caps)? {
        let complex = upper_koszul_complex(ideal, &b)?;
        for (i, rank) in reduced_homology_ranks(&complex, field).into_iter().enumerate() {
            betti.insert(i, b.clone(), rank);
        }
    }
    Ok(betti)
}

/// reg(I) for a nonzero proper monomial ideal.
pub fn regularity_with(ideal: &MonomialIdeal, caps: &Caps) -> Result<i64> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if is_stable(ideal) {
        // Identical value, no homology needed.
        return ek_regularity(ideal).map(|r| r as i64);
    }
    Ok(multigraded_betti(ideal, HomologyField::Rationals, caps)?.regularity())
}

pub fn regularity(ideal: &MonomialIdeal) -> Result<i64> {
    regularity_with(ideal, &Caps::default())
}

/// reg(R/I) = reg(I) - 1.
pub fn regularity_of_quotient(ideal: &MonomialIdeal) -> Result<i64> {
    Ok(regularity(ideal)? - 1)
}

pub fn regularity_of_quotient_with(ideal: &MonomialIdeal, caps: &Caps) -> Result<i64> {
    Ok(regularity_with(ideal, caps)? - 1)
}

/// Independent oracle: Betti numbers from the Taylor complex on the
/// generators, multidegree by multidegree. In homological degree j the
/// complex restricted to multidegree b has the j-element generator subsets
/// with lcm equal to b as a basis, and the simplicial boundary keeps exactly
/// the terms that stay in multidegree b. Capped at 12 generators.
pub fn taylor_betti(ideal: &MonomialIdeal, field: HomologyField) -> Result<MultidegreeBetti> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens = ideal.gens();
    let r = gens.len();
    if r > 12 {
        return Err(Error::ResourceCap { what: "taylor oracle generators", limit: 12 });
    }
    // lcm of every generator subset.
    let mut subset_lcm: Vec<Monomial> = Vec::with_capacity(1 << r);
    subset_lcm.push(Monomial::one(ideal.arity()));
    for mask in 1u32..(1 << r) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let m = subset_lcm[rest as usize].lcm(&gens[low])?;
        subset_lcm.push(m);
    }
    let mut degrees: BTreeSet<Monomial> = subset_lcm.iter().skip(1).cloned().collect();
    let mut betti = MultidegreeBetti::default();
    while let Some(b) = degrees.pop_first() {
        // Subsets in multidegree b, grouped by size.
        let mut grouped: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
        for mask in 0u32..(1 << r) {
            if subset_lcm[mask as usize] == b {
                grouped[mask.count_ones() as usize].push(mask);
            }
        }
        let index_of: Vec<BTreeMap<u32, usize>> = grouped
            .iter()
            .map(|g| g.iter().enumerate().map(|(i, &f)| (f, i)).collect())
            .collect();
        let mut boundary_rank = vec![0usize; r + 2];
        for j in 1..=r {
            if grouped[j].is_empty() || grouped[j - 1].is_empty() {
                continue;
            }
            let mut rows: Vec<Vec<i64>> = vec![vec![0; grouped[j].len()]; grouped[j - 1].len()];
            for (col, &mask) in grouped[j].iter().enumerate() {
                let mut sign = 1i64;
                let mut bits = mask;
                while bits != 0 {
                    let v = bits.trailing_zeros();
                    let sub = mask & !(1 << v);
                    // Terms leaving the multidegree acquire a monomial
                    // coefficient and vanish after tensoring with the field.
                    if subset_lcm[sub as usize] == b {
                        let row = index_of[j - 1][&sub];
                        rows[row][col] = sign;
                    }
                    sign = -sign;
                    bits &= bits - 1;
                }
            }
            boundary_rank[j] = match field {
                HomologyField::Rationals => {
                    let rat: Vec<Vec<BigRational>> =
                        rows.iter().map(|row| row.iter().map(|&x| rational(x)).collect()).collect();
                    rank_rational(rat)
                }
                HomologyField::Prime(p) => rank_mod_p(&rows, p),
            };
        }
        // H_j of the quotient complex corresponds to beta_{j-1, b} of the ideal.
        for j in 1..=r {
            let h = grouped[j].len() - boundary_rank[j] - boundary_rank[j + 1];
            betti.insert(j - 1, b.clone(), h);
        }
    }
    Ok(betti)
}

/// Stability test with the variable order x_1 > x_2 > ... > x_m: for every
/// generator g and every j before the last support variable of g, the
/// exchange x_j * g / x_last must stay in the ideal.
pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    for g in ideal.gens() {
        let Some(last) = g.support().max() else { continue };
        for j in 0..last {
            let mut exps = g.exponents().to_vec();
            exps[last] -= 1;
            exps[j] += 1;
            if !ideal.contains(&Monomial::new(exps)).expect("same arity") {
                return false;
            }
        }
    }
    true
}

/// For a stable ideal, reg(I) equals the maximal generator degree; no
/// homology computation is needed. Errors on non-stable input.
pub fn ek_regularity(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !is_stable(ideal) {
        return Err(Error::NotStable);
    }
    Ok(ideal.degree_stats()?.max_gen_degree)
}
