//! Resource caps. Exceeding a cap is always a `ResourceCap` error, never a
//! silently wrong answer.

/// Limits applied by the potentially explosive computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Ambient variable count accepted by Betti/homology computations.
    pub max_variables: usize,
    /// Minimal generator count accepted by Betti/homology computations.
    pub max_generators: usize,
    /// Multidegree count in an lcm lattice.
    pub max_lattice_points: usize,
    /// Components produced by irreducible decomposition.
    pub max_components: usize,
    /// S-pairs examined by one Buchberger run.
    pub max_s_pairs: usize,
    /// Term count of any single polynomial.
    pub max_poly_terms: usize,
    /// Generator products formed by one ideal power.
    pub max_power_products: usize,
    /// Nodes visited by the Hilbert series recursion.
    pub max_hilbert_nodes: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_variables: 14,
            max_generators: 200,
            max_lattice_points: 100_000,
            max_components: 50_000,
            max_s_pairs: 1_000_000,
            max_poly_terms: 100_000,
            max_power_products: 100_000,
            max_hilbert_nodes: 1_000_000,
        }
    }
}

impl Caps {
    /// Named profiles selectable from the CLI (`--caps`) or the
    /// `CMREG_CAPS` environment variable.
    pub fn profile(name: &str) -> Option<Caps> {
        match name {
            "default" => Some(Caps::default()),
            "small" => Some(Caps {
                max_variables: 8,
                max_generators: 40,
                max_lattice_points: 5_000,
                max_components: 2_000,
                max_s_pairs: 50_000,
                max_poly_terms: 10_000,
                max_power_products: 5_000,
                max_hilbert_nodes: 50_000,
            }),
            "large" => Some(Caps {
                max_variables: 14,
                max_generators: 500,
                max_lattice_points: 1_000_000,
                max_components: 500_000,
                max_s_pairs: 10_000_000,
                max_poly_terms: 1_000_000,
                max_power_products: 1_000_000,
                max_hilbert_nodes: 10_000_000,
            }),
            _ => None,
        }
    }
}
