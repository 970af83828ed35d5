//! Fixtures shared by the engine benches.

use multispec::carnot::{catalog, polynomial_derham};
use multispec::random::{random_conjugated_multicomplex, RandomParams};
use multispec::Multicomplex;

/// Truncated polynomial de Rham multicomplex of the Engel algebra.
pub fn engel(poly_degree: u32) -> Multicomplex {
    polynomial_derham(&catalog("engel", poly_degree).expect("engel is in the catalog")).expect("engel builds")
}

/// A mixed random instance with pages up to `E_4`.
pub fn random(seed: u64) -> Multicomplex {
    let params = RandomParams { q: 5, max_shift: 4, pieces: 8, max_total_dim: 32, ..Default::default() };
    random_conjugated_multicomplex(seed, &params).multicomplex
}
