//! Hodge decomposition of each column `(C_{a,*}, d_0)` for the standard
//! inner product: codifferential, Laplacian, the pseudo-inverse `d_0^{-1}`
//! and the harmonic projector `Pi_0`.

use std::collections::BTreeMap;

use crate::linalg::{kernel, pseudo_inverse, Matrix, Scalar, Subspace};
use crate::multicomplex::{Bidegree, Multicomplex};

/// Hodge data of a single `C_{a,b}`.
#[derive(Clone, Debug)]
pub struct HodgeBlock {
    /// `d_0 : C_{a,b} -> C_{a,b+1}`.
    pub d0: Matrix,
    /// `d_0 : C_{a,b-1} -> C_{a,b}`.
    pub d0_in: Matrix,
    /// `delta_0 = d_0^T : C_{a,b} -> C_{a,b-1}`.
    pub delta0: Matrix,
    /// `d_0^{-1} : C_{a,b} -> C_{a,b-1}`, the pseudo-inverse of `d0_in`.
    pub d0inv: Matrix,
    /// `d_0^{-1} : C_{a,b+1} -> C_{a,b}`.
    pub d0inv_above: Matrix,
    pub box0: Matrix,
    pub pi0: Matrix,
    pub e0: Subspace,
    pub im_d0: Subspace,
    pub im_delta0: Subspace,
}

/// Harmonic decomposition `x = check + bar + hat` with `check` in `Im d_0`,
/// `bar` harmonic and `hat` in `Im delta_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeSplit {
    pub check: Vec<Scalar>,
    pub bar: Vec<Scalar>,
    pub hat: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct HodgeKit {
    blocks: BTreeMap<Bidegree, HodgeBlock>,
}

impl HodgeKit {
    pub fn build(mc: &Multicomplex) -> Self {
        let mut pinv: BTreeMap<Bidegree, Matrix> = BTreeMap::new();
        let below = |bd: Bidegree| Bidegree::new(bd.a, bd.b - 1);
        let above = |bd: Bidegree| Bidegree::new(bd.a, bd.b + 1);
        let mut pinv_at = |bd: Bidegree| -> Matrix {
            pinv.entry(bd).or_insert_with(|| pseudo_inverse(&mc.d(0, below(bd)))).clone()
        };
        let mut blocks = BTreeMap::new();
        for &bd in mc.spaces().keys() {
            let n = mc.dim(bd);
            let d0 = mc.d(0, bd);
            let d0_in = mc.d(0, below(bd));
            let delta0 = d0_in.transpose();
            let d0inv = pinv_at(bd);
            let d0inv_above = pinv_at(above(bd));
            let box0 = &(&d0_in * &delta0) + &(&d0.transpose() * &d0);
            let pi0 = &(&Matrix::identity(n) - &(&d0inv_above * &d0)) - &(&d0_in * &d0inv);
            let e0 = kernel(&d0.vstack(&delta0));
            let im_d0 = Subspace::row_space(&d0_in.transpose());
            let im_delta0 = Subspace::row_space(&d0);
            blocks.insert(
                bd,
                HodgeBlock { d0, d0_in, delta0, d0inv, d0inv_above, box0, pi0, e0, im_d0, im_delta0 },
            );
        }
        HodgeKit { blocks }
    }

    pub fn block(&self, bd: Bidegree) -> Option<&HodgeBlock> {
        self.blocks.get(&bd)
    }

    pub fn blocks(&self) -> &BTreeMap<Bidegree, HodgeBlock> {
        &self.blocks
    }

    /// Harmonic space `E_0 = ker d_0 ∩ ker delta_0` in `C_bd`.
    pub fn e0(&self, bd: Bidegree) -> Subspace {
        self.blocks.get(&bd).map_or_else(|| Subspace::zero(0), |b| b.e0.clone())
    }

    pub fn hodge_split(&self, bd: Bidegree, x: &[Scalar]) -> HodgeSplit {
        let b = &self.blocks[&bd];
        let check = b.d0_in.apply(&b.d0inv.apply(x));
        let hat = b.d0inv_above.apply(&b.d0.apply(x));
        let bar = b.pi0.apply(x);
        HodgeSplit { check, bar, hat }
    }

    /// Checks the Hodge identities on every bidegree and returns the names of
    /// failed identities, with their bidegree.
    pub fn check_invariants(&self) -> Vec<String> {
        let mut failures = Vec::new();
        for (bd, b) in &self.blocks {
            let mut fail = |name: &str| failures.push(format!("{name} at ({},{})", bd.a, bd.b));
            let n = b.pi0.rows();
            if let Some(lower) = self.blocks.get(&Bidegree::new(bd.a, bd.b - 1)) {
                if !(&lower.d0inv * &b.d0inv).is_zero() {
                    fail("(d0^-1)^2 = 0");
                }
            }
            if &b.d0_in * &b.d0inv != b.im_d0.projector() {
                fail("d0 d0^-1 = pr(Im d0)");
            }
            if &b.d0inv_above * &b.d0 != b.im_delta0.projector() {
                fail("d0^-1 d0 = pr(Im delta0)");
            }
            if &b.pi0 * &b.pi0 != b.pi0 || b.pi0.transpose() != b.pi0 {
                fail("Pi0 = Pi0^2 = Pi0^T");
            }
            if b.pi0 != b.e0.projector() || kernel(&b.box0) != b.e0 {
                fail("Pi0 = pr(ker Box0)");
            }
            let sum = b.im_d0.sum(&b.e0).sum(&b.im_delta0);
            if sum.dim() != n || b.im_d0.dim() + b.e0.dim() + b.im_delta0.dim() != n {
                fail("Im d0 + E0 + Im delta0 = C");
            }
        }
        failures
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use crate::multicomplex::Space;

    /// Column C_{0,0} -> C_{0,1} with d_0 = [1 1], harmonic dim 1 + 0.
    fn column() -> Multicomplex {
        let mut spaces = BTreeMap::new();
        let sp = |n: usize| Space { dim: n, labels: (0..n).map(|i| format!("e{i}")).collect() };
        spaces.insert(Bidegree::new(0, 0), sp(2));
        spaces.insert(Bidegree::new(0, 1), sp(1));
        let mut maps = BTreeMap::new();
        maps.insert((0, Bidegree::new(0, 0)), Matrix::from_i64(1, 2, &[1, 1]));
        Multicomplex::new(0, 1, spaces, maps, None).unwrap()
    }

    #[test]
    fn split_recovers_vector() {
        let mc = column();
        let kit = HodgeKit::build(&mc);
        assert!(kit.check_invariants().is_empty());
        let x = vec![int(3), int(1)];
        let s = kit.hodge_split(Bidegree::new(0, 0), &x);
        assert_eq!(s.hat, vec![int(2), int(2)]);
        assert_eq!(s.bar, vec![int(1), int(-1)]);
        assert!(s.check.iter().all(|c| c == &int(0)));
        assert_eq!(kit.e0(Bidegree::new(0, 1)).dim(), 0);
    }
}
