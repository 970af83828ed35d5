//! The Rumin complex `(E_0, d_c)` of a multicomplex.
//!
//! With `b = -d_0^{-1}(D - d_0)` the projector `Pi_E = Id - Pi_F`, where
//! `Pi_F = (Id-b)^{-1} d_0^{-1} D + D (Id-b)^{-1} d_0^{-1}`, gives
//! `d_c = Pi_0 D Pi_E Pi_0`. Independently, `d_c = sum_r d_c^r` with
//! `d_c^r = Pi_0 ∂_r` on `E_0`, where `∂_1 = d_1` and
//! `∂_r = d_r - sum_{j<r} d_{r-j} d_0^{-1} ∂_j`.

use std::collections::BTreeMap;

use crate::hodge::HodgeKit;
use crate::linalg::{Matrix, Subspace};
use crate::multicomplex::{
    block_diagonal, tot_block, weight_preserving, Bidegree, Multicomplex, TotLayout,
};

/// Operators of the Rumin construction in one total degree `h`.
#[derive(Clone, Debug)]
struct DegreeOps {
    layout: TotLayout,
    /// `D : Tot_h -> Tot_{h+1}`.
    d: Matrix,
    /// `d_i : Tot_h -> Tot_{h+1}` for `i = 0..=Q`.
    parts: Vec<Matrix>,
    /// `d_0^{-1} : Tot_h -> Tot_{h-1}`.
    d0inv: Matrix,
    pi0: Matrix,
    /// `∂_r`, index `r = 1..=Q` (entry 0 unused, kept as `d_0`).
    partial: Vec<Matrix>,
    /// `d_c^r = Pi_0 ∂_r Pi_0`, same indexing.
    dc_parts: Vec<Matrix>,
    dc: Matrix,
    dc_route_i: Matrix,
    pi_e: Matrix,
}

#[derive(Clone, Debug)]
pub struct Rumin {
    mc: Multicomplex,
    kit: HodgeKit,
    lo: i64,
    hi: i64,
    ops: BTreeMap<i64, DegreeOps>,
}

/// Outcome of the identities verified on a Rumin construction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RuminChecks {
    pub failures: Vec<String>,
}

impl RuminChecks {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Rumin {
    pub fn build(mc: &Multicomplex) -> Self {
        let kit = HodgeKit::build(mc);
        let (lo, hi) = mc.degree_range().unwrap_or((0, -1));
        let q = mc.q() as usize;
        let n_terms = mc.nilpotency();
        let range = (lo - 1)..=(hi + 1);

        let layouts: BTreeMap<i64, TotLayout> =
            ((lo - 2)..=(hi + 2)).map(|h| (h, mc.layout(h))).collect();
        let blk = |bd: Bidegree| kit.block(bd);
        let mut d0inv = BTreeMap::new();
        let mut pi0 = BTreeMap::new();
        for h in (lo - 1)..=(hi + 2) {
            let (src, tgt) = (&layouts[&h], &layouts[&(h - 1)]);
            d0inv.insert(
                h,
                weight_preserving(src, tgt, |a| blk(Bidegree::at(a, h)).expect("block").d0inv.clone()),
            );
            pi0.insert(h, block_diagonal(src, |a| blk(Bidegree::at(a, h)).expect("block").pi0.clone()));
        }

        let mut ops = BTreeMap::new();
        let mut nb: BTreeMap<i64, Matrix> = BTreeMap::new();
        for h in (lo - 2)..=(hi + 1) {
            let d = mc.tot_d(h);
            let d0 = mc.tot_component(0, h);
            if !d0inv.contains_key(&(h + 1)) {
                continue;
            }
            let b = -&(&d0inv[&(h + 1)] * &(&d - &d0));
            let n = layouts[&h].dim;
            let mut sum = Matrix::identity(n);
            let mut pow = Matrix::identity(n);
            for _ in 1..n_terms {
                pow = &pow * &b;
                if pow.is_zero() {
                    break;
                }
                sum = &sum + &pow;
            }
            nb.insert(h, sum);
        }

        for h in range {
            let layout = layouts[&h].clone();
            let d = mc.tot_d(h);
            let parts: Vec<Matrix> = (0..=q).map(|i| mc.tot_component(i, h)).collect();
            let inv_up = &d0inv[&(h + 1)];
            let mut partial = vec![parts[0].clone()];
            for r in 1..=q {
                let mut p = parts[r].clone();
                for j in 1..r {
                    p = &p - &(&(&parts[r - j] * inv_up) * &partial[j]);
                }
                partial.push(p);
            }
            let (pi_lo, pi_up) = (&pi0[&h], &pi0[&(h + 1)]);
            let dc_parts: Vec<Matrix> = partial.iter().map(|p| &(pi_up * p) * pi_lo).collect();
            let mut dc = Matrix::zeros(layouts[&(h + 1)].dim, layout.dim);
            for p in dc_parts.iter().skip(1) {
                dc = &dc + p;
            }
            let pi_f = &(&(&nb[&h] * inv_up) * &d) + &(&(&mc.tot_d(h - 1) * &nb[&(h - 1)]) * &d0inv[&h]);
            let pi_e = &Matrix::identity(layout.dim) - &pi_f;
            let dc_route_i = &(&(pi_up * &d) * &pi_e) * pi_lo;
            ops.insert(
                h,
                DegreeOps {
                    layout,
                    d,
                    parts,
                    d0inv: d0inv[&h].clone(),
                    pi0: pi_lo.clone(),
                    partial,
                    dc_parts,
                    dc,
                    dc_route_i,
                    pi_e,
                },
            );
        }
        Rumin { mc: mc.clone(), kit, lo, hi, ops }
    }

    pub fn multicomplex(&self) -> &Multicomplex {
        &self.mc
    }

    pub fn hodge(&self) -> &HodgeKit {
        &self.kit
    }

    /// Range of total degrees with nonzero spaces.
    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    /// Largest order `r` with a possibly nonzero `d_c^r`.
    pub fn max_order(&self) -> usize {
        self.mc.q() as usize
    }

    pub fn layout(&self, h: i64) -> TotLayout {
        self.ops.get(&h).map_or_else(|| self.mc.layout(h), |o| o.layout.clone())
    }

    pub fn space_dim(&self, p: i64, k: i64) -> usize {
        self.mc.dim(Bidegree::at(p, k))
    }

    /// Harmonic space at weight `p`, degree `k`, inside `C_{p,k-p}`.
    pub fn e0(&self, p: i64, k: i64) -> Subspace {
        match self.kit.block(Bidegree::at(p, k)) {
            Some(b) => b.e0.clone(),
            None => Subspace::zero(0),
        }
    }

    /// Image of `d_0` inside `C_{p,k-p}`.
    pub fn im_d0(&self, p: i64, k: i64) -> Subspace {
        match self.kit.block(Bidegree::at(p, k)) {
            Some(b) => b.im_d0.clone(),
            None => Subspace::zero(0),
        }
    }

    pub fn pi0_block(&self, p: i64, k: i64) -> Matrix {
        match self.kit.block(Bidegree::at(p, k)) {
            Some(b) => b.pi0.clone(),
            None => Matrix::zeros(0, 0),
        }
    }

    fn op_block(&self, op: impl Fn(&DegreeOps) -> &Matrix, p: i64, k: i64, q: i64) -> Matrix {
        let src = self.layout(k);
        let tgt = self.layout(k + 1);
        match self.ops.get(&k) {
            Some(o) => tot_block(op(o), &src, p, &tgt, q),
            None => Matrix::zeros(
                self.space_dim(q, k + 1),
                self.space_dim(p, k),
            ),
        }
    }

    /// `d_i : C_{p,k-p} -> C_{p+i,k+1-p-i}`.
    pub fn d_block(&self, i: usize, p: i64, k: i64) -> Matrix {
        self.mc.d(i, Bidegree::at(p, k))
    }

    /// `d_c^r` from weight `p`, degree `k`; zero outside `E_0`.
    pub fn dc_block(&self, r: usize, p: i64, k: i64) -> Matrix {
        if r == 0 || r > self.max_order() {
            return Matrix::zeros(self.space_dim(p + r as i64, k + 1), self.space_dim(p, k));
        }
        self.op_block(|o| &o.dc_parts[r], p, k, p + r as i64)
    }

    /// `∂_r` from weight `p`, degree `k`.
    pub fn partial_block(&self, r: usize, p: i64, k: i64) -> Matrix {
        self.op_block(|o| &o.partial[r], p, k, p + r as i64)
    }

    /// `d_c : E_0^k -> E_0^{k+1}` as an operator `Tot_k -> Tot_{k+1}`.
    pub fn dc(&self, k: i64) -> Matrix {
        match self.ops.get(&k) {
            Some(o) => o.dc.clone(),
            None => Matrix::zeros(self.layout(k + 1).dim, self.layout(k).dim),
        }
    }

    /// `d_c` computed as `Pi_0 D Pi_E Pi_0`.
    pub fn dc_via_projector(&self, k: i64) -> Matrix {
        match self.ops.get(&k) {
            Some(o) => o.dc_route_i.clone(),
            None => Matrix::zeros(self.layout(k + 1).dim, self.layout(k).dim),
        }
    }

    pub fn pi_e(&self, k: i64) -> Option<&Matrix> {
        self.ops.get(&k).map(|o| &o.pi_e)
    }

    pub fn e0_total_dim(&self, k: i64) -> usize {
        self.layout(k).blocks.iter().map(|b| self.e0(b.a, k).dim()).sum()
    }

    /// `dim H^k(E_0, d_c)` for every degree.
    pub fn cohomology(&self) -> BTreeMap<i64, usize> {
        self.degrees()
            .map(|k| {
                let dim = self.e0_total_dim(k);
                (k, dim - self.dc(k).rank() - self.dc(k - 1).rank())
            })
            .collect()
    }

    /// Verifies the projector identities, agreement of the two `d_c`
    /// constructions, `d_c^2 = 0`, the closed form of `∂_3`, the `d_0 ∂_r`
    /// formula and equality of Rumin and total cohomology.
    pub fn check(&self) -> RuminChecks {
        let mut failures = self.kit.check_invariants();
        let q = self.max_order();
        for k in self.degrees() {
            let o = &self.ops[&k];
            let next = &self.ops[&(k + 1)];
            let prev = &self.ops[&(k - 1)];
            let mut fail = |name: &str| failures.push(format!("{name} in degree {k}"));
            if &o.pi_e * &o.pi_e != o.pi_e {
                fail("Pi_E^2 = Pi_E");
            }
            if !(&o.d0inv * &o.pi_e).is_zero() || !(&prev.pi_e * &o.d0inv).is_zero() {
                fail("d0^-1 Pi_E = Pi_E d0^-1 = 0");
            }
            if &o.d * &o.pi_e != &next.pi_e * &o.d {
                fail("D Pi_E = Pi_E D");
            }
            if &(&o.pi0 * &o.pi_e) * &o.pi0 != o.pi0 {
                fail("Pi0 Pi_E Pi0 = Pi0");
            }
            if &(&o.pi_e * &o.pi0) * &o.pi_e != o.pi_e {
                fail("Pi_E Pi0 Pi_E = Pi_E");
            }
            if o.dc != o.dc_route_i {
                fail("d_c routes agree");
            }
            if !(&next.dc * &o.dc).is_zero() {
                fail("d_c^2 = 0");
            }
            let inv_up = &next.d0inv;
            if q >= 3 {
                let p = &o.parts;
                let closed = &(&(&p[3] - &(&(&p[2] * inv_up) * &p[1])) - &(&(&p[1] * inv_up) * &p[2]))
                    + &(&(&(&(&p[1] * inv_up) * &p[1]) * inv_up) * &p[1]);
                if closed != o.partial[3] {
                    fail("closed form of ∂_3");
                }
            }
            let d0_next = &next.parts[0];
            let proj_im = &o.parts[0] * inv_up;
            for r in 1..=q {
                let lhs = &(d0_next * &o.partial[r]) * &o.pi0;
                let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
                for i in 1..r {
                    let inner = &o.partial[r - i] - &(&proj_im * &o.partial[r - i]);
                    rhs = &rhs - &(&(&next.parts[i] * &inner) * &o.pi0);
                }
                if lhs != rhs {
                    fail(&format!("d0 ∂_{r} formula"));
                }
            }
        }
        if self.cohomology() != self.mc.total_cohomology() {
            failures.push("H(E0, d_c) = H(Tot, D)".to_string());
        }
        RuminChecks { failures }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_conjugated_multicomplex, RandomParams};

    #[test]
    fn random_instances_pass_all_identities() {
        let p = RandomParams::default();
        for seed in 0..15 {
            let inst = random_conjugated_multicomplex(seed, &p);
            let r = Rumin::build(&inst.multicomplex);
            let c = r.check();
            assert!(c.ok(), "seed {seed}: {:?}", c.failures);
            assert_eq!(r.cohomology(), inst.total_cohomology());
        }
    }

    #[test]
    fn pure_d0_has_zero_dc() {
        let p = RandomParams { max_shift: 0, mix: false, ..RandomParams::default() };
        let inst = random_conjugated_multicomplex(5, &p);
        let r = Rumin::build(&inst.multicomplex);
        for k in r.degrees() {
            assert!(r.dc(k).is_zero());
        }
    }
}
