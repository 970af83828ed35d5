//! Hodge star on exterior-algebra multicomplexes and the duality checks.
//!
//! The basis vector `f ⊗ θ_I` is sent to `ε(I, I^c) f ⊗ θ_{I^c}`, where
//! `ε(I, I^c)` is the sign of the shuffle putting `I` followed by `I^c` in
//! increasing order. With the volume `θ_1 ∧ … ∧ θ_n` this gives
//! `α ∧ ⋆β = ⟨α, β⟩ vol` on monomials.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::carnot::parse_form_label;
use crate::linalg::{int, Matrix, Subspace};
use crate::multicomplex::{Bidegree, Multicomplex};
use crate::rumin::Rumin;
use crate::spectral::Spectral;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StarError {
    #[error("the multicomplex carries no exterior-algebra structure")]
    NoExterior,
    #[error("label {0:?} is not of the form <coef>|t1^t2")]
    Label(String),
    #[error("no dual basis vector for {label:?} at weight {a}, degree {k}")]
    Missing { label: String, a: i64, k: i64 },
}

pub struct StarKit {
    n: usize,
    q: i64,
    star: BTreeMap<Bidegree, Matrix>,
}

fn shuffle_sign(idx: &[usize]) -> i64 {
    let inversions: usize = idx
        .iter()
        .map(|&i| (0..i).filter(|j| !idx.contains(j)).count())
        .sum();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl StarKit {
    pub fn build(mc: &Multicomplex) -> Result<Self, StarError> {
        let ext = mc.exterior().ok_or(StarError::NoExterior)?;
        let n = ext.generator_weights.len();
        let q: i64 = ext.generator_weights.iter().sum();
        let mut index: HashMap<(Bidegree, String, Vec<usize>), usize> = HashMap::new();
        for (&bd, sp) in mc.spaces() {
            for (pos, l) in sp.labels.iter().enumerate() {
                let (coef, idx) = parse_form_label(l).ok_or_else(|| StarError::Label(l.clone()))?;
                index.insert((bd, coef, idx), pos);
            }
        }
        let mut star = BTreeMap::new();
        for (&bd, sp) in mc.spaces() {
            let k = bd.degree();
            let tgt = Bidegree::at(q - bd.a, n as i64 - k);
            let mut m = Matrix::zeros(mc.dim(tgt), sp.dim);
            for (col, l) in sp.labels.iter().enumerate() {
                let (coef, idx) = parse_form_label(l).ok_or_else(|| StarError::Label(l.clone()))?;
                let comp: Vec<usize> = (0..n).filter(|i| !idx.contains(i)).collect();
                let row = index.get(&(tgt, coef, comp)).ok_or_else(|| StarError::Missing {
                    label: l.clone(),
                    a: tgt.a,
                    k: tgt.degree(),
                })?;
                m.set(*row, col, int(shuffle_sign(&idx)));
            }
            star.insert(bd, m);
        }
        Ok(StarKit { n, q, star })
    }

    /// Top degree.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Weight of the volume form.
    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn dual(&self, p: i64, k: i64) -> (i64, i64) {
        (self.q - p, self.n as i64 - k)
    }

    /// `⋆ : C_{p,k-p} -> C_{Q-p, n-k-Q+p}`.
    pub fn star(&self, p: i64, k: i64) -> Matrix {
        self.star.get(&Bidegree::at(p, k)).cloned().unwrap_or_else(|| Matrix::zeros(0, 0))
    }

    fn adjoint_sign(&self, k: i64) -> i64 {
        if (self.n as i64 * (k + 1) + 1).rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// `(-1)^{n(k+1)+1} ⋆ op ⋆` on `C_{p,k-p}`, for `op` of order `i` given
    /// as a block function `(p, k) -> Matrix`.
    fn conjugate(&self, i: usize, p: i64, k: i64, op: impl Fn(i64, i64) -> Matrix) -> Matrix {
        let (dp, dk) = self.dual(p, k);
        let inner = op(dp, dk);
        let outer = self.star(dp + i as i64, dk + 1);
        let m = &(&outer * &inner) * &self.star(p, k);
        m.scale(&int(self.adjoint_sign(k)))
    }

    pub fn check(&self, mc: &Multicomplex, rumin: Option<&Rumin>) -> StarReport {
        let mut report = StarReport::default();
        let s = mc.s();
        for &bd in self.star.keys() {
            let (p, k) = (bd.a, bd.degree());
            let (dp, dk) = self.dual(p, k);
            let sign = if (k * (self.n as i64 - k)) % 2 == 0 { 1 } else { -1 };
            let st = self.star(p, k);
            let twice = &self.star(dp, dk) * &st;
            if twice != Matrix::identity(st.cols()).scale(&int(sign)) {
                report.star_squared.push((p, k));
            }
            if &st.transpose() * &st != Matrix::identity(st.cols()) {
                report.isometry.push((p, k));
            }
            for i in 0..s {
                let target = Bidegree::at(p - i as i64, k - 1);
                let transpose = mc.d(i, target).transpose();
                let conj = self.conjugate(i, p, k, |a, h| mc.d(i, Bidegree::at(a, h)));
                if transpose.shape() == conj.shape() && transpose != conj {
                    report.delta.push((i, p, k));
                }
            }
            if let Some(r) = rumin {
                for i in 1..=r.max_order() {
                    let transpose = r.dc_block(i, p - i as i64, k - 1).transpose();
                    let conj = self.conjugate(i, p, k, |a, h| r.dc_block(i, a, h));
                    if transpose.shape() == conj.shape() && transpose != conj {
                        report.delta_c.push((i, p, k));
                    }
                }
                let e0 = r.e0(p, k);
                if self.image(p, k, &e0) != r.e0(dp, dk) {
                    report.e0_closure.push((p, k));
                }
            }
        }
        report
    }

    /// `⋆ S` for a subspace `S ⊆ C_{p,k-p}`.
    pub fn image(&self, p: i64, k: i64, s: &Subspace) -> Subspace {
        let st = self.star(p, k);
        if st.cols() == 0 {
            return Subspace::zero(st.rows());
        }
        s.image_under(&st)
    }

    /// Compares `⋆ E_{r1,r2}^{p}` with `E_{r2,r1}^{Q-p}` at the given
    /// `(r1, r2, p, k)`.
    pub fn check_stations(
        &self,
        spectral: &Spectral<'_>,
        cells: impl IntoIterator<Item = (usize, usize, i64, i64)>,
    ) -> Vec<StationDuality> {
        cells
            .into_iter()
            .map(|(r1, r2, p, k)| {
                let (dp, dk) = self.dual(p, k);
                let lhs = self.image(p, k, &spectral.station(r1, r2, p, k));
                let rhs = spectral.station(r2, r1, dp, dk);
                StationDuality { r1, r2, p, k, star_dim: lhs.dim(), dual_dim: rhs.dim(), equal: lhs == rhs }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StationDuality {
    pub r1: usize,
    pub r2: usize,
    pub p: i64,
    pub k: i64,
    pub star_dim: usize,
    pub dual_dim: usize,
    pub equal: bool,
}

/// Cells `(p, k)` (and orders) where an identity fails.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StarReport {
    pub star_squared: Vec<(i64, i64)>,
    pub isometry: Vec<(i64, i64)>,
    /// `δ_i = d_i^T` differs from `(-1)^{n(k+1)+1} ⋆ d_i ⋆`.
    pub delta: Vec<(usize, i64, i64)>,
    pub delta_c: Vec<(usize, i64, i64)>,
    pub e0_closure: Vec<(i64, i64)>,
}

impl StarReport {
    pub fn ok(&self) -> bool {
        self.star_squared.is_empty()
            && self.isometry.is_empty()
            && self.delta.is_empty()
            && self.delta_c.is_empty()
            && self.e0_closure.is_empty()
    }

    /// Orders `i` for which `δ_i` fails somewhere.
    pub fn failing_delta_orders(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.delta.iter().map(|t| t.0).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carnot::{catalog, polynomial_derham, twisted_derham};

    #[test]
    fn star_on_engel_constants() {
        let mc = polynomial_derham(&catalog("engel", 0).unwrap()).unwrap();
        let kit = StarKit::build(&mc).unwrap();
        assert_eq!(kit.dual(1, 1), (6, 3));
        let st = kit.star(1, 1);
        // θ1 -> θ2∧θ3∧θ4 with sign +1.
        let labels = mc.labels(Bidegree::at(6, 3));
        let row = (0..st.rows()).find(|&r| !st.get(r, 0).eq(&int(0))).unwrap();
        assert_eq!(labels[row], "1|t2^t3^t4");
        assert_eq!(st.get(row, 0), &int(1));
        let rumin = Rumin::build(&mc);
        assert!(kit.check(&mc, Some(&rumin)).ok());
    }

    #[test]
    fn abstract_multicomplex_is_rejected() {
        let inst = crate::random::random_conjugated_multicomplex(1, &Default::default());
        assert_eq!(StarKit::build(&inst.multicomplex).err(), Some(StarError::NoExterior));
    }

    #[test]
    fn twisted_engel_is_self_dual() {
        let spec = catalog("engel", 0).unwrap();
        let mc = twisted_derham(&spec, &[int(1), int(2), int(0), int(0)]).unwrap();
        let kit = StarKit::build(&mc).unwrap();
        let rumin = Rumin::build(&mc);
        let report = kit.check(&mc, Some(&rumin));
        assert!(report.ok(), "{report:?}");
        let sp = Spectral::new(&rumin);
        let mut cells = Vec::new();
        for k in rumin.degrees() {
            for p in sp.weights(k) {
                for r1 in 1..=4 {
                    for r2 in 1..=4 {
                        cells.push((r1, r2, p, k));
                    }
                }
            }
        }
        assert!(kit.check_stations(&sp, cells).iter().all(|d| d.equal));
    }
}
