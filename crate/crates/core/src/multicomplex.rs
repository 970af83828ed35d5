//! Bigraded multicomplexes and their total complexes.
//!
//! A space `C_{a,b}` has weight `a` and degree `a + b`. The map `d_i` sends
//! `C_{a,b}` to `C_{a+i, b+1-i}`; the relations are `sum_{i+j=n} d_i d_j = 0`
//! for every `n`, and `d_k = 0` for `k >= s`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{Matrix, Scalar};

/// Weight `a` and complementary index `b`; the degree is `a + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bidegree {
    pub a: i64,
    pub b: i64,
}

impl Bidegree {
    pub const fn new(a: i64, b: i64) -> Self {
        Bidegree { a, b }
    }

    /// Bidegree with weight `a` in total degree `k`.
    pub const fn at(a: i64, k: i64) -> Self {
        Bidegree { a, b: k - a }
    }

    pub const fn degree(self) -> i64 {
        self.a + self.b
    }

    /// Target of `d_i`.
    pub const fn shift(self, i: i64) -> Self {
        Bidegree { a: self.a + i, b: self.b + 1 - i }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Space {
    pub dim: usize,
    pub labels: Vec<String>,
}

/// Marks a multicomplex whose basis vectors are `coefficient ⊗ covector
/// monomial`, with labels of the form `"<coef>|t1^t3"` (`"1"` for the empty
/// monomial). Generator `t_i` has weight `generator_weights[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExteriorInfo {
    pub generator_weights: Vec<i64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("invalid header: {0}")]
    Header(String),
    #[error("space ({a},{b}): weight outside [0, Q={q}]")]
    WeightRange { a: i64, b: i64, q: i64 },
    #[error("space ({a},{b}) declared twice")]
    DuplicateSpace { a: i64, b: i64 },
    #[error("space ({a},{b}): {labels} labels for dimension {dim}")]
    Labels { a: i64, b: i64, dim: usize, labels: usize },
    #[error("map d_{i} at ({a},{b}) declared twice")]
    DuplicateMap { i: usize, a: i64, b: i64 },
    #[error("map d_{i} at ({a},{b}): shape {rows}x{cols}, expected {exp_rows}x{exp_cols}")]
    Shape { i: usize, a: i64, b: i64, rows: usize, cols: usize, exp_rows: usize, exp_cols: usize },
    #[error("map d_{i} at ({a},{b}) is nonzero but i >= s = {s}")]
    Truncation { i: usize, a: i64, b: i64, s: usize },
    #[error("relation sum_{{i+j={n}}} d_i d_j fails on C_({a},{b})")]
    Relation { n: usize, a: i64, b: i64 },
    #[error("malformed entry: {0}")]
    Entry(String),
}

/// A validated multicomplex with finitely many nonzero spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multicomplex {
    q: i64,
    s: usize,
    spaces: BTreeMap<Bidegree, Space>,
    maps: BTreeMap<(usize, Bidegree), Matrix>,
    exterior: Option<ExteriorInfo>,
}

/// Position of a weight block inside a total-degree space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub a: i64,
    pub offset: usize,
    pub dim: usize,
}

/// Block layout of `Tot_h`, ordered by increasing weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotLayout {
    pub degree: i64,
    pub blocks: Vec<Block>,
    pub dim: usize,
}

impl TotLayout {
    pub fn block(&self, a: i64) -> Option<Block> {
        self.blocks.iter().copied().find(|b| b.a == a)
    }

    pub fn weights(&self) -> Vec<i64> {
        self.blocks.iter().map(|b| b.a).collect()
    }

    /// Zero-pads a vector of `C_{a, h-a}` into `Tot_h`.
    pub fn embed(&self, a: i64, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::default(); self.dim];
        if let Some(b) = self.block(a) {
            assert_eq!(v.len(), b.dim, "embed: block dimension mismatch");
            out[b.offset..b.offset + b.dim].clone_from_slice(v);
        } else {
            assert!(v.is_empty(), "embed: no block of weight {a}");
        }
        out
    }

    /// Weight-`a` component of a vector of `Tot_h`.
    pub fn restrict(&self, a: i64, v: &[Scalar]) -> Vec<Scalar> {
        match self.block(a) {
            Some(b) => v[b.offset..b.offset + b.dim].to_vec(),
            None => Vec::new(),
        }
    }
}

impl Multicomplex {
    /// Validates shapes, weight range, truncation and all multicomplex
    /// relations. Absent maps are zero.
    pub fn new(
        q: i64,
        s: usize,
        spaces: BTreeMap<Bidegree, Space>,
        maps: BTreeMap<(usize, Bidegree), Matrix>,
        exterior: Option<ExteriorInfo>,
    ) -> Result<Self, ValidationError> {
        if q < 0 {
            return Err(ValidationError::Header(format!("Q = {q} is negative")));
        }
        if s == 0 {
            return Err(ValidationError::Header("s must be at least 1".into()));
        }
        for (bd, sp) in &spaces {
            if bd.a < 0 || bd.a > q {
                return Err(ValidationError::WeightRange { a: bd.a, b: bd.b, q });
            }
            if sp.labels.len() != sp.dim {
                return Err(ValidationError::Labels {
                    a: bd.a,
                    b: bd.b,
                    dim: sp.dim,
                    labels: sp.labels.len(),
                });
            }
        }
        let dim = |bd: Bidegree| spaces.get(&bd).map_or(0, |s| s.dim);
        for (&(i, bd), m) in &maps {
            let (exp_rows, exp_cols) = (dim(bd.shift(i as i64)), dim(bd));
            if m.shape() != (exp_rows, exp_cols) {
                return Err(ValidationError::Shape {
                    i,
                    a: bd.a,
                    b: bd.b,
                    rows: m.rows(),
                    cols: m.cols(),
                    exp_rows,
                    exp_cols,
                });
            }
            if i >= s && !m.is_zero() {
                return Err(ValidationError::Truncation { i, a: bd.a, b: bd.b, s });
            }
        }
        let maps = maps.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        let mc = Multicomplex { q, s, spaces, maps, exterior };
        mc.check_relations()?;
        Ok(mc)
    }

    fn check_relations(&self) -> Result<(), ValidationError> {
        for &bd in self.spaces.keys() {
            for n in 0..=2 * (self.s - 1) {
                let target = Bidegree::new(bd.a + n as i64, bd.b + 2 - n as i64);
                let mut acc = Matrix::zeros(self.dim(target), self.dim(bd));
                let mut any = false;
                for i in 0..=n {
                    let j = n - i;
                    let (Some(dj), Some(di)) =
                        (self.maps.get(&(j, bd)), self.maps.get(&(i, bd.shift(j as i64))))
                    else {
                        continue;
                    };
                    acc = &acc + &(di * dj);
                    any = true;
                }
                if any && !acc.is_zero() {
                    return Err(ValidationError::Relation { n, a: bd.a, b: bd.b });
                }
            }
        }
        Ok(())
    }

    /// Maximal weight `Q`.
    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Nilpotency bound `N = Q + 1` for the weight-raising part of `d`.
    pub fn nilpotency(&self) -> usize {
        self.q as usize + 1
    }

    pub fn exterior(&self) -> Option<&ExteriorInfo> {
        self.exterior.as_ref()
    }

    pub fn spaces(&self) -> &BTreeMap<Bidegree, Space> {
        &self.spaces
    }

    pub fn maps(&self) -> &BTreeMap<(usize, Bidegree), Matrix> {
        &self.maps
    }

    pub fn dim(&self, bd: Bidegree) -> usize {
        self.spaces.get(&bd).map_or(0, |s| s.dim)
    }

    pub fn labels(&self, bd: Bidegree) -> &[String] {
        self.spaces.get(&bd).map_or(&[], |s| &s.labels)
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.values().map(|s| s.dim).sum()
    }

    /// Matrix of `d_i` on `C_bd`; zero when absent.
    pub fn d(&self, i: usize, bd: Bidegree) -> Matrix {
        match self.maps.get(&(i, bd)) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.dim(bd.shift(i as i64)), self.dim(bd)),
        }
    }

    /// Smallest and largest total degree carrying a nonzero space.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let mut it = self.spaces.iter().filter(|(_, s)| s.dim > 0).map(|(bd, _)| bd.degree());
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), h| (lo.min(h), hi.max(h))))
    }

    pub fn layout(&self, h: i64) -> TotLayout {
        let mut blocks = Vec::new();
        let mut offset = 0;
        for (bd, sp) in &self.spaces {
            if bd.degree() == h && sp.dim > 0 {
                blocks.push(Block { a: bd.a, offset, dim: sp.dim });
                offset += sp.dim;
            }
        }
        TotLayout { degree: h, blocks, dim: offset }
    }

    /// `d_i` assembled as a map `Tot_h -> Tot_{h+1}`.
    pub fn tot_component(&self, i: usize, h: i64) -> Matrix {
        let src = self.layout(h);
        let tgt = self.layout(h + 1);
        let mut m = Matrix::zeros(tgt.dim, src.dim);
        for b in &src.blocks {
            if let Some(t) = tgt.block(b.a + i as i64) {
                if let Some(di) = self.maps.get(&(i, Bidegree::at(b.a, h))) {
                    m.set_block(t.offset, b.offset, di);
                }
            }
        }
        m
    }

    /// Total differential `D = sum_i d_i` on `Tot_h`.
    pub fn tot_d(&self, h: i64) -> Matrix {
        let src = self.layout(h);
        let tgt = self.layout(h + 1);
        let mut m = Matrix::zeros(tgt.dim, src.dim);
        for (&(i, bd), di) in &self.maps {
            if bd.degree() != h {
                continue;
            }
            let (Some(s), Some(t)) = (src.block(bd.a), tgt.block(bd.a + i as i64)) else {
                continue;
            };
            m.set_block(t.offset, s.offset, di);
        }
        m
    }

    /// Dimensions of the cohomology of the total complex, per degree.
    pub fn total_cohomology(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        let Some((lo, hi)) = self.degree_range() else {
            return out;
        };
        for h in lo..=hi {
            let dim = self.layout(h).dim;
            let out_rank = self.tot_d(h).rank();
            let in_rank = self.tot_d(h - 1).rank();
            out.insert(h, dim - out_rank - in_rank);
        }
        out
    }
}

/// Extracts the block of a `Tot_h -> Tot_{h'}` operator from weight `a_src`
/// to weight `a_tgt`; empty blocks give zero-sized matrices.
pub fn tot_block(op: &Matrix, src: &TotLayout, a_src: i64, tgt: &TotLayout, a_tgt: i64) -> Matrix {
    match (src.block(a_src), tgt.block(a_tgt)) {
        (Some(s), Some(t)) => op.block(t.offset, s.offset, t.dim, s.dim),
        (s, t) => Matrix::zeros(t.map_or(0, |b| b.dim), s.map_or(0, |b| b.dim)),
    }
}

/// Keeps only the blocks of `op` that raise weight by exactly `w`.
pub fn weight_part(op: &Matrix, src: &TotLayout, tgt: &TotLayout, w: i64) -> Matrix {
    let mut m = Matrix::zeros(tgt.dim, src.dim);
    for s in &src.blocks {
        if let Some(t) = tgt.block(s.a + w) {
            m.set_block(t.offset, s.offset, &op.block(t.offset, s.offset, t.dim, s.dim));
        }
    }
    m
}

/// Block-diagonal operator on `Tot_h` built from per-weight square blocks.
pub fn block_diagonal(layout: &TotLayout, mut f: impl FnMut(i64) -> Matrix) -> Matrix {
    let mut m = Matrix::zeros(layout.dim, layout.dim);
    for b in &layout.blocks {
        m.set_block(b.offset, b.offset, &f(b.a));
    }
    m
}

/// Weight-preserving operator `Tot_h -> Tot_{h'}` built from per-weight blocks.
pub fn weight_preserving(
    src: &TotLayout,
    tgt: &TotLayout,
    mut f: impl FnMut(i64) -> Matrix,
) -> Matrix {
    let mut m = Matrix::zeros(tgt.dim, src.dim);
    for s in &src.blocks {
        if let Some(t) = tgt.block(s.a) {
            m.set_block(t.offset, s.offset, &f(s.a));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn space(dim: usize) -> Space {
        Space { dim, labels: (0..dim).map(|i| format!("e{i}")).collect() }
    }

    /// Two spaces joined by d_1: C_{0,0} -> C_{1,0}.
    fn arrow() -> Multicomplex {
        let mut spaces = BTreeMap::new();
        spaces.insert(Bidegree::new(0, 0), space(1));
        spaces.insert(Bidegree::new(1, 0), space(1));
        let mut maps = BTreeMap::new();
        maps.insert((1, Bidegree::new(0, 0)), Matrix::from_i64(1, 1, &[1]));
        Multicomplex::new(1, 2, spaces, maps, None).unwrap()
    }

    #[test]
    fn total_complex_of_arrow_is_acyclic() {
        let mc = arrow();
        assert_eq!(mc.layout(1).dim, 1);
        assert_eq!(mc.tot_d(0), Matrix::from_i64(1, 1, &[1]));
        assert_eq!(mc.total_cohomology().values().sum::<usize>(), 0);
    }

    #[test]
    fn rejects_truncation_and_shape_errors() {
        let mut spaces = BTreeMap::new();
        spaces.insert(Bidegree::new(0, 0), space(1));
        spaces.insert(Bidegree::new(1, 0), space(1));
        let mut maps = BTreeMap::new();
        maps.insert((1, Bidegree::new(0, 0)), Matrix::from_i64(1, 1, &[1]));
        assert!(matches!(
            Multicomplex::new(1, 1, spaces.clone(), maps.clone(), None),
            Err(ValidationError::Truncation { .. })
        ));
        maps.insert((1, Bidegree::new(0, 0)), Matrix::from_i64(1, 2, &[1, 0]));
        assert!(matches!(
            Multicomplex::new(1, 2, spaces, maps, None),
            Err(ValidationError::Shape { .. })
        ));
    }

    #[test]
    fn rejects_failed_relation() {
        // d_0 d_0 != 0 along C_{0,0} -> C_{0,1} -> C_{0,2}.
        let mut spaces = BTreeMap::new();
        for b in 0..3 {
            spaces.insert(Bidegree::new(0, b), space(1));
        }
        let mut maps = BTreeMap::new();
        maps.insert((0, Bidegree::new(0, 0)), Matrix::from_i64(1, 1, &[1]));
        maps.insert((0, Bidegree::new(0, 1)), Matrix::from_i64(1, 1, &[2]));
        assert_eq!(
            Multicomplex::new(0, 1, spaces, maps, None),
            Err(ValidationError::Relation { n: 0, a: 0, b: 0 })
        );
    }

    #[test]
    fn weight_part_splits_total_differential() {
        let mc = arrow();
        let (s, t) = (mc.layout(0), mc.layout(1));
        assert_eq!(weight_part(&mc.tot_d(0), &s, &t, 1), mc.tot_component(1, 0));
        assert!(weight_part(&mc.tot_d(0), &s, &t, 0).is_zero());
        assert_eq!(tot_block(&mc.tot_d(0), &s, 0, &t, 1).get(0, 0), &int(1));
    }
}
