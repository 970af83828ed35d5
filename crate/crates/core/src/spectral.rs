//! Spectral-sequence complexes of the weight filtration, computed from the
//! Rumin operators `d_c^r`.
//!
//! `Z_r^{p}` and `B_r^{p}` live in `C_{p,k-p}`. They are computed twice: from
//! the defining systems in the `d_i`, and through the harmonic
//! characterizations in `E_0` with the `d_c^r`. The page differential `Δ_r`
//! is evaluated on representatives and reduced to the canonical element of
//! `(B_r)^⊥` at the target.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::linalg::{is_zero_vector, kernel, solve_particular, Matrix, Scalar, Subspace};
use crate::rumin::Rumin;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("vector is not in Z_{r} at weight {p}, degree {k}")]
    NotInZ { r: usize, p: i64, k: i64 },
    #[error("vector has length {found}, expected {expected}")]
    Length { expected: usize, found: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    ZDirect,
    BDirect,
    ZHarmonic,
    BHarmonic,
}

/// Value of `Δ_r` on one representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaValue {
    /// Canonical representative in `(B_r)^⊥` at the target.
    pub value: Vec<Scalar>,
    /// Orders `i` of the `d_c^i` terms that contributed a nonzero vector.
    pub summands: BTreeSet<usize>,
}

/// Node of the arrow graph: a nonzero `E_0` at weight `p`, degree `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Node {
    pub p: i64,
    pub k: i64,
    pub dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ArrowGraph {
    pub nodes: Vec<Node>,
    pub arrows: Vec<Arrow>,
}

/// A station `E_{j_out, j_in}` of a spectral complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Station {
    pub p: i64,
    pub k: i64,
    pub j_out: usize,
    pub j_in: usize,
    pub space: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainEdge {
    pub order: usize,
    /// `Δ_order` of each basis vector of the source station.
    pub images: Vec<Vec<Scalar>>,
    pub rank: usize,
    pub summands: BTreeSet<usize>,
    /// Whether every image lies in the next station.
    pub lands_in_station: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralComplex {
    pub stations: Vec<Station>,
    pub edges: Vec<ChainEdge>,
    pub delta_squared_zero: bool,
}

impl SpectralComplex {
    /// The `(p, k)` path and edge orders, for display and comparison.
    pub fn signature(&self) -> Vec<(i64, i64, usize, usize)> {
        self.stations.iter().map(|s| (s.p, s.k, s.j_out, s.j_in)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub graph: ArrowGraph,
    pub complexes: Vec<SpectralComplex>,
    /// Set when the chain cap stopped the enumeration.
    pub truncated: bool,
}

/// Assembles a block matrix from `(row block, column block, matrix)` pieces.
fn assemble(rows: &[usize], cols: &[usize], pieces: Vec<(usize, usize, Matrix)>) -> Matrix {
    let offsets = |dims: &[usize]| {
        dims.iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect::<Vec<_>>()
    };
    let (ro, co) = (offsets(rows), offsets(cols));
    let mut m = Matrix::zeros(rows.iter().sum(), cols.iter().sum());
    for (i, j, blk) in pieces {
        assert_eq!(blk.shape(), (rows[i], cols[j]), "assemble: block ({i},{j}) has wrong shape");
        if blk.is_zero() {
            continue;
        }
        let cur = m.block(ro[i], co[j], rows[i], cols[j]);
        m.set_block(ro[i], co[j], &(&cur + &blk));
    }
    m
}

fn split(v: &[Scalar], dims: &[usize]) -> Vec<Vec<Scalar>> {
    let mut out = Vec::with_capacity(dims.len());
    let mut o = 0;
    for &d in dims {
        out.push(v[o..o + d].to_vec());
        o += d;
    }
    out
}

fn reduce(v: &[Scalar], b: &Subspace) -> Vec<Scalar> {
    let pr = b.project(v);
    v.iter().zip(&pr).map(|(x, y)| x - y).collect()
}

fn sub(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub struct Spectral<'a> {
    rumin: &'a Rumin,
    cache: RefCell<HashMap<(Kind, usize, i64, i64), Subspace>>,
}

impl<'a> Spectral<'a> {
    pub fn new(rumin: &'a Rumin) -> Self {
        Spectral { rumin, cache: RefCell::new(HashMap::new()) }
    }

    pub fn rumin(&self) -> &Rumin {
        self.rumin
    }

    /// Stabilization index: `Z_∞ = Z_{Q+2}` and `B_∞ = B_{Q+2}`.
    pub fn r_infinity(&self) -> usize {
        self.rumin.max_order() + 2
    }

    fn dim(&self, p: i64, k: i64) -> usize {
        self.rumin.space_dim(p, k)
    }

    fn e0_basis_t(&self, p: i64, k: i64) -> Matrix {
        let e = self.rumin.e0(p, k);
        if e.ambient() == 0 {
            return Matrix::zeros(0, 0);
        }
        e.basis().transpose()
    }

    fn e0_dim(&self, p: i64, k: i64) -> usize {
        self.rumin.e0(p, k).dim()
    }

    fn cached(&self, kind: Kind, r: usize, p: i64, k: i64, f: impl FnOnce() -> Subspace) -> Subspace {
        if let Some(s) = self.cache.borrow().get(&(kind, r, p, k)) {
            return s.clone();
        }
        let s = f();
        self.cache.borrow_mut().insert((kind, r, p, k), s.clone());
        s
    }

    pub fn e0(&self, p: i64, k: i64) -> Subspace {
        let e = self.rumin.e0(p, k);
        if e.ambient() == 0 {
            Subspace::zero(self.dim(p, k))
        } else {
            e
        }
    }

    pub fn im_d0(&self, p: i64, k: i64) -> Subspace {
        let e = self.rumin.im_d0(p, k);
        if e.ambient() == 0 {
            Subspace::zero(self.dim(p, k))
        } else {
            e
        }
    }

    /// `Z_r^{p}` in degree `k` from the defining system in the `d_i`.
    pub fn z_direct(&self, r: usize, p: i64, k: i64) -> Subspace {
        assert!(r >= 1, "Z_r is defined for r >= 1");
        self.cached(Kind::ZDirect, r, p, k, || {
            let n0 = self.dim(p, k);
            if n0 == 0 {
                return Subspace::zero(0);
            }
            let cols: Vec<usize> = (0..r).map(|j| self.dim(p + j as i64, k)).collect();
            let rows: Vec<usize> = (0..r).map(|n| self.dim(p + n as i64, k + 1)).collect();
            let mut pieces = Vec::new();
            for n in 0..r {
                pieces.push((n, 0, self.rumin.d_block(n, p, k)));
                for j in 1..=n {
                    pieces.push((n, j, -&self.rumin.d_block(n - j, p + j as i64, k)));
                }
            }
            let m = assemble(&rows, &cols, pieces);
            let alphas: Vec<Vec<Scalar>> =
                kernel(&m).vectors().into_iter().map(|v| v[..n0].to_vec()).collect();
            Subspace::span(n0, &alphas)
        })
    }

    /// `B_r^{p}` in degree `k` from the defining system in the `d_i`.
    pub fn b_direct(&self, r: usize, p: i64, k: i64) -> Subspace {
        assert!(r >= 1, "B_r is defined for r >= 1");
        self.cached(Kind::BDirect, r, p, k, || {
            let n0 = self.dim(p, k);
            if n0 == 0 {
                return Subspace::zero(0);
            }
            let cols: Vec<usize> = (0..r).map(|m| self.dim(p - m as i64, k - 1)).collect();
            let rows: Vec<usize> = (1..r).map(|l| self.dim(p - l as i64, k)).collect();
            let mut pieces = Vec::new();
            for l in 1..r {
                for m in l..r {
                    pieces.push((l - 1, m, self.rumin.d_block(m - l, p - m as i64, k - 1)));
                }
            }
            let free = if rows.is_empty() {
                Subspace::full(cols.iter().sum())
            } else {
                kernel(&assemble(&rows, &cols, pieces))
            };
            let out = assemble(
                &[n0],
                &cols,
                (0..r).map(|m| (0, m, self.rumin.d_block(m, p - m as i64, k - 1))).collect(),
            );
            free.image_under(&out)
        })
    }

    /// Harmonic part of `Z_r^{p}`: the `ᾱ` in `E_0` admitting harmonic
    /// witnesses `ω̄_{p+1..p+r-2}` with
    /// `d_c^i ᾱ = sum_{j<i} d_c^{i-j} ω̄_{p+j}` for `i = 1..r-1`.
    pub fn z_harmonic(&self, r: usize, p: i64, k: i64) -> Subspace {
        assert!(r >= 1, "Z_r is defined for r >= 1");
        self.cached(Kind::ZHarmonic, r, p, k, || {
            let n0 = self.dim(p, k);
            if self.e0_dim(p, k) == 0 {
                return Subspace::zero(n0);
            }
            let w = r.saturating_sub(2);
            let bases: Vec<Matrix> = (0..=w).map(|j| self.e0_basis_t(p + j as i64, k)).collect();
            let cols: Vec<usize> = bases.iter().map(Matrix::cols).collect();
            let rows: Vec<usize> = (1..r).map(|i| self.dim(p + i as i64, k + 1)).collect();
            if rows.is_empty() {
                return self.e0(p, k);
            }
            let mut pieces = Vec::new();
            for i in 1..r {
                pieces.push((i - 1, 0, &self.rumin.dc_block(i, p, k) * &bases[0]));
                for j in 1..i.min(w + 1) {
                    let blk = &self.rumin.dc_block(i - j, p + j as i64, k) * &bases[j];
                    pieces.push((i - 1, j, -&blk));
                }
            }
            let m = assemble(&rows, &cols, pieces);
            let alphas: Vec<Vec<Scalar>> = kernel(&m)
                .vectors()
                .into_iter()
                .map(|v| bases[0].apply(&v[..cols[0]]))
                .collect();
            Subspace::span(n0, &alphas)
        })
    }

    /// Harmonic part of `B_r^{p}`: the values
    /// `d_c^{r-1} c̄ - sum_{i=1}^{r-2} d_c^{r-1-i} ω̄_{p-r+1+i}` over harmonic
    /// `c̄` at weight `p-r+1` and witnesses satisfying
    /// `d_c^i c̄ = sum_{j<i} d_c^{i-j} ω̄_{p-r+1+j}` for `i = 1..r-2`.
    pub fn b_harmonic(&self, r: usize, p: i64, k: i64) -> Subspace {
        assert!(r >= 1, "B_r is defined for r >= 1");
        self.cached(Kind::BHarmonic, r, p, k, || {
            let n0 = self.dim(p, k);
            if r == 1 || n0 == 0 {
                return Subspace::zero(n0);
            }
            let base = p - r as i64 + 1;
            let bases: Vec<Matrix> =
                (0..=r - 2).map(|j| self.e0_basis_t(base + j as i64, k - 1)).collect();
            let cols: Vec<usize> = bases.iter().map(Matrix::cols).collect();
            let rows: Vec<usize> = (1..r - 1).map(|i| self.dim(base + i as i64, k)).collect();
            let mut pieces = Vec::new();
            for i in 1..r - 1 {
                pieces.push((i - 1, 0, &self.rumin.dc_block(i, base, k - 1) * &bases[0]));
                for j in 1..i {
                    let blk = &self.rumin.dc_block(i - j, base + j as i64, k - 1) * &bases[j];
                    pieces.push((i - 1, j, -&blk));
                }
            }
            let free = if rows.is_empty() {
                Subspace::full(cols.iter().sum())
            } else {
                kernel(&assemble(&rows, &cols, pieces))
            };
            let mut out = vec![(0, 0, &self.rumin.dc_block(r - 1, base, k - 1) * &bases[0])];
            for i in 1..r - 1 {
                let blk = &self.rumin.dc_block(r - 1 - i, base + i as i64, k - 1) * &bases[i];
                out.push((0, i, -&blk));
            }
            free.image_under(&assemble(&[n0], &cols, out))
        })
    }

    /// Station `E_{j,l} = Z_j ∩ (B_l)^⊥` inside `E_0`.
    pub fn station(&self, j: usize, l: usize, p: i64, k: i64) -> Subspace {
        self.z_harmonic(j, p, k).intersect(&self.b_harmonic(l, p, k).orthogonal_complement())
    }

    /// `dim Z_r - dim B_r`.
    pub fn page_dim(&self, r: usize, p: i64, k: i64) -> usize {
        self.z_direct(r, p, k).dim() - self.b_direct(r, p, k).dim()
    }

    fn check_len(&self, p: i64, k: i64, v: &[Scalar]) -> Result<(), SpectralError> {
        let n = self.dim(p, k);
        if v.len() != n {
            return Err(SpectralError::Length { expected: n, found: v.len() });
        }
        Ok(())
    }

    /// Harmonic witness system for `Δ_r` at `ᾱ`: matrix over the stacked
    /// `ω̄_{p+1..p+r-2}`, right-hand side, and the block dimensions.
    fn harmonic_witness_system(
        &self,
        r: usize,
        p: i64,
        k: i64,
        abar: &[Scalar],
    ) -> (Matrix, Vec<Scalar>, Vec<usize>) {
        let w = r.saturating_sub(2);
        let cols: Vec<usize> = (1..=w).map(|j| self.dim(p + j as i64, k)).collect();
        let rows: Vec<usize> = (1..r).map(|i| self.dim(p + i as i64, k + 1)).collect();
        let mut pieces = Vec::new();
        let mut rhs = Vec::new();
        for i in 1..r {
            for j in 1..i.min(w + 1) {
                pieces.push((i - 1, j - 1, self.rumin.dc_block(i - j, p + j as i64, k)));
            }
            rhs.extend(self.rumin.dc_block(i, p, k).apply(abar));
        }
        (assemble(&rows, &cols, pieces), rhs, cols)
    }

    /// Stacked `E_0` blocks, the constraint for harmonic witnesses.
    fn harmonic_constraint(&self, p: i64, k: i64, weights: std::ops::RangeInclusive<usize>) -> Subspace {
        let dims: Vec<usize> = weights.clone().map(|j| self.dim(p + j as i64, k)).collect();
        let total: usize = dims.iter().sum();
        let mut vecs = Vec::new();
        let mut offset = 0;
        for (idx, j) in weights.enumerate() {
            for v in self.e0(p + j as i64, k).vectors() {
                let mut full = vec![Scalar::default(); total];
                full[offset..offset + v.len()].clone_from_slice(&v);
                vecs.push(full);
            }
            offset += dims[idx];
        }
        Subspace::span(total, &vecs)
    }

    /// `Δ_r` through the Rumin operators:
    /// `[d_c^r ᾱ - sum_{i=2}^{r-1} d_c^i ω̄_{p+r-i}]`, with minimum-norm
    /// harmonic witnesses.
    pub fn delta(&self, r: usize, p: i64, k: i64, alpha: &[Scalar]) -> Result<DeltaValue, SpectralError> {
        self.check_len(p, k, alpha)?;
        let abar = self.rumin.pi0_block(p, k).apply(alpha);
        if !self.z_direct(r, p, k).contains(alpha) {
            return Err(SpectralError::NotInZ { r, p, k });
        }
        let (m, rhs, dims) = self.harmonic_witness_system(r, p, k, &abar);
        let w = dims.len();
        let constraint = self.harmonic_constraint(p, k, 1..=w);
        let x = solve_particular(&m, &rhs, Some(&constraint))
            .map_err(|_| SpectralError::NotInZ { r, p, k })?;
        let omegas = split(&x, &dims);
        self.delta_from_harmonic_witness(r, p, k, &abar, &omegas)
    }

    /// `Δ_r` from an explicit harmonic witness `ω̄_{p+1..p+r-2}`.
    pub fn delta_from_harmonic_witness(
        &self,
        r: usize,
        p: i64,
        k: i64,
        abar: &[Scalar],
        omegas: &[Vec<Scalar>],
    ) -> Result<DeltaValue, SpectralError> {
        let stacked: Vec<Scalar> = omegas.iter().flatten().cloned().collect();
        let (m, rhs, _) = self.harmonic_witness_system(r, p, k, abar);
        if m.apply(&stacked) != rhs {
            return Err(SpectralError::NotInZ { r, p, k });
        }
        let mut summands = BTreeSet::new();
        let mut v = self.rumin.dc_block(r, p, k).apply(abar);
        if !is_zero_vector(&v) {
            summands.insert(r);
        }
        for i in 2..r {
            let j = r - i;
            let term = self.rumin.dc_block(i, p + j as i64, k).apply(&omegas[j - 1]);
            if !is_zero_vector(&term) {
                summands.insert(i);
                v = sub(&v, &term);
            }
        }
        let target = self.b_direct(r, p + r as i64, k + 1);
        Ok(DeltaValue { value: reduce(&v, &target), summands })
    }

    /// Direct witness system: rows `n = 1..r-1`, unknowns `z_{p+1..p+r-1}`.
    fn direct_witness_system(
        &self,
        r: usize,
        p: i64,
        k: i64,
        alpha: &[Scalar],
    ) -> (Matrix, Vec<Scalar>, Vec<usize>) {
        let cols: Vec<usize> = (1..r).map(|j| self.dim(p + j as i64, k)).collect();
        let rows: Vec<usize> = (1..r).map(|n| self.dim(p + n as i64, k + 1)).collect();
        let mut pieces = Vec::new();
        let mut rhs = Vec::new();
        for n in 1..r {
            for i in 0..n {
                let j = n - i;
                pieces.push((n - 1, j - 1, self.rumin.d_block(i, p + j as i64, k)));
            }
            rhs.extend(self.rumin.d_block(n, p, k).apply(alpha));
        }
        (assemble(&rows, &cols, pieces), rhs, cols)
    }

    /// Minimum-norm witnesses `z_{p+1..p+r-1}` for `α ∈ Z_r`.
    pub fn direct_witness(&self, r: usize, p: i64, k: i64, alpha: &[Scalar]) -> Result<Vec<Vec<Scalar>>, SpectralError> {
        self.check_len(p, k, alpha)?;
        if !self.rumin.d_block(0, p, k).apply(alpha).iter().all(num::Zero::is_zero) {
            return Err(SpectralError::NotInZ { r, p, k });
        }
        let (m, rhs, dims) = self.direct_witness_system(r, p, k, alpha);
        let x = solve_particular(&m, &rhs, None).map_err(|_| SpectralError::NotInZ { r, p, k })?;
        Ok(split(&x, &dims))
    }

    /// Homogeneous solutions of the direct witness system, stacked.
    pub fn direct_witness_freedom(&self, r: usize, p: i64, k: i64) -> (Subspace, Vec<usize>) {
        let zero = vec![Scalar::default(); self.dim(p, k)];
        let (m, _, dims) = self.direct_witness_system(r, p, k, &zero);
        (kernel(&m), dims)
    }

    /// Homogeneous harmonic witnesses, stacked.
    pub fn harmonic_witness_freedom(&self, r: usize, p: i64, k: i64) -> (Subspace, Vec<usize>) {
        let zero = vec![Scalar::default(); self.dim(p, k)];
        let (m, _, dims) = self.harmonic_witness_system(r, p, k, &zero);
        let constraint = self.harmonic_constraint(p, k, 1..=dims.len());
        (kernel(&m).intersect(&constraint), dims)
    }

    /// `Δ_r` from an explicit direct witness:
    /// `[d_r α - sum_{i=1}^{r-1} d_i z_{p+r-i}]`.
    pub fn delta_direct_from_witness(
        &self,
        r: usize,
        p: i64,
        k: i64,
        alpha: &[Scalar],
        z: &[Vec<Scalar>],
    ) -> Result<Vec<Scalar>, SpectralError> {
        let stacked: Vec<Scalar> = z.iter().flatten().cloned().collect();
        let (m, rhs, _) = self.direct_witness_system(r, p, k, alpha);
        if m.apply(&stacked) != rhs {
            return Err(SpectralError::NotInZ { r, p, k });
        }
        let mut v = self.rumin.d_block(r, p, k).apply(alpha);
        for i in 1..r {
            let j = r - i;
            v = sub(&v, &self.rumin.d_block(i, p + j as i64, k).apply(&z[j - 1]));
        }
        Ok(reduce(&v, &self.b_direct(r, p + r as i64, k + 1)))
    }

    /// `Δ_r` from the defining formula in the `d_i`.
    pub fn delta_direct(&self, r: usize, p: i64, k: i64, alpha: &[Scalar]) -> Result<Vec<Scalar>, SpectralError> {
        let z = self.direct_witness(r, p, k, alpha)?;
        self.delta_direct_from_witness(r, p, k, alpha, &z)
    }

    /// Rank of `Δ_r : Z_r/B_r -> Z_r/B_r` leaving weight `p`, degree `k`.
    pub fn delta_rank(&self, r: usize, p: i64, k: i64) -> usize {
        let reps = self.station(r, r, p, k);
        if reps.is_zero() {
            return 0;
        }
        let target = self.dim(p + r as i64, k + 1);
        let images: Vec<Vec<Scalar>> = reps
            .vectors()
            .iter()
            .map(|v| self.delta(r, p, k, v).expect("representative lies in Z_r").value)
            .collect();
        Subspace::span(target, &images).dim()
    }

    /// `I_{p,k}`: orders `j` with `d_c^j` nonzero on `E_0` at `(p, k)`.
    pub fn index_set(&self, p: i64, k: i64) -> BTreeSet<usize> {
        if self.e0_dim(p, k) == 0 {
            return BTreeSet::new();
        }
        (1..=self.rumin.max_order()).filter(|&j| !self.rumin.dc_block(j, p, k).is_zero()).collect()
    }

    pub fn arrow_graph(&self) -> ArrowGraph {
        let mut nodes = Vec::new();
        for k in self.rumin.degrees() {
            for b in self.rumin.layout(k).blocks {
                let dim = self.e0_dim(b.a, k);
                if dim > 0 {
                    nodes.push(Node { p: b.a, k, dim });
                }
            }
        }
        let index: BTreeMap<(i64, i64), usize> =
            nodes.iter().enumerate().map(|(i, n)| ((n.p, n.k), i)).collect();
        let mut arrows = Vec::new();
        for (i, n) in nodes.iter().enumerate() {
            for j in self.index_set(n.p, n.k) {
                let to = index[&(n.p + j as i64, n.k + 1)];
                arrows.push(Arrow { from: i, to, order: j });
            }
        }
        ArrowGraph { nodes, arrows }
    }

    /// Enumerates maximal paths of the arrow graph (at most `max_chains`)
    /// and builds each spectral complex with its `Δ` matrices.
    pub fn enumerate(&self, max_chains: usize) -> Enumeration {
        let graph = self.arrow_graph();
        let n = graph.nodes.len();
        let mut out: Vec<Vec<&Arrow>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for a in &graph.arrows {
            out[a.from].push(a);
            indeg[a.to] += 1;
        }
        let mut paths: Vec<Vec<Arrow>> = Vec::new();
        let mut truncated = false;
        let mut stack: Vec<(usize, Vec<Arrow>)> = (0..n)
            .rev()
            .filter(|&i| indeg[i] == 0 && !out[i].is_empty())
            .map(|i| (i, Vec::new()))
            .collect();
        while let Some((node, path)) = stack.pop() {
            if out[node].is_empty() {
                if paths.len() == max_chains {
                    truncated = true;
                    break;
                }
                paths.push(path);
                continue;
            }
            for a in out[node].iter().rev() {
                let mut next = path.clone();
                next.push(**a);
                stack.push((a.to, next));
            }
        }
        let complexes = paths.iter().map(|p| self.build_complex(&graph, p)).collect();
        Enumeration { graph, complexes, truncated }
    }

    fn build_complex(&self, graph: &ArrowGraph, path: &[Arrow]) -> SpectralComplex {
        let mut stations = Vec::new();
        let node_ids: Vec<usize> =
            std::iter::once(path[0].from).chain(path.iter().map(|a| a.to)).collect();
        for (t, &id) in node_ids.iter().enumerate() {
            let node = graph.nodes[id];
            let j_in = if t == 0 { 1 } else { path[t - 1].order };
            let j_out = path.get(t).map_or(1, |a| a.order);
            let space = self.station(j_out, j_in, node.p, node.k);
            stations.push(Station { p: node.p, k: node.k, j_out, j_in, space });
        }
        let mut edges = Vec::new();
        for (t, a) in path.iter().enumerate() {
            let (src, dst) = (&stations[t], &stations[t + 1]);
            let mut images = Vec::new();
            let mut summands = BTreeSet::new();
            for v in src.space.vectors() {
                let d = self.delta(a.order, src.p, src.k, &v).expect("station lies in Z_j");
                summands.extend(d.summands);
                images.push(d.value);
            }
            let ambient = self.dim(dst.p, dst.k);
            let rank = Subspace::span(ambient, &images).dim();
            let lands_in_station = images.iter().all(|v| dst.space.contains(v));
            edges.push(ChainEdge { order: a.order, images, rank, summands, lands_in_station });
        }
        let mut delta_squared_zero = true;
        for t in 0..edges.len().saturating_sub(1) {
            let next = &stations[t + 1];
            for v in &edges[t].images {
                match self.delta(edges[t + 1].order, next.p, next.k, v) {
                    Ok(d) if is_zero_vector(&d.value) => {}
                    _ => delta_squared_zero = false,
                }
            }
        }
        SpectralComplex { stations, edges, delta_squared_zero }
    }

    /// Dimensions of `Z_∞ / B_∞` per weight in degree `k`.
    pub fn e_infinity(&self, k: i64) -> BTreeMap<i64, usize> {
        let r = self.r_infinity();
        self.rumin
            .layout(k)
            .blocks
            .iter()
            .map(|b| (b.a, self.page_dim(r, b.a, k)))
            .collect()
    }

    /// Weights `p` with a nonzero space in degree `k`.
    pub fn weights(&self, k: i64) -> Vec<i64> {
        self.rumin.layout(k).weights()
    }

    /// Verifies the structural invariants of the Z/B families and `Δ` on
    /// every bidegree: inclusion chains, stabilization, agreement of direct
    /// and harmonic characterizations, and agreement of the two `Δ_r`
    /// formulas. Returns a description of each failure.
    pub fn check(&self) -> Vec<String> {
        let mut failures = Vec::new();
        let rinf = self.r_infinity();
        for k in self.rumin.degrees() {
            for p in self.weights(k) {
                let mut fail = |s: String| failures.push(format!("{s} at (p={p}, k={k})"));
                let im = self.im_d0(p, k);
                let e0 = self.e0(p, k);
                let pi0 = self.rumin.pi0_block(p, k);
                for r in 1..=rinf {
                    let (z, b) = (self.z_direct(r, p, k), self.b_direct(r, p, k));
                    let (zh, bh) = (self.z_harmonic(r, p, k), self.b_harmonic(r, p, k));
                    if r < rinf {
                        let (z1, b1) = (self.z_direct(r + 1, p, k), self.b_direct(r + 1, p, k));
                        if !(b.is_subspace_of(&b1) && b1.is_subspace_of(&z1) && z1.is_subspace_of(&z)) {
                            fail(format!("inclusion chain at r={r}"));
                        }
                    }
                    if z != im.sum(&zh) {
                        fail(format!("Z_{r} = Im d0 + Z_{r}(harmonic)"));
                    }
                    if b.intersect(&e0) != bh || b.image_under(&pi0) != bh || b != im.sum(&bh) {
                        fail(format!("B_{r} harmonic part"));
                    }
                    let reps = self.station(r, r, p, k);
                    for v in reps.vectors() {
                        let a = self.delta(r, p, k, &v).map(|d| d.value);
                        let d = self.delta_direct(r, p, k, &v);
                        if a.is_err() || a != d {
                            fail(format!("Δ_{r} witness routes differ"));
                            break;
                        }
                    }
                }
                if self.z_direct(rinf, p, k) != self.z_direct(rinf - 1, p, k)
                    || self.b_direct(rinf, p, k) != self.b_direct(rinf - 1, p, k)
                {
                    fail("stabilization".into());
                }
            }
        }
        failures
    }
}
