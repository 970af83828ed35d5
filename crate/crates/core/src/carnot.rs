//! Stratified nilpotent Lie algebras and their truncated de Rham
//! multicomplexes.
//!
//! Forms are `f θ_I` with `f` a polynomial in exponential coordinates of
//! weighted degree at most `D` and `θ_I` a wedge of left-invariant
//! covectors. The weight of `f θ_I` is the covector weight of `I`. The
//! Chevalley–Eilenberg part of `d` is `d_0`, and `d_w` collects
//! `(X_j f) θ_j ∧ θ_I` over generators of layer `w`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{format_scalar, frac, int, parse_scalar, Matrix, Scalar};
use crate::multicomplex::{Bidegree, ExteriorInfo, Multicomplex, Space, ValidationError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    /// 1-based, `i < j`.
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Scalar,
}

/// Graded Lie algebra `[X_i, X_j] = sum_k c_{ij}^k X_k` with a polynomial
/// truncation degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub weights: Vec<i64>,
    pub brackets: Vec<Bracket>,
    pub poly_degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieViolation {
    Shape(String),
    Weights,
    Index { i: usize, j: usize, k: usize },
    Antisymmetry { i: usize, j: usize },
    Duplicate { i: usize, j: usize, k: usize },
    Grading { i: usize, j: usize, k: usize },
    Jacobi { i: usize, j: usize, l: usize, component: usize },
}

impl std::fmt::Display for LieViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LieViolation::Shape(s) => write!(f, "{s}"),
            LieViolation::Weights => write!(f, "weights must be positive and nondecreasing"),
            LieViolation::Index { i, j, k } => write!(f, "bracket ({i},{j},{k}) out of range"),
            LieViolation::Antisymmetry { i, j } => write!(f, "bracket ({i},{j}) must have i < j"),
            LieViolation::Duplicate { i, j, k } => write!(f, "bracket ({i},{j},{k}) given twice"),
            LieViolation::Grading { i, j, k } => {
                write!(f, "c_{{{i}{j}}}^{k} is nonzero but w_{k} != w_{i} + w_{j}")
            }
            LieViolation::Jacobi { i, j, l, component } => {
                write!(f, "Jacobi identity fails on ({i},{j},{l}) in component {component}")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum CarnotError {
    #[error("unknown algebra {0:?}; known: heisenberg1, heisenberg2, engel, abelian-<n>, step2-free-2")]
    Unknown(String),
    #[error("invalid algebra: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<LieViolation>),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Multicomplex(#[from] ValidationError),
}

impl AlgebraSpec {
    pub fn top_weight(&self) -> i64 {
        self.weights.iter().sum()
    }

    pub fn step(&self) -> i64 {
        self.weights.iter().copied().max().unwrap_or(0)
    }

    /// Structure constants `c[i][j][k]`, 0-based, antisymmetric in `i, j`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.dim;
        let mut c = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for b in &self.brackets {
            if b.i == 0 || b.j == 0 || b.k == 0 || b.i > n || b.j > n || b.k > n {
                continue;
            }
            let (i, j, k) = (b.i - 1, b.j - 1, b.k - 1);
            c[i][j][k] += &b.c;
            c[j][i][k] -= &b.c;
        }
        c
    }
}

pub fn validate_lie(spec: &AlgebraSpec) -> Vec<LieViolation> {
    let mut out = Vec::new();
    let n = spec.dim;
    if n == 0 || spec.weights.len() != n {
        out.push(LieViolation::Shape(format!(
            "dim {n} with {} weights",
            spec.weights.len()
        )));
        return out;
    }
    if spec.weights[0] < 1 || spec.weights.windows(2).any(|w| w[0] > w[1]) {
        out.push(LieViolation::Weights);
    }
    let mut seen = BTreeSet::new();
    for b in &spec.brackets {
        let (i, j, k) = (b.i, b.j, b.k);
        if i == 0 || j == 0 || k == 0 || i > n || j > n || k > n {
            out.push(LieViolation::Index { i, j, k });
            continue;
        }
        if i >= j {
            out.push(LieViolation::Antisymmetry { i, j });
        }
        if !seen.insert((i, j, k)) {
            out.push(LieViolation::Duplicate { i, j, k });
        }
        if !b.c.is_zero() && spec.weights[k - 1] != spec.weights[i - 1] + spec.weights[j - 1] {
            out.push(LieViolation::Grading { i, j, k });
        }
    }
    if !out.is_empty() {
        return out;
    }
    let c = spec.structure_constants();
    let bracket = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        let mut w = vec![Scalar::zero(); n];
        for a in 0..n {
            for b in 0..n {
                if u[a].is_zero() || v[b].is_zero() {
                    continue;
                }
                for (k, wk) in w.iter_mut().enumerate() {
                    *wk += &u[a] * &v[b] * &c[a][b][k];
                }
            }
        }
        w
    };
    let e = |i: usize| (0..n).map(|t| if t == i { Scalar::one() } else { Scalar::zero() }).collect::<Vec<_>>();
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                let t1 = bracket(&bracket(&e(i), &e(j)), &e(l));
                let t2 = bracket(&bracket(&e(j), &e(l)), &e(i));
                let t3 = bracket(&bracket(&e(l), &e(i)), &e(j));
                for k in 0..n {
                    if !(&t1[k] + &t2[k] + &t3[k]).is_zero() {
                        out.push(LieViolation::Jacobi { i: i + 1, j: j + 1, l: l + 1, component: k + 1 });
                        break;
                    }
                }
            }
        }
    }
    out
}

fn spec_from_parts(weights: Vec<i64>, brackets: &[(usize, usize, usize, i64)], d: u32) -> AlgebraSpec {
    AlgebraSpec {
        dim: weights.len(),
        weights,
        brackets: brackets.iter().map(|&(i, j, k, c)| Bracket { i, j, k, c: int(c) }).collect(),
        poly_degree: d,
    }
}

/// Named algebras, with polynomial degree `d`.
pub fn catalog(name: &str, d: u32) -> Result<AlgebraSpec, CarnotError> {
    let spec = match name {
        "heisenberg1" | "step2-free-2" => spec_from_parts(vec![1, 1, 2], &[(1, 2, 3, 1)], d),
        "heisenberg2" => spec_from_parts(vec![1, 1, 1, 1, 2], &[(1, 2, 5, 1), (3, 4, 5, 1)], d),
        "engel" => spec_from_parts(vec![1, 1, 2, 3], &[(1, 2, 3, 1), (1, 3, 4, 1)], d),
        _ => match name.strip_prefix("abelian-").and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if n >= 1 => spec_from_parts(vec![1; n], &[], d),
            _ => return Err(CarnotError::Unknown(name.to_string())),
        },
    };
    Ok(spec)
}

pub const CATALOG: &[&str] = &["heisenberg1", "heisenberg2", "engel", "abelian-n", "step2-free-2"];

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarEntry {
    Int(i64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketRecord {
    i: usize,
    j: usize,
    k: usize,
    c: ScalarEntry,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraRecord {
    dim: usize,
    weights: Vec<i64>,
    brackets: Vec<BracketRecord>,
    poly_degree: u32,
}

pub fn algebra_from_json(text: &str) -> Result<AlgebraSpec, CarnotError> {
    let rec: AlgebraRecord = serde_json::from_str(text).map_err(|e| CarnotError::Json(e.to_string()))?;
    let mut brackets = Vec::new();
    for b in rec.brackets {
        let c = match b.c {
            ScalarEntry::Int(v) => int(v),
            ScalarEntry::Text(s) => parse_scalar(&s).map_err(|e| CarnotError::Json(e.to_string()))?,
        };
        brackets.push(Bracket { i: b.i, j: b.j, k: b.k, c });
    }
    let spec = AlgebraSpec { dim: rec.dim, weights: rec.weights, brackets, poly_degree: rec.poly_degree };
    let violations = validate_lie(&spec);
    if violations.is_empty() {
        Ok(spec)
    } else {
        Err(CarnotError::Invalid(violations))
    }
}

pub fn algebra_to_json(spec: &AlgebraSpec) -> String {
    let rec = AlgebraRecord {
        dim: spec.dim,
        weights: spec.weights.clone(),
        brackets: spec
            .brackets
            .iter()
            .map(|b| BracketRecord { i: b.i, j: b.j, k: b.k, c: ScalarEntry::Text(format_scalar(&b.c)) })
            .collect(),
        poly_degree: spec.poly_degree,
    };
    serde_json::to_string_pretty(&rec).expect("algebra records serialize")
}

/// Polynomial with rational coefficients in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, (0..nvars).map(|t| u32::from(t == i)).collect())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(exps, Scalar::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn deriv(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c * int(i64::from(e[i])));
            }
        }
        out
    }

    /// Sets variables `keep..` to zero and drops them.
    pub fn truncate_vars(&self, keep: usize) -> Poly {
        let mut out = Poly::zero(keep);
        for (e, c) in &self.terms {
            if e[keep..].iter().all(|&x| x == 0) {
                out.add_term(e[..keep].to_vec(), c.clone());
            }
        }
        out
    }

    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t *= xi;
                }
            }
            acc += t;
        }
        acc
    }

    /// Largest `sum e_i w_i` over the terms; `None` for the zero polynomial.
    pub fn weighted_degree(&self, w: &[i64]) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().zip(w).map(|(&k, &wi)| i64::from(k) * wi).sum()).max()
    }

    /// Whether every term has weighted degree exactly `d`.
    pub fn is_homogeneous(&self, w: &[i64], d: i64) -> bool {
        self.terms.keys().all(|e| e.iter().zip(w).map(|(&k, &wi)| i64::from(k) * wi).sum::<i64>() == d)
    }
}

fn lie_bracket(c: &[Vec<Vec<Scalar>>], u: &[Poly], v: &[Poly]) -> Vec<Poly> {
    let n = c.len();
    let nv = u[0].nvars();
    let mut w = vec![Poly::zero(nv); n];
    for a in 0..n {
        for b in 0..n {
            if u[a].is_zero() || v[b].is_zero() {
                continue;
            }
            let prod = u[a].mul(&v[b]);
            for k in 0..n {
                if !c[a][b][k].is_zero() {
                    w[k] = w[k].add(&prod.scale(&c[a][b][k]));
                }
            }
        }
    }
    w
}

/// Group product `μ(x, y) = log(exp x exp y)` in exponential coordinates, as
/// polynomials in `x_1..x_n, y_1..y_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLaw {
    pub dim: usize,
    pub components: Vec<Poly>,
}

impl GroupLaw {
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let xy: Vec<Scalar> = x.iter().chain(y).cloned().collect();
        self.components.iter().map(|p| p.eval(&xy)).collect()
    }

    /// Checks `μ(μ(a,b),c) = μ(a,μ(b,c))` on random rational triples.
    pub fn check_associativity(&self, seed: u64, trials: usize) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut point = || -> Vec<Scalar> {
            (0..self.dim).map(|_| frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect()
        };
        (0..trials).all(|_| {
            let (a, b, c) = (point(), point(), point());
            self.apply(&self.apply(&a, &b), &c) == self.apply(&a, &self.apply(&b, &c))
        })
    }
}

fn factorial(n: usize) -> Scalar {
    (1..=n as i64).map(int).fold(Scalar::one(), |a, b| a * b)
}

/// All sequences of pairs `(r_i, s_i)` with `r_i + s_i ≥ 1` summing to `m`.
fn pair_compositions(m: usize) -> Vec<Vec<(usize, usize)>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=m {
        for rest in pair_compositions(m - first) {
            for r in 0..=first {
                let mut seq = vec![(r, first - r)];
                seq.extend(rest.iter().copied());
                out.push(seq);
            }
        }
    }
    out
}

/// Dynkin's form of the Baker–Campbell–Hausdorff series, truncated at
/// nesting depth equal to the step, which is exact for graded nilpotent
/// algebras.
pub fn bch_group_law(spec: &AlgebraSpec) -> GroupLaw {
    let n = spec.dim;
    let c = spec.structure_constants();
    let x: Vec<Poly> = (0..n).map(|i| Poly::var(2 * n, i)).collect();
    let y: Vec<Poly> = (0..n).map(|i| Poly::var(2 * n, n + i)).collect();
    let mut memo: HashMap<Vec<bool>, Vec<Poly>> = HashMap::new();
    let mut nested = |word: &[bool]| -> Vec<Poly> {
        if let Some(v) = memo.get(word) {
            return v.clone();
        }
        let letter = |b: bool| if b { y.clone() } else { x.clone() };
        let mut v = letter(word[word.len() - 1]);
        for &b in word[..word.len() - 1].iter().rev() {
            v = lie_bracket(&c, &letter(b), &v);
        }
        memo.insert(word.to_vec(), v.clone());
        v
    };
    let mut z = vec![Poly::zero(2 * n); n];
    for m in 1..=spec.step().max(1) as usize {
        for seq in pair_compositions(m) {
            let &(rl, sl) = seq.last().expect("nonempty composition");
            if m > 1 && (sl > 1 || (sl == 0 && rl > 1)) {
                continue;
            }
            let parts = seq.len();
            let mut denom = int((parts * m) as i64);
            for &(r, s) in &seq {
                denom *= factorial(r) * factorial(s);
            }
            let sign = if parts % 2 == 1 { Scalar::one() } else { -Scalar::one() };
            let coeff = sign / denom;
            let word: Vec<bool> = seq
                .iter()
                .flat_map(|&(r, s)| std::iter::repeat_n(false, r).chain(std::iter::repeat_n(true, s)))
                .collect();
            let term = nested(&word);
            for k in 0..n {
                z[k] = z[k].add(&term[k].scale(&coeff));
            }
        }
    }
    GroupLaw { dim: n, components: z }
}

/// Left-invariant field `X_j = sum_k a_{jk}(x) ∂_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    pub coefficients: Vec<Poly>,
}

impl VectorField {
    pub fn apply(&self, f: &Poly) -> Poly {
        self.coefficients
            .iter()
            .enumerate()
            .fold(Poly::zero(f.nvars()), |acc, (k, a)| acc.add(&a.mul(&f.deriv(k))))
    }

    pub fn commutator(&self, other: &VectorField) -> VectorField {
        let coefficients = other
            .coefficients
            .iter()
            .zip(&self.coefficients)
            .map(|(b, a)| self.apply(b).sub(&other.apply(a)))
            .collect();
        VectorField { coefficients }
    }
}

/// `a_{jk}(x) = ∂μ_k/∂y_j (x, 0)`.
pub fn left_invariant_fields(law: &GroupLaw) -> Vec<VectorField> {
    let n = law.dim;
    (0..n)
        .map(|j| VectorField {
            coefficients: law.components.iter().map(|m| m.deriv(n + j).truncate_vars(n)).collect(),
        })
        .collect()
}

/// Verifies `[X_i, X_j] = sum_k c_{ij}^k X_k` and the weight homogeneity of
/// each coefficient. Returns descriptions of failures.
pub fn check_fields(spec: &AlgebraSpec, fields: &[VectorField]) -> Vec<String> {
    let n = spec.dim;
    let c = spec.structure_constants();
    let mut out = Vec::new();
    for (j, f) in fields.iter().enumerate() {
        for (k, a) in f.coefficients.iter().enumerate() {
            if !a.is_homogeneous(&spec.weights, spec.weights[k] - spec.weights[j]) {
                out.push(format!("coefficient a_{{{}{}}} is not homogeneous", j + 1, k + 1));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = fields[i].commutator(&fields[j]);
            let mut rhs = vec![Poly::zero(n); n];
            for (m, field) in fields.iter().enumerate() {
                if c[i][j][m].is_zero() {
                    continue;
                }
                for k in 0..n {
                    rhs[k] = rhs[k].add(&field.coefficients[k].scale(&c[i][j][m]));
                }
            }
            if lhs.coefficients != rhs {
                out.push(format!("[X_{}, X_{}] does not match the structure constants", i + 1, j + 1));
            }
        }
    }
    out
}

/// Exponent vectors of weighted degree at most `d`, ordered by weighted
/// degree then lexicographically.
pub fn monomials(weights: &[i64], d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &w in weights {
        let mut next = Vec::new();
        for e in &out {
            let used: i64 = e.iter().zip(weights).map(|(&k, &wi)| i64::from(k) * wi).sum();
            let mut k = 0u32;
            while used + i64::from(k) * w <= i64::from(d) {
                let mut e2 = e.clone();
                e2.push(k);
                next.push(e2);
                k += 1;
            }
        }
        out = next;
    }
    let deg = |e: &Vec<u32>| e.iter().zip(weights).map(|(&k, &wi)| i64::from(k) * wi).sum::<i64>();
    out.sort_by(|a, b| deg(a).cmp(&deg(b)).then_with(|| b.cmp(a)));
    out
}

pub fn monomial_label(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn covector_label(idx: &[usize]) -> String {
    if idx.is_empty() {
        "1".into()
    } else {
        idx.iter().map(|i| format!("t{}", i + 1)).collect::<Vec<_>>().join("^")
    }
}

/// Parses `"<coef>|t1^t3"` into the coefficient label and 0-based covector
/// indices.
pub fn parse_form_label(label: &str) -> Option<(String, Vec<usize>)> {
    let (coef, cov) = label.split_once('|')?;
    if cov == "1" {
        return Some((coef.to_string(), Vec::new()));
    }
    let idx = cov
        .split('^')
        .map(|t| t.strip_prefix('t')?.parse::<usize>().ok()?.checked_sub(1))
        .collect::<Option<Vec<_>>>()?;
    idx.windows(2).all(|w| w[0] < w[1]).then_some((coef.to_string(), idx))
}

/// Sorts indices, returning the permutation sign, or `None` on a repeat.
fn sort_with_sign(mut v: Vec<usize>) -> Option<(Vec<usize>, i64)> {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    v.windows(2).all(|w| w[0] != w[1]).then_some((v, sign))
}

/// `d(θ_I)` as a combination of sorted index sets.
fn ce_differential(c: &[Vec<Vec<Scalar>>], idx: &[usize]) -> Vec<(Vec<usize>, Scalar)> {
    let n = c.len();
    let mut out: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    for (t, &k) in idx.iter().enumerate() {
        let leibniz = if t % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        for a in 0..n {
            for b in a + 1..n {
                if c[a][b][k].is_zero() {
                    continue;
                }
                let mut seq = idx[..t].to_vec();
                seq.extend([a, b]);
                seq.extend_from_slice(&idx[t + 1..]);
                if let Some((sorted, sign)) = sort_with_sign(seq) {
                    let v = -&c[a][b][k] * &leibniz * int(sign);
                    *out.entry(sorted).or_insert_with(Scalar::zero) += v;
                }
            }
        }
    }
    out.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Coefficient module: a basis with labels and, for each generator, the
/// matrix of its action.
struct Coefficients {
    labels: Vec<String>,
    actions: Vec<Matrix>,
}

fn build_derham(spec: &AlgebraSpec, coef: &Coefficients) -> Result<Multicomplex, CarnotError> {
    let violations = validate_lie(spec);
    if !violations.is_empty() {
        return Err(CarnotError::Invalid(violations));
    }
    let n = spec.dim;
    let c = spec.structure_constants();
    let m = coef.labels.len();
    let mut subsets: Vec<Vec<usize>> =
        (0u32..1 << n).map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect()).collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let weight = |idx: &[usize]| idx.iter().map(|&i| spec.weights[i]).sum::<i64>();
    let mut position: HashMap<Vec<usize>, (Bidegree, usize)> = HashMap::new();
    let mut spaces: BTreeMap<Bidegree, Space> = BTreeMap::new();
    for idx in &subsets {
        let bd = Bidegree::at(weight(idx), idx.len() as i64);
        let sp = spaces.entry(bd).or_insert(Space { dim: 0, labels: Vec::new() });
        position.insert(idx.clone(), (bd, sp.dim));
        for l in &coef.labels {
            sp.labels.push(format!("{l}|{}", covector_label(idx)));
        }
        sp.dim += m;
    }
    let mut maps: BTreeMap<(usize, Bidegree), Matrix> = BTreeMap::new();
    let mut put = |i: usize, src: Bidegree, row: usize, col: usize, v: Scalar, spaces: &BTreeMap<Bidegree, Space>| {
        let tgt = src.shift(i as i64);
        let mat = maps
            .entry((i, src))
            .or_insert_with(|| Matrix::zeros(spaces[&tgt].dim, spaces[&src].dim));
        let cur = mat.get(row, col).clone();
        mat.set(row, col, cur + v);
    };
    for idx in &subsets {
        let (src, base) = position[idx];
        for (didx, v) in ce_differential(&c, idx) {
            let (_, tbase) = position[&didx];
            for f in 0..m {
                put(0, src, tbase + f, base + f, v.clone(), &spaces);
            }
        }
        for j in 0..n {
            let mut seq = vec![j];
            seq.extend_from_slice(idx);
            let Some((sorted, sign)) = sort_with_sign(seq) else { continue };
            let (_, tbase) = position[&sorted];
            let w = spec.weights[j] as usize;
            let act = &coef.actions[j];
            for f in 0..m {
                for g in 0..m {
                    let v = act.get(g, f);
                    if !v.is_zero() {
                        put(w, src, tbase + g, base + f, v * int(sign), &spaces);
                    }
                }
            }
        }
    }
    let ext = ExteriorInfo { generator_weights: spec.weights.clone() };
    Ok(Multicomplex::new(spec.top_weight(), spec.step() as usize + 1, spaces, maps, Some(ext))?)
}

/// Truncated polynomial de Rham multicomplex of the group.
pub fn polynomial_derham(spec: &AlgebraSpec) -> Result<Multicomplex, CarnotError> {
    let fields = left_invariant_fields(&bch_group_law(spec));
    let monos = monomials(&spec.weights, spec.poly_degree);
    let index: HashMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let actions = fields
        .iter()
        .map(|field| {
            let mut mat = Matrix::zeros(monos.len(), monos.len());
            for (col, e) in monos.iter().enumerate() {
                for (te, v) in field.apply(&Poly::monomial(spec.dim, e.clone())).terms() {
                    mat.set(index[te], col, v.clone());
                }
            }
            mat
        })
        .collect();
    let labels = monos.iter().map(|e| monomial_label(e)).collect();
    build_derham(spec, &Coefficients { labels, actions })
}

/// De Rham complex twisted by the representation on `R^2` where a
/// first-layer generator `X_j` acts by `λ_j J` (`J` the rotation by a right
/// angle) and higher layers act by zero.
pub fn twisted_derham(spec: &AlgebraSpec, lambdas: &[Scalar]) -> Result<Multicomplex, CarnotError> {
    let actions = (0..spec.dim)
        .map(|j| {
            let l = if spec.weights[j] == 1 { lambdas.get(j).cloned().unwrap_or_default() } else { Scalar::zero() };
            Matrix::from_rows(2, vec![vec![Scalar::zero(), -l.clone()], vec![l, Scalar::zero()]])
        })
        .collect();
    build_derham(spec, &Coefficients { labels: vec!["c1".into(), "c2".into()], actions })
}

/// Coefficient label and covector indices of every basis vector at `bd`.
pub fn form_basis(mc: &Multicomplex, bd: Bidegree) -> Vec<(String, Vec<usize>)> {
    mc.labels(bd).iter().filter_map(|l| parse_form_label(l)).collect()
}

/// Covector monomials carrying a nonzero component in some vector of the
/// subspace spanned by `vectors` at `bd`.
pub fn covector_support(mc: &Multicomplex, bd: Bidegree, vectors: &[Vec<Scalar>]) -> BTreeSet<Vec<usize>> {
    let basis = form_basis(mc, bd);
    let mut out = BTreeSet::new();
    for v in vectors {
        for (x, (_, idx)) in v.iter().zip(&basis) {
            if !x.is_zero() {
                out.insert(idx.clone());
            }
        }
    }
    out
}

/// Rank of the covector part of a subspace: for each coefficient label, the
/// dimension of the span of its covector components; the maximum is
/// returned. On `E_0` of the polynomial model this is the number of
/// independent covector directions per coefficient monomial.
pub fn covector_rank(mc: &Multicomplex, bd: Bidegree, vectors: &[Vec<Scalar>]) -> usize {
    let basis = form_basis(mc, bd);
    let covs: Vec<Vec<usize>> = {
        let set: BTreeSet<Vec<usize>> = basis.iter().map(|(_, i)| i.clone()).collect();
        set.into_iter().collect()
    };
    let coefs: BTreeSet<&String> = basis.iter().map(|(c, _)| c).collect();
    coefs
        .into_iter()
        .map(|coef| {
            let rows: Vec<Vec<Scalar>> = vectors
                .iter()
                .map(|v| {
                    covs.iter()
                        .map(|cov| {
                            basis
                                .iter()
                                .zip(v)
                                .find(|((c, i), _)| c == coef && i == cov)
                                .map_or_else(Scalar::zero, |(_, x)| x.clone())
                        })
                        .collect()
                })
                .collect();
            Matrix::from_rows(covs.len(), rows).rank()
        })
        .max()
        .unwrap_or(0)
}
