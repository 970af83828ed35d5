//! Random multicomplexes with known cohomology and known spectral pages.
//!
//! The differential `e` is a direct sum of elementary pieces: isolated
//! cocycles, and pairs `x -> y` raising weight by a fixed shift. Conjugating by
//! a filtration-preserving `g = g_0 + n` (weight-preserving invertible `g_0`,
//! strictly weight-raising `n`) scrambles the matrices but keeps the filtered
//! isomorphism type, so cohomology and every page are known in closed form.
//! With `max_shift = 0` and no mixing of `g_0`, this is the weight-preserving
//! conjugation model `d = g e g^{-1}`.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{int, Matrix, Scalar};
use crate::multicomplex::{Bidegree, Multicomplex, Space};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomParams {
    /// Maximal weight `Q`.
    pub q: i64,
    /// Degrees used are `0..=max_degree`.
    pub max_degree: i64,
    pub max_total_dim: usize,
    /// Attempted number of elementary pairs.
    pub pieces: usize,
    pub cocycles: usize,
    /// Largest weight shift of a pair; `0` gives a weight-preserving `e`.
    pub max_shift: i64,
    /// Restricts the weights that survive to `E_1` in each degree.
    pub weights_per_degree: Option<usize>,
    /// Chooses surviving weights strictly increasing with the degree.
    pub increasing: bool,
    /// Adds a pair between every two consecutive degrees when possible.
    pub connect: bool,
    /// Conjugates by a random filtered automorphism; otherwise `d = e`.
    pub mix: bool,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            q: 4,
            max_degree: 3,
            max_total_dim: 24,
            pieces: 6,
            cocycles: 3,
            max_shift: 3,
            weights_per_degree: None,
            increasing: false,
            connect: false,
            mix: true,
        }
    }
}

/// An elementary pair from weight `a` in degree `h` to weight `a + shift` in
/// degree `h + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Piece {
    pub a: i64,
    pub h: i64,
    pub shift: i64,
}

#[derive(Clone, Debug)]
pub struct RandomInstance {
    pub seed: u64,
    pub multicomplex: Multicomplex,
    pub pieces: Vec<Piece>,
    /// Cocycles as `(weight, degree)`.
    pub cocycles: Vec<(i64, i64)>,
}

impl RandomInstance {
    pub fn total_cohomology(&self) -> BTreeMap<i64, usize> {
        let mut out: BTreeMap<i64, usize> = BTreeMap::new();
        if let Some((lo, hi)) = self.multicomplex.degree_range() {
            for h in lo..=hi {
                out.insert(h, 0);
            }
        }
        for &(_, h) in &self.cocycles {
            *out.entry(h).or_default() += 1;
        }
        out
    }

    /// `dim E_r^{p}` in total degree `h`.
    pub fn page_dim(&self, r: usize, p: i64, h: i64) -> usize {
        let r = r as i64;
        let cocycles = self.cocycles.iter().filter(|&&c| c == (p, h)).count();
        let pairs = self
            .pieces
            .iter()
            .filter(|x| x.shift >= r)
            .filter(|x| (x.a, x.h) == (p, h) || (x.a + x.shift, x.h + 1) == (p, h))
            .count();
        cocycles + pairs
    }

    /// Rank of the page differential `d_r` leaving weight `p`, degree `h`.
    pub fn page_rank(&self, r: usize, p: i64, h: i64) -> usize {
        self.pieces.iter().filter(|x| x.shift == r as i64 && (x.a, x.h) == (p, h)).count()
    }
}

/// Position of a basis vector: its bidegree and index within the space.
type BasisIndex = (Bidegree, usize);

fn nonzero_small(rng: &mut ChaCha8Rng) -> Scalar {
    let v: i64 = *[-2, -1, 1, 1, 2, 3].choose(rng).expect("nonempty");
    int(v)
}

fn unimodular(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, int(rng.gen_range(-1..=1)));
            upper.set(j, i, int(rng.gen_range(-1..=1)));
        }
    }
    &lower * &upper
}

fn allowed_weights(rng: &mut ChaCha8Rng, p: &RandomParams) -> Vec<Vec<i64>> {
    let all: Vec<i64> = (0..=p.q).collect();
    match p.weights_per_degree {
        None => (0..=p.max_degree).map(|_| all.clone()).collect(),
        Some(k) if p.increasing => {
            // One strictly increasing sequence per slot keeps every degree's
            // weights above those of the previous degree.
            let slots = (p.max_degree + 1) as usize;
            let mut seqs: Vec<Vec<i64>> = Vec::new();
            for _ in 0..k.max(1) {
                let mut s: Vec<i64> =
                    all.choose_multiple(rng, slots.min(all.len())).copied().collect();
                s.sort_unstable();
                seqs.push(s);
            }
            (0..slots)
                .map(|h| {
                    let mut w: Vec<i64> = seqs.iter().filter_map(|s| s.get(h).copied()).collect();
                    w.sort_unstable();
                    w.dedup();
                    w
                })
                .collect()
        }
        Some(k) => (0..=p.max_degree)
            .map(|_| {
                let take = rng.gen_range(1..=k.max(1).min(all.len()));
                let mut w: Vec<i64> = all.choose_multiple(rng, take).copied().collect();
                w.sort_unstable();
                w
            })
            .collect(),
    }
}

/// Generates a random multicomplex; deterministic in `seed`.
pub fn random_conjugated_multicomplex(seed: u64, params: &RandomParams) -> RandomInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let allowed = allowed_weights(&mut rng, params);
    let mut pieces: Vec<Piece> = Vec::new();
    let mut cocycles: Vec<(i64, i64)> = Vec::new();
    let mut used = 0usize;

    let link = |rng: &mut ChaCha8Rng, h: i64| -> Option<Piece> {
        let src = &allowed[h as usize];
        let tgt = &allowed[h as usize + 1];
        let pairs: Vec<(i64, i64)> = src
            .iter()
            .flat_map(|&a| tgt.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| b > a && b - a <= params.max_shift)
            .collect();
        pairs.choose(rng).map(|&(a, b)| Piece { a, h, shift: b - a })
    };

    if params.connect {
        for h in 0..params.max_degree {
            if used + 2 > params.max_total_dim {
                break;
            }
            if let Some(pc) = link(&mut rng, h) {
                pieces.push(pc);
                used += 2;
            }
        }
    }
    for _ in 0..params.cocycles {
        if used + 1 > params.max_total_dim {
            break;
        }
        let h = rng.gen_range(0..=params.max_degree);
        let a = *allowed[h as usize].choose(&mut rng).expect("nonempty weights");
        cocycles.push((a, h));
        used += 1;
    }
    for _ in 0..params.pieces {
        if used + 2 > params.max_total_dim || params.max_degree == 0 {
            break;
        }
        let h = rng.gen_range(0..params.max_degree);
        let flat = params.max_shift == 0 || rng.gen_bool(0.3);
        let piece = if flat {
            Some(Piece { a: rng.gen_range(0..=params.q), h, shift: 0 })
        } else {
            link(&mut rng, h)
        };
        if let Some(pc) = piece {
            pieces.push(pc);
            used += 2;
        }
    }

    // Basis: every bidegree collects its vectors in creation order.
    let mut counts: BTreeMap<Bidegree, usize> = BTreeMap::new();
    let mut add = |a: i64, h: i64| -> (Bidegree, usize) {
        let bd = Bidegree::at(a, h);
        let c = counts.entry(bd).or_default();
        *c += 1;
        (bd, *c - 1)
    };
    let mut edges: Vec<(BasisIndex, BasisIndex, Scalar)> = Vec::new();
    for &(a, h) in &cocycles {
        add(a, h);
    }
    for pc in &pieces {
        let s = add(pc.a, pc.h);
        let t = add(pc.a + pc.shift, pc.h + 1);
        edges.push((s, t, nonzero_small(&mut rng)));
    }
    let spaces: BTreeMap<Bidegree, Space> = counts
        .iter()
        .map(|(bd, &dim)| {
            let labels = (0..dim).map(|i| format!("v{}_{}_{}", bd.a, bd.b, i)).collect();
            (*bd, Space { dim, labels })
        })
        .collect();
    let skeleton = Multicomplex::new(params.q, params.q as usize + 1, spaces.clone(), BTreeMap::new(), None)
        .expect("skeleton without maps is valid");

    let mut maps: BTreeMap<(usize, Bidegree), Matrix> = BTreeMap::new();
    if let Some((lo, hi)) = skeleton.degree_range() {
        let layouts: BTreeMap<i64, _> = (lo..=hi + 1).map(|h| (h, skeleton.layout(h))).collect();
        let index = |bd: Bidegree, i: usize| {
            layouts[&bd.degree()].block(bd.a).expect("block exists").offset + i
        };
        let mut g: BTreeMap<i64, Matrix> = BTreeMap::new();
        for (&h, lay) in &layouts {
            let mut m = Matrix::identity(lay.dim);
            if params.mix {
                for t in &lay.blocks {
                    for s in &lay.blocks {
                        if t.a == s.a {
                            m.set_block(t.offset, s.offset, &unimodular(&mut rng, t.dim));
                        } else if t.a > s.a {
                            let blk = Matrix::from_fn(t.dim, s.dim, |_, _| int(rng.gen_range(-1..=1)));
                            m.set_block(t.offset, s.offset, &blk);
                        }
                    }
                }
            }
            g.insert(h, m);
        }
        for h in lo..=hi {
            let (src, tgt) = (&layouts[&h], &layouts[&(h + 1)]);
            let mut e = Matrix::zeros(tgt.dim, src.dim);
            for (s, t, c) in &edges {
                if s.0.degree() == h {
                    e.set(index(t.0, t.1), index(s.0, s.1), c.clone());
                }
            }
            let g_inv = g[&h].inverse().expect("filtered automorphism is invertible");
            let d = &(&g[&(h + 1)] * &e) * &g_inv;
            for sb in &src.blocks {
                for tb in &tgt.blocks {
                    let blk = d.block(tb.offset, sb.offset, tb.dim, sb.dim);
                    if blk.is_zero() {
                        continue;
                    }
                    assert!(tb.a >= sb.a, "conjugated differential lowers weight");
                    maps.insert(((tb.a - sb.a) as usize, Bidegree::at(sb.a, h)), blk);
                }
            }
        }
    }
    let multicomplex = Multicomplex::new(params.q, params.q as usize + 1, spaces, maps, None)
        .expect("conjugated split complex is a multicomplex");
    RandomInstance { seed, multicomplex, pieces, cocycles }
}
