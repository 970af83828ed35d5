//! Classical spectral sequence of the weight filtration
//! `F^p Tot = ⊕_{a ≥ p} C_{a,*}`, computed by brute force from the total
//! differential. Shares nothing with the Rumin or spectral modules, so it
//! serves as an independent check of both.

use std::collections::BTreeMap;

use crate::linalg::{kernel, Matrix, Subspace};
use crate::multicomplex::{Multicomplex, TotLayout};
use crate::spectral::Spectral;

/// Page dimensions and differential ranks, keyed by `(r, p, h)` with `h` the
/// total degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClassicalPages {
    pub r_max: usize,
    pub dims: BTreeMap<(usize, i64, i64), usize>,
    pub ranks: BTreeMap<(usize, i64, i64), usize>,
}

impl ClassicalPages {
    pub fn dim(&self, r: usize, p: i64, h: i64) -> usize {
        self.dims.get(&(r, p, h)).copied().unwrap_or(0)
    }

    pub fn rank(&self, r: usize, p: i64, h: i64) -> usize {
        self.ranks.get(&(r, p, h)).copied().unwrap_or(0)
    }

    /// `dim E_{r+1} = dim E_r - rank(d_r out) - rank(d_r in)` wherever both
    /// pages were computed. Returns the violating cells.
    pub fn recursion_failures(&self) -> Vec<(usize, i64, i64)> {
        self.dims
            .iter()
            .filter_map(|(&(r, p, h), &d)| {
                let next = *self.dims.get(&(r + 1, p, h))?;
                let out = self.rank(r, p, h);
                let inc = self.rank(r, p - r as i64, h - 1);
                (d < out + inc || next != d - out - inc).then_some((r, p, h))
            })
            .collect()
    }

    /// `Σ_p dim E_{r_max}^{p}` per total degree.
    pub fn e_infinity_totals(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for (&(r, _, h), &d) in &self.dims {
            if r == self.r_max {
                *out.entry(h).or_default() += d;
            }
        }
        out
    }
}

struct Filtered<'a> {
    mc: &'a Multicomplex,
    layouts: BTreeMap<i64, TotLayout>,
    diffs: BTreeMap<i64, Matrix>,
}

impl<'a> Filtered<'a> {
    fn new(mc: &'a Multicomplex, lo: i64, hi: i64) -> Self {
        let layouts = (lo - 1..=hi + 2).map(|h| (h, mc.layout(h))).collect();
        let diffs = (lo - 1..=hi + 1).map(|h| (h, mc.tot_d(h))).collect();
        Filtered { mc, layouts, diffs }
    }

    fn layout(&self, h: i64) -> TotLayout {
        self.layouts.get(&h).cloned().unwrap_or_else(|| self.mc.layout(h))
    }

    fn d(&self, h: i64) -> Matrix {
        self.diffs.get(&h).cloned().unwrap_or_else(|| self.mc.tot_d(h))
    }

    fn coords(layout: &TotLayout, keep: impl Fn(i64) -> bool) -> Vec<usize> {
        layout
            .blocks
            .iter()
            .filter(|b| keep(b.a))
            .flat_map(|b| b.offset..b.offset + b.dim)
            .collect()
    }

    /// `Z_r^p(h) = {x ∈ F^p : D x ∈ F^{p+r}}`; `r < 0` means `F^p`.
    fn z(&self, r: i64, p: i64, h: i64) -> Subspace {
        let src = self.layout(h);
        let cols = Self::coords(&src, |a| a >= p);
        let lift = |vs: Vec<Vec<_>>| {
            let full: Vec<Vec<_>> = vs
                .into_iter()
                .map(|v| {
                    let mut x = vec![Default::default(); src.dim];
                    for (c, val) in cols.iter().zip(v) {
                        x[*c] = val;
                    }
                    x
                })
                .collect();
            Subspace::span(src.dim, &full)
        };
        if r <= 0 {
            return lift(Subspace::full(cols.len()).vectors());
        }
        let rows = Self::coords(&self.layout(h + 1), |a| a < p + r);
        let m = self.d(h).select_rows(&rows).select_columns(&cols);
        lift(kernel(&m).vectors())
    }

    /// `Z_{r-1}^{p+1}(h) + D Z_{r-1}^{p-r+1}(h-1)`.
    fn den(&self, r: i64, p: i64, h: i64) -> Subspace {
        let deeper = self.z(r - 1, p + 1, h);
        let bound = self.z(r - 1, p - r + 1, h - 1).image_under(&self.d(h - 1));
        deeper.sum(&bound)
    }
}

/// Classical pages `E_r`, `0 ≤ r ≤ r_max`, over every weight and degree with
/// a nonzero space.
pub fn classical_pages(mc: &Multicomplex, r_max: usize) -> ClassicalPages {
    let mut pages = ClassicalPages { r_max, ..Default::default() };
    let Some((lo, hi)) = mc.degree_range() else {
        return pages;
    };
    let f = Filtered::new(mc, lo, hi);
    for h in lo..=hi {
        for p in f.layout(h).weights() {
            for r in 0..=r_max {
                let ri = r as i64;
                let z = f.z(ri, p, h);
                let den = f.den(ri, p, h);
                pages.dims.insert((r, p, h), z.dim() - den.dim());
                let den_t = f.den(ri, p + ri, h + 1);
                let image = z.image_under(&f.d(h)).sum(&den_t);
                pages.ranks.insert((r, p, h), image.dim() - den_t.dim());
            }
        }
    }
    pages
}

/// One disagreement between the spectral engine and the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub r: usize,
    pub p: i64,
    pub h: i64,
    pub what: &'static str,
    pub engine: usize,
    pub oracle: usize,
}

/// Compares page dimensions and `Δ_r` ranks for `1 ≤ r ≤ r_max`.
pub fn compare(pages: &ClassicalPages, spectral: &Spectral<'_>) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for (&(r, p, h), &dim) in &pages.dims {
        if r == 0 {
            continue;
        }
        let engine = spectral.page_dim(r, p, h);
        if engine != dim {
            out.push(Mismatch { r, p, h, what: "page dimension", engine, oracle: dim });
        }
        let (engine, oracle) = (spectral.delta_rank(r, p, h), pages.rank(r, p, h));
        if engine != oracle {
            out.push(Mismatch { r, p, h, what: "differential rank", engine, oracle });
        }
    }
    out
}
