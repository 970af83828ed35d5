//! Summary reports of an instance as text, deterministic JSON, and DOT.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::multicomplex::Multicomplex;
use crate::oracle::{classical_pages, compare};
use crate::rumin::Rumin;
use crate::spectral::{Enumeration, Spectral};
use crate::star::StarKit;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub name: String,
    pub q: i64,
    pub s: usize,
    pub total_dim: usize,
    pub degrees: Option<(i64, i64)>,
    pub exterior: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct E0Cell {
    pub k: i64,
    pub p: i64,
    pub dim: usize,
    /// `I_{p,k}`.
    pub orders: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StationReport {
    pub k: i64,
    pub p: i64,
    pub j_out: usize,
    pub j_in: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub order: usize,
    pub rank: usize,
    /// Orders of the `d_c^i` terms contributing to `Δ`.
    pub summands: Vec<usize>,
    pub lands_in_station: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub stations: Vec<StationReport>,
    pub edges: Vec<EdgeReport>,
    pub delta_squared_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub k: i64,
    pub rumin: usize,
    pub total: usize,
    pub e_infinity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub cells: usize,
    pub mismatches: Vec<String>,
    pub all_match: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarVerdict {
    pub star_squared: bool,
    pub isometry: bool,
    pub e0_closure: bool,
    /// Orders `i` where `δ_i = d_i^T` disagrees with `±⋆d_i⋆`.
    pub delta_failures: Vec<usize>,
    pub delta_c_failures: Vec<usize>,
    pub station_mismatches: Vec<String>,
}

impl StarVerdict {
    pub fn ok(&self) -> bool {
        self.star_squared
            && self.isometry
            && self.e0_closure
            && self.delta_failures.is_empty()
            && self.delta_c_failures.is_empty()
            && self.station_mismatches.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub instance: Instance,
    pub e0: Vec<E0Cell>,
    pub chains: Vec<ChainReport>,
    pub chains_truncated: bool,
    pub cohomology: Vec<DegreeRow>,
    pub oracle: Option<OracleVerdict>,
    pub star: Option<StarVerdict>,
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub max_chains: usize,
    pub oracle: bool,
    pub star: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { max_chains: 256, oracle: true, star: true }
    }
}

fn chain_reports(en: &Enumeration) -> Vec<ChainReport> {
    en.complexes
        .iter()
        .map(|c| ChainReport {
            stations: c
                .stations
                .iter()
                .map(|s| StationReport { k: s.k, p: s.p, j_out: s.j_out, j_in: s.j_in, dim: s.space.dim() })
                .collect(),
            edges: c
                .edges
                .iter()
                .map(|e| EdgeReport {
                    order: e.order,
                    rank: e.rank,
                    summands: e.summands.iter().copied().collect(),
                    lands_in_station: e.lands_in_station,
                })
                .collect(),
            delta_squared_zero: c.delta_squared_zero,
        })
        .collect()
}

/// Star checks over the stations of the enumerated chains.
pub fn star_verdict(mc: &Multicomplex, rumin: &Rumin, spectral: &Spectral<'_>, en: &Enumeration) -> Option<StarVerdict> {
    let kit = StarKit::build(mc).ok()?;
    let report = kit.check(mc, Some(rumin));
    let cells: BTreeSet<(usize, usize, i64, i64)> = en
        .complexes
        .iter()
        .flat_map(|c| c.stations.iter().map(|s| (s.j_out, s.j_in, s.p, s.k)))
        .collect();
    let orders = |v: &[(usize, i64, i64)]| -> Vec<usize> {
        v.iter().map(|t| t.0).collect::<BTreeSet<_>>().into_iter().collect()
    };
    Some(StarVerdict {
        star_squared: report.star_squared.is_empty(),
        isometry: report.isometry.is_empty(),
        e0_closure: report.e0_closure.is_empty(),
        delta_failures: orders(&report.delta),
        delta_c_failures: orders(&report.delta_c),
        station_mismatches: kit
            .check_stations(spectral, cells)
            .into_iter()
            .filter(|d| !d.equal)
            .map(|d| {
                format!(
                    "star of E_{{{},{}}} at (p={}, k={}) has dim {}, dual station has dim {}",
                    d.r1, d.r2, d.p, d.k, d.star_dim, d.dual_dim
                )
            })
            .collect(),
    })
}

impl Report {
    pub fn build(mc: &Multicomplex, name: &str, opts: &ReportOptions) -> Report {
        let rumin = Rumin::build(mc);
        let spectral = Spectral::new(&rumin);
        let instance = Instance {
            name: name.to_string(),
            q: mc.q(),
            s: mc.s(),
            total_dim: mc.total_dim(),
            degrees: mc.degree_range(),
            exterior: mc.exterior().is_some(),
        };
        let mut e0 = Vec::new();
        let mut cohomology = Vec::new();
        let rumin_h = rumin.cohomology();
        let total_h = mc.total_cohomology();
        for k in rumin.degrees() {
            for p in spectral.weights(k) {
                let dim = spectral.e0(p, k).dim();
                if dim > 0 {
                    e0.push(E0Cell { k, p, dim, orders: spectral.index_set(p, k).into_iter().collect() });
                }
            }
            cohomology.push(DegreeRow {
                k,
                rumin: rumin_h.get(&k).copied().unwrap_or(0),
                total: total_h.get(&k).copied().unwrap_or(0),
                e_infinity: spectral.e_infinity(k).values().sum(),
            });
        }
        let en = spectral.enumerate(opts.max_chains);
        let oracle = opts.oracle.then(|| {
            let pages = classical_pages(mc, spectral.r_infinity());
            let mut mismatches: Vec<String> = compare(&pages, &spectral)
                .into_iter()
                .map(|m| {
                    format!(
                        "{} at r={}, p={}, k={}: engine {}, oracle {}",
                        m.what, m.r, m.p, m.h, m.engine, m.oracle
                    )
                })
                .collect();
            mismatches.extend(
                pages.recursion_failures().into_iter().map(|(r, p, h)| format!("page recursion at r={r}, p={p}, k={h}")),
            );
            OracleVerdict { cells: pages.dims.len(), all_match: mismatches.is_empty(), mismatches }
        });
        let star = if opts.star { star_verdict(mc, &rumin, &spectral, &en) } else { None };
        Report {
            instance,
            e0,
            chains: chain_reports(&en),
            chains_truncated: en.truncated,
            cohomology,
            oracle,
            star,
        }
    }

    /// Pretty JSON with keys sorted at every level.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        serde_json::to_string_pretty(&value).expect("values serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let i = &self.instance;
        let _ = writeln!(out, "instance {}: Q = {}, s = {}, total dimension {}", i.name, i.q, i.s, i.total_dim);
        let _ = writeln!(out, "\nharmonic spaces E_0 (degree k, weight p):");
        for c in &self.e0 {
            let _ = writeln!(out, "  k={:<3} p={:<3} dim {:<5} I = {:?}", c.k, c.p, c.dim, c.orders);
        }
        let _ = writeln!(
            out,
            "\nspectral complexes: {}{}",
            self.chains.len(),
            if self.chains_truncated { " (truncated)" } else { "" }
        );
        for (n, c) in self.chains.iter().enumerate() {
            let path: Vec<String> = c
                .stations
                .iter()
                .map(|s| format!("E_{{{},{}}}^({},{}) [{}]", s.j_out, s.j_in, s.p, s.k - s.p, s.dim))
                .collect();
            let _ = writeln!(out, "  chain {}: {}", n + 1, path.join(" -> "));
            for e in &c.edges {
                let multi = if e.summands.len() > 1 { " (several summands)" } else { "" };
                let _ = writeln!(out, "    Δ_{} rank {} summands {:?}{}", e.order, e.rank, e.summands, multi);
            }
            let _ = writeln!(out, "    Δ∘Δ = 0: {}", c.delta_squared_zero);
        }
        let _ = writeln!(out, "\ncohomology (k: Rumin / total / E_∞):");
        for r in &self.cohomology {
            let _ = writeln!(out, "  {:<3} {} / {} / {}", r.k, r.rumin, r.total, r.e_infinity);
        }
        if let Some(o) = &self.oracle {
            if o.all_match {
                let _ = writeln!(out, "\noracle: all pages match ({} cells)", o.cells);
            } else {
                let _ = writeln!(out, "\noracle: {} mismatches", o.mismatches.len());
                for m in &o.mismatches {
                    let _ = writeln!(out, "  {m}");
                }
            }
        }
        if let Some(s) = &self.star {
            let _ = writeln!(out, "\nstar duality: {}", if s.ok() { "holds" } else { "fails" });
            let _ = writeln!(out, "  ⋆⋆ sign law: {}", s.star_squared);
            let _ = writeln!(out, "  isometry: {}", s.isometry);
            let _ = writeln!(out, "  E_0 closure: {}", s.e0_closure);
            let _ = writeln!(out, "  δ_i failing orders: {:?}", s.delta_failures);
            let _ = writeln!(out, "  δ_c^i failing orders: {:?}", s.delta_c_failures);
            for m in &s.station_mismatches {
                let _ = writeln!(out, "  {m}");
            }
        }
        out
    }

    /// Graphviz digraph: degree along the horizontal axis, weight along the
    /// vertical one, edges labelled by the order of `d_c`.
    pub fn to_dot(&self) -> String {
        let id = |k: i64, p: i64| format!("\"e0_{k}_{p}\"");
        let mut out = String::from("digraph multicomplex {\n  rankdir=LR;\n  node [shape=box];\n");
        let mut degrees: Vec<i64> = self.e0.iter().map(|c| c.k).collect();
        degrees.dedup();
        for c in &self.e0 {
            let _ = writeln!(out, "  {} [label=\"k={} p={} dim={}\"];", id(c.k, c.p), c.k, c.p, c.dim);
        }
        for k in degrees {
            let ids: Vec<String> = self.e0.iter().filter(|c| c.k == k).map(|c| id(c.k, c.p)).collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
        }
        for c in &self.e0 {
            for &j in &c.orders {
                let _ = writeln!(
                    out,
                    "  {} -> {} [label=\"d_c^{}\"];",
                    id(c.k, c.p),
                    id(c.k + 1, c.p + j as i64),
                    j
                );
            }
        }
        for (n, chain) in self.chains.iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_chain_{} {{", n + 1);
            let _ = writeln!(out, "    label=\"chain {}\";", n + 1);
            for s in &chain.stations {
                let _ = writeln!(out, "    {};", id(s.k, s.p));
            }
            out.push_str("  }\n");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carnot::{catalog, polynomial_derham};

    #[test]
    fn heisenberg_report() {
        let mc = polynomial_derham(&catalog("heisenberg1", 2).unwrap()).unwrap();
        let r = Report::build(&mc, "heisenberg1", &ReportOptions::default());
        assert_eq!(r.e0.len(), 4);
        assert_eq!(r.chains.len(), 1);
        let orders: Vec<usize> = r.chains[0].edges.iter().map(|e| e.order).collect();
        assert_eq!(orders, vec![1, 2, 1]);
        assert!(r.oracle.as_ref().unwrap().all_match);
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        let dot = r.to_dot();
        assert_eq!(dot.matches("->").count(), 3);
        assert_eq!(dot.matches("subgraph cluster_chain_").count(), 1);
    }

    #[test]
    fn pure_d0_has_no_edges() {
        let mc = polynomial_derham(&catalog("engel", 0).unwrap()).unwrap();
        let r = Report::build(&mc, "engel", &ReportOptions { star: false, ..Default::default() });
        assert!(r.chains.is_empty());
        assert_eq!(r.to_dot().matches("->").count(), 0);
    }
}
