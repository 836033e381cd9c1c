use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    default_triangulation, extreme_rays, fp_points, hilbert_basis_simplicial, is_delta_normal,
    is_normal, is_triangulation, normalized_volume, regular_subdivision, regular_triangulation,
    Triangulation,
};
use crate::linalg::{det, lattice_index};
use crate::report::{face_label, CertificateReport, CheckItem};
use crate::toric::{next_subset, Configuration};

pub const DEFAULT_DELTA_TOWER_MAX: usize = 8;
pub const DEFAULT_NON_DELTA_TOWER_MAX: usize = 13;

/// One level `A^d` of a tower.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerLevel {
    pub d: usize,
    pub config: Configuration,
    /// The new columns: `[p_d^+, p_d^-]`, or `[p_d]`.
    pub apex: Vec<usize>,
    /// The padded extreme rays of the previous level.
    pub sigma: Vec<usize>,
    /// Columns of `A^d ∩ K_1` and `A^d ∩ K_2`; empty for the single-apex tower.
    pub k1: Vec<usize>,
    pub k2: Vec<usize>,
    /// Simplicial refinement of `{K_1, K_2}` and a weight inducing it.
    pub triangulation: Option<Triangulation>,
    pub weight: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tower {
    pub base: Configuration,
    pub levels: Vec<TowerLevel>,
}

impl Tower {
    pub fn level(&self, d: usize) -> Option<&TowerLevel> {
        self.levels.iter().find(|l| l.d == d)
    }
}

/// `{x}` followed by `c` padded with a zero coordinate.
fn extend(c: &Configuration, apex: &[Vec<i64>]) -> Result<Configuration> {
    let d = c.d() + 1;
    let mut cols: Vec<Vec<i64>> = apex.to_vec();
    cols.extend(c.columns().iter().map(|a| {
        let mut v = a.clone();
        v.push(0);
        v
    }));
    Configuration::new(d, cols)
}

fn shift(idx: &[usize], by: usize) -> Vec<usize> {
    idx.iter().map(|i| i + by).collect()
}

/// Levels `A^5..A^{d_max}` over a Firla-Ziegler configuration, with
/// `A^d = {p_d^+, p_d^-} ∪ A^{d-1}'` and `p_d^± = e_1 + ... + e_4 ± e_d`.
///
/// `K_1, K_2` stop being simplicial once `d ≥ 6`, so each level also
/// carries the refinement `{{1} ∪ τ, {2} ∪ τ : τ ∈ Δ^{d-1}}` starting from
/// the simplex on the four rays of the base. It is realized by weights
/// `(M, M, w_{d-1})` with `M` doubled until it induces the refinement.
pub fn delta_normal_tower(base: &Configuration, d_max: usize) -> Result<Tower> {
    if base.d() != 4 {
        return Err(Error::Input(format!(
            "tower base must live in Z^4, got dimension {}",
            base.d()
        )));
    }
    let rays = extreme_rays(base)?;
    if rays.len() != 4 {
        return Err(Error::Input(format!(
            "tower base must have a simplicial cone, found {} extreme rays",
            rays.len()
        )));
    }
    let mut prev = base.clone();
    let mut prev_rays = rays.clone();
    let mut prev_t = Triangulation::new(vec![rays.clone()]);
    let mut prev_w: Vec<i64> = (0..base.n()).map(|j| i64::from(!rays.contains(&j))).collect();
    let mut levels = Vec::new();
    for d in 5..=d_max {
        let mut plus = vec![0i64; d];
        plus[..4].fill(1);
        let mut minus = plus.clone();
        plus[d - 1] = 1;
        minus[d - 1] = -1;
        let config = extend(&prev, &[plus, minus])?;
        let n = config.n();
        let sigma = shift(&prev_rays, 2);
        let rest: Vec<usize> = (2..n).collect();
        let k1 = std::iter::once(0).chain(rest.iter().copied()).collect();
        let k2 = std::iter::once(1).chain(rest.iter().copied()).collect();
        let facets: Vec<Vec<usize>> = prev_t
            .facets()
            .iter()
            .flat_map(|tau| {
                let tau = shift(tau, 2);
                [0usize, 1].map(|a| std::iter::once(a).chain(tau.iter().copied()).collect::<Vec<_>>())
            })
            .collect();
        let t = Triangulation::new(facets);
        let weight = inducing_weight(&config, &t, &prev_w)?;
        let mut next_rays = vec![0, 1];
        next_rays.extend(sigma.iter().copied());
        levels.push(TowerLevel {
            d,
            config: config.clone(),
            apex: vec![0, 1],
            sigma,
            k1,
            k2,
            triangulation: Some(t.clone()),
            weight: Some(weight.clone()),
        });
        prev = config;
        prev_rays = next_rays;
        prev_t = t;
        prev_w = weight;
    }
    Ok(Tower {
        base: base.clone(),
        levels,
    })
}

fn inducing_weight(c: &Configuration, t: &Triangulation, prev: &[i64]) -> Result<Vec<i64>> {
    let mut m = 1i64;
    while m <= 1 << 40 {
        let mut w = vec![m, m];
        w.extend_from_slice(prev);
        if matches!(regular_triangulation(c, &w), Ok(ref got) if got == t) {
            return Ok(w);
        }
        m *= 2;
    }
    Err(Error::Input(format!(
        "no apex weight induces the refined triangulation in dimension {}",
        c.d()
    )))
}

/// Every `d`-subset of columns containing columns 1 and 2 has an even
/// determinant.
pub fn parity_certificate(c: &Configuration) -> CertificateReport {
    let mut report = CertificateReport::new("parity");
    let (d, n) = (c.d(), c.n());
    if d < 2 || n < d {
        report.fail("input", format!("need at least {d} >= 2 columns"), None);
        return report;
    }
    let m = c.matrix();
    let mut subsets = Vec::new();
    let mut rest: Vec<usize> = (2..d).collect();
    loop {
        let mut tau = vec![0, 1];
        tau.extend(&rest);
        subsets.push(tau);
        if d == 2 || !next_subset_offset(&mut rest, n) {
            break;
        }
    }
    let odd: Vec<(Vec<usize>, String)> = subsets
        .par_iter()
        .filter_map(|tau| {
            let v = det(&m.select_columns(tau)).ok()?;
            (v.bit(0)).then(|| (tau.clone(), v.to_string()))
        })
        .collect();
    for (tau, v) in odd.iter().take(10) {
        report.fail(
            format!("subset {}", face_label(tau)),
            format!("determinant {v} is odd"),
            Some(tau.iter().map(|&i| i as i64 + 1).collect()),
        );
    }
    if odd.is_empty() {
        report.pass(
            "subsets containing columns 1 and 2",
            format!("{} determinants, all even", subsets.len()),
        );
    } else if odd.len() > 10 {
        report.fail("subsets", format!("{} further odd determinants", odd.len() - 10), None);
    }
    report
}

/// `next_subset` over `2..n` for a subset stored with its true indices.
fn next_subset_offset(s: &mut [usize], n: usize) -> bool {
    let mut local: Vec<usize> = s.iter().map(|i| i - 2).collect();
    let more = next_subset(&mut local, n - 2);
    for (x, l) in s.iter_mut().zip(local) {
        *x = l + 2;
    }
    more
}

/// Invariants of one level of the Δ-normal tower.
pub fn certify_delta_normal_level(level: &TowerLevel) -> Result<CertificateReport> {
    let c = &level.config;
    let d = level.d;
    let mut report = CertificateReport::new(format!("delta-normal tower, d = {d}"));
    for (name, idx) in [("K_1", &level.k1), ("K_2", &level.k2)] {
        match lattice_index(&c.submatrix(idx)) {
            Ok(i) if i.is_one() => report.pass(format!("Z(A ∩ {name})"), "equals Z^d"),
            Ok(i) => report.fail(format!("Z(A ∩ {name})"), format!("index {i} in Z^d"), None),
            Err(e) => report.fail(format!("Z(A ∩ {name})"), e.to_string(), None),
        }
    }
    let rays = extreme_rays(c)?;
    let want = level.sigma.len() + 2;
    if rays.len() == want {
        report.pass("extreme rays", format!("{} = previous level + 2", rays.len()));
    } else {
        report.fail("extreme rays", format!("{} rays, expected {want}", rays.len()), None);
    }
    if rays.len() > d {
        report.pass("non-simplicial", format!("{} rays in dimension {d}", rays.len()));
    } else {
        report.fail("non-simplicial", "cone is simplicial", None);
    }

    let mut w = vec![0i64; c.n()];
    w[0] = 1;
    w[1] = 1;
    let mut cells = regular_subdivision(c, &w)?;
    cells.sort();
    let mut want_cells = vec![level.k1.clone(), level.k2.clone()];
    want_cells.sort();
    if cells == want_cells {
        report.pass("subdivision for e_1 + e_2", "cells are A ∩ K_1 and A ∩ K_2");
    } else {
        report.fail("subdivision for e_1 + e_2", format!("cells {cells:?}"), None);
    }

    let (Some(t), Some(weight)) = (&level.triangulation, &level.weight) else {
        return Err(Error::Input("level carries no triangulation".into()));
    };
    match regular_triangulation(c, weight) {
        Ok(ref got) if got == t => report.pass("refinement", format!("{} facets, regular", t.len())),
        Ok(got) => report.fail("refinement", format!("weight induces {:?}", got.facets()), None),
        Err(e) => report.fail("refinement", e.to_string(), None),
    }
    report.absorb(is_delta_normal(c, t)?);
    report.absorb(parity_certificate(c));
    Ok(report)
}

/// Levels `A^{e+1}..A^{d_max}` over a base in `Z^e`, with
/// `A^d = {e_1 + e_d} ∪ A^{d-1}'`.
pub fn non_delta_normal_tower(base: &Configuration, d_max: usize) -> Result<Tower> {
    let mut prev = base.clone();
    let mut prev_rays: Vec<usize> = (0..base.n()).collect();
    let mut levels = Vec::new();
    for d in base.d() + 1..=d_max {
        let mut p = vec![0i64; d];
        p[0] = 1;
        p[d - 1] = 1;
        let config = extend(&prev, &[p])?;
        let sigma = shift(&prev_rays, 1);
        levels.push(TowerLevel {
            d,
            config: config.clone(),
            apex: vec![0],
            sigma: sigma.clone(),
            k1: Vec::new(),
            k2: Vec::new(),
            triangulation: None,
            weight: None,
        });
        prev_rays = std::iter::once(0).chain(sigma).collect();
        prev = config;
    }
    Ok(Tower {
        base: base.clone(),
        levels,
    })
}

fn first_coordinate_one(c: &Configuration, report: &mut CertificateReport) {
    if c.n() > 0 && c.columns().iter().all(|a| a.first() == Some(&1)) {
        report.pass("graded", "every column has first coordinate 1");
    } else {
        report.fail("graded", "some column has first coordinate other than 1", None);
    }
}

fn all_extreme(c: &Configuration, report: &mut CertificateReport) -> Result<usize> {
    let rays = extreme_rays(c)?;
    if rays.len() == c.n() {
        report.pass("extreme", format!("all {} columns are extreme rays", c.n()));
    } else {
        let missing = (0..c.n()).find(|j| !rays.contains(j)).unwrap_or(0);
        report.fail(
            "extreme",
            format!("column {} is not an extreme ray", missing + 1),
            Some(c.column(missing).to_vec()),
        );
    }
    Ok(rays.len())
}

/// Lattice points of `conv(A)` in `ZA` are the columns: any other one is a
/// degree-one point of some parallelepiped of the triangulation.
fn conv_empty(c: &Configuration, t: &Triangulation, report: &mut CertificateReport) -> Result<()> {
    let extra: Vec<Vec<i64>> = t
        .facets()
        .par_iter()
        .map(|sigma| -> Result<Vec<Vec<i64>>> {
            Ok(fp_points(c, sigma)?
                .into_iter()
                .filter(|g| g[0] == 1 && !c.columns().contains(g))
                .collect())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    match extra.first() {
        None => report.pass("empty", "conv(A) has no lattice points besides its vertices"),
        Some(g) => report.fail("empty", "lattice point of conv(A) that is not a column", Some(g.clone())),
    }
    Ok(())
}

/// The hypotheses under which no regular triangulation makes `C` Δ-normal:
/// first coordinate 1, normal, non-simplicial, `conv(C)` empty, every
/// column extreme.
pub fn check_empty_normal_hypotheses(c: &Configuration) -> Result<CertificateReport> {
    let mut report = CertificateReport::new("non-delta-normal hypotheses");
    first_coordinate_one(c, &mut report);
    if !report.passed {
        return Ok(report);
    }
    let rays = all_extreme(c, &mut report)?;
    if rays > c.rank() {
        report.pass("non-simplicial", format!("{rays} rays in rank {}", c.rank()));
    } else {
        report.fail("non-simplicial", "cone is simplicial", None);
    }
    let t = default_triangulation(c)?;
    conv_empty(c, &t, &mut report)?;
    report.absorb(is_normal(c)?);
    Ok(report)
}

/// The hypotheses on the base and every level of a single-apex tower.
pub fn certify_non_delta_normal_tower(tower: &Tower) -> Result<CertificateReport> {
    let mut report = CertificateReport::new("non-delta-normal tower");
    let configs = std::iter::once(&tower.base).chain(tower.levels.iter().map(|l| &l.config));
    for c in configs {
        let sub = check_empty_normal_hypotheses(c)?;
        for mut item in sub.items {
            item.subject = format!("d = {}: {}", c.d(), item.subject);
            report.push(item);
        }
    }
    Ok(report)
}

/// Exhibits a facet of `T` whose cone has a Hilbert basis element outside
/// `A_σ`, which shows `C` is not `T`-normal when `conv(C)` is empty and
/// every column is extreme. A unimodular `T` contradicts the hypotheses
/// and fails the report.
pub fn not_delta_normal_witness(c: &Configuration, t: &Triangulation) -> Result<CertificateReport> {
    let mut report = CertificateReport::new("not-delta-normal");
    first_coordinate_one(c, &mut report);
    if !report.passed {
        return Ok(report);
    }
    all_extreme(c, &mut report)?;
    if !is_triangulation(c, t) {
        report.fail("triangulation", "not a triangulation of cone(A)", None);
        return Ok(report);
    }
    conv_empty(c, t, &mut report)?;
    let mut found = false;
    for sigma in t.facets() {
        if normalized_volume(c, sigma)? < 2 {
            continue;
        }
        let own: Vec<&[i64]> = sigma.iter().map(|&i| c.column(i)).collect();
        if let Some(h) = hilbert_basis_simplicial(c, sigma)?
            .into_iter()
            .find(|h| !own.contains(&h.as_slice()))
        {
            report.push(CheckItem {
                subject: format!("facet {}", face_label(sigma)),
                passed: true,
                detail: "Hilbert basis element outside A_σ".into(),
                witness: Some(h),
            });
            found = true;
            break;
        }
    }
    if !found {
        report.fail(
            "triangulation",
            "every facet is unimodular, contradicting the hypotheses",
            None,
        );
    }
    Ok(report)
}
