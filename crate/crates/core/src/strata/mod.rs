//! Strata `S_(P,O)`: for each conjugacy class of Levi-type closed symmetric
//! subsets `P` and each nilpotent orbit `O` of the semisimple subalgebra `q_P`,
//! the union of the orbits `G·(X + O)` with `X` regular in the orthogonal of
//! `h_P`. The open stratum comes from `P = ∅`.

use std::fmt;

use num_traits::Zero;

use crate::bfunction::{BFunction, BKind};
use crate::error::{Error, Result};
use crate::exactalg::{fmt_rational, is_half_integer, is_integer, rat, Rational};
use crate::limits::Limits;
use crate::orbits::{enumerate_orbits, orbit_codim, transversal_weights, NilpotentOrbit};
use crate::rootsys::{build_root_system, closed_symmetric_subsets, subsystem_type, weyl_degrees, RootSubset};
use crate::weylalg::WeightVector;

#[derive(Debug, Clone)]
pub struct Stratum {
    ambient_type: String,
    ambient_dim: usize,
    p_class: RootSubset,
    qp_type: String,
    m: usize,
    k: usize,
    orbit: Option<NilpotentOrbit>,
    codim: usize,
    weights: WeightVector,
    conic: bool,
}

impl Stratum {
    pub fn ambient_type(&self) -> &str {
        &self.ambient_type
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Representative root subset, as indices into the ambient root system.
    pub fn p_class(&self) -> &RootSubset {
        &self.p_class
    }

    pub fn qp_type(&self) -> &str {
        &self.qp_type
    }

    /// `m = dim q_P`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// `k = rank q_P`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn orbit(&self) -> Option<&NilpotentOrbit> {
        self.orbit.as_ref()
    }

    /// Codimension in the ambient algebra; equals the codimension `r` of the
    /// orbit inside `q_P`.
    pub fn codim(&self) -> usize {
        self.codim
    }

    /// Transversal weights `m′_i = λ_i/2 + 1`.
    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn conic(&self) -> bool {
        self.conic
    }

    pub fn is_open(&self) -> bool {
        self.p_class.is_empty()
    }

    /// `P = Φ` together with the zero orbit.
    pub fn is_origin(&self) -> bool {
        self.m == self.ambient_dim && self.orbit.as_ref().is_some_and(NilpotentOrbit::is_zero)
    }

    /// `A1:2`, `A2:2,1`, or `open`.
    pub fn label(&self) -> String {
        match &self.orbit {
            None => "open".to_string(),
            Some(o) => format!("{}:{}", self.qp_type, o.label()),
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// All strata, sorted by codimension and then by label.
///
/// Only subsets with `P = Φ ∩ span(P)` contribute: for the others the regular
/// part of the orthogonal of `h_P` is empty.
pub fn enumerate_strata(ambient_type: &str, limits: &Limits) -> Result<Vec<Stratum>> {
    let rs = build_root_system(ambient_type)?;
    if let Some(c) = rs.components().iter().find(|c| !c.family.is_classical()) {
        return Err(Error::input(format!("stratification of {c} is not supported")));
    }
    let n = rs.dim();
    let mut out = Vec::new();
    for p in closed_symmetric_subsets(&rs, limits)? {
        if p.is_empty() {
            out.push(Stratum {
                ambient_type: rs.type_label().to_string(),
                ambient_dim: n,
                p_class: p,
                qp_type: "0".to_string(),
                m: 0,
                k: 0,
                orbit: None,
                codim: 0,
                weights: WeightVector::new(Vec::new())?,
                conic: true,
            });
            continue;
        }
        if !p.is_span_closed(&rs) {
            continue;
        }
        let t = subsystem_type(&rs, &p)?;
        for orbit in enumerate_orbits(&t.label)? {
            if orbit.algebra_dim() != t.dim {
                return Err(Error::consistency(format!(
                    "orbit algebra dimension {} differs from dim q_P = {}",
                    orbit.algebra_dim(),
                    t.dim
                )));
            }
            let r = orbit_codim(&orbit)?;
            // dim S = (n − m) + dim O
            let dim_s = n - t.dim + orbit.dim_orbit();
            if n - dim_s != r {
                return Err(Error::consistency("stratum dimension count disagrees with the orbit codimension"));
            }
            let (weights, total) = transversal_weights(&orbit)?;
            if total != rat((t.dim + r) as i64, 2) {
                return Err(Error::consistency("transversal weights do not total (m + r)/2"));
            }
            out.push(Stratum {
                ambient_type: rs.type_label().to_string(),
                ambient_dim: n,
                p_class: p.clone(),
                qp_type: t.label.clone(),
                m: t.dim,
                k: t.rank,
                orbit: Some(orbit),
                codim: r,
                weights,
                conic: true,
            });
        }
    }
    out.sort_by(|a, b| a.codim.cmp(&b.codim).then_with(|| a.label().cmp(&b.label())));
    Ok(out)
}

fn descending_roots(top: u32, bottom: usize) -> Vec<Rational> {
    (-(bottom as i64)..=top as i64).rev().map(|j| Rational::from_integer(j.into())).collect()
}

/// Quasi-b-function of a stratum with upper root `N`: roots
/// `N, …, 1, 0, −1, …, −(m − k)/2` and total weight `(m + r)/2`; the constant
/// 1 on the open stratum.
pub fn stratum_bfunction(s: &Stratum, big_n: u32) -> Result<BFunction> {
    if s.is_open() {
        return Ok(BFunction::one("no vanishing locus"));
    }
    let kind = if s.is_origin() && big_n == 0 { BKind::Monodromic } else { BKind::Regular };
    BFunction::new(
        descending_roots(big_n, (s.m - s.k) / 2),
        s.weights.total(),
        kind,
        format!("transversal weights {} along {}", s.weights, s.label()),
    )
}

/// b-function along the origin of the quotient by the invariants, in the
/// weights given by the primitive degrees: roots `N, …, 0, …, −(n − l)/2` and
/// total weight `Σ d_i = (n + l)/2`.
pub fn origin_bfunction(ambient_type: &str, big_n: u32, limits: &Limits) -> Result<BFunction> {
    let rs = build_root_system(ambient_type)?;
    let degrees = weyl_degrees(&rs, limits.max_weyl_order)?;
    let (n, l) = (rs.dim(), rs.rank());
    let total: u32 = degrees.iter().sum();
    if 2 * total as usize != n + l {
        return Err(Error::consistency("primitive degrees do not sum to (n + l)/2"));
    }
    let weights = WeightVector::new(degrees.iter().map(|&d| Rational::from_integer(d.into())).collect())?;
    BFunction::new(
        descending_roots(big_n, (n - l) / 2),
        weights.total(),
        if big_n == 0 { BKind::Monodromic } else { BKind::Regular },
        format!("V-filtration along the origin, weights {weights} (primitive degrees)"),
    )
}

#[derive(Debug, Clone)]
pub struct TamenessRow {
    pub stratum: Stratum,
    pub bfunction: BFunction,
    pub tame: bool,
    /// `min root + Σ m′_i`; absent on the open stratum.
    pub margin: Option<Rational>,
    pub conic: bool,
}

#[derive(Debug, Clone)]
pub struct TamenessReport {
    pub ambient_type: String,
    pub upper_root: u32,
    pub rows: Vec<TamenessRow>,
}

impl TamenessReport {
    pub fn all_tame(&self) -> bool {
        self.rows.iter().all(|r| r.tame && r.conic)
    }
}

/// Tameness of every stratum; the margin of each stratum with `P ≠ ∅` is
/// checked to equal `(k + r)/2`.
pub fn tameness_report(ambient_type: &str, big_n: u32, limits: &Limits) -> Result<TamenessReport> {
    let strata = enumerate_strata(ambient_type, limits)?;
    let mut rows = Vec::with_capacity(strata.len());
    let mut label = ambient_type.to_string();
    for s in strata {
        label = s.ambient_type.clone();
        let b = stratum_bfunction(&s, big_n)?;
        let margin = b.margin();
        if !s.is_open() {
            let want = rat((s.k + s.codim) as i64, 2);
            if margin.as_ref() != Some(&want) {
                return Err(Error::consistency(format!(
                    "stratum {s}: margin {} differs from (k + r)/2 = {}",
                    margin.as_ref().map_or("-".to_string(), fmt_rational),
                    fmt_rational(&want)
                )));
            }
        }
        rows.push(TamenessRow { tame: b.is_tame(), margin, conic: s.conic, bfunction: b, stratum: s });
    }
    Ok(TamenessReport { ambient_type: label, upper_root: big_n, rows })
}

/// Roots of the codimension-one stratum's b-function divided by its single
/// transversal weight; all are half-integers `≥ −1/2`.
pub fn codim1_usual_bfunction(ambient_type: &str, limits: &Limits) -> Result<Vec<Rational>> {
    let strata = enumerate_strata(ambient_type, limits)?;
    let s = strata
        .iter()
        .find(|s| s.codim == 1)
        .ok_or_else(|| Error::input(format!("{ambient_type} has no stratum of codimension one")))?;
    let [w] = s.weights.entries() else {
        return Err(Error::consistency("codimension-one stratum has more than one weight"));
    };
    let b = stratum_bfunction(s, 0)?.rescaled(w)?;
    let roots = b.roots().to_vec();
    let half = rat(-1, 2);
    if let Some(r) = roots.iter().find(|r| !(is_integer(r) || is_half_integer(r)) || **r < half) {
        return Err(Error::consistency(format!(
            "rescaled root {} is not a half-integer >= -1/2",
            fmt_rational(r)
        )));
    }
    if roots.iter().any(|r| r.is_zero()) {
        Ok(roots)
    } else {
        Err(Error::consistency("rescaled b-function lost its root at 0"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn codims(t: &str) -> Vec<usize> {
        enumerate_strata(t, &Limits::default()).unwrap().iter().map(Stratum::codim).collect()
    }

    #[test]
    fn small_stratifications() {
        assert_eq!(codims("A1"), [0, 1, 3]);
        assert_eq!(codims("A2"), [0, 1, 2, 3, 4, 8]);
        let a1 = enumerate_strata("A1", &Limits::default()).unwrap();
        assert!(a1[0].is_open());
        assert!(a1[2].is_origin());
        assert_eq!(a1[2].label(), "A1:1,1");
    }

    #[test]
    fn bfunctions() {
        let a2 = enumerate_strata("A2", &Limits::default()).unwrap();
        let reg = a2.iter().find(|s| s.label() == "A2:3").unwrap();
        let b = stratum_bfunction(reg, 0).unwrap();
        assert_eq!(b.roots(), &[int(0), int(-1), int(-2), int(-3)]);
        assert_eq!(b.total_weight(), &int(5));
        let sub = a2.iter().find(|s| s.label() == "A1:2").unwrap();
        let b = stratum_bfunction(sub, 0).unwrap();
        assert_eq!(b.roots(), &[int(0), int(-1)]);
        assert_eq!(b.total_weight(), &int(2));
        assert_eq!(stratum_bfunction(&a2[0], 0).unwrap().degree(), 0);
        let b = stratum_bfunction(sub, 2).unwrap();
        assert_eq!(b.roots(), &[int(2), int(1), int(0), int(-1)]);
    }

    #[test]
    fn origin_matches_regular_stratum() {
        let o = origin_bfunction("A2", 0, &Limits::default()).unwrap();
        assert_eq!(o.roots(), &[int(0), int(-1), int(-2), int(-3)]);
        assert_eq!(o.total_weight(), &int(5));
    }

    #[test]
    fn tameness() {
        let r = tameness_report("A1", 0, &Limits::default()).unwrap();
        assert!(r.all_tame());
        assert_eq!(r.rows[1].margin, Some(int(1)));
        let r = tameness_report("A2", 0, &Limits::default()).unwrap();
        let origin = r.rows.iter().find(|row| row.stratum.is_origin()).unwrap();
        assert_eq!(origin.bfunction.total_weight(), &int(8));
        assert_eq!(origin.margin, Some(int(5)));
    }

    #[test]
    fn codim_one() {
        for t in ["A1", "A2", "B2", "C2", "A3"] {
            assert_eq!(codim1_usual_bfunction(t, &Limits::default()).unwrap(), vec![int(0), rat(-1, 2)], "{t}");
        }
    }

    #[test]
    fn b2_skips_non_levi_subsets() {
        let s = enumerate_strata("B2", &Limits::default()).unwrap();
        let types: std::collections::BTreeSet<_> = s.iter().map(|s| s.qp_type().to_string()).collect();
        assert!(!types.contains("A1xA1"));
        // open, two A1 classes with two orbits each, B2 with four orbits
        assert_eq!(s.len(), 1 + 2 * 2 + 4);
    }
}
