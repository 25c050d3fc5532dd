//! Nilpotent orbits of classical algebras, encoded by partitions, with the
//! weights of a Jacobson–Morozov `sl2` acting on the algebra.
//!
//! The natural module restricts to `⊕ V_{μ_j − 1}` over the parts `μ_j`; the
//! adjoint module is `V ⊗ V` minus a trivial summand in type A, `Λ²V` in types B
//! and D, and `Sym²V` in type C.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{rat, Rational};
use crate::rootsys::{label_of, parse_type_label, Component, Family};
use crate::weylalg::WeightVector;

/// Weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::input("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// Parses `3,1,1` or `3,1^2`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s.trim().trim_start_matches('[').trim_end_matches(']').split(',') {
            let tok = tok.trim();
            let bad = || Error::input(format!("bad partition part {tok:?}"));
            let (p, e) = match tok.split_once('^') {
                Some((p, e)) => (p.trim().parse().map_err(|_| bad())?, e.trim().parse().map_err(|_| bad())?),
                None => (tok.parse::<u32>().map_err(|_| bad())?, 1usize),
            };
            parts.extend(std::iter::repeat_n(p, e));
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32).collect())
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(left)).rev() {
                cur.push(p);
                rec(left - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Size of the natural module.
fn natural_dim(c: Component) -> Result<u32> {
    let l = c.rank as u32;
    match c.family {
        Family::A => Ok(l + 1),
        Family::B => Ok(2 * l + 1),
        Family::C | Family::D => Ok(2 * l),
        _ => Err(Error::input(format!("nilpotent orbits of {c} are not supported"))),
    }
}

fn admissible(c: Component, p: &Partition) -> bool {
    let parity_ok = |forbid_even: bool| {
        p.0.iter()
            .all(|&q| (q % 2 == 0) != forbid_even || p.multiplicity(q).is_multiple_of(2))
    };
    match c.family {
        Family::A => true,
        Family::B | Family::D => parity_ok(true),
        Family::C => parity_ok(false),
        _ => false,
    }
}

/// Partitions labelling the nilpotent orbits of a simple classical factor.
/// The two orbits sharing a very even partition in type D are one entry.
pub fn orbit_partitions(c: Component) -> Result<Vec<Partition>> {
    let n = natural_dim(c)?;
    Ok(Partition::all(n).into_iter().filter(|p| admissible(c, p)).collect())
}

/// `V_a ⊗ V_b = V_{a+b} ⊕ V_{a+b−2} ⊕ … ⊕ V_{|a−b|}`.
fn clebsch_gordan(a: u32, b: u32, out: &mut Vec<u32>) {
    let mut c = a + b;
    loop {
        out.push(c);
        if c < a.abs_diff(b) + 2 {
            break;
        }
        c -= 2;
    }
}

/// `Λ²V_a = V_{2a−2} ⊕ V_{2a−6} ⊕ …`.
fn alt_square(a: u32, out: &mut Vec<u32>) {
    let mut c = 2 * a as i64 - 2;
    while c >= 0 {
        out.push(c as u32);
        c -= 4;
    }
}

/// `Sym²V_a = V_{2a} ⊕ V_{2a−4} ⊕ …`.
fn sym_square(a: u32, out: &mut Vec<u32>) {
    let mut c = 2 * a as i64;
    while c >= 0 {
        out.push(c as u32);
        c -= 4;
    }
}

fn module_dim(ws: &[u32]) -> u64 {
    ws.iter().map(|&w| w as u64 + 1).sum()
}

/// Highest weights of the irreducible summands of the adjoint module of one
/// simple factor, in decreasing order.
fn factor_weights(c: Component, p: &Partition) -> Result<Vec<u32>> {
    let a: Vec<u32> = p.0.iter().map(|&m| m - 1).collect();
    let mut out = Vec::new();
    match c.family {
        Family::A => {
            for &x in &a {
                for &y in &a {
                    clebsch_gordan(x, y, &mut out);
                }
            }
            let z = out.iter().position(|&w| w == 0).expect("V ⊗ V* contains a trivial summand");
            out.remove(z);
        }
        Family::B | Family::C | Family::D => {
            for (i, &x) in a.iter().enumerate() {
                let before = out.len();
                if c.family == Family::C {
                    sym_square(x, &mut out);
                    debug_assert_eq!(module_dim(&out[before..]), (x as u64 + 1) * (x as u64 + 2) / 2);
                } else {
                    alt_square(x, &mut out);
                    debug_assert_eq!(module_dim(&out[before..]), (x as u64 + 1) * x as u64 / 2);
                }
                for &y in &a[i + 1..] {
                    clebsch_gordan(x, y, &mut out);
                }
            }
        }
        _ => return Err(Error::input(format!("nilpotent orbits of {c} are not supported"))),
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    if module_dim(&out) != c.algebra_dim() as u64 {
        return Err(Error::consistency(format!(
            "{c} {p}: summand dimensions add up to {}, not {}",
            module_dim(&out),
            c.algebra_dim()
        )));
    }
    Ok(out)
}

/// Centralizer dimension from the partition alone.
fn centralizer_dim(c: Component, p: &Partition) -> u64 {
    let sq: u64 = p.transpose().0.iter().map(|&t| (t as u64).pow(2)).sum();
    let odd = p.0.iter().filter(|&&q| q % 2 == 1).count() as u64;
    match c.family {
        Family::A => sq - 1,
        Family::C => (sq + odd) / 2,
        _ => (sq - odd) / 2,
    }
}

/// A nilpotent orbit of a (possibly non-simple) classical algebra: one
/// partition per simple factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NilpotentOrbit {
    type_label: String,
    factors: Vec<(Component, Partition)>,
    algebra_dim: usize,
    sl2_weights: Vec<u32>,
}

impl NilpotentOrbit {
    /// Validates the partitions against the factors and computes the weights.
    pub fn new(type_label: &str, partitions: Vec<Partition>) -> Result<Self> {
        let comps = components_of(type_label)?;
        if comps.len() != partitions.len() {
            return Err(Error::input(format!(
                "{type_label} has {} simple factors but {} partitions were given",
                comps.len(),
                partitions.len()
            )));
        }
        let mut weights = Vec::new();
        let mut factors = Vec::new();
        for (c, p) in comps.into_iter().zip(partitions) {
            if p.sum() != natural_dim(c)? || !admissible(c, &p) {
                return Err(Error::input(format!("{p} does not label a nilpotent orbit of {c}")));
            }
            let w = factor_weights(c, &p)?;
            let cd = centralizer_dim(c, &p);
            if w.len() as u64 != cd {
                return Err(Error::consistency(format!(
                    "{c} {p}: {} sl2 summands but the partition formula gives codimension {cd}",
                    w.len()
                )));
            }
            weights.extend(w);
            factors.push((c, p));
        }
        weights.sort_unstable_by(|x, y| y.cmp(x));
        let algebra_dim = factors.iter().map(|(c, _)| c.algebra_dim()).sum();
        let orbit = NilpotentOrbit {
            type_label: label_of(&factors.iter().map(|(c, _)| *c).collect::<Vec<_>>()),
            factors,
            algebra_dim,
            sl2_weights: weights,
        };
        if module_dim(&orbit.sl2_weights) != algebra_dim as u64 {
            return Err(Error::consistency("sum of (lambda + 1) differs from the dimension"));
        }
        Ok(orbit)
    }

    pub fn type_label(&self) -> &str {
        &self.type_label
    }

    pub fn factors(&self) -> &[(Component, Partition)] {
        &self.factors
    }

    pub fn partitions(&self) -> Vec<&Partition> {
        self.factors.iter().map(|(_, p)| p).collect()
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|(c, _)| c.rank).sum()
    }

    /// `λ_i`, decreasing.
    pub fn sl2_weights(&self) -> &[u32] {
        &self.sl2_weights
    }

    /// `r`, the number of irreducible summands.
    pub fn codim(&self) -> usize {
        self.sl2_weights.len()
    }

    pub fn dim_orbit(&self) -> usize {
        self.algebra_dim - self.codim()
    }

    pub fn is_zero(&self) -> bool {
        self.codim() == self.algebra_dim
    }

    pub fn is_regular(&self) -> bool {
        self.codim() == self.rank()
    }

    /// Partitions joined by `/`, e.g. `2,1/1,1`; `-` for the zero algebra.
    pub fn label(&self) -> String {
        if self.factors.is_empty() {
            return "-".to_string();
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(_, p)| p.0.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        parts.join("/")
    }
}

impl fmt::Display for NilpotentOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.factors.iter().map(|(_, p)| p.to_string()).collect();
        f.write_str(&parts.join("x"))
    }
}

fn components_of(type_label: &str) -> Result<Vec<Component>> {
    if type_label.trim() == "0" {
        return Ok(Vec::new());
    }
    let comps = parse_type_label(type_label)?;
    if let Some(c) = comps.iter().find(|c| !c.family.is_classical()) {
        return Err(Error::input(format!("nilpotent orbits of {c} are not supported")));
    }
    Ok(comps)
}

/// Every nilpotent orbit of a classical (product) type, ordered from the
/// largest codimension to the smallest; `"0"` has the single trivial orbit.
pub fn enumerate_orbits(type_label: &str) -> Result<Vec<NilpotentOrbit>> {
    let comps = components_of(type_label)?;
    let per: Vec<Vec<Partition>> = comps.iter().map(|&c| orbit_partitions(c)).collect::<Result<_>>()?;
    let mut combos: Vec<Vec<Partition>> = vec![Vec::new()];
    for options in &per {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    let label = label_of(&comps);
    let mut out = combos
        .into_iter()
        .map(|ps| NilpotentOrbit::new(&label, ps))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| b.codim().cmp(&a.codim()).then_with(|| a.label().cmp(&b.label())));
    Ok(out)
}

/// The `λ_i` of an orbit.
pub fn sl2_weights(orbit: &NilpotentOrbit) -> Vec<u32> {
    orbit.sl2_weights.clone()
}

/// `m′_i = λ_i/2 + 1` and their total, checked against `(n + r)/2`.
pub fn transversal_weights(orbit: &NilpotentOrbit) -> Result<(WeightVector, Rational)> {
    let m: Vec<Rational> = orbit.sl2_weights.iter().map(|&l| rat(l as i64 + 2, 2)).collect();
    let total: Rational = m.iter().sum();
    let want = rat((orbit.algebra_dim + orbit.codim()) as i64, 2);
    if total != want {
        return Err(Error::consistency(format!("transversal weights total {total}, expected {want}")));
    }
    Ok((WeightVector::new(m)?, total))
}

/// `r`, re-derived from the partition formula for the centralizer dimension.
pub fn orbit_codim(orbit: &NilpotentOrbit) -> Result<usize> {
    let from_partitions: u64 = orbit.factors.iter().map(|(c, p)| centralizer_dim(*c, p)).sum();
    if from_partitions != orbit.codim() as u64 {
        return Err(Error::consistency(format!(
            "orbit {orbit}: {} sl2 summands vs codimension {from_partitions}",
            orbit.codim()
        )));
    }
    Ok(orbit.codim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn labels(t: &str) -> Vec<String> {
        enumerate_orbits(t).unwrap().iter().map(|o| o.to_string()).collect()
    }

    #[test]
    fn orbit_lists() {
        assert_eq!(labels("A1"), ["[1,1]", "[2]"]);
        assert_eq!(labels("A2"), ["[1,1,1]", "[2,1]", "[3]"]);
        assert_eq!(labels("C2"), ["[1,1,1,1]", "[2,1,1]", "[2,2]", "[4]"]);
        assert_eq!(labels("B2"), ["[1,1,1,1,1]", "[2,2,1]", "[3,1,1]", "[5]"]);
        assert_eq!(enumerate_orbits("D4").unwrap().len(), 10);
        assert_eq!(labels("A1xA1").len(), 4);
        assert_eq!(labels("0"), ["0"]);
    }

    #[test]
    fn weights_of_small_orbits() {
        let o = NilpotentOrbit::new("A1", vec![Partition::parse("2").unwrap()]).unwrap();
        assert_eq!(o.sl2_weights(), &[2]);
        let o = NilpotentOrbit::new("A2", vec![Partition::parse("3").unwrap()]).unwrap();
        assert_eq!(o.sl2_weights(), &[4, 2]);
        let o = NilpotentOrbit::new("A2", vec![Partition::parse("2,1").unwrap()]).unwrap();
        assert_eq!(o.sl2_weights(), &[2, 1, 1, 0]);
        assert_eq!(orbit_codim(&o).unwrap(), 4);
        assert_eq!(o.dim_orbit(), 4);
    }

    #[test]
    fn transversal_totals() {
        let o = NilpotentOrbit::new("A2", vec![Partition::parse("3").unwrap()]).unwrap();
        let (m, t) = transversal_weights(&o).unwrap();
        assert_eq!(m.entries(), &[int(3), int(2)]);
        assert_eq!(t, int(5));
        let o = NilpotentOrbit::new("A2", vec![Partition::parse("2,1").unwrap()]).unwrap();
        let (m, t) = transversal_weights(&o).unwrap();
        assert_eq!(m.entries(), &[int(2), rat(3, 2), rat(3, 2), int(1)]);
        assert_eq!(t, int(6));
        let z = NilpotentOrbit::new("A3", vec![Partition::parse("1^4").unwrap()]).unwrap();
        assert!(z.is_zero());
        assert_eq!(transversal_weights(&z).unwrap().1, int(15));
    }

    #[test]
    fn bad_inputs() {
        assert!(NilpotentOrbit::new("C2", vec![Partition::parse("3,1").unwrap()]).is_err());
        assert!(NilpotentOrbit::new("A2", vec![Partition::parse("2,1,1").unwrap()]).is_err());
        assert!(enumerate_orbits("G2").is_err());
        assert!(Partition::parse("2,x").is_err());
    }

    #[test]
    fn transpose() {
        assert_eq!(Partition::parse("3,1,1").unwrap().transpose().parts(), &[3, 1, 1]);
        assert_eq!(Partition::parse("4,2").unwrap().transpose().parts(), &[2, 2, 1, 1]);
        assert_eq!(Partition::all(5).len(), 7);
    }
}
