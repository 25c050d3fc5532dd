use std::collections::BTreeSet;

use super::{classify_cartan, label_of, Family, RootSystem, WeylGroup};
use crate::error::{Error, Result};
use num_traits::ToPrimitive;

use crate::exactalg::linalg;
use crate::limits::Limits;

/// Subset of a root system, stored as sorted root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSubset {
    members: Vec<usize>,
}

impl RootSubset {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        RootSubset { members }
    }

    pub fn empty() -> Self {
        RootSubset { members: Vec::new() }
    }

    pub fn full(rs: &RootSystem) -> Self {
        RootSubset::new((0..rs.roots().len()).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// Root coordinates of the members.
    pub fn roots<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = &'a [i64]> + 'a {
        self.members.iter().map(move |&i| rs.root(i))
    }

    /// Rank of the span of the members.
    pub fn span_rank(&self, rs: &RootSystem) -> usize {
        let rows: Vec<Vec<i64>> = self.roots(rs).map(<[i64]>::to_vec).collect();
        linalg::rank(&linalg::from_ints(&rows))
    }

    /// Whether `P = Φ ∩ span(P)`, i.e. `P` is exactly the set of roots vanishing
    /// on some element of the Cartan subalgebra.
    pub fn is_span_closed(&self, rs: &RootSystem) -> bool {
        let rows: Vec<Vec<i64>> = self.roots(rs).map(<[i64]>::to_vec).collect();
        let k = linalg::rank(&linalg::from_ints(&rows));
        (0..rs.roots().len()).all(|i| {
            if self.contains(i) {
                return true;
            }
            let mut ext = rows.clone();
            ext.push(rs.root(i).to_vec());
            linalg::rank(&linalg::from_ints(&ext)) > k
        })
    }
}

/// `(P + P) ∩ Φ ⊂ P` and `P = −P`.
pub fn is_closed_symmetric(rs: &RootSystem, p: &RootSubset) -> bool {
    p.members().iter().all(|&a| p.contains(rs.negative(a)))
        && p.members().iter().all(|&a| {
            p.members()
                .iter()
                .all(|&b| rs.sum_index(a, b).is_none_or(|s| p.contains(s)))
        })
}

/// One representative per Weyl-conjugacy class of closed symmetric subsets.
///
/// Brute force over the `2^{|Φ+|}` unions of `±α` pairs. The representative of
/// a class is its lexicographically least member set; the output is sorted by
/// size, then members.
pub fn closed_symmetric_subsets(rs: &RootSystem, limits: &Limits) -> Result<Vec<RootSubset>> {
    let npos = rs.num_positive();
    if npos > limits.max_subset_pairs {
        return Err(Error::resource(format!(
            "{} has {npos} positive roots; subset enumeration is limited to {}",
            rs.type_label(),
            limits.max_subset_pairs
        )));
    }
    let w = WeylGroup::enumerate(rs, limits.max_weyl_order)?;
    let perms = w.root_permutations(rs)?;
    let mut classes: BTreeSet<RootSubset> = BTreeSet::new();
    for mask in 0u64..(1u64 << npos) {
        let mut members = Vec::new();
        for i in 0..npos {
            if mask >> i & 1 == 1 {
                members.push(i);
                members.push(rs.negative(i));
            }
        }
        let p = RootSubset::new(members);
        if !is_closed_symmetric(rs, &p) {
            continue;
        }
        classes.insert(canonical_representative(&p, &perms));
    }
    let mut out: Vec<RootSubset> = classes.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Lexicographically least image of `p` under the given root permutations.
pub(crate) fn canonical_representative(p: &RootSubset, perms: &[Vec<usize>]) -> RootSubset {
    perms
        .iter()
        .map(|perm| RootSubset::new(p.members().iter().map(|&i| perm[i]).collect()))
        .min()
        .unwrap_or_else(|| p.clone())
}

/// Type, dimension and rank of the semisimple subalgebra spanned by the root
/// spaces of `P` and their coroots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemType {
    pub label: String,
    /// `m = |P| + k`
    pub dim: usize,
    /// `k = dim span(P)`
    pub rank: usize,
}

/// Recovers the type of a closed symmetric subset from the Cartan matrix of the
/// simple system of `P ∩ Φ+`.
pub fn subsystem_type(rs: &RootSystem, p: &RootSubset) -> Result<SubsystemType> {
    if p.is_empty() {
        return Ok(SubsystemType {
            label: "0".to_string(),
            dim: 0,
            rank: 0,
        });
    }
    if !is_closed_symmetric(rs, p) {
        return Err(Error::input("root subset is not closed and symmetric"));
    }
    let positive: Vec<usize> = p.members().iter().copied().filter(|&i| rs.is_positive(i)).collect();
    // simple roots of P: positive members that are not a sum of two positive members
    let simple: Vec<usize> = positive
        .iter()
        .copied()
        .filter(|&c| {
            !positive.iter().any(|&a| {
                positive
                    .iter()
                    .any(|&b| rs.sum_index(a, b) == Some(c))
            })
        })
        .collect();
    let k = p.span_rank(rs);
    if simple.len() != k {
        return Err(Error::consistency(format!(
            "found {} simple roots for a subsystem of rank {k}",
            simple.len()
        )));
    }
    let cartan: Vec<Vec<i64>> = simple
        .iter()
        .map(|&i| {
            simple
                .iter()
                .map(|&j| {
                    let v = rs.pairing(rs.root(i), rs.root(j));
                    if !crate::exactalg::is_integer(&v) {
                        return Err(Error::consistency("non-integral Cartan entry"));
                    }
                    v.to_integer()
                        .to_i64()
                        .ok_or_else(|| Error::consistency("Cartan entry out of range"))
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<_>>()?;
    let prefer_c = rs.components().iter().any(|c| c.family == Family::C);
    let comps = classify_cartan(&cartan, prefer_c)?;
    Ok(SubsystemType {
        label: label_of(&comps),
        dim: p.len() + k,
        rank: k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn classes(label: &str) -> Vec<RootSubset> {
        closed_symmetric_subsets(&build_root_system(label).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn a1_has_two_classes() {
        let c = classes("A1");
        assert_eq!(c, vec![RootSubset::empty(), RootSubset::new(vec![0, 1])]);
    }

    #[test]
    fn a2_has_three_classes() {
        let c = classes("A2");
        assert_eq!(c.len(), 3);
        assert_eq!(c[1].len(), 2);
        assert_eq!(c[2].len(), 6);
    }

    #[test]
    fn b2_has_five_classes() {
        let rs = build_root_system("B2").unwrap();
        let c = classes("B2");
        let labels: Vec<_> = c
            .iter()
            .map(|p| subsystem_type(&rs, p).unwrap().label)
            .collect();
        assert_eq!(labels, vec!["0", "A1", "A1", "A1xA1", "B2"]);
        // the two rank-one classes differ in root length
        let norms: Vec<_> = c[1..3].iter().map(|p| rs.norm(p.members()[0])).collect();
        assert_ne!(norms[0], norms[1]);
        // the A1xA1 class is the long pair; α1 is long in these coordinates
        let long: Vec<Vec<i64>> = c[3].roots(&rs).map(<[i64]>::to_vec).collect();
        assert!(long.contains(&vec![1, 0]) && long.contains(&vec![1, 2]));
        assert!(!c[3].is_span_closed(&rs));
        assert!(c[1].is_span_closed(&rs) && c[4].is_span_closed(&rs));
    }

    #[test]
    fn subsystem_types() {
        let a2 = build_root_system("A2").unwrap();
        let pair = RootSubset::new(vec![0, 3]);
        assert_eq!(
            subsystem_type(&a2, &pair).unwrap(),
            SubsystemType { label: "A1".into(), dim: 3, rank: 1 }
        );
        assert_eq!(
            subsystem_type(&a2, &RootSubset::full(&a2)).unwrap(),
            SubsystemType { label: "A2".into(), dim: 8, rank: 2 }
        );
        assert_eq!(
            subsystem_type(&a2, &RootSubset::empty()).unwrap(),
            SubsystemType { label: "0".into(), dim: 0, rank: 0 }
        );
        // {α1} alone is not symmetric
        assert!(subsystem_type(&a2, &RootSubset::new(vec![0])).is_err());
    }

    #[test]
    fn full_system_reproduces_label() {
        for label in ["A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2", "A1xA1", "A2xA1"] {
            let rs = build_root_system(label).unwrap();
            let t = subsystem_type(&rs, &RootSubset::full(&rs)).unwrap();
            assert_eq!(
                (t.label.as_str(), t.dim, t.rank),
                (rs.type_label(), rs.dim(), rs.rank()),
                "{label}"
            );
        }
    }

    #[test]
    fn guard() {
        let rs = build_root_system("A5").unwrap();
        let limits = Limits::default();
        assert!(matches!(closed_symmetric_subsets(&rs, &limits), Err(Error::Resource(_))));
    }
}
