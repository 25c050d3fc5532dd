//! Root systems in simple-root coordinates, Weyl groups, primitive degrees and
//! closed symmetric root subsets.
//!
//! Roots are integer vectors in the basis of simple roots, so every Weyl group
//! action is an exact integer matrix action. The Cartan matrix convention is
//! `A[i][j] = <α_i^∨, α_j>`, giving `s_i(α) = α − <α_i^∨, α> α_i`.

mod classify;
mod subsets;
mod weyl;

pub use classify::{classify_cartan, standard_cartan};
pub use subsets::{closed_symmetric_subsets, is_closed_symmetric, subsystem_type, RootSubset, SubsystemType};
pub use weyl::{weyl_degrees, WeylGroup};

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// One simple factor of a type label, e.g. `B2` in `B2xA1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl Component {
    /// Dimension of the simple Lie algebra of this type.
    pub fn algebra_dim(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 2),
            Family::B | Family::C => l * (2 * l + 1),
            Family::D => l * (2 * l - 1),
            Family::G => 14,
            Family::F => 52,
            Family::E => match l {
                6 => 78,
                7 => 133,
                _ => 248,
            },
        }
    }
}

/// Parses a product label such as `A2`, `A1xA1`, `B2xA1`.
///
/// Low-rank coincidences are normalised: `B1`, `C1` become `A1`, `D2` becomes
/// `A1xA1` and `D3` becomes `A3`. Only classical factors and `G2` are accepted.
pub fn parse_type_label(label: &str) -> Result<Vec<Component>> {
    let label = label.trim();
    if label.is_empty() {
        return Err(Error::input("empty type label"));
    }
    let mut comps = Vec::new();
    for factor in label.split(['x', 'X', '*']) {
        let factor = factor.trim();
        let mut chars = factor.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::input(format!("empty factor in type label {label:?}")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::input(format!("bad rank in type factor {factor:?}")))?;
        if rank == 0 {
            return Err(Error::input(format!("rank must be positive in {factor:?}")));
        }
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'G' if rank == 2 => Family::G,
            'G' => return Err(Error::input(format!("G{rank} does not exist"))),
            'E' | 'F' => {
                return Err(Error::input(format!(
                    "exceptional type {factor} is not supported"
                )))
            }
            other => return Err(Error::input(format!("unknown type symbol {other:?}"))),
        };
        match (family, rank) {
            (Family::B | Family::C, 1) => comps.push(Component { family: Family::A, rank: 1 }),
            (Family::D, 1) => return Err(Error::input("D1 is not semisimple")),
            (Family::D, 2) => {
                comps.push(Component { family: Family::A, rank: 1 });
                comps.push(Component { family: Family::A, rank: 1 });
            }
            (Family::D, 3) => comps.push(Component { family: Family::A, rank: 3 }),
            _ => comps.push(Component { family, rank }),
        }
    }
    sort_components(&mut comps);
    Ok(comps)
}

pub(crate) fn sort_components(comps: &mut [Component]) {
    comps.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.family.cmp(&b.family)));
}

pub fn label_of(comps: &[Component]) -> String {
    if comps.is_empty() {
        return "0".to_string();
    }
    comps
        .iter()
        .map(Component::to_string)
        .collect::<Vec<_>>()
        .join("x")
}

/// Finite crystallographic root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    type_label: String,
    components: Vec<Component>,
    cartan: Vec<Vec<i64>>,
    /// Positive roots (by height, then coordinates) followed by their negatives
    /// in the same order.
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    /// Squared lengths of the simple roots (per-component normalisation).
    simple_norms: Vec<Rational>,
}

/// Builds the root system of a product type by closing the simple roots under
/// the simple reflections.
pub fn build_root_system(type_label: &str) -> Result<RootSystem> {
    let components = parse_type_label(type_label)?;
    RootSystem::from_components(components)
}

impl RootSystem {
    pub fn from_components(components: Vec<Component>) -> Result<Self> {
        let rank: usize = components.iter().map(|c| c.rank).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut off = 0;
        for c in &components {
            let block = standard_cartan(*c);
            for i in 0..c.rank {
                for j in 0..c.rank {
                    cartan[off + i][off + j] = block[i][j];
                }
            }
            off += c.rank;
        }
        let simple_norms = symmetrizer(&cartan)?;

        // reflection closure of the simple roots
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0; rank];
            e[i] = 1;
            seen.insert(e.clone(), ());
            queue.push_back(e);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..rank {
                let img = reflect(&cartan, i, &r);
                if !seen.contains_key(&img) {
                    seen.insert(img.clone(), ());
                    queue.push_back(img);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> = seen
            .into_keys()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let rs = RootSystem {
            type_label: label_of(&components),
            components,
            cartan,
            roots,
            index,
            simple_norms,
        };
        rs.check_invariants()?;
        Ok(rs)
    }

    fn check_invariants(&self) -> Result<()> {
        if self.index.len() != self.roots.len() {
            return Err(Error::consistency("root set closed under reflections is not closed under negation"));
        }
        let expected: usize = self.components.iter().map(Component::algebra_dim).sum();
        if self.dim() != expected {
            return Err(Error::consistency(format!(
                "{}: |roots| + rank = {} but the algebra has dimension {expected}",
                self.type_label,
                self.dim()
            )));
        }
        for i in 0..self.rank() {
            for r in &self.roots {
                if !self.index.contains_key(&reflect(&self.cartan, i, r)) {
                    return Err(Error::consistency("reflection does not preserve roots"));
                }
            }
        }
        Ok(())
    }

    pub fn type_label(&self) -> &str {
        &self.type_label
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Dimension `n = |Φ| + l` of the semisimple algebra with this root system.
    pub fn dim(&self) -> usize {
        self.roots.len() + self.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    pub fn negative(&self, i: usize) -> usize {
        let p = self.num_positive();
        if i < p {
            i + p
        } else {
            i - p
        }
    }

    pub fn index_of(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// Index of the sum of two roots when it is a root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.index_of(&s)
    }

    pub fn reflect(&self, i: usize, v: &[i64]) -> Vec<i64> {
        reflect(&self.cartan, i, v)
    }

    /// Invariant inner product of two vectors in simple-root coordinates.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Rational {
        let l = self.rank();
        let mut acc = Rational::zero();
        for i in 0..l {
            if a[i] == 0 {
                continue;
            }
            for j in 0..l {
                if b[j] == 0 || self.cartan[i][j] == 0 {
                    continue;
                }
                // (α_i, α_j) = A_ij (α_i, α_i) / 2
                acc += int(a[i] * b[j] * self.cartan[i][j]) * &self.simple_norms[i] / int(2);
            }
        }
        acc
    }

    pub fn norm(&self, i: usize) -> Rational {
        self.inner(&self.roots[i], &self.roots[i])
    }

    /// `<β^∨, α> = 2(α, β)/(β, β)`.
    pub fn pairing(&self, coroot_of: &[i64], root: &[i64]) -> Rational {
        int(2) * self.inner(coroot_of, root) / self.inner(coroot_of, coroot_of)
    }

    /// Short/long split as (short count, long count); all roots count as long in
    /// simply-laced systems.
    pub fn length_counts(&self) -> (usize, usize) {
        let norms: Vec<Rational> = (0..self.roots.len()).map(|i| self.norm(i)).collect();
        let max = norms.iter().max().cloned().unwrap_or_else(Rational::zero);
        let long = norms.iter().filter(|n| **n == max).count();
        (norms.len() - long, long)
    }
}

fn reflect(cartan: &[Vec<i64>], i: usize, v: &[i64]) -> Vec<i64> {
    let pairing: i64 = cartan[i].iter().zip(v).map(|(a, c)| a * c).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}

/// Squared lengths `d_i` of the simple roots with `A_ij d_i = A_ji d_j`.
fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<Rational>> {
    let l = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; l];
    for start in 0..l {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(int(2));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..l {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                let dj = int(cartan[i][j]) * d[i].clone().unwrap() / int(cartan[j][i]);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(prev) if *prev != dj => {
                        return Err(Error::consistency("Cartan matrix is not symmetrizable"))
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(d.into_iter().map(Option::unwrap).collect())
}
