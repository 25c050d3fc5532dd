use std::collections::{HashMap, VecDeque};

use super::RootSystem;
use crate::error::{Error, Result};

/// Explicitly enumerated Weyl group acting on simple-root coordinates.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    /// Row-major `rank × rank` integer matrices; element 0 is the identity.
    elements: Vec<Vec<i64>>,
    lengths: Vec<usize>,
    generators: Vec<Vec<i64>>,
}

impl WeylGroup {
    /// Breadth-first enumeration from the identity; the BFS depth of an element
    /// is its length in the simple reflections.
    pub fn enumerate(rs: &RootSystem, max_order: usize) -> Result<Self> {
        let l = rs.rank();
        let cartan = rs.cartan_matrix();
        let generators: Vec<Vec<i64>> = (0..l)
            .map(|i| {
                let mut m = identity(l);
                // s_i = I - e_i · (row i of A)
                for j in 0..l {
                    m[i * l + j] -= cartan[i][j];
                }
                m
            })
            .collect();
        let id = identity(l);
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::from([(id.clone(), ())]);
        let mut elements = vec![id.clone()];
        let mut lengths = vec![0];
        let mut queue = VecDeque::from([(id, 0usize)]);
        while let Some((g, len)) = queue.pop_front() {
            for s in &generators {
                let h = matmul(s, &g, l);
                if seen.contains_key(&h) {
                    continue;
                }
                if elements.len() >= max_order {
                    return Err(Error::resource(format!(
                        "Weyl group of {} has more than {max_order} elements",
                        rs.type_label()
                    )));
                }
                seen.insert(h.clone(), ());
                elements.push(h.clone());
                lengths.push(len + 1);
                queue.push_back((h, len + 1));
            }
        }
        Ok(WeylGroup {
            rank: l,
            elements,
            lengths,
            generators,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[Vec<i64>] {
        &self.elements
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn apply(&self, w: usize, v: &[i64]) -> Vec<i64> {
        let l = self.rank;
        let m = &self.elements[w];
        (0..l)
            .map(|i| (0..l).map(|j| m[i * l + j] * v[j]).sum())
            .collect()
    }

    /// Each element as a permutation of root indices.
    pub fn root_permutations(&self, rs: &RootSystem) -> Result<Vec<Vec<usize>>> {
        (0..self.order())
            .map(|w| {
                rs.roots()
                    .iter()
                    .map(|r| {
                        rs.index_of(&self.apply(w, r))
                            .ok_or_else(|| Error::consistency("Weyl element does not permute the roots"))
                    })
                    .collect()
            })
            .collect()
    }

    /// Coefficients of `Σ_w t^{ℓ(w)}`, ascending.
    pub fn poincare_polynomial(&self) -> Vec<i128> {
        let top = self.lengths.iter().copied().max().unwrap_or(0);
        let mut p = vec![0i128; top + 1];
        for &len in &self.lengths {
            p[len] += 1;
        }
        p
    }
}

fn identity(l: usize) -> Vec<i64> {
    let mut m = vec![0; l * l];
    for i in 0..l {
        m[i * l + i] = 1;
    }
    m
}

fn matmul(a: &[i64], b: &[i64], l: usize) -> Vec<i64> {
    let mut out = vec![0; l * l];
    for i in 0..l {
        for k in 0..l {
            let x = a[i * l + k];
            if x == 0 {
                continue;
            }
            for j in 0..l {
                out[i * l + j] += x * b[k * l + j];
            }
        }
    }
    out
}

/// Primitive degrees `d_1 ≤ … ≤ d_l`, read off the factorisation
/// `Σ_w t^{ℓ(w)} = Π (t^{d_i} − 1)/(t − 1)`.
///
/// Multiplying the Poincaré polynomial by `(1 − t)^l` leaves `Π (1 − t^{d_i})`;
/// the lowest nonconstant exponent of that product is the smallest remaining
/// degree, which is divided out and the process repeated.
pub fn weyl_degrees(rs: &RootSystem, max_weyl_order: usize) -> Result<Vec<u32>> {
    let w = WeylGroup::enumerate(rs, max_weyl_order)?;
    let l = rs.rank();
    let mut q = w.poincare_polynomial();
    for _ in 0..l {
        let mut next = vec![0i128; q.len() + 1];
        for (i, &c) in q.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c;
        }
        q = next;
    }
    let fail = || Error::consistency(format!("Poincaré polynomial of {} does not factor", rs.type_label()));
    let mut degrees = Vec::with_capacity(l);
    for _ in 0..l {
        trim(&mut q);
        let d = (1..q.len()).find(|&i| q[i] != 0).ok_or_else(fail)?;
        if q[0] != 1 || q[d] >= 0 {
            return Err(fail());
        }
        // divide by (1 - t^d): r[i] = q[i] + r[i - d]
        let mut r = vec![0i128; q.len()];
        for i in 0..q.len() {
            r[i] = q[i] + if i >= d { r[i - d] } else { 0 };
        }
        // remainder must vanish: the top d coefficients of r are the overflow
        let keep = q.len() - d;
        if r[keep..].iter().any(|&c| c != 0) {
            return Err(fail());
        }
        r.truncate(keep);
        q = r;
        degrees.push(d as u32);
    }
    trim(&mut q);
    if q != [1] {
        return Err(fail());
    }
    degrees.sort_unstable();

    let n = rs.dim() as u64;
    let sum: u64 = degrees.iter().map(|&d| d as u64).sum();
    if 2 * sum != n + l as u64 {
        return Err(Error::consistency(format!(
            "degrees {degrees:?} sum to {sum}, expected (n+l)/2 with n={n}, l={l}"
        )));
    }
    let prod: u64 = degrees.iter().map(|&d| d as u64).product();
    if prod != w.order() as u64 {
        return Err(Error::consistency(format!(
            "degrees {degrees:?} multiply to {prod} but |W| = {}",
            w.order()
        )));
    }
    Ok(degrees)
}

fn trim(q: &mut Vec<i128>) {
    while q.len() > 1 && *q.last().unwrap() == 0 {
        q.pop();
    }
}
