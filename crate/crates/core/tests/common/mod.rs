//! Independent reference computations for the integration tests. Nothing here
//! calls the algorithm under test; only the basic polynomial type is shared.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use lietame::exactalg::{int, vars, Monomial, MultiPoly, PolyMatrix, Rational, Vars};
use lietame::WeylOp;
use num_traits::{One, Zero};

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<MultiPoly>], v: &Vars) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(v.clone());
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(v.clone());
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor, v);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Coefficients of `det(T·Id − M)` in descending powers of `T`, by cofactor
/// expansion over the variable list extended with `T`.
pub fn charpoly_by_cofactor(m: &PolyMatrix) -> Vec<MultiPoly> {
    let n = m.size();
    let old = m.vars().clone();
    let mut names = vec!["T".to_string()];
    names.extend(old.iter().cloned());
    let ext = vars(&names);
    let images: Vec<MultiPoly> = (0..old.len()).map(|i| MultiPoly::var(ext.clone(), i + 1)).collect();
    let t = MultiPoly::var(ext.clone(), 0);
    let grid: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = if images.is_empty() {
                        MultiPoly::constant(ext.clone(), m.get(i, j).constant_term())
                    } else {
                        m.get(i, j).substitute(&images).unwrap()
                    };
                    if i == j { &t - &e } else { -e }
                })
                .collect()
        })
        .collect();
    let det = cofactor_det(&grid, &ext);
    let mut out = vec![MultiPoly::zero(old.clone()); n + 1];
    for (mono, c) in det.terms() {
        let k = mono.0[0] as usize;
        let rest = mono.0[1..].to_vec();
        out[n - k] = &out[n - k] + &MultiPoly::monomial(old.clone(), rest, c.clone());
    }
    out
}

/// Determinant of an integer matrix by cofactor expansion.
pub fn int_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| *x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * int_det(&minor)
        })
        .sum()
}

// ---------------------------------------------------------------------------
// Root systems in Euclidean coordinates (rank <= 2 types).

type Vec3 = [i64; 3];

pub fn euclidean_roots(label: &str) -> Vec<Vec3> {
    let mut out: Vec<Vec3> = Vec::new();
    let mut push = |v: Vec3| {
        out.push(v);
        out.push([-v[0], -v[1], -v[2]]);
    };
    match label {
        "A1" => push([1, -1, 0]),
        "A1xA1" => {
            push([1, 0, 0]);
            push([0, 1, 0]);
        }
        "A2" => {
            push([1, -1, 0]);
            push([1, 0, -1]);
            push([0, 1, -1]);
        }
        "B2" => {
            push([1, 0, 0]);
            push([0, 1, 0]);
            push([1, 1, 0]);
            push([1, -1, 0]);
        }
        "C2" => {
            push([2, 0, 0]);
            push([0, 2, 0]);
            push([1, 1, 0]);
            push([1, -1, 0]);
        }
        "G2" => {
            push([1, -1, 0]);
            push([1, 0, -1]);
            push([0, 1, -1]);
            push([2, -1, -1]);
            push([-1, 2, -1]);
            push([-1, -1, 2]);
        }
        other => panic!("no Euclidean model for {other}"),
    }
    out
}

fn dot(a: &Vec3, b: &Vec3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// `s_a(v) = v − 2(v,a)/(a,a) a`; exact for crystallographic pairs.
fn reflect(a: &Vec3, v: &Vec3) -> Vec3 {
    let k = 2 * dot(v, a) / dot(a, a);
    [v[0] - k * a[0], v[1] - k * a[1], v[2] - k * a[2]]
}

/// Sorted `(|P|, class size)` over the Weyl classes of closed symmetric subsets.
pub fn brute_force_subset_classes(label: &str) -> Vec<(usize, usize)> {
    let roots = euclidean_roots(label);
    let idx: HashMap<Vec3, usize> = roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    let npairs = roots.len() / 2;
    let closed = |set: &BTreeSet<usize>| {
        set.iter().all(|&a| {
            set.iter().all(|&b| {
                let s = [roots[a][0] + roots[b][0], roots[a][1] + roots[b][1], roots[a][2] + roots[b][2]];
                idx.get(&s).is_none_or(|i| set.contains(i))
            })
        })
    };
    let mut all: HashSet<BTreeSet<usize>> = HashSet::new();
    for mask in 0u32..(1 << npairs) {
        let set: BTreeSet<usize> = (0..npairs)
            .filter(|i| mask >> i & 1 == 1)
            .flat_map(|i| [2 * i, 2 * i + 1])
            .collect();
        if closed(&set) {
            all.insert(set);
        }
    }
    // Weyl group as permutations of root indices, generated by all reflections
    let gens: Vec<Vec<usize>> = roots
        .iter()
        .map(|a| roots.iter().map(|v| idx[&reflect(a, v)]).collect())
        .collect();
    let mut group: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier = vec![(0..roots.len()).collect::<Vec<_>>()];
    group.insert(frontier[0].clone());
    while let Some(g) = frontier.pop() {
        for s in &gens {
            let h: Vec<usize> = g.iter().map(|&i| s[i]).collect();
            if group.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
    let mut out = Vec::new();
    for set in &all {
        if seen.contains(set) {
            continue;
        }
        let orbit: HashSet<BTreeSet<usize>> =
            group.iter().map(|g| set.iter().map(|&i| g[i]).collect()).collect();
        out.push((set.len(), orbit.len()));
        seen.extend(orbit);
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// sl2 weights from characters.

/// Highest weights of the summands of the adjoint module, from the
/// eigenvalues of the neutral element.
pub fn sl2_weights_by_character(family: char, parts: &[u32]) -> Vec<u32> {
    let h: Vec<i64> = parts
        .iter()
        .flat_map(|&m| (0..m).map(move |j| m as i64 - 1 - 2 * j as i64))
        .collect();
    let mut eig: Vec<i64> = Vec::new();
    let n = h.len();
    match family {
        'A' => {
            for i in 0..n {
                for j in 0..n {
                    eig.push(h[i] - h[j]);
                }
            }
            let z = eig.iter().position(|&e| e == 0).unwrap();
            eig.remove(z);
        }
        'B' | 'D' => {
            for i in 0..n {
                for j in i + 1..n {
                    eig.push(h[i] + h[j]);
                }
            }
        }
        'C' => {
            for i in 0..n {
                for j in i..n {
                    eig.push(h[i] + h[j]);
                }
            }
        }
        _ => panic!("unsupported family"),
    }
    let mult = |w: i64| eig.iter().filter(|&&e| e == w).count();
    let top = eig.iter().copied().max().unwrap_or(0);
    let mut out = Vec::new();
    for w in (0..=top).rev() {
        let k = mult(w) - mult(w + 2);
        out.extend(std::iter::repeat_n(w as u32, k));
    }
    out
}

// ---------------------------------------------------------------------------
// Graded ideal membership by direct elimination.

fn rank_of(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &pivot;
            for k in c..ncols {
                let d = &f * &rows[r][k];
                rows[i][k] -= d;
            }
        }
        r += 1;
    }
    r
}

fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .flat_map(|e| {
            monomials(n - 1, d - e).into_iter().map(move |mut rest| {
                rest.insert(0, e);
                rest
            })
        })
        .collect()
}

/// Whether every monomial of degree `d` lies in the ideal.
pub fn degree_is_full(p: &[MultiPoly], d: u32) -> bool {
    let n = p[0].nvars();
    let basis = monomials(n, d);
    let pos: HashMap<Vec<u32>, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for q in p {
        let dq = q.total_degree().unwrap();
        if dq > d {
            continue;
        }
        for m in monomials(n, d - dq) {
            let mut row = vec![Rational::zero(); basis.len()];
            for (t, c) in q.terms() {
                let e: Vec<u32> = t.0.iter().zip(&m).map(|(a, b)| a + b).collect();
                row[pos[&e]] += c;
            }
            rows.push(row);
        }
    }
    rank_of(rows) == basis.len()
}

pub fn threshold_oracle(p: &[MultiPoly], ceiling: u32) -> Option<u32> {
    (1..=ceiling).find(|&d| degree_is_full(p, d)).map(|d| d - 1)
}

// ---------------------------------------------------------------------------
// Weyl operators acting on polynomials.

/// `Σ c x^α ∂^β f`, computed term by term with the polynomial derivative.
pub fn act(op: &WeylOp, f: &MultiPoly) -> MultiPoly {
    let v = f.vars().clone();
    let mut out = MultiPoly::zero(v.clone());
    for ((a, b), c) in op.terms() {
        let mut g = f.clone();
        for (i, &e) in b.0.iter().enumerate() {
            for _ in 0..e {
                g = g.derivative(i);
            }
        }
        out = &out + &(&MultiPoly::monomial(v.clone(), a.0.clone(), c.clone()) * &g);
    }
    out
}

/// All monomials of degree `<= d` in `n` variables, as polynomials.
pub fn test_functions(v: &Vars, d: u32) -> Vec<MultiPoly> {
    (0..=d)
        .flat_map(|k| Monomial::all_of_degree(v.len(), k))
        .map(|m| MultiPoly::monomial(v.clone(), m.0, Rational::one()))
        .collect()
}

pub fn r(n: i64) -> Rational {
    int(n)
}

// ---------------------------------------------------------------------------
// Random inputs.

use rand::Rng;

/// Random operator with up to `max_terms` terms, each of total degree
/// `|α| + |β| <= max_deg` and a small integer coefficient.
pub fn random_weyl_op<R: Rng>(rng: &mut R, v: &Vars, max_terms: usize, max_deg: u32) -> WeylOp {
    let n = v.len();
    let mut op = WeylOp::zero(v.clone());
    for _ in 0..rng.gen_range(1..=max_terms) {
        let mut a = vec![0u32; n];
        let mut b = vec![0u32; n];
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            let i = rng.gen_range(0..n);
            if rng.gen_bool(0.5) {
                a[i] += 1;
            } else {
                b[i] += 1;
            }
        }
        let c = rng.gen_range(-4i64..=4);
        op = op.try_add(&WeylOp::term(v.clone(), a, b, int(c))).unwrap();
    }
    op
}

/// Dense homogeneous polynomial of degree `d` with coefficients in `[-3, 3]`.
pub fn random_homogeneous<R: Rng>(rng: &mut R, v: &Vars, d: u32) -> MultiPoly {
    let mut p = MultiPoly::zero(v.clone());
    for m in Monomial::all_of_degree(v.len(), d) {
        let c = rng.gen_range(-3i64..=3);
        p = &p + &MultiPoly::monomial(v.clone(), m.0, int(c));
    }
    p
}

pub fn random_int_matrix<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|_| (0..n).map(|_| rng.gen_range(-5i64..=5)).collect()).collect()
}

pub fn binom(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
