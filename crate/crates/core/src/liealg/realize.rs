use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{int, linalg, vars, MultiPoly, PolyMatrix, Rational, Vars};
use crate::limits::Limits;
use crate::rootsys::{build_root_system, parse_type_label, Component, Family};

/// A basis vector of the realization together with its matrix.
#[derive(Debug, Clone)]
pub struct BasisElement {
    pub name: String,
    /// Row-major `N × N` matrix in the defining representation.
    pub matrix: Vec<Rational>,
}

/// Classical simple Lie algebra as matrices, with exact structure constants.
///
/// The first `rank` basis elements span the diagonal Cartan subalgebra; the
/// remaining ones are root vectors.
#[derive(Debug, Clone)]
pub struct LieAlgebraRealization {
    type_label: String,
    component: Component,
    matrix_size: usize,
    rank: usize,
    basis: Vec<BasisElement>,
    coords: Vars,
    /// `structure[i][j]` = coordinates of `[e_i, e_j]`.
    structure: Vec<Vec<Vec<Rational>>>,
    /// For root vectors, the values `α(H_1), …, α(H_l)`; `None` on the Cartan part.
    root_weights: Vec<Option<Vec<Rational>>>,
    /// For root vectors, `α(H_reg)` for a fixed regular element; its sign
    /// selects the standard positive system.
    heights: Vec<Option<Rational>>,
}

fn unit(n: usize, r: usize, c: usize) -> Vec<Rational> {
    let mut m = vec![Rational::zero(); n * n];
    m[r * n + c] = Rational::one();
    m
}

fn combo(n: usize, parts: &[(i64, usize, usize)]) -> Vec<Rational> {
    let mut m = vec![Rational::zero(); n * n];
    for &(c, r, k) in parts {
        m[r * n + k] += int(c);
    }
    m
}

fn bracket(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = &a[i * n + k];
            let y = &b[i * n + k];
            for j in 0..n {
                // (ab - ba)[i][j] with shared inner index k
                let bkj = &b[k * n + j];
                if !x.is_zero() && !bkj.is_zero() {
                    out[i * n + j] += x * bkj;
                }
                let akj = &a[k * n + j];
                if !y.is_zero() && !akj.is_zero() {
                    out[i * n + j] -= y * akj;
                }
            }
        }
    }
    out
}

/// Builds the standard matrix model: `sl_{l+1}` for `A_l`, `so_{2l+1}` for
/// `B_l`, `sp_{2l}` for `C_l` and `so_{2l}` for `D_l`.
pub fn realize(type_label: &str, limits: &Limits) -> Result<LieAlgebraRealization> {
    let comps = parse_type_label(type_label)?;
    let [comp] = comps.as_slice() else {
        return Err(Error::input(format!(
            "{type_label}: realizations are provided for simple classical types only"
        )));
    };
    if !comp.family.is_classical() {
        return Err(Error::input(format!("{comp} has no classical matrix model")));
    }
    if comp.algebra_dim() > limits.max_realize_dim {
        return Err(Error::resource(format!(
            "{comp} has dimension {} above the realization guard {}",
            comp.algebra_dim(),
            limits.max_realize_dim
        )));
    }
    let (n, basis, reg) = match comp.family {
        Family::A => type_a(comp.rank),
        Family::B => type_bd(comp.rank, true),
        Family::C => type_c(comp.rank),
        Family::D => type_bd(comp.rank, false),
        _ => unreachable!(),
    };
    LieAlgebraRealization::from_basis(*comp, n, comp.rank, basis, reg)
}

type Model = (usize, Vec<BasisElement>, Vec<Rational>);

fn el(name: String, matrix: Vec<Rational>) -> BasisElement {
    BasisElement { name, matrix }
}

fn type_a(l: usize) -> Model {
    let n = l + 1;
    let mut basis = Vec::new();
    if l == 1 {
        basis.push(el("H".into(), combo(2, &[(1, 0, 0), (-1, 1, 1)])));
        basis.push(el("X".into(), unit(2, 0, 1)));
        basis.push(el("Y".into(), unit(2, 1, 0)));
    } else {
        for i in 0..l {
            basis.push(el(format!("h{}", i + 1), combo(n, &[(1, i, i), (-1, i + 1, i + 1)])));
        }
        for i in 0..n {
            for j in i + 1..n {
                basis.push(el(format!("e{}{}", i + 1, j + 1), unit(n, i, j)));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                basis.push(el(format!("f{}{}", j + 1, i + 1), unit(n, j, i)));
            }
        }
    }
    let reg = (0..n).map(|i| int((n - i) as i64)).collect();
    (n, basis, diag(n, reg))
}

fn diag(n: usize, d: Vec<Rational>) -> Vec<Rational> {
    let mut m = vec![Rational::zero(); n * n];
    for (i, v) in d.into_iter().enumerate() {
        m[i * n + i] = v;
    }
    m
}

/// Diagonal of the regular element `diag(l, …, 1, −l, …, −1[, 0])`.
fn reg_so_sp(l: usize, n: usize) -> Vec<Rational> {
    let mut d = vec![Rational::zero(); n];
    for i in 0..l {
        d[i] = int((l - i) as i64);
        d[l + i] = -int((l - i) as i64);
    }
    diag(n, d)
}

/// `sp_{2l}` preserving `J = [[0, I], [−I, 0]]`: blocks `[[A, B], [C, −Aᵀ]]`
/// with `B`, `C` symmetric.
fn type_c(l: usize) -> Model {
    let n = 2 * l;
    let mut basis = Vec::new();
    for i in 0..l {
        basis.push(el(format!("h{}", i + 1), combo(n, &[(1, i, i), (-1, l + i, l + i)])));
    }
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            pos.push(el(format!("u{}{}", i + 1, j + 1), combo(n, &[(1, i, j), (-1, l + j, l + i)])));
            neg.push(el(format!("u{}{}", j + 1, i + 1), combo(n, &[(1, j, i), (-1, l + i, l + j)])));
            pos.push(el(format!("v{}{}", i + 1, j + 1), combo(n, &[(1, i, l + j), (1, j, l + i)])));
            neg.push(el(format!("w{}{}", i + 1, j + 1), combo(n, &[(1, l + i, j), (1, l + j, i)])));
        }
        pos.push(el(format!("s{}", i + 1), unit(n, i, l + i)));
        neg.push(el(format!("t{}", i + 1), unit(n, l + i, i)));
    }
    basis.extend(pos);
    basis.extend(neg);
    (n, basis, reg_so_sp(l, n))
}

/// `so_{2l+1}` (odd) or `so_{2l}` preserving `J = [[0, I, 0], [I, 0, 0], [0, 0, 1]]`.
fn type_bd(l: usize, odd: bool) -> Model {
    let n = 2 * l + usize::from(odd);
    let mut basis = Vec::new();
    for i in 0..l {
        basis.push(el(format!("h{}", i + 1), combo(n, &[(1, i, i), (-1, l + i, l + i)])));
    }
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            pos.push(el(format!("u{}{}", i + 1, j + 1), combo(n, &[(1, i, j), (-1, l + j, l + i)])));
            neg.push(el(format!("u{}{}", j + 1, i + 1), combo(n, &[(1, j, i), (-1, l + i, l + j)])));
            pos.push(el(format!("v{}{}", i + 1, j + 1), combo(n, &[(1, i, l + j), (-1, j, l + i)])));
            neg.push(el(format!("w{}{}", i + 1, j + 1), combo(n, &[(1, l + i, j), (-1, l + j, i)])));
        }
        if odd {
            let z = 2 * l;
            pos.push(el(format!("s{}", i + 1), combo(n, &[(1, i, z), (-1, z, l + i)])));
            neg.push(el(format!("t{}", i + 1), combo(n, &[(1, l + i, z), (-1, z, i)])));
        }
    }
    basis.extend(pos);
    basis.extend(neg);
    (n, basis, reg_so_sp(l, n))
}

impl LieAlgebraRealization {
    fn from_basis(
        component: Component,
        n: usize,
        rank: usize,
        basis: Vec<BasisElement>,
        reg: Vec<Rational>,
    ) -> Result<Self> {
        let d = basis.len();
        if d != component.algebra_dim() {
            return Err(Error::consistency(format!(
                "{component}: built {d} basis elements, expected {}",
                component.algebra_dim()
            )));
        }
        check_form(component.family, n, rank, &basis)?;

        // coordinate extraction through d independent matrix positions
        let mut rows: Vec<Vec<Rational>> = basis.iter().map(|b| b.matrix.clone()).collect();
        let pivots = linalg::rref(&mut rows);
        if pivots.len() != d {
            return Err(Error::consistency("basis matrices are linearly dependent"));
        }
        let sub: Vec<Vec<Rational>> = basis
            .iter()
            .map(|b| pivots.iter().map(|&p| b.matrix[p].clone()).collect())
            .collect();
        let inv = linalg::inverse(&sub).ok_or_else(|| Error::consistency("singular pivot block"))?;
        let coords_of = |m: &[Rational]| -> Result<Vec<Rational>> {
            // c · sub = m[pivots]  =>  c = m[pivots] · inv
            let mut c = vec![Rational::zero(); d];
            for (r, &p) in pivots.iter().enumerate() {
                if m[p].is_zero() {
                    continue;
                }
                for (ci, v) in c.iter_mut().zip(&inv[r]) {
                    if !v.is_zero() {
                        *ci += &m[p] * v;
                    }
                }
            }
            let mut back = vec![Rational::zero(); n * n];
            for (ci, b) in c.iter().zip(&basis) {
                if ci.is_zero() {
                    continue;
                }
                for (x, y) in back.iter_mut().zip(&b.matrix) {
                    if !y.is_zero() {
                        *x += ci * y;
                    }
                }
            }
            if back != m {
                return Err(Error::consistency("bracket leaves the span of the basis"));
            }
            Ok(c)
        };

        let mut structure = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                structure[i][j] = coords_of(&bracket(&basis[i].matrix, &basis[j].matrix, n))?;
            }
        }

        let mut root_weights = vec![None; d];
        let mut heights = vec![None; d];
        for e in rank..d {
            let mut w = Vec::with_capacity(rank);
            for h in 0..rank {
                let c = &structure[h][e];
                let lambda = c[e].clone();
                if c.iter().enumerate().any(|(k, v)| k != e && !v.is_zero()) {
                    return Err(Error::consistency(format!("{} is not a root vector", basis[e].name)));
                }
                w.push(lambda);
            }
            if w.iter().all(Zero::is_zero) {
                return Err(Error::consistency(format!("{} has zero weight", basis[e].name)));
            }
            let hb = bracket(&reg, &basis[e].matrix, n);
            let ratio = hb
                .iter()
                .zip(&basis[e].matrix)
                .find(|(_, m)| !m.is_zero())
                .map(|(x, m)| x / m)
                .unwrap();
            if ratio.is_zero() {
                return Err(Error::consistency("regular element is not regular"));
            }
            root_weights[e] = Some(w);
            heights[e] = Some(ratio);
        }

        let rs = build_root_system(&component.to_string())?;
        let npos = heights.iter().flatten().filter(|h| h.is_positive()).count();
        if rs.dim() != d || 2 * npos != d - rank || rs.num_positive() != npos {
            return Err(Error::consistency(format!(
                "{component}: root vectors do not match the root system"
            )));
        }

        let coords: Vars = if component == (Component { family: Family::A, rank: 1 }) {
            vars(&["x", "y", "z"])
        } else {
            basis.iter().map(|b| b.name.clone()).collect()
        };

        let alg = LieAlgebraRealization {
            type_label: component.to_string(),
            component,
            matrix_size: n,
            rank,
            basis,
            coords,
            structure,
            root_weights,
            heights,
        };
        alg.check_antisymmetry()?;
        alg.check_jacobi()?;
        Ok(alg)
    }

    pub fn type_label(&self) -> &str {
        &self.type_label
    }

    pub fn component(&self) -> Component {
        self.component
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix_size(&self) -> usize {
        self.matrix_size
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// Coordinate function names, one per basis element.
    pub fn coords(&self) -> &Vars {
        &self.coords
    }

    pub fn cartan_indices(&self) -> std::ops::Range<usize> {
        0..self.rank
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_coords(&self, i: usize, j: usize) -> &[Rational] {
        &self.structure[i][j]
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let f = ai * bj;
                for (o, c) in out.iter_mut().zip(&self.structure[i][j]) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    /// `c[i][j] = −c[j][i]` for all pairs.
    pub fn check_antisymmetry(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let neg: Vec<Rational> = self.structure[j][i].iter().map(|v| -v).collect();
                if self.structure[i][j] != neg {
                    return Err(Error::consistency(format!(
                        "antisymmetry fails for ({}, {})",
                        self.basis[i].name, self.basis[j].name
                    )));
                }
            }
        }
        Ok(())
    }

    /// Jacobi identity over every basis triple.
    pub fn check_jacobi(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                let ij = &self.structure[i][j];
                for k in j + 1..d {
                    let a = self.bracket(ij, &self.unit_vector(k));
                    let b = self.bracket(&self.structure[j][k], &self.unit_vector(i));
                    let c = self.bracket(&self.structure[k][i], &self.unit_vector(j));
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return Err(Error::consistency(format!(
                            "Jacobi identity fails for ({}, {}, {})",
                            self.basis[i].name, self.basis[j].name, self.basis[k].name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `α(H_1), …, α(H_l)` for a root vector.
    pub fn root_weight(&self, e: usize) -> Option<&[Rational]> {
        self.root_weights[e].as_deref()
    }

    pub fn is_positive_root_vector(&self, e: usize) -> bool {
        self.heights[e].as_ref().is_some_and(|h| h.is_positive())
    }

    /// Basis index of the root vector with the opposite weight.
    pub fn opposite(&self, e: usize) -> Option<usize> {
        let w = self.root_weight(e)?;
        (self.rank..self.dim()).find(|&f| {
            self.root_weight(f)
                .is_some_and(|v| v.iter().zip(w).all(|(a, b)| *a == -b))
        })
    }

    /// Simple root vectors of the standard positive system: positive root
    /// vectors whose weight is not a sum of two positive weights.
    pub fn simple_root_vectors(&self) -> Vec<usize> {
        let pos: Vec<usize> = (self.rank..self.dim())
            .filter(|&e| self.is_positive_root_vector(e))
            .collect();
        pos.iter()
            .copied()
            .filter(|&c| {
                let wc = self.root_weight(c).unwrap();
                !pos.iter().any(|&a| {
                    pos.iter().any(|&b| {
                        let (wa, wb) = (self.root_weight(a).unwrap(), self.root_weight(b).unwrap());
                        wa.iter().zip(wb).zip(wc).all(|((x, y), z)| x + y == *z)
                    })
                })
            })
            .collect()
    }

    /// `ad(X)` at the generic point `X = Σ x_i e_i`: entry `(k, j)` is
    /// `Σ_i c[i][j][k] x_i`.
    pub fn ad_matrix(&self) -> PolyMatrix {
        let d = self.dim();
        let v = self.coords.clone();
        let xs: Vec<MultiPoly> = (0..d).map(|i| MultiPoly::var(v.clone(), i)).collect();
        PolyMatrix::from_fn(d, v.clone(), |k, j| {
            let mut p = MultiPoly::zero(v.clone());
            for (i, x) in xs.iter().enumerate() {
                p.add_scaled(x, &self.structure[i][j][k]);
            }
            p
        })
        .expect("ad matrix is square with shared variables")
    }

    /// The generic element `Σ x_i B_i` in the defining representation.
    pub fn generic_matrix(&self) -> PolyMatrix {
        let n = self.matrix_size;
        let v = self.coords.clone();
        PolyMatrix::from_fn(n, v.clone(), |r, c| {
            let mut p = MultiPoly::zero(v.clone());
            for (i, b) in self.basis.iter().enumerate() {
                p.add_scaled(&MultiPoly::var(v.clone(), i), &b.matrix[r * n + c]);
            }
            p
        })
        .expect("generic matrix is square with shared variables")
    }
}

/// Every basis matrix satisfies the defining linear condition of its family.
fn check_form(family: Family, n: usize, l: usize, basis: &[BasisElement]) -> Result<()> {
    let j: Option<Vec<Rational>> = match family {
        Family::A => None,
        Family::C => {
            let mut m = vec![Rational::zero(); n * n];
            for i in 0..l {
                m[i * n + l + i] = int(1);
                m[(l + i) * n + i] = int(-1);
            }
            Some(m)
        }
        _ => {
            let mut m = vec![Rational::zero(); n * n];
            for i in 0..l {
                m[i * n + l + i] = int(1);
                m[(l + i) * n + i] = int(1);
            }
            if n % 2 == 1 {
                m[(n - 1) * n + n - 1] = int(1);
            }
            Some(m)
        }
    };
    for b in basis {
        let ok = match &j {
            None => (0..n).map(|i| b.matrix[i * n + i].clone()).sum::<Rational>().is_zero(),
            Some(j) => {
                // Xᵀ J + J X = 0
                (0..n).all(|r| {
                    (0..n).all(|c| {
                        let mut s = Rational::zero();
                        for k in 0..n {
                            s += &b.matrix[k * n + r] * &j[k * n + c];
                            s += &j[r * n + k] * &b.matrix[k * n + c];
                        }
                        s.is_zero()
                    })
                })
            }
        };
        if !ok {
            return Err(Error::consistency(format!("{} violates the defining form", b.name)));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords_of(l: &LieAlgebraRealization, name: &str) -> usize {
        l.basis().iter().position(|b| b.name == name).unwrap()
    }

    #[test]
    fn sl2_relations() {
        let l = realize("A1", &Limits::default()).unwrap();
        let (h, x, y) = (0, 1, 2);
        assert_eq!(l.bracket_coords(h, x), &l.unit_vector(x).iter().map(|v| v * int(2)).collect::<Vec<_>>()[..]);
        assert_eq!(l.bracket_coords(h, y), &l.unit_vector(y).iter().map(|v| v * int(-2)).collect::<Vec<_>>()[..]);
        assert_eq!(l.bracket_coords(x, y), &l.unit_vector(h)[..]);
        assert_eq!(l.coords().as_ref(), &["x", "y", "z"]);
    }

    #[test]
    fn dimensions_and_ranks() {
        for (label, dim, rank) in [("A2", 8, 2), ("C2", 10, 2), ("B2", 10, 2), ("A3", 15, 3), ("D4", 28, 4), ("B3", 21, 3)] {
            let l = realize(label, &Limits::default()).unwrap();
            assert_eq!((l.dim(), l.rank()), (dim, rank), "{label}");
            let pos = (l.rank()..l.dim()).filter(|&e| l.is_positive_root_vector(e)).count();
            assert_eq!(2 * pos + rank, dim);
            assert_eq!(l.simple_root_vectors().len(), rank);
        }
    }

    #[test]
    fn sl3_simple_roots_are_adjacent_entries() {
        let l = realize("A2", &Limits::default()).unwrap();
        let names: Vec<_> = l.simple_root_vectors().iter().map(|&e| l.basis()[e].name.clone()).collect();
        assert_eq!(names, vec!["e12", "e23"]);
        assert_eq!(l.opposite(coords_of(&l, "e13")), Some(coords_of(&l, "f31")));
    }

    #[test]
    fn unsupported_types() {
        assert!(matches!(realize("G2", &Limits::default()), Err(Error::Input(_))));
        assert!(matches!(realize("A1xA1", &Limits::default()), Err(Error::Input(_))));
        let tight = Limits { max_realize_dim: 9, ..Limits::default() };
        assert!(matches!(realize("A3", &tight), Err(Error::Resource(_))));
    }
}
