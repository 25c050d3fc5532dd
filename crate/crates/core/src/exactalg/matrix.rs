use super::{int, MultiPoly, Rational, Vars};
use crate::error::{Error, Result};

/// Square matrix whose entries are polynomials over one shared variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    vars: Vars,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    /// Builds from row-major entries.
    pub fn new(size: usize, entries: Vec<MultiPoly>) -> Result<Self> {
        if size == 0 {
            return Err(Error::structural("matrix size must be positive"));
        }
        if entries.len() != size * size {
            return Err(Error::structural(format!(
                "expected {} entries for a {size}x{size} matrix, got {}",
                size * size,
                entries.len()
            )));
        }
        let vars = entries[0].vars().clone();
        if entries.iter().any(|e| e.vars() != &vars) {
            return Err(Error::structural("matrix entries use different variables"));
        }
        Ok(PolyMatrix {
            size,
            vars,
            entries,
        })
    }

    pub fn from_fn(size: usize, vars: Vars, mut f: impl FnMut(usize, usize) -> MultiPoly) -> Result<Self> {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        if size == 0 {
            return Err(Error::structural("matrix size must be positive"));
        }
        let m = PolyMatrix { size, vars, entries };
        if m.entries.iter().any(|e| e.vars() != &m.vars) {
            return Err(Error::structural("matrix entries use different variables"));
        }
        Ok(m)
    }

    /// Constant matrix from integer rows.
    pub fn from_ints(vars: Vars, rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::structural("matrix is not square"));
        }
        PolyMatrix::from_fn(n, vars.clone(), |i, j| {
            MultiPoly::constant(vars.clone(), int(rows[i][j]))
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.size + j]
    }

    pub fn trace(&self) -> MultiPoly {
        let mut t = MultiPoly::zero(self.vars.clone());
        for i in 0..self.size {
            t = &t + self.get(i, i);
        }
        t
    }

    fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        let n = self.size;
        let mut entries = vec![MultiPoly::zero(self.vars.clone()); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let e = &mut entries[i * n + j];
                    *e = &*e + &prod;
                }
            }
        }
        PolyMatrix {
            size: n,
            vars: self.vars.clone(),
            entries,
        }
    }
}

/// Coefficients of `det(T·Id − M)` in descending powers of `T`, by the
/// Faddeev–LeVerrier recurrence
///
/// ```text
/// M_0 = 0, c_n = 1,
/// M_k = A·M_{k-1} + c_{n-k+1}·I,   c_{n-k} = −tr(A·M_k) / k.
/// ```
///
/// Every division is by the integer step `k` and is exact over ℚ.
pub fn charpoly(m: &PolyMatrix, max_dim: usize) -> Result<Vec<MultiPoly>> {
    let n = m.size;
    if n > max_dim {
        return Err(Error::resource(format!(
            "charpoly of a {n}x{n} matrix exceeds the dimension guard {max_dim}"
        )));
    }
    let vars = m.vars.clone();
    let one = MultiPoly::one(vars.clone());
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(one.clone());
    // running M_k, starting from M_1 = I
    let mut mk = PolyMatrix::from_fn(n, vars.clone(), |i, j| {
        if i == j {
            one.clone()
        } else {
            MultiPoly::zero(vars.clone())
        }
    })?;
    for k in 1..=n {
        let am = m.mul(&mk);
        let c = am.trace().scale(&-Rational::new(1.into(), (k as i64).into()));
        if k < n {
            mk = am;
            for i in 0..n {
                let e = &mut mk.entries[i * n + i];
                *e = &*e + &c;
            }
        } else if cfg!(debug_assertions) {
            // Cayley–Hamilton: A·M_n + c_0·I = 0
            for i in 0..n {
                for j in 0..n {
                    let v = if i == j { am.get(i, j) + &c } else { am.get(i, j).clone() };
                    debug_assert!(v.is_zero(), "Cayley-Hamilton residue nonzero");
                }
            }
        }
        coeffs.push(c);
    }
    debug_assert!(coeffs.iter().all(|c| c.vars() == &vars));
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::vars;

    #[test]
    fn zero_matrix_is_t_cubed() {
        let v = vars(&["x"]);
        let m = PolyMatrix::from_ints(v, &[vec![0; 3], vec![0; 3], vec![0; 3]]).unwrap();
        let c = charpoly(&m, 16).unwrap();
        let consts: Vec<_> = c.iter().map(|p| p.constant_term()).collect();
        assert_eq!(consts, vec![int(1), int(0), int(0), int(0)]);
        assert!(c[1..].iter().all(MultiPoly::is_zero));
    }

    #[test]
    fn identity_2x2() {
        let v = vars(&["x"]);
        let m = PolyMatrix::from_ints(v, &[vec![1, 0], vec![0, 1]]).unwrap();
        let c = charpoly(&m, 16).unwrap();
        let consts: Vec<_> = c.iter().map(|p| p.constant_term()).collect();
        assert_eq!(consts, vec![int(1), int(-2), int(1)]);
    }

    #[test]
    fn guard_rejects_large_matrices() {
        let v = vars(&["x"]);
        let rows = vec![vec![0i64; 5]; 5];
        let m = PolyMatrix::from_ints(v, &rows).unwrap();
        assert!(matches!(charpoly(&m, 4), Err(Error::Resource(_))));
    }

    #[test]
    fn structural_errors() {
        let v = vars(&["x"]);
        assert!(PolyMatrix::new(2, vec![MultiPoly::zero(v.clone()); 3]).is_err());
        let w = vars(&["y"]);
        let mixed = vec![
            MultiPoly::zero(v.clone()),
            MultiPoly::zero(w),
            MultiPoly::zero(v.clone()),
            MultiPoly::zero(v),
        ];
        assert!(PolyMatrix::new(2, mixed).is_err());
    }
}
