use num_bigint::BigInt;
use num_traits::Zero;

use crate::bfunction::{BFunction, BKind};
use crate::error::{Error, Result};
use crate::exactalg::{factorial, linalg, Monomial, MultiPoly, Rational};

use super::identities::{diagonal_sum, falling_euler};
use super::{v_order, WeightVector, WeylOp};

fn check_system(p: &[MultiPoly]) -> Result<u32> {
    let first = p.first().ok_or_else(|| Error::input("empty polynomial system"))?;
    let n = first.nvars();
    if p.len() != n {
        return Err(Error::input(format!("{} polynomials in {n} variables", p.len())));
    }
    let mut total = 0;
    for q in p {
        if q.vars() != first.vars() {
            return Err(Error::structural("polynomials use different variable lists"));
        }
        match q.total_degree() {
            Some(d) if d > 0 && q.is_homogeneous() => total += d,
            _ => return Err(Error::input(format!("{q} is not homogeneous of positive degree"))),
        }
    }
    Ok(total)
}

/// Rows are the products `m · p_i` with `deg m = d − deg p_i`, written in the
/// monomial basis of degree `d`.
struct Graded {
    basis: Vec<Monomial>,
    multipliers: Vec<(usize, Monomial)>,
    rows: Vec<Vec<Rational>>,
}

fn graded_piece(p: &[MultiPoly], d: u32) -> Graded {
    let n = p[0].nvars();
    let basis = Monomial::all_of_degree(n, d);
    let pos: std::collections::HashMap<&Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut multipliers = Vec::new();
    let mut rows = Vec::new();
    for (i, q) in p.iter().enumerate() {
        let dq = q.total_degree().unwrap();
        if dq > d {
            continue;
        }
        for m in Monomial::all_of_degree(n, d - dq) {
            let mut row = vec![Rational::zero(); basis.len()];
            for (t, c) in q.terms() {
                row[pos[&t.mul(&m)]] += c;
            }
            rows.push(row);
            multipliers.push((i, m));
        }
    }
    Graded { basis, multipliers, rows }
}

/// Least `M₁` such that every monomial of degree `> M₁` lies in the ideal
/// `(p_1, …, p_n)`, decided degree by degree with exact linear algebra.
///
/// Fails with an input error when no degree up to `Σ deg p_i + 1` is full,
/// which happens exactly when the common zero set is larger than the origin.
pub fn membership_threshold(p: &[MultiPoly]) -> Result<u32> {
    let m = check_system(p)?;
    for d in 1..=m + 1 {
        let g = graded_piece(p, d);
        if linalg::rank(&g.rows) == g.basis.len() {
            return Ok(d - 1);
        }
    }
    Err(Error::input("the common zero set of the symbols is not the origin"))
}

/// Some `q_1, …, q_n` with `target = Σ q_i p_i`, or `None` if `target` is not
/// in the ideal. `target` must be homogeneous.
pub fn ideal_coefficients(p: &[MultiPoly], target: &MultiPoly) -> Result<Option<Vec<MultiPoly>>> {
    check_system(p)?;
    let v = p[0].vars().clone();
    if target.vars() != &v {
        return Err(Error::structural("target uses a different variable list"));
    }
    if !target.is_homogeneous() {
        return Err(Error::input("target must be homogeneous"));
    }
    let Some(d) = target.total_degree() else {
        return Ok(Some(vec![MultiPoly::zero(v); p.len()]));
    };
    let g = graded_piece(p, d);
    if g.rows.is_empty() {
        return Ok(None);
    }
    // columns of the system are the multipliers
    let a: Vec<Vec<Rational>> = (0..g.basis.len())
        .map(|r| g.rows.iter().map(|row| row[r].clone()).collect())
        .collect();
    let b: Vec<Rational> = g.basis.iter().map(|m| target.coeff(&m.0)).collect();
    let Some(x) = linalg::solve(&a, &b) else {
        return Ok(None);
    };
    let mut q = vec![MultiPoly::zero(v.clone()); p.len()];
    for ((i, m), c) in g.multipliers.iter().zip(x) {
        q[*i] = &q[*i] + &MultiPoly::monomial(v.clone(), m.0.clone(), c);
    }
    Ok(Some(q))
}

/// Witness for `b(θ) + Q = Σ A_i P_i` with `Q` of negative V-order along the
/// origin (or zero).
#[derive(Debug, Clone)]
pub struct BCertificate {
    /// `N`, so that `b(θ) = θ(θ−1)…(θ−N+1)`.
    pub degree: u32,
    pub threshold: u32,
    pub multipliers: Vec<WeylOp>,
    pub remainder: WeylOp,
}

/// b-function along the origin of `D/(P_1, …, P_n)` for operators whose
/// principal symbols are constant-coefficient homogeneous polynomials with
/// common zero `{0}`.
pub fn bfunction_at_zero(ops: &[WeylOp]) -> Result<BFunction> {
    bfunction_certificate(ops).map(|(b, _)| b)
}

/// Same as [`bfunction_at_zero`], together with the verified relation.
///
/// With `N = M₁ + 1`, every `ξ^α` of degree `N` is written as `Σ q_i^α p_i`,
/// and `Σ_{|α|=N} (N!/α!) x^α D^α = θ(θ−1)…(θ−N+1)` turns this into the
/// relation above with `A_i = Σ (N!/α!) x^α q_i^α(D)`.
pub fn bfunction_certificate(ops: &[WeylOp]) -> Result<(BFunction, BCertificate)> {
    let first = ops.first().ok_or_else(|| Error::input("empty operator system"))?;
    let v = first.vars().clone();
    if ops.iter().any(|o| o.vars() != &v) {
        return Err(Error::structural("operators use different variable lists"));
    }
    let symbols = ops.iter().map(WeylOp::constant_symbol).collect::<Result<Vec<_>>>()?;
    let m = check_system(&symbols)?;
    let n = v.len() as u32;
    let threshold = membership_threshold(&symbols)?;
    if threshold + n != m {
        return Err(Error::consistency(format!(
            "membership threshold {threshold} differs from M - n = {}",
            m as i64 - n as i64
        )));
    }
    let big_n = threshold + 1;

    let nf = factorial(big_n);
    let mut multipliers = vec![WeylOp::zero(v.clone()); ops.len()];
    for alpha in Monomial::all_of_degree(v.len(), big_n) {
        let target = MultiPoly::monomial(v.clone(), alpha.0.clone(), Rational::from_integer(1.into()));
        let q = ideal_coefficients(&symbols, &target)?
            .ok_or_else(|| Error::consistency("monomial above the threshold is not in the ideal"))?;
        let af: BigInt = alpha.0.iter().map(|&a| factorial(a)).product();
        let x_alpha = WeylOp::term(
            v.clone(),
            alpha.0.clone(),
            vec![0; v.len()],
            Rational::new(nf.clone(), af),
        );
        for (a, qi) in multipliers.iter_mut().zip(&q) {
            if !qi.is_zero() {
                *a = a.try_add(&x_alpha.normal_product(&WeylOp::from_symbol(qi))?)?;
            }
        }
    }

    let b_op = diagonal_sum(v.clone(), big_n);
    if b_op != falling_euler(v.clone(), big_n) {
        return Err(Error::consistency("diagonal sum differs from the falling power of theta"));
    }
    let mut combo = WeylOp::zero(v.clone());
    for (a, p) in multipliers.iter().zip(ops) {
        combo = combo.try_add(&a.normal_product(p)?)?;
    }
    let remainder = combo.try_sub(&b_op)?;
    let ord = v_order(&remainder, &WeightVector::uniform(v.len()))?;
    if ord.as_ref().is_some_and(|o| *o >= Rational::zero()) {
        return Err(Error::consistency("remainder does not have negative V-order"));
    }
    let kind = match remainder.order() {
        None => BKind::Monodromic,
        Some(o) if o <= big_n => BKind::Regular,
        Some(_) => BKind::General,
    };
    let roots = (0..big_n).map(|j| Rational::from_integer(j.into())).collect();
    let b = BFunction::new(
        roots,
        Rational::from_integer(n.into()),
        kind,
        format!("V-filtration along the origin, weights {}", WeightVector::uniform(v.len())),
    )?;
    Ok((b, BCertificate { degree: big_n, threshold, multipliers, remainder }))
}
