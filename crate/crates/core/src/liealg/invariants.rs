use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{charpoly, int, linalg, rat, MultiPoly, Rational, Vars};
use crate::limits::Limits;

use super::LieAlgebraRealization;

/// A homogeneous polynomial on `𝔤` annihilated by every `τ(e_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantPolynomial {
    poly: MultiPoly,
    degree: u32,
}

impl InvariantPolynomial {
    /// Checks homogeneity and `τ(e_i)·Q = 0` for every basis element.
    pub fn new(alg: &LieAlgebraRealization, poly: MultiPoly) -> Result<Self> {
        if poly.vars() != alg.coords() {
            return Err(Error::structural("polynomial is not over the coordinates of the algebra"));
        }
        if !poly.is_homogeneous() {
            return Err(Error::input("invariant polynomials must be homogeneous"));
        }
        for a in 0..alg.dim() {
            if !apply_field(&tau_field(alg, a), &poly).is_zero() {
                return Err(Error::consistency(format!(
                    "polynomial is not annihilated by tau({})",
                    alg.basis()[a].name
                )));
            }
        }
        let degree = poly.total_degree().unwrap_or(0);
        Ok(InvariantPolynomial { poly, degree })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

/// Coefficients `λ_0, …, λ_n` of `det(T·Id − ad X)`, indexed by the power of `T`.
pub fn ad_charpoly(alg: &LieAlgebraRealization, limits: &Limits) -> Result<Vec<MultiPoly>> {
    let mut c = charpoly(&alg.ad_matrix(), limits.max_charpoly_dim)?;
    c.reverse();
    Ok(c)
}

/// `Δ = λ_l`, after checking that `λ_0, …, λ_{l−1}` vanish and that `Δ` is
/// homogeneous of degree `n − l`.
pub fn discriminant(alg: &LieAlgebraRealization, limits: &Limits) -> Result<InvariantPolynomial> {
    let lambdas = ad_charpoly(alg, limits)?;
    let l = alg.rank();
    if let Some(i) = (0..l).find(|&i| !lambdas[i].is_zero()) {
        return Err(Error::consistency(format!("coefficient of T^{i} in the ad charpoly is nonzero")));
    }
    let delta = lambdas[l].clone();
    let want = (alg.dim() - l) as u32;
    if !delta.is_homogeneous() || delta.total_degree() != Some(want) {
        return Err(Error::consistency(format!(
            "discriminant is not homogeneous of degree {want}"
        )));
    }
    InvariantPolynomial::new(alg, delta)
}

/// Coordinates of `x ↦ [x, e_a]` as linear functions of the generic point.
pub fn tau_field(alg: &LieAlgebraRealization, a: usize) -> Vec<MultiPoly> {
    let d = alg.dim();
    let v = alg.coords().clone();
    (0..d)
        .map(|k| {
            let mut p = MultiPoly::zero(v.clone());
            for i in 0..d {
                let c = &alg.bracket_coords(i, a)[k];
                if !c.is_zero() {
                    p.add_scaled(&MultiPoly::var(v.clone(), i), c);
                }
            }
            p
        })
        .collect()
}

/// The vector field `Σ f_k ∂_k` acting as a derivation.
pub fn apply_field(field: &[MultiPoly], p: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(p.vars().clone());
    for (k, f) in field.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let dp = p.derivative(k);
        if !dp.is_zero() {
            out = &out + &(f * &dp);
        }
    }
    out
}

/// `(n − l)/2`.
pub fn hc_euler_shift(alg: &LieAlgebraRealization) -> Rational {
    rat((alg.dim() - alg.rank()) as i64, 2)
}

fn cartan_vars(alg: &LieAlgebraRealization) -> Vars {
    alg.coords()[..alg.rank()].iter().cloned().collect()
}

fn restrict_to_cartan(alg: &LieAlgebraRealization, p: &MultiPoly) -> MultiPoly {
    let l = alg.rank();
    let off: Vec<usize> = (l..alg.dim()).collect();
    let keep: Vec<usize> = (0..l).collect();
    p.zero_out(&off)
        .restrict_vars(&keep)
        .expect("non-Cartan variables were zeroed")
}

/// Linear form `α` on the Cartan coordinates.
fn root_form(alg: &LieAlgebraRealization, e: usize, v: &Vars) -> MultiPoly {
    let mut p = MultiPoly::zero(v.clone());
    for (k, w) in alg.root_weight(e).unwrap().iter().enumerate() {
        p.add_scaled(&MultiPoly::var(v.clone(), k), w);
    }
    p
}

/// Matrix of the simple reflection `h ↦ h − α(h) H_α` in Cartan coordinates,
/// with `H_α ∈ [e_α, e_−α]` normalised by `α(H_α) = 2`.
fn reflection_matrix(alg: &LieAlgebraRealization, e: usize) -> Result<Vec<Vec<Rational>>> {
    let l = alg.rank();
    let f = alg
        .opposite(e)
        .ok_or_else(|| Error::consistency("root vector without an opposite"))?;
    let h = alg.bracket_coords(e, f);
    if h[l..].iter().any(|c| !c.is_zero()) {
        return Err(Error::consistency("[e_a, e_-a] leaves the Cartan subalgebra"));
    }
    let w = alg.root_weight(e).unwrap();
    let pairing: Rational = w.iter().zip(&h[..l]).map(|(a, b)| a * b).sum();
    if pairing.is_zero() {
        return Err(Error::consistency("degenerate coroot"));
    }
    let coroot: Vec<Rational> = h[..l].iter().map(|c| c * int(2) / &pairing).collect();
    Ok((0..l)
        .map(|r| {
            (0..l)
                .map(|c| {
                    let id = if r == c { Rational::one() } else { Rational::zero() };
                    id - &coroot[r] * &w[c]
                })
                .collect()
        })
        .collect())
}

fn act(p: &MultiPoly, m: &[Vec<Rational>]) -> MultiPoly {
    let v = p.vars().clone();
    let images: Vec<MultiPoly> = m
        .iter()
        .map(|row| {
            let mut q = MultiPoly::zero(v.clone());
            for (j, c) in row.iter().enumerate() {
                q.add_scaled(&MultiPoly::var(v.clone(), j), c);
            }
            q
        })
        .collect();
    p.substitute(&images).expect("images share the Cartan variables")
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

/// Weyl group acting on the Cartan coordinates, generated by the simple
/// reflections.
pub fn cartan_weyl_group(
    alg: &LieAlgebraRealization,
    limits: &Limits,
) -> Result<Vec<Vec<Vec<Rational>>>> {
    let gens = alg
        .simple_root_vectors()
        .into_iter()
        .map(|e| reflection_matrix(alg, e))
        .collect::<Result<Vec<_>>>()?;
    let l = alg.rank();
    let id: Vec<Vec<Rational>> = (0..l)
        .map(|i| (0..l).map(|j| if i == j { int(1) } else { int(0) }).collect())
        .collect();
    let mut seen = std::collections::HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut next = 0;
    while next < out.len() {
        let g = out[next].clone();
        next += 1;
        for s in &gens {
            let h = mat_mul(s, &g);
            if seen.insert(h.clone()) {
                if out.len() >= limits.max_weyl_order {
                    return Err(Error::resource(format!(
                        "Weyl group of {} exceeds {} elements",
                        alg.type_label(),
                        limits.max_weyl_order
                    )));
                }
                out.push(h);
            }
        }
    }
    // inverse of every element is again an element: cheap closure sanity check
    if out.iter().any(|g| linalg::inverse(g).is_none_or(|inv| !seen.contains(&inv))) {
        return Err(Error::consistency("reflection group is not closed under inverses"));
    }
    Ok(out)
}

/// `π`, `Δ|𝔥` and the constant `c` with `Δ|𝔥 = c·π²`.
#[derive(Debug, Clone)]
pub struct PiSquare {
    pub pi: MultiPoly,
    pub delta_restricted: MultiPoly,
    pub ratio: Rational,
}

/// Builds `π = Π_{α>0} α` on `𝔥`, checks `s_α(π) = −π` for every simple
/// reflection and returns the proportionality constant between `Δ|𝔥` and `π²`.
pub fn pi_square_check(alg: &LieAlgebraRealization, delta: &InvariantPolynomial) -> Result<PiSquare> {
    let v = cartan_vars(alg);
    let mut pi = MultiPoly::one(v.clone());
    for e in alg.rank()..alg.dim() {
        if alg.is_positive_root_vector(e) {
            pi = &pi * &root_form(alg, e, &v);
        }
    }
    for e in alg.simple_root_vectors() {
        let s = reflection_matrix(alg, e)?;
        if act(&pi, &s) != -pi.clone() {
            return Err(Error::consistency(format!(
                "reflection in {} does not negate pi",
                alg.basis()[e].name
            )));
        }
    }
    let restricted = restrict_to_cartan(alg, delta.poly());
    let ratio = restricted
        .constant_ratio(&(&pi * &pi))
        .filter(|r| !r.is_zero())
        .ok_or_else(|| Error::consistency("restricted discriminant is not a constant multiple of pi^2"))?;
    Ok(PiSquare { pi, delta_restricted: restricted, ratio })
}

/// `Q|𝔥`, checked to be invariant under the full Weyl group.
pub fn chevalley_restrict(
    alg: &LieAlgebraRealization,
    q: &InvariantPolynomial,
    limits: &Limits,
) -> Result<MultiPoly> {
    let r = restrict_to_cartan(alg, q.poly());
    for g in cartan_weyl_group(alg, limits)? {
        if act(&r, &g) != r {
            return Err(Error::consistency("restriction is not Weyl invariant"));
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::realize;

    fn sl2() -> LieAlgebraRealization {
        realize("A1", &Limits::default()).unwrap()
    }

    #[test]
    fn sl2_discriminant() {
        let l = sl2();
        let d = discriminant(&l, &Limits::default()).unwrap();
        assert_eq!(d.poly().to_string(), "-4*x^2 - 4*y*z");
        assert_eq!(d.degree(), 2);
        let nil = [int(0), int(1), int(0)];
        assert!(d.poly().evaluate(&nil).is_zero());
        assert_eq!(hc_euler_shift(&l), int(1));
    }

    #[test]
    fn sl2_tau_of_h() {
        let l = sl2();
        let t: Vec<String> = tau_field(&l, 0).iter().map(ToString::to_string).collect();
        assert_eq!(t, vec!["0", "-2*y", "2*z"]);
        for a in 0..3 {
            let field = tau_field(&l, a);
            let at_a: Vec<Rational> = field.iter().map(|f| f.evaluate(&l.unit_vector(a))).collect();
            assert!(at_a.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn sl2_pi_and_restriction() {
        let l = sl2();
        let lim = Limits::default();
        let d = discriminant(&l, &lim).unwrap();
        let p = pi_square_check(&l, &d).unwrap();
        assert_eq!(p.pi.to_string(), "2*x");
        assert_eq!(p.ratio, int(-1));
        let v = l.coords().clone();
        let q = &MultiPoly::var(v.clone(), 0).pow(2) + &(&MultiPoly::var(v.clone(), 1) * &MultiPoly::var(v.clone(), 2));
        let q = InvariantPolynomial::new(&l, q).unwrap();
        assert_eq!(chevalley_restrict(&l, &q, &lim).unwrap().to_string(), "x^2");
        let one = InvariantPolynomial::new(&l, MultiPoly::one(v.clone())).unwrap();
        assert_eq!(chevalley_restrict(&l, &one, &lim).unwrap().to_string(), "1");
    }

    #[test]
    fn non_invariant_rejected() {
        let l = sl2();
        let y = MultiPoly::var(l.coords().clone(), 1);
        assert!(matches!(InvariantPolynomial::new(&l, y), Err(Error::Consistency(_))));
    }

    #[test]
    fn weyl_orders_on_cartan() {
        for (t, ord) in [("A1", 2), ("A2", 6), ("B2", 8), ("C2", 8), ("A3", 24), ("D4", 192)] {
            let l = realize(t, &Limits::default()).unwrap();
            assert_eq!(cartan_weyl_group(&l, &Limits::default()).unwrap().len(), ord, "{t}");
        }
    }

    #[test]
    fn charpoly_guard() {
        let l = realize("A2", &Limits::default()).unwrap();
        let tight = Limits { max_charpoly_dim: 7, ..Limits::default() };
        assert!(matches!(discriminant(&l, &tight), Err(Error::Resource(_))));
    }
}
