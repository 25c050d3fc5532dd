use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{binomial, factorial, vars, Monomial, Rational, Vars};
use crate::limits::Limits;

use super::WeylOp;

/// `Σ_{|α|=N, α≤β} β!/(α!(β−α)!)`, checked against `C(|β|, N)`.
pub fn multinomial_slice_sum(beta: &[u32], n: u32) -> Result<Rational> {
    let m: u32 = beta.iter().sum();
    if n > m {
        return Err(Error::input(format!("N = {n} exceeds |beta| = {m}")));
    }
    let mut total = BigInt::zero();
    for alpha in Monomial::all_of_degree(beta.len(), n) {
        if alpha.0.iter().zip(beta).any(|(a, b)| a > b) {
            continue;
        }
        let mut t = BigInt::one();
        for (&a, &b) in alpha.0.iter().zip(beta) {
            t *= binomial(b, a);
        }
        total += t;
    }
    let want = binomial(m, n);
    if total != want {
        return Err(Error::consistency(format!("slice sum {total} differs from C({m}, {n}) = {want}")));
    }
    Ok(Rational::from_integer(total))
}

/// `θ(θ−1)…(θ−N+1)`.
pub fn falling_euler(v: Vars, big_n: u32) -> WeylOp {
    let theta = WeylOp::euler(v.clone());
    let mut out = WeylOp::one(v.clone());
    for j in 0..big_n {
        let f = theta
            .try_sub(&WeylOp::constant(v.clone(), Rational::from_integer(j.into())))
            .expect("same variables");
        out = out.normal_product(&f).expect("same variables");
    }
    out
}

pub(crate) fn default_vars(n: usize) -> Vars {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    vars(&names)
}

/// `Σ_{|α|=N} (N!/α!) x^α D^α − θ(θ−1)…(θ−N+1)`, which vanishes identically.
pub fn euler_power_identity(n: usize, big_n: u32, limits: &Limits) -> Result<WeylOp> {
    if n == 0 || big_n == 0 {
        return Err(Error::input("n and N must be positive"));
    }
    if n > limits.max_euler_vars || big_n as usize > limits.max_euler_power {
        return Err(Error::resource(format!(
            "expansion with n = {n}, N = {big_n} exceeds the guard n <= {}, N <= {}",
            limits.max_euler_vars, limits.max_euler_power
        )));
    }
    let v = default_vars(n);
    diagonal_sum(v.clone(), big_n).try_sub(&falling_euler(v, big_n))
}

/// `Σ_{|α|=N} (N!/α!) x^α D^α`.
pub(crate) fn diagonal_sum(v: Vars, big_n: u32) -> WeylOp {
    let n = v.len();
    let mut lhs = WeylOp::zero(v);
    let nf = factorial(big_n);
    for alpha in Monomial::all_of_degree(n, big_n) {
        let af: BigInt = alpha.0.iter().map(|&a| factorial(a)).product();
        lhs.add_term(alpha.clone(), alpha, Rational::new(nf.clone(), af));
    }
    lhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    #[test]
    fn slice_sums() {
        assert_eq!(multinomial_slice_sum(&[2, 1], 2).unwrap(), int(3));
        assert_eq!(multinomial_slice_sum(&[3, 0, 2], 0).unwrap(), int(1));
        assert_eq!(multinomial_slice_sum(&[3, 0, 2], 5).unwrap(), int(1));
        assert!(matches!(multinomial_slice_sum(&[1], 2), Err(Error::Input(_))));
    }

    #[test]
    fn euler_identity_small() {
        let lim = Limits::default();
        for (n, nn) in [(1, 1), (2, 2), (3, 4)] {
            assert!(euler_power_identity(n, nn, &lim).unwrap().is_zero());
        }
        assert!(matches!(euler_power_identity(4, 1, &lim), Err(Error::Resource(_))));
        assert!(matches!(euler_power_identity(1, 6, &lim), Err(Error::Resource(_))));
    }
}
