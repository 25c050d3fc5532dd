use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{binomial, factorial, fmt_rational, Monomial, MultiPoly, Rational, Vars};

/// Element of the Weyl algebra written as `Σ c · x^α D^β` with every `x` to
/// the left of every `D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylOp {
    vars: Vars,
    terms: BTreeMap<(Monomial, Monomial), Rational>,
}

impl WeylOp {
    pub fn zero(vars: Vars) -> Self {
        WeylOp { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vars, c: Rational) -> Self {
        let n = vars.len();
        let mut op = WeylOp::zero(vars);
        op.add_term(Monomial::one(n), Monomial::one(n), c);
        op
    }

    pub fn one(vars: Vars) -> Self {
        WeylOp::constant(vars, Rational::one())
    }

    pub fn term(vars: Vars, alpha: Vec<u32>, beta: Vec<u32>, c: Rational) -> Self {
        assert!(alpha.len() == vars.len() && beta.len() == vars.len(), "exponent length");
        let mut op = WeylOp::zero(vars);
        op.add_term(Monomial(alpha), Monomial(beta), c);
        op
    }

    /// Multiplication by `x_i`.
    pub fn x(vars: Vars, i: usize) -> Self {
        let mut a = vec![0; vars.len()];
        a[i] = 1;
        let b = vec![0; vars.len()];
        WeylOp::term(vars, a, b, Rational::one())
    }

    /// `D_i = ∂/∂x_i`.
    pub fn d(vars: Vars, i: usize) -> Self {
        let mut b = vec![0; vars.len()];
        b[i] = 1;
        let a = vec![0; vars.len()];
        WeylOp::term(vars, a, b, Rational::one())
    }

    /// `θ = Σ x_i D_i`.
    pub fn euler(vars: Vars) -> Self {
        let mut op = WeylOp::zero(vars.clone());
        for i in 0..vars.len() {
            let mut e = vec![0; vars.len()];
            e[i] = 1;
            op.add_term(Monomial(e.clone()), Monomial(e), Rational::one());
        }
        op
    }

    /// Weighted Euler field `Σ m_i x_i D_i`.
    pub fn weighted_euler(vars: Vars, m: &WeightVector) -> Result<Self> {
        if m.len() != vars.len() {
            return Err(Error::structural("weight vector length differs from variable count"));
        }
        let mut op = WeylOp::zero(vars.clone());
        for (i, w) in m.entries().iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = 1;
            op.add_term(Monomial(e.clone()), Monomial(e), w.clone());
        }
        Ok(op)
    }

    /// The constant-coefficient operator `p(D)`.
    pub fn from_symbol(p: &MultiPoly) -> Self {
        let n = p.nvars();
        let mut op = WeylOp::zero(p.vars().clone());
        for (m, c) in p.terms() {
            op.add_term(Monomial::one(n), m.clone(), c.clone());
        }
        op
    }

    /// Multiplication by the polynomial `p(x)`.
    pub fn from_function(p: &MultiPoly) -> Self {
        let n = p.nvars();
        let mut op = WeylOp::zero(p.vars().clone());
        for (m, c) in p.terms() {
            op.add_term(m.clone(), Monomial::one(n), c.clone());
        }
        op
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `((α, β), c)` for each term `c · x^α D^β`.
    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &[u32], beta: &[u32]) -> Rational {
        self.terms
            .get(&(Monomial(alpha.to_vec()), Monomial(beta.to_vec())))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, a: Monomial, b: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    fn same_vars(&self, other: &WeylOp) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::structural(format!(
                "variable lists differ: {:?} vs {:?}",
                self.vars, other.vars
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &WeylOp) -> Result<WeylOp> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &WeylOp) -> Result<WeylOp> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> WeylOp {
        if c.is_zero() {
            return WeylOp::zero(self.vars.clone());
        }
        WeylOp {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Exact product, reordered with `D^β x^γ = Σ_k Π C(β_i, k_i) γ_i!/(γ_i − k_i)! x^{γ−k} D^{β−k}`.
    pub fn normal_product(&self, other: &WeylOp) -> Result<WeylOp> {
        self.same_vars(other)?;
        let n = self.nvars();
        let mut out = WeylOp::zero(self.vars.clone());
        for ((a, b), c1) in &self.terms {
            for ((g, d), c2) in &other.terms {
                let c = c1 * c2;
                // enumerate k ≤ min(β, γ) componentwise
                let bound: Vec<u32> = (0..n).map(|i| b.0[i].min(g.0[i])).collect();
                let mut k = vec![0u32; n];
                loop {
                    let mut f = BigInt::one();
                    for i in 0..n {
                        f *= binomial(b.0[i], k[i]) * factorial(g.0[i]) / factorial(g.0[i] - k[i]);
                    }
                    let x: Vec<u32> = (0..n).map(|i| a.0[i] + g.0[i] - k[i]).collect();
                    let dd: Vec<u32> = (0..n).map(|i| b.0[i] - k[i] + d.0[i]).collect();
                    out.add_term(Monomial(x), Monomial(dd), &c * Rational::from_integer(f));
                    let mut i = 0;
                    loop {
                        if i == n {
                            break;
                        }
                        if k[i] < bound[i] {
                            k[i] += 1;
                            break;
                        }
                        k[i] = 0;
                        i += 1;
                    }
                    if i == n {
                        break;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[a, b] = ab − ba`.
    pub fn commutator(&self, other: &WeylOp) -> Result<WeylOp> {
        self.normal_product(other)?.try_sub(&other.normal_product(self)?)
    }

    pub fn pow(&self, e: u32) -> WeylOp {
        let mut out = WeylOp::one(self.vars.clone());
        for _ in 0..e {
            out = out.normal_product(self).expect("same variables");
        }
        out
    }

    /// Usual order `max |β|`; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|(_, b)| b.degree()).max()
    }

    /// Principal symbol as a polynomial in the dual variables, which must be
    /// free of `x`.
    pub fn constant_symbol(&self) -> Result<MultiPoly> {
        let ord = self.order().ok_or_else(|| Error::input("zero operator has no symbol"))?;
        let mut p = MultiPoly::zero(self.vars.clone());
        for ((a, b), c) in &self.terms {
            if b.degree() != ord {
                continue;
            }
            if a.degree() != 0 {
                return Err(Error::input("principal symbol depends on x"));
            }
            p = &p + &MultiPoly::monomial(self.vars.clone(), b.0.clone(), c.clone());
        }
        Ok(p)
    }

    /// Applies the operator to a polynomial.
    pub fn apply(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.vars() != &self.vars {
            return Err(Error::structural("operator and polynomial use different variables"));
        }
        let mut out = MultiPoly::zero(self.vars.clone());
        for ((a, b), c) in &self.terms {
            let mut g = f.clone();
            for (i, &e) in b.0.iter().enumerate() {
                for _ in 0..e {
                    g = g.derivative(i);
                }
            }
            let xa = MultiPoly::monomial(self.vars.clone(), a.0.clone(), c.clone());
            out = &out + &(&xa * &g);
        }
        Ok(out)
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((a, b), c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &e) in a.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{e}", self.vars[i])),
                }
            }
            for (i, &e) in b.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("D{}", self.vars[i])),
                    _ => factors.push(format!("D{}^{e}", self.vars[i])),
                }
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let body = if factors.is_empty() {
                fmt_rational(&mag)
            } else if mag.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", fmt_rational(&mag), factors.join("*"))
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Strictly positive weights `m_i`, one per coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(m: Vec<Rational>) -> Result<Self> {
        if let Some(w) = m.iter().find(|w| !w.is_positive()) {
            return Err(Error::input(format!("weight {} is not positive", fmt_rational(w))));
        }
        Ok(WeightVector(m))
    }

    pub fn uniform(n: usize) -> Self {
        WeightVector(vec![Rational::one(); n])
    }

    pub fn from_ints(m: &[i64]) -> Result<Self> {
        WeightVector::new(m.iter().map(|&w| Rational::from_integer(w.into())).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> Rational {
        self.0.iter().sum()
    }

    /// Integer weights divided by their gcd; rational weights are returned
    /// unchanged.
    pub fn normalized(&self) -> WeightVector {
        if self.0.iter().any(|w| !w.is_integer()) {
            return self.clone();
        }
        let g = self
            .0
            .iter()
            .fold(BigInt::zero(), |g, w| g.gcd(w.numer()));
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        let g = Rational::from_integer(g);
        WeightVector(self.0.iter().map(|w| w / &g).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `max ⟨m, β⟩ − ⟨m, α⟩` over the terms `x^α D^β`; `None` for zero.
pub fn v_order(op: &WeylOp, m: &WeightVector) -> Result<Option<Rational>> {
    if m.len() != op.nvars() {
        return Err(Error::structural("weight vector length differs from variable count"));
    }
    let dot = |e: &Monomial| -> Rational {
        e.0.iter()
            .zip(m.entries())
            .map(|(&k, w)| w * Rational::from_integer(k.into()))
            .sum()
    };
    Ok(op.terms.keys().map(|(a, b)| dot(b) - dot(a)).max())
}
