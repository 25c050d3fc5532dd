mod common;

use std::collections::BTreeMap;

use lietame::exactalg::{int, rat, vars, MultiPoly};
use lietame::liealg::{chevalley_restrict, discriminant, hc_euler_shift, realize, InvariantPolynomial};
use lietame::orbits::{enumerate_orbits, Partition};
use lietame::rootsys::{build_root_system, weyl_degrees};
use lietame::strata::enumerate_strata;
use lietame::weylalg::{bfunction_certificate, falling_euler, v_order};
use lietame::{BKind, Limits, WeightVector, WeylOp};

#[test]
fn sl2_charpoly_by_cofactor() {
    let alg = realize("A1", &Limits::default()).unwrap();
    let c = common::charpoly_by_cofactor(&alg.ad_matrix());
    let strs: Vec<String> = c.iter().map(ToString::to_string).collect();
    assert_eq!(strs, ["1", "0", "-4*x^2 - 4*y*z", "0"]);
}

#[test]
fn sl3_restrictions_are_elementary_symmetric() {
    // coefficients of det(T - M) for the generic traceless matrix
    let lim = Limits::default();
    let alg = realize("A2", &lim).unwrap();
    let gm = alg.generic_matrix();
    let c = common::charpoly_by_cofactor(&gm);
    let h = vars(&["h1", "h2"]);
    let (h1, h2) = (MultiPoly::var(h.clone(), 0), MultiPoly::var(h.clone(), 1));
    let diag = [h1.clone(), &h2 - &h1, -h2.clone()];
    let e2 = &(&(&diag[0] * &diag[1]) + &(&diag[0] * &diag[2])) + &(&diag[1] * &diag[2]);
    let e3 = &(&diag[0] * &diag[1]) * &diag[2];
    // det(T - M) = T^3 - e1 T^2 + e2 T - e3 with e1 = 0
    let q2 = InvariantPolynomial::new(&alg, c[2].clone()).unwrap();
    let q3 = InvariantPolynomial::new(&alg, c[3].clone()).unwrap();
    let r2 = chevalley_restrict(&alg, &q2, &lim).unwrap();
    let r3 = chevalley_restrict(&alg, &q3, &lim).unwrap();
    assert_eq!(r2.vars().as_ref(), h.as_ref());
    assert_eq!(r2, e2);
    assert_eq!(r3, -e3);
}

#[test]
fn discriminant_degrees_and_shift() {
    let lim = Limits::default();
    for t in ["A1", "A2", "C2", "B2"] {
        let alg = realize(t, &lim).unwrap();
        let d = discriminant(&alg, &lim).unwrap();
        assert_eq!(rat(d.degree() as i64, 2), hc_euler_shift(&alg), "{t}");
    }
}

#[test]
fn regular_orbit_weights_are_twice_the_exponents() {
    for t in ["A1", "A2", "A3", "B2", "C2", "B3", "C3", "D4"] {
        let rs = build_root_system(t).unwrap();
        let degs = weyl_degrees(&rs, 100_000).unwrap();
        let mut want: Vec<u32> = degs.iter().map(|d| 2 * d - 2).collect();
        want.sort_unstable_by(|a, b| b.cmp(a));
        let orbits = enumerate_orbits(t).unwrap();
        let reg = orbits.iter().find(|o| o.is_regular()).unwrap();
        assert_eq!(reg.sl2_weights(), &want[..], "{t}");
        let zero = orbits.iter().find(|o| o.is_zero()).unwrap();
        assert!(zero.sl2_weights().iter().all(|&w| w == 0));
        assert_eq!(zero.codim(), rs.dim());
    }
}

#[test]
fn orbit_weights_match_characters_up_to_dim_30() {
    for t in ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "C2", "C3", "D4"] {
        let fam = t.chars().next().unwrap();
        for o in enumerate_orbits(t).unwrap() {
            let parts = o.factors()[0].1.parts().to_vec();
            assert_eq!(common::sl2_weights_by_character(fam, &parts), o.sl2_weights(), "{t} {o}");
        }
    }
}

#[test]
fn type_a_stratum_counts() {
    // count by direct enumeration: Levi subsystems of A_l up to conjugacy are
    // partitions of l + 1, with q_P of type Π A_{p_i − 1}
    for l in 1..=3u32 {
        let mut want = 0usize;
        for lambda in Partition::all(l + 1) {
            let factors: Vec<u32> = lambda.parts().iter().copied().filter(|&p| p > 1).collect();
            if factors.is_empty() {
                want += 1;
                continue;
            }
            want += factors.iter().map(|&p| Partition::all(p).len()).product::<usize>();
        }
        let got = enumerate_strata(&format!("A{l}"), &Limits::default()).unwrap().len();
        assert_eq!(got, want, "A{l}");
    }
}

#[test]
fn strata_weight_totals() {
    for t in ["A1", "A2", "A3", "B2", "C2"] {
        for s in enumerate_strata(t, &Limits::default()).unwrap() {
            if s.is_open() {
                continue;
            }
            assert_eq!(s.weights().total(), rat((s.m() + s.codim()) as i64, 2), "{t} {s}");
        }
    }
}

#[test]
fn theta_squared_expansion() {
    let v = vars(&["x1", "x2"]);
    let t = WeylOp::euler(v.clone());
    let tt = t.normal_product(&t).unwrap();
    // hand expansion: x1^2 D1^2 + 2 x1 x2 D1 D2 + x2^2 D2^2 + theta
    let mut want: BTreeMap<(Vec<u32>, Vec<u32>), i64> = BTreeMap::new();
    want.insert((vec![2, 0], vec![2, 0]), 1);
    want.insert((vec![1, 1], vec![1, 1]), 2);
    want.insert((vec![0, 2], vec![0, 2]), 1);
    want.insert((vec![1, 0], vec![1, 0]), 1);
    want.insert((vec![0, 1], vec![0, 1]), 1);
    let got: BTreeMap<(Vec<u32>, Vec<u32>), i64> = tt
        .terms()
        .map(|((a, b), c)| ((a.0.clone(), b.0.clone()), c.to_integer().try_into().unwrap()))
        .collect();
    assert_eq!(got, want);
}

#[test]
fn falling_euler_on_monomials() {
    let v = vars(&["x1", "x2", "x3"]);
    for big_n in 0..=4u32 {
        let op = falling_euler(v.clone(), big_n);
        for f in common::test_functions(&v, 5) {
            let d = f.total_degree().unwrap() as i64;
            let ff: i64 = (0..big_n as i64).map(|j| d - j).product();
            assert_eq!(common::act(&op, &f), f.scale(&int(ff)));
        }
    }
}

#[test]
fn certificates_hold() {
    let v = vars(&["x1", "x2"]);
    let d = |i| WeylOp::d(v.clone(), i);
    let systems = vec![
        vec![d(0).pow(2), d(1).pow(2)],
        vec![d(0).pow(2).try_add(&WeylOp::x(v.clone(), 1)).unwrap(), d(1).pow(2)],
        vec![d(0).pow(3).try_add(&d(1).pow(3)).unwrap(), d(0).normal_product(&d(1)).unwrap()],
    ];
    for ops in systems {
        let (b, cert) = bfunction_certificate(&ops).unwrap();
        let mut lhs = falling_euler(v.clone(), cert.degree).try_add(&cert.remainder).unwrap();
        for (a, p) in cert.multipliers.iter().zip(&ops) {
            lhs = lhs.try_sub(&a.normal_product(p).unwrap()).unwrap();
        }
        assert!(lhs.is_zero());
        let sum_deg: u32 = ops.iter().map(|o| o.order().unwrap()).sum();
        assert_eq!(b.degree() as u32, sum_deg - 1);
        if let Some(o) = v_order(&cert.remainder, &WeightVector::uniform(2)).unwrap() {
            assert!(o < int(0));
        } else {
            assert_eq!(b.kind(), BKind::Monodromic);
        }
    }
}
