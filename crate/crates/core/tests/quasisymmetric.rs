use std::collections::BTreeMap;

use macpoly::nonattacking::{j_compact, schur_oracle};
use macpoly::quasisymmetric::*;
use macpoly::shapes::{strong_compositions, weak_compositions, Composition, Partition};
use macpoly::{Error, MPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn composition(s: &str) -> Composition {
    s.parse().unwrap()
}

fn x(n: usize, i: usize) -> MPoly {
    MPoly::x(n, i)
}

fn e1(n: usize) -> MPoly {
    (1..=n).fold(MPoly::zero(n), |acc, i| acc + x(n, i))
}

/// Sum of all monomials of degree `d` in `n` variables.
fn complete_homogeneous(d: usize, n: usize) -> MPoly {
    let mut out = MPoly::zero(n);
    for a in weak_compositions(d, n) {
        let e: Vec<u32> = a.parts().iter().map(|&p| p as u32).collect();
        out += &MPoly::monomial(n, &e, 0, 0, 1);
    }
    out
}

/// `π̄_i f = ∂_i(x_i f) − f`.
fn pi_bar(f: &MPoly, i: usize) -> MPoly {
    (x(f.nvars(), i) * f).divided_difference(i).unwrap() - f
}

/// Demazure atoms by recursion from `x^α` at weakly decreasing `α`.
fn atom_oracle(alpha: &[usize]) -> MPoly {
    let n = alpha.len();
    match (1..n).find(|&i| alpha[i - 1] < alpha[i]) {
        None => {
            let e: Vec<u32> = alpha.iter().map(|&p| p as u32).collect();
            MPoly::monomial(n, &e, 0, 0, 1)
        }
        Some(i) => {
            let mut swapped = alpha.to_vec();
            swapped.swap(i - 1, i);
            pi_bar(&atom_oracle(&swapped), i)
        }
    }
}

fn poly3() -> impl Strategy<Value = MPoly> {
    let term = (prop::collection::vec(0u32..3, 5), -4i64..=4);
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        let mut p = MPoly::zero(3);
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    })
}

proptest! {
    #[test]
    fn hecke_satisfies_the_quadratic_relation(p in poly3(), i in 1usize..3) {
        let t = MPoly::t(3);
        let tp = hecke_t(&p, i).unwrap();
        let ttp = hecke_t(&tp, i).unwrap();
        let rhs = (&t - &MPoly::one(3)) * &tp + &t * &p;
        prop_assert_eq!(ttp, rhs);
    }

    #[test]
    fn expansions_round_trip(
        keys in prop::collection::vec((prop::collection::vec(1usize..3, 1..4), -3i64..=3, 0u32..2), 0..4)
    ) {
        let n = 3;
        let mut coeffs: BTreeMap<Composition, MPoly> = BTreeMap::new();
        for (parts, c, te) in keys {
            let term = MPoly::monomial(0, &[], 0, te, c);
            *coeffs.entry(Composition::new(parts)).or_insert_with(|| MPoly::zero(0)) += &term;
        }
        let mut p = MPoly::zero(n);
        for (gamma, c) in &coeffs {
            for a in weak_compositions(gamma.size(), n) {
                if a.plus() == *gamma {
                    let e: Vec<u32> = a.parts().iter().map(|&v| v as u32).chain([0, 0]).collect();
                    p += &c.with_nvars(n).unwrap().shift(&e);
                }
            }
        }
        let ex = qsym_expand(&p).unwrap();
        prop_assert_eq!(ex.to_polynomial(n).unwrap(), p.clone());
        for (gamma, c) in &coeffs {
            if gamma.len() <= n && !c.is_zero() {
                prop_assert_eq!(ex.coeff(gamma), Some(c));
            }
        }
    }
}

#[test]
fn hecke_fixes_symmetric_polynomials_up_to_t() {
    let n = 3;
    let p = e1(n) * e1(n) + MPoly::q(n);
    for i in 1..n {
        assert_eq!(hecke_t(&p, i).unwrap(), MPoly::t(n) * &p);
    }
    assert!(matches!(hecke_t(&p, 3), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn hecke_on_a_single_variable() {
    let n = 2;
    assert_eq!(hecke_t(&x(n, 1), 1).unwrap(), x(n, 2));
    assert_eq!(
        hecke_t(&x(n, 2), 1).unwrap(),
        MPoly::t(n) * (x(n, 1) + x(n, 2)) - x(n, 2)
    );
}

#[test]
fn expansion_examples() {
    let ex = qsym_expand(&e1(3)).unwrap();
    assert_eq!(ex.degree(), Some(1));
    assert_eq!(ex.coeffs().len(), 1);
    assert_eq!(ex.coeff(&composition("1")), Some(&MPoly::one(0)));

    let p = x(3, 1).pow(2) * x(3, 2) + x(3, 1).pow(2) * x(3, 3) + x(3, 2).pow(2) * x(3, 3);
    let ex = qsym_expand(&p).unwrap();
    assert_eq!(ex.coeffs().keys().collect::<Vec<_>>(), vec![&composition("2,1")]);
    assert_eq!(ex.to_polynomial(3).unwrap(), p);

    let mixed = MPoly::one(2) + e1(2);
    assert_eq!(qsym_expand(&mixed).unwrap().degree(), None);
    let zero = qsym_expand(&MPoly::zero(2)).unwrap();
    assert_eq!(zero.degree(), None);
    assert!(zero.coeffs().is_empty());
}

#[test]
fn non_quasisymmetric_input_reports_a_witness() {
    let err = qsym_expand(&x(3, 1)).unwrap_err();
    assert_eq!(
        err,
        Error::NotQuasisymmetric {
            left: vec![1, 0, 0],
            right: vec![0, 1, 0],
        }
    );
    // Symmetric placements with unequal coefficients are also rejected.
    let p = x(2, 1) * MPoly::t(2) + x(2, 2);
    assert!(qsym_expand(&p).is_err());
}

#[test]
fn expansion_json() {
    let ex = qsym_expand(&(e1(2) * MPoly::t(2))).unwrap();
    let json = serde_json::to_string(&ex).unwrap();
    assert_eq!(
        json,
        r#"{"degree":1,"coeffs":{"1":{"nvars":0,"terms":[{"x":[],"q":0,"t":1,"c":"1"}]}}}"#
    );
    assert_eq!(serde_json::from_str::<QSymExpansion>(&json).unwrap(), ex);
    let zero_key = r#"{"degree":1,"coeffs":{"0,1":{"nvars":0,"terms":[]}}}"#;
    assert!(serde_json::from_str::<QSymExpansion>(zero_key).is_err());
    let x_coeff = r#"{"degree":1,"coeffs":{"1":{"nvars":1,"terms":[{"x":[1],"q":0,"t":0,"c":"1"}]}}}"#;
    assert!(serde_json::from_str::<QSymExpansion>(x_coeff).is_err());
}

#[test]
fn g_small_cases() {
    let g = g_integral(&composition("1"), 2).unwrap();
    assert_eq!(g, (MPoly::one(2) - MPoly::t(2)) * e1(2));
    for n in 1..=4 {
        assert!(g_poly(&composition("1"), n).unwrap().equals_poly(&e1(n)));
        assert_eq!(g_integral(&composition(""), n).unwrap(), MPoly::one(n));
    }
    assert!(matches!(
        g_integral(&composition("1,1,1"), 2),
        Err(Error::TooFewVariables { needed: 3, nvars: 2 })
    ));
    assert!(qs_gamma(&composition("2,1"), 1).is_err());
}

#[test]
fn g_sums_to_j_with_extra_variables() {
    let n = 4;
    for m in 1..=3 {
        for lam in Partition::all(m) {
            let mut sum = MPoly::zero(n);
            for gamma in strong_compositions(m) {
                if gamma.dec().parts() == lam.parts() {
                    let g = g_integral(&gamma, n).unwrap();
                    qsym_expand(&g).unwrap();
                    sum += &g;
                }
            }
            assert_eq!(sum, j_compact(&lam, n).unwrap(), "{lam}");
        }
    }
}

#[test]
fn one_row_and_one_column_quasisymmetric_schur() {
    for n in 1..=4 {
        for k in 1..=3 {
            assert_eq!(
                qs_gamma(&Composition::new(vec![k]), n).unwrap(),
                complete_homogeneous(k, n)
            );
            if k <= n {
                let ek = schur_oracle(&Partition::new(vec![1; k]).unwrap(), n);
                assert_eq!(qs_gamma(&Composition::new(vec![1; k]), n).unwrap(), ek);
            }
        }
    }
}

#[test]
fn quasisymmetric_schur_expands_with_nonnegative_coefficients() {
    for m in 1..=4 {
        for gamma in strong_compositions(m) {
            let qs = qs_gamma(&gamma, 4).unwrap();
            let ex = qsym_expand(&qs).unwrap();
            assert_eq!(ex.degree(), Some(m as u32));
            assert!(qs.terms().all(|(_, c)| *c > BigInt::from(0)), "{gamma}");
        }
    }
}

#[test]
fn atoms_at_t_zero_match_divided_differences() {
    for n in 1..=3 {
        for m in 0..=4 {
            for alpha in weak_compositions(m, n) {
                let atom = demazure_t_atom(&alpha, n).unwrap().at_qt(None, Some(0));
                assert_eq!(atom, atom_oracle(alpha.parts()), "{alpha}");
            }
        }
    }
    assert_eq!(demazure_t_atom(&composition("1,0"), 2).unwrap(), x(2, 1));
}
