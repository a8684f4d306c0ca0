//! Property and invariant suites: exact field axioms, truncated-power and
//! integration identities, the generating-function identity behind the
//! polynomials, solver residuals, and closed-form consistency checks.

mod common;

use adomian::reference::{closed_form, taylor_series};
use adomian::solver::{solve, ODEProblem};
use adomian::{AdomianPolynomial, HPReal, Rational, TimePolynomial};
use common::{bisect_blow_up, hp, random_problem, rat};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-1_000_000i64..=1_000_000, 1i64..=1_000_000)
        .prop_map(|(n, d)| Rational::new(n.into(), d.into()).unwrap())
}

fn poly_strategy(max_degree: usize) -> impl Strategy<Value = TimePolynomial> {
    prop::collection::vec((-50i64..=50, 1i64..=6), 0..=max_degree + 1).prop_map(|coeffs| {
        TimePolynomial::from_coeffs(
            coeffs
                .into_iter()
                .map(|(n, d)| Rational::new(n.into(), d.into()).unwrap())
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_field_axioms(a in rational_strategy(), b in rational_strategy(), c in rational_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), Rational::zero());
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn differentiation_inverts_integration(p in poly_strategy(20)) {
        prop_assert_eq!(p.integrate().differentiate(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn pow_trunc_matches_full_power(p in poly_strategy(5), eta in 0u32..=5, n in 0usize..=12) {
        let full = p.pow_trunc(eta, 60); // degree bound 5 * 5 = 25, no truncation
        let truncated = TimePolynomial::from_coeffs(
            (0..=n).map(|k| full.coeff(k)).collect(),
        );
        prop_assert_eq!(p.pow_trunc(eta, n), truncated);
    }
}

#[test]
fn exp_product_with_negated_argument_is_one() {
    for digits in [10u32, 25, 50] {
        for x in ["-2", "-1", "-0.39", "0.5", "3"] {
            let v = HPReal::from_decimal_str(x, digits).unwrap();
            let product = &v.exp() * &(-&v).exp();
            let deviation = (&product - &HPReal::one(digits)).abs();
            let bound =
                HPReal::from_decimal_str(&format!("1e{}", 2 - digits as i64), digits).unwrap();
            assert!(
                deviation < bound,
                "exp({x})*exp(-{x}) off by {deviation:?} at {digits} digits"
            );
        }
    }
}

// ---------------------------------------------------------------------------
// generating-function identity: sum_n A_n(u) L^n = (sum_k u_k L^k)^eta mod L^(N+1)
// ---------------------------------------------------------------------------

fn eval_adomian(poly: &AdomianPolynomial, values: &[i64]) -> BigInt {
    poly.terms()
        .iter()
        .map(|term| {
            let mut product = BigInt::from(term.coefficient().clone());
            for (&k, &e) in term.exponents() {
                product *= BigInt::from(values[k as usize]).pow(e);
            }
            product
        })
        .sum()
}

fn int_poly_eval(coeffs: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    coeffs
        .iter()
        .rev()
        .fold(BigInt::from(0), |acc, c| acc * &x + c)
}

#[test]
fn generating_function_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for eta in 2u32..=5 {
        let polys: Vec<AdomianPolynomial> = (0..=10)
            .map(|n| AdomianPolynomial::generate(eta, n))
            .collect();
        for trunc in 0usize..=10 {
            for _ in 0..20 {
                let values: Vec<i64> = (0..=trunc)
                    .map(|_| rand::Rng::gen_range(&mut rng, -9..=9))
                    .collect();
                // left side: the polynomial values as lambda coefficients
                let lhs: Vec<BigInt> = (0..=trunc)
                    .map(|n| eval_adomian(&polys[n], &values))
                    .collect();
                // right side: eta-th convolution power of the value series, truncated
                let mut rhs = vec![BigInt::from(0); trunc + 1];
                rhs[0] = BigInt::from(1);
                for _ in 0..eta {
                    let mut next = vec![BigInt::from(0); trunc + 1];
                    for i in 0..=trunc {
                        if rhs[i] == BigInt::from(0) {
                            continue;
                        }
                        for (j, v) in values.iter().enumerate().take(trunc + 1 - i) {
                            next[i + j] += &rhs[i] * BigInt::from(*v);
                        }
                    }
                    rhs = next;
                }
                for lambda in [-2i64, -1, 1, 2, 3] {
                    assert_eq!(
                        int_poly_eval(&lhs, lambda),
                        int_poly_eval(&rhs, lambda),
                        "eta={eta} trunc={trunc} lambda={lambda} values={values:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn every_generated_term_satisfies_degree_and_weight() {
    for eta in 0u32..=6 {
        for n in 0u32..=12 {
            let poly = AdomianPolynomial::generate(eta, n);
            for term in poly.terms() {
                assert_eq!(term.total_degree(), eta, "eta={eta} n={n} term={term}");
                assert_eq!(term.weight(), n, "eta={eta} n={n} term={term}");
            }
        }
    }
}

#[test]
fn linear_nonlinearity_reduces_to_components() {
    for n in 0u32..=12 {
        let poly = AdomianPolynomial::generate(1, n);
        assert_eq!(poly.terms().len(), 1);
        assert_eq!(poly.render(adomian::RenderFormat::Plain), format!("u{n}"));
    }
}

// ---------------------------------------------------------------------------
// solver invariants
// ---------------------------------------------------------------------------

/// d/dt(PS) - c PS - b [PS^eta]_(m-1) - f must vanish through degree m - 1.
fn assert_residual_vanishes(problem: &ODEProblem, order: usize) {
    let solution = solve(problem, order);
    for m in [order / 2, order] {
        if m == 0 {
            continue;
        }
        let ps = solution.partial_sum(m).unwrap();
        let nonlinear = ps.pow_trunc(problem.eta, m - 1).scale(&problem.b);
        let residual =
            &(&ps.differentiate() - &ps.scale(&problem.c)) - &(&nonlinear + &problem.forcing);
        for k in 0..m {
            assert!(
                residual.coeff(k).is_zero(),
                "residual at degree {k} nonzero for m={m}: {}",
                residual.coeff(k)
            );
        }
    }
}

#[test]
fn residual_vanishes_for_presets_and_random_problems() {
    assert_residual_vanishes(&ODEProblem::problem1(), 11);
    assert_residual_vanishes(&ODEProblem::problem2(), 11);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        assert_residual_vanishes(&random_problem(&mut rng), 8);
    }
}

#[test]
fn unforced_components_are_monomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut problems = vec![ODEProblem::problem1(), ODEProblem::problem2()];
    problems.extend((0..8).map(|_| random_problem(&mut rng)));
    for problem in problems {
        let solution = solve(&problem, 10);
        for (n, component) in solution.components().iter().enumerate() {
            let nonzero: Vec<usize> = (0..=n).filter(|&k| !component.coeff(k).is_zero()).collect();
            match component.degree() {
                None => {} // identically zero component
                Some(d) => {
                    assert_eq!(d, n, "component {n} has degree {d}");
                    assert_eq!(nonzero, vec![n], "component {n} not a monomial");
                }
            }
        }
    }
}

#[test]
fn zero_nonlinearity_gives_exponential_series() {
    let problem = ODEProblem::new(rat("1"), rat("0"), 3, rat("1"), TimePolynomial::zero());
    let sum = solve(&problem, 10).partial_sum(10).unwrap();
    let mut factorial = Rational::one();
    for k in 0..=10usize {
        if k > 0 {
            factorial = factorial * Rational::from_integer(k as i64);
        }
        assert_eq!(sum.coeff(k), Rational::one() / factorial.clone(), "1/{k}!");
    }
}

// ---------------------------------------------------------------------------
// closed-form invariants
// ---------------------------------------------------------------------------

#[test]
fn closed_form_consistent_at_origin() {
    let digits = 50u32;
    let bound = hp("1e-45");
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut problems = vec![ODEProblem::problem1(), ODEProblem::problem2()];
    problems.extend((0..10).map(|_| random_problem(&mut rng)));
    for problem in problems {
        if problem.u0.is_zero() || (problem.b.is_zero() && problem.c.is_zero()) {
            continue;
        }
        let cf = closed_form(&problem).unwrap();
        let at_zero = cf.eval(&HPReal::zero(digits), digits).unwrap();
        let u0 = HPReal::from_rational(&problem.u0, digits);
        assert!(
            (&at_zero - &u0).abs() < bound,
            "u(0) = {at_zero:?} but u0 = {u0:?}"
        );
    }
}

#[test]
fn closed_form_satisfies_ode_by_finite_differences() {
    let digits = 50u32;
    let h = hp("1e-6");
    let two_h = &h + &h;
    for problem in [ODEProblem::problem1(), ODEProblem::problem2()] {
        let cf = closed_form(&problem).unwrap();
        let c = HPReal::from_rational(&problem.c, digits);
        let b = HPReal::from_rational(&problem.b, digits);
        let eta = problem.eta;
        for t in ["-0.1", "-0.05", "0.05", "0.1"] {
            let t = hp(t);
            let u = cf.eval(&t, digits).unwrap();
            let rhs = &(&c * &u) + &(&b * &u.powi(eta));
            let fd = &(&cf.eval(&(&t + &h), digits).unwrap()
                - &cf.eval(&(&t - &h), digits).unwrap())
                / &two_h;
            // scale from the analytic third derivative:
            // u'' = (c + eta b u^(eta-1)) u',  u''' = eta (eta-1) b u^(eta-2) u'^2 + (...) u''
            let damp = &c + &(&(&b * &HPReal::from_integer(eta as i64, digits)) * &u.powi(eta - 1));
            let u2 = &damp * &rhs;
            let u3 = &(&(&(&b * &HPReal::from_integer((eta * (eta - 1)) as i64, digits))
                * &u.powi(eta - 2))
                * &(&rhs * &rhs))
                + &(&damp * &u2);
            let scale = u3.abs().max(HPReal::from_integer(6, digits));
            let bound = &(&(&h * &h) * &scale) / &HPReal::from_decimal_str("0.6", digits).unwrap();
            let deviation = (&fd - &rhs).abs();
            assert!(
                deviation < bound,
                "FD deviates by {deviation:?} (bound {bound:?}) at t={t:?}"
            );
        }
    }
}

#[test]
fn truncation_error_shrinks_with_order() {
    for problem in [ODEProblem::problem1(), ODEProblem::problem2()] {
        let cf = closed_form(&problem).unwrap();
        let high = taylor_series(&problem, 11);
        let low = taylor_series(&problem, 5);
        for t in ["0.10", "-0.10"] {
            let t = hp(t);
            let exact = cf.eval(&t, 50).unwrap();
            let err_high = (&high.eval_hp(&t, 50) - &exact).abs();
            let err_low = (&low.eval_hp(&t, 50) - &exact).abs();
            assert!(
                err_high < err_low,
                "order 11 error {err_high:?} not below order 5 error {err_low:?} at {t:?}"
            );
        }
    }
}

#[test]
fn blow_up_agrees_with_bisection() {
    for problem in [ODEProblem::problem1(), ODEProblem::problem2()] {
        let cf = closed_form(&problem).unwrap();
        let closed = cf.blow_up_time(50).unwrap();
        let bisected = bisect_blow_up(&cf, 50, 140).unwrap();
        assert!(
            (&closed - &bisected).abs() < hp("1e-12"),
            "closed {closed:?} vs bisection {bisected:?}"
        );
    }
    // no positive root: pure decay (b = 0) never blows up
    let calm = ODEProblem::new(rat("1"), rat("0"), 2, rat("1"), TimePolynomial::zero());
    let cf = closed_form(&calm).unwrap();
    assert_eq!(cf.blow_up_time(30), None);
    assert_eq!(bisect_blow_up(&cf, 30, 60), None);
}
