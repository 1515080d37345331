use std::f64::consts::{E, PI};

use num_traits::Zero;
use proptest::prelude::*;

use pade_roots::lambert::{series_coefficient_closed, series_coefficients, w_eval, w_oracle};
use pade_roots::physics::diffraction::relative_intensity;
use pade_roots::physics::{spring_xi, wien_x0, WienMethod};
use pade_roots::series::lagrange_invert;
use pade_roots::trig::{phi_pade, PhiSign};
use pade_roots::{ratio, PadeApproximant, Rational, RationalSeries, TrigEquation, WBranch, WVariant};

fn series(v: &[(i64, i64)]) -> RationalSeries {
    RationalSeries::new(v.iter().map(|&(n, d)| ratio(n, d)).collect())
}

prop_compose! {
    fn small_rationals(len: std::ops::RangeInclusive<usize>)
        (v in prop::collection::vec((-9i64..=9, 1i64..=6), len)) -> Vec<(i64, i64)> { v }
}

prop_compose! {
    fn unit_series(len: std::ops::RangeInclusive<usize>)
        (lead in (1i64..=5, 1i64..=4), rest in small_rationals(len)) -> RationalSeries {
        let mut v = vec![lead];
        v.extend(rest);
        series(&v)
    }
}

fn naive_power_coeff(f: &[Rational], n: usize, k: usize) -> Rational {
    let mut acc = vec![ratio(1, 1)];
    for _ in 0..n {
        let mut next = vec![Rational::zero(); acc.len() + f.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc.get(k).cloned().unwrap_or_else(Rational::zero)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pade_fit_satisfies_order_condition(f in unit_series(6..=6), p in 0usize..=3, q in 0usize..=3) {
        if let Ok(r) = PadeApproximant::fit(&f, p, q) {
            prop_assert_eq!(r.expand(p + q), f.truncate(p + q));
        }
    }

    #[test]
    fn reversion_inverts_the_map(f in unit_series(5..=5), n in 1usize..=6) {
        let z = lagrange_invert(&f, n).unwrap();
        let fz = f.compose(&z).unwrap();
        let w = z.div(&fz).unwrap();
        let order = w.order();
        prop_assert_eq!(w, RationalSeries::identity(order));
    }

    #[test]
    fn reversion_matches_naive_powers(f in unit_series(7..=7), n in 1usize..=8) {
        let z = lagrange_invert(&f, n).unwrap();
        for m in 1..=n {
            let want = naive_power_coeff(f.coeffs(), m, m - 1) / ratio(m as i64, 1);
            prop_assert_eq!(z.coeff(m), want);
        }
    }

    #[test]
    fn division_undoes_multiplication(a in small_rationals(5..=5), b in unit_series(4..=4)) {
        let a = series(&a);
        let prod = a.mul(&b);
        prop_assert_eq!(prod.div(&b).unwrap(), a.truncate(4));
        let quot = a.div(&b).unwrap();
        prop_assert_eq!(quot.mul(&b), a.truncate(4));
    }

    #[test]
    fn closed_form_is_the_phi_pade(num in 1i64..=40, den in 1i64..=12, n in 1usize..=30, tan in any::<bool>()) {
        let k = ratio(num, den);
        let kf = num as f64 / den as f64;
        let (eq, sign) = if tan {
            (TrigEquation::tan(kf), PhiSign::Minus)
        } else {
            (TrigEquation::cot(kf), PhiSign::Plus)
        };
        let a = eq.anchor(n);
        let via_pade = a * phi_pade(sign, &k).unwrap().eval(1.0 / a).unwrap();
        let closed = eq.root_closed_form(n).unwrap().value;
        prop_assert!(((via_pade - closed) / closed).abs() <= 1e-13);
    }
}

proptest! {
    #[test]
    fn oracle_roots_lie_in_brackets(k in prop_oneof![0.01f64..20.0, -3.0f64..-0.01], n in 1usize..=50, tan in any::<bool>()) {
        let eq = if tan { TrigEquation::tan(k) } else { TrigEquation::cot(k) };
        let x = eq.root_oracle(n).unwrap().value;
        let (lo, hi) = eq.bracket(n).unwrap().unwrap();
        prop_assert!(lo < x && x < hi);
        prop_assert!(eq.residual(x).abs() <= 1e-12 * (1.0 + k.abs() * x));
    }

    #[test]
    fn first_cot_root_in_quarter_period(k in 1e-3f64..1e3) {
        let eq = TrigEquation::cot(k);
        let x = eq.root_oracle(0).unwrap().value;
        prop_assert!(x > 0.0 && x < PI / 2.0);
        prop_assert!(eq.residual(x).abs() <= 1e-12 * (1.0 + k * x));
    }

    #[test]
    fn lambert_branches_are_ordered(t in 1e-9f64..1.0) {
        let x = -t / E;
        let w0 = w_oracle(x, WBranch::W0).unwrap();
        let wm1 = w_oracle(x, WBranch::Wm1).unwrap();
        prop_assert!(wm1 <= -1.0 && (-1.0..0.0).contains(&w0));
    }

    #[test]
    fn lambert_residual_principal(x in -1.0 / E..1e3) {
        let w = w_oracle(x, WBranch::W0).unwrap();
        prop_assert!((w * w.exp() - x).abs() <= 1e-14 * x.abs().max(1.0));
    }

    #[test]
    fn lambert_residual_lower(e in -300.0f64..(1.0 / E).log10()) {
        let x = -(10f64.powf(e));
        let w = w_oracle(x, WBranch::Wm1).unwrap();
        prop_assert!((w * w.exp() - x).abs() <= 1e-14 * x.abs().max(1.0));
    }

    #[test]
    fn truncated_series_matches_exact_coefficients(x in -0.3f64..0.3, n in 1usize..=8) {
        let s = series_coefficients(n).unwrap();
        let direct: f64 = (1..=n).map(|k| {
            let c = series_coefficient_closed(k as u32);
            prop_assert_eq!(&s.coeff(k), &c);
            Ok(pade_roots::Scalar::to_float::<f64>(&c) * x.powi(k as i32))
        }).sum::<Result<f64, TestCaseError>>()?;
        let via = w_eval(x, WVariant::Taylor(n)).unwrap();
        prop_assert!((via - direct).abs() <= 1e-14);
    }

    #[test]
    fn spring_xi_decreasing_and_bounded(a in -6.0f64..6.0, b in -6.0f64..6.0) {
        prop_assume!((a - b).abs() > 1e-3);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let x_lo = spring_xi(10f64.powf(lo)).unwrap();
        let x_hi = spring_xi(10f64.powf(hi)).unwrap();
        prop_assert!(x_hi < x_lo);
        for x in [x_lo, x_hi] {
            prop_assert!((1.0 / 3.0..=4.0 / (PI * PI)).contains(&x));
        }
    }
}

#[test]
fn kappa_one_reduces_to_simple_forms() {
    let tan = TrigEquation::<f64>::tan(1.0);
    let cot = TrigEquation::<f64>::cot(1.0);
    for n in 1..=1000 {
        let a = tan.anchor(n);
        let want = a * (3.0 * a * a - 5.0) / (3.0 * a * a - 2.0);
        let got = tan.root_closed_form(n).unwrap().value;
        assert!(((got - want) / want).abs() <= 1e-14, "tan n={n}");
        let b = cot.anchor(n);
        let want = b * (3.0 * b * b + 7.0) / (3.0 * b * b + 4.0);
        let got = cot.root_closed_form(n).unwrap().value;
        assert!(((got - want) / want).abs() <= 1e-14, "cot n={n}");
    }
}

#[test]
fn table_errors_shrink_with_branch() {
    for eq in [TrigEquation::<f64>::tan(1.0), TrigEquation::cot(1.0)] {
        let rows = eq.error_table(10).unwrap();
        for w in rows.windows(2) {
            assert!(w[1].err_pade.abs() < w[0].err_pade.abs());
            assert!(w[1].err_frankel.unwrap().abs() < w[0].err_frankel.unwrap().abs());
            assert!(w[1].err_taylor.abs() < w[0].err_taylor.abs());
        }
    }
}

#[test]
fn table_error_signs() {
    for row in TrigEquation::<f64>::tan(1.0).error_table(10).unwrap() {
        assert!(row.err_pade > 0.0 && row.err_frankel.unwrap() > 0.0 && row.err_taylor > 0.0);
    }
    for row in TrigEquation::<f64>::cot(1.0).error_table(10).unwrap() {
        assert!(row.err_pade < 0.0 && row.err_frankel.unwrap() < 0.0 && row.err_taylor < 0.0);
    }
}

#[test]
fn high_branches_approach_anchor() {
    for eq in [TrigEquation::<f64>::tan(1.0), TrigEquation::cot(1.0)] {
        let x = eq.root_oracle(100).unwrap().value;
        assert!((x / eq.anchor(100) - 1.0).abs() < 1e-3);
        let closed = eq.root_closed_form(100).unwrap().value;
        assert!(((closed - x) / x).abs() < 1e-12);
    }
}

#[test]
fn type_two_beats_type_one() {
    for i in 1..=20 {
        let x = 0.05 * i as f64;
        let exact = w_oracle(x, WBranch::W0).unwrap();
        let e1 = (w_eval(x, WVariant::PadeI).unwrap() - exact).abs();
        let e2 = (w_eval(x, WVariant::PadeII).unwrap() - exact).abs();
        assert!(e2 <= e1, "x = {x}");
    }
}

#[test]
fn diffraction_maxima_interlace_zeros() {
    let tan = TrigEquation::<f64>::tan(1.0);
    let mut prev = f64::INFINITY;
    for n in 1..=20 {
        let u = tan.root_oracle(n).unwrap().value;
        assert!(n as f64 * PI < u && u < (n as f64 + 0.5) * PI);
        let i = relative_intensity(u);
        assert!(i < prev);
        assert!(relative_intensity(u - 1e-4) < i && relative_intensity(u + 1e-4) < i);
        prev = i;
    }
}

#[test]
fn wien_methods_agree() {
    let methods = [
        (WienMethod::LambertOracle, 1e-12),
        (WienMethod::PadeII, 1e-10),
        (WienMethod::PadeIIRounded, 1e-4),
        (WienMethod::Contour(128), 1e-12),
    ];
    let reference = wien_x0(WienMethod::LambertOracle).unwrap();
    for (m, tol) in methods {
        let x = wien_x0(m).unwrap();
        assert!(((x - reference) / reference).abs() <= tol, "{m}");
    }
}
