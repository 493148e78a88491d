use h2sym_core::exact::{grat, rational, verify_symbol_chain, verify_weight_product, Rational};
use h2sym_core::hardy::{composition_matrix, toeplitz_matrix, weighted_comp_matrix, Exactness};
use h2sym_core::moebius::{phi_psi_family, sigma_family};
use h2sym_core::{AnalyticWeight, Complex64, Moebius, SymbolParams};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

#[test]
fn affine_columns_are_binomial_expansions() {
    // column j of C_sigma holds (az + s)^j = sum_i C(j, i) a^i s^(j - i) z^i
    let a = c(0.4, -0.3);
    let b = c(0.2, 0.1);
    let p = SymbolParams::new(a, b).unwrap();
    let s = p.fixed_offset();
    let m = composition_matrix(&sigma_family(&p), 20).unwrap();
    for j in 0..20 {
        for i in 0..20 {
            let want = if i <= j {
                a.powu(i as u32) * s.powu((j - i) as u32) * binomial(j, i)
            } else {
                c(0.0, 0.0)
            };
            assert!((m.matrix()[(i, j)] - want).norm() < 1e-14, "({i}, {j})");
        }
    }
}

#[test]
fn weighted_operator_is_toeplitz_times_composition() {
    let p = SymbolParams::new(c(0.5, 0.2), c(0.3, -0.2)).unwrap();
    let (phi, psi) = phi_psi_family(&p);
    let n = 24;
    let w = weighted_comp_matrix(&psi, &phi, n).unwrap();
    // T_psi is lower triangular, so the compressed product is exact
    let product = toeplitz_matrix(&psi, n)
        .unwrap()
        .mul(&composition_matrix(&phi, n).unwrap())
        .unwrap();
    assert_eq!(product.exactness(), Exactness::ExactCompression);
    assert!(w.matrix().max_abs_diff(product.matrix()).unwrap() < 1e-14);
}

#[test]
fn constant_weight_scales() {
    let w = AnalyticWeight::constant(c(0.0, 2.0));
    let t = toeplitz_matrix(&w, 5).unwrap();
    for i in 0..5 {
        assert_eq!(t.matrix()[(i, i)], c(0.0, 2.0));
    }
}

fn unit_disk_point() -> impl Strategy<Value = Complex64> {
    (0.0..0.7f64, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #[test]
    fn composition_matrices_multiply_in_reverse(u in unit_disk_point(), v in unit_disk_point(),
                                               w in unit_disk_point()) {
        // symbols fixing 0 give lower-triangular compressions, so C_{f o g} = C_g C_f exactly
        let f = Moebius::new(u, c(0.0, 0.0), w * 0.3, c(1.0, 0.0)).unwrap();
        let g = Moebius::new(v, c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        prop_assume!(f.is_self_map().unwrap());
        let n = 16;
        let fg = f.compose(&g).unwrap();
        let lhs = composition_matrix(&fg, n).unwrap();
        let rhs = composition_matrix(&g, n).unwrap().mul(&composition_matrix(&f, n).unwrap()).unwrap();
        prop_assert!(lhs.matrix().max_abs_diff(rhs.matrix()).unwrap() < 1e-12);
    }

    #[test]
    fn exact_chain_holds_on_the_admissible_region(an in -9i64..=9, ai in -9i64..=9, bn in -9i64..=9, d in 10i64..=20) {
        let a = grat(rational(an, d), rational(ai, d));
        let b = grat(rational(bn, d), Rational::from_integer(0.into()));
        let p = SymbolParams::new(a, b);
        prop_assume!(p.is_ok());
        let p = p.unwrap();
        prop_assert!(verify_symbol_chain(&p).unwrap());
        prop_assert!(verify_weight_product(&p).unwrap());
    }

    #[test]
    fn admissibility_boundary(a in 0.0..0.99f64, b in 0.0..0.99f64) {
        // for negative a the constraint reads a + b(1 + a) <= 1
        prop_assume!((a + b * (1.0 + a) - 1.0).abs() > 1e-9);
        let p = SymbolParams::new(c(-a, 0.0), c(b, 0.0));
        prop_assert_eq!(p.is_err(), a + b * (1.0 + a) > 1.0);
    }
}
