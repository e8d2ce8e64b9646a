use std::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

use gemwit_core::gem_fields::{
    electric_like_field, electric_like_field_newtonian, force_ratio, lorentz_force,
    magnetic_like_field_line, MassBody,
};
use gemwit_core::quantities::{gem_constants, Constants, ConventionName, Dimension, Quantity};
use gemwit_core::sagnac::{joint_state, rotor_particle_entanglement, SagnacScenario};
use gemwit_core::uncertainty::{
    christoffel_product_bound, christoffel_product_bound_constants, christoffel_uncertainty,
    em_product_bound, gem_product_bound, metric_uncertainty,
};
use gemwit_core::witness::{
    classical_baseline, entangling_phase, phase_state_negativity, reduced_state, witness_point,
    ClassicalDrive, FieldMode, EQUAL_WEIGHTS,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn k() -> Constants {
    Constants::codata2018()
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a / b - 1.0).abs()
    }
}

fn dimension() -> impl Strategy<Value = Dimension> {
    prop::array::uniform7(-6i8..=6).prop_map(Dimension::from_halves)
}

fn magnitude() -> impl Strategy<Value = f64> {
    (-20.0f64..20.0, prop::bool::ANY).prop_map(|(e, neg)| {
        let x = 10f64.powf(e);
        if neg {
            -x
        } else {
            x
        }
    })
}

fn length() -> impl Strategy<Value = f64> {
    (-20.0f64..0.0).prop_map(|e| 10f64.powf(e))
}

fn conventions() -> impl Strategy<Value = ConventionName> {
    prop_oneof![Just(ConventionName::PaperLiteral), Just(ConventionName::MaxwellConsistent)]
}

proptest! {
    #[test]
    fn product_then_quotient_restores(a in magnitude(), da in dimension(), b in magnitude(), db in dimension()) {
        let qa = Quantity::scalar(a, da);
        let qb = Quantity::scalar(b, db);
        let back = qa.mul(&qb).unwrap().div(&qb).unwrap();
        prop_assert_eq!(back.dim(), da);
        prop_assert!(rel(back.as_scalar().unwrap(), a) < 1e-12);
    }

    #[test]
    fn serde_round_trip_is_bit_exact(v in prop::array::uniform3(any::<f64>().prop_filter("finite", |x| x.is_finite())), d in dimension(), vector in any::<bool>()) {
        let q = if vector { Quantity::vector(v, d) } else { Quantity::scalar(v[0], d) };
        let text = serde_json::to_string(&q).unwrap();
        let back: Quantity = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.dim(), q.dim());
        match (q.value(), back.value()) {
            (gemwit_core::quantities::Value::Scalar(x), gemwit_core::quantities::Value::Scalar(y)) => prop_assert_eq!(x.to_bits(), y.to_bits()),
            (gemwit_core::quantities::Value::Vector(x), gemwit_core::quantities::Value::Vector(y)) => {
                for i in 0..3 { prop_assert_eq!(x[i].to_bits(), y[i].to_bits()); }
            }
            _ => prop_assert!(false, "shape changed"),
        }
    }

    #[test]
    fn electric_field_scaling(m in 1e-20f64..1e3, r in length(), s in 0.1f64..10.0, name in conventions()) {
        let conv = gem_constants(&k(), name);
        let kg = |x| Quantity::scalar(x, Dimension::MASS);
        let len = |x| Quantity::scalar(x, Dimension::LENGTH);
        let e = electric_like_field(&kg(m), &len(r), &conv).unwrap();
        prop_assert_eq!(e.dim(), Dimension::ACCELERATION);
        let e_m = electric_like_field(&kg(m * s), &len(r), &conv).unwrap();
        let e_r = electric_like_field(&kg(m), &len(r * s), &conv).unwrap();
        let e0 = e.as_scalar().unwrap();
        prop_assert!(rel(e_m.as_scalar().unwrap(), s * e0) < 1e-12);
        prop_assert!(rel(e_r.as_scalar().unwrap(), e0 / (s * s)) < 1e-12);
        let newt = electric_like_field_newtonian(&kg(m), &len(r), &conv).unwrap().as_scalar().unwrap();
        prop_assert!(rel(e0, 4.0 * PI * newt) < 1e-14);
    }

    #[test]
    fn line_field_scaling(i in 1e-10f64..1e10, r in length(), s in 0.1f64..10.0, name in conventions()) {
        let conv = gem_constants(&k(), name);
        let cur = |x| Quantity::scalar(x, Dimension::MASS_CURRENT);
        let len = |x| Quantity::scalar(x, Dimension::LENGTH);
        let b = magnetic_like_field_line(&cur(i), &len(r), &conv).unwrap().as_scalar().unwrap();
        let bi = magnetic_like_field_line(&cur(i * s), &len(r), &conv).unwrap().as_scalar().unwrap();
        let br = magnetic_like_field_line(&cur(i), &len(r * s), &conv).unwrap().as_scalar().unwrap();
        prop_assert!(rel(bi, s * b) < 1e-12);
        prop_assert!(rel(br, b / s) < 1e-12);
    }

    #[test]
    fn lorentz_force_linear_and_additive(
        m in 1e-15f64..1e3, s in 0.1f64..10.0,
        v in prop::array::uniform3(-1e6f64..1e6),
        e in prop::array::uniform3(-1.0f64..1.0),
        b in prop::array::uniform3(-1.0f64..1.0),
    ) {
        let vel = Quantity::vector(v, Dimension::VELOCITY);
        let eg = Quantity::vector(e, Dimension::ACCELERATION);
        let bg = Quantity::vector(b, Dimension::FREQUENCY);
        let zero_e = Quantity::vector([0.0; 3], Dimension::ACCELERATION);
        let zero_b = Quantity::vector([0.0; 3], Dimension::FREQUENCY);
        let body = MassBody::new(Quantity::scalar(m, Dimension::MASS), vel, &k()).unwrap();
        let heavy = MassBody::new(Quantity::scalar(m * s, Dimension::MASS), vel, &k()).unwrap();
        let f = lorentz_force(&body, &eg, &bg).unwrap().as_vector().unwrap();
        let fh = lorentz_force(&heavy, &eg, &bg).unwrap().as_vector().unwrap();
        let fe = lorentz_force(&body, &eg, &zero_b).unwrap().as_vector().unwrap();
        let fb = lorentz_force(&body, &zero_e, &bg).unwrap().as_vector().unwrap();
        let scale = f.iter().map(|x| x.abs()).fold(m, f64::max);
        for i in 0..3 {
            prop_assert!((fh[i] - s * f[i]).abs() <= 1e-12 * s * scale);
            prop_assert!((f[i] - fe[i] - fb[i]).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn force_ratio_below_one(beta in 0.0f64..0.999_999, name in conventions()) {
        let conv = gem_constants(&k(), name);
        let v = Quantity::scalar(beta * k().c_si(), Dimension::VELOCITY);
        let r = force_ratio(&v, &conv, &k()).unwrap();
        prop_assert!((0.0..1.0).contains(&r));
    }

    #[test]
    fn bounds_positive_and_decreasing(l in length(), s in 1.01f64..10.0) {
        let q = |x| Quantity::scalar(x, Dimension::LENGTH);
        let kk = k();
        let pairs = [
            (em_product_bound(&q(l), &kk).unwrap().si_numeric(), em_product_bound(&q(l * s), &kk).unwrap().si_numeric()),
            (metric_uncertainty(&q(l), &kk).unwrap().si_numeric(), metric_uncertainty(&q(l * s), &kk).unwrap().si_numeric()),
            (christoffel_uncertainty(&q(l), &kk).unwrap().si_numeric(), christoffel_uncertainty(&q(l * s), &kk).unwrap().si_numeric()),
            (christoffel_product_bound(&q(l), &kk).unwrap().si_numeric(), christoffel_product_bound(&q(l * s), &kk).unwrap().si_numeric()),
            (gem_product_bound(&q(l), &q(l), &kk).unwrap().si_numeric(), gem_product_bound(&q(l), &q(l * s), &kk).unwrap().si_numeric()),
        ];
        for (near, far) in pairs {
            prop_assert!(near > 0.0 && far > 0.0);
            prop_assert!(far < near);
        }
    }

    #[test]
    fn christoffel_two_forms_and_gem_agree(e in -20.0f64..0.0) {
        let l = Quantity::scalar(10f64.powf(e), Dimension::LENGTH);
        let lp_form = christoffel_product_bound(&l, &k()).unwrap().si_numeric();
        let const_form = christoffel_product_bound_constants(&l, &k()).unwrap();
        prop_assert!(rel(lp_form, const_form) < 1e-12);
        let gem = gem_product_bound(&l, &l, &k()).unwrap().si_numeric();
        prop_assert!(rel(gem, lp_form) < 1e-12);
    }

    #[test]
    fn reduced_state_is_valid(omega in 0.1f64..10.0, f1 in -0.5f64..0.5, f2 in -0.5f64..0.5, wt in 0.0f64..30.0) {
        let mode = FieldMode::relative(omega, f1, f2).unwrap();
        let rho = reduced_state(&mode, mode.time_at(wt), &EQUAL_WEIGHTS).unwrap();
        let m = rho.matrix();
        prop_assert!((m - m.adjoint()).iter().all(|z| z.norm() < 1e-12));
        prop_assert!((m.trace().re - 1.0).abs() < 1e-12);
        prop_assert!(rho.eigenvalues().iter().all(|&l| l > -1e-10));
        let n = rho.negativity();
        prop_assert!((0.0..=0.5 + 1e-12).contains(&n));
    }

    #[test]
    fn single_coupling_never_entangles(omega in 0.1f64..10.0, f in -0.5f64..0.5, wt in 0.0f64..30.0, first in any::<bool>()) {
        let mode = if first { FieldMode::relative(omega, f, 0.0) } else { FieldMode::relative(omega, 0.0, f) }.unwrap();
        let rho = reduced_state(&mode, mode.time_at(wt), &EQUAL_WEIGHTS).unwrap();
        prop_assert!(rho.negativity() < 1e-10);
    }

    #[test]
    fn revivals_are_pure_phase_states(omega in 0.1f64..10.0, f1 in -0.3f64..0.3, f2 in -0.3f64..0.3, n in 1u32..4) {
        let mode = FieldMode::relative(omega, f1, f2).unwrap();
        let t = mode.time_at(TAU * f64::from(n));
        let p = witness_point(&mode, t, &EQUAL_WEIGHTS).unwrap();
        prop_assert!((p.purity - 1.0).abs() < 1e-10);
        prop_assert!((p.negativity - phase_state_negativity(entangling_phase(&mode, t).unwrap())).abs() < 1e-9);
    }

    #[test]
    fn classical_baseline_is_product(omega in 0.1f64..10.0, f1 in -1.0f64..1.0, f2 in -1.0f64..1.0, t in 0.0f64..50.0, amp in -10.0f64..10.0, ph in 0.0f64..TAU) {
        let mode = FieldMode::relative(omega, f1, f2).unwrap();
        let drive = ClassicalDrive { amplitude: amp, phase: ph };
        let rho = classical_baseline(&mode, &drive, t, &EQUAL_WEIGHTS).unwrap();
        prop_assert!(rho.negativity() < 1e-12);
        prop_assert!((rho.purity() - 1.0).abs() < 1e-12);
        let quantum = reduced_state(&mode, t, &EQUAL_WEIGHTS).unwrap();
        for i in 0..4 {
            prop_assert!((rho.get(i, i) - quantum.get(i, i)).norm() < 1e-12);
        }
    }

    #[test]
    fn sagnac_entropy_symmetries(w1 in -1e-4f64..1e-4, w2 in -1e-4f64..1e-4, theta in 0.0f64..(PI / 2.0), phase in 0.0f64..TAU, global in 0.0f64..TAU) {
        let (area, mass) = (1e-4, 1e-26);
        let c1 = Complex64::new(theta.cos(), 0.0);
        let c2 = Complex64::from_polar(theta.sin(), phase);
        let g = Complex64::from_polar(1.0, global);
        let s = SagnacScenario::new(w1, w2, c1, c2, area, mass).unwrap();
        let swapped = SagnacScenario::new(w2, w1, c2, c1, area, mass).unwrap();
        let rotated = SagnacScenario::new(w1, w2, c1 * g, c2 * g, area, mass).unwrap();
        let state = joint_state(&s, &k()).unwrap();
        prop_assert!((state.norm_sqr() - 1.0).abs() < 1e-12);
        let e = rotor_particle_entanglement(&state).unwrap();
        let es = rotor_particle_entanglement(&joint_state(&swapped, &k()).unwrap()).unwrap();
        let eg = rotor_particle_entanglement(&joint_state(&rotated, &k()).unwrap()).unwrap();
        prop_assert!((0.0..=1.0).contains(&e));
        prop_assert!((e - es).abs() < 1e-10);
        prop_assert!((e - eg).abs() < 1e-10);
    }
}

#[test]
fn sagnac_entropy_vanishes_continuously() {
    let (area, mass) = (1e-4, 1e-26);
    let a = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let w1 = 2e-5;
    let mut last = f64::INFINITY;
    for i in (0..=40).rev() {
        let w2 = w1 + 4e-5 * f64::from(i) / 40.0;
        let s = SagnacScenario::new(w1, w2, a, a, area, mass).unwrap();
        let e = rotor_particle_entanglement(&joint_state(&s, &k()).unwrap()).unwrap();
        assert!(e <= last + 1e-12, "entropy not shrinking at step {i}");
        last = e;
    }
    assert_eq!(last, 0.0);
}
