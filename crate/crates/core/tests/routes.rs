use clebsch::formulas::{cg_to_wigner3j, normalization_sum};
use clebsch::ladder::{
    alpha_sequence, beta_closed_form, highest_weight_state, stretched_multiplet_state,
    BetaExpansion,
};
use clebsch::numerics::{h, BigRational, HalfInt, RadicalSum};
use clebsch::table::{coefficient_map, multiplet_states, total_momenta, Route};
use clebsch::verify::check_route_agreement;
use clebsch::{cg_alternative, cg_racah, wigner3j, CouplingSpec, ThreeJSpec};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn sqrt_q(n: i64, d: i64) -> RadicalSum {
    RadicalSum::sqrt(&q(n, d)).unwrap()
}

#[test]
fn all_four_routes_agree_up_to_twelve() {
    let report = check_route_agreement(12, &Route::ALL);
    assert!(report.passed, "{report}");
    assert_eq!(report.cases, 13 * 13);
}

#[test]
fn states_of_different_multiplets_are_orthogonal() {
    for (tj1, tj2) in [(4, 2), (3, 5), (6, 6), (7, 2)] {
        let (j1, j2) = (h(tj1), h(tj2));
        let all: Vec<_> = total_momenta(j1, j2)
            .flat_map(|j| multiplet_states(j1, j2, j, Route::BetaClosedForm).unwrap())
            .collect();
        assert_eq!(all.len(), ((tj1 + 1) * (tj2 + 1)) as usize);
        for (a, x) in all.iter().enumerate() {
            for (b, y) in all.iter().enumerate() {
                let expected = if a == b {
                    RadicalSum::one()
                } else {
                    RadicalSum::zero()
                };
                assert_eq!(x.inner(y), expected, "j1={j1} j2={j2} states {a},{b}");
            }
        }
    }
}

#[test]
fn reference_single_values() {
    let cases = [
        ([2, 2, 0, 0, 4, 0], sqrt_q(2, 3)),
        ([4, 2, 4, 2, 6, 6], RadicalSum::one()),
        ([2, 2, 0, 0, 0, 0], -sqrt_q(1, 3)),
        ([2, 2, 0, 0, 2, 0], RadicalSum::zero()),
        ([4, 2, -2, 0, 2, -2], -sqrt_q(3, 10)),
        ([2, 2, 2, -2, 0, 0], sqrt_q(1, 3)),
        ([1, 1, 1, -1, 0, 0], sqrt_q(1, 2)),
    ];
    for (t, expected) in cases {
        let spec = CouplingSpec::from_twice(t);
        assert_eq!(cg_alternative(&spec).unwrap(), expected, "{spec}");
        assert_eq!(cg_racah(&spec).unwrap(), expected, "{spec}");
    }
}

#[test]
fn twenty_twenty_singlet_matches_racah_and_closed_value() {
    // C(j, j, m, -m, 0, 0) = (-1)^(j-m) / √(2j+1)
    for m in [-20, -7, 0, 3, 20] {
        let spec = CouplingSpec::from_twice([40, 40, 2 * m, -2 * m, 0, 0]);
        let v = cg_alternative(&spec).unwrap();
        assert_eq!(v, cg_racah(&spec).unwrap());
        let expected = sqrt_q(1, 41);
        assert_eq!(
            v,
            if (20 - m) % 2 == 0 {
                expected
            } else {
                -expected
            }
        );
    }
}

#[test]
fn threej_values() {
    let stretched = CouplingSpec::from_twice([2, 2, 2, 2, 4, 4]);
    let (spec, value) = cg_to_wigner3j(&stretched, &RadicalSum::one());
    assert_eq!(spec, ThreeJSpec::from_twice([2, 2, 4, 2, 2, -4]));
    assert_eq!(value, sqrt_q(1, 5));
    assert_eq!(wigner3j(&spec).unwrap(), sqrt_q(1, 5));

    let trivial = CouplingSpec::from_twice([0; 6]);
    assert_eq!(
        cg_to_wigner3j(&trivial, &RadicalSum::one()).1,
        RadicalSum::one()
    );
    assert!(cg_to_wigner3j(&stretched, &RadicalSum::zero()).1.is_zero());

    // odd j1+j2+j3 with all m = 0
    assert!(wigner3j(&ThreeJSpec::from_twice([2, 2, 2, 0, 0, 0]))
        .unwrap()
        .is_zero());
    // m sum nonzero
    assert!(wigner3j(&ThreeJSpec::from_twice([2, 2, 2, 2, 0, 0]))
        .unwrap()
        .is_zero());
    // triangle violated
    assert!(wigner3j(&ThreeJSpec::from_twice([2, 2, 6, 0, 0, 0]))
        .unwrap()
        .is_zero());
    // (1 1 0; 1 -1 0) = 1/√3
    assert_eq!(
        wigner3j(&ThreeJSpec::from_twice([2, 2, 0, 2, -2, 0])).unwrap(),
        sqrt_q(1, 3)
    );
    assert!(wigner3j(&ThreeJSpec::from_twice([2, 2, 0, 1, -1, 0])).is_err());
}

#[test]
fn normalization_sum_inverts_leading_coefficient() {
    // C(j1, j2, j1, J - j1, J, J)² = 1 / S
    for (tj1, tj2) in [(2, 2), (4, 2), (5, 3), (8, 8)] {
        let (j1, j2) = (h(tj1), h(tj2));
        for j in total_momenta(j1, j2) {
            let s = normalization_sum(j1, j2, j);
            let c = cg_racah(&CouplingSpec::new(j1, j2, j1, j - j1, j, j)).unwrap();
            assert_eq!(c.square().unwrap() * s, q(1, 1), "j1={j1} j2={j2} J={j}");
        }
    }
}

#[test]
fn ladder_building_blocks() {
    let (j1, j2) = (h(4), h(2));
    let top = stretched_multiplet_state(j1, j2, 0).unwrap();
    assert_eq!(top.len(), 1);
    assert_eq!(top.component(h(4), h(2)), RadicalSum::one());
    let hw = highest_weight_state(j1, j2, h(2)).unwrap();
    assert!(hw.apply_jplus().is_zero());
    assert_eq!(hw.norm_squared(), RadicalSum::one());

    let alphas = alpha_sequence(j1, j2, 1).unwrap();
    assert_eq!(alphas.alphas.len(), 2);
    assert!(alpha_sequence(j1, j2, 5).is_err());

    // β at s = 0 reproduces the α coefficients of the highest-weight state
    for (tj1, tj2) in [(4, 2), (5, 7), (8, 8)] {
        let (j1, j2) = (h(tj1), h(tj2));
        for m in 0..=tj1.min(tj2) {
            let alphas = alpha_sequence(j1, j2, m).unwrap().alphas;
            let expansion = BetaExpansion::new(j1, j2, m).unwrap();
            for (l, alpha) in alphas.iter().enumerate() {
                assert_eq!(
                    &expansion.beta(0, l as i64, 0).unwrap(),
                    alpha,
                    "j1={j1} j2={j2} m={m} l={l}"
                );
                assert_eq!(&beta_closed_form(j1, j2, m, 0, l as i64, 0).unwrap(), alpha);
            }
        }
    }
}

#[test]
fn identity_coupling_with_zero() {
    for route in Route::ALL {
        for tj in 0..=9 {
            let map = coefficient_map(h(tj), HalfInt::from_int(0), route).unwrap();
            assert_eq!(map.len(), tj as usize + 1);
            assert!(map
                .iter()
                .all(|((j, m, m1), v)| *j == h(tj) && m == m1 && *v == RadicalSum::one()));
            let swapped = coefficient_map(HalfInt::from_int(0), h(tj), route).unwrap();
            assert!(swapped.values().all(|v| *v == RadicalSum::one()));
        }
    }
}
