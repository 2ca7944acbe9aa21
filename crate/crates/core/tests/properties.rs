//! Invariants that must hold for every input, checked over random convex polygons
//! and random similarities.

use std::f64::consts::TAU;

use proptest::prelude::*;

use pentaflow::corpus::seeded_convex_polygon;
use pentaflow::curve::{LinearImage, ThetaFourierCurve};
use pentaflow::flow::compute_w;
use pentaflow::geometry::{all_coefficients, pentagram_map, Point2, Polygon};
use pentaflow::invariant::{
    check_invariance, invariant_f, mapped_coefficient_identity, ratio_transport_check,
};
use pentaflow::io::{parse_polygon, polygon_to_csv};

fn convex() -> impl Strategy<Value = Polygon> {
    (any::<u64>(), 5usize..=20).prop_map(|(seed, n)| seeded_convex_polygon(seed, n))
}

#[derive(Debug, Clone, Copy)]
struct Similarity {
    scale: f64,
    angle: f64,
    shift: Point2,
    reflect: bool,
}

impl Similarity {
    fn apply(&self, p: Point2) -> Point2 {
        let p = if self.reflect {
            Point2::new(p.x, -p.y)
        } else {
            p
        };
        p.rotated(self.angle) * self.scale + self.shift
    }
}

fn similarity() -> impl Strategy<Value = Similarity> {
    (
        0.1f64..10.0,
        0.0..TAU,
        -5.0f64..5.0,
        -5.0f64..5.0,
        any::<bool>(),
    )
        .prop_map(|(scale, angle, x, y, reflect)| Similarity {
            scale,
            angle,
            shift: Point2::new(x, y),
            reflect,
        })
}

fn affine() -> impl Strategy<Value = [[f64; 2]; 2]> {
    prop::array::uniform4(-2.0f64..2.0)
        .prop_map(|m| [[m[0], m[1]], [m[2], m[3]]])
        .prop_filter("well-conditioned", |m| {
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            let frob = m.iter().flatten().map(|v| v * v).sum::<f64>();
            det.abs() > 0.2 * frob
        })
}

fn apply_affine(m: &[[f64; 2]; 2], p: Point2) -> Point2 {
    Point2::new(m[0][0] * p.x + m[0][1] * p.y, m[1][0] * p.x + m[1][1] * p.y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn map_commutes_with_similarities(poly in convex(), s in similarity()) {
        let moved = poly.map_vertices(|p| s.apply(p)).unwrap();
        let lhs = pentagram_map(&moved).unwrap();
        let rhs = pentagram_map(&poly).unwrap().map_vertices(|p| s.apply(p)).unwrap();
        let tol = 1e-9 * moved.diameter().max(s.shift.norm());
        for (a, b) in lhs.vertices().iter().zip(rhs.vertices()) {
            prop_assert!(a.distance(*b) < tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn weights_are_affine_invariant(poly in convex(), m in affine(), x in -3.0f64..3.0, y in -3.0f64..3.0) {
        let moved = poly.map_vertices(|p| apply_affine(&m, p) + Point2::new(x, y)).unwrap();
        for (a, b) in all_coefficients(&poly).unwrap().iter().zip(all_coefficients(&moved).unwrap()) {
            prop_assert!(a.max_abs_diff(&b) < 1e-8 * (1.0 + a.b.abs().max(a.d.abs())));
        }
    }

    #[test]
    fn weights_sum_to_one(poly in convex()) {
        for q in all_coefficients(&poly).unwrap() {
            prop_assert!((q.a + q.b - 1.0).abs() < 1e-12);
            prop_assert!((q.c + q.d - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn invariant_is_similarity_invariant(poly in convex(), s in similarity()) {
        let f = invariant_f(&poly).unwrap().f_signed;
        let g = invariant_f(&poly.map_vertices(|p| s.apply(p)).unwrap()).unwrap().f_signed;
        prop_assert!((g / f - 1.0).abs() < 1e-9, "{f} vs {g}");
    }

    #[test]
    fn invariant_survives_the_map(poly in convex()) {
        prop_assert!(check_invariance(&poly).unwrap() < 1e-9);
        let r = invariant_f(&poly).unwrap();
        for (s, c) in r.factors.iter().zip(&r.coeff_factors) {
            prop_assert!((s / c - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn exact_identities_hold(poly in convex(), k in 0usize..20) {
        let i = (k % poly.len()) as isize;
        let (r1, r2) = ratio_transport_check(&poly, i).unwrap();
        prop_assert!(r1 < 1e-9 && r2 < 1e-9, "{r1} {r2}");
        prop_assert!(mapped_coefficient_identity(&poly, i).unwrap() < 1e-9);
    }

    #[test]
    fn convex_polygons_shrink(poly in convex()) {
        let image = pentagram_map(&poly).unwrap();
        prop_assert!(image.diameter() < poly.diameter());
        prop_assert!(image.is_convex());
    }

    #[test]
    fn w_is_affine_invariant(m in affine(), x in 0.0f64..1.0) {
        let base = ThetaFourierCurve::figure3();
        let w = compute_w(&base, x).unwrap();
        let moved = LinearImage::new(base, m, Point2::new(0.3, -0.2));
        let w2 = compute_w(&moved, x).unwrap();
        prop_assert!((w - w2).abs() < 1e-8 * (1.0 + w.abs()), "{w} vs {w2}");
    }

    #[test]
    fn polygon_csv_round_trips(poly in convex()) {
        let text = polygon_to_csv(&poly);
        let back = parse_polygon(&text).unwrap();
        prop_assert_eq!(&back, &poly);
        prop_assert_eq!(polygon_to_csv(&back), text);
    }
}
