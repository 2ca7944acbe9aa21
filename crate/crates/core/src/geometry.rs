//! Planar primitives, cyclic polygons and the pentagram map.
//!
//! Every vertex of the image polygon is written as an affine combination of
//! two vertices of the source polygon. For a polygon `v` with indices taken
//! mod `n`, the image vertex `u_i` is the crossing of the short diagonals
//! `(v_{i-1} v_{i+1})` and `(v_i v_{i+2})`, and
//!
//! ```text
//! u_i = A_i v_i + B_i v_{i+2} = C_i v_{i-1} + D_i v_{i+1}
//! ```
//!
//! where the four weights are ratios of 2x2 determinants sharing the
//! denominator `[v_{i-1} - v_{i+1}, v_i - v_{i+2}]`.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::tolerances::DET_REL_TOL;

/// A point (or displacement) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

/// Displacements share the point representation.
pub type Vector2 = Point2;

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn from_polar(radius: f64, angle: f64) -> Self {
        Self::new(radius * angle.cos(), radius * angle.sin())
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Rotation by `angle` radians about the origin.
    pub fn rotated(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

impl Mul<Point2> for f64 {
    type Output = Point2;
    fn mul(self, p: Point2) -> Point2 {
        p * self
    }
}

/// `[u, v] = det(u | v) = u.x v.y - u.y v.x`.
pub fn det2(u: Vector2, v: Vector2) -> f64 {
    u.x * v.y - u.y * v.x
}

/// True when `det2(u, v)` is indistinguishable from zero at the operands' scale.
fn negligible_det(u: Vector2, v: Vector2) -> bool {
    det2(u, v).abs() <= DET_REL_TOL * u.norm() * v.norm()
}

/// Crossing point of the infinite lines `(p1 p2)` and `(q1 q2)`.
pub fn line_intersection(
    p1: Point2,
    p2: Point2,
    q1: Point2,
    q2: Point2,
) -> Result<Point2, GeometryError> {
    let d = p2 - p1;
    let e = q2 - q1;
    let pivot = det2(d, e);
    if pivot.abs() < DET_REL_TOL * d.norm() * e.norm() || pivot == 0.0 {
        return Err(GeometryError::ParallelLines);
    }
    // p1 + s d = q1 + t e, solved by Cramer's rule for s.
    let s = det2(q1 - p1, e) / pivot;
    Ok(p1 + d * s)
}

/// Signed length of `a - b` measured along the direction `origin -> direction_end`.
pub fn signed_length(
    origin: Point2,
    direction_end: Point2,
    a: Point2,
    b: Point2,
) -> Result<f64, GeometryError> {
    let dir = direction_end - origin;
    let len = dir.norm();
    let unit = dir * (1.0 / len);
    for p in [a, b] {
        let deviation = det2(unit, p - origin).abs();
        if deviation > crate::tolerances::COLLINEAR_REL_TOL * len {
            return Err(GeometryError::NotCollinear { deviation });
        }
    }
    Ok((a - b).dot(unit))
}

/// Cyclic vertex list with at least five vertices in general position.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point2>,
}

impl Polygon {
    pub const MIN_VERTICES: usize = 5;

    /// Validates vertex count, finiteness and general position.
    pub fn new(vertices: Vec<Point2>) -> Result<Self, GeometryError> {
        let n = vertices.len();
        if n < Self::MIN_VERTICES {
            return Err(GeometryError::TooFewVertices(n));
        }
        if let Some(i) = vertices.iter().position(|p| !p.is_finite()) {
            return Err(GeometryError::NonFinite(i));
        }
        let poly = Self { vertices };
        if let Some(index) = poly.first_degenerate_index() {
            return Err(GeometryError::DegeneratePosition { index });
        }
        Ok(poly)
    }

    /// Regular `n`-gon on a circle of `radius` about the origin, vertex 0 at `phase`.
    pub fn regular(n: usize, radius: f64, phase: f64) -> Result<Self, GeometryError> {
        let vertices = (0..n)
            .map(|k| Point2::from_polar(radius, phase + TAU * k as f64 / n as f64))
            .collect();
        Self::new(vertices)
    }

    fn first_degenerate_index(&self) -> Option<usize> {
        (0..self.len()).find(|&i| {
            let i = i as isize;
            let crossing =
                negligible_det(self.at(i - 1) - self.at(i + 1), self.at(i) - self.at(i + 2));
            let turn = negligible_det(self.at(i) - self.at(i + 1), self.at(i + 1) - self.at(i + 2));
            crossing || turn
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Never true for a constructed polygon; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point2> {
        self.vertices
    }

    /// Vertex at a cyclic index; any integer is reduced mod `n`.
    pub fn at(&self, i: isize) -> Point2 {
        self.vertices[i.rem_euclid(self.len() as isize) as usize]
    }

    /// Largest pairwise vertex distance.
    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut best = 0.0_f64;
        for (k, p) in v.iter().enumerate() {
            for q in &v[k + 1..] {
                best = best.max(p.distance(*q));
            }
        }
        best
    }

    pub fn centroid(&self) -> Point2 {
        let sum = self.vertices.iter().fold(Point2::ORIGIN, |acc, p| acc + *p);
        sum * (1.0 / self.len() as f64)
    }

    /// All turning determinants `[v_i - v_{i+1}, v_{i+1} - v_{i+2}]` share one
    /// sign and the boundary winds exactly once (rules out star polygons).
    pub fn is_convex(&self) -> bool {
        let n = self.len() as isize;
        let turns: Vec<f64> = (0..n)
            .map(|i| det2(self.at(i) - self.at(i + 1), self.at(i + 1) - self.at(i + 2)))
            .collect();
        let one_sign = turns.iter().all(|t| *t > 0.0) || turns.iter().all(|t| *t < 0.0);
        let winding: f64 = (0..n)
            .map(|i| {
                let e0 = self.at(i + 1) - self.at(i);
                let e1 = self.at(i + 2) - self.at(i + 1);
                det2(e0, e1).atan2(e0.dot(e1))
            })
            .sum();
        one_sign && (winding.abs() - TAU).abs() < 1e-6
    }

    /// Applies `f` to every vertex and revalidates.
    pub fn map_vertices(&self, f: impl Fn(Point2) -> Point2) -> Result<Self, GeometryError> {
        Self::new(self.vertices.iter().map(|p| f(*p)).collect())
    }
}

/// Per-vertex weights of the pentagram map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoefficientQuad {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl CoefficientQuad {
    /// Largest componentwise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            self.a - other.a,
            self.b - other.b,
            self.c - other.c,
            self.d - other.d,
        ]
        .iter()
        .fold(0.0, |m, x| m.max(x.abs()))
    }
}

/// The four weights at cyclic index `i`.
pub fn coefficients(poly: &Polygon, i: isize) -> Result<CoefficientQuad, GeometryError> {
    let v = |k: isize| poly.at(i + k);
    let denom = det2(v(-1) - v(1), v(0) - v(2));
    if negligible_det(v(-1) - v(1), v(0) - v(2)) {
        return Err(GeometryError::DegeneratePosition {
            index: i.rem_euclid(poly.len() as isize) as usize,
        });
    }
    Ok(CoefficientQuad {
        a: det2(v(-1) - v(1), v(1) - v(2)) / denom,
        b: det2(v(-1) - v(0), v(0) - v(1)) / denom,
        c: det2(v(0) - v(1), v(1) - v(2)) / denom,
        d: det2(v(-1) - v(0), v(0) - v(2)) / denom,
    })
}

/// All `n` quads in index order.
pub fn all_coefficients(poly: &Polygon) -> Result<Vec<CoefficientQuad>, GeometryError> {
    (0..poly.len() as isize)
        .map(|i| coefficients(poly, i))
        .collect()
}

/// One application of the pentagram map, labelled so that image vertex `i`
/// lies on the diagonals `(v_{i-1} v_{i+1})` and `(v_i v_{i+2})`.
pub fn pentagram_map(poly: &Polygon) -> Result<Polygon, GeometryError> {
    let image = (0..poly.len() as isize)
        .map(|i| {
            let q = coefficients(poly, i)?;
            Ok(poly.at(i) * q.a + poly.at(i + 2) * q.b)
        })
        .collect::<Result<Vec<_>, GeometryError>>()?;
    Polygon::new(image).map_err(|e| match e {
        GeometryError::DegeneratePosition { index } | GeometryError::DegenerateImage { index } => {
            GeometryError::DegenerateImage { index }
        }
        GeometryError::NonFinite(index) => GeometryError::DegenerateImage { index },
        other => other,
    })
}

/// `steps` applications of the map.
pub fn iterate_map(poly: &Polygon, steps: usize) -> Result<Polygon, GeometryError> {
    let mut current = poly.clone();
    for _ in 0..steps {
        current = pentagram_map(&current)?;
    }
    Ok(current)
}

/// The image vertex at `i` computed with both affine formulas and with the
/// generic line solver.
pub fn vertex_two_ways(
    poly: &Polygon,
    i: isize,
) -> Result<(Point2, Point2, Point2), GeometryError> {
    let q = coefficients(poly, i)?;
    let forward = poly.at(i) * q.a + poly.at(i + 2) * q.b;
    let backward = poly.at(i - 1) * q.c + poly.at(i + 1) * q.d;
    let crossing = line_intersection(poly.at(i - 1), poly.at(i + 1), poly.at(i), poly.at(i + 2))?;
    Ok((forward, backward, crossing))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn det2_examples() {
        assert_eq!(det2(Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)), 1.0);
        assert_eq!(det2(Point2::new(2.0, 3.0), Point2::new(2.0, 3.0)), 0.0);
        assert_eq!(det2(Point2::new(3.0, 1.0), Point2::new(1.0, 2.0)), 5.0);
    }

    #[test]
    fn line_intersection_examples() {
        let p = line_intersection(
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 2.0),
            Point2::new(0.0, 2.0),
            Point2::new(2.0, 0.0),
        )
        .unwrap();
        assert!(p.distance(Point2::new(1.0, 1.0)) < 1e-15);

        let err = line_intersection(
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
            Point2::new(1.0, 1.0),
        );
        assert_eq!(err, Err(GeometryError::ParallelLines));

        let hex = Polygon::regular(6, 1.0, 0.0).unwrap();
        let c = line_intersection(hex.at(0), hex.at(3), hex.at(1), hex.at(4)).unwrap();
        assert!(c.norm() < 1e-15);
    }

    #[test]
    fn regular_hexagon_and_pentagon_weights() {
        let hex = Polygon::regular(6, 1.0, 0.0).unwrap();
        for i in 0..6 {
            let q = coefficients(&hex, i).unwrap();
            assert!(close(q.b, 1.0 / 3.0, 1e-14));
            assert!(close(q.a, 2.0 / 3.0, 1e-14));
        }
        let pent = Polygon::regular(5, 1.0, FRAC_PI_2).unwrap();
        let q = coefficients(&pent, 3).unwrap();
        assert!(close(q.b, 0.381_966_0, 1e-7));
        let big = Polygon::regular(1000, 1.0, 0.0).unwrap();
        assert!(close(coefficients(&big, 17).unwrap().b, 0.25, 1e-5));
    }

    #[test]
    fn square_is_rejected() {
        let sq = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        assert_eq!(Polygon::new(sq), Err(GeometryError::TooFewVertices(4)));
    }

    #[test]
    fn collinear_triple_is_rejected() {
        let v = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 1.0),
            Point2::new(1.0, 2.0),
            Point2::new(0.0, 1.0),
        ];
        assert!(matches!(
            Polygon::new(v),
            Err(GeometryError::DegeneratePosition { .. })
        ));
        let mut v = Polygon::regular(5, 1.0, 0.0).unwrap().into_vertices();
        v[2].x = f64::NAN;
        assert_eq!(Polygon::new(v), Err(GeometryError::NonFinite(2)));
    }

    #[test]
    fn pentagon_image_is_rotated_and_shrunk() {
        let pent = Polygon::regular(5, 1.0, FRAC_PI_2).unwrap();
        let img = pentagram_map(&pent).unwrap();
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        for (k, u) in img.vertices().iter().enumerate() {
            assert!(close(u.norm(), 1.0 / (golden * golden), 1e-14));
            let expected =
                Point2::from_polar(u.norm(), FRAC_PI_2 + PI / 5.0 + TAU * k as f64 / 5.0);
            assert!(u.distance(expected) < 1e-14);
            // brute-force oracle
            let k = k as isize;
            let x = line_intersection(pent.at(k - 1), pent.at(k + 1), pent.at(k), pent.at(k + 2))
                .unwrap();
            assert!(u.distance(x) < 1e-14);
        }
    }

    #[test]
    fn hexagon_image_radius() {
        let hex = Polygon::regular(6, 1.0, 0.0).unwrap();
        let img = pentagram_map(&hex).unwrap();
        for (k, u) in img.vertices().iter().enumerate() {
            assert!(close(u.norm(), 3f64.sqrt() / 3.0, 1e-14));
            let expected = Point2::from_polar(u.norm(), PI / 6.0 + TAU * k as f64 / 6.0);
            assert!(u.distance(expected) < 1e-14);
        }
    }

    #[test]
    fn two_ways_on_regular_polygons() {
        let hex = Polygon::regular(6, 1.0, 0.0).unwrap();
        let (a, b, c) = vertex_two_ways(&hex, 0).unwrap();
        assert!(a.distance(b) < 1e-12 && a.distance(c) < 1e-12 && b.distance(c) < 1e-12);
        let pent = Polygon::regular(5, 1.0, FRAC_PI_2).unwrap();
        let (a, b, c) = vertex_two_ways(&pent, 2).unwrap();
        let tol = 1e-10 * pent.diameter();
        assert!(a.distance(b) < tol && a.distance(c) < tol);
    }

    #[test]
    fn signed_length_examples() {
        let o = Point2::new(0.0, 0.0);
        let e = Point2::new(4.0, 0.0);
        let l = signed_length(o, e, Point2::new(1.0, 0.0), Point2::new(3.0, 0.0)).unwrap();
        assert_eq!(l, -2.0);
        let l = signed_length(o, e, Point2::new(3.0, 0.0), Point2::new(1.0, 0.0)).unwrap();
        assert_eq!(l, 2.0);
        let r = signed_length(
            o,
            Point2::new(0.0, 2.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        );
        assert!(matches!(r, Err(GeometryError::NotCollinear { .. })));
    }

    #[test]
    fn regular_closed_form_weight() {
        for n in 5..=64 {
            let poly = Polygon::regular(n, 1.0, 0.3).unwrap();
            let expected = 1.0 / (4.0 * (PI / n as f64).cos().powi(2));
            for i in [0, 1, n as isize - 1] {
                let q = coefficients(&poly, i).unwrap();
                assert!(
                    close(q.b, expected, 1e-12),
                    "n = {n}: {} vs {expected}",
                    q.b
                );
            }
        }
    }

    #[test]
    fn convexity_flag() {
        assert!(Polygon::regular(7, 2.0, 0.1).unwrap().is_convex());
        let star: Vec<Point2> = (0..5)
            .map(|k| Point2::from_polar(1.0, 2.0 * TAU * k as f64 / 5.0))
            .collect();
        let star = Polygon::new(star).unwrap();
        assert!(!star.is_convex());
        let dented = Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 2.0),
            Point2::new(1.0, 0.5),
            Point2::new(0.0, 2.0),
        ])
        .unwrap();
        assert!(!dented.is_convex());
    }
}
