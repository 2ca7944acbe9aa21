//! Seeded random convex polygons for property sweeps.
//!
//! Samples come from Valtr's construction: two sorted coordinate lists are
//! split into monotone chains, the resulting edge vectors are paired at random
//! and sorted by angle, and laid end to end. The result is always a convex
//! polygon with exactly `n` vertices. It is recentred on its vertex centroid
//! and scaled to unit maximal radius.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{det2, Point2, Polygon};

/// Smallest accepted `|sin|` of a turning angle or of a diagonal crossing.
const MIN_CONDITIONING: f64 = 1e-3;

fn chain_steps<R: Rng>(rng: &mut R, sorted: &[f64]) -> Vec<f64> {
    let n = sorted.len();
    let (lo, hi) = (sorted[0], sorted[n - 1]);
    let (mut last_a, mut last_b) = (lo, lo);
    let mut steps = Vec::with_capacity(n);
    for &x in &sorted[1..n - 1] {
        if rng.gen_bool(0.5) {
            steps.push(x - last_a);
            last_a = x;
        } else {
            steps.push(last_b - x);
            last_b = x;
        }
    }
    steps.push(hi - last_a);
    steps.push(last_b - hi);
    steps
}

fn valtr<R: Rng>(rng: &mut R, n: usize) -> Vec<Point2> {
    let mut xs: Vec<f64> = (0..n).map(|_| rng.gen()).collect();
    let mut ys: Vec<f64> = (0..n).map(|_| rng.gen()).collect();
    xs.sort_by(f64::total_cmp);
    ys.sort_by(f64::total_cmp);
    let dx = chain_steps(rng, &xs);
    let mut dy = chain_steps(rng, &ys);
    dy.shuffle(rng);

    let mut edges: Vec<Point2> = dx
        .into_iter()
        .zip(dy)
        .map(|(x, y)| Point2::new(x, y))
        .collect();
    edges.sort_by(|a, b| a.y.atan2(a.x).total_cmp(&b.y.atan2(b.x)));

    let mut cursor = Point2::ORIGIN;
    let mut pts = Vec::with_capacity(n);
    for e in edges {
        pts.push(cursor);
        cursor = cursor + e;
    }
    let centre = pts.iter().fold(Point2::ORIGIN, |acc, p| acc + *p) * (1.0 / n as f64);
    let radius = pts.iter().map(|p| p.distance(centre)).fold(0.0, f64::max);
    pts.iter().map(|p| (*p - centre) * (1.0 / radius)).collect()
}

fn well_conditioned(poly: &Polygon) -> bool {
    let rel = |u: Point2, v: Point2| det2(u, v).abs() / (u.norm() * v.norm());
    (0..poly.len() as isize).all(|i| {
        let turn = rel(poly.at(i) - poly.at(i + 1), poly.at(i + 1) - poly.at(i + 2));
        let cross = rel(poly.at(i - 1) - poly.at(i + 1), poly.at(i) - poly.at(i + 2));
        turn >= MIN_CONDITIONING && cross >= MIN_CONDITIONING
    })
}

/// Draws one convex `n`-gon, resampling until it is well conditioned.
pub fn random_convex_polygon<R: Rng>(rng: &mut R, n: usize) -> Polygon {
    assert!(n >= Polygon::MIN_VERTICES, "random polygons need n >= 5");
    loop {
        if let Ok(poly) = Polygon::new(valtr(rng, n)) {
            if poly.is_convex() && well_conditioned(&poly) {
                return poly;
            }
        }
    }
}

/// `count` polygons from a fixed seed; sample `k` has `n = lo + k mod (hi - lo + 1)`.
pub fn convex_corpus(seed: u64, count: usize, sizes: RangeInclusive<usize>) -> Vec<Polygon> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = (*sizes.start(), *sizes.end());
    (0..count)
        .map(|k| random_convex_polygon(&mut rng, lo + k % (hi - lo + 1)))
        .collect()
}

/// A single seeded polygon, the same one every call.
pub fn seeded_convex_polygon(seed: u64, n: usize) -> Polygon {
    random_convex_polygon(&mut ChaCha8Rng::seed_from_u64(seed), n)
}
