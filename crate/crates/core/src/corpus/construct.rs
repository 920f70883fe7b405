//! Spatial models of the three base embeddings.

use std::f64::consts::{PI, TAU};

use crate::geometry::{sample, Point, SpatialGraph3d};

const SAMPLES: usize = 24;

fn polar(r: f64, theta: f64, z: f64) -> Point {
    [r * theta.cos(), r * theta.sin(), z]
}

fn lerp(a: Point, b: Point, s: f64) -> Point {
    [
        a[0] + s * (b[0] - a[0]),
        a[1] + s * (b[1] - a[1]),
        a[2] + s * (b[2] - a[2]),
    ]
}

/// Outer pentagon `12345`, inner cycle `abcde` drawn as a pentagram whose
/// chords dip below the page on their first half and rise above it on the
/// second, spokes `1a 2c 3e 4b 5d`.
pub fn gamma() -> SpatialGraph3d {
    let outer = ["1", "2", "3", "4", "5"];
    // Inner vertex at the same angle as its spoke partner.
    let inner = ["a", "c", "e", "b", "d"];
    let angle = |k: usize| PI / 2.0 - TAU * k as f64 / 5.0;
    let mut g = SpatialGraph3d::new();
    for k in 0..5 {
        g.vertex(outer[k], polar(4.0, angle(k), 0.0));
        g.vertex(inner[k], polar(2.0, angle(k), 0.0));
    }
    for k in 0..5 {
        let (u, v) = (outer[k], outer[(k + 1) % 5]);
        g.edge(&format!("{u}{v}"), u, v, vec![]);
        g.edge(
            &format!("{}{}", outer[k], inner[k]),
            outer[k],
            inner[k],
            vec![],
        );
    }
    let letters = ["a", "b", "c", "d", "e"];
    for j in 0..5 {
        let (u, v) = (letters[j], letters[(j + 1) % 5]);
        let pu = g.position(u).unwrap();
        let pv = g.position(v).unwrap();
        let chord = sample(SAMPLES, |s| {
            let mut p = lerp(pu, pv, s);
            p[2] = -(TAU * s).sin();
            p
        });
        g.edge(&format!("{u}{v}"), u, v, chord);
    }
    g
}

/// The 3-fold symmetric trefoil `w(t) = e^{it} - 2e^{-2it}`, `z = -sin 3t`.
fn trefoil_curve(t: f64) -> Point {
    [
        t.sin() + 2.0 * (2.0 * t).sin(),
        t.cos() - 2.0 * (2.0 * t).cos(),
        -(3.0 * t).sin(),
    ]
}

/// The 9-cycle `154baedc2` runs along a trefoil, vertex 3 sits on the axis
/// of 3-fold symmetry, and the chords `a1 cb 5d` are straight.
pub fn lambda() -> SpatialGraph3d {
    let ring = ["1", "5", "4", "b", "a", "e", "d", "c", "2"];
    // Vertices 2, 4, e land on the three points of the curve nearest the axis.
    let t_of = |p: f64| TAU * (p - 8.0) / 9.0;
    let mut g = SpatialGraph3d::new();
    for (p, name) in ring.iter().enumerate() {
        g.vertex(name, trefoil_curve(t_of(p as f64)));
    }
    g.vertex("3", [0.0, 0.0, 0.0]);
    for p in 0..9 {
        let (u, v) = (ring[p], ring[(p + 1) % 9]);
        g.edge(
            &format!("{u}{v}"),
            u,
            v,
            sample(SAMPLES, |s| trefoil_curve(t_of(p as f64 + s))),
        );
    }
    for (u, v) in [("2", "3"), ("3", "4"), ("e", "3")] {
        g.edge(&format!("{u}{v}"), u, v, vec![]);
    }
    for (u, v) in [("a", "1"), ("c", "b"), ("5", "d")] {
        g.edge(&format!("{u}{v}"), u, v, vec![]);
    }
    g
}

/// Points of S³ ⊂ ℂ² sent to ℝ³ by stereographic projection from `pole`.
fn stereographic(q: [f64; 4]) -> Point {
    let denom = 1.0 - q[3];
    [q[0] / denom, q[1] / denom, q[2] / denom]
}

/// `X = 12345` on `|z| = 1`, `Y = abcde` on `|w| = 1`, and spokes along the
/// great-circle arcs joining vertex `k` at angle `θ` to the point of `Y` at
/// angle `2θ`.
pub fn delta() -> SpatialGraph3d {
    // A fixed generic rotation of S³ moves the projection pole off the graph.
    let rot = generic_rotation();
    let embed = |z: (f64, f64), w: (f64, f64)| -> Point {
        let q = [z.0, z.1, w.0, w.1];
        let mut r = [0.0; 4];
        for (i, row) in rot.iter().enumerate() {
            r[i] = (0..4).map(|j| row[j] * q[j]).sum();
        }
        stereographic(r)
    };
    let x_at = |theta: f64| embed((theta.cos(), theta.sin()), (0.0, 0.0));
    let y_at = |eta: f64| embed((0.0, 0.0), (eta.cos(), eta.sin()));
    let numbers = ["1", "2", "3", "4", "5"];
    let letters = ["a", "b", "c", "d", "e"];
    let theta = |k: usize| TAU * k as f64 / 5.0;
    let mut g = SpatialGraph3d::new();
    for k in 0..5 {
        g.vertex(numbers[k], x_at(theta(k)));
        g.vertex(letters[k], y_at(theta(k)));
    }
    for k in 0..5 {
        let (u, v) = (numbers[k], numbers[(k + 1) % 5]);
        let id = format!("{u}{v}");
        g.edge(
            &id,
            u,
            v,
            sample(SAMPLES, |s| x_at(theta(k) + s * TAU / 5.0)),
        );
        let (u, v) = (letters[k], letters[(k + 1) % 5]);
        let id = format!("{u}{v}");
        g.edge(
            &id,
            u,
            v,
            sample(SAMPLES, |s| y_at(theta(k) + s * TAU / 5.0)),
        );
    }
    for k in 0..5 {
        let th = theta(k);
        let eta = 2.0 * th;
        let target = letters[(2 * k) % 5];
        g.edge(
            &format!("{}{}", numbers[k], target),
            numbers[k],
            target,
            sample(SAMPLES, |s| {
                let a = s * PI / 2.0;
                embed(
                    (a.cos() * th.cos(), a.cos() * th.sin()),
                    (a.sin() * eta.cos(), a.sin() * eta.sin()),
                )
            }),
        );
    }
    g
}

fn generic_rotation() -> [[f64; 4]; 4] {
    // Product of plane rotations with irrational-looking angles.
    let mut m = [[0.0; 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for &(i, j, ang) in &[
        (0usize, 3usize, 0.7f64),
        (1, 2, 0.45),
        (2, 3, 0.9),
        (0, 1, 0.3),
        (1, 3, 0.55),
    ] {
        let (c, s) = (ang.cos(), ang.sin());
        for row in m.iter_mut() {
            let (a, b) = (row[i], row[j]);
            row[i] = c * a - s * b;
            row[j] = s * a + c * b;
        }
    }
    m
}
