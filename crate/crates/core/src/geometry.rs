//! Diagrams from piecewise-linear spatial graphs.
//!
//! Vertices and edge polylines live in ℝ³; a diagram is read off by projecting
//! along a chosen direction. The strand nearer the viewer is the over-strand.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::diagram::{natural_cmp, Decoration, DiagramError, SpatialDiagram};

pub type Point = [f64; 3];

const EPS: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("degenerate projection: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Clone, Debug)]
struct Edge {
    id: String,
    u: String,
    v: String,
    interior: Vec<Point>,
}

#[derive(Clone, Debug, Default)]
pub struct SpatialGraph3d {
    vertices: Vec<(String, Point)>,
    edges: Vec<Edge>,
    decorations: Vec<(String, Decoration)>,
}

impl SpatialGraph3d {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: &str, at: Point) -> &mut Self {
        self.vertices.push((name.to_string(), at));
        self
    }

    /// Edge from `u` to `v` through the given interior points.
    pub fn edge(&mut self, id: &str, u: &str, v: &str, interior: Vec<Point>) -> &mut Self {
        self.edges.push(Edge {
            id: id.to_string(),
            u: u.to_string(),
            v: v.to_string(),
            interior,
        });
        self
    }

    pub fn decorate(&mut self, edge: &str, deco: Decoration) -> &mut Self {
        self.decorations.push((edge.to_string(), deco));
        self
    }

    pub fn position(&self, name: &str) -> Option<Point> {
        self.vertices.iter().find(|(n, _)| n == name).map(|v| v.1)
    }

    /// Applies a map to every vertex and interior point.
    pub fn transformed(&self, f: impl Fn(Point) -> Point) -> SpatialGraph3d {
        SpatialGraph3d {
            vertices: self
                .vertices
                .iter()
                .map(|(n, p)| (n.clone(), f(*p)))
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    interior: e.interior.iter().map(|&p| f(p)).collect(),
                    ..e.clone()
                })
                .collect(),
            decorations: self.decorations.clone(),
        }
    }

    fn polyline(&self, e: &Edge) -> Result<Vec<Point>, GeometryError> {
        let at = |n: &str| {
            self.position(n)
                .ok_or_else(|| GeometryError::UnknownVertex(n.into()))
        };
        let mut pts = vec![at(&e.u)?];
        pts.extend(e.interior.iter().copied());
        pts.push(at(&e.v)?);
        Ok(pts)
    }

    /// Projects along `view`; the viewer sits at +∞·view.
    pub fn project(&self, view: Point) -> Result<SpatialDiagram, GeometryError> {
        let (ex, ey, ez) = frame(view);
        let to2 = |p: Point| ([dot(p, ex), dot(p, ey)], dot(p, ez));
        let lines: Vec<Vec<([f64; 2], f64)>> = self
            .edges
            .iter()
            .map(|e| Ok(self.polyline(e)?.into_iter().map(to2).collect()))
            .collect::<Result<_, GeometryError>>()?;

        // (edge, position along edge, over?, crossing index)
        let mut passages: Vec<(usize, f64, usize)> = Vec::new();
        // per crossing: (under passage, over passage, under dir, over dir)
        let mut raw: Vec<(usize, usize, [f64; 2], [f64; 2])> = Vec::new();
        for (e1, l1) in lines.iter().enumerate() {
            for (e2, l2) in lines.iter().enumerate().skip(e1) {
                for i in 0..l1.len() - 1 {
                    let j0 = if e1 == e2 { i + 2 } else { 0 };
                    for j in j0..l2.len() - 1 {
                        let (a0, a1) = (l1[i], l1[i + 1]);
                        let (b0, b1) = (l2[j], l2[j + 1]);
                        let Some((s, t)) = segment_hit(a0.0, a1.0, b0.0, b1.0, e1, e2)? else {
                            continue;
                        };
                        let za = a0.1 + s * (a1.1 - a0.1);
                        let zb = b0.1 + t * (b1.1 - b0.1);
                        if (za - zb).abs() < 1e-7 {
                            return Err(GeometryError::Degenerate(format!(
                                "strands of {} and {} meet in space",
                                self.edges[e1].id, self.edges[e2].id
                            )));
                        }
                        let da = sub2(a1.0, a0.0);
                        let db = sub2(b1.0, b0.0);
                        let pa = passages.len();
                        passages.push((e1, i as f64 + s, raw.len()));
                        passages.push((e2, j as f64 + t, raw.len()));
                        raw.push(if za > zb {
                            (pa + 1, pa, db, da)
                        } else {
                            (pa, pa + 1, da, db)
                        });
                    }
                }
            }
        }
        // Order passages along each edge.
        let mut slot = vec![0usize; passages.len()];
        for e in 0..self.edges.len() {
            let mut on: Vec<usize> = (0..passages.len())
                .filter(|&p| passages[p].0 == e)
                .collect();
            on.sort_by(|&a, &b| passages[a].1.total_cmp(&passages[b].1));
            for (k, &p) in on.iter().enumerate() {
                slot[p] = k;
            }
        }
        let dart = |p: usize, out: bool| -> (String, usize) {
            let idx = 2 * slot[p] + if out { 2 } else { 1 };
            (self.edges[passages[p].0].id.clone(), idx)
        };
        let mut crossings: Vec<(usize, f64, [(String, usize); 4])> = raw
            .iter()
            .map(|&(under, over, du, dov)| {
                let back = [-du[0], -du[1]];
                let over_next = cross2(back, dov) > 0.0;
                let darts = [
                    dart(under, false),
                    dart(over, over_next),
                    dart(under, true),
                    dart(over, !over_next),
                ];
                (passages[under].0, passages[under].1, darts)
            })
            .collect();
        crossings.sort_by(|a, b| {
            natural_cmp(&self.edges[a.0].id, &self.edges[b.0].id).then(a.1.total_cmp(&b.1))
        });
        let crossings: Vec<(String, [(String, usize); 4])> = crossings
            .into_iter()
            .enumerate()
            .map(|(i, c)| (format!("x{}", i + 1), c.2))
            .collect();

        let counts: Vec<usize> = (0..self.edges.len())
            .map(|e| passages.iter().filter(|p| p.0 == e).count())
            .collect();
        let mut rotations: BTreeMap<String, Vec<(String, usize)>> = BTreeMap::new();
        for (name, _) in &self.vertices {
            let mut ends: Vec<(f64, (String, usize))> = Vec::new();
            for (e, edge) in self.edges.iter().enumerate() {
                let l = &lines[e];
                if &edge.u == name {
                    ends.push((angle(sub2(l[1].0, l[0].0)), (edge.id.clone(), 0)));
                }
                if &edge.v == name {
                    let n = l.len();
                    ends.push((
                        angle(sub2(l[n - 2].0, l[n - 1].0)),
                        (edge.id.clone(), 2 * counts[e] + 1),
                    ));
                }
            }
            ends.sort_by(|a, b| a.0.total_cmp(&b.0));
            for w in ends.windows(2) {
                if (w[1].0 - w[0].0).abs() < 1e-9 {
                    return Err(GeometryError::Degenerate(format!(
                        "edges leave vertex {name} in the same direction"
                    )));
                }
            }
            let mut darts: Vec<(String, usize)> = ends.into_iter().map(|x| x.1).collect();
            if let Some(min) = (0..darts.len()).min_by(|&a, &b| {
                natural_cmp(&darts[a].0, &darts[b].0).then(darts[a].1.cmp(&darts[b].1))
            }) {
                darts.rotate_left(min);
            }
            rotations.insert(name.clone(), darts);
        }
        let mut arcs = Vec::new();
        for (e, edge) in self.edges.iter().enumerate() {
            for k in 0..=counts[e] {
                arcs.push((
                    (edge.id.clone(), 2 * k),
                    (edge.id.clone(), 2 * k + 1),
                    edge.id.clone(),
                ));
            }
        }
        Ok(SpatialDiagram::new(
            self.vertices.iter().map(|v| v.0.clone()).collect(),
            self.edges
                .iter()
                .map(|e| (e.id.clone(), e.u.clone(), e.v.clone()))
                .collect(),
            rotations,
            crossings,
            arcs,
            self.decorations.clone(),
        )?)
    }
}

fn dot(a: Point, b: Point) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: Point, b: Point) -> Point {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn normalize(a: Point) -> Point {
    let n = dot(a, a).sqrt();
    [a[0] / n, a[1] / n, a[2] / n]
}

/// Right-handed frame (ex, ey, ez) with ez along `view`.
fn frame(view: Point) -> (Point, Point, Point) {
    let ez = normalize(view);
    let helper = if ez[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let ex = normalize(cross3(helper, ez));
    let ey = cross3(ez, ex);
    // Keep the standard orientation when looking down the z-axis.
    if (ez[2] - 1.0).abs() < 1e-12 {
        return ([1.0, 0.0, 0.0], [0.0, 1.0, 0.0], ez);
    }
    (ex, ey, ez)
}

fn sub2(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

fn cross2(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn angle(v: [f64; 2]) -> f64 {
    v[1].atan2(v[0])
}

/// Proper intersection parameters of two projected segments. Shared
/// polyline endpoints (at vertices or between consecutive segments) are
/// ignored; any other touching is a degeneracy.
fn segment_hit(
    a0: [f64; 2],
    a1: [f64; 2],
    b0: [f64; 2],
    b1: [f64; 2],
    e1: usize,
    e2: usize,
) -> Result<Option<(f64, f64)>, GeometryError> {
    let same = |p: [f64; 2], q: [f64; 2]| (p[0] - q[0]).abs() < EPS && (p[1] - q[1]).abs() < EPS;
    let shared = same(a0, b0) || same(a0, b1) || same(a1, b0) || same(a1, b1);
    let da = sub2(a1, a0);
    let db = sub2(b1, b0);
    let denom = cross2(da, db);
    let w = sub2(b0, a0);
    if denom.abs() < 1e-12 {
        if cross2(w, da).abs() < 1e-12 && !shared {
            // Collinear: overlapping projections are degenerate.
            let len = dot2(da, da);
            let t0 = dot2(w, da) / len;
            let t1 = dot2(sub2(b1, a0), da) / len;
            if t0.max(t1) > -EPS && t0.min(t1) < 1.0 + EPS {
                return Err(GeometryError::Degenerate(format!(
                    "collinear strands on edges #{e1} and #{e2}"
                )));
            }
        }
        return Ok(None);
    }
    let s = cross2(w, db) / denom;
    let t = cross2(w, da) / denom;
    if shared {
        return Ok(None);
    }
    let tol = 1e-7;
    if s < -tol || s > 1.0 + tol || t < -tol || t > 1.0 + tol {
        return Ok(None);
    }
    if s < tol || s > 1.0 - tol || t < tol || t > 1.0 - tol {
        return Err(GeometryError::Degenerate(format!(
            "projection passes through a polyline corner (edges #{e1}, #{e2})"
        )));
    }
    Ok(Some((s, t)))
}

fn dot2(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

/// Points `f(s)` for `s = k/n`, `0 < k < n`.
pub fn sample(n: usize, f: impl Fn(f64) -> Point) -> Vec<Point> {
    (1..n).map(|k| f(k as f64 / n as f64)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::knot_from_embedding;
    use crate::knot::jones;
    use crate::laurent::LaurentPolynomial;
    use std::f64::consts::TAU;

    fn trefoil(view: Point) -> SpatialDiagram {
        let f = |t: f64| {
            let t = TAU * t;
            [
                t.sin() + 2.0 * (2.0 * t).sin(),
                t.cos() - 2.0 * (2.0 * t).cos(),
                -(3.0 * t).sin(),
            ]
        };
        let mut g = SpatialGraph3d::new();
        g.vertex("p", f(0.0))
            .vertex("q", f(1.0 / 3.0))
            .vertex("r", f(2.0 / 3.0))
            .edge("pq", "p", "q", sample(40, |s| f(s / 3.0)))
            .edge("qr", "q", "r", sample(40, |s| f((1.0 + s) / 3.0)))
            .edge("rp", "r", "p", sample(40, |s| f((2.0 + s) / 3.0)));
        g.project(view).unwrap()
    }

    #[test]
    fn trefoil_from_space_curve() {
        let d = trefoil([0.0, 0.0, 1.0]);
        assert_eq!(d.crossing_count(), 3);
        let j = jones(&knot_from_embedding(&d).unwrap()).unwrap();
        let right = LaurentPolynomial::from_terms([(-4, -1), (-3, 1), (-1, 1)]);
        assert!(j == right || j == right.invert());
    }

    #[test]
    fn jones_independent_of_view() {
        let base = jones(&knot_from_embedding(&trefoil([0.0, 0.0, 1.0])).unwrap()).unwrap();
        for view in [[0.3, 0.2, 1.0], [1.0, 0.4, 0.3], [0.1, 1.0, -0.2]] {
            let d = trefoil(view);
            let j = jones(&knot_from_embedding(&d).unwrap()).unwrap();
            assert_eq!(
                j,
                base,
                "view {view:?} with {} crossings",
                d.crossing_count()
            );
        }
    }

    #[test]
    fn spatial_collision_rejected() {
        let mut g = SpatialGraph3d::new();
        g.vertex("a", [-1.0, 0.0, 0.0])
            .vertex("b", [1.0, 0.0, 0.0])
            .vertex("c", [0.0, -1.0, 0.0])
            .vertex("d", [0.0, 1.0, 0.0])
            .edge("ab", "a", "b", vec![])
            .edge("cd", "c", "d", vec![]);
        assert!(matches!(
            g.project([0.0, 0.0, 1.0]),
            Err(GeometryError::Degenerate(_))
        ));
    }
}
