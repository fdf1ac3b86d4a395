//! Independent reference implementations the generator is checked against.

use std::collections::BTreeSet;

use rand::Rng;
use statrs::distribution::{Beta, ContinuousCDF};

use prochouse::furnish::OpenArea;
use prochouse::geom::{Rect, Vec2};

/// Depth-first flood fill over 4-neighbors from `seed`.
pub fn flood_fill(free: &[bool], nx: usize, nz: usize, seed: usize) -> Vec<bool> {
    let mut seen = vec![false; free.len()];
    if !free[seed] {
        return seen;
    }
    let mut stack = vec![(seed % nx, seed / nx)];
    seen[seed] = true;
    while let Some((x, z)) = stack.pop() {
        let cand = [
            (x as i64 - 1, z as i64),
            (x as i64 + 1, z as i64),
            (x as i64, z as i64 - 1),
            (x as i64, z as i64 + 1),
        ];
        for (cx, cz) in cand {
            if cx < 0 || cz < 0 || cx >= nx as i64 || cz >= nz as i64 {
                continue;
            }
            let i = cz as usize * nx + cx as usize;
            if free[i] && !seen[i] {
                seen[i] = true;
                stack.push((cx as usize, cz as usize));
            }
        }
    }
    seen
}

/// Free unit cells of an integer-grid area.
#[derive(Debug, Clone)]
pub struct CellShape {
    pub n: usize,
    pub cells: Vec<bool>,
}

impl CellShape {
    pub fn get(&self, x: i64, z: i64) -> bool {
        x >= 0 && z >= 0 && (x as usize) < self.n && (z as usize) < self.n && self.cells[z as usize * self.n + x as usize]
    }
}

/// Every maximal all-free rectangle, as integer bounds `(x0, z0, x1, z1)`.
pub fn brute_maximal_rects(s: &CellShape) -> BTreeSet<(i64, i64, i64, i64)> {
    let n = s.n as i64;
    let full = |x0: i64, z0: i64, x1: i64, z1: i64| {
        x0 >= 0 && z0 >= 0 && x1 <= n && z1 <= n && (z0..z1).all(|z| (x0..x1).all(|x| s.get(x, z)))
    };
    let mut out = BTreeSet::new();
    for x0 in 0..n {
        for x1 in x0 + 1..=n {
            for z0 in 0..n {
                for z1 in z0 + 1..=n {
                    if !full(x0, z0, x1, z1) {
                        continue;
                    }
                    let grows = full(x0 - 1, z0, x1, z1)
                        || full(x0, z0, x1 + 1, z1)
                        || full(x0, z0 - 1, x1, z1)
                        || full(x0, z0, x1, z1 + 1);
                    if !grows {
                        out.insert((x0, z0, x1, z1));
                    }
                }
            }
        }
    }
    out
}

/// Counter-clockwise outline of a 4-connected, hole-free cell set with no
/// diagonal pinches.
pub fn trace_outline(s: &CellShape) -> Vec<Vec2> {
    use std::collections::BTreeMap;
    let mut next: BTreeMap<(i64, i64), (i64, i64)> = BTreeMap::new();
    let n = s.n as i64;
    for z in 0..n {
        for x in 0..n {
            if !s.get(x, z) {
                continue;
            }
            if !s.get(x, z - 1) {
                next.insert((x, z), (x + 1, z));
            }
            if !s.get(x + 1, z) {
                next.insert((x + 1, z), (x + 1, z + 1));
            }
            if !s.get(x, z + 1) {
                next.insert((x + 1, z + 1), (x, z + 1));
            }
            if !s.get(x - 1, z) {
                next.insert((x, z + 1), (x, z));
            }
        }
    }
    let start = *next.keys().next().expect("nonempty shape");
    let mut pts = vec![start];
    let mut cur = next[&start];
    while cur != start {
        pts.push(cur);
        cur = next[&cur];
    }
    // drop collinear vertices
    let k = pts.len();
    let keep: Vec<(i64, i64)> = (0..k)
        .filter(|&i| {
            let (a, b, c) = (pts[(i + k - 1) % k], pts[i], pts[(i + 1) % k]);
            (b.0 - a.0) * (c.1 - b.1) - (b.1 - a.1) * (c.0 - b.0) != 0
        })
        .map(|i| pts[i])
        .collect();
    keep.into_iter().map(|(x, z)| Vec2::new(x as f64, z as f64)).collect()
}

fn component(member: impl Fn(i64, i64) -> bool, start: (i64, i64), lo: i64, hi: i64) -> usize {
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((x, z)) = stack.pop() {
        for (a, b) in [(x - 1, z), (x + 1, z), (x, z - 1), (x, z + 1)] {
            if a >= lo && b >= lo && a < hi && b < hi && member(a, b) && seen.insert((a, b)) {
                stack.push((a, b));
            }
        }
    }
    seen.len()
}

fn well_formed(s: &CellShape) -> bool {
    let n = s.n as i64;
    let count = s.cells.iter().filter(|&&c| c).count();
    let Some(first) = s.cells.iter().position(|&c| c) else { return false };
    let start = ((first % s.n) as i64, (first / s.n) as i64);
    if component(|x, z| s.get(x, z), start, 0, n) != count {
        return false;
    }
    // hole-free: the complement, padded by one ring, is connected
    let outside = ((n + 2) * (n + 2)) as usize - count;
    if component(|x, z| !s.get(x, z), (-1, -1), -1, n + 1) != outside {
        return false;
    }
    // no two cells meeting only at a corner
    for z in -1..n {
        for x in -1..n {
            let (a, b, c, d) = (s.get(x, z), s.get(x + 1, z), s.get(x, z + 1), s.get(x + 1, z + 1));
            if (a && d && !b && !c) || (b && c && !a && !d) {
                return false;
            }
        }
    }
    true
}

/// A random rectilinear area on an `n`×`n` grid: a grown cell blob as the
/// outline plus up to two integer rectangles cut out of it.
pub fn random_area<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (OpenArea, CellShape) {
    loop {
        let mut s = CellShape { n, cells: vec![false; n * n] };
        let start = rng.random_range(0..n * n);
        s.cells[start] = true;
        let target = rng.random_range(1..=n * n * 3 / 4);
        let mut placed = 1;
        let mut tries = 0;
        while placed < target && tries < 20 * n * n {
            tries += 1;
            let i = rng.random_range(0..n * n);
            let (x, z) = ((i % n) as i64, (i / n) as i64);
            if s.cells[i] || !(s.get(x - 1, z) || s.get(x + 1, z) || s.get(x, z - 1) || s.get(x, z + 1)) {
                continue;
            }
            s.cells[i] = true;
            if well_formed(&s) {
                placed += 1;
            } else {
                s.cells[i] = false;
            }
        }
        if !well_formed(&s) {
            continue;
        }
        let outer = trace_outline(&s);
        let mut holes = Vec::new();
        for _ in 0..rng.random_range(0..=2) {
            let x0 = rng.random_range(0..n as i64);
            let z0 = rng.random_range(0..n as i64);
            let x1 = rng.random_range(x0 + 1..=n as i64);
            let z1 = rng.random_range(z0 + 1..=n as i64);
            holes.push(Rect::from_bounds(x0 as f64, z0 as f64, x1 as f64, z1 as f64));
            for z in z0..z1 {
                for x in x0..x1 {
                    s.cells[z as usize * n + x as usize] = false;
                }
            }
        }
        return (OpenArea { outer, holes }, s);
    }
}

/// Exact PMF of `floor(10 * Beta(a, b) + 1/2)` on `0..=10`.
pub fn cut_count_pmf(a: f64, b: f64) -> Vec<f64> {
    let d = Beta::new(a, b).expect("valid Beta");
    (0..=10)
        .map(|k| {
            let lo = ((k as f64 - 0.5) / 10.0).clamp(0.0, 1.0);
            let hi = ((k as f64 + 0.5) / 10.0).clamp(0.0, 1.0);
            d.cdf(hi) - d.cdf(lo)
        })
        .collect()
}

pub fn tv_distance(p: &[f64], q: &[f64]) -> f64 {
    let n = p.len().max(q.len());
    (0..n).map(|i| (p.get(i).unwrap_or(&0.0) - q.get(i).unwrap_or(&0.0)).abs()).sum::<f64>() / 2.0
}

/// Closed segments `ab` and `cd` share a point (parametric form).
pub fn segments_cross(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> bool {
    let r = (b.x - a.x, b.z - a.z);
    let s = (d.x - c.x, d.z - c.z);
    let den = r.0 * s.1 - r.1 * s.0;
    let qp = (c.x - a.x, c.z - a.z);
    if den.abs() < 1e-12 {
        // parallel: only collinear overlap counts
        if (qp.0 * r.1 - qp.1 * r.0).abs() > 1e-12 {
            return false;
        }
        let rr = r.0 * r.0 + r.1 * r.1;
        let t0 = (qp.0 * r.0 + qp.1 * r.1) / rr;
        let t1 = t0 + (s.0 * r.0 + s.1 * r.1) / rr;
        return t0.min(t1) <= 1.0 && t0.max(t1) >= 0.0;
    }
    let t = (qp.0 * s.1 - qp.1 * s.0) / den;
    let u = (qp.0 * r.1 - qp.1 * r.0) / den;
    (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u)
}
