//! Planar (top-down x/z) and box geometry shared by every stage.
//!
//! World axes: `x` to the right, `z` forward (up in a top-down view), `y` up.
//! Polygons are counter-clockwise in the x/z plane.

use serde::{Deserialize, Serialize};

pub const EPS: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub z: f64,
}

impl Vec2 {
    pub const fn new(x: f64, z: f64) -> Self {
        Self { x, z }
    }

    pub fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.z + o.z)
    }

    pub fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.z - o.z)
    }

    pub fn scale(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.z * s)
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.z * o.z
    }

    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.z - self.z * o.x
    }

    pub fn length(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dist(self, o: Vec2) -> f64 {
        self.sub(o).length()
    }

    /// Left-hand normal of a direction; for a CCW boundary this points inside.
    pub fn left_normal(self) -> Vec2 {
        Vec2::new(-self.z, self.x)
    }

    pub fn approx_eq(self, o: Vec2) -> bool {
        (self.x - o.x).abs() < EPS && (self.z - o.z).abs() < EPS
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn xz(self) -> Vec2 {
        Vec2::new(self.x, self.z)
    }

    pub fn dist(self, o: Vec3) -> f64 {
        ((self.x - o.x).powi(2) + (self.y - o.y).powi(2) + (self.z - o.z).powi(2)).sqrt()
    }
}

/// Axis-aligned rectangle in the x/z plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub min: Vec2,
    pub max: Vec2,
}

impl Rect {
    pub fn new(min: Vec2, max: Vec2) -> Self {
        Self { min, max }
    }

    pub fn from_bounds(x0: f64, z0: f64, x1: f64, z1: f64) -> Self {
        Self::new(Vec2::new(x0.min(x1), z0.min(z1)), Vec2::new(x0.max(x1), z0.max(z1)))
    }

    pub fn from_center(c: Vec2, w: f64, d: f64) -> Self {
        Self::from_bounds(c.x - w / 2.0, c.z - d / 2.0, c.x + w / 2.0, c.z + d / 2.0)
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn depth(&self) -> f64 {
        self.max.z - self.min.z
    }

    pub fn area(&self) -> f64 {
        self.width().max(0.0) * self.depth().max(0.0)
    }

    pub fn center(&self) -> Vec2 {
        Vec2::new((self.min.x + self.max.x) / 2.0, (self.min.z + self.max.z) / 2.0)
    }

    pub fn corners(&self) -> [Vec2; 4] {
        [
            self.min,
            Vec2::new(self.max.x, self.min.z),
            self.max,
            Vec2::new(self.min.x, self.max.z),
        ]
    }

    /// Interiors intersect with positive area (touching edges do not count).
    pub fn overlaps(&self, o: &Rect) -> bool {
        self.min.x < o.max.x - EPS
            && o.min.x < self.max.x - EPS
            && self.min.z < o.max.z - EPS
            && o.min.z < self.max.z - EPS
    }

    pub fn contains_rect(&self, o: &Rect) -> bool {
        o.min.x >= self.min.x - EPS
            && o.max.x <= self.max.x + EPS
            && o.min.z >= self.min.z - EPS
            && o.max.z <= self.max.z + EPS
    }

    pub fn contains_point(&self, p: Vec2) -> bool {
        p.x >= self.min.x - EPS && p.x <= self.max.x + EPS && p.z >= self.min.z - EPS && p.z <= self.max.z + EPS
    }

    /// Strictly inside (open rectangle).
    pub fn contains_point_strict(&self, p: Vec2) -> bool {
        p.x > self.min.x + EPS && p.x < self.max.x - EPS && p.z > self.min.z + EPS && p.z < self.max.z - EPS
    }

    pub fn intersection(&self, o: &Rect) -> Option<Rect> {
        let r = Rect::new(
            Vec2::new(self.min.x.max(o.min.x), self.min.z.max(o.min.z)),
            Vec2::new(self.max.x.min(o.max.x), self.max.z.min(o.max.z)),
        );
        (r.width() > EPS && r.depth() > EPS).then_some(r)
    }

    pub fn union(&self, o: &Rect) -> Rect {
        Rect::new(
            Vec2::new(self.min.x.min(o.min.x), self.min.z.min(o.min.z)),
            Vec2::new(self.max.x.max(o.max.x), self.max.z.max(o.max.z)),
        )
    }

    pub fn translate(&self, d: Vec2) -> Rect {
        Rect::new(self.min.add(d), self.max.add(d))
    }

    pub fn inflate(&self, m: f64) -> Rect {
        Rect::new(Vec2::new(self.min.x - m, self.min.z - m), Vec2::new(self.max.x + m, self.max.z + m))
    }

    /// Euclidean distance from a point to the rectangle (0 inside).
    pub fn distance_to(&self, p: Vec2) -> f64 {
        let dx = (self.min.x - p.x).max(0.0).max(p.x - self.max.x);
        let dz = (self.min.z - p.z).max(0.0).max(p.z - self.max.z);
        (dx * dx + dz * dz).sqrt()
    }

    /// Whether the segment `a..b` passes through the open interior.
    pub fn segment_crosses_interior(&self, a: Vec2, b: Vec2) -> bool {
        // Liang-Barsky clip against the slightly shrunk rectangle.
        let inner = self.inflate(-EPS);
        if inner.width() <= 0.0 || inner.depth() <= 0.0 {
            return false;
        }
        let d = b.sub(a);
        let mut t0 = 0.0_f64;
        let mut t1 = 1.0_f64;
        for (p, q) in [
            (-d.x, a.x - inner.min.x),
            (d.x, inner.max.x - a.x),
            (-d.z, a.z - inner.min.z),
            (d.z, inner.max.z - a.z),
        ] {
            if p.abs() < 1e-15 {
                if q < 0.0 {
                    return false;
                }
            } else {
                let t = q / p;
                if p < 0.0 {
                    t0 = t0.max(t);
                } else {
                    t1 = t1.min(t);
                }
                if t0 > t1 {
                    return false;
                }
            }
        }
        t1 - t0 > 1e-12
    }
}

/// Axis-aligned 3D box, used for clip tests between co-placed assets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aabb {
    pub footprint: Rect,
    pub y0: f64,
    pub y1: f64,
}

impl Aabb {
    pub fn overlaps(&self, o: &Aabb) -> bool {
        self.footprint.overlaps(&o.footprint) && self.y0 < o.y1 - EPS && o.y0 < self.y1 - EPS
    }
}

/// Signed area; positive for counter-clockwise polygons.
pub fn signed_area(poly: &[Vec2]) -> f64 {
    let n = poly.len();
    let mut s = 0.0;
    for i in 0..n {
        s += poly[i].cross(poly[(i + 1) % n]);
    }
    s / 2.0
}

pub fn polygon_area(poly: &[Vec2]) -> f64 {
    signed_area(poly).abs()
}

/// Area centroid of a simple polygon.
pub fn centroid(poly: &[Vec2]) -> Vec2 {
    let n = poly.len();
    let a = signed_area(poly);
    if a.abs() < 1e-12 {
        let s = poly.iter().fold(Vec2::new(0.0, 0.0), |acc, p| acc.add(*p));
        return s.scale(1.0 / n as f64);
    }
    let (mut cx, mut cz) = (0.0, 0.0);
    for i in 0..n {
        let p = poly[i];
        let q = poly[(i + 1) % n];
        let c = p.cross(q);
        cx += (p.x + q.x) * c;
        cz += (p.z + q.z) * c;
    }
    Vec2::new(cx / (6.0 * a), cz / (6.0 * a))
}

/// Even-odd point-in-polygon test. Points on the boundary may go either way.
pub fn point_in_polygon(p: Vec2, poly: &[Vec2]) -> bool {
    let n = poly.len();
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (a, b) = (poly[i], poly[j]);
        if (a.z > p.z) != (b.z > p.z) {
            let x = (b.x - a.x) * (p.z - a.z) / (b.z - a.z) + a.x;
            if p.x < x {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

pub fn point_segment_distance(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b.sub(a);
    let len2 = ab.dot(ab);
    if len2 < 1e-18 {
        return p.dist(a);
    }
    let t = (p.sub(a).dot(ab) / len2).clamp(0.0, 1.0);
    p.dist(a.add(ab.scale(t)))
}

pub fn distance_to_boundary(p: Vec2, poly: &[Vec2]) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| point_segment_distance(p, poly[i], poly[(i + 1) % n]))
        .fold(f64::INFINITY, f64::min)
}

/// Strictly inside: in the polygon and not within `EPS` of its boundary.
pub fn point_strictly_inside(p: Vec2, poly: &[Vec2]) -> bool {
    point_in_polygon(p, poly) && distance_to_boundary(p, poly) > EPS
}

/// Proper or touching intersection of two closed segments.
pub fn segments_intersect(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> bool {
    fn orient(a: Vec2, b: Vec2, c: Vec2) -> f64 {
        b.sub(a).cross(c.sub(a))
    }
    fn on_seg(a: Vec2, b: Vec2, p: Vec2) -> bool {
        p.x >= a.x.min(b.x) - EPS && p.x <= a.x.max(b.x) + EPS && p.z >= a.z.min(b.z) - EPS && p.z <= a.z.max(b.z) + EPS
    }
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > EPS && d2 < -EPS) || (d1 < -EPS && d2 > EPS)) && ((d3 > EPS && d4 < -EPS) || (d3 < -EPS && d4 > EPS)) {
        return true;
    }
    (d1.abs() <= EPS && on_seg(c, d, a))
        || (d2.abs() <= EPS && on_seg(c, d, b))
        || (d3.abs() <= EPS && on_seg(a, b, c))
        || (d4.abs() <= EPS && on_seg(a, b, d))
}

/// Whether rectangle `r` lies inside polygon `poly` (touching the boundary
/// is allowed).
pub fn rect_in_polygon(r: &Rect, poly: &[Vec2]) -> bool {
    let n = poly.len();
    if (0..n).any(|i| r.segment_crosses_interior(poly[i], poly[(i + 1) % n])) {
        return false;
    }
    point_in_polygon(r.center(), poly)
}

/// Approximate pole of inaccessibility: the interior point farthest from the
/// boundary, found by a coarse grid scan refined around the best candidate.
pub fn pole_of_inaccessibility(poly: &[Vec2]) -> Vec2 {
    let (mut x0, mut z0, mut x1, mut z1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in poly {
        x0 = x0.min(p.x);
        z0 = z0.min(p.z);
        x1 = x1.max(p.x);
        z1 = z1.max(p.z);
    }
    let mut best = centroid(poly);
    let mut best_d = if point_in_polygon(best, poly) { distance_to_boundary(best, poly) } else { -1.0 };
    let mut step = ((x1 - x0).max(z1 - z0)) / 32.0;
    let (mut cx0, mut cz0, mut cx1, mut cz1) = (x0, z0, x1, z1);
    for _ in 0..4 {
        let mut z = cz0 + step / 2.0;
        while z < cz1 {
            let mut x = cx0 + step / 2.0;
            while x < cx1 {
                let p = Vec2::new(x, z);
                if point_in_polygon(p, poly) {
                    let d = distance_to_boundary(p, poly);
                    if d > best_d + 1e-12 {
                        best_d = d;
                        best = p;
                    }
                }
                x += step;
            }
            z += step;
        }
        cx0 = best.x - step;
        cx1 = best.x + step;
        cz0 = best.z - step;
        cz1 = best.z + step;
        step /= 8.0;
    }
    best
}

/// Rotation about +y by a multiple of 90 degrees. Rotation 0 faces +z and 90
/// faces +x.
pub fn rotate(v: Vec2, degrees: i32) -> Vec2 {
    match degrees.rem_euclid(360) {
        0 => v,
        90 => Vec2::new(v.z, -v.x),
        180 => Vec2::new(-v.x, -v.z),
        270 => Vec2::new(-v.z, v.x),
        d => {
            let r = (d as f64).to_radians();
            Vec2::new(v.x * r.cos() + v.z * r.sin(), -v.x * r.sin() + v.z * r.cos())
        }
    }
}

/// Facing direction for a rotation.
pub fn facing(degrees: i32) -> Vec2 {
    rotate(Vec2::new(0.0, 1.0), degrees)
}

/// Rotation whose facing direction is the given axis-aligned unit vector.
pub fn rotation_facing(dir: Vec2) -> i32 {
    if dir.z > 0.5 {
        0
    } else if dir.x > 0.5 {
        90
    } else if dir.z < -0.5 {
        180
    } else {
        270
    }
}

/// World-space footprint extents (x, z) of a box with local width `w` (x) and
/// depth `d` (z) after rotation.
pub fn rotated_extents(w: f64, d: f64, degrees: i32) -> (f64, f64) {
    if degrees.rem_euclid(180) == 90 {
        (d, w)
    } else {
        (w, d)
    }
}
