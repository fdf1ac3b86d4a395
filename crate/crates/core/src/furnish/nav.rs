//! Local navigability guard for floor placement. A room's free floor stays
//! in one piece that reaches every doorway and open-wall clearance, sampled
//! on the same grid the validator uses.

use std::collections::VecDeque;

use crate::geom::{point_in_polygon, point_segment_distance, Rect, Vec2};

/// Grid the guard samples: global origin, cell size, agent radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NavSpec {
    pub origin: Vec2,
    pub cell: f64,
    pub radius: f64,
    /// Smallest component that counts as navigable.
    pub min_cells: usize,
}

#[derive(Debug, Clone)]
pub struct NavGuard {
    spec: NavSpec,
    x0: i64,
    z0: i64,
    nx: usize,
    nz: usize,
    free: Vec<bool>,
    /// Cells of each clearance zone that are free in the empty room.
    zones: Vec<Vec<usize>>,
    active: bool,
}

impl NavGuard {
    /// Every polygon edge counts as a wall, doorways included; that only
    /// trims cells right at the opening, which the clearance zones extend past.
    pub fn new(spec: NavSpec, polygon: &[Vec2], keep_clear: &[Rect]) -> Self {
        let (mut lo, mut hi) = (Vec2::new(f64::MAX, f64::MAX), Vec2::new(f64::MIN, f64::MIN));
        for p in polygon {
            lo = Vec2::new(lo.x.min(p.x), lo.z.min(p.z));
            hi = Vec2::new(hi.x.max(p.x), hi.z.max(p.z));
        }
        let x0 = ((lo.x - spec.origin.x) / spec.cell).floor() as i64;
        let z0 = ((lo.z - spec.origin.z) / spec.cell).floor() as i64;
        let nx = (((hi.x - spec.origin.x) / spec.cell).ceil() as i64 - x0).max(0) as usize;
        let nz = (((hi.z - spec.origin.z) / spec.cell).ceil() as i64 - z0).max(0) as usize;
        let mut g = NavGuard { spec, x0, z0, nx, nz, free: vec![false; nx * nz], zones: vec![], active: false };
        let n = polygon.len();
        for i in 0..nx * nz {
            let c = g.center(i);
            g.free[i] = point_in_polygon(c, polygon)
                && (0..n).all(|k| point_segment_distance(c, polygon[k], polygon[(k + 1) % n]) >= spec.radius);
        }
        g.zones = keep_clear
            .iter()
            .map(|z| (0..nx * nz).filter(|&i| g.free[i] && z.contains_point(g.center(i))).collect::<Vec<_>>())
            .filter(|cells: &Vec<usize>| !cells.is_empty())
            .collect();
        g.active = g.holds(&g.free);
        g
    }

    fn center(&self, i: usize) -> Vec2 {
        let (x, z) = ((i % self.nx) as i64 + self.x0, (i / self.nx) as i64 + self.z0);
        Vec2::new(
            self.spec.origin.x + (x as f64 + 0.5) * self.spec.cell,
            self.spec.origin.z + (z as f64 + 0.5) * self.spec.cell,
        )
    }

    /// False only when the empty room already fails; the guard then stays out
    /// of the way and the validator decides.
    pub fn active(&self) -> bool {
        self.active
    }

    fn blocked_by(&self, free: &mut [bool], footprints: &[Rect]) {
        for (i, f) in free.iter_mut().enumerate() {
            if *f && footprints.iter().any(|r| r.distance_to(self.center(i)) < self.spec.radius) {
                *f = false;
            }
        }
    }

    /// Free floor forms a single component of at least `min_cells` cells
    /// that touches every clearance zone.
    fn holds(&self, free: &[bool]) -> bool {
        let Some(s) = free.iter().position(|&f| f) else { return false };
        let mut seen = vec![false; free.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        let mut size = 0;
        while let Some(i) = q.pop_front() {
            size += 1;
            let (x, z) = (i % self.nx, i / self.nx);
            let ns = [
                (x > 0).then(|| i - 1),
                (x + 1 < self.nx).then(|| i + 1),
                (z > 0).then(|| i - self.nx),
                (z + 1 < self.nz).then(|| i + self.nx),
            ];
            for n in ns.into_iter().flatten() {
                if free[n] && !seen[n] {
                    seen[n] = true;
                    q.push_back(n);
                }
            }
        }
        size >= self.spec.min_cells
            && size == free.iter().filter(|&&f| f).count()
            && self.zones.iter().all(|z| z.iter().any(|&i| seen[i]))
    }

    /// Whether adding these footprints keeps the room navigable.
    pub fn allows(&self, footprints: &[Rect]) -> bool {
        if !self.active {
            return true;
        }
        let mut free = self.free.clone();
        self.blocked_by(&mut free, footprints);
        self.holds(&free)
    }

    pub fn commit(&mut self, footprints: &[Rect]) {
        let mut free = std::mem::take(&mut self.free);
        self.blocked_by(&mut free, footprints);
        self.free = free;
    }
}
