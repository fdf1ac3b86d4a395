//! Maximal-rectangle decomposition of free floor space.

use crate::geom::{point_in_polygon, Rect, Vec2};

const TOL: f64 = 1e-9;

/// Free floor: a rectilinear polygon minus rectangular holes.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OpenArea {
    pub outer: Vec<Vec2>,
    pub holes: Vec<Rect>,
}

/// Divider grid through every corner of the outline and the holes, with a
/// free flag per cell.
struct Grid {
    xs: Vec<f64>,
    zs: Vec<f64>,
    free: Vec<bool>,
}

impl Grid {
    fn build(area: &OpenArea) -> Option<Grid> {
        if area.outer.len() < 3 {
            return None;
        }
        let (mut x0, mut z0, mut x1, mut z1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for p in &area.outer {
            x0 = x0.min(p.x);
            z0 = z0.min(p.z);
            x1 = x1.max(p.x);
            z1 = z1.max(p.z);
        }
        let mut xs: Vec<f64> = area.outer.iter().map(|p| p.x).collect();
        let mut zs: Vec<f64> = area.outer.iter().map(|p| p.z).collect();
        for h in &area.holes {
            xs.extend([h.min.x.clamp(x0, x1), h.max.x.clamp(x0, x1)]);
            zs.extend([h.min.z.clamp(z0, z1), h.max.z.clamp(z0, z1)]);
        }
        let xs = dedup_sorted(xs);
        let zs = dedup_sorted(zs);
        if xs.len() < 2 || zs.len() < 2 {
            return None;
        }
        let (nx, nz) = (xs.len() - 1, zs.len() - 1);
        let mut free = vec![false; nx * nz];
        for j in 0..nz {
            for i in 0..nx {
                let c = Vec2::new((xs[i] + xs[i + 1]) / 2.0, (zs[j] + zs[j + 1]) / 2.0);
                free[j * nx + i] =
                    point_in_polygon(c, &area.outer) && !area.holes.iter().any(|h| h.contains_point_strict(c));
            }
        }
        Some(Grid { xs, zs, free })
    }

    fn nx(&self) -> usize {
        self.xs.len() - 1
    }

    fn row_free(&self, j: usize, i0: usize, i1: usize) -> bool {
        let nx = self.nx();
        (i0..=i1).all(|i| self.free[j * nx + i])
    }
}

fn dedup_sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::with_capacity(v.len());
    for x in v {
        if out.last().is_none_or(|&l| x - l > TOL) {
            out.push(x);
        }
    }
    out
}

/// Free area of the region.
pub fn open_area(area: &OpenArea) -> f64 {
    let Some(g) = Grid::build(area) else { return 0.0 };
    let nx = g.nx();
    let mut a = 0.0;
    for j in 0..g.zs.len() - 1 {
        for i in 0..nx {
            if g.free[j * nx + i] {
                a += (g.xs[i + 1] - g.xs[i]) * (g.zs[j + 1] - g.zs[j]);
            }
        }
    }
    a
}

/// Every maximal axis-aligned rectangle on the divider grid that lies in the
/// free area, largest first, ties broken by position.
pub fn decompose_open_area(area: &OpenArea) -> Vec<Rect> {
    let Some(g) = Grid::build(area) else { return Vec::new() };
    let (nx, nz) = (g.nx(), g.zs.len() - 1);
    let mut out = Vec::new();
    for a in 0..nz {
        let mut cols = vec![true; nx];
        for b in a..nz {
            for (i, c) in cols.iter_mut().enumerate() {
                *c &= g.free[b * nx + i];
            }
            if !cols.iter().any(|&c| c) {
                break;
            }
            let mut i = 0;
            while i < nx {
                if !cols[i] {
                    i += 1;
                    continue;
                }
                let i0 = i;
                while i + 1 < nx && cols[i + 1] {
                    i += 1;
                }
                let i1 = i;
                i += 1;
                let grows_down = a > 0 && g.row_free(a - 1, i0, i1);
                let grows_up = b + 1 < nz && g.row_free(b + 1, i0, i1);
                if !grows_down && !grows_up {
                    out.push(Rect::from_bounds(g.xs[i0], g.zs[a], g.xs[i1 + 1], g.zs[b + 1]));
                }
            }
        }
    }
    out.sort_by(|p, q| {
        q.area()
            .total_cmp(&p.area())
            .then(p.min.x.total_cmp(&q.min.x))
            .then(p.min.z.total_cmp(&q.min.z))
            .then(p.max.x.total_cmp(&q.max.x))
            .then(p.max.z.total_cmp(&q.max.z))
    });
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn square(x0: f64, z0: f64, x1: f64, z1: f64) -> Vec<Vec2> {
        vec![Vec2::new(x0, z0), Vec2::new(x1, z0), Vec2::new(x1, z1), Vec2::new(x0, z1)]
    }

    fn dims(rs: &[Rect]) -> Vec<(f64, f64)> {
        rs.iter().map(|r| (r.width(), r.depth())).collect()
    }

    #[test]
    fn empty_area() {
        assert!(decompose_open_area(&OpenArea::default()).is_empty());
        let full_hole = OpenArea { outer: square(0.0, 0.0, 2.0, 2.0), holes: vec![Rect::from_bounds(-1.0, -1.0, 3.0, 3.0)] };
        assert!(decompose_open_area(&full_hole).is_empty());
        assert_eq!(open_area(&full_hole), 0.0);
    }

    #[test]
    fn full_square() {
        let a = OpenArea { outer: square(0.0, 0.0, 3.0, 3.0), holes: vec![] };
        assert_eq!(dims(&decompose_open_area(&a)), vec![(3.0, 3.0)]);
    }

    #[test]
    fn l_shape() {
        // 3x3 minus the 1x1 north-east corner
        let a = OpenArea { outer: square(0.0, 0.0, 3.0, 3.0), holes: vec![Rect::from_bounds(2.0, 2.0, 3.0, 3.0)] };
        let rs = decompose_open_area(&a);
        assert_eq!(rs.len(), 2);
        assert_eq!(rs[0].area(), 6.0);
        let mut d = dims(&rs);
        d.sort_by(|p, q| p.0.total_cmp(&q.0));
        assert_eq!(d, vec![(2.0, 3.0), (3.0, 2.0)]);
        // same shape given as an outline
        let outline = vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(3.0, 0.0),
            Vec2::new(3.0, 2.0),
            Vec2::new(2.0, 2.0),
            Vec2::new(2.0, 3.0),
            Vec2::new(0.0, 3.0),
        ];
        assert_eq!(decompose_open_area(&OpenArea { outer: outline, holes: vec![] }), rs);
        assert_eq!(open_area(&a), 8.0);
    }

    #[test]
    fn hole_in_middle() {
        let a = OpenArea { outer: square(0.0, 0.0, 3.0, 3.0), holes: vec![Rect::from_bounds(1.0, 1.0, 2.0, 2.0)] };
        let rs = decompose_open_area(&a);
        assert_eq!(rs.len(), 4);
        assert!(rs.iter().all(|r| r.area() == 3.0));
    }

    #[test]
    fn hole_sticking_out_is_clipped() {
        let a = OpenArea { outer: square(0.0, 0.0, 4.0, 2.0), holes: vec![Rect::from_bounds(3.0, -1.0, 5.0, 3.0)] };
        assert_eq!(dims(&decompose_open_area(&a)), vec![(3.0, 2.0)]);
    }

    #[test]
    fn near_coincident_coordinates_merge() {
        let a = OpenArea {
            outer: square(0.0, 0.0, 3.0, 3.0),
            holes: vec![Rect::from_bounds(2.0 + 1e-12, 0.0, 3.0, 1.0)],
        };
        let rs = decompose_open_area(&a);
        assert!(rs.iter().all(|r| r.width() > 1e-6 && r.depth() > 1e-6));
        assert_eq!(rs.len(), 2);
    }
}
