//! Top-down SVG floor plans.

use std::fmt::Write;

use crate::house::House;
use crate::roomspec::RoomType;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgOptions {
    /// Pixels per meter.
    pub scale: f64,
    /// Border around the house, meters.
    pub margin: f64,
    pub draw_objects: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self { scale: 40.0, margin: 0.5, draw_objects: true }
    }
}

pub fn room_color(t: RoomType) -> &'static str {
    match t {
        RoomType::Bedroom => "#f4c7a1",
        RoomType::Bathroom => "#a9d4e8",
        RoomType::Kitchen => "#c9e3a6",
        RoomType::LivingRoom => "#e6c2e0",
    }
}

/// Render the house seen from above, north (+z) up. Rooms are filled by
/// type, objects drawn as their footprints, doors and windows as thick
/// strokes on the walls.
pub fn render_svg(house: &House, opts: &SvgOptions) -> String {
    let pts = house.rooms.iter().flat_map(|r| r.floor_polygon.iter());
    let (mut x0, mut z0, mut x1, mut z1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for (k, p) in pts.enumerate() {
        if k == 0 {
            (x0, z0, x1, z1) = (p.x, p.z, p.x, p.z);
        }
        x0 = x0.min(p.x);
        z0 = z0.min(p.z);
        x1 = x1.max(p.x);
        z1 = z1.max(p.z);
    }
    let m = opts.margin;
    let s = opts.scale;
    let px = |x: f64| (x - x0 + m) * s;
    let pz = |z: f64| (z1 - z + m) * s;
    let (w, h) = ((x1 - x0 + 2.0 * m) * s, (z1 - z0 + 2.0 * m) * s);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    for r in &house.rooms {
        let points: Vec<String> = r.floor_polygon.iter().map(|p| format!("{:.3},{:.3}", px(p.x), pz(p.z))).collect();
        let _ = writeln!(
            out,
            r##"<polygon class="room {t}" data-id="{id}" points="{p}" fill="{c}" stroke="#333333" stroke-width="2"/>"##,
            t = r.room_type,
            id = r.id,
            p = points.join(" "),
            c = room_color(r.room_type)
        );
    }
    if opts.draw_objects {
        for o in house.objects.iter().flat_map(|o| o.walk()) {
            let f = o.footprint();
            let _ = writeln!(
                out,
                r##"<rect class="object" data-id="{id}" data-room="{room}" data-rotation="{rot}" x="{x:.3}" y="{y:.3}" width="{w:.3}" height="{h:.3}" fill="#777777" fill-opacity="0.5" stroke="#222222" stroke-width="0.5"/>"##,
                id = o.id,
                room = o.room_id,
                rot = o.rotation,
                x = px(f.min.x),
                y = pz(f.max.z),
                w = f.width() * s,
                h = f.depth() * s,
            );
        }
    }
    let mut marker = |class: &str, id: &str, a: crate::geom::Vec2, b: crate::geom::Vec2, color: &str| {
        let _ = writeln!(
            out,
            r#"<line class="{class}" data-id="{id}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{color}" stroke-width="5"/>"#,
            px(a.x),
            pz(a.z),
            px(b.x),
            pz(b.z)
        );
    };
    for d in &house.doors {
        let wall = house.wall(&d.wall_id).expect("door wall exists");
        marker("door", &d.id, wall.point_at(d.offset), wall.point_at(d.offset + d.width), "#8b4513");
    }
    for o in &house.open_walls {
        let wall = house.wall(&o.wall_id).expect("open wall exists");
        marker("open-wall", &o.id, wall.point_at(o.offset), wall.point_at(o.offset + o.width), "#ffffff");
    }
    for win in &house.windows {
        let wall = house.wall(&win.wall_id).expect("window wall exists");
        marker("window", &win.id, wall.point_at(win.wall_offset), wall.point_at(win.wall_offset + win.size.x), "#1e90ff");
    }
    out.push_str("</svg>\n");
    out
}
