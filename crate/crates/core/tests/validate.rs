mod common;

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::oracle::{flood_fill, segments_cross};
use common::{add_door, add_open_wall, floor_object, house_of_rects};
use prochouse::geom::{Rect, Vec2};
use prochouse::house::{House, Object};
use prochouse::roomspec::RoomType;
use prochouse::validate::{
    reachable_positions, reachable_targets, sample_episode_target, validate_house, visibility_points,
    EpisodeTargetState, NavGrid, AGENT_RADIUS, CAMERA_HEIGHT, CELL_SIZE, NEAREST_CELLS, REACH_DISTANCE,
};
use prochouse::Error;

fn r(x0: f64, z0: f64, x1: f64, z1: f64) -> Rect {
    Rect::from_bounds(x0, z0, x1, z1)
}

fn seg_dist(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let (dx, dz) = (b.x - a.x, b.z - a.z);
    let t = (((p.x - a.x) * dx + (p.z - a.z) * dz) / (dx * dx + dz * dz)).clamp(0.0, 1.0);
    ((p.x - a.x - t * dx).powi(2) + (p.z - a.z - t * dz).powi(2)).sqrt()
}

fn rect_dist(p: Vec2, q: &Rect) -> f64 {
    let dx = (q.min.x - p.x).max(p.x - q.max.x).max(0.0);
    let dz = (q.min.z - p.z).max(p.z - q.max.z).max(0.0);
    (dx * dx + dz * dz).sqrt()
}

/// Occupancy computed from scratch: a cell is free when its center is in
/// some room and at least the agent radius from every listed solid wall and
/// obstacle.
fn oracle_free(g: &NavGrid, rooms: &[Rect], walls: &[(Vec2, Vec2)], obstacles: &[Rect]) -> Vec<bool> {
    (0..g.nx * g.nz)
        .map(|i| {
            let c = g.center(i);
            rooms.iter().any(|q| q.contains_point(c))
                && walls.iter().all(|(a, b)| seg_dist(c, *a, *b) >= AGENT_RADIUS)
                && obstacles.iter().all(|o| rect_dist(c, o) >= AGENT_RADIUS)
        })
        .collect()
}

fn edges(q: &Rect) -> Vec<(Vec2, Vec2)> {
    let p = common::rect_polygon(q);
    (0..4).map(|k| (p[k], p[(k + 1) % 4])).collect()
}

fn v(x: f64, z: f64) -> Vec2 {
    Vec2::new(x, z)
}

#[test]
fn empty_room_matches_flood_fill() {
    let room = r(0.0, 0.0, 4.0, 4.0);
    let h = house_of_rects(&[(RoomType::Bedroom, room)]);
    let g = reachable_positions(&h, AGENT_RADIUS, CELL_SIZE).unwrap();
    let free = oracle_free(&g, &[room], &edges(&room), &[]);
    assert_eq!(g.free, free);
    let seed = free.iter().position(|&f| f).unwrap();
    assert_eq!(g.seed, seed);
    assert_eq!(g.reachable, flood_fill(&free, g.nx, g.nz, seed));
    // centers 0.375..3.625 on both axes
    assert_eq!(g.reachable_count(), 14 * 14);
    assert!(validate_house(&h).pass);
}

#[test]
fn covered_room_has_no_free_cell() {
    let mut h = house_of_rects(&[(RoomType::Bedroom, r(0.0, 0.0, 4.0, 4.0))]);
    h.objects.push(floor_object("slab", "Bed", 0, v(2.0, 2.0), [4.0, 0.5, 4.0]));
    assert!(matches!(reachable_positions(&h, AGENT_RADIUS, CELL_SIZE), Err(Error::NoFreeCell)));
    let rep = validate_house(&h);
    assert!(!rep.pass);
    assert_eq!(rep.deficient_rooms, vec!["room|0".to_string()]);
}

fn two_rooms() -> (House, Rect, Rect) {
    let (a, b) = (r(0.0, 0.0, 4.0, 4.0), r(4.0, 0.0, 8.0, 4.0));
    (house_of_rects(&[(RoomType::Bedroom, a), (RoomType::Bathroom, b)]), a, b)
}

#[test]
fn open_wall_joins_rooms() {
    let (mut h, a, b) = two_rooms();
    add_open_wall(&mut h, 0, 1);
    let g = reachable_positions(&h, AGENT_RADIUS, CELL_SIZE).unwrap();
    let walls: Vec<_> = edges(&a).into_iter().chain(edges(&b)).filter(|(p, q)| !(p.x == 4.0 && q.x == 4.0)).collect();
    let free = oracle_free(&g, &[a, b], &walls, &[]);
    assert_eq!(g.free, free);
    assert_eq!(g.reachable, flood_fill(&free, g.nx, g.nz, g.seed));
    assert_eq!(g.reachable_count(), free.iter().filter(|&&f| f).count());
    assert!(g.room_counts(2).iter().all(|&c| c > 0));
    assert!(validate_house(&h).pass);
}

#[test]
fn rooms_without_an_opening_fail() {
    let (h, _, _) = two_rooms();
    let rep = validate_house(&h);
    assert!(!rep.pass);
    assert_eq!(rep.deficient_rooms, vec!["room|1".to_string()]);
}

#[test]
fn blocked_door_fails_and_names_the_cut_off_room() {
    let (mut h, a, b) = two_rooms();
    add_door(&mut h, 0, 1, 1.5, 1.0);
    assert!(validate_house(&h).pass);

    let block = r(3.0, 1.0, 4.0, 3.0);
    h.objects.push(floor_object("wardrobe", "Dresser", 0, block.center(), [1.0, 2.0, 2.0]));
    let rep = validate_house(&h);
    assert!(!rep.pass);
    assert_eq!(rep.deficient_rooms, vec!["room|1".to_string()]);

    // the oracle agrees the far room is cut off
    let g = reachable_positions(&h, AGENT_RADIUS, CELL_SIZE).unwrap();
    let door = (v(4.0, 1.5), v(4.0, 2.5));
    let mut walls: Vec<_> = edges(&a).into_iter().chain(edges(&b)).filter(|(p, q)| !(p.x == 4.0 && q.x == 4.0)).collect();
    walls.extend([(v(4.0, 0.0), door.0), (door.1, v(4.0, 4.0))]);
    let free = oracle_free(&g, &[a, b], &walls, &[block]);
    assert_eq!(g.free, free);
    let reach = flood_fill(&free, g.nx, g.nz, g.seed);
    assert_eq!(g.reachable, reach);
    assert!((0..reach.len()).all(|i| !reach[i] || g.center(i).x < 4.0));
}

#[test]
fn obstacles_never_raise_room_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for dh in common::dataset(7, 40) {
        let base = reachable_positions(&dh.house, AGENT_RADIUS, CELL_SIZE).unwrap();
        let n = dh.house.rooms.len();
        let before = base.room_counts(n);
        for k in 0..5 {
            let room = &dh.house.rooms[rng.random_range(0..n)];
            let p = room.floor_polygon[rng.random_range(0..room.floor_polygon.len())];
            let size = [rng.random_range(0.2..1.5), 1.0, rng.random_range(0.2..1.5)];
            let mut h = dh.house.clone();
            let c = v(p.x + rng.random_range(-1.0..1.0), p.z + rng.random_range(-1.0..1.0));
            h.objects.push(floor_object(&format!("extra{k}"), "Dresser", 0, c, size));
            let Ok(g) = reachable_positions(&h, AGENT_RADIUS, CELL_SIZE) else { continue };
            if g.seed != base.seed {
                // the obstacle covered the seed cell; BFS restarts elsewhere
                continue;
            }
            for (x, y) in g.room_counts(n).iter().zip(&before) {
                assert!(x <= y, "house {}: {x} > {y}", dh.index);
            }
        }
    }
}

/// Independent visibility decision: some pair of (one of the nearest
/// reachable cells, visibility point) is within reach and no listed wall or
/// occluder interior crosses the sight line.
fn oracle_visible(g: &NavGrid, target: &Object, walls: &[(Vec2, Vec2)], occluders: &[Rect]) -> bool {
    let p = target.position.xz();
    let mut near: Vec<(f64, usize)> =
        (0..g.reachable.len()).filter(|&i| g.reachable[i]).map(|i| (g.center(i).dist(p), i)).collect();
    near.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    near.truncate(NEAREST_CELLS);
    near.iter().any(|&(_, i)| {
        let c = g.center(i);
        visibility_points(target).iter().any(|vp| {
            let d = ((c.x - vp.x).powi(2) + (CAMERA_HEIGHT - vp.y).powi(2) + (c.z - vp.z).powi(2)).sqrt();
            let q = vp.xz();
            d < REACH_DISTANCE
                && !walls.iter().any(|(a, b)| segments_cross(c, q, *a, *b))
                && !occluders.iter().any(|o| crosses_interior(c, q, o))
        })
    })
}

/// Sampled test of a segment entering a rectangle's open interior.
fn crosses_interior(a: Vec2, b: Vec2, o: &Rect) -> bool {
    (0..=1000).any(|k| {
        let t = k as f64 / 1000.0;
        let p = v(a.x + (b.x - a.x) * t, a.z + (b.z - a.z) * t);
        p.x > o.min.x + 1e-9 && p.x < o.max.x - 1e-9 && p.z > o.min.z + 1e-9 && p.z < o.max.z - 1e-9
    })
}

fn apple(c: Vec2, y: f64) -> Object {
    let mut o = floor_object("apple", "Apple", 0, c, [0.1, 0.1, 0.1]);
    o.position.y = y;
    o
}

#[test]
fn apple_in_open_room_is_a_target() {
    let mut h = house_of_rects(&[(RoomType::Kitchen, r(0.0, 0.0, 4.0, 4.0))]);
    h.objects.push(apple(v(2.0, 2.0), 0.05));
    let g = reachable_positions(&h, AGENT_RADIUS, CELL_SIZE).unwrap();
    assert_eq!(reachable_targets(&h, &g, "Apple"), vec!["apple".to_string()]);
    assert!(oracle_visible(&g, &h.objects[0], &edges(&r(0.0, 0.0, 4.0, 4.0)), &[]));
}

#[test]
fn apple_inside_fridge_is_excluded() {
    let room = r(0.0, 0.0, 4.0, 4.0);
    let mut h = house_of_rects(&[(RoomType::Kitchen, room)]);
    let fridge = floor_object("fridge", "Fridge", 0, v(2.0, 2.0), [0.75, 1.8, 0.75]);
    let fp = fridge.footprint();
    h.objects.push(fridge);
    h.objects.push(apple(v(2.0, 2.0), 1.0));
    let g = reachable_positions(&h, AGENT_RADIUS, CELL_SIZE).unwrap();
    assert!(reachable_targets(&h, &g, "Apple").is_empty());
    assert!(!oracle_visible(&g, &h.objects[1], &edges(&room), &[fp]));
    // the fridge itself is in plain view
    assert_eq!(reachable_targets(&h, &g, "Fridge"), vec!["fridge".to_string()]);
}

#[test]
fn object_behind_a_wall_is_excluded() {
    let (mut h, a, b) = two_rooms();
    // just across the shared wall from reachable cells in room 0
    h.objects.push(floor_object("mug", "Mug", 1, v(4.1, 2.0), [0.1, 0.1, 0.1]));
    h.objects[0].position.y = CAMERA_HEIGHT;
    let g = reachable_positions(&h, AGENT_RADIUS, CELL_SIZE).unwrap();
    let walls: Vec<_> = edges(&a).into_iter().chain(edges(&b)).collect();
    // without the wall the mug would be within reach
    assert!(oracle_visible(&g, &h.objects[0], &[], &[]));
    assert!(!oracle_visible(&g, &h.objects[0], &walls, &[]));
    assert!(reachable_targets(&h, &g, "Mug").is_empty());

    // an open wall removes the obstruction
    add_open_wall(&mut h, 0, 1);
    let g = reachable_positions(&h, AGENT_RADIUS, CELL_SIZE).unwrap();
    assert_eq!(reachable_targets(&h, &g, "Mug"), vec!["mug".to_string()]);
}

#[test]
fn epsilon_greedy_is_even_between_tied_types() {
    let targets: BTreeMap<String, Vec<String>> =
        [("Bed".to_string(), vec!["b".to_string()]), ("Toilet".to_string(), vec!["t".to_string()])].into();
    let mut s = EpisodeTargetState::new();
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let n = 100_000;
    let mut beds = 0;
    for _ in 0..n {
        beds += (sample_episode_target(&targets, &mut s, &mut rng).unwrap() == "Bed") as usize;
    }
    let f = beds as f64 / n as f64;
    assert!((f - 0.5).abs() <= 0.01, "{f}");
}

#[test]
fn greedy_branch_takes_the_least_drawn_type() {
    let targets: BTreeMap<String, Vec<String>> = [
        ("Bed".to_string(), vec!["b".to_string()]),
        ("Toilet".to_string(), vec!["t".to_string()]),
        ("Sofa".to_string(), vec![]),
    ]
    .into();
    let mut s = EpisodeTargetState { counts: [("Bed".into(), 10), ("Toilet".into(), 2)].into(), epsilon: 0.0 };
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    assert_eq!(sample_episode_target(&targets, &mut s, &mut rng).unwrap(), "Toilet");
    // a type with no reachable instance is never drawn, whatever its count
    let mut s = EpisodeTargetState::new();
    for _ in 0..1000 {
        assert_ne!(sample_episode_target(&targets, &mut s, &mut rng).unwrap(), "Sofa");
    }
}
