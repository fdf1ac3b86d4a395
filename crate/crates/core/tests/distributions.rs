//! Empirical frequencies of every sampled quantity against its closed form.

mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prochouse::catalog::Split;
use prochouse::connectivity::{choose_connection_kind, ConnectionKind};
use prochouse::dressing::sample_ceiling_height;
use prochouse::dressing::sample_structure_materials;
use prochouse::furnish::floor::R_I_PMF;
use prochouse::furnish::wall::{N_P_PMF, N_W_PMF};
use prochouse::furnish::{
    place_paintings, place_television, place_windows, randomize_appearance, sample_house_bias, PlacementBudget,
    WallSpace,
};
use prochouse::geom::{Rect, Vec2};
use prochouse::house::House;
use prochouse::roomspec::RoomType;

const N: usize = 100_000;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `|freq - p|` within five standard errors.
fn assert_rate(label: &str, hits: usize, n: usize, p: f64) {
    let f = hits as f64 / n as f64;
    let se = (p * (1.0 - p) / n as f64).sqrt().max(1e-12);
    assert!((f - p).abs() <= 5.0 * se, "{label}: {f} vs {p}");
}

fn assert_pmf(label: &str, draws: &[u32], pmf: &[(u32, f64)]) {
    for &(v, p) in pmf {
        assert_rate(&format!("{label} = {v}"), draws.iter().filter(|&&d| d == v).count(), draws.len(), p);
    }
    let support: Vec<u32> = pmf.iter().map(|x| x.0).collect();
    assert!(draws.iter().all(|d| support.contains(d)), "{label}: value outside support");
}

/// One large exterior room with a 3 m ceiling: wall placement never runs
/// out of space.
fn big_room(rt: RoomType) -> House {
    let mut h = common::house_of_rects(&[(rt, Rect::from_bounds(0.0, 0.0, 20.0, 20.0))]);
    h.procedural_parameters.ceiling_height = 3.0;
    h
}

#[test]
fn objects_per_rectangle_pmf() {
    let mut r = rng(1);
    let draws: Vec<u32> = (0..N).map(|_| PlacementBudget::sample(&mut r).r_i).collect();
    assert_pmf("r_i", &draws, &R_I_PMF);
}

#[test]
fn ceiling_height_mean_and_range() {
    let mut r = rng(2);
    let xs: Vec<f64> = (0..N).map(|_| sample_ceiling_height(&mut r)).collect();
    let mean = xs.iter().sum::<f64>() / N as f64;
    // 2.5 + 4.5 * 1.25 / 6.75; sd of 4.5 * Beta(1.25, 5.5) is about 0.62
    assert!((mean - 3.333_333).abs() < 5.0 * 0.62 / (N as f64).sqrt(), "mean {mean}");
    assert!(xs.iter().all(|&c| (2.5..7.0).contains(&c)));
}

#[test]
fn kitchen_living_connection_kinds() {
    let mut r = rng(3);
    let kinds: Vec<ConnectionKind> =
        (0..N).map(|_| choose_connection_kind(RoomType::LivingRoom, RoomType::Kitchen, &mut r)).collect();
    for (k, p) in [(ConnectionKind::OpenWall, 0.375), (ConnectionKind::DoorFrame, 0.375), (ConnectionKind::Doorway, 0.25)] {
        assert_rate(&format!("{k:?}"), kinds.iter().filter(|&&x| x == k).count(), N, p);
    }
    for (a, b) in [(RoomType::Bedroom, RoomType::Bathroom), (RoomType::Kitchen, RoomType::Bedroom)] {
        assert!((0..1000).all(|_| choose_connection_kind(a, b, &mut r) == ConnectionKind::Doorway));
    }
}

#[test]
fn structure_material_rates() {
    let cat = common::catalog();
    let mut r = rng(4);
    let (mut wall_same, mut floor_same, mut solid, mut varied_walls) = (0, 0, 0, 0);
    for _ in 0..N {
        let m = sample_structure_materials(3, &cat.materials, &mut r);
        wall_same += m.wall_same as usize;
        floor_same += m.floor_same as usize;
        if m.wall_same {
            assert!(m.walls.iter().all(|w| *w == m.ceiling));
        } else {
            varied_walls += m.walls.len();
            solid += m.walls.iter().filter(|w| w.is_solid()).count();
        }
        if m.floor_same {
            assert!(m.floors.iter().all(|f| *f == m.floors[0]));
        }
    }
    assert_rate("w_same", wall_same, N, 0.35);
    assert_rate("f_same", floor_same, N, 0.15);
    assert_rate("w_solid", solid, varied_walls, 0.5);
}

#[test]
fn window_and_painting_counts() {
    let cat = common::catalog();
    let h = big_room(RoomType::LivingRoom);
    let mut r = rng(5);
    let n = 20_000;
    let (mut windows, mut paintings) = (Vec::with_capacity(n), Vec::with_capacity(n));
    for _ in 0..n {
        let mut space = WallSpace::for_room(&h, "room|0");
        windows.push(place_windows(&mut space, &h.rooms[0], &cat, Split::Train, &mut r).len() as u32);
        paintings.push(place_paintings(&mut space, &cat, Split::Train, &mut r).len() as u32);
    }
    assert_pmf("n_w", &windows, &N_W_PMF);
    assert_pmf("n_p", &paintings, &N_P_PMF);
    let mean = |v: &[u32]| v.iter().map(|&x| x as f64).sum::<f64>() / v.len() as f64;
    assert!((mean(&windows) - 1.375).abs() < 0.03);
    assert!((mean(&paintings) - 2.25).abs() < 0.04);
}

#[test]
fn television_rates_by_room() {
    let cat = common::catalog();
    let mut r = rng(6);
    let n = 20_000;
    for (rt, p) in [(RoomType::LivingRoom, 0.8), (RoomType::Kitchen, 0.25), (RoomType::Bedroom, 0.4), (RoomType::Bathroom, 0.0)] {
        let h = big_room(rt);
        let hits = (0..n)
            .filter(|_| {
                let mut space = WallSpace::for_room(&h, "room|0");
                place_television(&mut space, rt, false, &cat, Split::Train, &mut r).is_some()
            })
            .count();
        assert_rate(&format!("tv in {rt:?}"), hits, n, p);
    }
}

#[test]
fn house_bias_mean() {
    let mut r = rng(7);
    let xs: Vec<f64> = (0..N).map(|_| sample_house_bias(&mut r)).collect();
    let mean = xs.iter().sum::<f64>() / N as f64;
    // 0.4 * 3.5 / 5.4 - 0.3
    assert!((mean + 0.040_741).abs() < 0.001, "mean {mean}");
    assert!(xs.iter().all(|&b| (-0.3..=0.1).contains(&b)));
}

#[test]
fn color_randomization_rate() {
    let cat = common::catalog();
    let t = cat.asset_types.iter().find(|t| t.color_randomizable).expect("some type takes colors");
    let mut objs: Vec<_> = (0..N)
        .map(|i| common::floor_object(&format!("o{i}"), &t.name, 0, Vec2::new(0.0, 0.0), [0.5, 0.5, 0.5]))
        .collect();
    randomize_appearance(&mut objs, &cat, true, &mut rng(8));
    assert_rate("color", objs.iter().filter(|o| o.color.is_some()).count(), N, 0.8);
}
