//! End-to-end house generation, datasets with manifests, and benchmarking.

use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::catalog::{Catalog, Split};
use crate::connectivity::{
    choose_connection_kind, min_door_width, place_exterior_door, place_openings, plan_connections, Connection,
    Opening, OpeningKind,
};
use crate::dressing::{
    directional_light, place_lights, sample_ceiling_height, sample_skybox, sample_structure_materials, Lamp,
};
use crate::error::{Error, Result};
use crate::furnish::{
    place_floor_objects, place_paintings, place_surface_objects, place_television, place_windows,
    randomize_appearance, randomize_states, sample_house_bias, FloorRoom, NavSpec, PlacementBudget, WallSpace,
};
use crate::geom::{Aabb, Rect, Vec2, Vec3};
use crate::house::{
    canonicalize, emit_json, room_id, Door, House, Metadata, OpenWall, PlacementKind, ProceduralParameters, Room,
    Wall, GENERATOR_VERSION, SCHEMA_VERSION,
};
use crate::layout::{apply_cuts, sample_boundary, scale_plan, subdivide, FloorPlan, GenParams, WallSegment};
use crate::random::{house_seed, stage_rng, HouseRng};
use crate::roomspec::{sample_room_spec, RoomSpec};
use crate::validate::{validate_with, AGENT_RADIUS, CELL_SIZE, MIN_REACHABLE};

/// Resamples allowed after the first attempt.
pub const MAX_RETRIES: u32 = 25;

mod stage {
    pub const LAYOUT: u32 = 0;
    pub const CONNECT: u32 = 1;
    pub const STRUCTURE: u32 = 2;
    pub const FLOOR: u32 = 3;
    pub const WALL: u32 = 4;
    pub const SURFACE: u32 = 5;
    pub const SKY: u32 = 6;
    pub const APPEARANCE: u32 = 7;
    pub const STATES: u32 = 8;
    /// Room-spec choice for dataset houses; drawn once, outside attempts.
    pub const SPEC: u32 = 0xFFFF;
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PipelineParams {
    pub layout: GenParams,
    pub split: Split,
    pub material_randomization: bool,
    pub max_retries: u32,
    pub agent_radius: f64,
    pub cell_size: f64,
    /// Reject floor poses that split a room's free floor.
    pub nav_guard: bool,
}

impl Default for PipelineParams {
    fn default() -> Self {
        Self {
            layout: GenParams::default(),
            split: Split::Train,
            material_randomization: true,
            max_retries: MAX_RETRIES,
            agent_radius: AGENT_RADIUS,
            cell_size: CELL_SIZE,
            nav_guard: true,
        }
    }
}

/// Time spent per stage, summed over attempts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StageTimings {
    pub layout: Duration,
    pub connect: Duration,
    pub furnish: Duration,
    pub validate: Duration,
}

impl StageTimings {
    pub fn add(&mut self, o: &StageTimings) {
        self.layout += o.layout;
        self.connect += o.connect;
        self.furnish += o.furnish;
        self.validate += o.validate;
    }

    pub fn total(&self) -> Duration {
        self.layout + self.connect + self.furnish + self.validate
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generated {
    pub house: House,
    pub timings: StageTimings,
}

pub fn generate_house(seed: u64, spec: &RoomSpec, catalog: &Catalog, params: &PipelineParams) -> Result<House> {
    generate_house_timed(seed, spec, catalog, params).map(|g| g.house)
}

/// Generate and validate, resampling with the same room spec until a house
/// passes or the retry budget runs out.
pub fn generate_house_timed(
    seed: u64,
    spec: &RoomSpec,
    catalog: &Catalog,
    params: &PipelineParams,
) -> Result<Generated> {
    let mut timings = StageTimings::default();
    let mut last = String::new();
    for attempt in 0..=params.max_retries {
        match attempt_house(seed, attempt, spec, catalog, params, &mut timings) {
            Ok(house) => {
                let t = Instant::now();
                let report = validate_with(&house, params.agent_radius, params.cell_size);
                timings.validate += t.elapsed();
                if report.pass {
                    return Ok(Generated { house, timings });
                }
                last = report.reasons.join("; ");
            }
            Err(e) => last = e.to_string(),
        }
    }
    Err(Error::GenerationFailure { attempts: params.max_retries + 1, last })
}

/// One candidate for the given attempt, before validation.
pub fn generate_candidate(
    seed: u64,
    attempt: u32,
    spec: &RoomSpec,
    catalog: &Catalog,
    params: &PipelineParams,
) -> Result<House> {
    attempt_house(seed, attempt, spec, catalog, params, &mut StageTimings::default())
}

fn wall_id(room: usize, k: usize) -> String {
    format!("{}|wall|{k}", room_id(room))
}

/// The scaled floor plan an attempt starts from.
pub fn floor_plan(seed: u64, attempt: u32, spec: &RoomSpec, params: &PipelineParams) -> Result<FloorPlan> {
    let mut r = stage_rng(seed, attempt, stage::LAYOUT);
    let n_r = spec.room_count();
    let b = sample_boundary(n_r, &params.layout, spec.root.boundary_override.as_ref(), &mut r);
    let b = apply_cuts(&b, n_r, &params.layout, &mut r);
    let plan = subdivide(&b, spec, &params.layout, &mut r)?;
    Ok(scale_plan(&plan, &params.layout, &mut r))
}

/// Build one candidate house. Each stage draws from its own stream.
fn attempt_house(
    seed: u64,
    attempt: u32,
    spec: &RoomSpec,
    catalog: &Catalog,
    params: &PipelineParams,
    timings: &mut StageTimings,
) -> Result<House> {
    let rng = |s: u32| -> HouseRng { stage_rng(seed, attempt, s) };
    let split = params.split;

    let t = Instant::now();
    let plan = floor_plan(seed, attempt, spec, params)?;
    timings.layout += t.elapsed();

    let t = Instant::now();
    let (openings, exterior) = {
        let mut r = rng(stage::CONNECT);
        let pairs = plan_connections(spec, &plan, min_door_width(catalog, split), &mut r)?;
        let connections: Vec<Connection> = pairs
            .into_iter()
            .map(|(a, b)| Connection {
                a,
                b,
                kind: choose_connection_kind(plan.rooms[a].room_type, plan.rooms[b].room_type, &mut r),
            })
            .collect();
        let openings = place_openings(&plan, &connections, catalog, split, &mut r)?;
        let exterior = place_exterior_door(&plan, catalog, split, &openings, &mut r)?;
        (openings, exterior)
    };
    timings.connect += t.elapsed();

    let t = Instant::now();
    let mut house = skeleton(seed, attempt, spec, &plan, &openings, &exterior, catalog, params);
    furnish(&mut house, &plan, &openings, &exterior, catalog, params, &rng);
    timings.furnish += t.elapsed();
    Ok(canonicalize(&house))
}

/// Rooms, walls, openings and structure materials; no objects yet.
#[allow(clippy::too_many_arguments)]
fn skeleton(
    seed: u64,
    attempt: u32,
    spec: &RoomSpec,
    plan: &FloorPlan,
    openings: &[Opening],
    exterior: &Opening,
    catalog: &Catalog,
    params: &PipelineParams,
) -> House {
    let mut r = stage_rng(seed, attempt, stage::STRUCTURE);
    let n = plan.rooms.len();
    let mats = sample_structure_materials(n, &catalog.materials, &mut r);
    let ceiling_height = sample_ceiling_height(&mut r);
    let rooms: Vec<Room> = (0..n)
        .map(|i| Room {
            id: room_id(i),
            room_type: plan.rooms[i].room_type,
            floor_polygon: plan.room_polygon(i),
            floor_material: mats.floors[i].clone(),
            wall_material: mats.walls[i].clone(),
        })
        .collect();
    let segs = plan.walls();
    let mut per_room = vec![0usize; n];
    let mut walls = Vec::with_capacity(segs.len());
    for s in &segs {
        walls.push(Wall {
            id: wall_id(s.room, per_room[s.room]),
            room_id: room_id(s.room),
            neighbor_id: s.neighbor.map(room_id),
            from: s.from,
            to: s.to,
        });
        per_room[s.room] += 1;
    }
    let id_of = |w: &WallSegment| -> String {
        let k = segs.iter().position(|s| s == w).expect("opening wall comes from the plan");
        walls[k].id.clone()
    };
    let mut doors = Vec::new();
    let mut open_walls = Vec::new();
    for o in openings.iter().chain(std::iter::once(exterior)) {
        if o.kind == OpeningKind::OpenWall {
            open_walls.push(OpenWall {
                id: format!("openwall|{}", open_walls.len()),
                wall_id: id_of(&o.wall),
                room_id: room_id(o.wall.room),
                neighbor_id: room_id(o.wall.neighbor.expect("open walls join rooms")),
                offset: o.offset,
                width: o.width,
            });
            continue;
        }
        let asset = o.asset_id.as_deref().and_then(|a| catalog.instance(a));
        doors.push(Door {
            id: format!("door|{}", doors.len()),
            kind: o.kind,
            asset_id: o.asset_id.clone(),
            wall_id: id_of(&o.wall),
            room_id: room_id(o.wall.room),
            neighbor_id: o.wall.neighbor.map(room_id),
            offset: o.offset,
            width: o.width,
            height: asset.map_or(0.0, |a| a.height()),
            open_into: o.open_into.map(room_id),
            passable: o.kind != OpeningKind::ExteriorDoor,
        });
    }
    House {
        metadata: Metadata {
            seed,
            room_spec_id: spec.id.clone(),
            split: params.split,
            schema_version: SCHEMA_VERSION,
            generator_version: GENERATOR_VERSION.to_string(),
            retries: attempt,
        },
        rooms,
        walls,
        doors,
        open_walls,
        windows: vec![],
        objects: vec![],
        floor_placements: vec![],
        procedural_parameters: ProceduralParameters {
            ceiling_height,
            ceiling_material: mats.ceiling,
            wall_same: mats.wall_same,
            floor_same: mats.floor_same,
            skybox_id: String::new(),
            time_of_day: crate::catalog::TimeOfDay::Midday,
            directional_light: directional_light(crate::catalog::TimeOfDay::Midday),
            lights: vec![],
            house_bias: 0.0,
            material_randomization: params.material_randomization,
        },
    }
}

fn furnish(
    house: &mut House,
    plan: &FloorPlan,
    openings: &[Opening],
    exterior: &Opening,
    catalog: &Catalog,
    params: &PipelineParams,
    rng: &dyn Fn(u32) -> HouseRng,
) {
    let split = params.split;
    let clearances: Vec<(usize, Rect)> =
        openings.iter().chain(std::iter::once(exterior)).flat_map(Opening::clearance).collect();

    let origin = house.rooms.iter().flat_map(|r| &r.floor_polygon).fold(Vec2::new(f64::MAX, f64::MAX), |a, p| {
        Vec2::new(a.x.min(p.x), a.z.min(p.z))
    });
    let nav = params.nav_guard.then_some(NavSpec {
        origin,
        cell: params.cell_size,
        radius: params.agent_radius,
        min_cells: MIN_REACHABLE,
    });
    let mut r = rng(stage::FLOOR);
    for i in 0..house.rooms.len() {
        let polygon = house.rooms[i].floor_polygon.clone();
        let id = house.rooms[i].id.clone();
        let room = FloorRoom {
            id: &id,
            room_type: plan.rooms[i].room_type,
            polygon: &polygon,
            keep_clear: clearances.iter().filter(|(k, _)| *k == i).map(|(_, c)| *c).collect(),
            nav,
        };
        let budget = PlacementBudget::sample(&mut r);
        let out = place_floor_objects(&room, catalog, split, &budget, &mut r);
        house.objects.extend(out.objects);
        house.floor_placements.extend(out.placements);
    }

    let mut r = rng(stage::WALL);
    for i in 0..house.rooms.len() {
        let mut space = WallSpace::for_room(house, &house.rooms[i].id);
        let windows = place_windows(&mut space, &house.rooms[i], catalog, split, &mut r);
        house.windows.extend(windows);
    }
    for i in 0..house.rooms.len() {
        let mut space = WallSpace::for_room(house, &house.rooms[i].id);
        let paintings = place_paintings(&mut space, catalog, split, &mut r);
        house.objects.extend(paintings);
    }
    for i in 0..house.rooms.len() {
        let id = house.rooms[i].id.clone();
        let has_tv = house
            .all_objects()
            .iter()
            .any(|o| o.room_id == id && o.asset_type == crate::catalog::names::TELEVISION);
        let mut space = WallSpace::for_room(house, &id);
        if let Some(tv) = place_television(&mut space, house.rooms[i].room_type, has_tv, catalog, split, &mut r) {
            house.objects.push(tv);
        }
    }

    let mut r = rng(stage::SURFACE);
    let b_house = sample_house_bias(&mut r);
    let mut obstacles: Vec<Aabb> = house.windows.iter().map(|w| window_aabb(w.size, w.position, w.rotation)).collect();
    obstacles.extend(house.objects.iter().filter(|o| o.placement_kind == PlacementKind::Wall).map(|o| o.aabb()));
    place_surface_objects(&mut house.objects, &obstacles, catalog, split, b_house, &mut r);
    house.procedural_parameters.house_bias = b_house;

    let mut r = rng(stage::SKY);
    let (skybox, tod) = sample_skybox(&catalog.materials, &mut r);
    let pp = &mut house.procedural_parameters;
    pp.skybox_id = skybox;
    pp.time_of_day = tod;
    pp.directional_light = directional_light(tod);

    randomize_appearance(&mut house.objects, catalog, params.material_randomization, &mut rng(stage::APPEARANCE));
    randomize_states(&mut house.objects, catalog, &mut rng(stage::STATES));

    let lamps: Vec<Lamp> = house
        .all_objects()
        .into_iter()
        .filter(|o| catalog.asset_type(&o.asset_type).is_some_and(|t| t.emits_light))
        .map(|o| Lamp {
            object_id: o.id.clone(),
            top: Vec3::new(o.position.x, o.top(), o.position.z),
            on: o.states.get("isToggled").copied().unwrap_or(true),
        })
        .collect();
    let rooms: Vec<_> = house.rooms.iter().map(|r| (r.id.clone(), r.floor_polygon.clone())).collect();
    house.procedural_parameters.lights = place_lights(&rooms, &lamps, house.procedural_parameters.ceiling_height);
}

fn window_aabb(size: Vec3, position: Vec3, rotation: i32) -> Aabb {
    let (w, d) = crate::geom::rotated_extents(size.x, size.z, rotation);
    Aabb {
        footprint: Rect::from_center(position.xz(), w, d),
        y0: position.y - size.y / 2.0,
        y1: position.y + size.y / 2.0,
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ManifestEntry {
    pub index: u64,
    pub seed: u64,
    pub room_spec_id: String,
    pub file: String,
    pub sha256: String,
    pub retries: u32,
}

/// Everything needed to regenerate a dataset byte for byte.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Manifest {
    pub schema_version: u32,
    pub generator_version: String,
    pub root_seed: u64,
    pub count: u64,
    pub split: Split,
    pub material_randomization: bool,
    /// Older manifests predate the guard, which was always on.
    #[serde(default = "guard_on")]
    pub nav_guard: bool,
    pub catalog_sha256: String,
    pub room_specs_sha256: String,
    pub houses: Vec<ManifestEntry>,
}

fn guard_on() -> bool {
    true
}

pub fn catalog_digest(catalog: &Catalog) -> String {
    sha256_hex(&serde_json::to_vec(&catalog.to_json_value()).expect("catalog serializes"))
}

pub fn specs_digest(specs: &[RoomSpec]) -> String {
    sha256_hex(&serde_json::to_vec(specs).expect("specs serialize"))
}

pub fn house_file_name(index: u64) -> String {
    format!("house_{index:06}.json")
}

/// Room spec of house `index`, drawn from its own stream so retries and
/// generation stages never shift it.
pub fn spec_for<'a>(seed: u64, specs: &'a [RoomSpec]) -> Result<&'a RoomSpec> {
    sample_room_spec(specs, &mut stage_rng(seed, 0, stage::SPEC))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DatasetHouse {
    pub index: u64,
    pub json: String,
    pub house: House,
    pub timings: StageTimings,
}

/// Generate houses `0..count` under `root_seed` on `jobs` workers. Output
/// order and content do not depend on `jobs`.
pub fn generate_dataset(
    root_seed: u64,
    count: u64,
    jobs: usize,
    specs: &[RoomSpec],
    catalog: &Catalog,
    params: &PipelineParams,
) -> Result<Vec<DatasetHouse>> {
    generate_indices(root_seed, &(0..count).collect::<Vec<_>>(), jobs, specs, catalog, params)
}

fn generate_indices(
    root_seed: u64,
    indices: &[u64],
    jobs: usize,
    specs: &[RoomSpec],
    catalog: &Catalog,
    params: &PipelineParams,
) -> Result<Vec<DatasetHouse>> {
    if specs.is_empty() {
        return Err(Error::EmptyRegistry);
    }
    let one = |index: u64| -> Result<DatasetHouse> {
        let seed = house_seed(root_seed, index);
        let spec = spec_for(seed, specs)?;
        let g = generate_house_timed(seed, spec, catalog, params)?;
        Ok(DatasetHouse { index, json: emit_json(&g.house), house: g.house, timings: g.timings })
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::PlacementExhausted(format!("worker pool: {e}")))?;
    pool.install(|| indices.par_iter().map(|&i| one(i)).collect())
}

pub fn manifest_for(
    root_seed: u64,
    houses: &[DatasetHouse],
    specs: &[RoomSpec],
    catalog: &Catalog,
    params: &PipelineParams,
) -> Manifest {
    Manifest {
        schema_version: SCHEMA_VERSION,
        generator_version: GENERATOR_VERSION.to_string(),
        root_seed,
        count: houses.len() as u64,
        split: params.split,
        material_randomization: params.material_randomization,
        nav_guard: params.nav_guard,
        catalog_sha256: catalog_digest(catalog),
        room_specs_sha256: specs_digest(specs),
        houses: houses
            .iter()
            .map(|h| ManifestEntry {
                index: h.index,
                seed: h.house.metadata.seed,
                room_spec_id: h.house.metadata.room_spec_id.clone(),
                file: house_file_name(h.index),
                sha256: sha256_hex(h.json.as_bytes()),
                retries: h.house.metadata.retries,
            })
            .collect(),
    }
}

fn write(path: &Path, bytes: &[u8]) -> Result<()> {
    std::fs::write(path, bytes).map_err(|e| Error::io(path.display().to_string(), e))
}

/// Write every house plus `manifest.json` into `out`.
pub fn write_dataset(out: &Path, houses: &[DatasetHouse], manifest: &Manifest) -> Result<()> {
    std::fs::create_dir_all(out).map_err(|e| Error::io(out.display().to_string(), e))?;
    for h in houses {
        write(&out.join(house_file_name(h.index)), h.json.as_bytes())?;
    }
    let mut m = serde_json::to_string_pretty(manifest).expect("manifest serializes");
    m.push('\n');
    write(&out.join("manifest.json"), m.as_bytes())
}

pub fn load_manifest(path: &Path) -> Result<Manifest> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    serde_json::from_str(&text).map_err(|e| Error::parse("manifest", e))
}

/// One mismatch found while replaying a manifest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReplayMismatch {
    pub index: u64,
    pub expected: String,
    pub actual: String,
}

/// Regenerate every house listed in a manifest and compare digests.
pub fn replay_manifest(
    manifest: &Manifest,
    specs: &[RoomSpec],
    catalog: &Catalog,
    params: &PipelineParams,
    jobs: usize,
) -> Result<Vec<ReplayMismatch>> {
    if manifest.catalog_sha256 != catalog_digest(catalog) {
        return Err(Error::schema("manifest/catalogSha256", "catalog differs from the one the dataset was built with"));
    }
    if manifest.room_specs_sha256 != specs_digest(specs) {
        return Err(Error::schema("manifest/roomSpecsSha256", "room specs differ from the ones the dataset was built with"));
    }
    let params = PipelineParams {
        split: manifest.split,
        material_randomization: manifest.material_randomization,
        nav_guard: manifest.nav_guard,
        ..*params
    };
    let indices: Vec<u64> = manifest.houses.iter().map(|h| h.index).collect();
    let houses = generate_indices(manifest.root_seed, &indices, jobs, specs, catalog, &params)?;
    Ok(manifest
        .houses
        .iter()
        .zip(&houses)
        .filter_map(|(e, h)| {
            let actual = sha256_hex(h.json.as_bytes());
            (actual != e.sha256).then(|| ReplayMismatch { index: e.index, expected: e.sha256.clone(), actual })
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BenchReport {
    pub count: u64,
    pub jobs: usize,
    pub wall_seconds: f64,
    pub houses_per_second: f64,
    /// Worker time per stage, summed over houses.
    pub stage_seconds: StageSeconds,
    pub retries: u64,
    /// Rejected candidates over all candidates.
    pub retry_rate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StageSeconds {
    pub layout: f64,
    pub connect: f64,
    pub furnish: f64,
    pub validate: f64,
}

pub fn bench(
    root_seed: u64,
    count: u64,
    jobs: usize,
    specs: &[RoomSpec],
    catalog: &Catalog,
    params: &PipelineParams,
) -> Result<BenchReport> {
    let t = Instant::now();
    let houses = generate_dataset(root_seed, count, jobs, specs, catalog, params)?;
    let wall = t.elapsed().as_secs_f64();
    let mut total = StageTimings::default();
    for h in &houses {
        total.add(&h.timings);
    }
    let retries: u64 = houses.iter().map(|h| h.house.metadata.retries as u64).sum();
    Ok(BenchReport {
        count,
        jobs,
        wall_seconds: wall,
        houses_per_second: count as f64 / wall.max(1e-9),
        stage_seconds: StageSeconds {
            layout: total.layout.as_secs_f64(),
            connect: total.connect.as_secs_f64(),
            furnish: total.furnish.as_secs_f64(),
            validate: total.validate.as_secs_f64(),
        },
        retries,
        retry_rate: retries as f64 / (count + retries).max(1) as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roomspec::{RoomType, SpecNode};

    fn catalog() -> Catalog {
        crate::catalog::load_catalog(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/catalog.json")).unwrap()
    }

    #[test]
    fn deterministic_bytes() {
        let c = catalog();
        let spec = RoomSpec::new(
            "pair",
            1.0,
            SpecNode::zone(vec![SpecNode::room(RoomType::Kitchen, 1.0), SpecNode::room(RoomType::LivingRoom, 1.0)], 1.0),
        )
        .unwrap();
        let p = PipelineParams::default();
        let a = emit_json(&generate_house(7, &spec, &c, &p).unwrap());
        let b = emit_json(&generate_house(7, &spec, &c, &p).unwrap());
        assert_eq!(a, b);
        assert_ne!(a, emit_json(&generate_house(8, &spec, &c, &p).unwrap()));
    }

    #[test]
    fn lone_bathroom() {
        let c = catalog();
        let spec = RoomSpec::new("bath", 1.0, SpecNode::room(RoomType::Bathroom, 1.0)).unwrap();
        for seed in 0..10 {
            let h = generate_house(seed, &spec, &c, &PipelineParams::default()).unwrap();
            assert_eq!(h.rooms.len(), 1);
            assert_eq!(h.doors.len(), 1);
            assert_eq!(h.doors[0].kind, OpeningKind::ExteriorDoor);
            assert!(h.windows.is_empty());
        }
    }

    #[test]
    fn digest_is_hex() {
        let d = sha256_hex(b"abc");
        assert_eq!(d, "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}
