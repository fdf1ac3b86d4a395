//! Dataset statistics.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::geom::polygon_area;
use crate::house::House;

/// Width of the house-area histogram buckets, square meters.
pub const AREA_BUCKET: f64 = 10.0;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DatasetStats {
    pub houses: u64,
    pub rooms: u64,
    /// Sum of house areas in square centimeters, kept integral so merging
    /// is exact.
    pub total_area_cm2: u64,
    /// Houses per area bucket, keyed by the bucket's lower bound.
    pub area_histogram: BTreeMap<u64, u64>,
    pub rooms_per_house: BTreeMap<usize, u64>,
    /// Rooms per object count. Counts every placed object, including
    /// nested ones, but not doors or windows.
    pub objects_per_room: BTreeMap<usize, u64>,
    pub object_type_counts: BTreeMap<String, u64>,
    pub room_type_counts: BTreeMap<String, u64>,
}

impl DatasetStats {
    pub fn add_house(&mut self, h: &House) {
        self.houses += 1;
        self.rooms += h.rooms.len() as u64;
        let area: f64 = h.rooms.iter().map(|r| polygon_area(&r.floor_polygon)).sum();
        self.total_area_cm2 += (area * 1e4).round() as u64;
        *self.area_histogram.entry(((area / AREA_BUCKET).floor() * AREA_BUCKET) as u64).or_default() += 1;
        *self.rooms_per_house.entry(h.rooms.len()).or_default() += 1;
        let all = h.all_objects();
        for r in &h.rooms {
            let n = all.iter().filter(|o| o.room_id == r.id).count();
            *self.objects_per_room.entry(n).or_default() += 1;
            *self.room_type_counts.entry(r.room_type.to_string()).or_default() += 1;
        }
        for o in all {
            *self.object_type_counts.entry(o.asset_type.clone()).or_default() += 1;
        }
    }

    pub fn merge(&mut self, o: &DatasetStats) {
        fn add<K: Ord + Clone>(a: &mut BTreeMap<K, u64>, b: &BTreeMap<K, u64>) {
            for (k, v) in b {
                *a.entry(k.clone()).or_default() += v;
            }
        }
        self.houses += o.houses;
        self.rooms += o.rooms;
        self.total_area_cm2 += o.total_area_cm2;
        add(&mut self.area_histogram, &o.area_histogram);
        add(&mut self.rooms_per_house, &o.rooms_per_house);
        add(&mut self.objects_per_room, &o.objects_per_room);
        add(&mut self.object_type_counts, &o.object_type_counts);
        add(&mut self.room_type_counts, &o.room_type_counts);
    }

    pub fn mean_area(&self) -> f64 {
        if self.houses == 0 {
            0.0
        } else {
            self.total_area_cm2 as f64 / 1e4 / self.houses as f64
        }
    }
}

pub fn compute_stats<'a>(houses: impl IntoIterator<Item = &'a House>) -> DatasetStats {
    let mut s = DatasetStats::default();
    for h in houses {
        s.add_house(h);
    }
    s
}
