//! Finite patches of the `{k,3}` tiling of the disk grown by reflecting
//! faces across their edges.

use std::collections::{HashMap, VecDeque};

use crate::error::{GeomError, GeomResult};
use crate::hyperbolic::{HPoint, Isometry};
use crate::polygons::{realize_regular, TILE_ANGLE};
use crate::tilings::graph::{Edge, Face, Meta, TilingGraph, Vertex};

const QUANTUM: f64 = 1e-10;
const MAX_RADIUS: f64 = 1.0 - 1e-12;

/// Points bucketed on a `1e-10` grid; lookups also scan neighbouring cells.
#[derive(Default)]
struct PointIndex {
    cells: HashMap<(i64, i64), Vec<usize>>,
    points: Vec<HPoint>,
}

impl PointIndex {
    fn key(p: HPoint) -> (i64, i64) {
        ((p.x() / QUANTUM).round() as i64, (p.y() / QUANTUM).round() as i64)
    }

    fn find(&self, p: HPoint) -> Option<usize> {
        let (kx, ky) = Self::key(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = self.cells.get(&(kx + dx, ky + dy)) {
                    for &i in ids {
                        let q = self.points[i];
                        if (q.x() - p.x()).abs() <= QUANTUM && (q.y() - p.y()).abs() <= QUANTUM {
                            return Some(i);
                        }
                    }
                }
            }
        }
        None
    }

    fn insert(&mut self, p: HPoint) -> usize {
        let i = self.points.len();
        self.points.push(p);
        self.cells.entry(Self::key(p)).or_default().push(i);
        i
    }

    fn find_or_insert(&mut self, p: HPoint) -> usize {
        self.find(p).unwrap_or_else(|| self.insert(p))
    }
}

#[derive(Default)]
struct Builder {
    k: usize,
    centers: PointIndex,
    verts: PointIndex,
    edge_ids: HashMap<(usize, usize), i64>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
}

impl Builder {
    fn add_face(&mut self, center: HPoint, corners: Vec<HPoint>, level: usize) -> GeomResult<usize> {
        if let Some(p) = corners.iter().find(|p| p.norm_sq().sqrt() > MAX_RADIUS) {
            return Err(GeomError::Precision {
                depth: level,
                radius: p.norm_sq().sqrt(),
            });
        }
        self.centers.insert(center);
        let ids: Vec<usize> = corners.iter().map(|&p| self.verts.find_or_insert(p)).collect();
        let k = self.k;
        let mut boundary = Vec::with_capacity(k);
        for i in 0..k {
            let (a, b) = (ids[i], ids[(i + 1) % k]);
            let key = (a.min(b), a.max(b));
            let id = match self.edge_ids.get(&key) {
                Some(&id) => id,
                None => {
                    let id = self.edges.len() as i64 + 1;
                    self.edges.push(Edge { id, v: [a, b] });
                    self.edge_ids.insert(key, id);
                    id
                }
            };
            boundary.push(if self.edges[id as usize - 1].v == [a, b] { id } else { -id });
        }
        let id = self.faces.len();
        self.faces.push(Face {
            id,
            boundary,
            lift: Some(corners),
            area: None,
            perimeter: None,
        });
        Ok(id)
    }
}

/// Faces within `depth` edge-reflection steps of the central regular
/// `k`-gon. Every vertex records degree 3, its degree in the full tiling.
pub fn generate_patch(k: usize, depth: usize) -> GeomResult<TilingGraph> {
    if k < 7 {
        return Err(GeomError::domain(format!(
            "{{k,3}} tilings of the disk need k ≥ 7, got {k}"
        )));
    }
    let seed = realize_regular(k, TILE_ANGLE)?;
    let mut b = Builder {
        k,
        ..Builder::default()
    };
    let mut queue = VecDeque::new();
    let first = b.add_face(HPoint::ORIGIN, seed.vertices().to_vec(), 0)?;
    queue.push_back((first, HPoint::ORIGIN, 0usize));
    while let Some((f, center, level)) = queue.pop_front() {
        if level == depth {
            continue;
        }
        let corners = b.faces[f].lift.clone().expect("generated faces are lifted");
        for i in 0..k {
            let refl = Isometry::reflection_in_geodesic(corners[i], corners[(i + 1) % k])?;
            let c = refl.apply(center);
            if b.centers.find(c).is_some() {
                continue;
            }
            let mut image: Vec<HPoint> = corners.iter().map(|&p| refl.apply(p)).collect();
            image.reverse();
            let g = b.add_face(c, image, level + 1)?;
            queue.push_back((g, c, level + 1));
        }
    }

    let vertices = b
        .verts
        .points
        .iter()
        .enumerate()
        .map(|(id, &p)| Vertex {
            id,
            degree: Some(3),
            lift: Some(p),
        })
        .collect();
    Ok(TilingGraph {
        vertices,
        edges: b.edges,
        faces: b.faces,
        meta: Meta {
            name: Some(format!("{{{k},3}} patch, depth {depth}")),
            open: true,
            ..Meta::default()
        },
    })
}
