//! Shipped tilings: the Klein quartic and its fault-injected variants, the
//! single-octagon genus-2 surface, the square torus and a two-face patch.

use std::collections::HashMap;
use std::f64::consts::{PI, TAU};

use crate::error::{GeomError, GeomResult};
use crate::hyperbolic::HPoint;
use crate::polygons::{angle_from_perimeter, p_k, realize_regular, Polygon, TILE_ANGLE};
use crate::tilings::graph::{Edge, Face, Meta, TilingGraph, Vertex};

pub const FIXTURE_NAMES: [&str; 7] = [
    "klein-quartic",
    "klein-quartic-perturbed",
    "klein-quartic-degree4",
    "klein-quartic-area",
    "octagon",
    "torus",
    "two-face-patch",
];

pub fn by_name(name: &str) -> GeomResult<TilingGraph> {
    match name {
        "klein-quartic" => klein_quartic_fixture(),
        "klein-quartic-perturbed" => klein_quartic_perturbed(),
        "klein-quartic-degree4" => klein_quartic_degree4(),
        "klein-quartic-area" => klein_quartic_area(),
        "octagon" => single_octagon(),
        "torus" => Ok(square_torus()),
        "two-face-patch" => two_face_patch(),
        _ => Err(GeomError::domain(format!(
            "unknown fixture {name:?}; expected one of {}",
            FIXTURE_NAMES.join(", ")
        ))),
    }
}

/// Element of PSL(2, 7): a 2×2 matrix over 𝔽₇ up to sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Psl([u8; 4]);

impl Psl {
    fn new(m: [i64; 4]) -> Self {
        let mut m = m.map(|x| x.rem_euclid(7) as u8);
        // the first nonzero entry is taken in 1..=3
        if let Some(&lead) = m.iter().find(|&&x| x != 0) {
            if lead > 3 {
                m = m.map(|x| (7 - x) % 7);
            }
        }
        Psl(m)
    }

    fn mul(self, o: Psl) -> Psl {
        let [a, b, c, d] = self.0.map(i64::from);
        let [e, f, g, h] = o.0.map(i64::from);
        Psl::new([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }
}

/// The 168 darts of the Klein quartic map with the right-multiplication
/// tables of `r` (order 7, turning around a face) and `s` (order 2,
/// crossing an edge); `rs` has order 3.
struct KleinGroup {
    mul_r: Vec<usize>,
    mul_s: Vec<usize>,
}

impl KleinGroup {
    fn new() -> Self {
        let r = Psl::new([1, 1, 0, 1]);
        let s = Psl::new([0, -1, 1, 0]);
        let id = Psl::new([1, 0, 0, 1]);
        let mut elems = vec![id];
        let mut index: HashMap<Psl, usize> = HashMap::from([(id, 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in [r, s] {
                let x = elems[i].mul(g);
                if !index.contains_key(&x) {
                    index.insert(x, elems.len());
                    elems.push(x);
                }
            }
            i += 1;
        }
        let mul_r = elems.iter().map(|&x| index[&x.mul(r)]).collect();
        let mul_s = elems.iter().map(|&x| index[&x.mul(s)]).collect();
        KleinGroup { mul_r, mul_s }
    }

    fn len(&self) -> usize {
        self.mul_r.len()
    }

    /// Orbit labels of a permutation, numbered by smallest member.
    fn orbits(perm: &[usize]) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; perm.len()];
        let mut next = 0;
        for start in 0..perm.len() {
            if label[start] != usize::MAX {
                continue;
            }
            let mut x = start;
            while label[x] == usize::MAX {
                label[x] = next;
                x = perm[x];
            }
            next += 1;
        }
        (label, next)
    }
}

/// Combinatorial Klein quartic: 24 heptagons, 84 edges, 56 trivalent
/// vertices. Each face carries the regular heptagon with `2π/3` angles as
/// its own lift.
pub fn klein_quartic_fixture() -> GeomResult<TilingGraph> {
    klein_quartic_with(&realize_regular(7, TILE_ANGLE)?)
}

fn klein_quartic_with(shape: &Polygon) -> GeomResult<TilingGraph> {
    let g = KleinGroup::new();
    let n = g.len();
    // a dart starts where the dart across its edge, turned once, starts
    let sr: Vec<usize> = (0..n).map(|x| g.mul_r[g.mul_s[x]]).collect();
    let (vertex_of, nv) = KleinGroup::orbits(&sr);
    let (face_of, _) = KleinGroup::orbits(&g.mul_r);

    let mut edge_of = vec![0i64; n];
    let mut edges = Vec::new();
    for x in 0..n {
        let y = g.mul_s[x];
        if x < y {
            let id = edges.len() as i64 + 1;
            edges.push(Edge {
                id,
                v: [vertex_of[x], vertex_of[g.mul_r[x]]],
            });
            edge_of[x] = id;
            edge_of[y] = -id;
        }
    }

    let mut faces: Vec<Face> = Vec::new();
    let mut seen = vec![false; n];
    for x in 0..n {
        if seen[face_of[x]] {
            continue;
        }
        seen[face_of[x]] = true;
        let mut boundary = Vec::with_capacity(7);
        let mut d = x;
        for _ in 0..7 {
            boundary.push(edge_of[d]);
            d = g.mul_r[d];
        }
        faces.push(Face {
            id: faces.len(),
            boundary,
            lift: Some(shape.vertices().to_vec()),
            area: None,
            perimeter: None,
        });
    }

    Ok(TilingGraph {
        vertices: (0..nv).map(|id| Vertex { id, degree: None, lift: None }).collect(),
        edges,
        faces,
        meta: Meta {
            name: Some("Klein quartic".into()),
            genus: Some(3),
            ..Meta::default()
        },
    })
}

/// A non-regular convex heptagon with the area `π/3` of the regular one,
/// so its perimeter is larger than `P_7`.
pub fn perturbed_heptagon() -> GeomResult<Polygon> {
    let regular = realize_regular(7, TILE_ANGLE)?;
    let r0 = regular.vertices()[0].radius();
    let shape = |scale: f64| -> GeomResult<Polygon> {
        let pts = (0..7)
            .map(|i| {
                let phi = TAU * i as f64 / 7.0;
                let wobble = 1.0 + 0.06 * (2.0 * phi).cos() + 0.03 * phi.sin();
                HPoint::from_hyperbolic_polar(scale * r0 * wobble, phi + 0.02 * (3.0 * phi).sin())
            })
            .collect::<GeomResult<Vec<_>>>()?;
        Polygon::new(pts)
    };
    let target = PI / 3.0;
    let (mut lo, mut hi) = (0.5, 1.5);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if shape(mid)?.area_gauss_bonnet()? < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    shape(0.5 * (lo + hi))
}

/// Klein quartic with every face lifted to [`perturbed_heptagon`].
/// The lifts are not glued geometrically, so per-vertex angle sums miss
/// 2π and the `angle_sums` audit fails; Gauss-Bonnet still holds.
pub fn klein_quartic_perturbed() -> GeomResult<TilingGraph> {
    let mut t = klein_quartic_with(&perturbed_heptagon()?)?;
    t.meta.name = Some("Klein quartic, perturbed same-area heptagons".into());
    Ok(t)
}

/// Klein quartic with edge 1 contracted: 55 vertices, one of degree 4, two
/// hexagonal faces. Faces keep area annotations `π/3` and drop their lifts.
pub fn klein_quartic_degree4() -> GeomResult<TilingGraph> {
    let mut t = klein_quartic_fixture()?;
    let [keep, gone] = t.edge(1).expect("edge 1").v;
    t.edges.retain(|e| e.id != 1);
    for e in &mut t.edges {
        for v in &mut e.v {
            if *v == gone {
                *v = keep;
            }
        }
    }
    t.vertices.retain(|v| v.id != gone);
    for f in &mut t.faces {
        f.boundary.retain(|d| d.abs() != 1);
        f.lift = None;
        f.area = Some(PI / 3.0);
    }
    t.meta.name = Some("Klein quartic, one edge contracted".into());
    Ok(t)
}

/// Klein quartic with face 0 annotated at area `π/3 + 0.1`.
pub fn klein_quartic_area() -> GeomResult<TilingGraph> {
    let mut t = klein_quartic_fixture()?;
    t.faces[0].area = Some(PI / 3.0 + 0.1);
    t.meta.name = Some("Klein quartic, face 0 area perturbed".into());
    Ok(t)
}

/// Genus-2 surface from one regular octagon with angles `π/4`, all eight
/// corners meeting at a single vertex.
pub fn single_octagon() -> GeomResult<TilingGraph> {
    let lift = realize_regular(8, PI / 4.0)?;
    Ok(TilingGraph {
        vertices: vec![Vertex { id: 0, degree: None, lift: None }],
        edges: (1..=4).map(|id| Edge { id, v: [0, 0] }).collect(),
        faces: vec![Face {
            id: 0,
            boundary: vec![1, 2, -1, -2, 3, 4, -3, -4],
            lift: Some(lift.vertices().to_vec()),
            area: None,
            perimeter: None,
        }],
        meta: Meta {
            name: Some("single octagon".into()),
            genus: Some(2),
            ..Meta::default()
        },
    })
}

/// Flat torus from one square; area annotation `0`, no lift.
pub fn square_torus() -> TilingGraph {
    TilingGraph {
        vertices: vec![Vertex { id: 0, degree: None, lift: None }],
        edges: vec![Edge { id: 1, v: [0, 0] }, Edge { id: 2, v: [0, 0] }],
        faces: vec![Face {
            id: 0,
            boundary: vec![1, 2, -1, -2],
            lift: None,
            area: Some(0.0),
            perimeter: None,
        }],
        meta: Meta {
            name: Some("square torus".into()),
            genus: Some(1),
            ..Meta::default()
        },
    }
}

/// Open patch of a regular hexagon and a regular octagon, both of
/// perimeter `P_7`, glued along one edge. All vertices record degree 3.
pub fn two_face_patch() -> GeomResult<TilingGraph> {
    let big_p = p_k(7.0)?;
    let hexagon = realize_regular(6, angle_from_perimeter(6.0, big_p)?)?;
    let octagon = realize_regular(8, angle_from_perimeter(8.0, big_p)?)?;
    // hexagon corners 0..6, octagon corners 6..12 plus the shared edge
    // 0 → 1 of the hexagon, traversed 1 → 0 by the octagon
    let mut edges: Vec<Edge> = (0..6).map(|i| Edge { id: i as i64 + 1, v: [i, (i + 1) % 6] }).collect();
    let oct_vertices = [1, 0, 6, 7, 8, 9, 10, 11];
    let mut oct_boundary = vec![-1];
    for i in 1..8 {
        let (a, b) = (oct_vertices[i], oct_vertices[(i + 1) % 8]);
        let id = edges.len() as i64 + 1;
        edges.push(Edge { id, v: [a, b] });
        oct_boundary.push(id);
    }
    Ok(TilingGraph {
        vertices: (0..12).map(|id| Vertex { id, degree: Some(3), lift: None }).collect(),
        edges,
        faces: vec![
            Face {
                id: 0,
                boundary: (1..=6).collect(),
                lift: Some(hexagon.vertices().to_vec()),
                area: None,
                perimeter: None,
            },
            Face {
                id: 1,
                boundary: oct_boundary,
                lift: Some(octagon.vertices().to_vec()),
                area: None,
                perimeter: None,
            },
        ],
        meta: Meta {
            name: Some("hexagon and octagon of perimeter P_7".into()),
            open: true,
            ..Meta::default()
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygons::a_k;

    #[test]
    fn klein_counts() {
        let t = klein_quartic_fixture().unwrap();
        assert_eq!((t.faces.len(), t.edges.len(), t.vertices.len()), (24, 84, 56));
        assert_eq!(t.euler_characteristic().unwrap(), -4);
        t.validate().unwrap();
        assert!(t.computed_degrees().values().all(|&d| d == 3));
        assert!((t.surface_area().unwrap() - 8.0 * PI).abs() < 1e-12);
        for f in &t.faces {
            assert!((t.face_area(f).unwrap() - a_k(7.0).unwrap()).abs() < 1e-13);
        }
    }

    #[test]
    fn psl_has_168_elements() {
        assert_eq!(KleinGroup::new().len(), 168);
    }

    #[test]
    fn octagon_counts() {
        let t = single_octagon().unwrap();
        assert_eq!(t.euler_characteristic().unwrap(), -2);
        t.validate().unwrap();
        assert!((t.surface_area().unwrap() - 4.0 * PI).abs() < 1e-12);
        assert_eq!(t.computed_degrees()[&0], 8);
    }

    #[test]
    fn perturbed_heptagon_properties() {
        let h = perturbed_heptagon().unwrap();
        assert!((h.area_gauss_bonnet().unwrap() - PI / 3.0).abs() < 1e-12);
        assert!(h.perimeter() > p_k(7.0).unwrap() + 1e-4);
        assert!(crate::polygons::is_convex(&h, 1e-12).unwrap());
    }

    #[test]
    fn variants_validate() {
        for name in FIXTURE_NAMES {
            let t = by_name(name).unwrap();
            t.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn degree4_counts() {
        let t = klein_quartic_degree4().unwrap();
        assert_eq!((t.faces.len(), t.edges.len(), t.vertices.len()), (24, 83, 55));
        let deg = t.computed_degrees();
        assert_eq!(deg.values().filter(|&&d| d == 4).count(), 1);
        assert_eq!(t.faces.iter().filter(|f| f.boundary.len() == 6).count(), 2);
    }

    #[test]
    fn two_face_patch_perimeters() {
        let t = two_face_patch().unwrap();
        for f in &t.faces {
            assert!((t.face_perimeter(f).unwrap() - p_k(7.0).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn unknown_name() {
        assert!(by_name("sphere").is_err());
    }
}
