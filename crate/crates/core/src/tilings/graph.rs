//! Tiling multigraphs: vertices, undirected edges, faces bounded by cycles of
//! signed edge ids, optional disk lifts and area/perimeter annotations.

use std::collections::HashMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, GeomResult};
use crate::hyperbolic::{HPoint, EPS_GEOM};
use crate::polygons::Polygon;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    /// Degree in the full tiling when it differs from the degree visible in
    /// this graph (boundary vertices of an open patch).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift: Option<HPoint>,
}

/// Edge `id ≥ 1` oriented from `v[0]` to `v[1]`; `-id` traverses it
/// backwards.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub id: i64,
    pub v: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Face {
    pub id: usize,
    /// Signed edge ids in counterclockwise order.
    pub boundary: Vec<i64>,
    /// Disk lift; corner `i` is the tail of `boundary[i]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift: Option<Vec<HPoint>>,
    /// Overrides the lift's area (curvilinear tiles).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub area: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perimeter: Option<f64>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_area: Option<f64>,
    /// A patch of a larger tiling: boundary edges bound only one face.
    #[serde(default, skip_serializing_if = "is_false")]
    pub open: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TilingGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
    #[serde(default)]
    pub meta: Meta,
}

/// Verdict for one of the named tiling invariants.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantCheck {
    pub invariant: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

pub const INVARIANTS: [&str; 4] = ["edge_slots", "degrees", "connected", "gauss_bonnet"];

impl TilingGraph {
    pub fn from_json(s: &str) -> GeomResult<Self> {
        serde_json::from_str(s).map_err(|e| GeomError::Io(format!("tiling JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        crate::json::to_string_pretty(self)
    }

    pub fn is_closed(&self) -> bool {
        !self.meta.open
    }

    fn vertex_index(&self) -> HashMap<usize, usize> {
        self.vertices.iter().enumerate().map(|(i, v)| (v.id, i)).collect()
    }

    fn edge_index(&self) -> HashMap<i64, usize> {
        self.edges.iter().enumerate().map(|(i, e)| (e.id, i)).collect()
    }

    pub fn edge(&self, id: i64) -> Option<&Edge> {
        let id = id.abs();
        self.edges.iter().find(|e| e.id == id)
    }

    /// Ids are unique, edges reference existing vertices, boundaries
    /// reference existing edges and close up head to tail.
    pub fn check_incidence(&self) -> GeomResult<()> {
        let bad = |m: String| Err(GeomError::tiling("incidence", m));
        let vidx = self.vertex_index();
        if vidx.len() != self.vertices.len() {
            return bad("duplicate vertex id".into());
        }
        let eidx = self.edge_index();
        if eidx.len() != self.edges.len() {
            return bad("duplicate edge id".into());
        }
        for e in &self.edges {
            if e.id < 1 {
                return bad(format!("edge id {} must be at least 1", e.id));
            }
            for v in e.v {
                if !vidx.contains_key(&v) {
                    return bad(format!("edge {} references missing vertex {v}", e.id));
                }
            }
        }
        let mut face_ids = std::collections::HashSet::new();
        for f in &self.faces {
            if !face_ids.insert(f.id) {
                return bad(format!("duplicate face id {}", f.id));
            }
            if f.boundary.is_empty() {
                return bad(format!("face {} has an empty boundary", f.id));
            }
            for &d in &f.boundary {
                if d == 0 || !eidx.contains_key(&d.abs()) {
                    return bad(format!("face {} references missing edge {d}", f.id));
                }
            }
            let n = f.boundary.len();
            for i in 0..n {
                let (a, b) = (f.boundary[i], f.boundary[(i + 1) % n]);
                if self.head(a) != self.tail(b) {
                    return bad(format!(
                        "face {}: edge {a} ends at vertex {} but edge {b} starts at vertex {}",
                        f.id,
                        self.head(a),
                        self.tail(b)
                    ));
                }
            }
            if let Some(lift) = &f.lift {
                if lift.len() != n {
                    return bad(format!(
                        "face {} has {} boundary edges but a lift with {} corners",
                        f.id,
                        n,
                        lift.len()
                    ));
                }
            }
        }
        Ok(())
    }

    /// Start vertex of a signed edge.
    pub fn tail(&self, d: i64) -> usize {
        let e = self.edge(d).expect("edge exists");
        if d > 0 {
            e.v[0]
        } else {
            e.v[1]
        }
    }

    pub fn head(&self, d: i64) -> usize {
        self.tail(-d)
    }

    /// Vertex ids at the corners of a face, in boundary order.
    pub fn corners(&self, face: &Face) -> Vec<usize> {
        face.boundary.iter().map(|&d| self.tail(d)).collect()
    }

    /// Edge ends at each vertex as seen in this graph; a loop counts twice.
    pub fn computed_degrees(&self) -> HashMap<usize, usize> {
        let mut deg: HashMap<usize, usize> = self.vertices.iter().map(|v| (v.id, 0)).collect();
        for e in &self.edges {
            for v in e.v {
                *deg.entry(v).or_default() += 1;
            }
        }
        deg
    }

    /// Stored degree if present, otherwise the computed one.
    pub fn effective_degrees(&self) -> HashMap<usize, usize> {
        let mut deg = self.computed_degrees();
        for v in &self.vertices {
            if let Some(d) = v.degree {
                deg.insert(v.id, d);
            }
        }
        deg
    }

    /// Number of boundary slots occupied by each edge.
    pub fn edge_slots(&self) -> HashMap<i64, usize> {
        let mut slots: HashMap<i64, usize> = self.edges.iter().map(|e| (e.id, 0)).collect();
        for f in &self.faces {
            for &d in &f.boundary {
                *slots.entry(d.abs()).or_default() += 1;
            }
        }
        slots
    }

    /// Vertices all of whose incident edges bound two face slots.
    pub fn interior_vertices(&self) -> Vec<usize> {
        let slots = self.edge_slots();
        let mut interior: HashMap<usize, bool> = self.vertices.iter().map(|v| (v.id, true)).collect();
        for e in &self.edges {
            if slots[&e.id] != 2 {
                for v in e.v {
                    interior.insert(v, false);
                }
            }
        }
        let mut ids: Vec<usize> = interior.into_iter().filter(|&(_, i)| i).map(|(v, _)| v).collect();
        ids.sort_unstable();
        ids
    }

    pub fn euler_characteristic(&self) -> GeomResult<i64> {
        self.check_incidence()?;
        Ok(self.faces.len() as i64 - self.edges.len() as i64 + self.vertices.len() as i64)
    }

    pub fn face_polygon(&self, face: &Face) -> GeomResult<Polygon> {
        match &face.lift {
            Some(l) => Polygon::new(l.clone()),
            None => Err(GeomError::tiling(
                "geometry",
                format!("face {} has no lift", face.id),
            )),
        }
    }

    /// Annotated area, else the Gauss-Bonnet area of the lift.
    pub fn face_area(&self, face: &Face) -> GeomResult<f64> {
        match face.area {
            Some(a) => Ok(a),
            None => self.face_polygon(face)?.area_gauss_bonnet(),
        }
    }

    pub fn face_perimeter(&self, face: &Face) -> GeomResult<f64> {
        match face.perimeter {
            Some(p) => Ok(p),
            None => Ok(self.face_polygon(face)?.perimeter()),
        }
    }

    /// Sum of face areas (annotations take precedence over lifts).
    pub fn surface_area(&self) -> GeomResult<f64> {
        self.faces.iter().map(|f| self.face_area(f)).sum()
    }

    /// Area of a closed surface from the metadata or `−2πχ`.
    pub fn topological_area(&self) -> GeomResult<f64> {
        if let Some(a) = self.meta.total_area {
            return Ok(a);
        }
        if let Some(g) = self.meta.genus {
            return Ok(2.0 * PI * (2.0 * g as f64 - 2.0));
        }
        Ok(-2.0 * PI * self.euler_characteristic()? as f64)
    }

    fn check_edge_slots(&self) -> Result<(), String> {
        let slots = self.edge_slots();
        let mut ids: Vec<_> = slots.into_iter().collect();
        ids.sort_unstable();
        for (id, n) in ids {
            let ok = if self.is_closed() { n == 2 } else { n == 1 || n == 2 };
            if !ok {
                return Err(format!("edge {id} occupies {n} boundary slot(s)"));
            }
        }
        Ok(())
    }

    fn check_degrees(&self) -> Result<(), String> {
        let computed = self.computed_degrees();
        let interior: std::collections::HashSet<usize> =
            self.interior_vertices().into_iter().collect();
        for v in &self.vertices {
            let c = computed[&v.id];
            let d = v.degree.unwrap_or(c);
            if d < 2 {
                return Err(format!("vertex {} has degree {d}", v.id));
            }
            let exact = self.is_closed() || interior.contains(&v.id);
            if exact && d != c || d < c {
                return Err(format!(
                    "vertex {} stores degree {d} but has {c} incident edge ends",
                    v.id
                ));
            }
        }
        Ok(())
    }

    fn check_connected(&self) -> Result<(), String> {
        if self.vertices.is_empty() {
            return Err("no vertices".into());
        }
        let vidx = self.vertex_index();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut Vec<usize>, mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, vidx[&e.v[0]]), find(&mut parent, vidx[&e.v[1]]));
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        for i in 0..self.vertices.len() {
            if find(&mut parent, i) != root {
                return Err(format!(
                    "vertex {} is not connected to vertex {}",
                    self.vertices[i].id, self.vertices[0].id
                ));
            }
        }
        Ok(())
    }

    /// Lifted faces are valid positively oriented polygons agreeing with any
    /// vertex lifts; when every face of a closed surface is lifted their
    /// total area is `−2πχ` within `N·ε`.
    fn check_geometry(&self) -> Result<(), String> {
        let mut total = 0.0;
        let mut all_lifted = true;
        for f in &self.faces {
            let Some(lift) = &f.lift else {
                all_lifted = false;
                continue;
            };
            let poly = Polygon::new(lift.clone()).map_err(|e| format!("face {}: {e}", f.id))?;
            if poly.orientation() != crate::polygons::Orientation::Positive {
                return Err(format!("face {} lift is clockwise", f.id));
            }
            let area = poly
                .area_gauss_bonnet()
                .map_err(|e| format!("face {}: {e}", f.id))?;
            total += area;
            for (corner, p) in self.corners(f).into_iter().zip(lift) {
                let v = self.vertices.iter().find(|v| v.id == corner).expect("checked");
                if let Some(q) = v.lift {
                    if p.dist(q) > 1e-8 {
                        return Err(format!(
                            "face {} corner at vertex {} is off the vertex lift by {}",
                            f.id,
                            corner,
                            p.dist(q)
                        ));
                    }
                }
            }
        }
        if all_lifted && self.is_closed() && !self.faces.is_empty() {
            let chi = self.faces.len() as f64 - self.edges.len() as f64 + self.vertices.len() as f64;
            let expected = -2.0 * PI * chi;
            let tol = self.faces.len() as f64 * EPS_GEOM;
            if (total - expected).abs() > tol {
                return Err(format!(
                    "lifted area {total} differs from −2πχ = {expected} by more than {tol}"
                ));
            }
        }
        Ok(())
    }

    /// Evaluates the four tiling invariants independently. Fails only if
    /// the incidence data cannot be interpreted at all.
    pub fn check_invariants(&self) -> GeomResult<Vec<InvariantCheck>> {
        self.check_incidence()?;
        let results = [
            self.check_edge_slots(),
            self.check_degrees(),
            self.check_connected(),
            self.check_geometry(),
        ];
        Ok(INVARIANTS
            .iter()
            .zip(results)
            .map(|(&invariant, r)| InvariantCheck {
                invariant,
                passed: r.is_ok(),
                message: r.err(),
            })
            .collect())
    }

    /// First violated invariant as an error.
    pub fn validate(&self) -> GeomResult<()> {
        for c in self.check_invariants()? {
            if !c.passed {
                return Err(GeomError::tiling(c.invariant, c.message.unwrap_or_default()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Square torus: one vertex, two loops, one face.
    fn torus() -> TilingGraph {
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
            meta: Meta { genus: Some(1), ..Meta::default() },
        }
    }

    fn failing(t: &TilingGraph) -> Vec<&'static str> {
        t.check_invariants()
            .unwrap()
            .into_iter()
            .filter(|c| !c.passed)
            .map(|c| c.invariant)
            .collect()
    }

    #[test]
    fn torus_is_valid() {
        let t = torus();
        t.validate().unwrap();
        assert_eq!(t.euler_characteristic().unwrap(), 0);
        assert_eq!(t.computed_degrees()[&0], 4);
        assert_eq!(t.topological_area().unwrap(), 0.0);
    }

    #[test]
    fn fault_edge_slots() {
        let mut t = torus();
        t.edges.push(Edge { id: 3, v: [0, 0] });
        t.faces.push(Face {
            id: 1,
            boundary: vec![3],
            lift: None,
            area: Some(0.0),
            perimeter: None,
        });
        assert_eq!(failing(&t), vec!["edge_slots"]);
    }

    #[test]
    fn fault_degrees() {
        // a whisker walked out and back inside the face
        let mut t = torus();
        t.vertices.push(Vertex { id: 1, degree: None, lift: None });
        t.edges.push(Edge { id: 3, v: [0, 1] });
        t.faces[0].boundary = vec![1, 2, -1, -2, 3, -3];
        assert_eq!(failing(&t), vec!["degrees"]);
    }

    #[test]
    fn fault_connected() {
        let mut t = torus();
        t.vertices.push(Vertex { id: 1, degree: None, lift: None });
        t.edges.push(Edge { id: 3, v: [1, 1] });
        t.edges.push(Edge { id: 4, v: [1, 1] });
        t.faces.push(Face {
            id: 1,
            boundary: vec![3, 4, -3, -4],
            lift: None,
            area: Some(0.0),
            perimeter: None,
        });
        assert_eq!(failing(&t), vec!["connected"]);
    }

    #[test]
    fn fault_gauss_bonnet() {
        let mut t = torus();
        let sq = crate::polygons::realize_regular(4, PI / 4.0).unwrap();
        t.faces[0].lift = Some(sq.vertices().to_vec());
        assert_eq!(failing(&t), vec!["gauss_bonnet"]);
    }

    #[test]
    fn broken_boundary_chain() {
        let mut t = torus();
        t.vertices.push(Vertex { id: 1, degree: None, lift: None });
        t.edges[1].v = [0, 1];
        assert!(matches!(
            t.validate(),
            Err(GeomError::InvalidTiling { invariant: "incidence", .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let t = torus();
        let s = t.to_json();
        assert!(s.contains("\"boundary\""));
        assert_eq!(TilingGraph::from_json(&s).unwrap(), t);
    }
}
