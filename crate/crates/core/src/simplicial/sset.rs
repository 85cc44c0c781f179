//! Finite simplicial sets presented by their nondegenerate simplices.
//!
//! Faces of nondegenerate simplices are assumed nondegenerate (a
//! Δ-complex), which covers ordered simplicial complexes and the usual
//! small quotients such as a circle with one vertex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::delta::DeltaMorphism;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSimplicialSet {
    name: String,
    /// `faces[d][k]` lists the `d + 1` faces of the `k`-th `d`-simplex
    /// (`faces[0]` holds one empty list per vertex).
    faces: Vec<Vec<Vec<usize>>>,
    /// Vertex lists when the set comes from an ordered complex.
    labels: Option<Vec<Vec<Vec<usize>>>>,
}

#[derive(Serialize, Deserialize)]
struct SimplicialSetFile {
    name: String,
    #[serde(default)]
    complex: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    vertices: Option<usize>,
    #[serde(default)]
    faces: Option<Vec<Vec<Vec<usize>>>>,
}

impl FiniteSimplicialSet {
    /// From face incidence: `vertices` points and `faces[d-1][k]` the faces
    /// of the `k`-th `d`-simplex.
    pub fn from_faces(name: &str, vertices: usize, higher: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let mut faces = vec![vec![Vec::new(); vertices]];
        faces.extend(higher);
        let s = FiniteSimplicialSet {
            name: name.to_string(),
            faces,
            labels: None,
        };
        s.validate()?;
        Ok(s)
    }

    /// The ordered simplicial complex generated by the given vertex lists.
    pub fn from_complex(name: &str, maximal: &[Vec<usize>]) -> Result<Self> {
        let mut by_dim: Vec<BTreeMap<Vec<usize>, usize>> = Vec::new();
        for simplex in maximal {
            let mut s = simplex.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != simplex.len() || s.is_empty() {
                return Err(Error::Parse(format!("bad simplex {simplex:?}")));
            }
            let k = s.len();
            for mask in 1u32..(1 << k) {
                let sub: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect();
                let d = sub.len() - 1;
                while by_dim.len() <= d {
                    by_dim.push(BTreeMap::new());
                }
                by_dim[d].insert(sub, 0);
            }
        }
        for level in by_dim.iter_mut() {
            for (i, v) in level.values_mut().enumerate() {
                *v = i;
            }
        }
        let mut faces = Vec::new();
        let mut labels = Vec::new();
        for (d, level) in by_dim.iter().enumerate() {
            let mut fd = Vec::new();
            let mut ld = Vec::new();
            for simplex in level.keys() {
                ld.push(simplex.clone());
                if d == 0 {
                    fd.push(Vec::new());
                    continue;
                }
                let row = (0..=d)
                    .map(|i| {
                        let mut face = simplex.clone();
                        face.remove(i);
                        by_dim[d - 1][&face]
                    })
                    .collect();
                fd.push(row);
            }
            faces.push(fd);
            labels.push(ld);
        }
        Ok(FiniteSimplicialSet {
            name: name.to_string(),
            faces,
            labels: Some(labels),
        })
    }

    /// `Δ^n`.
    pub fn standard(n: usize) -> Self {
        Self::from_complex(&format!("Delta^{n}"), &[(0..=n).collect()]).expect("valid")
    }

    /// `∂Δ^n` for `n >= 1`.
    pub fn boundary(n: usize) -> Self {
        let maximal: Vec<Vec<usize>> = (0..=n)
            .map(|i| (0..=n).filter(|&j| j != i).collect())
            .collect();
        Self::from_complex(&format!("boundary of Delta^{n}"), &maximal).expect("valid")
    }

    /// `k` disjoint points.
    pub fn points(k: usize) -> Self {
        let maximal: Vec<Vec<usize>> = (0..k).map(|i| vec![i]).collect();
        Self::from_complex(&format!("{k} points"), &maximal).expect("valid")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SimplicialSetFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        match (file.complex, file.vertices, file.faces) {
            (Some(c), None, None) => Self::from_complex(&file.name, &c),
            (None, Some(v), f) => Self::from_faces(&file.name, v, f.unwrap_or_default()),
            _ => Err(Error::Parse(
                "give either \"complex\" or \"vertices\" with \"faces\"".into(),
            )),
        }
    }

    fn validate(&self) -> Result<()> {
        for d in 1..self.faces.len() {
            for (k, row) in self.faces[d].iter().enumerate() {
                if row.len() != d + 1 || row.iter().any(|&f| f >= self.faces[d - 1].len()) {
                    return Err(Error::Parse(format!("bad faces for simplex {k} in dimension {d}")));
                }
            }
            // d_i d_j = d_{j-1} d_i for i < j.
            if d >= 2 {
                for k in 0..self.faces[d].len() {
                    for j in 1..=d {
                        for i in 0..j {
                            let a = self.face(d - 1, self.face(d, k, j), i);
                            let b = self.face(d - 1, self.face(d, k, i), j - 1);
                            if a != b {
                                return Err(Error::Parse(format!(
                                    "simplicial identity fails on simplex {k} of dimension {d}"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.faces.len().saturating_sub(1)
    }

    pub fn count(&self, d: usize) -> usize {
        self.faces.get(d).map_or(0, Vec::len)
    }

    /// `d_i` of the `k`-th `d`-simplex.
    pub fn face(&self, d: usize, k: usize, i: usize) -> usize {
        self.faces[d][k][i]
    }

    pub fn label(&self, d: usize, k: usize) -> String {
        match &self.labels {
            Some(l) => {
                let v: Vec<String> = l[d][k].iter().map(|x| x.to_string()).collect();
                format!("({})", v.join(","))
            }
            None => format!("s{d}_{k}"),
        }
    }

    /// The face of the `k`-th `d`-simplex along an injective `δ : [e] -> [d]`.
    pub fn face_along(&self, d: usize, k: usize, delta: &DeltaMorphism) -> usize {
        debug_assert!(delta.is_injective() && delta.target() == d);
        let mut idx = k;
        let mut dim = d;
        for v in (0..=d).rev() {
            if !delta.values().contains(&v) {
                idx = self.face(dim, idx, v);
                dim -= 1;
            }
        }
        idx
    }

    /// Front `p`-face (first `p + 1` vertices).
    pub fn front(&self, d: usize, k: usize, p: usize) -> usize {
        let mut idx = k;
        for dim in ((p + 1)..=d).rev() {
            idx = self.face(dim, idx, dim);
        }
        idx
    }

    /// Back `q`-face (last `q + 1` vertices).
    pub fn back(&self, d: usize, k: usize, q: usize) -> usize {
        let mut idx = k;
        for dim in ((q + 1)..=d).rev() {
            idx = self.face(dim, idx, 0);
        }
        idx
    }

    /// Vertex indices of the `k`-th `d`-simplex, in order.
    pub fn vertices_of(&self, d: usize, k: usize) -> Vec<usize> {
        (0..=d).map(|i| self.front(d - i, self.back(d, k, d - i), 0)).collect()
    }

    /// Simplices that are not a face of any higher simplex, as `(dim, index)`.
    pub fn maximal(&self) -> Vec<(usize, usize)> {
        let mut is_face: Vec<Vec<bool>> = self.faces.iter().map(|l| vec![false; l.len()]).collect();
        for d in 1..self.faces.len() {
            for row in &self.faces[d] {
                for &f in row {
                    is_face[d - 1][f] = true;
                }
            }
        }
        let mut out = Vec::new();
        for (d, flags) in is_face.iter().enumerate() {
            for (k, &f) in flags.iter().enumerate() {
                if !f {
                    out.push((d, k));
                }
            }
        }
        out
    }
}
