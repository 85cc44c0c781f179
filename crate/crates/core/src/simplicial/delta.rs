//! Morphisms of the simplex category: monotone maps `[n] -> [m]`.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeltaMorphism {
    source: usize,
    target: usize,
    values: Vec<usize>,
}

impl DeltaMorphism {
    pub fn new(source: usize, target: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != source + 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} values for source [{source}]",
                values.len()
            )));
        }
        if values.iter().any(|&v| v > target) || values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::DimensionMismatch(format!(
                "{values:?} is not a monotone map into [{target}]"
            )));
        }
        Ok(DeltaMorphism {
            source,
            target,
            values,
        })
    }

    pub fn identity(n: usize) -> Self {
        DeltaMorphism {
            source: n,
            target: n,
            values: (0..=n).collect(),
        }
    }

    /// Coface `∂^i : [n-1] -> [n]`, skipping `i`.
    pub fn face(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        DeltaMorphism {
            source: n - 1,
            target: n,
            values: (0..n).map(|k| if k < i { k } else { k + 1 }).collect(),
        }
    }

    /// Codegeneracy `s^j : [n+1] -> [n]`, hitting `j` twice.
    pub fn degeneracy(n: usize, j: usize) -> Self {
        assert!(j <= n);
        DeltaMorphism {
            source: n + 1,
            target: n,
            values: (0..=n + 1).map(|k| if k <= j { k } else { k - 1 }).collect(),
        }
    }

    /// The vertex `[0] -> [n]` at `i`.
    pub fn vertex(n: usize, i: usize) -> Self {
        assert!(i <= n);
        DeltaMorphism {
            source: 0,
            target: n,
            values: vec![i],
        }
    }

    /// The injective map `[k] -> [n]` onto the increasing list `vertices`.
    pub fn inclusion(n: usize, vertices: &[usize]) -> Result<Self> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) || vertices.is_empty() {
            return Err(Error::DimensionMismatch(format!(
                "{vertices:?} is not an increasing vertex list"
            )));
        }
        Self::new(vertices.len() - 1, n, vertices.to_vec())
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &DeltaMorphism) -> Result<Self> {
        if other.target != self.source {
            return Err(Error::Incomposable(format!(
                "[{}] -> [{}] after [{}] -> [{}]",
                self.source, self.target, other.source, other.target
            )));
        }
        Ok(DeltaMorphism {
            source: other.source,
            target: self.target,
            values: other.values.iter().map(|&v| self.values[v]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && self.values[self.source] == self.target
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Epi–mono factorization `self = mono ∘ epi`, returned as the list of
    /// codegeneracies (applied first, in order) and cofaces (applied after).
    pub fn factor(&self) -> (Vec<DeltaMorphism>, Vec<DeltaMorphism>) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        // Degeneracies: s^j for every j where the map repeats a value.
        let mut degens = Vec::new();
        let mut current = self.source;
        for k in (0..self.source).rev() {
            if self.values[k] == self.values[k + 1] {
                current -= 1;
                degens.push(DeltaMorphism::degeneracy(current, k));
            }
        }
        // Faces: ∂^i for every i missing from the image, increasing.
        let mut faces = Vec::new();
        let mut dim = image.len() - 1;
        for i in 0..=self.target {
            if !image.contains(&i) {
                dim += 1;
                faces.push(DeltaMorphism::face(dim, i));
            }
        }
        (degens, faces)
    }

    /// Recompose a factorization produced by [`factor`](Self::factor).
    pub fn from_factors(degens: &[DeltaMorphism], faces: &[DeltaMorphism], source: usize) -> Self {
        let mut acc = DeltaMorphism::identity(source);
        for s in degens.iter().chain(faces) {
            acc = s.compose(&acc).expect("factors compose");
        }
        acc
    }
}
