//! Exact rational cones: construction from generators, dualization by the
//! double description method, and the full face lattice with its
//! inclusion-reversing duality.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::Zero;

use crate::mat::rank_of_rows;
use crate::scalar::{dot, lex_cmp, primitive, rat_primitive_direction, RatOf, Scalar};
use crate::{Error, Result};

/// A dual pair of pointed, full-dimensional rational cones: the weight cone
/// `σ∨` (spanned by the monoid generators) and its dual `σ`.
///
/// Facets and rays are stored once: the primitive extreme rays of `σ` are
/// exactly the facet normals of `σ∨` and vice versa, under the pairing
/// identification. Both lists are lexicographically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConePair<T> {
    rank: usize,
    dual_generators: Vec<Vec<T>>,
    sigma_rays: Vec<Vec<T>>,
}

impl<T: Scalar> ConePair<T> {
    /// Build the pair from monoid generators spanning `Z^r` rationally.
    pub fn from_generators(gens: &[Vec<T>]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let rank = gens[0].len();
        let mut prim: Vec<Vec<T>> = Vec::new();
        for g in gens {
            if g.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, got: g.len() });
            }
            if let Some(p) = primitive(g) {
                if !prim.contains(&p) {
                    prim.push(p);
                }
            }
        }
        if prim.is_empty() {
            return Err(Error::AllZeroGenerators);
        }
        let span = rank_of_rows(&prim);
        if span < rank {
            return Err(Error::NotPointed { rank, span });
        }

        let mut sigma_rays = dd_extreme_rays(&prim, rank)?;
        if rank_of_rows(&sigma_rays) < rank {
            return Err(Error::ContainsLine);
        }
        sigma_rays.sort_by(|a, b| lex_cmp(a, b));

        // A generator is an extreme ray of σ∨ exactly when the facet normals
        // vanishing on it cut out a one-dimensional face.
        let mut dual_generators: Vec<Vec<T>> = prim
            .into_iter()
            .filter(|g| {
                let active: Vec<Vec<T>> = sigma_rays
                    .iter()
                    .filter(|p| dot(g, p).is_zero())
                    .cloned()
                    .collect();
                rank_of_rows(&active) == rank - 1
            })
            .collect();
        dual_generators.sort_by(|a, b| lex_cmp(a, b));

        debug_assert!(dual_generators
            .iter()
            .all(|v| sigma_rays.iter().all(|p| !dot(v, p).is_negative())));

        Ok(Self { rank, dual_generators, sigma_rays })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Primitive extreme rays of `σ∨`.
    pub fn dual_generators(&self) -> &[Vec<T>] {
        &self.dual_generators
    }

    /// Primitive facet normals of `σ∨`; the same vectors as [`Self::sigma_rays`].
    pub fn dual_facets(&self) -> &[Vec<T>] {
        &self.sigma_rays
    }

    /// Primitive extreme rays `p_ρ` of `σ`.
    pub fn sigma_rays(&self) -> &[Vec<T>] {
        &self.sigma_rays
    }

    /// Primitive facet normals of `σ`; the same vectors as [`Self::dual_generators`].
    pub fn sigma_facets(&self) -> &[Vec<T>] {
        &self.dual_generators
    }

    /// Exchange the roles of `σ∨` and `σ`.
    pub fn dual(&self) -> Self {
        Self {
            rank: self.rank,
            dual_generators: self.sigma_rays.clone(),
            sigma_rays: self.dual_generators.clone(),
        }
    }

    /// Does `v` lie in `σ∨`?
    pub fn contains_dual(&self, v: &[T]) -> bool {
        self.sigma_rays.iter().all(|p| !dot(v, p).is_negative())
    }

    /// Does `u` lie in `σ`?
    pub fn contains_sigma(&self, u: &[T]) -> bool {
        self.dual_generators.iter().all(|g| !dot(g, u).is_negative())
    }
}

/// Extreme rays of the pointed cone `{u : ⟨n, u⟩ ≥ 0 for all n}`.
///
/// Classic double description: seed with a simplicial cone cut out by `dim`
/// independent normals, then intersect the remaining halfspaces one at a
/// time, combining adjacent positive/negative ray pairs. Adjacency is the
/// exact rank test on the common active set.
pub fn dd_extreme_rays<T: Scalar>(normals: &[Vec<T>], dim: usize) -> Result<Vec<Vec<T>>> {
    if dim == 0 {
        return Ok(Vec::new());
    }
    let mut base_idx: Vec<usize> = Vec::new();
    for (i, _) in normals.iter().enumerate() {
        if base_idx.len() == dim {
            break;
        }
        let mut trial: Vec<Vec<T>> = base_idx.iter().map(|&b| normals[b].clone()).collect();
        trial.push(normals[i].clone());
        if rank_of_rows(&trial) == trial.len() {
            base_idx.push(i);
        }
    }
    if base_idx.len() < dim {
        return Err(Error::Internal(format!(
            "double description needs {dim} independent normals, found {}",
            base_idx.len()
        )));
    }

    let base_rows: Vec<Vec<T>> = base_idx.iter().map(|&b| normals[b].clone()).collect();
    let inverse_cols = rat_inverse_columns(&base_rows)
        .ok_or_else(|| Error::Internal("base normal matrix is singular".into()))?;
    let mut rays: Vec<Vec<T>> = inverse_cols
        .iter()
        .map(|col| {
            rat_primitive_direction(col)
                .ok_or_else(|| Error::Internal("zero base ray".into()))
        })
        .collect::<Result<_>>()?;

    let mut processed: Vec<Vec<T>> = base_rows;
    for (i, n) in normals.iter().enumerate() {
        if base_idx.contains(&i) {
            continue;
        }
        let values: Vec<T> = rays.iter().map(|r| dot(n, r)).collect();
        let has_negative = values.iter().any(|v| v.is_negative());
        if !has_negative {
            processed.push(n.clone());
            continue;
        }

        let mut kept: Vec<Vec<T>> = Vec::new();
        let mut new_rays: Vec<Vec<T>> = Vec::new();
        for (r, v) in rays.iter().zip(&values) {
            if !v.is_negative() {
                kept.push(r.clone());
            }
        }
        for (rp, vp) in rays.iter().zip(&values) {
            if !vp.is_positive() {
                continue;
            }
            for (rm, vm) in rays.iter().zip(&values) {
                if !vm.is_negative() {
                    continue;
                }
                if !adjacent(&processed, rp, rm, dim) {
                    continue;
                }
                let pos_part = crate::scalar::scale(vp, rm);
                let neg_part = crate::scalar::scale(vm, rp);
                let combined = crate::scalar::sub(&pos_part, &neg_part);
                if let Some(w) = primitive(&combined) {
                    if !new_rays.contains(&w) {
                        new_rays.push(w);
                    }
                }
            }
        }
        kept.extend(new_rays);
        rays = kept;
        processed.push(n.clone());
    }
    Ok(rays)
}

fn adjacent<T: Scalar>(normals: &[Vec<T>], a: &[T], b: &[T], dim: usize) -> bool {
    if dim == 2 {
        return true;
    }
    let common: Vec<Vec<T>> = normals
        .iter()
        .filter(|n| dot(n, a).is_zero() && dot(n, b).is_zero())
        .cloned()
        .collect();
    rank_of_rows(&common) == dim - 2
}

/// Columns of the inverse of a square integer matrix, as exact rationals.
fn rat_inverse_columns<T: Scalar>(rows: &[Vec<T>]) -> Option<Vec<Vec<RatOf<T>>>> {
    let n = rows.len();
    let mut work: Vec<Vec<RatOf<T>>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<RatOf<T>> = r.iter().map(|x| Ratio::from_integer(x.clone())).collect();
            row.extend((0..n).map(|_| Ratio::from_integer(T::zero())));
            row
        })
        .collect();
    for (i, row) in work.iter_mut().enumerate() {
        row[n + i] = Ratio::from_integer(T::one());
    }
    for col in 0..n {
        let pivot = (col..n).find(|&i| !work[i][col].is_zero())?;
        work.swap(col, pivot);
        let p = work[col][col].clone();
        for x in work[col].iter_mut() {
            *x = x.clone() / p.clone();
        }
        for i in 0..n {
            if i == col || work[i][col].is_zero() {
                continue;
            }
            let f = work[i][col].clone();
            for j in 0..2 * n {
                let delta = f.clone() * work[col][j].clone();
                work[i][j] = work[i][j].clone() - delta;
            }
        }
    }
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        cols.push((0..n).map(|i| work[i][n + j].clone()).collect());
    }
    Some(cols)
}

/// One face of `σ∨`, identified by the facet normals vanishing on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub dim: usize,
    /// Indices into `sigma_rays`: every normal with `⟨face, p⟩ = 0`.
    pub active: Vec<usize>,
    /// Indices into `dual_generators`: the generators lying on the face.
    pub spanning: Vec<usize>,
}

/// All faces of `σ∨`, canonically ordered by `(dim, active set)`, with the
/// inclusion order and the duality to faces of `σ`.
#[derive(Debug, Clone)]
pub struct FaceLattice<T> {
    cone: ConePair<T>,
    faces: Vec<Face>,
    dual_dims: Vec<usize>,
}

impl<T: Scalar> FaceLattice<T> {
    pub fn build(cone: ConePair<T>, rank_cap: usize) -> Result<Self> {
        if cone.rank() > rank_cap {
            return Err(Error::RankTooLarge { rank: cone.rank(), cap: rank_cap });
        }
        let gens = cone.dual_generators();
        let rays = cone.sigma_rays();
        let pairing: Vec<Vec<T>> = gens
            .iter()
            .map(|g| rays.iter().map(|p| dot(g, p)).collect())
            .collect();

        let spanning_for = |active: &[usize]| -> Vec<usize> {
            (0..gens.len())
                .filter(|&gi| active.iter().all(|&ri| pairing[gi][ri].is_zero()))
                .collect()
        };
        let active_for = |spanning: &[usize]| -> Vec<usize> {
            (0..rays.len())
                .filter(|&ri| spanning.iter().all(|&gi| pairing[gi][ri].is_zero()))
                .collect()
        };

        // Close the full face under single-facet intersection; every face of
        // a polyhedral cone arises this way, and the saturated active set is
        // the canonical key.
        let top_spanning: Vec<usize> = (0..gens.len()).collect();
        let top_active = active_for(&top_spanning);
        let mut seen: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        let mut queue = vec![(top_active.clone(), top_spanning)];
        seen.insert(top_active, queue[0].1.clone());
        while let Some((active, _spanning)) = queue.pop() {
            for h in 0..rays.len() {
                if active.contains(&h) {
                    continue;
                }
                let mut cut = active.clone();
                cut.push(h);
                cut.sort_unstable();
                let spanning = spanning_for(&cut);
                let saturated = active_for(&spanning);
                if !seen.contains_key(&saturated) {
                    seen.insert(saturated.clone(), spanning.clone());
                    queue.push((saturated, spanning));
                }
            }
        }

        let mut keyed: Vec<(usize, Vec<usize>, Vec<usize>)> = seen
            .into_iter()
            .map(|(active, spanning)| {
                let vectors: Vec<Vec<T>> = spanning.iter().map(|&gi| gens[gi].clone()).collect();
                (rank_of_rows(&vectors), active, spanning)
            })
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));

        let mut faces = Vec::with_capacity(keyed.len());
        let mut dual_dims = Vec::with_capacity(keyed.len());
        for (id, (dim, active, spanning)) in keyed.into_iter().enumerate() {
            let active_vectors: Vec<Vec<T>> = active.iter().map(|&ri| rays[ri].clone()).collect();
            let dual_dim = rank_of_rows(&active_vectors);
            debug_assert_eq!(dim + dual_dim, cone.rank(), "face duality dimension formula");
            faces.push(Face { id, dim, active, spanning });
            dual_dims.push(dual_dim);
        }
        Ok(Self { cone, faces, dual_dims })
    }

    pub fn cone(&self) -> &ConePair<T> {
        &self.cone
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn count(&self) -> usize {
        self.faces.len()
    }

    /// Inclusion of faces of `σ∨`: `a ⊆ b`, i.e. the active set of `a`
    /// contains the active set of `b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        let fa = &self.faces[a];
        self.faces[b].active.iter().all(|ri| fa.active.contains(ri))
    }

    /// Dimension of the dual face of `σ` (spanned by the active rays).
    pub fn dual_dim(&self, id: usize) -> usize {
        self.dual_dims[id]
    }

    /// The face of `σ` dual to face `id`, described by its spanning ray indices.
    pub fn dual_face_rays(&self, id: usize) -> &[usize] {
        &self.faces[id].active
    }

    /// Id of the full face `σ∨`.
    pub fn full_face(&self) -> usize {
        self.faces.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int_vec, Int};

    fn gens(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| int_vec(r)).collect()
    }

    fn cone(rows: &[&[i64]]) -> ConePair<Int> {
        ConePair::from_generators(&gens(rows)).unwrap()
    }

    #[test]
    fn quadrant_is_self_dual() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        assert_eq!(c.dual_generators(), gens(&[&[0, 1], &[1, 0]]).as_slice());
        assert_eq!(c.sigma_rays(), gens(&[&[0, 1], &[1, 0]]).as_slice());
        assert_eq!(c.dual(), c);
    }

    #[test]
    fn veronese_cone_rays_and_dual() {
        let c = cone(&[&[1, 0], &[1, 1], &[1, 2]]);
        assert_eq!(c.dual_generators(), gens(&[&[1, 0], &[1, 2]]).as_slice());
        assert_eq!(c.sigma_rays(), gens(&[&[0, 1], &[2, -1]]).as_slice());
        for v in c.dual_generators() {
            for p in c.sigma_rays() {
                assert!(crate::scalar::dot(v, p) >= Int::from(0));
            }
        }
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let c = cone(&[&[2, 0], &[3, 0], &[0, 1]]);
        assert_eq!(c.dual_generators(), gens(&[&[0, 1], &[1, 0]]).as_slice());
        assert_eq!(c.sigma_rays(), gens(&[&[0, 1], &[1, 0]]).as_slice());
    }

    #[test]
    fn dual_is_an_involution() {
        let c = cone(&[&[1, 0], &[1, 1], &[1, 2]]);
        assert_eq!(c.dual().dual(), c);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        assert!(matches!(
            ConePair::from_generators(&gens(&[&[1, 1], &[2, 2]])),
            Err(Error::NotPointed { rank: 2, span: 1 })
        ));
        assert!(matches!(
            ConePair::from_generators(&gens(&[&[1], &[-1]])),
            Err(Error::ContainsLine)
        ));
        assert!(matches!(
            ConePair::from_generators(&gens(&[&[1, 0], &[-1, 0], &[0, 1]])),
            Err(Error::ContainsLine)
        ));
    }

    #[test]
    fn quadrant_face_lattice() {
        let lattice = FaceLattice::build(cone(&[&[1, 0], &[0, 1]]), 6).unwrap();
        assert_eq!(lattice.count(), 4);
        let dims: Vec<usize> = lattice.faces().iter().map(|f| f.dim).collect();
        assert_eq!(dims, vec![0, 1, 1, 2]);
        // Vertex below everything, full face above everything.
        for id in 0..4 {
            assert!(lattice.leq(0, id));
            assert!(lattice.leq(id, lattice.full_face()));
            assert_eq!(lattice.face(id).dim + lattice.dual_dim(id), 2);
        }
    }

    #[test]
    fn veronese_face_lattice_has_four_faces() {
        let lattice = FaceLattice::build(cone(&[&[1, 0], &[1, 1], &[1, 2]]), 6).unwrap();
        assert_eq!(lattice.count(), 4);
    }

    #[test]
    fn ray_cone_has_two_faces() {
        let lattice = FaceLattice::build(cone(&[&[2], &[3]]), 6).unwrap();
        assert_eq!(lattice.count(), 2);
        assert_eq!(lattice.face(0).dim, 0);
        assert_eq!(lattice.face(1).dim, 1);
    }

    #[test]
    fn rank_cap_is_enforced() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        assert!(matches!(
            FaceLattice::build(c, 1),
            Err(Error::RankTooLarge { rank: 2, cap: 1 })
        ));
    }
}
