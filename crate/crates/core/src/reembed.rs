//! Replacing the ambient lattice by the group generated by the monoid
//! generators, so the weight cone becomes full-dimensional.

use num_traits::{One, Zero};

use crate::mat::{smith_normal_form, IntMatrix};
use crate::scalar::{fmt_vec, is_zero_vec, Scalar};
use crate::{Error, Result};

/// An isomorphism between the group generated by the input vectors and
/// `Z^reduced_rank`, together with its inverse.
///
/// `forward` is only defined on the group `ZP`; `backward ∘ forward` is the
/// identity there, and `forward` carries a generating set of `ZP` to a
/// generating set of `Z^reduced_rank`.
#[derive(Debug, Clone)]
pub struct Reembedding<T> {
    pub original_rank: usize,
    pub reduced_rank: usize,
    /// Index of `ZP` inside its saturation in `Z^original_rank`; purely
    /// informational (product of the elementary divisors).
    pub index: T,
    identity: bool,
    /// Columns-of-interest transform: forward(x) = ((x·v)_i / d_i)_{i<r}.
    v: IntMatrix<T>,
    v_inv: IntMatrix<T>,
    divisors: Vec<T>,
}

impl<T: Scalar> Reembedding<T> {
    pub fn is_identity(&self) -> bool {
        self.identity
    }

    /// Map a lattice point of `ZP` into the reduced lattice.
    pub fn forward(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.original_rank {
            return Err(Error::DimensionMismatch { expected: self.original_rank, got: x.len() });
        }
        if self.identity {
            return Ok(x.to_vec());
        }
        let mut xv = vec![T::zero(); self.v.cols()];
        for (j, slot) in xv.iter_mut().enumerate() {
            *slot = crate::scalar::dot(x, &self.v.col(j));
        }
        let mut out = Vec::with_capacity(self.reduced_rank);
        for (i, d) in self.divisors.iter().enumerate() {
            let (q, r) = (xv[i].clone() / d.clone(), xv[i].clone() % d.clone());
            if !r.is_zero() {
                return Err(Error::NotInLattice { point: fmt_vec(x) });
            }
            out.push(q);
        }
        for coord in xv.iter().skip(self.reduced_rank) {
            if !coord.is_zero() {
                return Err(Error::NotInLattice { point: fmt_vec(x) });
            }
        }
        Ok(out)
    }

    /// Map a reduced-lattice point back into the original ambient lattice.
    pub fn backward(&self, y: &[T]) -> Result<Vec<T>> {
        if y.len() != self.reduced_rank {
            return Err(Error::DimensionMismatch { expected: self.reduced_rank, got: y.len() });
        }
        if self.identity {
            return Ok(y.to_vec());
        }
        // x = (y_1 d_1, ..., y_r d_r, 0, ...) · v_inv
        let mut scaled = vec![T::zero(); self.original_rank];
        for (i, d) in self.divisors.iter().enumerate() {
            scaled[i] = y[i].clone() * d.clone();
        }
        let mut out = vec![T::zero(); self.original_rank];
        for (i, coeff) in scaled.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (o, vij) in out.iter_mut().zip(self.v_inv.row(i)) {
                *o = o.clone() + coeff.clone() * vij.clone();
            }
        }
        Ok(out)
    }
}

/// Drop zero vectors and duplicates, preserving first-seen order. Returns the
/// cleaned list plus human-readable notes about what was removed.
pub fn sanitize_generators<T: Scalar>(gens: &[Vec<T>]) -> Result<(Vec<Vec<T>>, Vec<String>)> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let rank = gens[0].len();
    let mut kept: Vec<Vec<T>> = Vec::new();
    let mut warnings = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.len() != rank {
            return Err(Error::DimensionMismatch { expected: rank, got: g.len() });
        }
        if is_zero_vec(g) {
            warnings.push(format!("generator #{i} is zero and was dropped"));
            continue;
        }
        if kept.contains(g) {
            warnings.push(format!("generator #{i} {} duplicates an earlier one and was dropped", fmt_vec(g)));
            continue;
        }
        kept.push(g.clone());
    }
    if kept.is_empty() {
        return Err(Error::AllZeroGenerators);
    }
    Ok((kept, warnings))
}

/// Re-embed the generators into `Z^r` where `r` is the rank of their integer
/// span, such that the images generate `Z^r` as a group. Generators that
/// already do so are passed through by the identity map.
pub fn reembed_full_rank<T: Scalar>(
    gens: &[Vec<T>],
) -> Result<(Reembedding<T>, Vec<Vec<T>>)> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if gens.iter().all(|g| is_zero_vec(g)) {
        return Err(Error::AllZeroGenerators);
    }
    let n = gens[0].len();
    let matrix = IntMatrix::from_rows(gens)?;
    let snf = smith_normal_form(&matrix);
    let r = snf.rank();
    let divisors = snf.elementary_divisors();
    let mut index = T::one();
    for d in &divisors {
        index = index * d.clone();
    }

    let identity = r == n && index.is_one();
    let embedding = Reembedding {
        original_rank: n,
        reduced_rank: r,
        index,
        identity,
        v: snf.v,
        v_inv: snf.v_inv,
        divisors,
    };
    let reduced: Result<Vec<Vec<T>>> = gens.iter().map(|g| embedding.forward(g)).collect();
    Ok((embedding, reduced?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::rank_of_rows;
    use crate::{int_vec, Int};

    fn gens(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| int_vec(r)).collect()
    }

    fn roundtrip(embedding: &Reembedding<Int>, originals: &[Vec<Int>]) {
        for g in originals {
            let fwd = embedding.forward(g).unwrap();
            assert_eq!(embedding.backward(&fwd).unwrap(), *g, "backward∘forward != id on ZP");
        }
    }

    #[test]
    fn diagonal_line_reduces_to_z1() {
        let g = gens(&[&[1, 1], &[2, 2]]);
        let (embedding, reduced) = reembed_full_rank(&g).unwrap();
        assert_eq!(embedding.reduced_rank, 1);
        assert_eq!(reduced, vec![int_vec(&[1]), int_vec(&[2])]);
        roundtrip(&embedding, &g);
    }

    #[test]
    fn standard_basis_is_identity() {
        let g = gens(&[&[1, 0], &[0, 1]]);
        let (embedding, reduced) = reembed_full_rank(&g).unwrap();
        assert!(embedding.is_identity());
        assert_eq!(reduced, g);
    }

    #[test]
    fn coprime_multiples_already_generate() {
        // (1,0) = (3,0) - (2,0) lies in the span, so ZP = Z^2.
        let g = gens(&[&[2, 0], &[3, 0], &[0, 1]]);
        let (embedding, reduced) = reembed_full_rank(&g).unwrap();
        assert_eq!(embedding.reduced_rank, 2);
        assert!(embedding.is_identity());
        assert_eq!(reduced, g);
        roundtrip(&embedding, &g);
    }

    #[test]
    fn reembedding_is_idempotent() {
        let g = gens(&[&[2, 4], &[3, 6], &[-1, -2]]);
        let (first, reduced) = reembed_full_rank(&g).unwrap();
        assert_eq!(first.reduced_rank, 1);
        roundtrip(&first, &g);
        // Reduced generators generate Z^r, so a second pass is the identity.
        assert_eq!(rank_of_rows(&reduced), 1);
        let (second, again) = reembed_full_rank(&reduced).unwrap();
        assert!(second.is_identity());
        assert_eq!(again, reduced);
    }

    #[test]
    fn index_two_sublattice() {
        // ZP = 2Z: forward must divide by 2 so the image generates Z.
        let g = gens(&[&[2], &[4]]);
        let (embedding, reduced) = reembed_full_rank(&g).unwrap();
        assert_eq!(embedding.reduced_rank, 1);
        assert_eq!(embedding.index, Int::from(2));
        assert_eq!(reduced, vec![int_vec(&[1]), int_vec(&[2])]);
        roundtrip(&embedding, &g);
    }

    #[test]
    fn sanitize_drops_zero_and_duplicates() {
        let g = gens(&[&[0, 0], &[1, 0], &[1, 0], &[0, 1]]);
        let (kept, warnings) = sanitize_generators(&g).unwrap();
        assert_eq!(kept, gens(&[&[1, 0], &[0, 1]]));
        assert_eq!(warnings.len(), 2);
        assert!(matches!(
            sanitize_generators(&gens(&[&[0, 0]])),
            Err(Error::AllZeroGenerators)
        ));
    }
}
