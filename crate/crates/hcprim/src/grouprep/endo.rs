//! Endomorphism algebras of permutation modules.
//!
//! For the full flag module k[G/B] the endomorphism algebra has a
//! distinguished basis indexed by Weyl-group elements: the G-orbits of
//! pairs of Borel cosets, one orbit through (B, wB) for each w. The
//! orbit adjacency matrices multiply with the same structure constants as
//! the standard basis of the Iwahori-Hecke algebra at parameter q — an
//! exact integer statement that the verification suite checks against the
//! symbolic Hecke product.
//!
//! For an arbitrary module, [`endo_algebra`] computes a linear basis of
//! the commutant by solving the intertwining equations directly.

use crate::coxeter::{CoxeterElement, CoxeterType};
use crate::error::Error;
use crate::field::Field;
use crate::matrix::Matrix;
use crate::modalg::AlgebraModule;

use super::gl::GlGroup;
use super::parabolic::{Parabolic, Transversal};

const MAX_ENDO_DIM: usize = 64;

/// The orbit basis of End(k[G/B]), one adjacency matrix per Weyl element.
pub struct OrbitalBasis {
    typ: CoxeterType,
    elements: Vec<CoxeterElement>,
    transversal: Transversal,
    /// pair_orbit[x][y] = index (into `elements`) of the orbit of (x, y)
    pair_orbit: Vec<Vec<usize>>,
    /// rep_pair[w] = (coset of the identity, coset of the permutation of w)
    rep_pair: Vec<(usize, usize)>,
    mats: Vec<Matrix>,
}

/// Compute the orbit basis for the Borel cosets of GL_n(q), with
/// adjacency matrices over the coefficient field `coeff`.
pub fn orbital_basis(group: &GlGroup, coeff: &Field) -> Result<OrbitalBasis, Error> {
    let n = group.n();
    if n < 2 {
        return Err(Error::BadInput(
            "orbit basis needs n >= 2 (rank-zero Weyl group is trivial)".into(),
        ));
    }
    let typ = CoxeterType::a(n - 1);
    let elements = typ.enumerate()?;
    let transversal = Transversal::new(group, Parabolic::upper(&vec![1usize; n]))?;
    let idx = transversal.index();
    let mut pair_orbit = vec![vec![usize::MAX; idx]; idx];
    let mut rep_pair = Vec::new();
    for (wi, w) in elements.iter().enumerate() {
        let p = w.as_permutation();
        let mut pm = Matrix::zero(group.field(), n, n);
        for (j, &pj) in p.iter().enumerate() {
            pm.set_raw(pj, j, 1);
        }
        let c0 = transversal.coset_of(&Matrix::identity(group.field(), n))?;
        let cw = transversal.coset_of(&pm)?;
        rep_pair.push((c0, cw));
        if pair_orbit[c0][cw] != usize::MAX {
            return Err(Error::Verification(
                "pair orbits of distinct Weyl elements overlap".into(),
            ));
        }
        pair_orbit[c0][cw] = wi;
        let mut stack = vec![(c0, cw)];
        while let Some((a, b)) = stack.pop() {
            for g in 0..group.gens().len() {
                let na = transversal.act(g, a).0;
                let nb = transversal.act(g, b).0;
                if pair_orbit[na][nb] == usize::MAX {
                    pair_orbit[na][nb] = wi;
                    stack.push((na, nb));
                } else if pair_orbit[na][nb] != wi {
                    return Err(Error::Verification(
                        "pair orbits of distinct Weyl elements overlap".into(),
                    ));
                }
            }
        }
    }
    if pair_orbit.iter().flatten().any(|&o| o == usize::MAX) {
        return Err(Error::Verification(
            "pair orbits do not cover all coset pairs".into(),
        ));
    }
    let mut mats = Vec::new();
    for wi in 0..elements.len() {
        let mut m = Matrix::zero(coeff, idx, idx);
        for (x, row) in pair_orbit.iter().enumerate() {
            for (y, &o) in row.iter().enumerate() {
                if o == wi {
                    m.set_raw(x, y, 1);
                }
            }
        }
        mats.push(m);
    }
    Ok(OrbitalBasis { typ, elements, transversal, pair_orbit, rep_pair, mats })
}

impl OrbitalBasis {
    pub fn typ(&self) -> &CoxeterType {
        &self.typ
    }

    pub fn elements(&self) -> &[CoxeterElement] {
        &self.elements
    }

    pub fn transversal(&self) -> &Transversal {
        &self.transversal
    }

    /// Number of Borel cosets the adjacency matrices act on.
    pub fn degree(&self) -> usize {
        self.pair_orbit.len()
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn mat(&self, w: usize) -> &Matrix {
        &self.mats[w]
    }

    pub fn index_of(&self, w: &CoxeterElement) -> Option<usize> {
        self.elements.iter().position(|e| e == w)
    }

    /// The adjacency matrix of the simple reflection `s` (generator index).
    pub fn generator_mat(&self, s: usize) -> &Matrix {
        let w = self.typ.generator(s);
        &self.mats[self.index_of(&w).expect("generators are enumerated")]
    }

    /// Exact integer structure constants: the product of the orbit
    /// operators of u and v expanded over the orbit basis, as counts
    /// evaluated at one representative pair per basis element.
    pub fn structure_constants(&self, u: usize, v: usize) -> Vec<u64> {
        let idx = self.pair_orbit.len();
        let mut out = Vec::new();
        for w in 0..self.elements.len() {
            let (x0, z0) = self.rep_pair[w];
            let count = (0..idx)
                .filter(|&y| self.pair_orbit[x0][y] == u && self.pair_orbit[y][z0] == v)
                .count();
            out.push(count as u64);
        }
        out
    }
}

/// A linear basis of the endomorphism algebra of a module: all matrices
/// commuting with every generator image.
pub fn endo_algebra(m: &AlgebraModule) -> Result<Vec<Matrix>, Error> {
    if m.dim() > MAX_ENDO_DIM {
        return Err(Error::TooLarge(format!(
            "endomorphism computation capped at dimension {MAX_ENDO_DIM}, module has {}",
            m.dim()
        )));
    }
    m.hom_space(m)
}

/// Coefficients (raw field values) of `target` over a linearly
/// independent spanning list `basis` of matrices of one common shape.
pub fn expand_in_basis(basis: &[Matrix], target: &Matrix) -> Result<Vec<u32>, Error> {
    if basis.is_empty() {
        return Err(Error::BadInput("cannot expand over an empty basis".into()));
    }
    let field = basis[0].field().clone();
    let cols = basis[0].rows() * basis[0].cols();
    let mut rows = Vec::new();
    for b in basis {
        let mut row = Vec::with_capacity(cols);
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                row.push(b.raw(i, j));
            }
        }
        rows.push(row);
    }
    let bmat = Matrix::from_raw_rows(&field, rows)?;
    let mut trow = Vec::with_capacity(cols);
    for i in 0..target.rows() {
        for j in 0..target.cols() {
            trow.push(target.raw(i, j));
        }
    }
    let tmat = Matrix::from_raw_rows(&field, vec![trow])?;
    let c = bmat.express_rows(&tmat)?;
    Ok((0..basis.len()).map(|j| c.raw(0, j)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouprep::functor::hc_induce;
    use crate::grouprep::gl::LeviGroup;

    #[test]
    fn quadratic_counts_for_rank_one() {
        let g = GlGroup::new(2, 3).unwrap();
        let coeff = Field::new(2, 1).unwrap();
        let ob = orbital_basis(&g, &coeff).unwrap();
        assert_eq!(ob.elements().len(), 2);
        // T_s T_s = q T_e + (q-1) T_s with q = 3, exactly over the integers
        assert_eq!(ob.structure_constants(1, 1), vec![3, 2]);
        // over GF(2) that collapses to A_s^2 = A_e
        let asq = ob.mat(1).mul(ob.mat(1)).unwrap();
        assert_eq!(asq, *ob.mat(0));

        let g = GlGroup::new(2, 5).unwrap();
        let coeff = Field::new(3, 1).unwrap();
        let ob = orbital_basis(&g, &coeff).unwrap();
        assert_eq!(ob.structure_constants(1, 1), vec![5, 4]);
    }

    #[test]
    fn braid_direction_matches_group_multiplication() {
        let g = GlGroup::new(3, 2).unwrap();
        let coeff = Field::new(3, 1).unwrap();
        let ob = orbital_basis(&g, &coeff).unwrap();
        assert_eq!(ob.elements().len(), 6);
        assert_eq!(ob.degree(), 21);
        let s0 = ob.typ().generator(1);
        let s1 = ob.typ().generator(2);
        let (i0, i1) = (ob.index_of(&s0).unwrap(), ob.index_of(&s1).unwrap());
        let w = s0.mul(&s1);
        let iw = ob.index_of(&w).unwrap();
        // lengths add, so the product is a single basis element
        let mut expected = vec![0u64; 6];
        expected[iw] = 1;
        assert_eq!(ob.structure_constants(i0, i1), expected);
        assert_eq!(ob.mat(i0).mul(ob.mat(i1)).unwrap(), *ob.mat(iw));
    }

    #[test]
    fn orbit_operators_are_equivariant_and_span_the_commutant() {
        let g = GlGroup::new(2, 3).unwrap();
        let coeff = Field::new(2, 1).unwrap();
        let ob = orbital_basis(&g, &coeff).unwrap();
        let l = LeviGroup::new(&[1, 1], 3).unwrap();
        let kgb =
            hc_induce(&g, &l, &Parabolic::upper(&[1, 1]), &l.trivial_module(&coeff)).unwrap();
        assert_eq!(kgb.dim(), ob.degree());
        for rho in kgb.gens() {
            for a in ob.mats() {
                assert_eq!(rho.mul(a).unwrap(), a.mul(rho).unwrap());
            }
        }
        let basis = endo_algebra(&kgb).unwrap();
        assert_eq!(basis.len(), 2); // |W|
        for a in ob.mats() {
            expand_in_basis(&basis, a).unwrap();
        }
        // and the orbit operators themselves are a basis: expand both
        // commutant elements back over them
        for b in &basis {
            expand_in_basis(ob.mats(), b).unwrap();
        }
    }

    #[test]
    fn endo_dimension_is_weyl_order_for_the_flag_module() {
        let g = GlGroup::new(3, 2).unwrap();
        let coeff = Field::new(3, 1).unwrap();
        let l = LeviGroup::new(&[1, 1, 1], 2).unwrap();
        let kgb =
            hc_induce(&g, &l, &Parabolic::upper(&[1, 1, 1]), &l.trivial_module(&coeff)).unwrap();
        let basis = endo_algebra(&kgb).unwrap();
        assert_eq!(basis.len(), 6);
    }
}
