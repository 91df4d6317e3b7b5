//! Induction and restriction between a block Levi subgroup and the full
//! group, as explicit matrix constructions.
//!
//! Induction inflates a Levi module through a parabolic and induces it up:
//! the result lives on coset blocks of G/P, and generator g sends block i
//! to block j with the Levi image of the parabolic cocycle acting inside
//! the block. Restriction takes the fixed image of the averaging
//! idempotent of the unipotent radical (so the coefficient characteristic
//! must not divide |V|) and lets the Levi act there.
//!
//! Both constructions depend only on the composition, not on the chosen
//! parabolic side: results through an upper and a lower parabolic are
//! isomorphic, which the verification suite checks directly.

use crate::error::Error;
use crate::field::Field;
use crate::matrix::Matrix;
use crate::modalg::AlgebraModule;

use super::gl::{GlGroup, LeviGroup};
use super::parabolic::{Parabolic, Transversal};

/// One-dimensional module with every generator acting as the identity.
pub fn trivial_module(field: &Field, num_gens: usize) -> AlgebraModule {
    AlgebraModule::new(field, 1, vec![Matrix::identity(field, 1); num_gens]).unwrap()
}

fn check_compatible(
    group: &GlGroup,
    levi: &LeviGroup,
    parabolic: &Parabolic,
) -> Result<(), Error> {
    if levi.n() != group.n() || parabolic.n() != group.n() {
        return Err(Error::Shape(format!(
            "Levi composition {:?} / parabolic {:?} do not fit n = {}",
            levi.composition(),
            parabolic.composition(),
            group.n()
        )));
    }
    if levi.composition() != parabolic.composition() {
        return Err(Error::Shape(format!(
            "Levi composition {:?} differs from parabolic composition {:?}",
            levi.composition(),
            parabolic.composition()
        )));
    }
    if levi.field() != group.field() {
        return Err(Error::OwnerMismatch);
    }
    Ok(())
}

/// Induce a Levi module `x` up to the whole group through `parabolic`.
///
/// Basis: dim(x) coordinates per coset of G/P, coset-major, over the
/// canonical transversal. Generator block (j, i) is the Levi image of the
/// cocycle p in g·rep_i = rep_j·p, acting on x.
pub fn hc_induce(
    group: &GlGroup,
    levi: &LeviGroup,
    parabolic: &Parabolic,
    x: &AlgebraModule,
) -> Result<AlgebraModule, Error> {
    check_compatible(group, levi, parabolic)?;
    if x.gens().len() != levi.num_module_gens() {
        return Err(Error::Shape(format!(
            "module has {} generator images, Levi wants {}",
            x.gens().len(),
            levi.num_module_gens()
        )));
    }
    let t = Transversal::new(group, parabolic.clone())?;
    let dm = x.dim();
    let dim = t.index() * dm;
    let mut gens = Vec::new();
    for gi in 0..group.gens().len() {
        let mut big = Matrix::zero(x.field(), dim, dim);
        for i in 0..t.index() {
            let (j, p) = t.act(gi, i);
            let rho = levi.eval(x, &parabolic.levi_project(p))?;
            for a in 0..dm {
                for b in 0..dm {
                    big.set_raw(j * dm + a, i * dm + b, rho.raw(a, b));
                }
            }
        }
        gens.push(big);
    }
    AlgebraModule::new(x.field(), dim, gens)
}

/// The induced matrix of an arbitrary group element (not only a
/// generator), built the same way from the coset action. Used to check
/// that induction is a genuine representation.
pub fn induced_matrix_of(
    levi: &LeviGroup,
    parabolic: &Parabolic,
    transversal: &Transversal,
    x: &AlgebraModule,
    g: &Matrix,
) -> Result<Matrix, Error> {
    let dm = x.dim();
    let dim = transversal.index() * dm;
    let mut big = Matrix::zero(x.field(), dim, dim);
    for i in 0..transversal.index() {
        let moved = g.mul(&transversal.reps()[i])?;
        let j = transversal.coset_of(&moved)?;
        let p = transversal.reps()[j].inverse()?.mul(&moved)?;
        let rho = levi.eval(x, &parabolic.levi_project(&p))?;
        for a in 0..dm {
            for b in 0..dm {
                big.set_raw(j * dm + a, i * dm + b, rho.raw(a, b));
            }
        }
    }
    Ok(big)
}

/// Restrict a module of the whole group down to the Levi: the image of
/// the averaging idempotent over the unipotent radical of `parabolic`,
/// with the Levi acting through the embedded factor generators
/// (factor-major generator order).
pub fn hc_restrict(
    group: &GlGroup,
    levi: &LeviGroup,
    parabolic: &Parabolic,
    m: &AlgebraModule,
) -> Result<AlgebraModule, Error> {
    check_compatible(group, levi, parabolic)?;
    if m.gens().len() != group.gens().len() {
        return Err(Error::Shape(format!(
            "module has {} generator images, group wants {}",
            m.gens().len(),
            group.gens().len()
        )));
    }
    let field = m.field().clone();
    let radical = parabolic.radical_elements(group)?;
    let count_raw = field.from_int(radical.len() as i64).value() as u32;
    if count_raw == 0 {
        return Err(Error::DefiningCharacteristic { q: group.q(), l: field.characteristic() });
    }
    let inv_count = field.rinv(count_raw)?;
    let mut sum = Matrix::zero(&field, m.dim(), m.dim());
    for v in &radical {
        let idx = group
            .index_of(v)
            .ok_or_else(|| Error::Verification("radical element missing from group".into()))?;
        sum = sum.add(&group.eval(m.gens(), idx)?)?;
    }
    let e = sum.scale_raw(inv_count);
    debug_assert_eq!(e.mul(&e).unwrap(), e, "averaging operator is idempotent");
    let r = e.transpose().rref();
    let basis = r.mat.submatrix(0, r.rank, 0, m.dim());
    let mut gens = Vec::new();
    for (f, factor) in levi.factors().iter().enumerate() {
        for k in 0..factor.gens().len() {
            let emb = levi.embed_factor_gen(f, k);
            let idx = group.index_of(&emb).ok_or_else(|| {
                Error::Verification("embedded Levi generator missing from group".into())
            })?;
            let act = group.eval(m.gens(), idx)?;
            gens.push(Matrix::restrict_action(&basis, &act)?);
        }
    }
    AlgebraModule::new(&field, r.rank, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prng::XorShift;

    fn torus(n: usize, q: u64) -> LeviGroup {
        LeviGroup::new(&vec![1usize; n], q).unwrap()
    }

    #[test]
    fn permutation_module_dimensions() {
        let g = GlGroup::new(2, 3).unwrap();
        let l = torus(2, 3);
        let coeff = Field::new(2, 1).unwrap();
        let kgb = hc_induce(&g, &l, &Parabolic::upper(&[1, 1]), &l.trivial_module(&coeff)).unwrap();
        assert_eq!(kgb.dim(), 4);

        let g = GlGroup::new(3, 2).unwrap();
        let l = LeviGroup::new(&[2, 1], 2).unwrap();
        let coeff = Field::new(3, 1).unwrap();
        let m = hc_induce(&g, &l, &Parabolic::upper(&[2, 1]), &l.trivial_module(&coeff)).unwrap();
        assert_eq!(m.dim(), 7);
    }

    #[test]
    fn inducing_along_the_whole_group_is_the_identity() {
        let g = GlGroup::new(2, 3).unwrap();
        let l = LeviGroup::new(&[2], 3).unwrap();
        // natural 2-dimensional module over the defining field
        let x = AlgebraModule::new(g.field(), 2, l.factors()[0].gens().to_vec()).unwrap();
        let ind = hc_induce(&g, &l, &Parabolic::upper(&[2]), &x).unwrap();
        assert_eq!(ind.dim(), 2);
        assert_eq!(ind.gens(), x.gens());
    }

    #[test]
    fn induction_is_a_representation() {
        let g = GlGroup::new(2, 3).unwrap();
        let l = torus(2, 3);
        let p = Parabolic::upper(&[1, 1]);
        let coeff = Field::new(2, 1).unwrap();
        let x = l.trivial_module(&coeff);
        let ind = hc_induce(&g, &l, &p, &x).unwrap();
        let t = Transversal::new(&g, p.clone()).unwrap();
        let mut rng = XorShift::new(11);
        for _ in 0..40 {
            let i = rng.below(g.order() as u64) as usize;
            let direct = induced_matrix_of(&l, &p, &t, &x, g.element(i)).unwrap();
            let via_word = g.eval(ind.gens(), i).unwrap();
            assert_eq!(direct, via_word);
        }
    }

    #[test]
    fn upper_and_lower_inductions_are_isomorphic() {
        let g = GlGroup::new(2, 3).unwrap();
        let l = torus(2, 3);
        let coeff = Field::new(2, 1).unwrap();
        let x = l.trivial_module(&coeff);
        let up = hc_induce(&g, &l, &Parabolic::upper(&[1, 1]), &x).unwrap();
        let lo = hc_induce(&g, &l, &Parabolic::lower(&[1, 1]), &x).unwrap();
        assert_eq!(up.dim(), lo.dim());
        assert!(up.module_iso(&lo, 3).unwrap().is_some());
    }

    #[test]
    fn restriction_of_trivial_is_trivial() {
        let g = GlGroup::new(2, 3).unwrap();
        let l = torus(2, 3);
        let coeff = Field::new(2, 1).unwrap();
        let m = g.trivial_module(&coeff);
        let res = hc_restrict(&g, &l, &Parabolic::upper(&[1, 1]), &m).unwrap();
        assert_eq!(res.dim(), 1);
        for gen in res.gens() {
            assert_eq!(*gen, Matrix::identity(&coeff, 1));
        }
    }

    #[test]
    fn torus_restriction_of_the_flag_module_has_weyl_group_dimension() {
        let g = GlGroup::new(2, 3).unwrap();
        let l = torus(2, 3);
        let p = Parabolic::upper(&[1, 1]);
        let coeff = Field::new(2, 1).unwrap();
        let kgb = hc_induce(&g, &l, &p, &l.trivial_module(&coeff)).unwrap();
        let back = hc_restrict(&g, &l, &p, &kgb).unwrap();
        assert_eq!(back.dim(), 2); // |W(GL_2)| = 2
        let lower = hc_restrict(&g, &l, &Parabolic::lower(&[1, 1]), &kgb).unwrap();
        assert_eq!(lower.dim(), 2);
        assert!(back.module_iso(&lower, 5).unwrap().is_some());
    }

    #[test]
    fn restriction_rejects_defining_characteristic() {
        let g = GlGroup::new(2, 3).unwrap();
        let l = torus(2, 3);
        let coeff = Field::new(3, 1).unwrap();
        let m = g.trivial_module(&coeff);
        let err = hc_restrict(&g, &l, &Parabolic::upper(&[1, 1]), &m).unwrap_err();
        assert!(matches!(err, Error::DefiningCharacteristic { q: 3, l: 3 }));
    }
}
