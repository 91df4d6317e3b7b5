//! Cuspidal modules, series, the induction-compatibility diagram, and the
//! brute-force primitivity oracle.
//!
//! A simple module is cuspidal when restriction to every proper block Levi
//! vanishes. The unipotent cuspidals of each GL factor are found inside
//! the full flag module; tensoring one choice per factor gives the
//! cuspidal pairs a series is built from. The oracle then answers the
//! primitivity question by force: a simple in the series is imprimitive
//! exactly when it is isomorphic to a full induction from some proper
//! Levi between the cuspidal support and the whole group.
//!
//! Everything returns concrete matrices, so each claim is checkable; the
//! diagram test in particular compares a group-theoretic Hom space with a
//! purely symbolic Hecke induction, computed by unrelated code paths.

use serde::Serialize;

use crate::coxeter::CoxeterType;
use crate::error::Error;
use crate::field::Field;
use crate::hecke::{type_a_levi_subset, HeckeAlgebra};
use crate::matrix::Matrix;
use crate::modalg::AlgebraModule;

use super::endo::orbital_basis;
use super::functor::{hc_induce, hc_restrict};
use super::gl::{GlGroup, LeviGroup};
use super::parabolic::Parabolic;

/// One row of the induction-compatibility check: a simple head module Y
/// of the Levi flag module, with the dimensions of the two sides and
/// whether they matched.
#[derive(Clone, Debug, Serialize)]
pub struct DiagramCase {
    pub y_dim: usize,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub commutes: bool,
}

/// Oracle verdict for one composition factor of the induced cuspidal pair.
#[derive(Clone, Debug, Serialize)]
pub struct SimpleVerdict {
    pub dim: usize,
    pub multiplicity: usize,
    pub primitive: bool,
    /// Composition of the proper Levi the factor is induced from, when
    /// one exists.
    pub witness: Option<Vec<usize>>,
}

/// Smallest common extension of two coefficient fields.
fn compositum(a: &Field, b: &Field) -> Result<Field, Error> {
    if a == b {
        return Ok(a.clone());
    }
    if a.characteristic() != b.characteristic() {
        return Err(Error::OwnerMismatch);
    }
    let (da, db) = (a.degree(), b.degree());
    let d = da / gcd(da, db) * db;
    Field::new(a.characteristic(), d)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn over(m: &AlgebraModule, f: &Field) -> Result<AlgebraModule, Error> {
    if m.field() == f {
        Ok(m.clone())
    } else {
        m.extend_scalars(f)
    }
}

/// Keep one representative per isomorphism class, extending scalars as
/// needed to compare.
fn dedupe_modules(mods: Vec<AlgebraModule>, seed: u64) -> Result<Vec<AlgebraModule>, Error> {
    let mut out: Vec<AlgebraModule> = Vec::new();
    for m in mods {
        let mut seen = false;
        for o in &out {
            if m.dim() != o.dim() {
                continue;
            }
            let f = compositum(m.field(), o.field())?;
            if over(&m, &f)?.module_iso(&over(o, &f)?, seed)?.is_some() {
                seen = true;
                break;
            }
        }
        if !seen {
            out.push(m);
        }
    }
    Ok(out)
}

/// All compositions of n with at least two parts.
fn proper_compositions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    // choose a nonempty proper subset of the n-1 interior cut points
    for mask in 1u32..(1 << (n - 1).min(31)) {
        let mut comp = Vec::new();
        let mut last = 0;
        for cut in 1..n {
            if mask & (1 << (cut - 1)) != 0 {
                comp.push(cut - last);
                last = cut;
            }
        }
        comp.push(n - last);
        out.push(comp);
    }
    out
}

/// True when restriction to every proper block Levi vanishes.
pub fn is_cuspidal(group: &GlGroup, m: &AlgebraModule) -> Result<bool, Error> {
    for comp in proper_compositions(group.n()) {
        let levi = LeviGroup::new(&comp, group.q())?;
        let res = hc_restrict(group, &levi, &Parabolic::upper(&comp), m)?;
        if res.dim() > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The cuspidal composition factors of the full flag module k[G/B],
/// pairwise non-isomorphic. GL_1 contributes its trivial module.
pub fn find_cuspidal_unipotent(
    group: &GlGroup,
    coeff: &Field,
    seed: u64,
) -> Result<Vec<AlgebraModule>, Error> {
    if group.n() == 1 {
        return Ok(vec![group.trivial_module(coeff)]);
    }
    let comp = vec![1usize; group.n()];
    let torus = LeviGroup::new(&comp, group.q())?;
    let kgb = hc_induce(group, &torus, &Parabolic::upper(&comp), &torus.trivial_module(coeff))?;
    let mut cusp = Vec::new();
    for (f, _mult) in kgb.composition_factors(seed)? {
        if is_cuspidal(group, &f)? {
            cusp.push(f);
        }
    }
    Ok(cusp)
}

/// All cuspidal-pair choices on a Levi: one unipotent cuspidal per
/// factor, as per-factor module lists over one common coefficient field.
pub fn levi_cuspidal_modules(
    levi: &LeviGroup,
    coeff: &Field,
    seed: u64,
) -> Result<Vec<Vec<AlgebraModule>>, Error> {
    let mut per_factor = Vec::new();
    for g in levi.factors() {
        let list = find_cuspidal_unipotent(g, coeff, seed)?;
        if list.is_empty() {
            return Err(Error::NoCuspidal(format!(
                "GL_{}({}) has no cuspidal factor in its flag module over GF({})",
                g.n(),
                g.q(),
                coeff.order()
            )));
        }
        per_factor.push(list);
    }
    let mut common = coeff.clone();
    for list in &per_factor {
        for m in list {
            common = compositum(&common, m.field())?;
        }
    }
    for list in &mut per_factor {
        for m in list.iter_mut() {
            *m = over(m, &common)?;
        }
    }
    let mut choices: Vec<Vec<AlgebraModule>> = vec![Vec::new()];
    for list in per_factor {
        let mut next = Vec::new();
        for prefix in &choices {
            for m in &list {
                let mut row = prefix.clone();
                row.push(m.clone());
                next.push(row);
            }
        }
        choices = next;
    }
    Ok(choices)
}

/// Distinct composition factors of the induced cuspidal pairs on the
/// given Levi composition.
pub fn series_content(
    group: &GlGroup,
    levi_comp: &[usize],
    coeff: &Field,
    seed: u64,
) -> Result<Vec<AlgebraModule>, Error> {
    let levi = LeviGroup::new(levi_comp, group.q())?;
    let choices = levi_cuspidal_modules(&levi, coeff, seed)?;
    let mut all = Vec::new();
    for choice in &choices {
        let x0 = levi.tensor(choice)?;
        let ind = hc_induce(group, &levi, &Parabolic::upper(levi_comp), &x0)?;
        for (f, _m) in ind.composition_factors(seed)? {
            all.push(f);
        }
    }
    dedupe_modules(all, seed)
}

/// Distinct simple quotients (head factors) of the induced cuspidal
/// pairs on the given Levi composition.
pub fn series_simples(
    group: &GlGroup,
    levi_comp: &[usize],
    coeff: &Field,
    seed: u64,
) -> Result<Vec<AlgebraModule>, Error> {
    let levi = LeviGroup::new(levi_comp, group.q())?;
    let choices = levi_cuspidal_modules(&levi, coeff, seed)?;
    let mut all = Vec::new();
    for choice in &choices {
        let x0 = levi.tensor(choice)?;
        let ind = hc_induce(group, &levi, &Parabolic::upper(levi_comp), &x0)?;
        let factors = ind.composition_factors(seed)?;
        for (f, _m) in factors {
            let ind_f = over(&ind, f.field())?;
            if !ind_f.hom_space(&f)?.is_empty() {
                all.push(f);
            }
        }
    }
    dedupe_modules(all, seed)
}

/// Right-module structure on Hom(source, target) over a list of
/// commuting operators of the source: generator images give the
/// coordinates of φ ∘ A in the Hom basis.
fn hom_module_over_operators(
    source: &AlgebraModule,
    target: &AlgebraModule,
    ops: &[Matrix],
) -> Result<AlgebraModule, Error> {
    let basis = source.hom_space(target)?;
    let field = source.field().clone();
    let h = basis.len();
    if h == 0 {
        let gens = vec![Matrix::zero(&field, 0, 0); ops.len()];
        return AlgebraModule::new(&field, 0, gens);
    }
    let cols = target.dim() * source.dim();
    let flatten = |m: &Matrix| -> Vec<u32> {
        let mut row = Vec::with_capacity(cols);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                row.push(m.raw(i, j));
            }
        }
        row
    };
    let bmat = Matrix::from_raw_rows(&field, basis.iter().map(&flatten).collect())?;
    let mut gens = Vec::new();
    for a in ops {
        let mut rows = Vec::new();
        for phi in &basis {
            rows.push(flatten(&phi.mul(a)?));
        }
        let t = Matrix::from_raw_rows(&field, rows)?;
        let c = bmat.express_rows(&t)?;
        gens.push(c.transpose());
    }
    AlgebraModule::new(&field, h, gens)
}

/// Check that group-level induction matches Hecke-level induction on the
/// Hom side: for every simple head factor Y of the Levi flag module,
/// compare Hom_G(k[G/B], R(Y)) as a module over the orbit basis of
/// End(k[G/B]) with the symbolic induction of Hom_L(k[L/B_L], Y) from
/// the parabolic subalgebra of the Iwahori-Hecke algebra at q.
pub fn check_induction_diagram(
    group: &GlGroup,
    coeff: &Field,
    levi_comp: &[usize],
    seed: u64,
) -> Result<Vec<DiagramCase>, Error> {
    let n = group.n();
    let q = group.q();
    let levi = LeviGroup::new(levi_comp, q)?;
    let parab = Parabolic::upper(levi_comp);

    // Levi flag module as a tensor of per-factor flag modules
    let mut factor_flags = Vec::new();
    for g in levi.factors() {
        let comp = vec![1usize; g.n()];
        let torus = LeviGroup::new(&comp, q)?;
        factor_flags.push(hc_induce(g, &torus, &Parabolic::upper(&comp), &torus.trivial_module(coeff))?);
    }
    let klb = levi.tensor(&factor_flags)?;

    // head factors of the Levi flag module, over one common field
    let factors = klb.composition_factors(seed)?;
    let big = factors
        .first()
        .map(|(f, _)| f.field().clone())
        .unwrap_or_else(|| coeff.clone());
    let klb_big = over(&klb, &big)?;
    let mut ys = Vec::new();
    for (f, _m) in factors {
        let fb = over(&f, &big)?;
        if !klb_big.hom_space(&fb)?.is_empty() {
            ys.push(fb);
        }
    }

    // Levi-side orbit operators, embedded into the tensor product
    let dims: Vec<usize> = factor_flags.iter().map(|m| m.dim()).collect();
    let mut levi_ops = Vec::new();
    for (fi, g) in levi.factors().iter().enumerate() {
        if g.n() < 2 {
            continue;
        }
        let ob = orbital_basis(g, &big)?;
        debug_assert_eq!(ob.degree(), dims[fi]);
        let left: usize = dims[..fi].iter().product();
        let right: usize = dims[fi + 1..].iter().product();
        let il = Matrix::identity(&big, left);
        let ir = Matrix::identity(&big, right);
        for s in 1..g.n() {
            levi_ops.push(il.kron(ob.generator_mat(s))?.kron(&ir)?);
        }
    }

    // group side: flag module and its orbit basis
    let torus_comp = vec![1usize; n];
    let torus = LeviGroup::new(&torus_comp, q)?;
    let kgb = hc_induce(group, &torus, &Parabolic::upper(&torus_comp), &torus.trivial_module(&big))?;
    let ob_g = orbital_basis(group, &big)?;
    let group_ops: Vec<Matrix> = (1..n).map(|s| ob_g.generator_mat(s).clone()).collect();

    let hecke = HeckeAlgebra::from_prime_power(&big, &CoxeterType::a(n - 1), q)?;
    let j = type_a_levi_subset(levi_comp);

    let mut out = Vec::new();
    for y in &ys {
        let v_l = hom_module_over_operators(&klb_big, y, &levi_ops)?;
        let rhs = hecke.induce(&j, &v_l)?.module;
        let m = hc_induce(group, &levi, &parab, y)?;
        let lhs = hom_module_over_operators(&kgb, &m, &group_ops)?;
        let commutes = if lhs.dim() == 0 && rhs.dim() == 0 {
            true
        } else if lhs.dim() != rhs.dim() {
            false
        } else {
            lhs.module_iso(&rhs, seed)?.is_some()
        };
        out.push(DiagramCase {
            y_dim: y.dim(),
            lhs_dim: lhs.dim(),
            rhs_dim: rhs.dim(),
            commutes,
        });
    }
    Ok(out)
}

/// Contiguous coarsenings of the cuspidal support, as block ranges;
/// excludes the full merge when it collapses to a single block, and
/// keeps one representative per multiset of block sums.
fn candidate_levis(parts: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let k = parts.len();
    let mut out: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << (k.saturating_sub(1)).min(31)) {
        let mut blocks = Vec::new();
        let mut start = 0;
        for cut in 1..k {
            if mask & (1 << (cut - 1)) != 0 {
                blocks.push((start, cut));
                start = cut;
            }
        }
        blocks.push((start, k));
        if blocks.len() == 1 && k > 1 {
            continue; // merged down to the whole group
        }
        let mut sums: Vec<usize> =
            blocks.iter().map(|&(a, b)| parts[a..b].iter().sum()).collect();
        let total: usize = parts.iter().sum();
        if sums == [total] {
            continue;
        }
        sums.sort_unstable();
        if seen.contains(&sums) {
            continue;
        }
        seen.push(sums);
        out.push(blocks);
    }
    out
}

/// Brute-force primitivity of every composition factor of the induced
/// cuspidal pair (levi0_comp, x0_factors): a factor is imprimitive when
/// it is isomorphic to a full induction from a proper intermediate Levi.
pub fn oracle_primitivity(
    group: &GlGroup,
    levi0_comp: &[usize],
    x0_factors: &[AlgebraModule],
    seed: u64,
) -> Result<Vec<SimpleVerdict>, Error> {
    let q = group.q();
    let l0 = LeviGroup::new(levi0_comp, q)?;
    if x0_factors.len() != l0.factors().len() {
        return Err(Error::Shape(format!(
            "{} cuspidal factors for {} Levi factors",
            x0_factors.len(),
            l0.factors().len()
        )));
    }
    let x0 = l0.tensor(x0_factors)?;
    let ind0 = hc_induce(group, &l0, &Parabolic::upper(levi0_comp), &x0)?;
    let simples = ind0.composition_factors(seed)?;

    // candidate intermediate Levis with their per-block induced factors
    let mut candidates: Vec<(Vec<usize>, Vec<Vec<AlgebraModule>>)> = Vec::new();
    for blocks in candidate_levis(levi0_comp) {
        let comp: Vec<usize> =
            blocks.iter().map(|&(a, b)| levi0_comp[a..b].iter().sum()).collect();
        let lc = LeviGroup::new(&comp, q)?;
        let mut per_block: Vec<Vec<AlgebraModule>> = Vec::new();
        for (bi, &(a, b)) in blocks.iter().enumerate() {
            if b - a == 1 {
                per_block.push(vec![x0_factors[a].clone()]);
                continue;
            }
            let sub_comp = levi0_comp[a..b].to_vec();
            let sub_levi = LeviGroup::new(&sub_comp, q)?;
            let xb = sub_levi.tensor(&x0_factors[a..b])?;
            let indb =
                hc_induce(&lc.factors()[bi], &sub_levi, &Parabolic::upper(&sub_comp), &xb)?;
            let factors =
                indb.composition_factors(seed)?.into_iter().map(|(f, _)| f).collect::<Vec<_>>();
            per_block.push(dedupe_modules(factors, seed)?);
        }
        candidates.push((comp, per_block));
    }

    let mut out = Vec::new();
    for (s, mult) in &simples {
        let mut witness = None;
        'levi: for (comp, per_block) in &candidates {
            let lc = LeviGroup::new(comp, q)?;
            // cartesian product of per-block factor choices
            let mut combos: Vec<Vec<AlgebraModule>> = vec![Vec::new()];
            for list in per_block {
                let mut next = Vec::new();
                for prefix in &combos {
                    for m in list {
                        let mut row = prefix.clone();
                        row.push(m.clone());
                        next.push(row);
                    }
                }
                combos = next;
            }
            for combo in combos {
                let mut common = s.field().clone();
                for m in &combo {
                    common = compositum(&common, m.field())?;
                }
                let lifted: Vec<AlgebraModule> =
                    combo.iter().map(|m| over(m, &common)).collect::<Result<_, _>>()?;
                let xp = lc.tensor(&lifted)?;
                let cand = hc_induce(group, &lc, &Parabolic::upper(comp), &xp)?;
                let s_big = over(s, &common)?;
                if cand.dim() == s_big.dim() && cand.module_iso(&s_big, seed)?.is_some() {
                    witness = Some(comp.clone());
                    break 'levi;
                }
            }
        }
        out.push(SimpleVerdict {
            dim: s.dim(),
            multiplicity: *mult,
            primitive: witness.is_none(),
            witness,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cuspidal_factor_of_gl2_q3_mod_2() {
        let g = GlGroup::new(2, 3).unwrap();
        let coeff = Field::new(2, 1).unwrap();
        let cusp = find_cuspidal_unipotent(&g, &coeff, 1).unwrap();
        assert_eq!(cusp.len(), 1);
        assert_eq!(cusp[0].dim(), 2);
        assert!(is_cuspidal(&g, &cusp[0]).unwrap());
        assert!(!is_cuspidal(&g, &g.trivial_module(&coeff)).unwrap());
    }

    #[test]
    fn cuspidal_factor_of_gl2_q2_mod_3_is_the_sign_module() {
        let g = GlGroup::new(2, 2).unwrap();
        let coeff = Field::new(3, 1).unwrap();
        let cusp = find_cuspidal_unipotent(&g, &coeff, 1).unwrap();
        assert_eq!(cusp.len(), 1);
        assert_eq!(cusp[0].dim(), 1);
        // non-trivial: some generator acts as -1
        assert!(cusp[0].gens().iter().any(|m| m.raw(0, 0) == 2));
    }

    #[test]
    fn principal_series_of_gl2_q3_mod_2() {
        let g = GlGroup::new(2, 3).unwrap();
        let coeff = Field::new(2, 1).unwrap();
        let mut dims: Vec<usize> = series_content(&g, &[1, 1], &coeff, 1)
            .unwrap()
            .iter()
            .map(|m| m.dim())
            .collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 2]);
        let heads = series_simples(&g, &[1, 1], &coeff, 1).unwrap();
        assert_eq!(heads.len(), 1);
        assert_eq!(heads[0].dim(), 1); // only the trivial head survives
    }

    #[test]
    fn diagram_commutes_for_gl2_q3_mod_2_principal() {
        let g = GlGroup::new(2, 3).unwrap();
        let coeff = Field::new(2, 1).unwrap();
        let cases = check_induction_diagram(&g, &coeff, &[1, 1], 1).unwrap();
        assert_eq!(cases.len(), 1);
        assert_eq!(cases[0].y_dim, 1);
        assert_eq!(cases[0].lhs_dim, 2);
        assert_eq!(cases[0].rhs_dim, 2);
        assert!(cases[0].commutes);
    }

    #[test]
    fn oracle_gl2_q3_mod_2_principal_is_primitive() {
        let g = GlGroup::new(2, 3).unwrap();
        let coeff = Field::new(2, 1).unwrap();
        let l = LeviGroup::new(&[1, 1], 3).unwrap();
        let x0 = vec![
            l.factors()[0].trivial_module(&coeff),
            l.factors()[1].trivial_module(&coeff),
        ];
        let verdicts = oracle_primitivity(&g, &[1, 1], &x0, 1).unwrap();
        let mut dims: Vec<(usize, usize)> =
            verdicts.iter().map(|v| (v.dim, v.multiplicity)).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![(1, 2), (2, 1)]);
        assert!(verdicts.iter().all(|v| v.primitive));
    }

    #[test]
    fn oracle_gl3_q2_mod_3_mixed_support_is_imprimitive() {
        let g = GlGroup::new(3, 2).unwrap();
        let coeff = Field::new(3, 1).unwrap();
        let l = LeviGroup::new(&[1, 2], 2).unwrap();
        let sign = find_cuspidal_unipotent(&l.factors()[1], &coeff, 1).unwrap();
        assert_eq!(sign.len(), 1);
        let x0 = vec![l.factors()[0].trivial_module(&coeff), sign[0].clone()];
        let verdicts = oracle_primitivity(&g, &[1, 2], &x0, 1).unwrap();
        assert_eq!(verdicts.len(), 1);
        assert_eq!(verdicts[0].dim, 7);
        assert!(!verdicts[0].primitive);
        assert_eq!(verdicts[0].witness, Some(vec![1, 2]));
    }
}
