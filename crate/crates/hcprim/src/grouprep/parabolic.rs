//! Block-triangular parabolic subgroups of GL_n(q) and canonical coset
//! transversals of G/P.
//!
//! A parabolic is determined by a composition of n (block sizes) and a
//! side: upper block-triangular (the standard choice) or lower (its
//! opposite). A coset gP is the same thing as the partial flag spanned by
//! leading column blocks of g, and each coset gets a canonical matrix
//! representative assembled from reduced-echelon bases of the flag's
//! members — equality of cosets is equality of canonical forms, no group
//! search involved.

use std::collections::HashMap;

use crate::error::Error;
use crate::matrix::Matrix;

use super::gl::{mat_key, GlGroup};

pub const MAX_INDEX: usize = 5_000;
const MAX_RADICAL: u128 = 10_000;

#[derive(Clone, Debug)]
pub struct Parabolic {
    composition: Vec<usize>,
    lower: bool,
}

impl Parabolic {
    pub fn upper(composition: &[usize]) -> Parabolic {
        Parabolic { composition: composition.to_vec(), lower: false }
    }

    pub fn lower(composition: &[usize]) -> Parabolic {
        Parabolic { composition: composition.to_vec(), lower: true }
    }

    pub fn composition(&self) -> &[usize] {
        &self.composition
    }

    pub fn is_lower(&self) -> bool {
        self.lower
    }

    pub fn n(&self) -> usize {
        self.composition.iter().sum()
    }

    fn block_of_row(&self, i: usize) -> usize {
        let mut acc = 0;
        for (b, &c) in self.composition.iter().enumerate() {
            acc += c;
            if i < acc {
                return b;
            }
        }
        unreachable!("row outside the composition")
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if m.raw(i, j) != 0 {
                    let (bi, bj) = (self.block_of_row(i), self.block_of_row(j));
                    let bad = if self.lower { bj > bi } else { bi > bj };
                    if bad {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Projection P -> L: keep the diagonal blocks. A homomorphism on
    /// block-triangular matrices of either side.
    pub fn levi_project(&self, m: &Matrix) -> Matrix {
        let n = self.n();
        let mut out = Matrix::zero(m.field(), n, n);
        let mut base = 0;
        for &c in &self.composition {
            for i in 0..c {
                for j in 0..c {
                    out.set_raw(base + i, base + j, m.raw(base + i, base + j));
                }
            }
            base += c;
        }
        out
    }

    /// Order of the unipotent radical V: q to the number of off-diagonal
    /// block entries.
    pub fn radical_order(&self, q: u64) -> u128 {
        let mut cells = 0u32;
        for (a, &ca) in self.composition.iter().enumerate() {
            for &cb in &self.composition[a + 1..] {
                cells += (ca * cb) as u32;
            }
        }
        (q as u128).pow(cells)
    }

    /// All elements of the unipotent radical, as matrices.
    pub fn radical_elements(&self, group: &GlGroup) -> Result<Vec<Matrix>, Error> {
        let q = group.q();
        if self.radical_order(q) > MAX_RADICAL {
            return Err(Error::TooLarge(format!(
                "|V| = {} exceeds the enumeration bound",
                self.radical_order(q)
            )));
        }
        let n = self.n();
        let mut cells = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let (bi, bj) = (self.block_of_row(i), self.block_of_row(j));
                let free = if self.lower { bi > bj } else { bj > bi };
                if free {
                    cells.push((i, j));
                }
            }
        }
        let field = group.field().clone();
        let mut out = Vec::new();
        let mut vals = vec![0u32; cells.len()];
        loop {
            let mut m = Matrix::identity(&field, n);
            for (&(i, j), &v) in cells.iter().zip(&vals) {
                m.set_raw(i, j, v);
            }
            out.push(m);
            // odometer
            let mut k = 0;
            loop {
                if k == vals.len() {
                    return Ok(out);
                }
                vals[k] += 1;
                if (vals[k] as u64) < q {
                    break;
                }
                vals[k] = 0;
                k += 1;
            }
        }
    }

    /// Canonical representative of the coset mP.
    pub fn canonical_rep(&self, m: &Matrix) -> Result<Matrix, Error> {
        if self.lower {
            let rev = reversal(m.field(), self.n());
            let mut c = self.composition.clone();
            c.reverse();
            let upper = Parabolic::upper(&c);
            let y = upper.canonical_rep(&m.mul(&rev)?)?;
            return y.mul(&rev);
        }
        let n = self.n();
        let field = m.field().clone();
        let mut rep = Matrix::zero(&field, n, n);
        let mut prev_pivots: Vec<usize> = Vec::new();
        let mut col = 0;
        let mut level = 0;
        for &c in &self.composition {
            level += c;
            // rows of mt = first `level` columns of m
            let mt = m.submatrix(0, n, 0, level).transpose();
            let r = mt.rref();
            debug_assert_eq!(r.rank, level, "flag member has full rank");
            let mut new_pivots = Vec::new();
            for (ri, &p) in r.pivots.iter().enumerate() {
                if !prev_pivots.contains(&p) {
                    new_pivots.push((p, ri));
                }
            }
            debug_assert_eq!(new_pivots.len(), c);
            for (_, ri) in new_pivots {
                for i in 0..n {
                    rep.set_raw(i, col, r.mat.raw(ri, i));
                }
                col += 1;
            }
            prev_pivots = r.pivots.clone();
        }
        Ok(rep)
    }
}

/// The reversal permutation matrix (antidiagonal).
pub fn reversal(field: &crate::field::Field, n: usize) -> Matrix {
    let mut m = Matrix::zero(field, n, n);
    for j in 0..n {
        m.set_raw(n - 1 - j, j, 1);
    }
    m
}

/// A full left-coset transversal of G/P with its generator action table.
pub struct Transversal {
    parabolic: Parabolic,
    reps: Vec<Matrix>,
    rep_index: HashMap<u64, usize>,
    /// action[g][i] = (j, p) with gen_g * rep_i = rep_j * p, p in P.
    action: Vec<Vec<(usize, Matrix)>>,
}

impl Transversal {
    pub fn new(group: &GlGroup, parabolic: Parabolic) -> Result<Transversal, Error> {
        if parabolic.n() != group.n() {
            return Err(Error::Shape(format!(
                "composition {:?} does not sum to n = {}",
                parabolic.composition(),
                group.n()
            )));
        }
        let mut reps = vec![parabolic.canonical_rep(&Matrix::identity(group.field(), group.n()))?];
        let mut rep_index = HashMap::new();
        rep_index.insert(mat_key(&reps[0]), 0usize);
        let mut head = 0;
        while head < reps.len() {
            let cur = reps[head].clone();
            for g in group.gens() {
                let moved = g.mul(&cur)?;
                let canon = parabolic.canonical_rep(&moved)?;
                let k = mat_key(&canon);
                if !rep_index.contains_key(&k) {
                    if reps.len() >= MAX_INDEX {
                        return Err(Error::TooLarge(format!(
                            "index exceeds the transversal bound {MAX_INDEX}"
                        )));
                    }
                    rep_index.insert(k, reps.len());
                    reps.push(canon);
                }
            }
            head += 1;
        }
        let mut action = Vec::new();
        for g in group.gens() {
            let mut row = Vec::new();
            for rep in &reps {
                let moved = g.mul(rep)?;
                let canon = parabolic.canonical_rep(&moved)?;
                let j = rep_index[&mat_key(&canon)];
                let p = reps[j].inverse()?.mul(&moved)?;
                debug_assert!(parabolic.contains(&p));
                row.push((j, p));
            }
            action.push(row);
        }
        Ok(Transversal { parabolic, reps, rep_index, action })
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Matrix] {
        &self.reps
    }

    pub fn coset_of(&self, m: &Matrix) -> Result<usize, Error> {
        let canon = self.parabolic.canonical_rep(m)?;
        self.rep_index
            .get(&mat_key(&canon))
            .copied()
            .ok_or_else(|| Error::BadInput("matrix is not in any enumerated coset".into()))
    }

    /// (target coset, parabolic cocycle) for generator g on coset i.
    pub fn act(&self, g: usize, i: usize) -> &(usize, Matrix) {
        &self.action[g][i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prng::XorShift;

    #[test]
    fn index_formulas() {
        let g23 = GlGroup::new(2, 3).unwrap();
        let t = Transversal::new(&g23, Parabolic::upper(&[1, 1])).unwrap();
        assert_eq!(t.index(), 4); // q + 1

        let g32 = GlGroup::new(3, 2).unwrap();
        let t = Transversal::new(&g32, Parabolic::upper(&[2, 1])).unwrap();
        assert_eq!(t.index(), 7); // (q^3-1)/(q-1)
        let t = Transversal::new(&g32, Parabolic::upper(&[1, 1, 1])).unwrap();
        assert_eq!(t.index(), 21);
        let t = Transversal::new(&g32, Parabolic::upper(&[3])).unwrap();
        assert_eq!(t.index(), 1);
    }

    #[test]
    fn canonical_rep_is_constant_on_cosets() {
        let g = GlGroup::new(2, 3).unwrap();
        let p = Parabolic::upper(&[1, 1]);
        let members: Vec<&Matrix> =
            (0..g.order()).map(|i| g.element(i)).filter(|m| p.contains(m)).collect();
        let mut rng = XorShift::new(5);
        for _ in 0..80 {
            let m = g.element(rng.below(g.order() as u64) as usize);
            let canon = p.canonical_rep(m).unwrap();
            // the rep lies in the same coset: canon^{-1} m is parabolic
            assert!(p.contains(&canon.inverse().unwrap().mul(m).unwrap()));
            // right multiplication by any parabolic member keeps the rep
            let b = members[rng.below(members.len() as u64) as usize];
            assert_eq!(canon, p.canonical_rep(&m.mul(b).unwrap()).unwrap());
        }
    }

    #[test]
    fn cosets_partition_the_group() {
        let g = GlGroup::new(3, 2).unwrap();
        for parab in [Parabolic::upper(&[2, 1]), Parabolic::lower(&[2, 1])] {
            let t = Transversal::new(&g, parab).unwrap();
            let mut counts = vec![0usize; t.index()];
            for i in 0..g.order() {
                counts[t.coset_of(g.element(i)).unwrap()] += 1;
            }
            let coset_size = g.order() / t.index();
            assert!(counts.iter().all(|&c| c == coset_size));
        }
    }

    #[test]
    fn action_table_cocycles() {
        let g = GlGroup::new(2, 3).unwrap();
        for parab in [Parabolic::upper(&[1, 1]), Parabolic::lower(&[1, 1])] {
            let t = Transversal::new(&g, parab.clone()).unwrap();
            for (gi, gen) in g.gens().iter().enumerate() {
                for i in 0..t.index() {
                    let (j, p) = t.act(gi, i);
                    assert!(parab.contains(p));
                    assert_eq!(
                        gen.mul(&t.reps()[i]).unwrap(),
                        t.reps()[*j].mul(p).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn radical_orders() {
        let p = Parabolic::upper(&[1, 1, 1]);
        assert_eq!(p.radical_order(3), 27);
        let p = Parabolic::upper(&[2, 1]);
        assert_eq!(p.radical_order(2), 4);
        let g = GlGroup::new(3, 2).unwrap();
        let els = Parabolic::lower(&[2, 1]).radical_elements(&g).unwrap();
        assert_eq!(els.len(), 4);
        for v in &els {
            assert!(Parabolic::lower(&[2, 1]).contains(v));
            assert_eq!(Parabolic::lower(&[2, 1]).levi_project(v), Matrix::identity(g.field(), 3));
        }
    }

    #[test]
    fn levi_projection_multiplicative_on_parabolic() {
        let g = GlGroup::new(3, 2).unwrap();
        let p = Parabolic::upper(&[2, 1]);
        let members: Vec<&Matrix> =
            (0..g.order()).map(|i| g.element(i)).filter(|m| p.contains(m)).collect();
        assert_eq!(members.len(), g.order() / 7); // |P| = |G| / [G:P]
        let mut rng = XorShift::new(9);
        for _ in 0..50 {
            let a = members[rng.below(members.len() as u64) as usize];
            let b = members[rng.below(members.len() as u64) as usize];
            assert_eq!(
                p.levi_project(&a.mul(b).unwrap()),
                p.levi_project(a).mul(&p.levi_project(b)).unwrap()
            );
        }
    }
}
