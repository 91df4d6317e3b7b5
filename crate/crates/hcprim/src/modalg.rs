//! Modules over matrix algebras: spinning, irreducibility, composition
//! series, hom spaces.
//!
//! A module is a dimension plus one square action matrix per algebra
//! generator; which algebra (group, Hecke, endomorphism ring) is the
//! caller's business. Matrices act on column vectors, invariant subspaces
//! are row spaces.
//!
//! The irreducibility test is the meataxe in its conclusive form: find a
//! singular element of the generated algebra, spin every nullspace line, and
//! on survival spin one dual nullspace line; both spinning to the full space
//! proves irreducibility. Randomness is a seeded xorshift, so verdicts are
//! reproducible. Small dimensions fall back to spinning every line of the
//! space, which is also the independent oracle the test suite checks the
//! meataxe against.

use crate::error::Error;
use crate::field::Field;
use crate::matrix::Matrix;
use crate::prng::XorShift;

#[derive(Clone)]
pub struct AlgebraModule {
    field: Field,
    dim: usize,
    gens: Vec<Matrix>,
}

impl std::fmt::Debug for AlgebraModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "AlgebraModule(dim {} over {}, {} generators)",
            self.dim,
            self.field,
            self.gens.len()
        )
    }
}

/// Outcome of an irreducibility test.
#[derive(Clone, Debug)]
pub enum Simplicity {
    Irreducible,
    /// Rows span a proper nonzero invariant subspace.
    Reducible(Matrix),
}

impl AlgebraModule {
    pub fn new(field: &Field, dim: usize, gens: Vec<Matrix>) -> Result<AlgebraModule, Error> {
        for g in &gens {
            if g.field() != field {
                return Err(Error::OwnerMismatch);
            }
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::Shape(format!(
                    "generator is {}x{}, module dimension {dim}",
                    g.rows(),
                    g.cols()
                )));
            }
        }
        Ok(AlgebraModule { field: field.clone(), dim, gens })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Matrix] {
        &self.gens
    }

    /// Smallest invariant row space containing the rows of `seeds`, as a
    /// reduced-echelon basis.
    pub fn spin(&self, seeds: &Matrix) -> Matrix {
        let mut basis = EchelonBasis::new(&self.field, self.dim);
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for i in 0..seeds.rows() {
            let v: Vec<u32> = (0..self.dim).map(|j| seeds.raw(i, j)).collect();
            if basis.insert(v.clone()) {
                queue.push(v);
            }
        }
        while let Some(v) = queue.pop() {
            for g in &self.gens {
                let w = apply(g, &v);
                let red = basis.reduce(&w);
                if red.iter().any(|&x| x != 0) && basis.insert(red.clone()) {
                    queue.push(red);
                }
            }
        }
        basis.into_matrix()
    }

    /// Irreducibility by spinning every line of the space. Sound for any
    /// module, feasible only when the projective line count is small.
    pub fn exhaustive_irreducible(&self) -> Result<Simplicity, Error> {
        if self.dim == 0 {
            return Err(Error::BadInput("irreducibility of the zero module".into()));
        }
        if self.dim == 1 {
            return Ok(Simplicity::Irreducible);
        }
        let q = self.field.order();
        let lines = (q.pow(self.dim as u32) - 1) / (q - 1);
        if lines > 2_000_000 {
            return Err(Error::TooLarge(format!(
                "{lines} lines to spin exhaustively"
            )));
        }
        let mut v = vec![0u32; self.dim];
        loop {
            // next projective representative: leading nonzero coordinate 1
            if !next_projective(&mut v, q) {
                return Ok(Simplicity::Irreducible);
            }
            let seed = Matrix::from_raw_rows(&self.field, vec![v.clone()])?;
            let sub = self.spin(&seed);
            if sub.rows() < self.dim {
                return Ok(Simplicity::Reducible(sub));
            }
        }
    }

    /// The meataxe. Conclusive in both directions; errors are
    /// [`Error::ExtendScalars`] when the module is irreducible but its
    /// endomorphism ring is a proper field extension, and
    /// [`Error::Inconclusive`] when no usable singular algebra element shows
    /// up inside the retry budget and the dimension is too big to spin
    /// exhaustively.
    pub fn meataxe_irreducible(&self, seed: u64) -> Result<Simplicity, Error> {
        if self.dim == 0 {
            return Err(Error::BadInput("irreducibility of the zero module".into()));
        }
        if self.dim == 1 {
            return Ok(Simplicity::Irreducible);
        }
        if self.gens.iter().all(|g| g.is_zero()) || self.gens.is_empty() {
            // every subspace is invariant
            let e1 = Matrix::from_raw_rows(&self.field, vec![unit_vec(self.dim, 0)])?;
            return Ok(Simplicity::Reducible(e1));
        }
        let mut rng = XorShift::new(seed);
        let q = self.field.order();
        for _attempt in 0..200 {
            let theta = self.random_element(&mut rng);
            if theta.is_zero() {
                continue;
            }
            let null = theta.nullspace();
            let k = null.rows();
            if k == 0 {
                continue;
            }
            let lines = (q.pow(k as u32) - 1) / (q - 1);
            if lines > 600 {
                continue; // hope for a thinner nullspace
            }
            // spin every line of the nullspace
            let mut coeff = vec![0u32; k];
            while next_projective(&mut coeff, q) {
                let mut v = vec![0u32; self.dim];
                for (ci, &c) in coeff.iter().enumerate() {
                    if c != 0 {
                        for j in 0..self.dim {
                            v[j] = self
                                .field
                                .radd(v[j], self.field.rmul(c, null.raw(ci, j)));
                        }
                    }
                }
                let sub = self.spin(&Matrix::from_raw_rows(&self.field, vec![v])?);
                if sub.rows() < self.dim {
                    return Ok(Simplicity::Reducible(sub));
                }
            }
            // dual criterion: spin one dual nullspace line under transposes
            let dual = AlgebraModule::new(
                &self.field,
                self.dim,
                self.gens.iter().map(|g| g.transpose()).collect(),
            )?;
            let dnull = theta.transpose().nullspace();
            debug_assert!(dnull.rows() > 0);
            let dspan = dual.spin(&dnull.row(0));
            if dspan.rows() < self.dim {
                // the annihilator of the dual span is invariant and proper
                let ann = dspan.nullspace();
                debug_assert!(ann.rows() > 0 && ann.rows() < self.dim);
                return Ok(Simplicity::Reducible(ann));
            }
            // irreducible; insist on a split endomorphism ring
            let end_dim = self.hom_space(self)?.len();
            if end_dim > 1 {
                return Err(Error::ExtendScalars { degree: end_dim as u32 });
            }
            return Ok(Simplicity::Irreducible);
        }
        if self.dim <= 8 {
            // A module on which no short algebra element is singular is
            // typically one whose endomorphism ring is a field extension;
            // exhaustive search settles irreducibility, and the
            // endomorphism check still applies to its verdict.
            return match self.exhaustive_irreducible()? {
                Simplicity::Reducible(b) => Ok(Simplicity::Reducible(b)),
                Simplicity::Irreducible => {
                    let end_dim = self.hom_space(self)?.len();
                    if end_dim > 1 {
                        Err(Error::ExtendScalars { degree: end_dim as u32 })
                    } else {
                        Ok(Simplicity::Irreducible)
                    }
                }
            };
        }
        Err(Error::Inconclusive(format!(
            "no usable singular algebra element in 200 draws at dimension {}",
            self.dim
        )))
    }

    /// A random element of the unital algebra: a short sum of scaled words
    /// of length at most 4 in the generators.
    fn random_element(&self, rng: &mut XorShift) -> Matrix {
        let q = self.field.order();
        let terms = 1 + rng.below(3) as usize;
        let mut acc = Matrix::zero(&self.field, self.dim, self.dim);
        for _ in 0..terms {
            let len = rng.below(5) as usize; // 0 = identity term
            let mut word = Matrix::identity(&self.field, self.dim);
            for _ in 0..len {
                let g = &self.gens[rng.below(self.gens.len() as u64) as usize];
                word = word.mul(g).unwrap();
            }
            let c = 1 + rng.below(q - 1) as u32;
            acc = acc.add(&word.scale_raw(c)).unwrap();
        }
        acc
    }

    /// Sub- and quotient module on an invariant row space (rows of `basis`
    /// independent). Returns (sub, quotient).
    pub fn split(&self, basis: &Matrix) -> Result<(AlgebraModule, AlgebraModule), Error> {
        let r = basis.rows();
        if r == 0 || r >= self.dim {
            return Err(Error::BadInput("split needs a proper nonzero subspace".into()));
        }
        // complete to a basis of the space with standard vectors on the
        // non-pivot coordinates
        let reduced = basis.rref();
        if reduced.rank < r {
            return Err(Error::Shape("dependent rows in invariant basis".into()));
        }
        let mut rows: Vec<Vec<u32>> = (0..r)
            .map(|i| (0..self.dim).map(|j| reduced.mat.raw(i, j)).collect())
            .collect();
        for c in 0..self.dim {
            if !reduced.pivots.contains(&c) {
                rows.push(unit_vec(self.dim, c));
            }
        }
        let u = Matrix::from_raw_rows(&self.field, rows)?;
        let s = u.transpose();
        let s_inv = s.inverse()?;
        let mut sub_gens = Vec::new();
        let mut quot_gens = Vec::new();
        for g in &self.gens {
            let m = s_inv.mul(g)?.mul(&s)?;
            sub_gens.push(m.submatrix(0, r, 0, r));
            quot_gens.push(m.submatrix(r, self.dim, r, self.dim));
            debug_assert!(m.submatrix(r, self.dim, 0, r).is_zero());
        }
        Ok((
            AlgebraModule::new(&self.field, r, sub_gens)?,
            AlgebraModule::new(&self.field, self.dim - r, quot_gens)?,
        ))
    }

    /// Composition factors with multiplicities, in order of first
    /// appearance. When an irreducible factor has a non-split endomorphism
    /// field the whole computation restarts over an extension (degrees are
    /// capped by the built-in modulus table).
    pub fn composition_factors(
        &self,
        seed: u64,
    ) -> Result<Vec<(AlgebraModule, usize)>, Error> {
        if self.dim > 200 {
            return Err(Error::TooLarge(format!(
                "composition series at dimension {}",
                self.dim
            )));
        }
        let mut current = self.clone();
        loop {
            match current.composition_factors_once(seed) {
                Ok(fs) => return Ok(fs),
                Err(Error::ExtendScalars { degree }) => {
                    let new_degree = current.field.degree() * degree;
                    if new_degree > 6 {
                        return Err(Error::ExtendScalars { degree: new_degree });
                    }
                    let big = Field::new(current.field.characteristic(), new_degree)?;
                    current = current.extend_scalars(&big)?;
                }
                Err(e) => return Err(e),
            }
        }
    }

    fn composition_factors_once(
        &self,
        seed: u64,
    ) -> Result<Vec<(AlgebraModule, usize)>, Error> {
        let mut leaves: Vec<AlgebraModule> = Vec::new();
        let mut stack = vec![self.clone()];
        while let Some(m) = stack.pop() {
            if m.dim == 0 {
                continue;
            }
            match m.meataxe_irreducible(seed)? {
                Simplicity::Irreducible => leaves.push(m),
                Simplicity::Reducible(basis) => {
                    let (sub, quot) = m.split(&basis)?;
                    // keep first-appearance order stable: sub explored first
                    stack.push(quot);
                    stack.push(sub);
                }
            }
        }
        let mut grouped: Vec<(AlgebraModule, usize)> = Vec::new();
        'next: for leaf in leaves {
            for (rep, count) in grouped.iter_mut() {
                if rep.module_iso(&leaf, seed ^ 0x5EED)?.is_some() {
                    *count += 1;
                    continue 'next;
                }
            }
            grouped.push((leaf, 1));
        }
        debug_assert_eq!(
            grouped.iter().map(|(m, c)| m.dim * c).sum::<usize>(),
            self.dim
        );
        Ok(grouped)
    }

    /// Basis of the space of intertwiners f with f * gen_M = gen_N * f.
    /// Deterministic: the reduced nullspace basis of the flattened system.
    pub fn hom_space(&self, other: &AlgebraModule) -> Result<Vec<Matrix>, Error> {
        if self.field != other.field {
            return Err(Error::OwnerMismatch);
        }
        if self.gens.len() != other.gens.len() {
            return Err(Error::Shape("generator lists differ in length".into()));
        }
        let (dm, dn) = (self.dim, other.dim);
        let unknowns = dm * dn;
        if unknowns == 0 {
            return Ok(Vec::new());
        }
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let f = &self.field;
        for (gm, gn) in self.gens.iter().zip(&other.gens) {
            // equation (i, j): sum_k f[i,k] gm[k,j] - gn[i,k] f[k,j] = 0
            for i in 0..dn {
                for j in 0..dm {
                    let mut row = vec![0u32; unknowns];
                    for k in 0..dm {
                        let idx = i * dm + k;
                        row[idx] = f.radd(row[idx], gm.raw(k, j));
                    }
                    for k in 0..dn {
                        let idx = k * dm + j;
                        row[idx] = f.radd(row[idx], f.rneg(gn.raw(i, k)));
                    }
                    rows.push(row);
                }
            }
        }
        let system = if rows.is_empty() {
            Matrix::zero(f, 0, unknowns)
        } else {
            Matrix::from_raw_rows(f, rows)?
        };
        let null = system.nullspace();
        let mut basis = Vec::new();
        for r in 0..null.rows() {
            let mut m = Matrix::zero(f, dn, dm);
            for i in 0..dn {
                for j in 0..dm {
                    m.set_raw(i, j, null.raw(r, i * dm + j));
                }
            }
            basis.push(m);
        }
        Ok(basis)
    }

    /// An invertible intertwiner, if one turns up: basis elements first, then
    /// seeded random combinations, then exhaustive search when the hom space
    /// is small enough to sweep.
    pub fn module_iso(&self, other: &AlgebraModule, seed: u64) -> Result<Option<Matrix>, Error> {
        if self.dim != other.dim {
            return Ok(None);
        }
        if self.dim == 0 {
            return Ok(Some(Matrix::zero(&self.field, 0, 0)));
        }
        let homs = self.hom_space(other)?;
        if homs.is_empty() {
            return Ok(None);
        }
        let full = |m: &Matrix| m.rank() == self.dim;
        for h in &homs {
            if full(h) {
                return Ok(Some(h.clone()));
            }
        }
        let q = self.field.order();
        let h = homs.len() as u32;
        let combos = q.checked_pow(h);
        if let Some(total) = combos {
            if total <= 20_000 {
                let mut coeff = vec![0u32; homs.len()];
                while next_tuple(&mut coeff, q) {
                    let cand = combine(&self.field, &homs, &coeff);
                    if full(&cand) {
                        return Ok(Some(cand));
                    }
                }
                return Ok(None);
            }
        }
        let mut rng = XorShift::new(seed);
        for _ in 0..400 {
            let coeff: Vec<u32> =
                homs.iter().map(|_| rng.below(q) as u32).collect();
            let cand = combine(&self.field, &homs, &coeff);
            if full(&cand) {
                return Ok(Some(cand));
            }
        }
        Ok(None)
    }

    /// The same module with scalars extended along a field embedding.
    pub fn extend_scalars(&self, big: &Field) -> Result<AlgebraModule, Error> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.map_field(big))
            .collect::<Result<Vec<_>, _>>()?;
        AlgebraModule::new(big, self.dim, gens)
    }

    /// Tensor product over the same field; generator lists concatenate as
    /// (self's generators) ⊗ id and id ⊗ (other's generators).
    pub fn tensor_factors(&self, other: &AlgebraModule) -> Result<AlgebraModule, Error> {
        if self.field != other.field {
            return Err(Error::OwnerMismatch);
        }
        let id_m = Matrix::identity(&self.field, self.dim);
        let id_n = Matrix::identity(&self.field, other.dim);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.kron(&id_n)?);
        }
        for g in &other.gens {
            gens.push(id_m.kron(g)?);
        }
        AlgebraModule::new(&self.field, self.dim * other.dim, gens)
    }
}

fn unit_vec(dim: usize, at: usize) -> Vec<u32> {
    let mut v = vec![0u32; dim];
    v[at] = 1;
    v
}

fn apply(a: &Matrix, v: &[u32]) -> Vec<u32> {
    let f = a.field();
    (0..a.rows())
        .map(|i| {
            let mut s = 0u32;
            for (k, &vk) in v.iter().enumerate() {
                if vk != 0 {
                    s = f.radd(s, f.rmul(a.raw(i, k), vk));
                }
            }
            s
        })
        .collect()
}

fn combine(f: &Field, mats: &[Matrix], coeff: &[u32]) -> Matrix {
    let mut acc = Matrix::zero(f, mats[0].rows(), mats[0].cols());
    for (m, &c) in mats.iter().zip(coeff) {
        if c != 0 {
            acc = acc.add(&m.scale_raw(c)).unwrap();
        }
    }
    acc
}

/// Advance through projective representatives (leading nonzero entry 1) of
/// F^k, starting from the zero tuple; returns false after the last one.
fn next_projective(v: &mut [u32], q: u64) -> bool {
    loop {
        if !next_tuple(v, q) {
            return false;
        }
        if v.iter().find(|&&c| c != 0) == Some(&1) {
            return true;
        }
    }
}

/// Odometer over F^k; returns false after wrapping to all zeros.
fn next_tuple(v: &mut [u32], q: u64) -> bool {
    for c in v.iter_mut() {
        *c += 1;
        if (*c as u64) < q {
            return true;
        }
        *c = 0;
    }
    false
}

/// Echelonized growing row basis.
struct EchelonBasis {
    field: Field,
    cols: usize,
    /// (pivot column, row) sorted by pivot column
    rows: Vec<(usize, Vec<u32>)>,
}

impl EchelonBasis {
    fn new(field: &Field, cols: usize) -> EchelonBasis {
        EchelonBasis { field: field.clone(), cols, rows: Vec::new() }
    }

    fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            let c = w[*p];
            if c != 0 {
                let nc = f.rneg(c);
                for j in 0..self.cols {
                    w[j] = f.radd(w[j], f.rmul(nc, row[j]));
                }
            }
        }
        w
    }

    /// Reduce and insert; false when v was already in the span.
    fn insert(&mut self, v: Vec<u32>) -> bool {
        let f = self.field.clone();
        let w = self.reduce(&v);
        let Some(p) = w.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = f.rinv(w[p]).unwrap();
        let normalized: Vec<u32> = w.iter().map(|&c| f.rmul(c, inv)).collect();
        // back-substitute into existing rows to stay fully reduced
        for (_, row) in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                let nc = f.rneg(c);
                for j in 0..self.cols {
                    row[j] = f.radd(row[j], f.rmul(nc, normalized[j]));
                }
            }
        }
        let pos = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(pos, (p, normalized));
        true
    }

    fn into_matrix(self) -> Matrix {
        let rows: Vec<Vec<u32>> = self.rows.into_iter().map(|(_, r)| r).collect();
        if rows.is_empty() {
            Matrix::zero(&self.field, 0, self.cols)
        } else {
            Matrix::from_raw_rows(&self.field, rows).unwrap()
        }
    }
}
