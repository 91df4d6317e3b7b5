//! Fully enumerated GL_n(q) and block-diagonal products.
//!
//! A group is generated by the companion matrix of the first primitive
//! polynomial (a generator of the nonsplit torus) together with a
//! transvection; enumeration is breadth-first with every element keeping a
//! back-pointer, so each element carries a word in the generators and any
//! representation can be evaluated on it by multiplying generator images
//! along that word. The element count is checked against
//! |GL_n(q)| = prod (q^n - q^i); if the standard pair falls short a
//! diagonal generator is added and the enumeration redone.

use std::collections::HashMap;

use crate::error::Error;
use crate::field::Field;
use crate::matrix::Matrix;
use crate::modalg::AlgebraModule;

/// Enumeration ceiling for a single factor.
pub const MAX_GROUP_ORDER: u128 = 20_160;

pub struct GlGroup {
    field: Field,
    n: usize,
    gens: Vec<Matrix>,
    elements: Vec<Matrix>,
    /// (parent element index, generator index); the identity points at itself.
    parent: Vec<(usize, usize)>,
    index: HashMap<u64, usize>,
}

pub fn gl_order(n: usize, q: u64) -> u128 {
    let qn = (q as u128).pow(n as u32);
    (0..n as u32).map(|i| qn - (q as u128).pow(i)).product()
}

impl GlGroup {
    pub fn new(n: usize, q: u64) -> Result<GlGroup, Error> {
        if n == 0 {
            return Err(Error::BadInput("GL_0 has no points".into()));
        }
        let order = gl_order(n, q);
        if order > MAX_GROUP_ORDER {
            return Err(Error::TooLarge(format!(
                "|GL_{n}({q})| = {order} exceeds the enumeration bound"
            )));
        }
        let field = Field::of_order(q)?;
        let mut gens = vec![companion_of_first_primitive(&field, n)?];
        if n >= 2 {
            let mut t = Matrix::identity(&field, n);
            t.set_raw(0, 1, 1);
            gens.push(t);
        }
        let mut group = GlGroup::enumerate(&field, n, gens.clone())?;
        if group.elements.len() as u128 != order {
            // standard pair failed to generate: add diag(primitive, 1, .., 1)
            let mut d = Matrix::identity(&field, n);
            d.set_raw(0, 0, field.primitive_element().value() as u32);
            gens.push(d);
            group = GlGroup::enumerate(&field, n, gens)?;
        }
        if group.elements.len() as u128 != order {
            return Err(Error::Verification(format!(
                "generated {} of {order} elements of GL_{n}({q})",
                group.elements.len()
            )));
        }
        Ok(group)
    }

    fn enumerate(field: &Field, n: usize, gens: Vec<Matrix>) -> Result<GlGroup, Error> {
        let id = Matrix::identity(field, n);
        let mut elements = vec![id.clone()];
        let mut parent = vec![(0usize, usize::MAX)];
        let mut index = HashMap::new();
        index.insert(mat_key(&id), 0usize);
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head].clone();
            for (gi, g) in gens.iter().enumerate() {
                let nxt = cur.mul(g)?;
                let k = mat_key(&nxt);
                if !index.contains_key(&k) {
                    index.insert(k, elements.len());
                    elements.push(nxt);
                    parent.push((head, gi));
                }
            }
            head += 1;
        }
        Ok(GlGroup { field: field.clone(), n, gens, elements, parent, index })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn gens(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(&mat_key(m)).copied()
    }

    /// Generator word of element i, left-to-right product order.
    pub fn word_of(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while i != 0 {
            let (p, g) = self.parent[i];
            w.push(g);
            i = p;
        }
        w.reverse();
        w
    }

    /// Evaluate a representation, given by generator images, on element i.
    pub fn eval(&self, images: &[Matrix], i: usize) -> Result<Matrix, Error> {
        if images.len() != self.gens.len() {
            return Err(Error::Shape(format!(
                "{} generator images for {} generators",
                images.len(),
                self.gens.len()
            )));
        }
        let dim = if images.is_empty() { 1 } else { images[0].rows() };
        let f = if images.is_empty() { &self.field } else { images[0].field() };
        let mut acc = Matrix::identity(f, dim);
        for g in self.word_of(i) {
            acc = acc.mul(&images[g])?;
        }
        Ok(acc)
    }

    /// The trivial one-dimensional module over a coefficient field.
    pub fn trivial_module(&self, coeff: &Field) -> AlgebraModule {
        let gens = vec![Matrix::identity(coeff, 1); self.gens.len()];
        AlgebraModule::new(coeff, 1, gens).unwrap()
    }
}

pub(crate) fn mat_key(m: &Matrix) -> u64 {
    let q = m.field().order();
    let mut k: u64 = 0;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            k = k.wrapping_mul(q).wrapping_add(m.raw(i, j) as u64);
        }
    }
    k
}

/// Companion matrix of the lexicographically first monic primitive
/// polynomial of degree n over the field (constant term first in the
/// lexicographic order); its multiplicative order is verified to be
/// q^n - 1.
fn companion_of_first_primitive(field: &Field, n: usize) -> Result<Matrix, Error> {
    let q = field.order();
    let target = q.pow(n as u32) - 1;
    let mut coeffs = vec![0u32; n]; // c_0 .. c_{n-1}, leading 1 implicit
    loop {
        if !next_coeffs(&mut coeffs, q) {
            return Err(Error::BadField(format!(
                "no primitive polynomial of degree {n} over GF({q})"
            )));
        }
        if coeffs[0] == 0 {
            continue; // zero constant term: divisible by x
        }
        if !poly_irreducible(field, &coeffs) {
            continue;
        }
        let c = companion(field, &coeffs);
        if matrix_mult_order(&c, target)? == target {
            return Ok(c);
        }
    }
}

fn next_coeffs(v: &mut [u32], q: u64) -> bool {
    for c in v.iter_mut().rev() {
        *c += 1;
        if (*c as u64) < q {
            return true;
        }
        *c = 0;
    }
    false
}

fn companion(field: &Field, coeffs: &[u32]) -> Matrix {
    let n = coeffs.len();
    let mut m = Matrix::zero(field, n, n);
    for i in 1..n {
        m.set_raw(i, i - 1, 1);
    }
    for (i, &c) in coeffs.iter().enumerate() {
        m.set_raw(i, n - 1, field.rneg(c));
    }
    m
}

fn matrix_mult_order(m: &Matrix, cap: u64) -> Result<u64, Error> {
    let id = Matrix::identity(m.field(), m.rows());
    let mut acc = m.clone();
    for k in 1..=cap {
        if acc == id {
            return Ok(k);
        }
        acc = acc.mul(m)?;
    }
    Err(Error::Verification("matrix order exceeds its cap".into()))
}

/// Irreducibility of x^n + c_{n-1}x^{n-1} + ... + c_0 over the field, by
/// trial division by all monic polynomials of degree 1..=n/2.
fn poly_irreducible(field: &Field, coeffs: &[u32]) -> bool {
    let n = coeffs.len();
    let mut poly: Vec<u32> = coeffs.to_vec();
    poly.push(1);
    for d in 1..=n / 2 {
        let mut div = vec![0u32; d];
        loop {
            if !next_coeffs(&mut div, field.order()) {
                break;
            }
            let mut divisor = div.clone();
            divisor.push(1);
            if poly_rem_is_zero(field, &poly, &divisor) {
                return false;
            }
        }
        // also the divisor with all-zero lower coefficients (x^d)
        let mut divisor = vec![0u32; d];
        divisor.push(1);
        if poly_rem_is_zero(field, &poly, &divisor) {
            return false;
        }
    }
    true
}

fn poly_rem_is_zero(field: &Field, poly: &[u32], divisor: &[u32]) -> bool {
    let mut rem: Vec<u32> = poly.to_vec();
    let dd = divisor.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let off = rem.len() - 1 - dd;
            for (i, &dc) in divisor.iter().enumerate() {
                let t = field.rmul(lead, dc);
                rem[off + i] = field.rsub(rem[off + i], t);
            }
        }
        debug_assert_eq!(*rem.last().unwrap(), 0);
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// A block-diagonal product of GL factors: the group of points of a split
/// Levi subgroup given by a composition of n.
pub struct LeviGroup {
    field: Field,
    composition: Vec<usize>,
    factors: Vec<GlGroup>,
    /// module-generator index offset per factor
    offsets: Vec<usize>,
}

impl LeviGroup {
    pub fn new(composition: &[usize], q: u64) -> Result<LeviGroup, Error> {
        if composition.is_empty() || composition.iter().any(|&c| c == 0) {
            return Err(Error::BadInput(format!(
                "composition {composition:?} must have positive parts"
            )));
        }
        let field = Field::of_order(q)?;
        let mut factors = Vec::new();
        let mut offsets = Vec::new();
        let mut off = 0;
        for &c in composition {
            let g = GlGroup::new(c, q)?;
            offsets.push(off);
            off += g.gens().len();
            factors.push(g);
        }
        Ok(LeviGroup { field, composition: composition.to_vec(), factors, offsets })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn composition(&self) -> &[usize] {
        &self.composition
    }

    pub fn n(&self) -> usize {
        self.composition.iter().sum()
    }

    pub fn factors(&self) -> &[GlGroup] {
        &self.factors
    }

    pub fn order(&self) -> u128 {
        self.factors.iter().map(|f| f.order() as u128).product()
    }

    /// Total number of module generators (concatenated over factors).
    pub fn num_module_gens(&self) -> usize {
        self.factors.iter().map(|f| f.gens().len()).sum()
    }

    /// Factor generator embedded as an n x n block-diagonal matrix.
    pub fn embed_factor_gen(&self, f: usize, k: usize) -> Matrix {
        let n = self.n();
        let mut m = Matrix::identity(&self.field, n);
        let base: usize = self.composition[..f].iter().sum();
        let g = &self.factors[f].gens()[k];
        for i in 0..g.rows() {
            for j in 0..g.cols() {
                m.set_raw(base + i, base + j, g.raw(i, j));
            }
        }
        m
    }

    /// Diagonal block f of an n x n matrix.
    pub fn block_of(&self, m: &Matrix, f: usize) -> Matrix {
        let base: usize = self.composition[..f].iter().sum();
        let c = self.composition[f];
        m.submatrix(base, base + c, base, base + c)
    }

    /// Word of a block-diagonal element in the concatenated generator
    /// numbering.
    pub fn word_of(&self, m: &Matrix) -> Result<Vec<usize>, Error> {
        let mut out = Vec::new();
        for (f, group) in self.factors.iter().enumerate() {
            let block = self.block_of(m, f);
            let idx = group.index_of(&block).ok_or_else(|| {
                Error::BadInput("matrix block is not an element of the factor group".into())
            })?;
            out.extend(group.word_of(idx).into_iter().map(|g| g + self.offsets[f]));
        }
        Ok(out)
    }

    /// Evaluate a module (generators in the concatenated numbering) on a
    /// block-diagonal element.
    pub fn eval(&self, x: &AlgebraModule, m: &Matrix) -> Result<Matrix, Error> {
        if x.gens().len() != self.num_module_gens() {
            return Err(Error::Shape(format!(
                "{} generator images for {} Levi generators",
                x.gens().len(),
                self.num_module_gens()
            )));
        }
        let mut acc = Matrix::identity(x.field(), x.dim());
        for g in self.word_of(m)? {
            acc = acc.mul(&x.gens()[g])?;
        }
        Ok(acc)
    }

    /// Outer tensor product of one module per factor, as a module with the
    /// concatenated generator list.
    pub fn tensor(&self, parts: &[AlgebraModule]) -> Result<AlgebraModule, Error> {
        if parts.len() != self.factors.len() {
            return Err(Error::Shape(format!(
                "{} tensor factors for {} group factors",
                parts.len(),
                self.factors.len()
            )));
        }
        let coeff = parts
            .first()
            .map(|p| p.field().clone())
            .unwrap_or_else(|| self.field.clone());
        let dims: Vec<usize> = parts.iter().map(|p| p.dim()).collect();
        let total: usize = dims.iter().product();
        let mut gens = Vec::new();
        for (f, part) in parts.iter().enumerate() {
            if part.field() != &coeff {
                return Err(Error::OwnerMismatch);
            }
            if part.gens().len() != self.factors[f].gens().len() {
                return Err(Error::Shape("tensor factor generator count mismatch".into()));
            }
            let left: usize = dims[..f].iter().product();
            let right: usize = dims[f + 1..].iter().product();
            let il = Matrix::identity(&coeff, left);
            let ir = Matrix::identity(&coeff, right);
            for g in part.gens() {
                gens.push(il.kron(g)?.kron(&ir)?);
            }
        }
        AlgebraModule::new(&coeff, total, gens)
    }

    /// The trivial one-dimensional module.
    pub fn trivial_module(&self, coeff: &Field) -> AlgebraModule {
        let gens = vec![Matrix::identity(coeff, 1); self.num_module_gens()];
        AlgebraModule::new(coeff, 1, gens).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prng::XorShift;

    #[test]
    fn orders_match_formula() {
        for (n, q, expect) in [
            (2usize, 2u64, 6usize),
            (2, 3, 48),
            (2, 5, 480),
            (3, 2, 168),
            (3, 3, 11_232),
            (1, 7, 6),
            (1, 2, 1),
        ] {
            let g = GlGroup::new(n, q).unwrap();
            assert_eq!(g.order(), expect, "GL_{n}({q})");
            assert_eq!(gl_order(n, q), expect as u128);
        }
    }

    #[test]
    fn size_bound_enforced() {
        assert!(matches!(GlGroup::new(3, 5), Err(Error::TooLarge(_))));
        assert!(matches!(GlGroup::new(4, 3), Err(Error::TooLarge(_))));
    }

    #[test]
    fn words_reproduce_elements() {
        let g = GlGroup::new(2, 5).unwrap();
        let mut rng = XorShift::new(3);
        for _ in 0..40 {
            let i = rng.below(g.order() as u64) as usize;
            let rebuilt = g.eval(g.gens(), i).unwrap();
            assert_eq!(&rebuilt, g.element(i));
        }
    }

    #[test]
    fn eval_is_multiplicative() {
        let g = GlGroup::new(2, 3).unwrap();
        // any faithful images work; use the natural ones over GF(3)
        let images = g.gens().to_vec();
        let mut rng = XorShift::new(11);
        for _ in 0..30 {
            let a = rng.below(g.order() as u64) as usize;
            let b = rng.below(g.order() as u64) as usize;
            let ab = g.element(a).mul(g.element(b)).unwrap();
            let ab_idx = g.index_of(&ab).unwrap();
            let lhs = g.eval(&images, ab_idx).unwrap();
            let rhs = g.eval(&images, a).unwrap().mul(&g.eval(&images, b).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn levi_product_and_words() {
        let l = LeviGroup::new(&[1, 2], 3).unwrap();
        assert_eq!(l.order(), 2 * 48);
        assert_eq!(l.n(), 3);
        // a block-diagonal element round-trips through its word
        let a = l.factors()[0].element(1).clone();
        let b = l.factors()[1].element(17).clone();
        let mut m = Matrix::identity(l.field(), 3);
        m.set_raw(0, 0, a.raw(0, 0));
        for i in 0..2 {
            for j in 0..2 {
                m.set_raw(1 + i, 1 + j, b.raw(i, j));
            }
        }
        let word = l.word_of(&m).unwrap();
        // evaluate the natural representation through embedded generators
        let nat: Vec<Matrix> = (0..l.factors().len())
            .flat_map(|f| (0..l.factors()[f].gens().len()).map(move |k| (f, k)))
            .map(|(f, k)| l.embed_factor_gen(f, k))
            .collect();
        let mut acc = Matrix::identity(l.field(), 3);
        for g in word {
            acc = acc.mul(&nat[g]).unwrap();
        }
        assert_eq!(acc, m);
    }

    #[test]
    fn tensor_of_trivials_is_trivial() {
        let coeff = Field::new(2, 1).unwrap();
        let l = LeviGroup::new(&[1, 2], 3).unwrap();
        let parts: Vec<AlgebraModule> =
            l.factors().iter().map(|f| f.trivial_module(&coeff)).collect();
        let t = l.tensor(&parts).unwrap();
        assert_eq!(t.dim(), 1);
        assert_eq!(t.gens().len(), l.num_module_gens());
    }
}
