//! Finite Coxeter groups of types A and B and their products.
//!
//! Elements are stored in normal form: a permutation window per type-A factor
//! and a signed permutation window per type-B factor. Words multiply out to
//! normal forms, lengths come from greedy descent stripping, and the minimal
//! coset representatives W_J \ W carry the unique factorization w = u * x
//! with u in W_J and additive lengths.
//!
//! Generator numbering is global and 1-based, factor by factor, left to
//! right. Inside a type-B factor the sign-change generator is index 1; the
//! edge between indices 1 and 2 has order 4.

use crate::error::Error;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    A,
    B,
}

/// A product of irreducible factors; rank 0 factors are allowed and denote
/// trivial groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterType {
    factors: Vec<(Kind, usize)>,
}

/// One element, as a tuple of per-factor windows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterElement {
    typ: CoxeterType,
    parts: Vec<Part>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Part {
    /// Images of 0..=rank under a permutation of rank + 1 points.
    Perm(Vec<u8>),
    /// Images of points 1..=rank under a signed permutation; entries are
    /// nonzero, absolute values distinct.
    Signed(Vec<i8>),
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self
            .factors
            .iter()
            .map(|&(k, r)| format!("{}{}", if k == Kind::A { "A" } else { "B" }, r))
            .collect();
        write!(f, "{}", s.join("x"))
    }
}

impl CoxeterType {
    pub fn new(factors: Vec<(Kind, usize)>) -> CoxeterType {
        CoxeterType { factors }
    }

    pub fn a(rank: usize) -> CoxeterType {
        CoxeterType { factors: vec![(Kind::A, rank)] }
    }

    pub fn b(rank: usize) -> CoxeterType {
        CoxeterType { factors: vec![(Kind::B, rank)] }
    }

    /// Parse names like "A2", "B2", "A1xA1", "A3xB2".
    pub fn parse(s: &str) -> Result<CoxeterType, Error> {
        let mut factors = Vec::new();
        for piece in s.split(['x', 'X']) {
            let piece = piece.trim();
            let kind = match piece.chars().next() {
                Some('A' | 'a') => Kind::A,
                Some('B' | 'b') => Kind::B,
                _ => return Err(Error::BadInput(format!("bad factor {piece:?}"))),
            };
            let rank: usize = piece[1..]
                .parse()
                .map_err(|_| Error::BadInput(format!("bad rank in {piece:?}")))?;
            factors.push((kind, rank));
        }
        Ok(CoxeterType { factors })
    }

    pub fn factors(&self) -> &[(Kind, usize)] {
        &self.factors
    }

    pub fn num_generators(&self) -> usize {
        self.factors.iter().map(|&(_, r)| r).sum()
    }

    pub fn order(&self) -> u128 {
        let mut n = 1u128;
        for &(k, r) in &self.factors {
            let mut f = 1u128;
            for i in 1..=(r as u128) {
                f *= i;
            }
            n *= match k {
                Kind::A => {
                    let mut g = f * (r as u128 + 1);
                    if r == 0 {
                        g = 1;
                    }
                    g
                }
                Kind::B => f << r,
            };
        }
        n
    }

    /// (factor index, local 1-based index) of a global 1-based generator.
    fn locate(&self, s: usize) -> (usize, usize) {
        assert!(s >= 1, "generators are 1-based");
        let mut rem = s;
        for (fi, &(_, r)) in self.factors.iter().enumerate() {
            if rem <= r {
                return (fi, rem);
            }
            rem -= r;
        }
        panic!("generator {s} out of range for {self}");
    }

    /// Coxeter matrix entry m(s, t) for distinct generators.
    pub fn m(&self, s: usize, t: usize) -> usize {
        if s == t {
            return 1;
        }
        let (fs, ls) = self.locate(s);
        let (ft, lt) = self.locate(t);
        if fs != ft {
            return 2;
        }
        let (lo, hi) = (ls.min(lt), ls.max(lt));
        match self.factors[fs].0 {
            Kind::A => {
                if hi - lo == 1 {
                    3
                } else {
                    2
                }
            }
            Kind::B => {
                if (lo, hi) == (1, 2) {
                    4
                } else if hi - lo == 1 {
                    3
                } else {
                    2
                }
            }
        }
    }

    pub fn identity(&self) -> CoxeterElement {
        let parts = self
            .factors
            .iter()
            .map(|&(k, r)| match k {
                Kind::A => Part::Perm((0..=r as u8).collect()),
                Kind::B => Part::Signed((1..=r as i8).collect()),
            })
            .collect();
        CoxeterElement { typ: self.clone(), parts }
    }

    pub fn generator(&self, s: usize) -> CoxeterElement {
        let (fi, local) = self.locate(s);
        let mut e = self.identity();
        match &mut e.parts[fi] {
            Part::Perm(p) => p.swap(local - 1, local),
            Part::Signed(sp) => {
                if local == 1 {
                    sp[0] = -sp[0];
                } else {
                    sp.swap(local - 2, local - 1);
                }
            }
        }
        e
    }

    /// Generator conjugacy orbits, in canonical order: factor by factor, and
    /// inside a type-B factor the sign-change orbit before the chain orbit.
    pub fn generator_orbits(&self) -> Vec<Vec<usize>> {
        let mut orbits = Vec::new();
        let mut base = 0usize;
        for &(k, r) in &self.factors {
            match k {
                Kind::A => {
                    if r > 0 {
                        orbits.push((base + 1..=base + r).collect());
                    }
                }
                Kind::B => {
                    if r > 0 {
                        orbits.push(vec![base + 1]);
                    }
                    if r > 1 {
                        orbits.push((base + 2..=base + r).collect());
                    }
                }
            }
            base += r;
        }
        orbits
    }

    /// Multiply out a word of 1-based generator indices.
    pub fn reduce(&self, word: &[usize]) -> CoxeterElement {
        let mut w = self.identity();
        for &s in word {
            w = w.mul(&self.generator(s));
        }
        w
    }

    /// All elements, sorted by (length, window encoding). Errors above the
    /// enumeration bound of 100000 elements.
    pub fn enumerate(&self) -> Result<Vec<CoxeterElement>, Error> {
        if self.order() > 100_000 {
            return Err(Error::TooLarge(format!(
                "|W| = {} exceeds the enumeration bound",
                self.order()
            )));
        }
        let gens: Vec<CoxeterElement> =
            (1..=self.num_generators()).map(|s| self.generator(s)).collect();
        let mut seen: HashMap<Vec<i16>, usize> = HashMap::new();
        let mut out = vec![self.identity()];
        seen.insert(out[0].key(), 0);
        let mut head = 0;
        while head < out.len() {
            let cur = out[head].clone();
            head += 1;
            for g in &gens {
                let nxt = cur.mul(g);
                let k = nxt.key();
                if !seen.contains_key(&k) {
                    seen.insert(k, out.len());
                    out.push(nxt);
                }
            }
        }
        debug_assert_eq!(out.len() as u128, self.order());
        out.sort_by_cached_key(|w| (w.length(), w.key()));
        Ok(out)
    }

    /// Minimal-length representatives of the right cosets W_J \ W, sorted by
    /// (length, window encoding). J holds global 1-based generator indices.
    pub fn min_coset_reps(&self, j: &[usize]) -> Result<Vec<CoxeterElement>, Error> {
        let mut reps: Vec<CoxeterElement> = Vec::new();
        let mut seen: HashMap<Vec<i16>, usize> = HashMap::new();
        for w in self.enumerate()? {
            let x = self.coset_canonical(j, &w);
            let k = x.key();
            if !seen.contains_key(&k) {
                seen.insert(k, reps.len());
                reps.push(x);
            }
        }
        reps.sort_by_cached_key(|w| (w.length(), w.key()));
        Ok(reps)
    }

    /// The minimal-length element of W_J w: strip left descents in J.
    pub fn coset_canonical(&self, j: &[usize], w: &CoxeterElement) -> CoxeterElement {
        let mut x = w.clone();
        'outer: loop {
            let linv = x.inverse();
            for &s in j {
                // s is a left descent of x iff a right descent of x^{-1}
                if linv.is_right_descent(s) {
                    x = self.generator(s).mul(&x);
                    continue 'outer;
                }
            }
            return x;
        }
    }

    /// Factor w = u * x with u in W_J and x the minimal coset representative;
    /// lengths are additive. Returns (u, x).
    pub fn coset_factorize(
        &self,
        j: &[usize],
        w: &CoxeterElement,
    ) -> (CoxeterElement, CoxeterElement) {
        let x = self.coset_canonical(j, w);
        let u = w.mul(&x.inverse());
        debug_assert!(u.word().iter().all(|s| j.contains(s)));
        debug_assert_eq!(u.length() + x.length(), w.length());
        (u, x)
    }

    /// Connected components of the sub-diagram on J, each as
    /// (kind, global generator indices in diagram order).
    pub fn diagram_components(&self, j: &[usize]) -> Vec<(Kind, Vec<usize>)> {
        let mut j_sorted: Vec<usize> = j.to_vec();
        j_sorted.sort_unstable();
        j_sorted.dedup();
        let mut comps = Vec::new();
        let mut base = 0usize;
        for &(k, r) in &self.factors {
            let local: Vec<usize> = j_sorted
                .iter()
                .copied()
                .filter(|&s| s > base && s <= base + r)
                .collect();
            let mut run: Vec<usize> = Vec::new();
            for &s in &local {
                if let Some(&last) = run.last() {
                    if s != last + 1 {
                        comps.push(run_kind(k, base, &run));
                        run = Vec::new();
                    }
                }
                run.push(s);
            }
            if !run.is_empty() {
                comps.push(run_kind(k, base, &run));
            }
            base += r;
        }
        comps
    }
}

fn run_kind(factor_kind: Kind, base: usize, run: &[usize]) -> (Kind, Vec<usize>) {
    let kind = match factor_kind {
        Kind::A => Kind::A,
        Kind::B => {
            if run[0] == base + 1 {
                Kind::B
            } else {
                Kind::A
            }
        }
    };
    (kind, run.to_vec())
}

impl fmt::Display for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.word();
        if w.is_empty() {
            return write!(f, "e");
        }
        let s: Vec<String> = w.iter().map(|g| format!("s{g}")).collect();
        write!(f, "{}", s.join("."))
    }
}

impl CoxeterElement {
    pub fn typ(&self) -> &CoxeterType {
        &self.typ
    }

    /// Window encoding used for hashing and deterministic ordering.
    pub fn key(&self) -> Vec<i16> {
        let mut k = Vec::new();
        for p in &self.parts {
            match p {
                Part::Perm(v) => k.extend(v.iter().map(|&x| x as i16)),
                Part::Signed(v) => k.extend(v.iter().map(|&x| x as i16)),
            }
        }
        k
    }

    pub fn is_identity(&self) -> bool {
        self == &self.typ.identity()
    }

    /// Group product: (self * other)(x) = self(other(x)) in every factor.
    pub fn mul(&self, other: &CoxeterElement) -> CoxeterElement {
        assert_eq!(self.typ, other.typ, "elements of different Coxeter types");
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| match (a, b) {
                (Part::Perm(pa), Part::Perm(pb)) => {
                    Part::Perm(pb.iter().map(|&x| pa[x as usize]).collect())
                }
                (Part::Signed(sa), Part::Signed(sb)) => Part::Signed(
                    sb.iter()
                        .map(|&x| {
                            let img = sa[(x.abs() - 1) as usize];
                            if x < 0 {
                                -img
                            } else {
                                img
                            }
                        })
                        .collect(),
                ),
                _ => unreachable!(),
            })
            .collect();
        CoxeterElement { typ: self.typ.clone(), parts }
    }

    pub fn inverse(&self) -> CoxeterElement {
        let parts = self
            .parts
            .iter()
            .map(|p| match p {
                Part::Perm(v) => {
                    let mut inv = vec![0u8; v.len()];
                    for (i, &x) in v.iter().enumerate() {
                        inv[x as usize] = i as u8;
                    }
                    Part::Perm(inv)
                }
                Part::Signed(v) => {
                    let mut inv = vec![0i8; v.len()];
                    for (i, &x) in v.iter().enumerate() {
                        let pos = (x.abs() - 1) as usize;
                        inv[pos] = if x < 0 { -(i as i8 + 1) } else { i as i8 + 1 };
                    }
                    Part::Signed(inv)
                }
            })
            .collect();
        CoxeterElement { typ: self.typ.clone(), parts }
    }

    /// True when length(w * s) < length(w).
    pub fn is_right_descent(&self, s: usize) -> bool {
        let (fi, local) = self.typ.locate(s);
        match &self.parts[fi] {
            Part::Perm(p) => p[local - 1] > p[local],
            Part::Signed(sp) => {
                if local == 1 {
                    sp[0] < 0
                } else {
                    sp[local - 2] > sp[local - 1]
                }
            }
        }
    }

    fn first_right_descent(&self) -> Option<usize> {
        (1..=self.typ.num_generators()).find(|&s| self.is_right_descent(s))
    }

    /// Coxeter length, by stripping descents.
    pub fn length(&self) -> usize {
        self.word().len()
    }

    /// The lexicographically-least reduced word (global 1-based indices),
    /// produced by repeatedly removing the smallest right descent.
    pub fn word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(s) = w.first_right_descent() {
            rev.push(s);
            w = w.mul(&self.typ.generator(s));
        }
        rev.reverse();
        rev
    }

    /// Images of 0-based points under a one-factor type-A element.
    pub fn as_permutation(&self) -> Vec<usize> {
        assert_eq!(self.parts.len(), 1);
        match &self.parts[0] {
            Part::Perm(v) => v.iter().map(|&x| x as usize).collect(),
            Part::Signed(_) => panic!("not a type-A element"),
        }
    }

    /// For an all-A product aligned with an ordered composition (factor f has
    /// rank composition[f] - 1): the images of 0-based points 0..n under the
    /// block-diagonal permutation.
    pub fn block_permutation(&self, composition: &[usize]) -> Vec<usize> {
        assert_eq!(composition.len(), self.parts.len());
        let mut img = Vec::new();
        let mut base = 0usize;
        for (p, &c) in self.parts.iter().zip(composition) {
            match p {
                Part::Perm(v) => {
                    assert_eq!(v.len(), c);
                    img.extend(v.iter().map(|&x| base + x as usize));
                }
                Part::Signed(_) => panic!("not an all-A element"),
            }
            base += c;
        }
        img
    }
}
