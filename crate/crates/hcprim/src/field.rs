//! Arithmetic in small finite fields GF(p^d).
//!
//! A [`Field`] owns a characteristic `p`, a degree `d` and a monic irreducible
//! modulus over GF(p). Elements are residue-class polynomials encoded as a
//! single integer: the coefficient of x^i is the i-th base-p digit, constant
//! term least significant. Degree-1 fields skip polynomial arithmetic.
//!
//! Moduli come from a fixed built-in table (the base-p-smallest monic
//! irreducible of each degree), so arithmetic is reproducible across runs.

use crate::error::Error;
use std::fmt;
use std::sync::Arc;

/// Built-in moduli, coefficient vectors constant-term-first, for
/// p in {2, 3, 5, 7} and d in 1..=6. Degree 1 uses the polynomial x, i.e.
/// GF(p)[x]/(x) = GF(p).
const MODULI: &[(u64, &[&[u64]])] = &[
    (2, &[
        &[0, 1],
        &[1, 1, 1],
        &[1, 1, 0, 1],
        &[1, 1, 0, 0, 1],
        &[1, 0, 1, 0, 0, 1],
        &[1, 1, 0, 0, 0, 0, 1],
    ]),
    (3, &[
        &[0, 1],
        &[1, 0, 1],
        &[1, 2, 0, 1],
        &[2, 1, 0, 0, 1],
        &[1, 2, 0, 0, 0, 1],
        &[2, 1, 0, 0, 0, 0, 1],
    ]),
    (5, &[
        &[0, 1],
        &[2, 0, 1],
        &[1, 1, 0, 1],
        &[2, 0, 0, 0, 1],
        &[1, 4, 0, 0, 0, 1],
        &[2, 1, 0, 0, 0, 0, 1],
    ]),
    (7, &[
        &[0, 1],
        &[1, 0, 1],
        &[2, 0, 0, 1],
        &[1, 1, 0, 0, 1],
        &[3, 1, 0, 0, 0, 1],
        &[2, 0, 0, 0, 0, 0, 1],
    ]),
];

#[derive(Debug)]
struct FieldInner {
    p: u64,
    d: u32,
    /// Monic modulus, constant term first, length d + 1.
    modulus: Vec<u64>,
    /// p^0 .. p^d
    pow: Vec<u64>,
}

/// A finite field GF(p^d). Cheap to clone; equality is structural.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.d == other.0.d && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.d == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.d)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Remainder of polynomial division a mod m over GF(p); both constant-first.
fn poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while a.len() > dm {
        let c = *a.last().unwrap() % p;
        if c != 0 {
            let s = a.len() - 1 - dm;
            let f = c * lead_inv % p;
            for (i, &mi) in m.iter().enumerate() {
                a[s + i] = (a[s + i] + p * p - f * mi % p) % p;
            }
        }
        a.pop();
        while a.len() > dm && *a.last().unwrap() == 0 {
            a.pop();
        }
    }
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is a small prime; Fermat.
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// True when `m` (monic, constant-first) has no monic factor of degree
/// 1..=deg/2 over GF(p). Trial division; intended for tiny degrees only.
fn poly_irreducible(m: &[u64], p: u64) -> bool {
    let d = m.len() - 1;
    if d == 1 {
        return true;
    }
    for fd in 1..=d / 2 {
        let count = p.pow(fd as u32);
        for v in 0..count {
            let mut f: Vec<u64> = (0..fd).map(|i| v / p.pow(i as u32) % p).collect();
            f.push(1);
            if poly_rem(m.to_vec(), &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Field of order p^d from the built-in modulus table.
    pub fn new(p: u64, d: u32) -> Result<Field, Error> {
        if !is_prime(p) {
            return Err(Error::BadField(format!("{p} is not prime")));
        }
        let by_p = MODULI.iter().find(|&&(tp, _)| tp == p);
        let modulus: Vec<u64> = match by_p {
            Some(&(_, table)) if (1..=table.len() as u32).contains(&d) => {
                table[(d - 1) as usize].to_vec()
            }
            _ => {
                return Err(Error::BadField(format!(
                    "no built-in modulus for p={p}, d={d} (supported: p in {{2,3,5,7}}, d <= 6)"
                )))
            }
        };
        debug_assert!(poly_irreducible(&modulus, p));
        let pow: Vec<u64> = (0..=d).map(|i| p.pow(i)).collect();
        Ok(Field(Arc::new(FieldInner { p, d, modulus, pow })))
    }

    /// Field of order q, factoring q as a prime power.
    pub fn of_order(q: u64) -> Result<Field, Error> {
        if q < 2 {
            return Err(Error::BadField(format!("{q} is not a prime power")));
        }
        let mut p = 2;
        while p * p <= q {
            if q % p == 0 {
                break;
            }
            p += 1;
        }
        if q % p != 0 {
            return Field::new(q, 1); // q itself prime
        }
        let mut d = 0;
        let mut m = q;
        while m % p == 0 {
            m /= p;
            d += 1;
        }
        if m != 1 {
            return Err(Error::BadField(format!("{q} is not a prime power")));
        }
        Field::new(p, d)
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.d
    }

    pub fn order(&self) -> u64 {
        self.0.pow[self.0.d as usize]
    }

    /// Monic modulus, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), val: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: self.clone(), val: 1 }
    }

    /// Element with the given encoded value (base-p digits = coefficients).
    pub fn elem(&self, val: u64) -> Result<FieldElement, Error> {
        if val >= self.order() {
            return Err(Error::BadField(format!(
                "value {val} out of range for {self}"
            )));
        }
        Ok(FieldElement { field: self.clone(), val: val as u32 })
    }

    /// Image of an integer under Z -> GF(p) -> GF(p^d).
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.0.p as i64;
        let r = ((n % p) + p) % p;
        FieldElement { field: self.clone(), val: r as u32 }
    }

    // Raw-value arithmetic. Values encode polynomials base p; the degree-1
    // case is a plain residue and short-circuits everything polynomial.

    #[inline]
    pub(crate) fn radd(&self, a: u32, b: u32) -> u32 {
        let f = &*self.0;
        if f.p == 2 {
            return a ^ b;
        }
        if f.d == 1 {
            return ((a as u64 + b as u64) % f.p) as u32;
        }
        let mut r = 0u64;
        for i in 0..f.d as usize {
            let da = a as u64 / f.pow[i] % f.p;
            let db = b as u64 / f.pow[i] % f.p;
            r += (da + db) % f.p * f.pow[i];
        }
        r as u32
    }

    #[inline]
    pub(crate) fn rneg(&self, a: u32) -> u32 {
        let f = &*self.0;
        if f.p == 2 {
            return a;
        }
        if f.d == 1 {
            return ((f.p - a as u64) % f.p) as u32;
        }
        let mut r = 0u64;
        for i in 0..f.d as usize {
            let da = a as u64 / f.pow[i] % f.p;
            r += (f.p - da) % f.p * f.pow[i];
        }
        r as u32
    }

    #[inline]
    pub(crate) fn rsub(&self, a: u32, b: u32) -> u32 {
        self.radd(a, self.rneg(b))
    }

    pub(crate) fn rmul(&self, a: u32, b: u32) -> u32 {
        let f = &*self.0;
        if f.d == 1 {
            return (a as u64 * b as u64 % f.p) as u32;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let d = f.d as usize;
        let mut prod = [0u64; 11];
        for i in 0..d {
            let da = a as u64 / f.pow[i] % f.p;
            if da == 0 {
                continue;
            }
            for j in 0..d {
                let db = b as u64 / f.pow[j] % f.p;
                prod[i + j] += da * db;
            }
        }
        // reduce degree >= d terms with x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
        for k in (d..=2 * d - 2).rev() {
            let c = prod[k] % f.p;
            if c != 0 {
                prod[k] = 0;
                for i in 0..d {
                    let mi = f.modulus[i];
                    if mi != 0 {
                        prod[k - d + i] += (f.p - mi) * c;
                    }
                }
            }
        }
        let mut r = 0u64;
        for i in 0..d {
            r += prod[i] % f.p * f.pow[i];
        }
        r as u32
    }

    pub(crate) fn rpow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rmul(acc, base);
            }
            base = self.rmul(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn rinv(&self, a: u32) -> Result<u32, Error> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.rpow(a, self.order() - 2))
    }

    pub(crate) fn is_gf2(&self) -> bool {
        self.0.p == 2 && self.0.d == 1
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(|v| FieldElement { field: self.clone(), val: v as u32 })
    }

    /// A fixed generator of the multiplicative group: the least encoded value
    /// whose order is q - 1.
    pub fn primitive_element(&self) -> FieldElement {
        let q = self.order();
        'outer: for v in 1..q {
            let v = v as u32;
            let mut ord = 1u64;
            let mut x = v;
            while x != 1 {
                x = self.rmul(x, v);
                ord += 1;
                if ord > q {
                    break 'outer;
                }
            }
            if ord == q - 1 {
                return FieldElement { field: self.clone(), val: v };
            }
        }
        // q = 2: the unit group is trivial
        self.one()
    }

    /// Images of 1, x, x^2, .., x^(d-1) under a field embedding into `big`,
    /// where x is the residue of the small modulus. Requires degree(small)
    /// dividing degree(big) and equal characteristic. The root is the least
    /// one in encoding order, so the embedding is reproducible.
    pub fn embedding(&self, big: &Field) -> Result<Vec<u32>, Error> {
        if self.characteristic() != big.characteristic()
            || big.degree() % self.degree() != 0
        {
            return Err(Error::BadField(format!(
                "no embedding {self} -> {big}"
            )));
        }
        if self == big {
            let d = self.degree();
            let mut powers = vec![1u32];
            let x = if d == 1 { 0 } else { self.0.p as u32 }; // encoding of x
            for _ in 1..d {
                powers.push(big.rmul(*powers.last().unwrap(), x));
            }
            return Ok(powers);
        }
        let root = (0..big.order())
            .map(|v| v as u32)
            .find(|&r| {
                // evaluate the small modulus at r inside big
                let mut acc = 0u32;
                let mut pw = 1u32;
                for &c in self.modulus() {
                    let cb = big.from_int(c as i64).val;
                    acc = big.radd(acc, big.rmul(cb, pw));
                    pw = big.rmul(pw, r);
                }
                acc == 0
            })
            .ok_or_else(|| Error::BadField(format!("no root of {self} modulus in {big}")))?;
        let mut powers = vec![1u32];
        for _ in 1..self.degree() {
            powers.push(big.rmul(*powers.last().unwrap(), root));
        }
        Ok(powers)
    }

    /// Map an element of this field into `big` along [`Field::embedding`].
    pub(crate) fn map_raw(&self, powers: &[u32], big: &Field, val: u32) -> u32 {
        let f = &*self.0;
        if f.d == 1 {
            return big.from_int(val as i64).val;
        }
        let mut acc = 0u32;
        for (i, &pw) in powers.iter().enumerate() {
            let c = val as u64 / f.pow[i] % f.p;
            acc = big.radd(acc, big.rmul(big.from_int(c as i64).val, pw));
        }
        acc
    }
}

/// An element of a [`Field`]. Arithmetic between elements of distinct fields
/// is an error, not a coercion.
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: Field,
    val: u32,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.val == other.val
    }
}
impl Eq for FieldElement {}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Encoded value (base-p digits are the polynomial coefficients).
    pub fn value(&self) -> u64 {
        self.val as u64
    }

    pub fn is_zero(&self) -> bool {
        self.val == 0
    }

    fn check(&self, other: &FieldElement) -> Result<(), Error> {
        if self.field != other.field {
            return Err(Error::OwnerMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, Error> {
        self.check(other)?;
        Ok(FieldElement { field: self.field.clone(), val: self.field.radd(self.val, other.val) })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, Error> {
        self.check(other)?;
        Ok(FieldElement { field: self.field.clone(), val: self.field.rsub(self.val, other.val) })
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, Error> {
        self.check(other)?;
        Ok(FieldElement { field: self.field.clone(), val: self.field.rmul(self.val, other.val) })
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement { field: self.field.clone(), val: self.field.rneg(self.val) }
    }

    pub fn inv(&self) -> Result<FieldElement, Error> {
        Ok(FieldElement { field: self.field.clone(), val: self.field.rinv(self.val)? })
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement { field: self.field.clone(), val: self.field.rpow(self.val, e) }
    }

    /// Multiplicative order; errors on zero.
    pub fn mult_order(&self) -> Result<u64, Error> {
        if self.val == 0 {
            return Err(Error::ZeroInverse);
        }
        let mut ord = 1u64;
        let mut x = self.val;
        while x != 1 {
            x = self.field.rmul(x, self.val);
            ord += 1;
        }
        Ok(ord)
    }
}

/// Order of q in (Z/l)^*, the parameter usually written e. Errors when l
/// divides q (defining characteristic) or l < 2.
pub fn multiplicative_order(q: u64, l: u64) -> Result<u32, Error> {
    if l < 2 {
        return Err(Error::BadField(format!("modulus {l} out of range")));
    }
    if q % l == 0 {
        return Err(Error::DefiningCharacteristic { q, l });
    }
    let mut e = 1u32;
    let mut x = q % l;
    while x != 1 {
        x = x * (q % l) % l;
        e += 1;
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_entries_are_minimal_irreducible() {
        for &(p, table) in MODULI {
            for (di, &m) in table.iter().enumerate() {
                let d = di + 1;
                assert!(poly_irreducible(m, p), "p={p} d={d}");
                if d > 1 {
                    // nothing smaller in encoding order is irreducible
                    let enc = |f: &[u64]| -> u64 {
                        f.iter().rev().fold(0, |a, &c| a * p + c)
                    };
                    let val = enc(m);
                    for v in 0..val {
                        let mut f: Vec<u64> =
                            (0..d).map(|i| v / p.pow(i as u32) % p).collect();
                        f.push(1);
                        if enc(&f) >= val {
                            continue;
                        }
                        assert!(!poly_irreducible(&f, p), "p={p} d={d} v={v}");
                    }
                }
            }
        }
    }

    #[test]
    fn axioms_exhaustive_small_orders() {
        // every built-in field of order <= 64: associativity, distributivity,
        // commutativity, inverses
        let mut fields = vec![];
        for &(p, table) in MODULI {
            for d in 1..=table.len() as u32 {
                if p.pow(d) <= 64 {
                    fields.push(Field::new(p, d).unwrap());
                }
            }
        }
        assert!(fields.len() >= 10);
        for f in fields {
            let q = f.order() as u32;
            for a in 0..q {
                assert_eq!(f.radd(a, 0), a);
                assert_eq!(f.rmul(a, 1), a);
                assert_eq!(f.radd(a, f.rneg(a)), 0);
                if a != 0 {
                    let ai = f.rinv(a).unwrap();
                    assert_eq!(f.rmul(a, ai), 1, "{f} a={a}");
                }
                for b in 0..q {
                    assert_eq!(f.radd(a, b), f.radd(b, a));
                    assert_eq!(f.rmul(a, b), f.rmul(b, a));
                    for c in 0..q {
                        assert_eq!(f.radd(f.radd(a, b), c), f.radd(a, f.radd(b, c)));
                        assert_eq!(f.rmul(f.rmul(a, b), c), f.rmul(a, f.rmul(b, c)));
                        assert_eq!(
                            f.rmul(a, f.radd(b, c)),
                            f.radd(f.rmul(a, b), f.rmul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_element_generates() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 25, 27, 49] {
            let f = Field::of_order(q).unwrap();
            let g = f.primitive_element();
            if q > 2 {
                assert_eq!(g.mult_order().unwrap(), q - 1, "q={q}");
            }
        }
    }

    #[test]
    fn owner_mismatch_rejected() {
        let f2 = Field::new(2, 1).unwrap();
        let f3 = Field::new(3, 1).unwrap();
        let a = f2.one();
        let b = f3.one();
        assert!(matches!(a.add(&b), Err(Error::OwnerMismatch)));
        // structurally equal specs define identical arithmetic
        let f2b = Field::new(2, 1).unwrap();
        assert_eq!(a.add(&f2b.one()).unwrap(), f2.zero());
    }

    #[test]
    fn element_encoding_round_trip() {
        let f = Field::new(3, 2).unwrap(); // GF(9), modulus x^2 + 1
        // (x) * (x) = -1 = 2
        let x = f.elem(3).unwrap();
        assert_eq!(x.mul(&x).unwrap(), f.from_int(2));
        assert!(f.elem(9).is_err());
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(multiplicative_order(2, 3).unwrap(), 2);
        assert_eq!(multiplicative_order(3, 2).unwrap(), 1);
        assert_eq!(multiplicative_order(4, 5).unwrap(), 2);
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(3, 5).unwrap(), 4);
        assert!(matches!(
            multiplicative_order(4, 2),
            Err(Error::DefiningCharacteristic { .. })
        ));
    }

    #[test]
    fn embeddings_preserve_arithmetic() {
        let small = Field::new(2, 1).unwrap();
        let big = Field::new(2, 2).unwrap();
        let powers = small.embedding(&big).unwrap();
        assert_eq!(small.map_raw(&powers, &big, 1), 1);

        let f3 = Field::new(3, 1).unwrap();
        let f9 = Field::new(3, 2).unwrap();
        let pw = f3.embedding(&f9).unwrap();
        for a in 0..3u32 {
            for b in 0..3u32 {
                let im = f3.map_raw(&pw, &f9, f3.rmul(a, b));
                let pm = f9.rmul(f3.map_raw(&pw, &f9, a), f3.map_raw(&pw, &f9, b));
                assert_eq!(im, pm);
            }
        }

        // GF(4) inside GF(64): x^2+x+1 must have a root
        let f4 = Field::new(2, 2).unwrap();
        let f64 = Field::new(2, 6).unwrap();
        let pw = f4.embedding(&f64).unwrap();
        for a in 0..4u32 {
            for b in 0..4u32 {
                let im = f4.map_raw(&pw, &f64, f4.rmul(a, b));
                let pm = f64.rmul(f4.map_raw(&pw, &f64, a), f4.map_raw(&pw, &f64, b));
                assert_eq!(im, pm);
            }
        }
        assert!(f4.embedding(&Field::new(2, 3).unwrap()).is_err());
    }
}
