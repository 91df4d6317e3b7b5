//! The combinatorial classification: cuspidal shapes for general linear
//! groups, the smallest split Levi attached to a shape, relative Weyl
//! groups, and the primitivity decision — for a single group and for a
//! product of linear/unitary Jordan factors.
//!
//! Everything in this module is exact integer combinatorics; the
//! group-theoretic meaning is verified independently by the oracle in
//! [`crate::grouprep`].

use serde::Serialize;

use crate::coxeter::{CoxeterType, Kind};
use crate::error::Error;
use crate::field::multiplicative_order;

/// The families of classical groups the decision covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Gl,
    Gu,
    Sp,
    CSp,
    So,
}

impl GroupKind {
    pub fn parse(s: &str) -> Result<GroupKind, Error> {
        match s {
            "GL" => Ok(GroupKind::Gl),
            "GU" => Ok(GroupKind::Gu),
            "Sp" => Ok(GroupKind::Sp),
            "CSp" => Ok(GroupKind::CSp),
            "SO" => Ok(GroupKind::So),
            other => Err(Error::BadInput(format!(
                "unknown group kind {other:?}; expected GL, GU, Sp, CSp, or SO"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GroupKind::Gl => "GL",
            GroupKind::Gu => "GU",
            GroupKind::Sp => "Sp",
            GroupKind::CSp => "CSp",
            GroupKind::So => "SO",
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime p with q = p^k, when q is a prime power.
pub fn prime_power_base(q: u64) -> Result<u64, Error> {
    if q < 2 {
        return Err(Error::BadInput(format!("{q} is not a prime power")));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return Ok(q); // q itself is prime
    }
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
    }
    if rest == 1 {
        Ok(p)
    } else {
        Err(Error::BadInput(format!("{q} is not a prime power")))
    }
}

/// One group with its modular parameters, validated on construction.
#[derive(Clone, Debug)]
pub struct GroupCase {
    pub kind: GroupKind,
    pub n: usize,
    pub q: u64,
    pub l: u64,
}

impl GroupCase {
    pub fn new(kind: GroupKind, n: usize, q: u64, l: u64) -> Result<GroupCase, Error> {
        if n == 0 {
            return Err(Error::BadInput("the rank n must be positive".into()));
        }
        let p = prime_power_base(q)?;
        if !is_prime(l) {
            return Err(Error::BadInput(format!("l = {l} is not prime")));
        }
        if l == p {
            return Err(Error::DefiningCharacteristic { q, l });
        }
        match kind {
            GroupKind::Sp => {
                if n % 2 != 0 || q % 2 != 0 {
                    return Err(Error::BadInput(
                        "Sp case needs even n and even q".into(),
                    ));
                }
            }
            GroupKind::CSp => {
                if n % 2 != 0 || q % 2 == 0 {
                    return Err(Error::BadInput(
                        "CSp case needs even n and odd q".into(),
                    ));
                }
            }
            GroupKind::So => {
                if n % 2 == 0 || q % 2 == 0 {
                    return Err(Error::BadInput(
                        "SO case needs odd n and odd q".into(),
                    ));
                }
            }
            GroupKind::Gl | GroupKind::Gu => {}
        }
        Ok(GroupCase { kind, n, q, l })
    }

    /// Multiplicative order of q modulo l.
    pub fn e(&self) -> Result<u32, Error> {
        multiplicative_order(self.q, self.l)
    }
}

/// The shape of a cuspidal pair for a general linear group:
/// n = m_{-1} + e · Σ_i m_i · l^i, with one block per exponent i.
/// When e = 1, exponent 0 is folded into m_{-1} and is not a legal block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspidalShapeGL {
    e: u32,
    l: u64,
    m_minus1: usize,
    /// (exponent i, multiplicity m_i), strictly increasing in i, m_i >= 1
    blocks: Vec<(u32, usize)>,
}

fn block_width(e: u32, l: u64, i: u32) -> Result<usize, Error> {
    let w = (e as u64)
        .checked_mul(l.checked_pow(i).ok_or_else(|| Error::TooLarge("l^i overflows".into()))?)
        .ok_or_else(|| Error::TooLarge("e*l^i overflows".into()))?;
    usize::try_from(w).map_err(|_| Error::TooLarge("block width exceeds usize".into()))
}

impl CuspidalShapeGL {
    pub fn new(
        e: u32,
        l: u64,
        m_minus1: usize,
        blocks: Vec<(u32, usize)>,
    ) -> Result<CuspidalShapeGL, Error> {
        if e == 0 {
            return Err(Error::Shape("e must be positive".into()));
        }
        if l < 2 {
            return Err(Error::Shape("l must be at least 2".into()));
        }
        for w in blocks.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::Shape("block exponents must strictly increase".into()));
            }
        }
        for &(i, m) in &blocks {
            if m == 0 {
                return Err(Error::Shape("block multiplicities must be positive".into()));
            }
            if e == 1 && i == 0 {
                return Err(Error::Shape(
                    "exponent 0 at e = 1 folds into the m_{-1} part".into(),
                ));
            }
        }
        let shape = CuspidalShapeGL { e, l, m_minus1, blocks };
        if shape.n()? == 0 {
            return Err(Error::Shape("shape describes the empty group".into()));
        }
        Ok(shape)
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn m_minus1(&self) -> usize {
        self.m_minus1
    }

    pub fn blocks(&self) -> &[(u32, usize)] {
        &self.blocks
    }

    /// Total rank described by the shape.
    pub fn n(&self) -> Result<usize, Error> {
        let mut n = self.m_minus1;
        for &(i, m) in &self.blocks {
            let w = block_width(self.e, self.l, i)?;
            n = w
                .checked_mul(m)
                .and_then(|t| n.checked_add(t))
                .ok_or_else(|| Error::TooLarge("shape rank overflows".into()))?;
        }
        Ok(n)
    }

    /// A shape is pure when only one kind of part appears: either only
    /// the m_{-1} part, or a single block with m_{-1} = 0.
    pub fn is_pure(&self) -> bool {
        let terms = usize::from(self.m_minus1 > 0) + self.blocks.len();
        terms <= 1
    }

    /// Shape text: `1^INT ( "+" "(" E "*" L "^" I ")" "^" M )*`.
    pub fn render(&self) -> String {
        let mut s = format!("1^{}", self.m_minus1);
        for &(i, m) in &self.blocks {
            s.push_str(&format!("+({}*{}^{})^{}", self.e, self.l, i, m));
        }
        s
    }

    /// Parse the shape grammar, checking every block mentions exactly the
    /// expected e and l.
    pub fn parse(text: &str, e: u32, l: u64) -> Result<CuspidalShapeGL, Error> {
        let bad = |msg: &str| Error::Shape(format!("cannot parse shape {text:?}: {msg}"));
        let rest = text
            .strip_prefix("1^")
            .ok_or_else(|| bad("expected leading \"1^\""))?;
        let head_len = rest.chars().take_while(|c| c.is_ascii_digit()).count();
        if head_len == 0 {
            return Err(bad("expected a multiplicity after \"1^\""));
        }
        let m_minus1: usize =
            rest[..head_len].parse().map_err(|_| bad("m_{-1} is not a number"))?;
        let mut tail = &rest[head_len..];
        let mut blocks = Vec::new();
        while !tail.is_empty() {
            let body = tail.strip_prefix("+(").ok_or_else(|| bad("expected \"+(\""))?;
            let close = body.find(')').ok_or_else(|| bad("missing \")\""))?;
            let inner = &body[..close];
            let after = &body[close + 1..];
            let (e_txt, rest_in) =
                inner.split_once('*').ok_or_else(|| bad("block needs \"e*l^i\""))?;
            let (l_txt, i_txt) =
                rest_in.split_once('^').ok_or_else(|| bad("block needs \"l^i\""))?;
            let be: u32 = e_txt.trim().parse().map_err(|_| bad("e is not a number"))?;
            let bl: u64 = l_txt.trim().parse().map_err(|_| bad("l is not a number"))?;
            let bi: u32 = i_txt.trim().parse().map_err(|_| bad("i is not a number"))?;
            if be != e || bl != l {
                return Err(Error::Shape(format!(
                    "shape block ({be}*{bl}^..) does not match e = {e}, l = {l}"
                )));
            }
            let mult_txt = after
                .strip_prefix('^')
                .ok_or_else(|| bad("expected \"^\" after block"))?;
            let mult_len = mult_txt.chars().take_while(|c| c.is_ascii_digit()).count();
            if mult_len == 0 {
                return Err(bad("expected a block multiplicity"));
            }
            let m: usize =
                mult_txt[..mult_len].parse().map_err(|_| bad("multiplicity is not a number"))?;
            blocks.push((bi, m));
            tail = &mult_txt[mult_len..];
        }
        CuspidalShapeGL::new(e, l, m_minus1, blocks)
    }
}

impl std::fmt::Display for CuspidalShapeGL {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// All canonical shapes with total rank n at the given (e, l), sorted
/// with the all-ones shape first (descending m_{-1}, then by block list).
pub fn enumerate_cuspidal_shapes(
    n: usize,
    e: u32,
    l: u64,
) -> Result<Vec<CuspidalShapeGL>, Error> {
    if n == 0 || e == 0 || l < 2 {
        return Err(Error::BadInput(
            "shape enumeration needs n >= 1, e >= 1, l >= 2".into(),
        ));
    }
    let first_exp = u32::from(e == 1);
    let mut widths = Vec::new(); // (i, e*l^i)
    let mut i = first_exp;
    loop {
        let w = match block_width(e, l, i) {
            Ok(w) => w,
            Err(_) => break,
        };
        if w > n {
            break;
        }
        widths.push((i, w));
        i += 1;
    }
    let mut out = Vec::new();
    let mut blocks: Vec<(u32, usize)> = Vec::new();
    fn rec(
        widths: &[(u32, usize)],
        k: usize,
        remaining: usize,
        e: u32,
        l: u64,
        blocks: &mut Vec<(u32, usize)>,
        out: &mut Vec<CuspidalShapeGL>,
    ) {
        if k == widths.len() {
            let shape = CuspidalShapeGL {
                e,
                l,
                m_minus1: remaining,
                blocks: blocks.clone(),
            };
            out.push(shape);
            return;
        }
        let (i, w) = widths[k];
        let mut used = 0;
        let mut m = 0;
        while used <= remaining {
            if m > 0 {
                blocks.push((i, m));
            }
            rec(widths, k + 1, remaining - used, e, l, blocks, out);
            if m > 0 {
                blocks.pop();
            }
            m += 1;
            used = m * w;
        }
    }
    rec(&widths, 0, n, e, l, &mut blocks, &mut out);
    out.sort_by(|a, b| {
        b.m_minus1
            .cmp(&a.m_minus1)
            .then_with(|| a.blocks.cmp(&b.blocks))
    });
    Ok(out)
}

/// The smallest split Levi the series is induced from: one part for the
/// m_{-1} term and one part e·m_i·l^i per block, sorted ascending.
pub fn min_split_levi(shape: &CuspidalShapeGL) -> Result<Vec<usize>, Error> {
    let mut parts = Vec::new();
    if shape.m_minus1 > 0 {
        parts.push(shape.m_minus1);
    }
    for &(i, m) in &shape.blocks {
        let w = block_width(shape.e, shape.l, i)?;
        parts.push(w * m);
    }
    parts.sort_unstable();
    Ok(parts)
}

/// The relative Weyl group of the series: a product of symmetric groups,
/// one type-A factor of rank m-1 per part kind with multiplicity m.
pub fn relative_weyl_group(shape: &CuspidalShapeGL) -> CoxeterType {
    let mut factors = Vec::new();
    if shape.m_minus1 > 0 {
        factors.push((Kind::A, shape.m_minus1 - 1));
    }
    for &(_i, m) in &shape.blocks {
        factors.push((Kind::A, m - 1));
    }
    CoxeterType::new(factors)
}

/// Whether a proper split Levi with the normalizer-equality property
/// exists: yes exactly when the smallest split Levi is proper, and then
/// that composition is the witness. Independent of [`CuspidalShapeGL::is_pure`]:
/// this goes through the Levi construction, not the term count.
pub fn normalizer_equality_exists(shape: &CuspidalShapeGL) -> Result<Option<Vec<usize>>, Error> {
    let levi = min_split_levi(shape)?;
    if levi.len() == 1 {
        Ok(None)
    } else {
        Ok(Some(levi))
    }
}

/// Final verdict record, serialized as
/// {case, n, q, l, e, shape, verdict, witness, clause}.
#[derive(Clone, Debug, Serialize)]
pub struct PrimitivityVerdict {
    pub case: String,
    pub n: usize,
    pub q: u64,
    pub l: u64,
    pub e: u32,
    pub shape: Option<String>,
    pub verdict: String,
    pub witness: Option<Vec<usize>>,
    pub clause: String,
}

/// Decide primitivity of the simple modules with the given cuspidal
/// support shape (required exactly for GL; the other kinds are
/// unconditionally primitive).
pub fn is_primitive_unipotent(
    case: &GroupCase,
    shape: Option<&CuspidalShapeGL>,
) -> Result<PrimitivityVerdict, Error> {
    let e = case.e()?;
    match case.kind {
        GroupKind::Gl => {
            let shape = shape.ok_or_else(|| {
                Error::BadInput("the GL case needs a cuspidal shape".into())
            })?;
            if shape.e() != e || shape.l() != case.l {
                return Err(Error::Shape(format!(
                    "shape is at (e = {}, l = {}), case has (e = {e}, l = {})",
                    shape.e(),
                    shape.l(),
                    case.l
                )));
            }
            if shape.n()? != case.n {
                return Err(Error::Shape(format!(
                    "shape has rank {}, case has n = {}",
                    shape.n()?,
                    case.n
                )));
            }
            if shape.is_pure() {
                Ok(PrimitivityVerdict {
                    case: case.kind.name().to_string(),
                    n: case.n,
                    q: case.q,
                    l: case.l,
                    e,
                    shape: Some(shape.render()),
                    verdict: "Primitive".into(),
                    witness: None,
                    clause: "pure-shape".into(),
                })
            } else {
                Ok(PrimitivityVerdict {
                    case: case.kind.name().to_string(),
                    n: case.n,
                    q: case.q,
                    l: case.l,
                    e,
                    shape: Some(shape.render()),
                    verdict: "Imprimitive".into(),
                    witness: Some(min_split_levi(shape)?),
                    clause: "mixed-shape".into(),
                })
            }
        }
        _ => {
            if shape.is_some() {
                return Err(Error::BadInput(format!(
                    "kind {} takes no shape",
                    case.kind.name()
                )));
            }
            Ok(PrimitivityVerdict {
                case: case.kind.name().to_string(),
                n: case.n,
                q: case.q,
                l: case.l,
                e,
                shape: None,
                verdict: "Primitive".into(),
                witness: None,
                clause: "non-linear-kind".into(),
            })
        }
    }
}

/// One factor of a Lusztig-series decomposition: a general linear or
/// unitary group over an extension field.
#[derive(Clone, Debug)]
pub struct JordanFactor {
    pub kind: JordanFactorKind,
    pub n: usize,
    pub q: u64,
    /// Required for linear factors; unitary factors carry no shape.
    pub shape: Option<CuspidalShapeGL>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JordanFactorKind {
    Linear,
    Unitary,
}

/// Factor-wise decision over a product of linear/unitary factors:
/// imprimitive exactly when some linear factor has a mixed shape. The
/// witness concatenates, per factor, that factor's smallest split Levi
/// (the full factor when it contributes nothing).
pub fn is_primitive_series(
    factors: &[JordanFactor],
    l: u64,
) -> Result<PrimitivityVerdict, Error> {
    if factors.is_empty() {
        return Err(Error::BadInput("a Jordan factor list cannot be empty".into()));
    }
    if !is_prime(l) {
        return Err(Error::BadInput(format!("l = {l} is not prime")));
    }
    let mut witness = Vec::new();
    let mut imprimitive = false;
    let mut total_n = 0usize;
    for f in factors {
        if f.n == 0 {
            return Err(Error::BadInput("factor rank must be positive".into()));
        }
        let p = prime_power_base(f.q)?;
        if p == l {
            return Err(Error::DefiningCharacteristic { q: f.q, l });
        }
        total_n += f.n;
        match f.kind {
            JordanFactorKind::Unitary => {
                if f.shape.is_some() {
                    return Err(Error::BadInput("unitary factors take no shape".into()));
                }
                witness.push(vec![f.n]);
            }
            JordanFactorKind::Linear => {
                let shape = f.shape.as_ref().ok_or_else(|| {
                    Error::BadInput("linear factors need a cuspidal shape".into())
                })?;
                let e = multiplicative_order(f.q, l)?;
                if shape.e() != e || shape.l() != l {
                    return Err(Error::Shape(format!(
                        "factor shape is at (e = {}, l = {}), factor has (e = {e}, l = {l})",
                        shape.e(),
                        shape.l()
                    )));
                }
                if shape.n()? != f.n {
                    return Err(Error::Shape(format!(
                        "factor shape has rank {}, factor has n = {}",
                        shape.n()?,
                        f.n
                    )));
                }
                if shape.is_pure() {
                    witness.push(vec![f.n]);
                } else {
                    imprimitive = true;
                    witness.push(min_split_levi(shape)?);
                }
            }
        }
    }
    Ok(PrimitivityVerdict {
        case: "Series".into(),
        n: total_n,
        q: 0,
        l,
        e: 0,
        shape: None,
        verdict: if imprimitive { "Imprimitive" } else { "Primitive" }.into(),
        witness: if imprimitive {
            Some(witness.into_iter().flatten().collect())
        } else {
            None
        },
        clause: "factorwise".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(e: u32, l: u64, m: usize, blocks: &[(u32, usize)]) -> CuspidalShapeGL {
        CuspidalShapeGL::new(e, l, m, blocks.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_matches_known_counts_and_order() {
        let s = enumerate_cuspidal_shapes(2, 2, 3).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s[0], shape(2, 3, 2, &[]));
        assert_eq!(s[1], shape(2, 3, 0, &[(0, 1)]));

        let s = enumerate_cuspidal_shapes(3, 1, 2).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s[0], shape(1, 2, 3, &[]));
        assert_eq!(s[1], shape(1, 2, 1, &[(1, 1)]));

        let s = enumerate_cuspidal_shapes(4, 1, 2).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s[0], shape(1, 2, 4, &[]));
        assert_eq!(s[1], shape(1, 2, 2, &[(1, 1)]));
        assert_eq!(s[2], shape(1, 2, 0, &[(1, 2)]));
        assert_eq!(s[3], shape(1, 2, 0, &[(2, 1)]));
    }

    #[test]
    fn enumeration_agrees_with_direct_solution_count() {
        for (n, e, l) in [(6, 1, 2), (7, 2, 3), (9, 1, 3), (10, 3, 2), (12, 4, 5)] {
            let shapes = enumerate_cuspidal_shapes(n, e, l).unwrap();
            // independent count: assignments of multiplicities to widths
            let first = usize::from(e == 1);
            let widths: Vec<usize> = (first..)
                .map(|i| e as usize * (l as usize).pow(i as u32))
                .take_while(|&w| w <= n)
                .collect();
            let mut count = 0u64;
            let mut stack = vec![(0usize, n)];
            while let Some((k, rem)) = stack.pop() {
                if k == widths.len() {
                    count += 1; // remainder becomes m_{-1}
                    continue;
                }
                let mut used = 0;
                while used <= rem {
                    stack.push((k + 1, rem - used));
                    used += widths[k];
                }
            }
            assert_eq!(shapes.len() as u64, count, "count at (n={n}, e={e}, l={l})");
            // all distinct and all of the right rank
            for s in &shapes {
                assert_eq!(s.n().unwrap(), n);
            }
            for a in 0..shapes.len() {
                for b in a + 1..shapes.len() {
                    assert_ne!(shapes[a], shapes[b]);
                }
            }
        }
    }

    #[test]
    fn rendering_and_parsing_round_trip() {
        assert_eq!(shape(1, 2, 1, &[(1, 1)]).render(), "1^1+(1*2^1)^1");
        assert_eq!(shape(1, 2, 4, &[]).render(), "1^4");
        assert_eq!(shape(2, 3, 0, &[(0, 1)]).render(), "1^0+(2*3^0)^1");
        for (n, e, l) in [(6, 1, 2), (7, 2, 3), (5, 2, 5)] {
            for s in enumerate_cuspidal_shapes(n, e, l).unwrap() {
                let back = CuspidalShapeGL::parse(&s.render(), e, l).unwrap();
                assert_eq!(back, s);
            }
        }
    }

    #[test]
    fn parse_rejects_malformed_and_inconsistent_text() {
        assert!(CuspidalShapeGL::parse("2^1", 1, 2).is_err());
        assert!(CuspidalShapeGL::parse("1^", 1, 2).is_err());
        assert!(CuspidalShapeGL::parse("1^1+(2*2^1)^1", 1, 2).is_err()); // wrong e
        assert!(CuspidalShapeGL::parse("1^1+(1*3^1)^1", 1, 2).is_err()); // wrong l
        assert!(CuspidalShapeGL::parse("1^1+(1*2^0)^1", 1, 2).is_err()); // folded exponent
        assert!(CuspidalShapeGL::parse("1^0+(2*3^0)^1+(2*3^0)^1", 2, 3).is_err()); // repeat i
        assert!(CuspidalShapeGL::parse("1^1+garbage", 1, 2).is_err());
        assert!(CuspidalShapeGL::parse("1^0", 1, 2).is_err()); // empty group
    }

    #[test]
    fn smallest_levi_examples() {
        assert_eq!(min_split_levi(&shape(1, 2, 1, &[(1, 1)])).unwrap(), vec![1, 2]);
        assert_eq!(min_split_levi(&shape(1, 2, 5, &[])).unwrap(), vec![5]);
        assert_eq!(min_split_levi(&shape(1, 2, 0, &[(1, 2)])).unwrap(), vec![4]);
        assert_eq!(
            min_split_levi(&shape(2, 3, 1, &[(0, 1), (1, 1)])).unwrap(),
            vec![1, 2, 6]
        );
    }

    #[test]
    fn relative_weyl_groups() {
        assert_eq!(relative_weyl_group(&shape(1, 2, 4, &[])).order(), 24); // S_4
        assert_eq!(relative_weyl_group(&shape(1, 2, 2, &[(1, 1)])).order(), 2); // S_2 x S_1
        assert_eq!(relative_weyl_group(&shape(1, 2, 0, &[(1, 2)])).order(), 2); // S_2
        assert_eq!(relative_weyl_group(&shape(1, 2, 1, &[(1, 1)])).order(), 1);
    }

    #[test]
    fn purity_matches_normalizer_equality_on_a_sweep() {
        for l in [2u64, 3] {
            for e in 1..=3u32 {
                for n in 1..=8usize {
                    for s in enumerate_cuspidal_shapes(n, e, l).unwrap() {
                        let primitive = s.is_pure();
                        let witness = normalizer_equality_exists(&s).unwrap();
                        assert_eq!(primitive, witness.is_none(), "shape {s}");
                        if let Some(w) = witness {
                            assert_eq!(w.iter().sum::<usize>(), n);
                            assert!(w.len() >= 2);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unipotent_verdicts() {
        let case = GroupCase::new(GroupKind::Gl, 3, 3, 2).unwrap();
        let pure = shape(1, 2, 3, &[]);
        let v = is_primitive_unipotent(&case, Some(&pure)).unwrap();
        assert_eq!(v.verdict, "Primitive");
        assert_eq!(v.clause, "pure-shape");
        assert!(v.witness.is_none());

        let mixed = shape(1, 2, 1, &[(1, 1)]);
        let v = is_primitive_unipotent(&case, Some(&mixed)).unwrap();
        assert_eq!(v.verdict, "Imprimitive");
        assert_eq!(v.witness, Some(vec![1, 2]));
        assert_eq!(v.clause, "mixed-shape");
        assert_eq!(v.shape.as_deref(), Some("1^1+(1*2^1)^1"));

        let sp = GroupCase::new(GroupKind::Sp, 4, 2, 3).unwrap();
        let v = is_primitive_unipotent(&sp, None).unwrap();
        assert_eq!(v.verdict, "Primitive");
        assert_eq!(v.clause, "non-linear-kind");

        assert!(is_primitive_unipotent(&case, None).is_err()); // GL needs a shape
    }

    #[test]
    fn case_validation() {
        assert!(GroupCase::new(GroupKind::Gl, 2, 6, 5).is_err()); // 6 not a prime power
        assert!(GroupCase::new(GroupKind::Gl, 2, 5, 4).is_err()); // 4 not prime
        assert!(matches!(
            GroupCase::new(GroupKind::Gl, 2, 4, 2),
            Err(Error::DefiningCharacteristic { q: 4, l: 2 })
        ));
        assert!(GroupCase::new(GroupKind::Gl, 2, 9, 2).is_ok());
        assert!(GroupCase::new(GroupKind::Sp, 3, 2, 3).is_err()); // odd n
        assert!(GroupCase::new(GroupKind::Sp, 4, 3, 2).is_err()); // odd q
        assert!(GroupCase::new(GroupKind::CSp, 4, 3, 2).is_ok());
        assert!(GroupCase::new(GroupKind::So, 5, 3, 2).is_ok());
        assert!(GroupCase::new(GroupKind::So, 5, 2, 3).is_err()); // even q
        assert_eq!(GroupCase::new(GroupKind::Gl, 2, 3, 2).unwrap().e().unwrap(), 1);
        assert_eq!(GroupCase::new(GroupKind::Gl, 2, 2, 3).unwrap().e().unwrap(), 2);
    }

    #[test]
    fn series_verdicts_are_factorwise() {
        let mixed = JordanFactor {
            kind: JordanFactorKind::Linear,
            n: 3,
            q: 3,
            shape: Some(shape(1, 2, 1, &[(1, 1)])),
        };
        let unitary = JordanFactor { kind: JordanFactorKind::Unitary, n: 2, q: 3, shape: None };
        let pure = JordanFactor {
            kind: JordanFactorKind::Linear,
            n: 2,
            q: 3,
            shape: Some(shape(1, 2, 2, &[])),
        };

        let v = is_primitive_series(&[mixed.clone()], 2).unwrap();
        assert_eq!(v.verdict, "Imprimitive");
        assert_eq!(v.witness, Some(vec![1, 2]));
        assert_eq!(v.clause, "factorwise");

        let v = is_primitive_series(&[unitary.clone(), pure.clone()], 2).unwrap();
        assert_eq!(v.verdict, "Primitive");
        assert!(v.witness.is_none());

        let v = is_primitive_series(&[unitary.clone(), mixed.clone(), pure.clone()], 2).unwrap();
        assert_eq!(v.verdict, "Imprimitive");
        assert_eq!(v.witness, Some(vec![2, 1, 2, 2]));

        // verdict invariant under factor reordering
        let v2 = is_primitive_series(&[pure, mixed, unitary], 2).unwrap();
        assert_eq!(v2.verdict, "Imprimitive");

        assert!(is_primitive_series(&[], 2).is_err());
    }
}
