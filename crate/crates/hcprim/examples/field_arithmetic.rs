//! Exact arithmetic in GF(p^d) and the linear algebra built on it: element
//! orders, subfield embeddings, and matrix inversion without rounding.

use hcprim::error::Error;
use hcprim::field::{multiplicative_order, Field};
use hcprim::matrix::Matrix;

fn main() -> Result<(), Error> {
    // GF(9) as a degree-2 extension of GF(3).
    let f9 = Field::new(3, 2)?;
    println!("field {f9}: characteristic {}, order {}", f9.characteristic(), f9.order());

    let g = f9.primitive_element();
    println!("primitive element has multiplicative order {}", g.mult_order()?);
    assert_eq!(g.mult_order()?, 8);

    // Every nonzero element is a power of it.
    let mut seen = std::collections::BTreeSet::new();
    let mut acc = f9.one();
    for _ in 0..8 {
        acc = acc.mul(&g)?;
        seen.insert(acc.value());
    }
    assert_eq!(seen.len(), 8);
    println!("its 8 powers cover every nonzero element");

    // a * a^-1 = 1 for every nonzero a.
    for a in f9.elements().filter(|a| !a.is_zero()) {
        assert_eq!(a.mul(&a.inv()?)?.value(), f9.one().value());
    }
    println!("inverses verified for all {} nonzero elements", f9.order() - 1);

    // Subfields embed along a root of the small modulus: GF(9) inside
    // GF(81), with the images of its power basis 1, x.
    let f81 = Field::new(3, 4)?;
    let table = f9.embedding(&f81)?;
    println!("embedding GF(9) -> GF(81) sends the power basis 1, x to {table:?}");
    assert_eq!(table.len(), 2);

    // Matrices follow: mapping a GF(3) matrix into GF(9) preserves rank.
    let f3 = Field::new(3, 1)?;
    let m3 = Matrix::from_int_rows(&f3, &[&[1, 2], &[2, 1]]);
    assert_eq!(m3.map_field(&f9)?.rank(), m3.rank());
    println!("rank is stable under extension of scalars: {}", m3.rank());

    // Fields know the order of q modulo l - the quantity that controls
    // which cuspidal shapes exist at a given modular prime.
    for (q, l) in [(3u64, 2u64), (2, 3), (2, 7), (4, 3)] {
        let e = multiplicative_order(q, l)?;
        println!("order of {q} mod {l} is e = {e}");
    }
    assert_eq!(multiplicative_order(2, 7)?, 3);

    // Exact linear algebra over GF(9): invert a matrix and check it.
    let a = Matrix::from_int_rows(&f9, &[&[1, 2, 0], &[0, 1, 1], &[0, 2, 1]]);
    let ainv = a.inverse()?;
    assert_eq!(a.mul(&ainv)?, Matrix::identity(&f9, 3));
    println!("3x3 inverse over {f9} verified: A * A^-1 = I");

    // Rank/nullspace bookkeeping used everywhere in the module code.
    let b = Matrix::from_int_rows(&f9, &[&[1, 1, 0], &[2, 2, 0], &[0, 0, 1]]);
    println!("rank of a rank-deficient 3x3: {}", b.rank());
    assert_eq!(b.rank(), 2);
    assert_eq!(b.nullspace().rows(), 1);
    println!("its nullspace is 1-dimensional, as it must be");

    Ok(())
}
