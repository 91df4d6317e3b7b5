//! Finite Coxeter groups of types A and B: enumeration by reduced words,
//! length statistics, parabolic coset transversals, and generator orbits.

use hcprim::coxeter::CoxeterType;
use hcprim::error::Error;

fn main() -> Result<(), Error> {
    // Types parse from the same strings the CLI accepts.
    let b2 = CoxeterType::parse("B2")?;
    let a3 = CoxeterType::parse("A3")?;
    let mixed = CoxeterType::parse("A1xA1")?;
    println!("orders: |W(B2)| = {}, |W(A3)| = {}, |W(A1xA1)| = {}",
        b2.order(), a3.order(), mixed.order());
    assert_eq!(b2.order(), 8);
    assert_eq!(a3.order(), 24);
    assert_eq!(mixed.order(), 4);

    // Enumerate W(B2) and bucket by length: the coefficients of its
    // Poincare polynomial, 1 + 2t + 2t^2 + 2t^3 + t^4.
    let elements = b2.enumerate()?;
    let max_len = elements.iter().map(|w| w.length()).max().unwrap();
    let mut by_len = vec![0usize; max_len + 1];
    for w in &elements {
        by_len[w.length()] += 1;
    }
    println!("B2 length distribution: {by_len:?}");
    assert_eq!(by_len, vec![1, 2, 2, 2, 1]);

    // The longest element and one of its reduced words (generators are
    // numbered from 1).
    let w0 = elements.iter().max_by_key(|w| w.length()).unwrap();
    println!("longest element of B2 has word {:?}", w0.word());
    assert_eq!(w0.length(), 4);
    assert!(w0.mul(w0).is_identity(), "w0 is an involution in B2");

    // Words reduce: s1 s1 collapses, and the braid relation holds.
    let s1 = b2.generator(1);
    let s2 = b2.generator(2);
    assert!(s1.mul(&s1).is_identity());
    let lhs = s1.mul(&s2).mul(&s1).mul(&s2);
    let rhs = s2.mul(&s1).mul(&s2).mul(&s1);
    assert_eq!(lhs.key(), rhs.key());
    println!("braid relation (s1 s2)^2 = (s2 s1)^2 verified in B2");

    // Minimal-length coset representatives W / W_J for J = {1, 2} in A3:
    // the quotient is the 4-element set S4 / S3.
    let reps = a3.min_coset_reps(&[1, 2])?;
    println!("A3 with J = {{1,2}}: {} minimal coset representatives", reps.len());
    for r in &reps {
        println!("  length {} word {:?}", r.length(), r.word());
    }
    assert_eq!(reps.len(), 4);

    // Every element factors uniquely as (J-part) * (minimal rep).
    for w in a3.enumerate()? {
        let (j_part, rep) = a3.coset_factorize(&[1, 2], &w);
        assert_eq!(j_part.mul(&rep).key(), w.key());
        assert_eq!(a3.coset_canonical(&[1, 2], &w).key(), rep.key());
    }
    println!("coset factorization w = w_J * w^J verified for all 24 elements");

    // In type B the generator orbits under diagram symmetry split: the
    // sign generator sits alone, the type-A tail forms the other orbit.
    let b3 = CoxeterType::b(3);
    let orbits = b3.generator_orbits();
    println!("B3 generator orbits (sign orbit first): {orbits:?}");
    assert_eq!(orbits.len(), 2);
    assert_eq!(orbits[0].len(), 1);

    Ok(())
}
