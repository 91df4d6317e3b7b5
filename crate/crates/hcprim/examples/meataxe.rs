//! Testing irreducibility of matrix algebra modules: the randomized test,
//! the exhaustive cross-check, composition series, and what a splitting
//! field request looks like.

use hcprim::error::Error;
use hcprim::field::Field;
use hcprim::matrix::Matrix;
use hcprim::modalg::{AlgebraModule, Simplicity};

const SEED: u64 = 1;

fn main() -> Result<(), Error> {
    // The permutation module of S3 on 3 points over GF(3) - reducible in a
    // characteristic that divides the point count.
    let f3 = Field::new(3, 1)?;
    let s1 = Matrix::from_int_rows(&f3, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let s2 = Matrix::from_int_rows(&f3, &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
    let perm = AlgebraModule::new(&f3, 3, vec![s1, s2])?;

    match perm.meataxe_irreducible(SEED) {
        Ok(Simplicity::Reducible(basis)) => {
            let (sub, quot) = perm.split(&basis)?;
            println!(
                "S3 permutation module over GF(3): proper submodule of dim {}, quotient dim {}",
                sub.dim(),
                quot.dim()
            );
        }
        other => panic!("expected a reducible verdict, got {other:?}"),
    }

    // Its full composition series: trivial twice and the sign once, so the
    // fixed vector (1,1,1) lies inside the sum-zero plane.
    let factors = perm.composition_factors(SEED)?;
    let mut dims: Vec<(usize, usize)> =
        factors.iter().map(|(f, m)| (f.dim(), *m)).collect();
    dims.sort();
    println!("composition factors (dim, multiplicity): {dims:?}");
    assert_eq!(dims, vec![(1, 1), (1, 2)], "trivial twice, sign once");
    assert_eq!(factors.len(), 2, "two isomorphism classes among the three factors");

    // A module that is irreducible over its base field but not absolutely:
    // the rotation of order 3 acting on GF(2)^2. Its endomorphism ring is
    // GF(4), and the test reports exactly that.
    let f2 = Field::new(2, 1)?;
    let rot = Matrix::from_int_rows(&f2, &[&[0, 1], &[1, 1]]);
    let c3 = AlgebraModule::new(&f2, 2, vec![rot])?;
    match c3.meataxe_irreducible(SEED) {
        Err(Error::ExtendScalars { degree }) => {
            println!("order-3 rotation on GF(2)^2: irreducible, endomorphisms form GF(2^{degree})");
            assert_eq!(degree, 2);
        }
        other => panic!("expected a splitting-field request, got {other:?}"),
    }

    // Extending scalars to GF(4) splits it into two 1-dimensional pieces.
    let f4 = Field::new(2, 2)?;
    let c3_big = c3.extend_scalars(&f4)?;
    let big_factors = c3_big.composition_factors(SEED)?;
    let big_dims: Vec<usize> = big_factors.iter().map(|(f, _)| f.dim()).collect();
    println!("after extending to GF(4), factor dims: {big_dims:?}");
    assert!(big_factors.iter().all(|(f, _)| f.dim() == 1));

    // The randomized verdict agrees with brute force over the projective
    // line (exhaustive submodule search, feasible at these dims).
    for (name, m) in [("S3 perm", &perm), ("C3 regular part", &c3)] {
        let exhaustive = m.exhaustive_irreducible()?;
        let randomized = m.meataxe_irreducible(SEED);
        let both_simple = |v: &Result<Simplicity, Error>| {
            matches!(v, Ok(Simplicity::Irreducible) | Err(Error::ExtendScalars { .. }))
        };
        assert_eq!(
            matches!(exhaustive, Simplicity::Irreducible),
            both_simple(&randomized),
            "{name}: exhaustive and randomized disagree"
        );
        println!("{name}: randomized and exhaustive verdicts agree");
    }

    Ok(())
}
