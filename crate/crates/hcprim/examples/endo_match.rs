//! End(k[G/B]) two ways: the double-coset orbit basis computed from the
//! group action on flags, against the T-basis of the Iwahori-Hecke algebra
//! at the same q. Dimensions, generators, and all structure constants match.

use hcprim::coxeter::CoxeterType;
use hcprim::error::Error;
use hcprim::field::Field;
use hcprim::grouprep::{endo_algebra, hc_induce, orbital_basis, GlGroup, LeviGroup, Parabolic};
use hcprim::hecke::HeckeAlgebra;

fn main() -> Result<(), Error> {
    let group = GlGroup::new(3, 2)?;
    let coeff = Field::new(3, 1)?;

    // The orbit basis: one endomorphism of k[G/B] per Weyl-group element,
    // each the incidence matrix of a G-orbit of flag pairs.
    let ob = orbital_basis(&group, &coeff)?;
    println!("GL_3(2) acting on its {}-element flag variety, coefficients {coeff}", ob.degree());
    println!("orbit basis: {} matrices of degree {}", ob.elements().len(), ob.degree());
    assert_eq!(ob.elements().len(), 6, "one per element of W(A2) = S3");
    assert_eq!(ob.degree(), 21);

    // Independently, the full endomorphism algebra of the permutation
    // module has exactly that dimension.
    let comp = vec![1usize; 3];
    let torus = LeviGroup::new(&comp, 2)?;
    let kgb = hc_induce(&group, &torus, &Parabolic::upper(&comp), &torus.trivial_module(&coeff))?;
    let endo = endo_algebra(&kgb)?;
    println!("dim End(k[G/B]) computed directly: {}", endo.len());
    assert_eq!(endo.len(), 6);

    // The Hecke algebra of the same type at the same prime power.
    let hecke = HeckeAlgebra::from_prime_power(&coeff, &CoxeterType::a(2), 2)?;

    // Structure constants agree everywhere: expanding A_u A_v in the orbit
    // basis gives integer pair-counts whose mod-3 images are the T-basis
    // coefficients of T_u T_v.
    let mut checked = 0usize;
    for u in 0..ob.elements().len() {
        for v in 0..ob.elements().len() {
            let counts = ob.structure_constants(u, v);
            let hu = hecke.index_of(&ob.elements()[u]);
            let hv = hecke.index_of(&ob.elements()[v]);
            let tcoeffs = hecke.structure_constants(hu, hv);
            for (w, &c) in counts.iter().enumerate() {
                let hw = hecke.index_of(&ob.elements()[w]);
                let reduced = coeff.from_int(c as i64).value() as u32;
                assert_eq!(
                    reduced, tcoeffs[hw],
                    "mismatch at (u, v, w) = ({u}, {v}, {w})"
                );
                checked += 1;
            }
        }
    }
    println!("all {checked} structure constants agree with the T-basis mod 3");

    // A readable sample: the product of the two generator matrices expands
    // over basis elements of bounded length, exactly like T_1 T_2.
    let s1 = ob.elements().iter().position(|w| w.word() == vec![1]).unwrap();
    let s2 = ob.elements().iter().position(|w| w.word() == vec![2]).unwrap();
    let counts = ob.structure_constants(s1, s2);
    println!("A_s1 * A_s2 expands with integer coefficients {counts:?}");
    let support: Vec<Vec<usize>> = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(w, _)| ob.elements()[w].word())
        .collect();
    println!("support (as reduced words): {support:?}");
    assert_eq!(support, vec![vec![1, 2]], "length-additive product is a single basis element");

    Ok(())
}
