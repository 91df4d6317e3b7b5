//! The Iwahori-Hecke algebra in its T-basis: quadratic and braid relations,
//! structure constants, parabolic subalgebras, and induction of their
//! simple modules - every induced module here turns out reducible.

use hcprim::coxeter::CoxeterType;
use hcprim::error::Error;
use hcprim::field::Field;
use hcprim::hecke::HeckeAlgebra;
use hcprim::verify::conclusively_reducible;

const SEED: u64 = 1;

fn main() -> Result<(), Error> {
    let f3 = Field::new(3, 1)?;
    let a2 = CoxeterType::a(2);

    // H(A2) over GF(3) with parameter image q = 4 = 1 mod 3: the group
    // algebra of S3 in disguise.
    let unit = HeckeAlgebra::from_prime_power(&f3, &a2, 4)?;
    println!("H(A2) at q = 4 over GF(3): dim {}, parameter image {}", unit.dim(), unit.param(1));
    assert_eq!(unit.param(1), 1);

    // The generic-parameter algebra at q = 2 over GF(3).
    let h = HeckeAlgebra::new(&f3, &a2, &[2])?;
    println!("H(A2) at parameter 2 over GF(3): dim {}", h.dim());
    assert_eq!(h.dim(), 6);

    // Quadratic relation (T_s - q)(T_s + 1) = 0, checked on the basis.
    let s1 = h.basis(&a2.generator(1));
    let sq = h.mul(&s1, &s1);
    let expect = {
        // q*T_s + (q-1)*... spelled concretely: T_s^2 = (q-1) T_s + q T_e
        let mut v = h.zero();
        let e_idx = h.index_of(&a2.identity());
        let s_idx = h.index_of(&a2.generator(1));
        v[e_idx] = 2; // q = 2
        v[s_idx] = 1; // q - 1 = 1
        v
    };
    assert_eq!(sq, expect);
    println!("quadratic relation T_s^2 = (q-1) T_s + q holds");

    // Braid relation through the basis product T_{s1} T_{s2} T_{s1}.
    let s2 = h.basis(&a2.generator(2));
    let lhs = h.mul(&h.mul(&s1, &s2), &s1);
    let rhs = h.mul(&h.mul(&s2, &s1), &s2);
    assert_eq!(lhs, rhs);
    println!("braid relation T_1 T_2 T_1 = T_2 T_1 T_2 holds");

    // Structure constants of a product of basis elements supported beyond
    // length addition: T_w0 * T_w0.
    let w0 = h.elements().iter().max_by_key(|w| w.length()).unwrap().clone();
    let coeffs = h.structure_constants(h.index_of(&w0), h.index_of(&w0));
    println!("T_w0 * T_w0 expands with {} nonzero coefficients", coeffs.iter().filter(|&&c| c != 0).count());

    // Simple modules of the full algebra.
    let simples = h.simples(SEED)?;
    let dims: Vec<(usize, usize)> = simples.iter().map(|(m, mult)| (m.dim(), *mult)).collect();
    println!("simples of H(A2) at q = 2 mod 3 (dim, regular multiplicity): {dims:?}");

    // Parabolic subalgebras and induction: for every proper subset J of
    // the generators and every simple of H_J, the induced module is
    // reducible - the Hecke-side face of imprimitivity of the series.
    for j in [vec![], vec![1], vec![2]] {
        let (sub, _embed) = h.parabolic(&j)?;
        for (x, _) in sub.simples(SEED)? {
            let induced = if x.field() == h.field() {
                h.induce(&j, &x)?
            } else {
                h.extend_scalars(x.field())?.induce(&j, &x)?
            };
            let verdict = conclusively_reducible(&induced.module, SEED)?;
            println!(
                "J = {j:?}: simple of dim {} induces to dim {} - reducible: {verdict}",
                x.dim(),
                induced.module.dim()
            );
            assert!(verdict, "induction from a proper parabolic must split");
        }
    }

    Ok(())
}
