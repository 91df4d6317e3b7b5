//! Verdicts beyond the unipotent series: a general series is described by
//! its list of linear/unitary factors, each linear factor carrying its own
//! cuspidal shape. The decision is factor-by-factor, and one mixed shape
//! anywhere makes the whole series imprimitive.

use hcprim::classify::{
    is_primitive_series, CuspidalShapeGL, JordanFactor, JordanFactorKind,
};
use hcprim::error::Error;
use hcprim::field::multiplicative_order;

fn main() -> Result<(), Error> {
    let l = 2u64;

    // A pure linear factor: GL_2 over F_3 with shape 1^2 (e = 1 at l = 2).
    let e3 = multiplicative_order(3, l)?;
    let pure = JordanFactor {
        kind: JordanFactorKind::Linear,
        n: 2,
        q: 3,
        shape: Some(CuspidalShapeGL::parse("1^2", e3, l)?),
    };

    // A mixed linear factor: GL_3 over F_3 with shape 1^1+(1*2^1)^1.
    let mixed = JordanFactor {
        kind: JordanFactorKind::Linear,
        n: 3,
        q: 3,
        shape: Some(CuspidalShapeGL::parse("1^1+(1*2^1)^1", e3, l)?),
    };

    // A unitary factor: GU_2 over F_3, no shape data needed.
    let unitary = JordanFactor { kind: JordanFactorKind::Unitary, n: 2, q: 3, shape: None };

    // Pure + unitary: nothing splits.
    let v = is_primitive_series(&[pure.clone(), unitary.clone()], l)?;
    println!("[GL_2 pure, GU_2] at l = {l}: {} ({})", v.verdict, v.clause);
    assert_eq!(v.verdict, "Primitive");
    assert!(v.witness.is_none());

    // The mixed factor alone: imprimitive, witnessed by its split Levi.
    let v = is_primitive_series(&[mixed.clone()], l)?;
    println!("[GL_3 mixed] at l = {l}: {} witness {:?}", v.verdict, v.witness);
    assert_eq!(v.verdict, "Imprimitive");
    assert_eq!(v.witness, Some(vec![1, 2]));

    // All three together: still imprimitive; the witness concatenates each
    // factor's contribution (whole factor when it does not split).
    let v = is_primitive_series(&[pure.clone(), mixed.clone(), unitary.clone()], l)?;
    println!(
        "[GL_2 pure, GL_3 mixed, GU_2] at l = {l}: {} witness {:?} on total rank {}",
        v.verdict, v.witness, v.n
    );
    assert_eq!(v.verdict, "Imprimitive");
    assert_eq!(v.witness, Some(vec![2, 1, 2, 2]));
    assert_eq!(v.n, 7);

    // The verdict is invariant under reordering the factors.
    let v2 = is_primitive_series(&[unitary, mixed, pure], l)?;
    assert_eq!(v2.verdict, v.verdict);
    println!("verdict unchanged under factor reordering");

    // Bad inputs are rejected, not guessed at: a linear factor with no
    // shape, and a shape whose parameters disagree with the factor.
    assert!(is_primitive_series(
        &[JordanFactor { kind: JordanFactorKind::Linear, n: 2, q: 3, shape: None }],
        l
    )
    .is_err());
    println!("linear factors without a shape are rejected");

    Ok(())
}
