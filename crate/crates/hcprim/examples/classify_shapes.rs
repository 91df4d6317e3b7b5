//! The combinatorial side: enumerate cuspidal support shapes for GL_n at a
//! modular prime, decide primitivity for each, and show the verdicts for
//! the other classical kinds.

use hcprim::classify::{
    enumerate_cuspidal_shapes, is_primitive_unipotent, min_split_levi, relative_weyl_group,
    CuspidalShapeGL, GroupCase, GroupKind,
};
use hcprim::error::Error;
use hcprim::field::multiplicative_order;

fn main() -> Result<(), Error> {
    // GL_5(2) at l = 3: the order of q = 2 mod 3 is e = 2.
    let (n, q, l) = (5usize, 2u64, 3u64);
    let e = multiplicative_order(q, l)?;
    println!("GL_{n}({q}) mod {l}: e = {e}");
    let case = GroupCase::new(GroupKind::Gl, n, q, l)?;

    let shapes = enumerate_cuspidal_shapes(n, e, l)?;
    println!("{} cuspidal shapes of total rank {n}:", shapes.len());
    let mut verdicts = Vec::new();
    for shape in &shapes {
        let v = is_primitive_unipotent(&case, Some(shape))?;
        let levi = min_split_levi(shape)?;
        let w = relative_weyl_group(shape);
        println!(
            "  {:24} pure={:5}  |rel. Weyl|={:3}  min split Levi {:?}  ->  {} ({})",
            shape.render(),
            shape.is_pure(),
            w.order(),
            levi,
            v.verdict,
            v.clause,
        );
        verdicts.push(v);
    }

    // Exactly the mixed shapes are imprimitive, and every witness is the
    // smallest split Levi of its shape.
    for (shape, v) in shapes.iter().zip(&verdicts) {
        assert_eq!(v.verdict == "Imprimitive", !shape.is_pure());
        if let Some(w) = &v.witness {
            assert_eq!(w, &min_split_levi(shape)?);
        }
    }
    let imprimitive = verdicts.iter().filter(|v| v.verdict == "Imprimitive").count();
    println!("{imprimitive} of {} shapes are imprimitive", shapes.len());

    // Shapes round-trip through their text form, the same grammar the CLI
    // takes on the command line.
    for shape in &shapes {
        let back = CuspidalShapeGL::parse(&shape.render(), e, l)?;
        assert_eq!(back.render(), shape.render());
    }
    println!("all {} shapes round-trip through parse/render", shapes.len());

    // Outside type A no splitting ever occurs: symplectic, orthogonal and
    // conformal symplectic cases are primitive without further data.
    for (kind, n, q, l) in [
        (GroupKind::Sp, 4usize, 2u64, 3u64),
        (GroupKind::So, 5, 3, 2),
        (GroupKind::CSp, 6, 3, 2),
        (GroupKind::Gu, 3, 2, 3),
    ] {
        let v = is_primitive_unipotent(&GroupCase::new(kind, n, q, l)?, None)?;
        println!("{:3} n={n} q={q} l={l}: {} ({})", kind.name(), v.verdict, v.clause);
        assert_eq!(v.verdict, "Primitive");
        assert_eq!(v.clause, "non-linear-kind");
    }

    Ok(())
}
