//! Arithmetic in ℚ(t) with d/dt, and exact factorization over a coprime basis.

use prism_core::scalars::{partial_fractions, CoprimeBasis, Poly, RatFunc, Scalar};

fn main() -> prism_core::Result<()> {
    let a = RatFunc::new(Poly::from_i64s(&[-2, 0, 1]), Poly::from_i64s(&[0, 3]))?;
    let b = a.one_minus();
    println!("a       = {a}");
    println!("1 - a   = {b}");
    println!("D a     = {}", a.derive());
    println!("Dlog a  = {}", a.dlog()?);

    let ab = a.mul(&b);
    let basis = CoprimeBasis::from_values([&a, &b, &ab])?;
    println!("basis   = {:?}", basis.elements().iter().map(|p| p.to_string()).collect::<Vec<_>>());
    for v in [&a, &b, &ab] {
        let exps: Vec<String> =
            basis.exponents(v)?.iter().map(|(i, e)| format!("({})^{e}", basis.elements()[*i])).collect();
        println!("{v}  ~  {}", exps.join(" · "));
    }

    // Dlog(a(1-a)) as a combination of t^j / p^k
    let parts = partial_fractions(&ab.dlog()?, &basis)?;
    let shown: Vec<String> = parts.iter().map(|(k, c)| format!("{c}·{k}")).collect();
    println!("Dlog(a(1-a)) = {}", shown.join(" + "));
    Ok(())
}
