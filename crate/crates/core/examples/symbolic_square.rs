//! The Grassmannian to Bloch–Suslin square on symbolic configurations, where
//! determinants are free generators and 1 − r is rewritten by Plücker.

use prism_core::backend::{canonical, Backend, Formal};
use prism_core::conventions::ConventionTable;
use prism_core::groups::delta_2;
use prism_core::morphisms::{f2_0, f2_1, on_boundary};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> prism_core::Result<()> {
    let b = Formal;
    let c = b.random_config(4, 2, &mut ChaCha8Rng::seed_from_u64(0))?;
    let base = ConventionTable::shipped().index_base();

    let x = f2_1(&b, &c)?;
    let left = on_boundary(&b, &c, base, |q| f2_0(&b, q))?;
    let right = delta_2(&b, &x)?;
    let forms = canonical(&b, &[&left, &right])?;
    println!("f²₁(x₀…x₃) has {} term(s)", x.len());
    println!("f²₀∘d  = {}", forms[0]);
    println!("δ∘f²₁  = {}", forms[1]);
    println!("equal: {}", forms[0] == forms[1]);
    Ok(())
}
