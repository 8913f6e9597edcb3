//! Numerical polylogarithms and the single-valued functionals used by the
//! numeric backend.

use prism_core::backend::{Backend, Numeric};
use prism_core::groups::five_term_r2;
use prism_core::oracles::{bloch_wigner, li_n, sv_l3};
use prism_core::scalars::CF;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> prism_core::Result<()> {
    println!("Li2(1) = {:.15}   L3(1) = {:.15}", li_n(CF::new(1.0, 0.0), 2)?.re, sv_l3(CF::new(1.0, 0.0))?);
    for z in [CF::new(0.5, 0.0), CF::new(0.0, 1.0), CF::new(-3.0, 0.5), CF::new(2.0, 1.0)] {
        println!(
            "z = {z:<10}  Li2 = {:.12}  Li3 = {:.12}  D2 = {:.12}  L3 = {:.12}",
            li_n(z, 2)?,
            li_n(z, 3)?,
            bloch_wigner(z)?,
            sv_l3(z)?
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let c = Numeric.random_config(5, 2, &mut rng)?;
    let f = Numeric.functionals(&five_term_r2(&Numeric, &c)?)?;
    println!("D2 on the five-term relation: |Σ| = {:.2e}, relative {:.2e}", f[0].value.norm(), f[0].relative());
    Ok(())
}
