//! Configurations of points, the Grassmannian differential and cross ratios.

use prism_core::configs::{boundary, cross_ratio, random_generic, ConfigChain, IndexBase};
use prism_core::scalars::{rat_int, Rat};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> prism_core::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let c = random_generic::<Rat>(5, 2, &mut rng)?;
    println!("configuration of 5 points in the plane:\n{c}");

    let mut chain = ConfigChain::new();
    chain.add_term(c.clone(), rat_int(1));
    let d = boundary(&chain, IndexBase::Zero);
    println!("d has {} terms; d∘d has {}", d.len(), boundary(&d, IndexBase::Zero).len());

    let four = c.omit(4);
    println!("cross ratio of the first four points: {}", cross_ratio(&four, None)?);
    Ok(())
}
