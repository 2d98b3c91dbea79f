//! Exact arithmetic in cyclotomic fields.
//!
//! ```bash
//! cargo run --example cyclotomics
//! ```

use liftlab::Cyclotomic;

fn main() -> liftlab::Result<()> {
    let w = Cyclotomic::root_of_unity(3, 1)?;
    let sum = &(&Cyclotomic::one() + &w) + &w.pow(2);
    println!("1 + w + w^2 = {sum}");

    // sqrt(2) = z8 + z8^7 and sqrt(-3) = w - w^2
    let z8 = Cyclotomic::root_of_unity(8, 1)?;
    let sqrt2 = &z8 + &z8.pow(7);
    println!("sqrt(2) = {sqrt2}, squared = {}", &sqrt2 * &sqrt2);
    let sqrt_m3 = &w - &w.pow(2);
    println!("sqrt(-3)^2 = {}", &sqrt_m3 * &sqrt_m3);

    let x = &sqrt2 + &w;
    let inv = x.inverse().expect("nonzero");
    println!("x = {x}\n1/x = {inv}\nx * 1/x = {}", &x * &inv);
    println!("conductor of x: {}", x.conductor());
    println!("galois 5 of x: {}", x.galois(5)?);
    let parsed: Cyclotomic = "1*z(8)^1 + 1*z(8)^3".parse()?;
    println!("parsed {parsed}, squared {}", &parsed * &parsed);
    Ok(())
}
