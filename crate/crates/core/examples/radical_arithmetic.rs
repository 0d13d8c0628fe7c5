//! Exact arithmetic on sums of square roots.

use clebsch::numerics::{canonical_sqrt, BigRational};
use clebsch::{to_decimal, RadicalSum};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn main() -> clebsch::Result<()> {
    let (c, k) = canonical_sqrt(&q(3, 5))?;
    println!("sqrt(3/5) = {c} * sqrt({k})");

    let a = RadicalSum::sqrt(&q(1, 2))?;
    let b = RadicalSum::sqrt(&q(1, 3))?;
    let sum = &a + &b;
    println!("{a} + {b} = {sum} ~ {}", to_decimal(&sum, 12));
    println!("({a}) * ({b}) = {}", &a * &b);
    println!("({sum})^2 = {}", &sum * &sum);
    println!("({sum}) - {b} = {}", &sum - &b);

    let parsed: RadicalSum = "-sqrt(3/10)".parse()?;
    println!("parsed {parsed}, square {}", parsed.square().unwrap());
    Ok(())
}
