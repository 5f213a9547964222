//! The absolute value and the meet/join calculus built from it.
//!
//!     cargo run --example absolute_value

use aous::{abs_value, join, meet, pos_neg_parts, HermitianMatrix, ToleranceProfile};

fn main() -> aous::Result<()> {
    let tol = ToleranceProfile::default();
    let u = HermitianMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]])?;
    let v = HermitianMatrix::diag(&[0.0, -2.0]);

    println!("u = {u:?}");
    println!("v = {v:?}");
    println!("|v| = {:?}", abs_value(&v, &tol)?);

    let (plus, minus) = pos_neg_parts(&(&u + &v), &tol)?;
    println!("(u+v)+ = {plus:?}");
    println!("(u+v)- = {minus:?}");

    let m = meet(&u, &v, &tol)?;
    let j = join(&u, &v, &tol)?;
    println!("u meet v = {m:?}");
    println!("u join v = {j:?}");

    // join + meet = u + v holds in every model
    let gap = (&(&j + &m) - &(&u + &v)).frobenius_norm();
    println!("|| (u join v) + (u meet v) - (u + v) ||_F = {gap:.2e}");

    // the triangle inequality does not: |u| + |v| - |u + v| has a negative eigenvalue
    let slack = &(&abs_value(&u, &tol)? + &abs_value(&v, &tol)?) - &abs_value(&(&u + &v), &tol)?;
    let lowest = aous::calculus::min_eigenvalue(&slack, &tol)?;
    println!("min eigenvalue of |u| + |v| - |u + v| = {lowest:.4}");
    Ok(())
}
