//! Emit plot-ready coefficient curves b(λ) and c(λ): the per-λ optimum and
//! the three continuous family predictions, as whitespace-separated columns
//! for any standard plotting tool. Equivalent to
//! `auxspec fit --grid table1 --emit-plot-data b.dat c.dat`.
//!
//! Run with `cargo run --example plot_data [-- OUTPUT_DIR]`.

use auxspec::fit::{fit_bc, ReferenceGrid};
use auxspec::tables::table1_potentials;
use auxspec::CoeffFamily;
use std::fmt::Write as _;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| ".".into());
    let mut b_text = String::from("# lambda  optimal  linear  hyperbola-airy  hyperbola-fit\n");
    let mut c_text = b_text.clone();

    for potential in table1_potentials() {
        let grid = ReferenceGrid::from_oracle(potential);
        let fitted = fit_bc(&grid)?;
        let lambda = fitted.lambda();
        let _ = write!(b_text, "{:.4}  {:.6}", lambda, fitted.b_opt);
        let _ = write!(c_text, "{:.4}  {:.6}", lambda, fitted.c_opt);
        for family in [
            CoeffFamily::Linear,
            CoeffFamily::HyperbolaAiry,
            CoeffFamily::HyperbolaFit,
        ] {
            let _ = write!(b_text, "  {:.6}", family.b(lambda)?);
            let _ = write!(c_text, "  {:.6}", family.c(lambda)?);
        }
        b_text.push('\n');
        c_text.push('\n');
    }

    let b_path = format!("{dir}/b.dat");
    let c_path = format!("{dir}/c.dat");
    std::fs::write(&b_path, b_text)?;
    std::fs::write(&c_path, c_text)?;
    println!("wrote {b_path} and {c_path}");
    Ok(())
}
