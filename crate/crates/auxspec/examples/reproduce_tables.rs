//! Regenerate both embedded reference tables from scratch and print the
//! computed numbers next to the published ones.
//!
//! Run with `cargo run --example reproduce_tables` (a few seconds: the χ
//! grid solves eleven oracle problems, some with very extended states).

use auxspec::oracle::DEFAULT_MESH_SIZE;
use auxspec::tables;

fn main() {
    println!("chi(lambda) grid: computed vs published\n");
    println!(
        "{:>8} {:>13} {:>9} {:>13} {:>9} {:>13} {:>9}",
        "lambda", "chi[bc3]", "ref", "chi[bc4]", "ref", "chi[wkb]", "ref"
    );
    for row in tables::compute_table1(DEFAULT_MESH_SIZE) {
        let fmt = |v: &auxspec::Result<f64>| match v {
            Ok(x) => format!("{x:.6e}"),
            Err(_) => "ERR".to_string(),
        };
        let wkb = row.chi_wkb.as_ref().map_or("-".to_string(), fmt);
        let wkb_ref = row
            .reference
            .chi_wkb
            .map_or("-".to_string(), |r| format!("{r:.1e}"));
        println!(
            "{:>8} {:>13} {:>9} {:>13} {:>9} {:>13} {:>9}",
            row.potential.label(),
            fmt(&row.chi_hyperbola_airy),
            format!("{:.1e}", row.reference.chi_hyperbola_airy),
            fmt(&row.chi_hyperbola_fit),
            format!("{:.1e}", row.reference.chi_hyperbola_fit),
            wkb,
            wkb_ref,
        );
    }

    println!("\nlambda = 1 spectra: computed (published) per method\n");
    let computed = tables::compute_table2(DEFAULT_MESH_SIZE);
    let reference = &tables::reference_tables().table2;
    for block in &reference.blocks {
        println!("l = {}", block.ell);
        let rows: [(&str, &[f64; 4]); 4] = [
            ("numeric", &block.numeric),
            ("bc3", &block.hyperbola_airy),
            ("bc4", &block.hyperbola_fit),
            ("wkb", &block.wkb),
        ];
        let grids = [
            &computed.numeric,
            &computed.hyperbola_airy,
            &computed.hyperbola_fit,
            &computed.wkb,
        ];
        for ((name, refs), grid) in rows.iter().zip(grids) {
            print!("  {name:<8}");
            for n in 0..4 {
                match &grid[block.ell as usize][n] {
                    Ok(v) => print!(" {v:.5} ({:.5})", refs[n]),
                    Err(_) => print!(" ERR ({:.5})", refs[n]),
                }
            }
            println!();
        }
    }
}
