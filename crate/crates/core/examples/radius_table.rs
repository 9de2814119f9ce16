//! A CSV sweep of radii over gamma and p, as `bohr table` prints it.

use bohr::cli::{table_rows, TABLE_HEADER};
use bohr::WeightFamily;

fn main() {
    let families = [WeightFamily::OddPowers, WeightFamily::Quadratic { n: 2 }];
    let gammas: Vec<f64> = (0..5).map(|i| i as f64 * 0.2).collect();
    let ps = [0.5, 1.0, 2.0];

    println!("{TABLE_HEADER}");
    for row in table_rows(&families, &gammas, &ps, 1e-12) {
        println!("{}", row.csv());
    }
}
