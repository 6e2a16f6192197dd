//! Build the economic Carnot engine cycle and check its closure identities.
//!
//! Run with: cargo run -p roegen --example carnot_cycle

use roegen::carnot::{build_cycle, validate_cycle, CarnotSpec};
use roegen::state::IdealIncomeModel;

fn main() -> Result<(), roegen::Error> {
    // one mole of mono-atomic ideal income, unit income constant
    let model = IdealIncomeModel::new(1.0, 1.0, 3)?;

    // hot expansion from Q_1 = 1 to Q_2 = e between reservoirs at I = 2 and
    // I = 1; the entropy gap is then exactly 1 and the wealth exactly
    // (I_H - I_C) * ln(Q_2/Q_1) = 1
    let spec = CarnotSpec::new(model, 2.0, 1.0, 1.0, std::f64::consts::E, 1000)?;
    let report = build_cycle(&spec)?;

    println!("vertices (P, Q, I, E, G):");
    for (index, vertex) in report.vertices().iter().enumerate() {
        println!(
            "  {}: ({:.6}, {:.6}, {:.6}, {:.6}, {:.6})",
            index + 1,
            vertex.price(),
            vertex.volume(),
            vertex.stability(),
            vertex.entropy(),
            vertex.growth()
        );
    }

    println!("wealth W            = {:.12}", report.wealth());
    println!("goods absorbed q_H  = {:.12}", report.goods_absorbed());
    println!("goods rejected q_C  = {:.12}", report.goods_rejected());
    println!("efficiency eta      = {:.12}", report.eta());
    println!(
        "entropy span        = [{:.12}, {:.12}]",
        report.entropy_low(),
        report.entropy_high()
    );

    // first law: W = q_H - q_C; dG integrates to zero around the loop
    let diagnostics = validate_cycle(&report);
    println!(
        "dG loop residual    = {:.3e} (limit {:.3e})",
        diagnostics.growth_closure, diagnostics.growth_limit
    );
    println!(
        "P dQ vs I dE        = {:.3e} (limit {:.3e})",
        diagnostics.area_mismatch, diagnostics.area_limit
    );
    println!(
        "first-law residual  = {:.3e} (limit {:.3e})",
        diagnostics.first_law, diagnostics.first_law_limit
    );
    println!("validation          = {}", if diagnostics.pass { "PASS" } else { "FAIL" });
    Ok(())
}
