//! Reversible processes on the ideal income surface: iso-ips and isentropic
//! paths, their work and goods-production integrals, and CSV export.
//!
//! Run with: cargo run -p roegen --example income_processes

use roegen::emit;
use roegen::ideal::{goods_production_along, work_along, work_quadrature};
use roegen::state::IdealIncomeModel;

fn main() -> Result<(), roegen::Error> {
    let model = IdealIncomeModel::new(1.0, 1.0, 3)?;

    // iso-ips expansion at I = 2 from Q = 1 to Q = 4
    let isotherm = model.isotherm_path(2.0, 1.0, 4.0, 1000)?;
    let work = work_along(&isotherm)?;
    let goods = goods_production_along(&isotherm)?;
    println!("iso-ips I = 2, Q: 1 -> 4");
    println!("  work  int P dQ   = {work:.12}  (n R I ln 4 = {:.12})", 2.0 * 4.0_f64.ln());
    println!("  goods int I dE   = {goods:.12}");
    println!(
        "  trapezoid route  = {:.12} (closed form above)",
        work_quadrature(&isotherm)?
    );

    // isentropic compression from (Q = 4, I = 2) until the stability doubles
    let start = model.state_at(4.0, 2.0)?.point();
    let target = 4.0 / 2.0_f64.powf(1.5); // halving I^-1: Q scales by 2^(-f/2)
    let adiabat = model.adiabat_path(&start, target, 1000)?;
    println!("isentropic Q: 4 -> {target:.6}");
    println!(
        "  stability climbs from {} to {:.12}",
        start.stability(),
        adiabat.last().stability()
    );
    println!("  work int P dQ    = {:.12}", work_along(&adiabat)?);
    println!("  goods int I dE   = {:.12} (exactly zero)", goods_production_along(&adiabat)?);

    // the adiabatic invariant P Q^((f+2)/f) is constant along the path
    let gamma = model.adiabatic_exponent();
    let reference = start.price() * start.volume().powf(gamma);
    let deviation = adiabat
        .samples()
        .iter()
        .map(|s| (s.price() * s.volume().powf(gamma) - reference).abs() / reference)
        .fold(0.0_f64, f64::max);
    println!("  P Q^({gamma:.6}) drift = {deviation:.3e}");

    // paths export as Q,P,I,E,G rows
    let csv = emit::path_csv(&isotherm);
    println!("csv preview:");
    for line in csv.lines().take(3) {
        println!("  {line}");
    }
    Ok(())
}
