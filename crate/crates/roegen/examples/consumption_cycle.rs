//! Reverse the engine cycle into the consumption cycle: same states walked
//! counterclockwise, every energy flow negated.
//!
//! Run with: cargo run -p roegen --example consumption_cycle

use roegen::carnot::{build_cycle, reverse_cycle, CarnotSpec};
use roegen::ideal::work_quadrature;
use roegen::state::IdealIncomeModel;

fn main() -> Result<(), roegen::Error> {
    let model = IdealIncomeModel::new(1.0, 1.0, 3)?;
    let spec = CarnotSpec::new(model, 2.0, 1.0, 1.0, std::f64::consts::E, 1000)?;

    let engine = build_cycle(&spec)?;
    let consumption = reverse_cycle(&engine);

    println!("                engine        consumption");
    println!(
        "W          {:>12.6} {:>12.6}",
        engine.wealth(),
        consumption.wealth()
    );
    println!(
        "q_H        {:>12.6} {:>12.6}",
        engine.goods_absorbed(),
        consumption.goods_absorbed()
    );
    println!(
        "q_C        {:>12.6} {:>12.6}",
        engine.goods_rejected(),
        consumption.goods_rejected()
    );

    // the loop area flips sign with the orientation
    let area = |report: &roegen::state::CycleReport| -> f64 {
        report
            .legs()
            .iter()
            .map(|leg| work_quadrature(leg).unwrap())
            .sum()
    };
    println!(
        "loop P dQ  {:>12.6} {:>12.6}",
        area(&engine),
        area(&consumption)
    );

    // reversal is an involution
    assert_eq!(reverse_cycle(&consumption), engine);
    println!("reverse(reverse(cycle)) == cycle");
    Ok(())
}
