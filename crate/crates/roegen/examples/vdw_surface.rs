//! Sample the Van der Waals price surface over a (Q, I) grid and emit the
//! Q,P,I rows used to render the surface.
//!
//! Run with: cargo run -p roegen --example vdw_surface > surface.csv

use roegen::emit;
use roegen::state::VdWModel;

fn main() -> Result<(), roegen::Error> {
    let model = VdWModel::new(27.0, 1.0, 8.0, 1.0)?;
    let critical = model.critical_point();

    // sweep stabilities through the critical value so the fold is visible
    let rows = model.pressure_grid(
        1.5,
        12.0,
        60,
        model.stability_from_reduced(0.85),
        model.stability_from_reduced(1.15),
        9,
    )?;
    eprintln!(
        "{} samples around the critical point (P_c, Q_c, I_c) = ({}, {}, {})",
        rows.len(),
        critical.price(),
        critical.volume(),
        critical.stability()
    );
    print!("{}", emit::surface_csv(&rows));
    Ok(())
}
