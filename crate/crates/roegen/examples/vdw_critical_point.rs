//! Locate and verify the Van der Waals critical point, then watch the volume
//! cubic collapse onto its triple root there.
//!
//! Run with: cargo run -p roegen --example vdw_critical_point

use roegen::state::VdWModel;

fn main() -> Result<(), roegen::Error> {
    // a = 27, b = 1, R = 8 puts the critical point at (1, 3, 1)
    let model = VdWModel::new(27.0, 1.0, 8.0, 1.0)?;
    let diagnostics = model.verify_critical();
    let critical = diagnostics.critical;

    println!(
        "critical point: P_c = {}  Q_c = {}  I_c = {}",
        critical.price(),
        critical.volume(),
        critical.stability()
    );
    println!(
        "dP/dQ   = {:.3e} (scaled {:.3e})",
        diagnostics.slope, diagnostics.slope_residual
    );
    println!(
        "d2P/dQ2 = {:.3e} (scaled {:.3e})",
        diagnostics.curvature, diagnostics.curvature_residual
    );

    // at (P_c, I_c) the iso-ips cubic has the triple root Q_c
    let roots = model.volume_roots(critical.price(), critical.stability())?;
    println!("volume roots at (P_c, I_c): {roots:?}");

    // above the critical stability the iso-ips is monotone: one root
    let above = model.volume_roots(critical.price(), 2.0 * critical.stability())?;
    println!("volume roots at (P_c, 2 I_c): {above:?}");

    // below it the surface folds; prices between the spinodal extrema cut
    // three roots bracketing the unstable branch
    let below = model.volume_roots(0.65 * critical.price(), 0.9 * critical.stability())?;
    println!("volume roots at (0.65 P_c, 0.9 I_c): {below:?}");
    for q in &below {
        let p = model.pressure(*q, 0.9 * critical.stability())?;
        println!("  pressure at Q = {q:.9}: {p:.12}");
    }
    Ok(())
}
