//! Map the Van der Waals surface onto the cusp catastrophe manifold: the
//! critical point goes to the origin, volume roots become stationary points
//! of the cusp potential, and the map inverts in closed form.
//!
//! Run with: cargo run -p roegen --example cusp_catastrophe

use roegen::catastrophe::{
    cusp_discriminant, cusp_potential, cusp_stationary_points, phi, phi_inverse,
    surface_residual, CuspCoords,
};
use roegen::state::{StatePoint, VdWModel};

fn main() -> Result<(), roegen::Error> {
    let model = VdWModel::new(27.0, 1.0, 8.0, 1.0)?;
    let critical = model.critical_point();

    // the critical point is the unique state mapping to the cusp origin
    let origin = phi(
        &model,
        &StatePoint::new(critical.price(), critical.volume(), critical.stability())?,
    );
    println!(
        "phi(critical) = ({}, {}, {})",
        origin.x(),
        origin.alpha(),
        origin.beta()
    );

    // any surface state lands on x^3 + alpha x + beta = 0
    let stability = 0.9 * critical.stability();
    let volume = 5.0;
    let state = StatePoint::new(model.pressure(volume, stability)?, volume, stability)?;
    let coords = phi(&model, &state);
    println!(
        "surface state -> (x, alpha, beta) = ({:.9}, {:.9}, {:.9}), residual {:.3e}",
        coords.x(),
        coords.alpha(),
        coords.beta(),
        surface_residual(&coords)
    );

    // and comes back through the closed-form inverse
    let back = phi_inverse(&model, &coords)?;
    println!(
        "phi^-1(phi(state)) = ({:.12}, {:.12}, {:.12})",
        back.price(),
        back.volume(),
        back.stability()
    );

    // the three volume roots at (P, I) are the three stationary points of
    // the cusp potential at (alpha, beta), transported through x = 1/Q - 1/(3b)
    let volumes = model.volume_roots(state.price(), stability)?;
    let stationary = cusp_stationary_points(coords.alpha(), coords.beta())?;
    let mapped: Vec<f64> = volumes
        .iter()
        .map(|q| 1.0 / q - 1.0 / (3.0 * model.covolume()))
        .rev()
        .collect();
    println!("volume roots:        {volumes:?}");
    println!("mapped to x:         {mapped:?}");
    println!("stationary points:   {stationary:?}");
    println!(
        "discriminant = {:.6} (> 0 means three stationary points)",
        cusp_discriminant(coords.alpha(), coords.beta())
    );

    // potential values separate the stable sheets from the unstable one
    for x in &stationary {
        let value = cusp_potential(&CuspCoords::new(*x, coords.alpha(), coords.beta()));
        println!("  f({x:.9}) = {value:.9}");
    }
    Ok(())
}
