//! The building blocks of the guided step, evaluated by hand on small inputs.
//!
//! ```bash
//! cargo run -p esoa --example estimator_internals
//! ```

use esoa::optimizer::{
    direction_correction, estimate, integrated_gradient, practical_gradient, SquadState,
};
use esoa::Fitness;

fn main() -> esoa::Result<()> {
    let w = [0.5, -0.25];
    let x = [2.0, 4.0];
    let y = 3.0;

    let predicted = estimate(&w, &x)?;
    let (g_hat, d_hat) = practical_gradient(&w, &x, y)?;
    println!("prediction w.x = {predicted}, observed {y}");
    println!("error gradient {g_hat:?}, direction {d_hat:.4?}");

    // Correction relative to a better point recorded earlier.
    let d_h = direction_correction(&x, y, &[1.0, 4.0], 1.0, &[0.0, 0.0])?;
    let d_g = direction_correction(&x, y, &[0.0, 0.0], 0.0, &[0.6, 0.8])?;
    println!("squad-best correction {d_h:.4?}, swarm-best correction {d_g:.4?}");

    let g = integrated_gradient(&d_hat, &d_h, &d_g, 0.2, 0.1)?;
    println!("blended gradient {g:.4?}");

    let fitness = Fitness {
        value: y,
        raw_value: y,
        violation: 0.0,
    };
    let mut squad = SquadState::new(x.to_vec(), fitness, w.to_vec());
    for k in 1..=3 {
        squad.update_weights(&g);
        println!(
            "after update {k}: w = {:.4?}, m = {:.4?}, v = {:.4?}",
            squad.w, squad.m, squad.v
        );
    }
    Ok(())
}
