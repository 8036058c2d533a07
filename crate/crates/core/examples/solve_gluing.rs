//! Newton iteration on the face and edge equations from a perturbed start.

use flagdual::complex::{census, check, jacobian_rank, perturb, solve_consistency};

fn main() -> flagdual::error::Result<()> {
    let exact = census::figure_eight_geometric();
    println!("jacobian rank at the solution: {}", jacobian_rank(&exact, 1e-9));
    for eps in [1e-3, 1e-2, 5e-2] {
        let start = perturb(&exact, eps, &[(0.6, -0.3), (-0.2, 0.8), (0.5, 0.5)])?;
        let sol = solve_consistency(&start)?;
        println!(
            "eps {eps:e}: start residual {:.2e}, {} steps, residual {:.2e}, volume {:.12}",
            check(&start).max_residual(),
            sol.iterations,
            sol.residual,
            sol.complex.volume()
        );
        let dual = sol.complex.dualize()?;
        println!("  dual volume {:.12}", dual.volume());
    }
    Ok(())
}
