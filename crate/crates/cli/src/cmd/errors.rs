//! `ctrplace errors`: mean frontier errors of the approximate searches
//! against the exact frontier, averaged over seeds.

use ctrplace::pareto::{evo_place, exa_place, frontier_errors, rnd_place, SearchBudget};
use ctrplace::{Error, Result, Topology};

use crate::args::ErrorsArgs;
use crate::output::{enumeration_cap, write_atomic};

pub fn run(args: ErrorsArgs) -> Result<()> {
    if args.iterations.is_empty() {
        return Err(Error::InvalidArgument(
            "need at least one --iterations value".into(),
        ));
    }
    if args.iterations.contains(&0) {
        return Err(Error::InvalidArgument(
            "iteration budgets must be at least 1".into(),
        ));
    }
    if args.seeds == 0 {
        return Err(Error::InvalidArgument("--seeds must be at least 1".into()));
    }
    let topology = Topology::load(&args.topology, args.speed_kmms)?;
    let matrix = topology.delay_matrix();
    let optimal = exa_place(&matrix, args.controllers, enumeration_cap()?)?;

    let mut csv = String::from("algo,i_max,seeds,sw_err_ms,cc_err_ms\n");
    println!(
        "{}: {} controllers, exact frontier of {} point(s); seeds {}..{}",
        topology.name(),
        args.controllers,
        optimal.len(),
        args.seed,
        args.seed + args.seeds - 1
    );
    for &i_max in &args.iterations {
        for algo in ["rnd", "evo"] {
            let mut sw_sum = 0.0;
            let mut cc_sum = 0.0;
            for offset in 0..args.seeds {
                let budget = SearchBudget {
                    i_max,
                    seed: args.seed + offset,
                };
                let approx = match algo {
                    "rnd" => rnd_place(&matrix, args.controllers, budget),
                    _ => evo_place(&matrix, args.controllers, budget, &topology),
                };
                let (sw, cc) = frontier_errors(&optimal, &approx)?;
                sw_sum += sw;
                cc_sum += cc;
            }
            let k = args.seeds as f64;
            let (sw_mean, cc_mean) = (sw_sum / k, cc_sum / k);
            csv.push_str(&format!(
                "{algo},{i_max},{},{sw_mean},{cc_mean}\n",
                args.seeds
            ));
            println!("{algo} i_max={i_max}: sw_err {sw_mean:.4} ms, cc_err {cc_mean:.4} ms");
        }
    }
    let path = write_atomic(&args.out, "errors.csv", &csv)?;
    println!("wrote {}", path.display());
    Ok(())
}
