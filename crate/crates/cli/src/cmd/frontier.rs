//! `ctrplace frontier`: compute and export a Pareto frontier.

use serde_json::json;

use ctrplace::pareto::{
    ctr_ctr_reduction_factor, evo_place, exa_place, exa_place_with_scatter, extreme_gains,
    rnd_place, ParetoSet, SearchBudget,
};
use ctrplace::{Error, Result, Topology};

use crate::args::{Algo, FrontierArgs};
use crate::output::{delay_points_csv, enumeration_cap, join_ids, write_atomic};

pub fn run(args: FrontierArgs) -> Result<()> {
    let topology = Topology::load(&args.topology, args.speed_kmms)?;
    let matrix = topology.delay_matrix();
    if args.controllers == 0 || args.controllers > topology.node_count() {
        return Err(Error::InvalidArgument(format!(
            "cannot place {} controllers on {} nodes",
            args.controllers,
            topology.node_count()
        )));
    }
    if args.scatter && args.algo != Algo::Exa {
        return Err(Error::InvalidArgument(
            "--scatter requires the exhaustive algorithm".into(),
        ));
    }
    if args.algo != Algo::Exa && args.iterations == 0 {
        return Err(Error::InvalidArgument(
            "--iterations must be at least 1".into(),
        ));
    }

    let budget = SearchBudget {
        i_max: args.iterations,
        seed: args.seed,
    };
    let mut scatter: Option<Vec<_>> = None;
    let frontier: ParetoSet = match args.algo {
        Algo::Exa if args.scatter => {
            let (front, all) =
                exa_place_with_scatter(&matrix, args.controllers, enumeration_cap()?)?;
            scatter = Some(all);
            front
        }
        Algo::Exa => exa_place(&matrix, args.controllers, enumeration_cap()?)?,
        Algo::Rnd => rnd_place(&matrix, args.controllers, budget),
        Algo::Evo => evo_place(&matrix, args.controllers, budget, &topology),
    };

    let frontier_path = write_atomic(
        &args.out,
        "frontier.csv",
        &delay_points_csv(frontier.points()),
    )?;
    if let Some(all) = &scatter {
        write_atomic(&args.out, "scatter.csv", &delay_points_csv(all))?;
    }

    let gains = extreme_gains(&frontier)?;
    let reduction = ctr_ctr_reduction_factor(&frontier)?;
    let as_json = |x: f64| if x.is_finite() { json!(x) } else { json!(null) };
    let gains_json = json!({
        "topology": topology.name(),
        "controllers": args.controllers,
        "frontier_size": frontier.len(),
        "sw_ratio": as_json(gains.sw_ratio),
        "cc_ratio": as_json(gains.cc_ratio),
        "sw_ratio_infinite": gains.sw_ratio_infinite,
        "cc_ratio_infinite": gains.cc_ratio_infinite,
        "ctr_ctr_reduction_factor": as_json(reduction),
        "min_sw_point": {
            "placement": join_ids(gains.min_sw_point.placement.controllers()),
            "sw_ctr_ms": gains.min_sw_point.sw_ctr_ms,
            "ctr_ctr_ms": gains.min_sw_point.ctr_ctr_ms,
        },
        "min_cc_point": {
            "placement": join_ids(gains.min_cc_point.placement.controllers()),
            "sw_ctr_ms": gains.min_cc_point.sw_ctr_ms,
            "ctr_ctr_ms": gains.min_cc_point.ctr_ctr_ms,
        },
    });
    write_atomic(&args.out, "gains.json", &format!("{:#}\n", gains_json))?;

    println!(
        "{}: {} controllers, frontier of {} point(s){}",
        topology.name(),
        args.controllers,
        frontier.len(),
        scatter
            .as_ref()
            .map(|a| format!(", {} points enumerated", a.len()))
            .unwrap_or_default()
    );
    println!(
        "extreme gains: sw ratio {:.3}, cc ratio {:.3}; ctr-ctr reduction factor at 2x sw budget: {:.3}",
        gains.sw_ratio, gains.cc_ratio, reduction
    );
    println!("wrote {}", frontier_path.display());
    Ok(())
}
