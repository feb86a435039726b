//! `ctrplace react`: MDO/SDO reaction averages per placement and data owner.

use ctrplace::placement::{avg_sw_ctr_delay, placement_count, Placement};
use ctrplace::reaction::owner_sweep_with_rule;
use ctrplace::{Error, Result, Topology};

use crate::args::{LeaderChoice, Model, ReactArgs};
use crate::output::{enumeration_cap, join_ids, write_atomic};

pub fn run(args: ReactArgs) -> Result<()> {
    let topology = Topology::load(&args.topology, args.speed_kmms)?;
    let matrix = topology.delay_matrix();
    let n = topology.node_count();

    let placements: Vec<Placement> = match &args.placement {
        Some(ids) => {
            let p = Placement::new(ids.clone(), n)?;
            if p.len() != args.controllers {
                return Err(Error::InvalidArgument(format!(
                    "--placement lists {} nodes but --controllers is {}",
                    p.len(),
                    args.controllers
                )));
            }
            vec![p]
        }
        None => enumerate_all(n, args.controllers)?,
    };

    let mut csv = String::from(match args.model {
        Model::Mdo => "placement,mdo_avg_ms\n",
        _ => "placement,leader_node,mdo_avg_ms,sdo_avg_ms,is_optimal_owner,min_reduction_factor,max_reduction_factor\n",
    });

    let mut rows = 0usize;
    for p in &placements {
        let ids = join_ids(p.controllers());
        let mdo_avg = 2.0 * avg_sw_ctr_delay(&matrix, p);
        if args.model == Model::Mdo {
            csv.push_str(&format!("{ids},{mdo_avg}\n"));
            rows += 1;
            continue;
        }
        let sweep = owner_sweep_with_rule(&matrix, p, args.majority_rule)?;
        let owners: Vec<usize> = match args.leader {
            LeaderChoice::Sweep => (0..p.len()).collect(),
            LeaderChoice::Fixed(idx) => {
                if idx >= p.len() {
                    return Err(Error::InvalidArgument(format!(
                        "leader index {idx} out of range for {} controllers",
                        p.len()
                    )));
                }
                vec![idx]
            }
        };
        for owner in owners {
            csv.push_str(&format!(
                "{ids},{},{mdo_avg},{},{},{},{}\n",
                p.node_of(owner),
                sweep.per_owner_ms[owner],
                owner == sweep.optimal_owner,
                sweep.min_reduction_factor,
                sweep.max_reduction_factor
            ));
            rows += 1;
        }
    }

    let path = write_atomic(&args.out, "react.csv", &csv)?;
    println!(
        "{}: {} placement(s), {} row(s) written to {}",
        topology.name(),
        placements.len(),
        rows,
        path.display()
    );
    Ok(())
}

fn enumerate_all(n: usize, c: usize) -> Result<Vec<Placement>> {
    if c == 0 || c > n {
        return Err(Error::InvalidArgument(format!(
            "cannot place {c} controllers on {n} nodes"
        )));
    }
    let cap = enumeration_cap()?;
    let needed = placement_count(n, c)?;
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..c).collect();
    loop {
        out.push(Placement::new(combo.clone(), n).expect("combination is valid"));
        let mut i = c;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if combo[i] != i + n - c {
                break;
            }
        }
        combo[i] += 1;
        for j in i + 1..c {
            combo[j] = combo[j - 1] + 1;
        }
    }
}
