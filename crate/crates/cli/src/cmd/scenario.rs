//! `ctrplace scenario`: analytic flow-setup predictions next to the
//! simulated values for the measured deployment scenarios.

use std::fs::OpenOptions;
use std::io::BufWriter;

use ctrplace::reaction::scenario_setup;
use ctrplace::sim::simulate_l2switch_flow;
use ctrplace::{reaction, Result};

use crate::args::ScenarioArgs;
use crate::output::write_atomic;

pub fn run(args: ScenarioArgs) -> Result<()> {
    let mut csv = String::from("scenario,n_sw,predicted_ms,simulated_ms\n");
    let mut trace_out = match &args.trace {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)?;
            }
            Some(BufWriter::new(
                OpenOptions::new().create(true).append(true).open(path)?,
            ))
        }
        None => None,
    };

    let mut rows = 0usize;
    for n_sw in args.nsw.values() {
        let setup = scenario_setup(args.name, n_sw, args.tc_ms)?;
        let predicted = reaction::arp_setup_time(&setup.matrix, &setup.view, &setup.flow);
        let (simulated, trace) = simulate_l2switch_flow(
            &setup.topology,
            &setup.matrix,
            &setup.view,
            setup.src,
            setup.dst,
            args.tc_ms,
        )?;
        if let Some(w) = trace_out.as_mut() {
            trace.write_jsonl(w)?;
        }
        csv.push_str(&format!("{},{n_sw},{predicted},{simulated}\n", args.name));
        rows += 1;
    }

    let path = write_atomic(&args.out, "scenario.csv", &csv)?;
    println!("{}: {rows} row(s) written to {}", args.name, path.display());
    if let Some(trace_path) = &args.trace {
        println!("traces appended to {}", trace_path.display());
    }
    Ok(())
}
