use heisenkit::exec::ExecMode;
use heisenkit::fixtures::{run_fixture, FixtureOptions, FIXTURE_IDS};
use std::time::Instant;

fn main() {
    let opts = FixtureOptions { seed: 7, trials: 3, mode: ExecMode::default() };
    let total = Instant::now();
    for id in FIXTURE_IDS {
        let t = Instant::now();
        let rep = run_fixture(id, &opts).unwrap();
        println!("{:>10} {:>8.2?}  pass={}", id, t.elapsed(), rep.pass);
        if !rep.pass {
            for c in &rep.checks {
                if !c.pass {
                    println!("    FAIL {}: {}", c.name, c.details);
                }
            }
        }
    }
    println!("total: {:?}", total.elapsed());
}
