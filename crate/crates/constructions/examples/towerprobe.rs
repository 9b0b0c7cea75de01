use constructions::{spiral_tower, SpiralTowerParams, TurnPattern};
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let r = spiral_tower(&SpiralTowerParams {
        n_triangles: 3,
        q: 3.5,
        apex_offset: 1.0,
        axis_jitter: 0.08,
        base_side: 1.0,
        seed: 0,
        turns: TurnPattern::Uniform,
    });
    println!("elapsed {:?}", t0.elapsed());
    match r {
        Ok(t) => {
            println!("ok: levels {}", t.levels.len());
            for l in &t.levels {
                println!(
                    "level {}: eps={:.4} d=({:.4},{:.4},{:.4}) gap={:.4} cs={:.5} ds={:.5} α={:.4} γ={:.4} retries={} q={} off={}",
                    l.level, l.eps, l.delta_closest, l.delta_second, l.delta_third, l.gap,
                    l.corner_shortcut, l.descent_slack, l.alpha, l.gamma, l.retries, l.q_used, l.apex_offset_used
                );
            }
        }
        Err(e) => println!("err: {e}"),
    }
}
