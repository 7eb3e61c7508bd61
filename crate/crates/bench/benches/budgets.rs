use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ntnlink::linkbudget::{downlink_budget, sweep, uplink_budget, LinkDirection, SweepVariable};
use ntnlink_bench::reference_inputs;

fn bench_budgets(c: &mut Criterion) {
    let inputs = reference_inputs();

    c.bench_function("downlink_budget", |b| {
        b.iter(|| {
            downlink_budget(
                black_box(&inputs.payload),
                &inputs.ue,
                &inputs.mask,
                &inputs.downlink,
                &inputs.channel,
                &inputs.mcs,
                &inputs.earth,
            )
            .unwrap()
        })
    });

    c.bench_function("uplink_budget", |b| {
        b.iter(|| {
            uplink_budget(
                black_box(&inputs.ue),
                &inputs.payload,
                &inputs.uplink,
                &inputs.channel,
                &inputs.mcs,
                &inputs.earth,
            )
            .unwrap()
        })
    });

    let elevations: Vec<f64> = (0..51).map(|i| 40.0 + i as f64).collect();
    c.bench_function("elevation_sweep_51", |b| {
        b.iter(|| {
            sweep(
                LinkDirection::Downlink,
                black_box(&inputs),
                SweepVariable::Elevation,
                &elevations,
            )
            .unwrap()
        })
    });
}

criterion_group!(benches, bench_budgets);
criterion_main!(benches);
