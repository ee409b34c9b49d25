//! `decindex bench`: per-call operation counts and wall time by index size.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::Instant;

use decindex::instrument::measure;
use decindex::{decode, encode, BigUint, Counted, Index, OpCounts};

pub const DEFAULT_INDICES: [&str; 5] = [
    "1000",
    "1000000",
    "1000000000",
    "1000000000000",
    "1000000000000000000",
];

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub index: BigUint,
    pub digits: usize,
    pub level: BigUint,
    pub decode_ops: OpCounts,
    pub encode_ops: OpCounts,
    pub decode_ns: f64,
    pub encode_ns: f64,
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    /// Every row performed exactly the same arithmetic.
    pub fn op_counts_identical(&self) -> bool {
        self.rows.windows(2).all(|w| {
            w[0].decode_ops == w[1].decode_ops && w[0].encode_ops == w[1].encode_ops
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::from(
            "index,digits,level,decode_mul_div,decode_add_sub,encode_mul_div,encode_add_sub,decode_ns,encode_ns\n",
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{:.0},{:.0}",
                r.index,
                r.digits,
                r.level,
                r.decode_ops.mul_div(),
                r.decode_ops.add + r.decode_ops.sub,
                r.encode_ops.mul_div(),
                r.encode_ops.add + r.encode_ops.sub,
                r.decode_ns,
                r.encode_ns,
            );
        }
        let _ = writeln!(
            out,
            "op counts identical across indices: {}",
            if self.op_counts_identical() { "yes" } else { "no" }
        );
        out
    }
}

pub fn run_bench(indices: &[BigUint], reps: u32) -> BenchReport {
    let reps = reps.max(1);
    let rows = indices
        .iter()
        .map(|n| {
            let counted = Index::new(Counted(n.clone())).expect("bench indices are positive");
            let (tuple, decode_ops) = measure(|| decode(&counted));
            let (_, encode_ops) = measure(|| encode(&tuple));

            let plain = Index::new(n.clone()).expect("bench indices are positive");
            let plain_tuple = decode(&plain);
            let start = Instant::now();
            for _ in 0..reps {
                black_box(decode(black_box(&plain)));
            }
            let decode_ns = start.elapsed().as_nanos() as f64 / f64::from(reps);
            let start = Instant::now();
            for _ in 0..reps {
                black_box(encode(black_box(&plain_tuple)));
            }
            let encode_ns = start.elapsed().as_nanos() as f64 / f64::from(reps);

            BenchRow {
                index: n.clone(),
                digits: n.to_string().len(),
                level: decindex::complexity(&plain_tuple),
                decode_ops,
                encode_ops,
                decode_ns,
                encode_ns,
            }
        })
        .collect();
    BenchReport { rows }
}
