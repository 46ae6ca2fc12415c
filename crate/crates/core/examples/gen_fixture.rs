//! Regenerate the synthetic fixture:
//! `cargo run -p lyndon-order --example gen_fixture > fixtures/synthetic_acgt_100k.fa`

use lyndon_order::io::{synthetic_sequence, to_fasta};

pub const SEED: u64 = 20_240_601;
pub const LEN: usize = 100_000;

fn main() {
    let seq = synthetic_sequence(b"ACGT", LEN, SEED);
    print!(
        "{}",
        to_fasta(&format!("synthetic ACGT length={LEN} seed={SEED}"), &seq)
    );
}
