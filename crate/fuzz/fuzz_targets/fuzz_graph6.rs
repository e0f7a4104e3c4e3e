#![no_main]

use libfuzzer_sys::fuzz_target;
use tmc_lab::formats::{emit_graph6, parse_graph6};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_graph6(text) {
        // anything accepted must round-trip bit-exactly
        let emitted = emit_graph6(&g).expect("parsed graphs are emittable");
        let back = parse_graph6(&emitted).expect("emitted graph6 is parseable");
        assert_eq!(back, g);
    }
});
