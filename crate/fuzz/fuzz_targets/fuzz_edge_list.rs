#![no_main]

use libfuzzer_sys::fuzz_target;
use tmc_lab::formats::{emit_edge_list, parse_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_edge_list(text) {
        let sum: usize = (0..g.n()).map(|u| g.degree(u)).sum();
        assert_eq!(sum, 2 * g.m());
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).expect("round trip"), g);
    }
});
