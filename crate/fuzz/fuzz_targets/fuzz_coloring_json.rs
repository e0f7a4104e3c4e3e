#![no_main]

use libfuzzer_sys::fuzz_target;
use tmc_lab::coloring::TotalColoring;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(col) = TotalColoring::from_json(text) {
        let emitted = serde_json::to_string(&col.to_json()).unwrap();
        let back = TotalColoring::from_json(&emitted).expect("round trip");
        assert_eq!(back, col);
        let _ = col.num_colors();
    }
});
