#![no_main]

use libfuzzer_sys::fuzz_target;
use mdhom::bdiagram::{jumping_rates, BDiagram};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(d) = BDiagram::from_json(text) {
        let back = BDiagram::from_json(&d.to_json_value().to_string()).expect("round trip");
        assert_eq!(back, d);
        let _ = jumping_rates(&[&d]);
    }
});
