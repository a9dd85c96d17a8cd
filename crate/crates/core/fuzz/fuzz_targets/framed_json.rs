#![no_main]

use libfuzzer_sys::fuzz_target;
use mdhom::bdiagram::FramedDiagram;
use mdhom::mdcurve::{detect_smooth, reconstruct_tree};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = FramedDiagram::from_json(text) {
        assert_eq!(FramedDiagram::from_json(&f.to_json()).expect("round trip"), f);
        let _ = reconstruct_tree(&f);
        let _ = detect_smooth(&f);
    }
});
