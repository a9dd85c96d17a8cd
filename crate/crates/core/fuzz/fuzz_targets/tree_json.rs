#![no_main]

use libfuzzer_sys::fuzz_target;
use mdhom::eggers::{export_tree, parse_tree_json, tree_isomorphic, TreeFormat};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(t) = parse_tree_json(text) {
        let back = parse_tree_json(&export_tree(&t, TreeFormat::Json)).expect("export re-parses");
        assert!(tree_isomorphic(&t, &back, true));
        let _ = export_tree(&t, TreeFormat::Dot);
    }
});
