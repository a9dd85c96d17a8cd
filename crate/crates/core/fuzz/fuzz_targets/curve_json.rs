#![no_main]

use libfuzzer_sys::fuzz_target;
use mdhom::mdcurve::md_diagram;
use mdhom::puiseux::Curve;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(c) = Curve::from_json(text) else { return };
    assert_eq!(Curve::from_json(&c.to_json()).expect("canonical json"), c);
    if c.len() <= 8 {
        let _ = md_diagram(&c);
        let _ = c.conjugacy_warnings();
    }
});
