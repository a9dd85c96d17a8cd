#![no_main]

use libfuzzer_sys::fuzz_target;
use mdhom::puiseux::parse_series;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = parse_series(text) {
        // Display output must parse back to the same series.
        let again = parse_series(&s.to_string()).expect("display re-parses");
        assert_eq!(again, s);
    }
});
