#![no_main]

use libfuzzer_sys::fuzz_target;
use mdhom::simplicial::{homology, SimplicialPair};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // face closure is exponential in simplex size
    if text.split(']').any(|chunk| chunk.matches(',').count() > 8) {
        return;
    }
    if let Ok(p) = SimplicialPair::from_json(text) {
        // keep boundary matrices small
        if p.simplices().count() <= 64 {
            let h = homology(&p);
            assert_eq!(h.euler_characteristic(), p.euler_characteristic());
        }
    }
});
