#![no_main]

use libfuzzer_sys::fuzz_target;
use snchar::Decomposition;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = Decomposition::from_json(text) {
        let first = d.to_json();
        let again = Decomposition::from_json(&first).expect("own output parses");
        assert_eq!(again, d);
        assert_eq!(again.to_json(), first);
    }
});
