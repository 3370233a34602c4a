#![no_main]

use libfuzzer_sys::fuzz_target;
use snchar::ClassFunction;

fuzz_target!(|data: &[u8]| {
    if let Ok(f) = serde_json::from_slice::<ClassFunction>(data) {
        let json = serde_json::to_string(&f).unwrap();
        let back: ClassFunction = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
});
