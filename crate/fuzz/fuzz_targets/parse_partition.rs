#![no_main]

use libfuzzer_sys::fuzz_target;
use snchar::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(lambda) = text.parse::<Partition>() {
        assert!(lambda.parts().windows(2).all(|w| w[0] >= w[1]));
        assert!(lambda.parts().iter().all(|&p| p > 0));
        let shown = lambda.to_string();
        assert_eq!(shown.parse::<Partition>().unwrap(), lambda);
    }
    if let Ok(lambda) = serde_json::from_slice::<Partition>(data) {
        let json = serde_json::to_string(&lambda).unwrap();
        assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), lambda);
    }
});
