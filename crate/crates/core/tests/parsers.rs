//! Stable-toolchain counterpart of the fuzz targets: replays the checked-in
//! seed corpora and throws arbitrary input at every parser.

use std::fs;
use std::path::Path;

use proptest::prelude::*;
use snchar::{ClassFunction, Decomposition, Partition};

fn check_partition_text(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(lambda) = text.parse::<Partition>() {
        assert!(lambda.parts().windows(2).all(|w| w[0] >= w[1]));
        assert!(lambda.parts().iter().all(|&p| p > 0));
        assert_eq!(lambda.to_string().parse::<Partition>().unwrap(), lambda);
    }
    if let Ok(lambda) = serde_json::from_slice::<Partition>(data) {
        let json = serde_json::to_string(&lambda).unwrap();
        assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), lambda);
    }
}

fn check_decomposition(data: &[u8]) -> bool {
    let Ok(text) = std::str::from_utf8(data) else {
        return false;
    };
    match Decomposition::from_json(text) {
        Ok(d) => {
            let first = d.to_json();
            let again = Decomposition::from_json(&first).unwrap();
            assert_eq!(again.to_json(), first);
            true
        }
        Err(_) => false,
    }
}

fn check_class_function(data: &[u8]) -> bool {
    match serde_json::from_slice::<ClassFunction>(data) {
        Ok(f) => {
            let json = serde_json::to_string(&f).unwrap();
            let back: ClassFunction = serde_json::from_str(&json).unwrap();
            assert_eq!(serde_json::to_string(&back).unwrap(), json);
            true
        }
        Err(_) => false,
    }
}

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, Vec<u8>)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            (path.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn partition_seeds() {
    for (_, data) in seeds("parse_partition") {
        check_partition_text(&data);
    }
}

#[test]
fn decomposition_seeds() {
    for (name, data) in seeds("decomposition_json") {
        // the n0 seed is a deliberately invalid document
        assert_eq!(check_decomposition(&data), name != "n0", "{name}");
    }
}

#[test]
fn class_function_seeds() {
    for (name, data) in seeds("class_function_json") {
        assert!(check_class_function(&data), "{name}");
    }
}

#[test]
fn hostile_documents_are_rejected_cheaply() {
    // claims to be S_1000 but has two entries; must not enumerate p(1000)
    let big = r#"[{"class":[1000],"value":"1"},{"class":[999,1],"value":"1"}]"#;
    assert!(!check_class_function(big.as_bytes()));
    let big = r#"{"n":500,"index":"1","terms":[{"mu":[1000],"mult":"1"}]}"#;
    assert!(!check_decomposition(big.as_bytes()));
    assert!(!check_decomposition(br#"{"n":18446744073709551615,"index":"1","terms":[]}"#));
    check_partition_text(b"18446744073709551615,18446744073709551615");
    assert!("18446744073709551615,1".parse::<Partition>().is_err());
}

proptest! {
    #[test]
    fn arbitrary_bytes_never_panic(data in prop::collection::vec(any::<u8>(), 0..64)) {
        check_partition_text(&data);
        check_decomposition(&data);
        check_class_function(&data);
    }

    #[test]
    fn partition_like_text_never_panics(text in "[()0-9, ]{0,24}") {
        check_partition_text(text.as_bytes());
    }

    #[test]
    fn mutated_documents_never_panic(
        pos in 0usize..200,
        byte in any::<u8>(),
    ) {
        let base = r#"{"n":2,"index":"6","terms":[{"mu":[4],"mult":"1"},{"mu":[3,1],"mult":"1"},{"mu":[2,2],"mult":"1"},{"mu":[2,1,1],"mult":"0"},{"mu":[1,1,1,1],"mult":"0"}]}"#;
        let mut data = base.as_bytes().to_vec();
        let i = pos % data.len();
        data[i] = byte;
        check_decomposition(&data);
        let cf = r#"[{"class":[3],"value":"1"},{"class":[2,1],"value":"-1"},{"class":[1,1,1],"value":"1"}]"#;
        let mut data = cf.as_bytes().to_vec();
        let i = pos % data.len();
        data[i] = byte;
        check_class_function(&data);
    }
}
