#![no_main]

use caring_core::designs::{is_resolvable, kts_coloring};
use caring_core::io::{read_kts, write_kts};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: &str| {
    if let Ok(ks) = read_kts(input) {
        // the loader only accepts resolvable systems
        assert!(is_resolvable(&ks).passed());
        assert!(kts_coloring(&ks).is_ok());
        assert_eq!(read_kts(&write_kts(&ks)).unwrap(), ks);
    }
});
