#![no_main]

use caring_core::io::{read_rounds, write_rounds};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: &str| {
    if let Ok(r) = read_rounds(input) {
        assert_eq!(read_rounds(&write_rounds(&r)).unwrap(), r);
    }
});
