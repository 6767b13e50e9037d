#![no_main]

use caring_core::io::{read_certificate, write_certificate};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: &str| {
    if let Ok(cert) = read_certificate(input) {
        assert_eq!(read_certificate(&write_certificate(&cert)).unwrap(), cert);
    }
});
