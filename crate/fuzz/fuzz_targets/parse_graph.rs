#![no_main]

use caring_core::io::{read_graph, write_graph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: &str| {
    // Rejection is fine; a panic or a lossy round trip is not.
    if let Ok(g) = read_graph(input) {
        assert_eq!(read_graph(&write_graph(&g)).unwrap(), g);
    }
});
