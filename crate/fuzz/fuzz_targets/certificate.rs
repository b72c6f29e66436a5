// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

#![no_main]
use libfuzzer_sys::fuzz_target;
use twoeig_core::witness::{emit_certificate, parse_certificate, verify_certificate};

fuzz_target!(|data: &str| {
    let Ok(cert) = parse_certificate(data) else {
        return;
    };
    let text = emit_certificate(&cert).expect("parsed target fits in graph6");
    assert_eq!(parse_certificate(&text).unwrap(), cert);
    if cert.matrix.rows() <= 64 {
        let _ = verify_certificate(&cert);
    }
});
