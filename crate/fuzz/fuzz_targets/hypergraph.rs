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
use twoeig_core::formats::hypergraph::{emit_hypergraph, parse_hypergraph};

fuzz_target!(|data: &str| {
    if let Ok(h) = parse_hypergraph(data) {
        assert_eq!(parse_hypergraph(&emit_hypergraph(&h)).unwrap(), h);
        let _ = h.is_linear();
        let _ = twoeig_core::graph::representing_graph(&h);
    }
});
