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
use twoeig_core::formats::edge_list::{emit_edge_list, parse_edge_list};

fuzz_target!(|data: &str| {
    if let Ok(g) = parse_edge_list(data) {
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }
});
