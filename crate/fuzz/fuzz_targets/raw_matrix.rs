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
use twoeig_core::formats::matrix::parse_raw_matrix;
use twoeig_core::oracle::eigensolve_symmetric;

fuzz_target!(|data: &str| {
    if let Ok(m) = parse_raw_matrix(data) {
        if m.len() <= 16 {
            // Errors are fine; panics are not.
            let _ = eigensolve_symmetric(&m, 20);
        }
    }
});
