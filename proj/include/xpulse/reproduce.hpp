/* Copyright 2026 The xpulse Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef XPULSE_REPRODUCE_HPP_
#define XPULSE_REPRODUCE_HPP_

#include <iosfwd>

namespace xpulse {

// Runs the full verification table, printing one PASS/FAIL line per row.
// Returns true iff every row passes. Deterministic output (fixed seeds,
// values printed to 10 significant digits).
bool run_acceptance(std::ostream& os);

}  // namespace xpulse

#endif  // XPULSE_REPRODUCE_HPP_
