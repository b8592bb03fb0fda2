// Copyright 2026 The liebkagome Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <iosfwd>

#include "lk/model.hpp"
#include "lk/rng.hpp"

namespace lk {

// Small random model for oracle comparisons (N <= 20): J in [0.3, 1],
// J' in [0.3, 1.7], h in [0, 0.6] on one of three substrates chosen by
// kind % 3: the L=1 corner lattice (8 sites), the L=1 edge lattice (16
// sites), or the L=2 corner lattice with 1..7 random sites removed.
SpinModel random_oracle_model(Xoshiro256& rng, int kind);

// Exact enumeration against SA and SQA on small models, plus the chain
// embedding round trip.  Prints one line per check; true when all pass.
bool run_oracle_suite(std::ostream& out, std::uint64_t seed = 2024, unsigned workers = 1);

} // namespace lk
