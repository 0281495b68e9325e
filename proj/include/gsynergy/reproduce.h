// Copyright 2026 The gsynergy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GSYNERGY_REPRODUCE_H
#define GSYNERGY_REPRODUCE_H

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "gsynergy/sweep.h"

namespace gsynergy {

/// Outcome of a built-in reproduction recipe.
struct RecipeResult {
    std::string target;
    bool pass = false;
    nlohmann::ordered_json details;
    /// Populated by appendix-plot only.
    SweepSpec sweep;
    std::vector<SweepRecord> records;
};

/// appendix-plot, eq1-eigenvalues, eq45-equivalence, extension-check,
/// superactivation-points.
const std::vector<std::string> &recipe_names();

/// Throws kInvalidArgument for unknown targets.
RecipeResult run_recipe(const std::string &target, const Tolerances &tol = {}, std::size_t threads = 1);

/// 2x2 two-mode squeezer relating the (a, b) corner channel to eq1_ppt.
Matrix equivalence_squeezer();

}  // namespace gsynergy

#endif
