// Copyright 2026 The qsd developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>

#include "qsd/classify.hpp"

namespace qsd {

/// Version tag of the model document format.
inline constexpr std::string_view kModelFormatVersion = "qsd-model/1";

/// Serializes a model as a single JSON document:
///   {version, kind, copies, feature_dim, priors, centroids, effects}
/// where centroids and effects are {dim, data} with data a row-major array
/// of [re, im] pairs. Serialization is deterministic: equal models produce
/// byte-identical documents.
std::string model_to_json(const TrainedModel& model);

/// Parses and fully validates a model document (matrix invariants included).
TrainedModel model_from_json(const std::string& text);

/// model_to_json plus an atomic file write.
void save_model(const TrainedModel& model, const std::filesystem::path& path);

TrainedModel load_model(const std::filesystem::path& path);

}  // namespace qsd
