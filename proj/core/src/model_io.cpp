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

#include "qsd/model_io.hpp"

#include <utility>

#include <json.hpp>

#include "qsd/io.hpp"

namespace qsd {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      data.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  Json out;
  out["dim"] = m.rows();
  out["data"] = std::move(data);
  return out;
}

Matrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("data")) {
    throw DataError("model document: " + what + " must be {dim, data}");
  }
  const Eigen::Index dim = j.at("dim").get<Eigen::Index>();
  const Json& data = j.at("data");
  if (dim < 1 || !data.is_array() ||
      data.size() != static_cast<std::size_t>(dim * dim)) {
    throw DataError("model document: " + what + " has inconsistent dim/data");
  }
  Matrix m(dim, dim);
  std::size_t idx = 0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c, ++idx) {
      const Json& cell = data.at(idx);
      if (!cell.is_array() || cell.size() != 2) {
        throw DataError("model document: " + what +
                        " entries must be [re, im] pairs");
      }
      m(r, c) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  return m;
}

}  // namespace

std::string model_to_json(const TrainedModel& model) {
  Json doc;
  doc["version"] = kModelFormatVersion;
  doc["kind"] = classifier_kind_name(model.kind());
  doc["copies"] = model.copies();
  doc["feature_dim"] = model.feature_dim();
  doc["priors"] = model.priors();
  Json centroids = Json::array();
  for (const DensityMatrix& c : model.centroids()) {
    centroids.push_back(matrix_to_json(c.mat()));
  }
  doc["centroids"] = std::move(centroids);
  Json effects = Json::array();
  for (const HermitianMatrix& e : model.measurement().effects()) {
    effects.push_back(matrix_to_json(e.entries()));
  }
  doc["effects"] = std::move(effects);
  return doc.dump(2) + "\n";
}

TrainedModel model_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DataError(std::string("model document is not valid JSON: ") +
                    e.what());
  }
  if (!doc.is_object()) {
    throw DataError("model document must be a JSON object");
  }
  if (!doc.contains("version") ||
      doc.at("version").get<std::string>() != kModelFormatVersion) {
    throw DataError("model document: missing or unsupported version, expected "
                    "\"qsd-model/1\"");
  }
  for (const char* key :
       {"kind", "copies", "feature_dim", "priors", "centroids", "effects"}) {
    if (!doc.contains(key)) {
      throw DataError(std::string("model document: missing field \"") + key +
                      "\"");
    }
  }
  const auto kind = classifier_kind_from_name(doc.at("kind").get<std::string>());
  if (!kind) {
    throw DataError("model document: unknown classifier kind");
  }
  const int copies = doc.at("copies").get<int>();
  const int feature_dim = doc.at("feature_dim").get<int>();
  const std::vector<double> priors =
      doc.at("priors").get<std::vector<double>>();

  std::vector<DensityMatrix> centroids;
  for (std::size_t i = 0; i < doc.at("centroids").size(); ++i) {
    centroids.push_back(DensityMatrix::from_matrix(
        matrix_from_json(doc.at("centroids").at(i),
                         "centroid " + std::to_string(i + 1))));
  }
  std::vector<HermitianMatrix> effects;
  for (std::size_t i = 0; i < doc.at("effects").size(); ++i) {
    effects.push_back(HermitianMatrix(matrix_from_json(
        doc.at("effects").at(i), "effect " + std::to_string(i + 1))));
  }

  try {
    return TrainedModel(*kind, copies, feature_dim, priors,
                        std::move(centroids),
                        Measurement(std::move(effects)));
  } catch (const Error& e) {
    throw DataError(std::string("model document is inconsistent: ") +
                    e.what());
  }
}

void save_model(const TrainedModel& model,
                const std::filesystem::path& path) {
  write_file_atomic(path, model_to_json(model));
}

TrainedModel load_model(const std::filesystem::path& path) {
  return model_from_json(read_file(path));
}

}  // namespace qsd
