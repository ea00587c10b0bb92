#pragma once

#include <filesystem>
#include <json.hpp>

#include "freelp/tensors.hpp"

namespace freelp {

using Json = nlohmann::json;

// Tensor interchange format:
//   { "n", "d", "m", "alphabet": "generators"|"signed",
//     "entries": [ { "index": [1-based], "re": [[..]], "im": [[..]] } ] }
// "im" is optional. Every structural problem raises ErrorKind::schema.

Json tensor_to_json(const CoeffTensor& t);
CoeffTensor tensor_from_json(const Json& j);

CoeffTensor load_tensor(const std::filesystem::path& path);
void save_tensor(const CoeffTensor& t, const std::filesystem::path& path);

/// Writes `text` to `path`, or to stdout when the path is empty or "-".
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace freelp
