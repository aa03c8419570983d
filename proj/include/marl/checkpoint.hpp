#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "marl/mlp.hpp"

namespace marl::nn {

// Versioned JSON checkpoint layout. Doubles are serialized with a shortest
// round-trip representation, so load(save(p)) == p bit-exactly.
inline constexpr const char* kMlpSchema = "marl.mlp/1";

nlohmann::json mlp_to_json(const MlpParams& params);
MlpParams mlp_from_json(const nlohmann::json& j);

void save_mlp(const MlpParams& params, const std::filesystem::path& path);
MlpParams load_mlp(const std::filesystem::path& path);

// Write-then-rename so readers never observe a partial file.
void atomic_write_text(const std::filesystem::path& path, const std::string& content);
nlohmann::json load_json_file(const std::filesystem::path& path);
void save_json_file(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace marl::nn
