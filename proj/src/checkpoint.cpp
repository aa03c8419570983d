#include "marl/checkpoint.hpp"

#include <fstream>

#include "marl/errors.hpp"

namespace marl::nn {

using nlohmann::json;

nlohmann::json mlp_to_json(const MlpParams& params) {
    json j;
    j["schema"] = kMlpSchema;
    j["widths"] = params.widths();
    json layers = json::array();
    for (const auto& l : params.layers) {
        json jl;
        jl["activation"] = l.act == Activation::relu ? "relu" : "identity";
        jl["weight"] = l.weight.data;
        jl["bias"] = l.bias.data;
        layers.push_back(std::move(jl));
    }
    j["layers"] = std::move(layers);
    return j;
}

MlpParams mlp_from_json(const nlohmann::json& j) {
    if (j.value("schema", "") != kMlpSchema) {
        throw IoError("mlp checkpoint: unknown schema tag '" + j.value("schema", "") + "'");
    }
    const auto widths = j.at("widths").get<std::vector<int>>();
    if (widths.size() < 2) throw IoError("mlp checkpoint: invalid widths");
    const auto& jlayers = j.at("layers");
    if (jlayers.size() + 1 != widths.size()) throw IoError("mlp checkpoint: layer count mismatch");
    MlpParams params;
    for (size_t li = 0; li < jlayers.size(); ++li) {
        const auto& jl = jlayers[li];
        MlpLayer layer;
        const std::string act = jl.at("activation").get<std::string>();
        if (act == "relu") {
            layer.act = Activation::relu;
        } else if (act == "identity") {
            layer.act = Activation::identity;
        } else {
            throw IoError("mlp checkpoint: unknown activation '" + act + "'");
        }
        layer.weight = Tensor2(widths[li], widths[li + 1], jl.at("weight").get<std::vector<double>>());
        layer.bias = Tensor2(1, widths[li + 1], jl.at("bias").get<std::vector<double>>());
        params.layers.push_back(std::move(layer));
    }
    if (params.layers.back().act != Activation::identity) {
        throw IoError("mlp checkpoint: final activation must be identity");
    }
    return params;
}

void atomic_write_text(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + tmp.string());
        out << content;
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

nlohmann::json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& err) {
        throw IoError("invalid JSON in " + path.string() + ": " + err.what());
    }
    return j;
}

void save_json_file(const nlohmann::json& j, const std::filesystem::path& path) {
    atomic_write_text(path, j.dump(2) + "\n");
}

void save_mlp(const MlpParams& params, const std::filesystem::path& path) {
    save_json_file(mlp_to_json(params), path);
}

MlpParams load_mlp(const std::filesystem::path& path) {
    return mlp_from_json(load_json_file(path));
}

}  // namespace marl::nn
