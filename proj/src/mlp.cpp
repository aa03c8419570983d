#include "marl/mlp.hpp"

#include <cmath>
#include <string>

#include "marl/errors.hpp"
#include "marl/rng.hpp"

namespace marl::nn {

std::vector<int> MlpParams::widths() const {
    std::vector<int> w;
    if (layers.empty()) return w;
    w.push_back(layers.front().weight.rows);
    for (const auto& l : layers) w.push_back(l.weight.cols);
    return w;
}

size_t MlpParams::parameter_count() const {
    size_t n = 0;
    for (const auto& l : layers) n += l.weight.size() + l.bias.size();
    return n;
}

bool Gradients::all_finite() const {
    for (const auto& l : layers) {
        if (!l.weight_grad.all_finite() || !l.bias_grad.all_finite()) return false;
    }
    return input_grad.all_finite();
}

MlpParams mlp_init(const std::vector<int>& layer_widths, uint64_t seed) {
    if (layer_widths.size() < 2) throw ConfigError("mlp_init: need at least input and output widths");
    for (int w : layer_widths) {
        if (w < 1) throw ConfigError("mlp_init: widths must be >= 1");
    }
    MlpParams params;
    for (size_t l = 0; l + 1 < layer_widths.size(); ++l) {
        const int fan_in = layer_widths[l];
        const int fan_out = layer_widths[l + 1];
        const double limit = std::sqrt(6.0 / (fan_in + fan_out));
        MlpLayer layer;
        layer.weight = Tensor2(fan_in, fan_out);
        layer.bias = Tensor2(1, fan_out);
        layer.act = (l + 2 == layer_widths.size()) ? Activation::identity : Activation::relu;
        auto rng = seeded_stream(seed, "mlp-init", l);
        for (double& v : layer.weight.data) v = uniform_range(rng, -limit, limit);
        params.layers.push_back(std::move(layer));
    }
    return params;
}

Tensor2 mlp_forward(const MlpParams& params, const Tensor2& input, ForwardCache* cache) {
    if (params.layers.empty()) throw ShapeError("mlp_forward: empty network");
    if (input.cols != params.input_dim()) {
        throw ShapeError("mlp_forward: input cols " + std::to_string(input.cols) + " != input_dim " +
                         std::to_string(params.input_dim()));
    }
    if (cache) {
        cache->inputs.clear();
        cache->preacts.clear();
    }
    Tensor2 x = input;
    for (const auto& layer : params.layers) {
        if (cache) cache->inputs.push_back(x);
        Tensor2 z = matmul(x, layer.weight);
        add_row_broadcast(z, layer.bias);
        if (cache) cache->preacts.push_back(z);
        if (layer.act == Activation::relu) {
            for (double& v : z.data) v = v > 0.0 ? v : 0.0;
        }
        x = std::move(z);
    }
    check_finite(x, "mlp_forward output");
    return x;
}

Gradients mlp_backward(const MlpParams& params, const ForwardCache& cache, const Tensor2& output_grad) {
    const size_t n_layers = params.layers.size();
    if (cache.inputs.size() != n_layers || cache.preacts.size() != n_layers) {
        throw ShapeError("mlp_backward: cache does not match parameters");
    }
    if (output_grad.cols != params.output_dim() || output_grad.rows != cache.inputs.front().rows) {
        throw ShapeError("mlp_backward: output_grad shape mismatch");
    }
    Gradients grads;
    grads.layers.resize(n_layers);
    Tensor2 g = output_grad;
    for (size_t li = n_layers; li-- > 0;) {
        const MlpLayer& layer = params.layers[li];
        if (layer.act == Activation::relu) {
            const Tensor2& z = cache.preacts[li];
            for (size_t i = 0; i < g.data.size(); ++i) {
                if (z.data[i] <= 0.0) g.data[i] = 0.0;
            }
        }
        grads.layers[li].weight_grad = matmul_transa(cache.inputs[li], g);
        grads.layers[li].bias_grad = col_sums(g);
        g = matmul_transb(g, layer.weight);
    }
    grads.input_grad = std::move(g);
    return grads;
}

void accumulate(Gradients& into, const Gradients& g) {
    if (into.layers.size() != g.layers.size()) throw ShapeError("accumulate: layer count mismatch");
    for (size_t li = 0; li < g.layers.size(); ++li) {
        auto& a = into.layers[li];
        const auto& b = g.layers[li];
        if (!a.weight_grad.same_shape(b.weight_grad)) throw ShapeError("accumulate: weight grad shape mismatch");
        for (size_t i = 0; i < a.weight_grad.data.size(); ++i) a.weight_grad.data[i] += b.weight_grad.data[i];
        for (size_t i = 0; i < a.bias_grad.data.size(); ++i) a.bias_grad.data[i] += b.bias_grad.data[i];
    }
}

void scale(Gradients& g, double factor) {
    for (auto& l : g.layers) {
        for (double& v : l.weight_grad.data) v *= factor;
        for (double& v : l.bias_grad.data) v *= factor;
    }
    for (double& v : g.input_grad.data) v *= factor;
}

Gradients zero_gradients(const MlpParams& params, int batch_rows) {
    Gradients g;
    for (const auto& l : params.layers) {
        g.layers.push_back({Tensor2(l.weight.rows, l.weight.cols), Tensor2(1, l.bias.cols)});
    }
    g.input_grad = Tensor2(batch_rows, params.input_dim());
    return g;
}

}  // namespace marl::nn
