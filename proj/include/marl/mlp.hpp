#pragma once

#include <cstdint>
#include <vector>

#include "marl/tensor.hpp"

namespace marl::nn {

enum class Activation { relu, identity };

struct MlpLayer {
    Tensor2 weight;  // in x out
    Tensor2 bias;    // 1 x out
    Activation act = Activation::relu;

    bool operator==(const MlpLayer&) const = default;
};

// Fixed fully-connected architecture: relu hidden layers, identity output
// (raw Q-logits). 64-bit throughout.
struct MlpParams {
    std::vector<MlpLayer> layers;

    int input_dim() const { return layers.empty() ? 0 : layers.front().weight.rows; }
    int output_dim() const { return layers.empty() ? 0 : layers.back().weight.cols; }
    std::vector<int> widths() const;
    size_t parameter_count() const;

    bool operator==(const MlpParams&) const = default;
};

struct LayerGrads {
    Tensor2 weight_grad;
    Tensor2 bias_grad;
};

struct Gradients {
    std::vector<LayerGrads> layers;
    Tensor2 input_grad;  // batch x input_dim

    bool all_finite() const;
};

// Per-layer inputs and pre-activations captured by a forward pass; exactly
// what the reverse pass needs.
struct ForwardCache {
    std::vector<Tensor2> inputs;
    std::vector<Tensor2> preacts;
};

// Uniform init in +-sqrt(6 / (fan_in + fan_out)), zero biases, relu hidden
// layers and identity output. Deterministic for a fixed seed.
MlpParams mlp_init(const std::vector<int>& layer_widths, uint64_t seed);

Tensor2 mlp_forward(const MlpParams& params, const Tensor2& input, ForwardCache* cache = nullptr);

// Exact reverse-mode derivative of mlp_forward. output_grad is batch x
// output_dim; returns parameter gradients plus the gradient with respect to
// the input (the raw material of the gradient-sign observation attack).
Gradients mlp_backward(const MlpParams& params, const ForwardCache& cache, const Tensor2& output_grad);

void accumulate(Gradients& into, const Gradients& g);
void scale(Gradients& g, double factor);
Gradients zero_gradients(const MlpParams& params, int batch_rows = 0);

// sign with sign(0) = 0; used by the optimizer-free attack path and the
// mixer's absolute-value backward.
inline double sign0(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace marl::nn
