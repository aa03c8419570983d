#pragma once

#include "marl/mlp.hpp"

namespace marl::nn {

// Bias-corrected adaptive-moment optimizer state mirroring an MlpParams.
struct AdamState {
    struct LayerMoments {
        Tensor2 weight_m, weight_v;
        Tensor2 bias_m, bias_v;
    };
    std::vector<LayerMoments> layers;
    long step_count = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;

    static AdamState for_params(const MlpParams& params);
};

// One in-place update. Throws NumericError on non-finite gradients so a
// diverged run aborts instead of silently corrupting parameters.
void adam_step(MlpParams& params, const Gradients& grads, AdamState& state, double lr);

}  // namespace marl::nn
