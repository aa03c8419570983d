#include "marl/adam.hpp"

#include <cmath>

#include "marl/errors.hpp"

namespace marl::nn {

AdamState AdamState::for_params(const MlpParams& params) {
    AdamState s;
    for (const auto& l : params.layers) {
        s.layers.push_back({Tensor2(l.weight.rows, l.weight.cols), Tensor2(l.weight.rows, l.weight.cols),
                            Tensor2(1, l.bias.cols), Tensor2(1, l.bias.cols)});
    }
    return s;
}

namespace {

void update_tensor(Tensor2& p, const Tensor2& g, Tensor2& m, Tensor2& v, const AdamState& s, double lr,
                   double bc1, double bc2) {
    for (size_t i = 0; i < p.data.size(); ++i) {
        m.data[i] = s.beta1 * m.data[i] + (1.0 - s.beta1) * g.data[i];
        v.data[i] = s.beta2 * v.data[i] + (1.0 - s.beta2) * g.data[i] * g.data[i];
        const double m_hat = m.data[i] / bc1;
        const double v_hat = v.data[i] / bc2;
        p.data[i] -= lr * m_hat / (std::sqrt(v_hat) + s.eps);
    }
}

}  // namespace

void adam_step(MlpParams& params, const Gradients& grads, AdamState& state, double lr) {
    if (lr <= 0.0) throw ConfigError("adam_step: lr must be > 0");
    if (grads.layers.size() != params.layers.size() || state.layers.size() != params.layers.size()) {
        throw ShapeError("adam_step: shape mismatch between params, grads and state");
    }
    for (const auto& l : grads.layers) {
        if (!l.weight_grad.all_finite() || !l.bias_grad.all_finite()) {
            throw NumericError("adam_step: non-finite gradient");
        }
    }
    state.step_count += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step_count));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step_count));
    for (size_t li = 0; li < params.layers.size(); ++li) {
        auto& layer = params.layers[li];
        auto& mom = state.layers[li];
        if (!layer.weight.same_shape(grads.layers[li].weight_grad)) {
            throw ShapeError("adam_step: weight grad shape mismatch");
        }
        update_tensor(layer.weight, grads.layers[li].weight_grad, mom.weight_m, mom.weight_v, state, lr, bc1, bc2);
        update_tensor(layer.bias, grads.layers[li].bias_grad, mom.bias_m, mom.bias_v, state, lr, bc1, bc2);
    }
}

}  // namespace marl::nn
