#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "q2d2/analytics.hpp"
#include "q2d2/quantizer.hpp"

namespace q2d2 {

enum class Nonlinearity {
    Tanh,      // default projection nonlinearity
    Clamp,     // identity clamped to [-1, 1], ablation arm
    Identity,  // no nonlinearity; only valid with QuantizeMode::Surrogate
};

enum class QuantizeMode {
    Ste,        // real snap on the forward pass, identity Jacobian backward
    Surrogate,  // snap replaced by identity in bounded space (bound/unbound cancel)
};

/// Minimal trainable pipeline: affine -> nonlinearity -> bound -> snap ->
/// unbound -> affine, reconstructing its input.
///
/// The backward pass always differentiates the surrogate function (snap as
/// identity in bounded space), so the analytic gradient is identical between
/// Ste and Surrogate modes by construction; only forward values differ.
class ToyPipeline {
public:
    static ToyPipeline create(int input_dim, QuantizerConfig quantizer, std::uint64_t seed,
                              Nonlinearity nonlinearity = Nonlinearity::Tanh);

    struct ForwardResult {
        std::vector<double> reconstruction;
        std::vector<std::uint32_t> pair_codes;  // empty in Surrogate mode
        std::vector<double> latent;             // post-nonlinearity, pre-quantization
    };

    ForwardResult forward(std::span<const double> x, QuantizeMode mode) const;

    struct Gradients {
        std::vector<double> w_in, b_in, w_out, b_out;
    };

    /// Analytic gradients of the surrogate MSE loss for one (x, target) pair.
    Gradients backward(std::span<const double> x, std::span<const double> target) const;

    void apply_update(const Gradients& grad, double learning_rate);

    int input_dim() const { return input_dim_; }
    int latent_dim() const { return quantizer_.dim(); }
    const QuantizerConfig& quantizer() const { return quantizer_; }
    Nonlinearity nonlinearity() const { return nonlinearity_; }
    void set_nonlinearity(Nonlinearity nl) { nonlinearity_ = nl; }
    std::uint64_t seed() const { return seed_; }

    // Exposed for gradient checking.
    std::vector<double>& w_in() { return w_in_; }
    std::vector<double>& b_in() { return b_in_; }
    std::vector<double>& w_out() { return w_out_; }
    std::vector<double>& b_out() { return b_out_; }

    /// MSE of the reconstruction against target under the given mode.
    double loss(std::span<const double> x, std::span<const double> target,
                QuantizeMode mode) const;

private:
    ToyPipeline() = default;

    int input_dim_ = 0;
    QuantizerConfig quantizer_;
    Nonlinearity nonlinearity_ = Nonlinearity::Tanh;
    std::uint64_t seed_ = 0;
    std::vector<double> w_in_, b_in_;    // latent_dim x input_dim, latent_dim
    std::vector<double> w_out_, b_out_;  // input_dim x latent_dim, input_dim
};

/// Max relative error between the pipeline's analytic gradients and central
/// finite differences of the surrogate loss at the given epsilon.
double grad_check(ToyPipeline& pipeline, std::span<const double> x, double epsilon);

struct Dataset {
    int input_dim = 0;
    std::vector<double> frames;  // n x input_dim, row-major

    std::size_t size() const {
        return input_dim == 0 ? 0 : frames.size() / static_cast<std::size_t>(input_dim);
    }
    std::span<const double> frame(std::size_t i) const {
        return {frames.data() + i * static_cast<std::size_t>(input_dim),
                static_cast<std::size_t>(input_dim)};
    }
};

/// Frames are sums of three random-phase sinusoids sampled at input_dim
/// points, normalized into [-1, 1]. Deterministic per seed.
Dataset make_synthetic_dataset(std::uint64_t seed, std::size_t n_frames, int input_dim);

struct TrainOptions {
    std::size_t steps = 1000;
    double learning_rate = 0.05;
    std::size_t batch_size = 32;
    std::size_t record_every = 50;
    double holdout_fraction = 0.1;
};

struct TrainReport {
    std::vector<std::pair<std::size_t, double>> loss_curve;  // (step, holdout MSE, STE forward)
    UtilizationReport final_utilization;                     // holdout tokens
    double grad_check_error = 0.0;
    double initial_mse = 0.0;
    double final_mse = 0.0;
};

/// Plain SGD on the reconstruction MSE, gradients through the quantizer via
/// the straight-through rule. Batches cycle through the training split in
/// order, so runs are bit-reproducible. A non-finite loss aborts with the
/// offending step index in the message.
TrainReport train(ToyPipeline& pipeline, const Dataset& dataset, const TrainOptions& options);

}  // namespace q2d2
