#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "caliber/liealg.hpp"
#include "caliber/span7.hpp"

namespace caliber {

// 8x4 matrix with orthonormal columns: a decomposable unit 4-vector
// v1^v2^v3^v4, the optimizer's iterate.
using Frame = Eigen::Matrix<double, 8, 4>;

inline constexpr std::uint64_t kDefaultSeed = 0x43414C4942455221ull;

struct SolverConfig {
    int restarts = 200;
    int max_iters = 5000;
    double step = 0.1;          // initial Armijo step
    double grad_tol = 1e-12;    // Riemannian gradient norm cutoff
    double value_tol = 1e-12;   // tie-break width in restart reduction
    std::uint64_t seed = kDefaultSeed;
    int threads = 0;            // 0: CALIBER_THREADS env, else hardware
};

void validate(const SolverConfig& cfg);

struct RestartTrace {
    int index = 0;
    double value = 0.0;
    int iters = 0;
    bool converged = false;
};

struct ComassResult {
    double value = 0.0;
    Frame frame = Frame::Zero();
    std::vector<RestartTrace> per_restart;
    bool converged = false;
    int best_restart = 0;
};

// Maximizes |omega(v1..v4)| over orthonormal 4-frames by Riemannian gradient
// ascent with QR retraction and Armijo backtracking; cfg.restarts independent
// rotation-invariant random starts, reduced deterministically (ties within
// value_tol go to the smaller restart index). Deterministic for a fixed seed
// regardless of thread count. Throws on the zero form.
ComassResult comass_numeric(const KForm& omega, const SolverConfig& cfg);

struct FrameReport {
    Frame frame;
    double value = 0.0;
    double eval_check = 0.0;  // |omega(frame)| recomputed from scratch
};

// Reports the maximizing 4-plane of a converged result and re-verifies the
// objective value on it. Throws std::invalid_argument on an unconverged
// result.
FrameReport calibrated_frame(const KForm& omega, const ComassResult& result);

struct NormalFormResult {
    bool success = false;
    Mat8D rotation = Mat8D::Identity();  // act_on_form(rotation, omega) lies in the span
    Span7 coeffs;                        // span coefficients of the rotated form
    double residual = 0.0;               // norm of the off-span component
    int restarts_used = 0;
};

// Best-effort rotation of a self-dual form into the 7-generator span:
// minimizes the squared off-span norm of g.omega over rotations g by
// Levenberg-Marquardt in exponential coordinates, identity start first, then
// random starts. Success means residual < 1e-8 * |omega|; failure is a
// reported outcome carrying the best attempt. Requires *omega = omega within
// 1e-10 relative.
NormalFormResult normal_form(const KForm& omega, const SolverConfig& cfg);

enum class FormClass { span, self_dual, general };

// Reproducible pseudo-random forms with small exact rational coefficients.
// span: combination of the 7 generators; self_dual: exact self-dual
// projection of a random 4-form; general: dense random 4-form.
KForm random_form(std::uint64_t seed, FormClass cls);

// Thread budget: cfg.threads if positive, else the CALIBER_THREADS
// environment variable, else hardware concurrency; clamped to [1, tasks].
int resolve_thread_count(const SolverConfig& cfg, int tasks);

// Haar-distributed rotation: sign-fixed QR of a Gaussian matrix, reflected
// into SO(8) if needed.
Mat8D haar_rotation(SplitMix64& rng);

}  // namespace caliber
