#include "caliber/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "caliber/kform.hpp"
#include "caliber/rng.hpp"

namespace caliber {

namespace {

// A 4-form flattened for the inner loops: row indices are 0-based.
struct DenseTerm {
    int rows[4];
    double coeff;
};

std::vector<DenseTerm> compile_terms(const KForm& omega) {
    if (omega.degree != 4) {
        throw std::invalid_argument("comass optimization expects a 4-form");
    }
    std::vector<DenseTerm> terms;
    terms.reserve(omega.coeffs.size());
    for (const auto& [index, coeff] : omega.coeffs) {
        DenseTerm t;
        for (int p = 0; p < 4; ++p) t.rows[p] = index[p] - 1;
        t.coeff = rat_to_double(coeff);
        if (t.coeff != 0.0) terms.push_back(t);
    }
    return terms;
}

double det3(double a, double b, double c, double d, double e, double f,
            double g, double h, double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

double det4(const double m[4][4]) {
    return m[0][0] * det3(m[1][1], m[1][2], m[1][3], m[2][1], m[2][2], m[2][3],
                          m[3][1], m[3][2], m[3][3]) -
           m[0][1] * det3(m[1][0], m[1][2], m[1][3], m[2][0], m[2][2], m[2][3],
                          m[3][0], m[3][2], m[3][3]) +
           m[0][2] * det3(m[1][0], m[1][1], m[1][3], m[2][0], m[2][1], m[2][3],
                          m[3][0], m[3][1], m[3][3]) -
           m[0][3] * det3(m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2],
                          m[3][0], m[3][1], m[3][2]);
}

double eval_terms(const std::vector<DenseTerm>& terms, const Frame& v) {
    double total = 0.0;
    double m[4][4];
    for (const auto& t : terms) {
        for (int p = 0; p < 4; ++p) {
            for (int q = 0; q < 4; ++q) m[p][q] = v(t.rows[p], q);
        }
        total += t.coeff * det4(m);
    }
    return total;
}

// d det(M) / d M[p][q] is the (p,q) cofactor; accumulates coeff-weighted
// cofactors into the Euclidean gradient.
void add_gradient(const DenseTerm& t, const Frame& v, Frame& grad) {
    double m[4][4];
    for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4; ++q) m[p][q] = v(t.rows[p], q);
    }
    static constexpr int rest[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    for (int p = 0; p < 4; ++p) {
        const int* r = rest[p];
        for (int q = 0; q < 4; ++q) {
            const int* c = rest[q];
            double minor = det3(m[r[0]][c[0]], m[r[0]][c[1]], m[r[0]][c[2]],
                                m[r[1]][c[0]], m[r[1]][c[1]], m[r[1]][c[2]],
                                m[r[2]][c[0]], m[r[2]][c[1]], m[r[2]][c[2]]);
            double cof = ((p + q) % 2 == 0) ? minor : -minor;
            grad(t.rows[p], q) += t.coeff * cof;
        }
    }
}

Frame euclidean_gradient(const std::vector<DenseTerm>& terms, const Frame& v) {
    Frame grad = Frame::Zero();
    for (const auto& t : terms) add_gradient(t, v, grad);
    return grad;
}

// Projection onto the tangent space of the Stiefel manifold at v.
Frame tangent_project(const Frame& v, const Frame& g) {
    Eigen::Matrix4d a = v.transpose() * g;
    Eigen::Matrix4d sym = 0.5 * (a + a.transpose());
    return g - v * sym;
}

// QR retraction with the R-diagonal sign fix, so the map is continuous and
// retract(v) == v for orthonormal v.
Frame retract(const Frame& x) {
    Eigen::HouseholderQR<Eigen::Matrix<double, 8, 4>> qr(x);
    Frame q = qr.householderQ() * Eigen::Matrix<double, 8, 4>::Identity();
    Eigen::Matrix<double, 8, 4> r = qr.matrixQR();
    for (int j = 0; j < 4; ++j) {
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    }
    return q;
}

constexpr double kPi = 3.14159265358979323846;

double gaussian(SplitMix64& rng) {
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    double u = 1.0 - rng.next_unit();
    double w = rng.next_unit();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * kPi * w);
}

Frame random_frame(SplitMix64& rng) {
    Frame x;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 4; ++j) x(i, j) = gaussian(rng);
    }
    return retract(x);
}

RestartTrace ascend(const std::vector<DenseTerm>& terms, const SolverConfig& cfg,
                    int index, Frame& v) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, static_cast<std::uint64_t>(index));
    v = random_frame(rng);

    RestartTrace trace;
    trace.index = index;
    double value = eval_terms(terms, v);
    int iter = 0;
    for (; iter < cfg.max_iters; ++iter) {
        double sign = value >= 0.0 ? 1.0 : -1.0;
        Frame grad = euclidean_gradient(terms, v);
        Frame z = tangent_project(v, sign * grad);
        double zn2 = z.squaredNorm();
        if (std::sqrt(zn2) < cfg.grad_tol) {
            trace.converged = true;
            break;
        }
        // Armijo backtracking on the signed objective keeps |omega(v)|
        // non-decreasing: an accepted step cannot cross zero.
        double alpha = cfg.step;
        bool accepted = false;
        for (int back = 0; back < 60; ++back) {
            if (alpha * zn2 < 1e-18 * (1.0 + std::fabs(value))) break;
            Frame trial = retract(v + alpha * z);
            double trial_value = eval_terms(terms, trial);
            if (sign * trial_value > sign * value + 1e-4 * alpha * zn2) {
                v = trial;
                value = trial_value;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            // Step collapsed below resolution: the iterate is stationary to
            // machine precision even if the gradient cutoff was not met.
            trace.converged = true;
            break;
        }
    }
    trace.iters = iter;
    trace.value = std::fabs(value);
    return trace;
}

int env_thread_count() {
    const char* raw = std::getenv("CALIBER_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    char* end = nullptr;
    long parsed = std::strtol(raw, &end, 10);
    if (end == nullptr || *end != '\0' || parsed <= 0) return 0;
    return static_cast<int>(std::min(parsed, 256L));
}

// Shared scratch for the skew-coordinate chart used by normal_form: the 28
// plane rotations in lexicographic (p, q) order.
struct DeriveAction {
    // (output position, input position, sign) triplets over the degree-4
    // basis for the infinitesimal action of one plane generator.
    std::vector<std::array<int, 3>> triplets;
};

std::vector<DeriveAction> derive_table() {
    const auto& basis = basis4();
    const auto& pairs = plane_index_order();
    std::vector<DeriveAction> table(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        Mat8Q gen = plane_generator(pairs[k].first, pairs[k].second);
        for (std::size_t col = 0; col < basis.size(); ++col) {
            KForm unit = kform(4);
            add_term(unit, basis[col], Rat(1));
            KForm image = derive_on_form(gen, unit);
            for (const auto& [idx, coeff] : image.coeffs) {
                if (coeff == 0) continue;
                int sign = coeff > 0 ? 1 : -1;
                table[k].triplets.push_back(
                    {static_cast<int>(basis4_position(idx)), static_cast<int>(col), sign});
            }
        }
    }
    return table;
}

using Vec70 = Eigen::Matrix<double, 70, 1>;

Vec70 kform_to_vec(const KForm& omega) {
    Vec70 out = Vec70::Zero();
    for (const auto& [idx, coeff] : omega.coeffs) {
        out(static_cast<int>(basis4_position(idx))) = rat_to_double(coeff);
    }
    return out;
}

// Columns of the span generators as 70-vectors; each has two +/-1 entries
// and squared norm 2.
Eigen::Matrix<double, 70, 7> span_matrix() {
    Eigen::Matrix<double, 70, 7> s = Eigen::Matrix<double, 70, 7>::Zero();
    const auto& gens = generators();
    for (int i = 0; i < 7; ++i) {
        for (const auto& [idx, coeff] : gens[static_cast<std::size_t>(i)].coeffs) {
            s(static_cast<int>(basis4_position(idx)), i) = rat_to_double(coeff);
        }
    }
    return s;
}

Vec70 off_span(const Eigen::Matrix<double, 70, 7>& s, const Vec70& y) {
    Eigen::Matrix<double, 7, 1> a = s.transpose() * y / 2.0;
    return y - s * a;
}

// Image of the source form under a rotation, as a 70-vector: each output
// coefficient is a 4x4 minor sum over the source support.
Vec70 apply_rotation(const Mat8D& g, const std::vector<DenseTerm>& source) {
    const auto& basis = basis4();
    Vec70 out = Vec70::Zero();
    double m[4][4];
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto& target = basis[j];
        double total = 0.0;
        for (const auto& t : source) {
            for (int p = 0; p < 4; ++p) {
                for (int q = 0; q < 4; ++q) m[p][q] = g(target[p] - 1, t.rows[q]);
            }
            total += t.coeff * det4(m);
        }
        out(static_cast<int>(j)) = total;
    }
    return out;
}

Mat8D skew_from_delta(const Eigen::Matrix<double, 28, 1>& delta) {
    const auto& pairs = plane_index_order();
    Mat8D x = Mat8D::Zero();
    for (int k = 0; k < 28; ++k) {
        int p = pairs[static_cast<std::size_t>(k)].first - 1;
        int q = pairs[static_cast<std::size_t>(k)].second - 1;
        x(p, q) = delta(k);
        x(q, p) = -delta(k);
    }
    return x;
}

struct PolishOutcome {
    Mat8D rotation;
    Vec70 image;
    double residual_sq;
};

// Levenberg-Marquardt over so(8): residual r = off-span part of g.omega,
// Jacobian columns are the off-span parts of the 28 infinitesimal actions at
// the current image.
PolishOutcome minimize_off_span(const Mat8D& start,
                                const std::vector<DenseTerm>& source,
                                const Eigen::Matrix<double, 70, 7>& s,
                                const std::vector<DeriveAction>& derives,
                                int max_iters, double target_sq) {
    Mat8D g = start;
    Vec70 y = apply_rotation(g, source);
    Vec70 r = off_span(s, y);
    double f = r.squaredNorm();
    double lambda = 1e-4;

    for (int iter = 0; iter < max_iters && f > target_sq; ++iter) {
        Eigen::Matrix<double, 70, 28> jac;
        for (int k = 0; k < 28; ++k) {
            Vec70 dy = Vec70::Zero();
            for (const auto& t : derives[static_cast<std::size_t>(k)].triplets) {
                dy(t[0]) += t[2] * y(t[1]);
            }
            jac.col(k) = off_span(s, dy);
        }
        Eigen::Matrix<double, 28, 28> normal = jac.transpose() * jac;
        Eigen::Matrix<double, 28, 1> rhs = -jac.transpose() * r;
        if (rhs.norm() < 1e-15 * (1.0 + std::sqrt(f))) break;

        bool accepted = false;
        for (int attempt = 0; attempt < 12; ++attempt) {
            Eigen::Matrix<double, 28, 28> damped = normal;
            damped.diagonal().array() += lambda;
            Eigen::Matrix<double, 28, 1> delta = damped.ldlt().solve(rhs);
            Mat8D trial_g = exp_rotation(skew_from_delta(delta)) * g;
            Vec70 trial_y = apply_rotation(trial_g, source);
            Vec70 trial_r = off_span(s, trial_y);
            double trial_f = trial_r.squaredNorm();
            if (trial_f < f) {
                g = trial_g;
                y = trial_y;
                r = trial_r;
                f = trial_f;
                lambda = std::max(lambda / 3.0, 1e-12);
                accepted = true;
                break;
            }
            lambda *= 4.0;
        }
        if (!accepted) break;
    }
    return {g, y, f};
}

Rat small_rational(SplitMix64& rng) {
    long num = static_cast<long>(rng.next_below(25)) - 12;
    long den = static_cast<long>(rng.next_below(8)) + 1;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

void validate(const SolverConfig& cfg) {
    if (cfg.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
    if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
    if (!(cfg.step > 0.0)) throw std::invalid_argument("step must be positive");
    if (!(cfg.grad_tol > 0.0)) throw std::invalid_argument("grad_tol must be positive");
    if (!(cfg.value_tol > 0.0)) throw std::invalid_argument("value_tol must be positive");
}

Mat8D haar_rotation(SplitMix64& rng) {
    Mat8D x;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) x(i, j) = gaussian(rng);
    }
    Eigen::HouseholderQR<Mat8D> qr(x);
    Mat8D q = qr.householderQ();
    Mat8D r = qr.matrixQR();
    for (int j = 0; j < 8; ++j) {
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    }
    if (q.determinant() < 0.0) q.col(7) = -q.col(7);
    return q;
}

int resolve_thread_count(const SolverConfig& cfg, int tasks) {
    int requested = cfg.threads;
    if (requested <= 0) requested = env_thread_count();
    if (requested <= 0) {
        requested = static_cast<int>(std::thread::hardware_concurrency());
    }
    if (requested <= 0) requested = 1;
    return std::max(1, std::min(requested, tasks));
}

ComassResult comass_numeric(const KForm& omega, const SolverConfig& cfg) {
    validate(cfg);
    std::vector<DenseTerm> terms = compile_terms(omega);
    if (terms.empty()) {
        throw std::invalid_argument("comass of the zero form is undefined");
    }

    ComassResult result;
    result.per_restart.resize(static_cast<std::size_t>(cfg.restarts));
    std::vector<Frame> frames(static_cast<std::size_t>(cfg.restarts));

    int workers = resolve_thread_count(cfg, cfg.restarts);
    std::atomic<int> next{0};
    auto run = [&]() {
        for (;;) {
            int index = next.fetch_add(1);
            if (index >= cfg.restarts) break;
            auto slot = static_cast<std::size_t>(index);
            result.per_restart[slot] = ascend(terms, cfg, index, frames[slot]);
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }

    // Deterministic reduction: strictly better value wins, ties within
    // value_tol keep the earlier restart.
    std::size_t best = 0;
    for (std::size_t r = 1; r < result.per_restart.size(); ++r) {
        if (result.per_restart[r].value > result.per_restart[best].value + cfg.value_tol) {
            best = r;
        }
    }
    result.best_restart = static_cast<int>(best);
    result.value = result.per_restart[best].value;
    result.frame = frames[best];
    for (const auto& trace : result.per_restart) {
        if (trace.converged) {
            result.converged = true;
            break;
        }
    }
    return result;
}

FrameReport calibrated_frame(const KForm& omega, const ComassResult& result) {
    if (!result.converged) {
        throw std::invalid_argument("calibrated_frame requires a converged result");
    }
    FrameReport report;
    report.frame = result.frame;
    report.value = result.value;
    report.eval_check = std::fabs(eval_terms(compile_terms(omega), result.frame));
    if (std::fabs(report.eval_check - result.value) > 1e-9 * (1.0 + result.value)) {
        throw std::runtime_error("frame does not reproduce the reported value");
    }
    return report;
}

NormalFormResult normal_form(const KForm& omega, const SolverConfig& cfg) {
    validate(cfg);
    if (omega.degree != 4) {
        throw std::invalid_argument("normal_form expects a 4-form");
    }
    double scale = std::sqrt(rat_to_double(norm_sq(omega)));
    if (scale == 0.0) {
        throw std::invalid_argument("normal_form of the zero form is undefined");
    }
    KForm anti = sub(omega, hodge(omega));
    double anti_norm = std::sqrt(rat_to_double(norm_sq(anti)));
    if (anti_norm > 1e-10 * scale) {
        throw std::invalid_argument("normal_form requires a self-dual form");
    }

    std::vector<DenseTerm> source = compile_terms(omega);
    Eigen::Matrix<double, 70, 7> s = span_matrix();
    std::vector<DeriveAction> derives = derive_table();

    double target = 1e-8 * scale;
    // Polish well past the acceptance bar so successes land with slack.
    double polish = 1e-12 * scale;
    double polish_sq = polish * polish;
    int lm_iters = std::min(cfg.max_iters, 200);

    NormalFormResult result;
    result.residual = std::numeric_limits<double>::infinity();
    SplitMix64 seeder = SplitMix64::stream(cfg.seed, 0x6E666F726Dull);

    for (int attempt = 0; attempt < cfg.restarts; ++attempt) {
        Mat8D start = attempt == 0 ? Mat8D(Mat8D::Identity()) : haar_rotation(seeder);
        PolishOutcome outcome = minimize_off_span(start, source, s, derives, lm_iters, polish_sq);
        double residual = std::sqrt(outcome.residual_sq);
        if (residual < result.residual) {
            result.residual = residual;
            result.rotation = outcome.rotation;
            Eigen::Matrix<double, 7, 1> a = s.transpose() * outcome.image / 2.0;
            for (int i = 0; i < 7; ++i) {
                result.coeffs[static_cast<std::size_t>(i)] = rat_from_double(a(i));
            }
        }
        result.restarts_used = attempt + 1;
        if (result.residual < target) {
            result.success = true;
            break;
        }
    }
    return result;
}

KForm random_form(std::uint64_t seed, FormClass cls) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(cls) + 0x666F726Dull);
    if (cls == FormClass::span) {
        Span7 coeffs;
        bool nonzero = false;
        for (auto& c : coeffs) {
            c = small_rational(rng);
            if (c != 0) nonzero = true;
        }
        if (!nonzero) coeffs[0] = 1;
        return from_span(coeffs);
    }

    KForm omega = kform(4);
    for (const auto& index : basis4()) {
        Rat c = small_rational(rng);
        if (c != 0) add_term(omega, index, c);
    }
    if (cls == FormClass::self_dual) {
        omega = self_dual_project(omega);
        if (omega.is_zero()) {
            add_term(omega, {1, 2, 3, 4}, Rat(1));
            omega = self_dual_project(omega);
        }
    } else if (omega.is_zero()) {
        add_term(omega, {1, 2, 3, 4}, Rat(1));
    }
    return omega;
}

}  // namespace caliber
