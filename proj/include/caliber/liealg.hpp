#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "caliber/kform.hpp"
#include "caliber/rng.hpp"

namespace caliber {

using Mat8Q = std::array<std::array<Rat, 8>, 8>;
using Mat8D = Eigen::Matrix<double, 8, 8>;

Mat8Q mat_zero();
Mat8Q mat_identity();
Mat8Q mat_mul(const Mat8Q& a, const Mat8Q& b);
Mat8Q mat_add(const Mat8Q& a, const Mat8Q& b);
Mat8Q mat_scale(const Rat& c, const Mat8Q& a);
Mat8Q mat_transpose(const Mat8Q& a);
bool is_skew(const Mat8Q& x);
bool is_special_orthogonal(const Mat8Q& g);
Mat8D mat_to_double(const Mat8Q& a);

// The constant matrices driving the weight computations:
//   t_i  torus generators, blockdiag with J = [[0,1],[-1,0]] in slot i;
//   u_a, v_a  symmetric traceless weight-space bases for weight 2x_a;
//   z_1, z_2, z_3  the zero-weight diagonal basis;
//   E_1, E_2  the skew pair spanning the root space for x_3 - x_4.
struct WeightConstants {
    std::array<Mat8Q, 4> t;
    std::array<Mat8Q, 4> u;
    std::array<Mat8Q, 4> v;
    std::array<Mat8Q, 3> z;
    Mat8Q E1;
    Mat8Q E2;
};

const WeightConstants& weight_constants();

// Sum x_i t_i for exact coordinates.
Mat8Q torus_element(const std::array<Rat, 4>& x);

// exp(sum x_i t_i) in closed form: an independent rotation by x_i in each
// coordinate 2-plane.
Mat8D torus_rotation(const std::array<double, 4>& x);

// XA - AX. For skew X and symmetric traceless A the result is again
// symmetric traceless.
Mat8Q bracket(const Mat8Q& x, const Mat8Q& a);

// exp((pi/2) * quarters * K), exact, for skew K satisfying K^3 = -K (single
// planes, E_1, E_2, torus elements with coordinates in {-1,0,1}, ...).
// Throws std::invalid_argument if K^3 != -K.
Mat8Q exp_quarter_turn(const Mat8Q& k, int quarters = 1);

// Matrix exponential of a skew matrix via scaling-and-squaring Pade
// approximation; orthogonal with det +1 to machine precision.
Mat8D exp_rotation(const Mat8D& x);

// Induced action on forms: covectors pull back by the inverse, which for a
// rotation g sends e^i to sum_k g_{ki} e^k; extended multiplicatively, so
// (g.w)_J = sum_I det(g[J, I]) w_I. Left action, isometry, commutes with the
// Hodge star when det g = +1.
KForm act_on_form(const Mat8Q& g, const KForm& omega);
KForm act_on_form(const Mat8D& g, const KForm& omega);

// d/dt at 0 of exp(tX).omega: each covector factor e^i is replaced in turn
// by sum_k X_{ki} e^k. Linear in X and omega, exact, a derivation over wedge.
KForm derive_on_form(const Mat8Q& x, const KForm& omega);

// Basis of so(8): the 28 single-plane generators K_{pq} (1 <= p < q <= 8)
// with +1 at (p,q) and -1 at (q,p), ordered lexicographically by (p,q).
Mat8Q plane_generator(int p, int q);
const std::vector<std::pair<int, int>>& plane_index_order();
Mat8Q skew_from_coeffs(const std::array<Rat, 28>& c);

struct StabilizerResult {
    int dim;
    // Kernel basis of X -> X.omega over the plane-generator coordinates.
    std::vector<std::array<Rat, 28>> kernel;
};

// dim ker of the linear map so(8) -> Lambda^4, X -> derive_on_form(X, omega),
// computed by exact fraction-free elimination. stabilizer_dim(0) = 28.
StabilizerResult stabilizer(const KForm& omega);
int stabilizer_dim(const KForm& omega);

// Product of `factors` random exact quarter-turn plane rotations; entries in
// {-1, 0, 1}, special orthogonal, suitable for exact conjugation tests.
Mat8Q random_quarter_rotation(SplitMix64& rng, int factors = 4);

}  // namespace caliber
