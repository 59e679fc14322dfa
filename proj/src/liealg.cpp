#include "caliber/liealg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <stdexcept>

namespace caliber {

Mat8Q mat_zero() {
    Mat8Q m;
    for (auto& row : m) row.fill(Rat(0));
    return m;
}

Mat8Q mat_identity() {
    Mat8Q m = mat_zero();
    for (int i = 0; i < 8; ++i) m[i][i] = 1;
    return m;
}

Mat8Q mat_mul(const Mat8Q& a, const Mat8Q& b) {
    Mat8Q out = mat_zero();
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < 8; ++j)
                if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Mat8Q mat_add(const Mat8Q& a, const Mat8Q& b) {
    Mat8Q out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) out[i][j] = a[i][j] + b[i][j];
    return out;
}

Mat8Q mat_scale(const Rat& c, const Mat8Q& a) {
    Mat8Q out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) out[i][j] = c * a[i][j];
    return out;
}

Mat8Q mat_transpose(const Mat8Q& a) {
    Mat8Q out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) out[i][j] = a[j][i];
    return out;
}

bool is_skew(const Mat8Q& x) {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (x[i][j] != -x[j][i]) return false;
    return true;
}

namespace {

Rat det_q(Mat8Q m) {
    Rat det(1);
    for (int c = 0; c < 8; ++c) {
        int pivot = -1;
        for (int r = c; r < 8; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < 8; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (int j = c; j < 8; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

}  // namespace

bool is_special_orthogonal(const Mat8Q& g) {
    if (mat_mul(mat_transpose(g), g) != mat_identity()) return false;
    return det_q(g) == 1;
}

Mat8D mat_to_double(const Mat8Q& a) {
    Mat8D out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) out(i, j) = a[i][j].get_d();
    return out;
}

const WeightConstants& weight_constants() {
    static const WeightConstants wc = [] {
        WeightConstants w;
        for (int a = 0; a < 4; ++a) {
            w.t[a] = mat_zero();
            w.t[a][2 * a][2 * a + 1] = 1;
            w.t[a][2 * a + 1][2 * a] = -1;
            w.u[a] = mat_zero();
            w.u[a][2 * a][2 * a] = 1;
            w.u[a][2 * a + 1][2 * a + 1] = -1;
            w.v[a] = mat_zero();
            w.v[a][2 * a][2 * a + 1] = 1;
            w.v[a][2 * a + 1][2 * a] = 1;
        }
        const int zsign[3][8] = {
            {1, 1, 1, 1, -1, -1, -1, -1},
            {1, 1, -1, -1, -1, -1, 1, 1},
            {1, 1, -1, -1, 1, 1, -1, -1},
        };
        for (int i = 0; i < 3; ++i) {
            w.z[i] = mat_zero();
            for (int d = 0; d < 8; ++d) w.z[i][d][d] = zsign[i][d];
        }
        w.E1 = mat_zero();
        w.E1[4][6] = 1;
        w.E1[5][7] = 1;
        w.E1[6][4] = -1;
        w.E1[7][5] = -1;
        w.E2 = mat_zero();
        w.E2[4][7] = 1;
        w.E2[5][6] = -1;
        w.E2[6][5] = 1;
        w.E2[7][4] = -1;
        return w;
    }();
    return wc;
}

Mat8Q torus_element(const std::array<Rat, 4>& x) {
    Mat8Q out = mat_zero();
    for (int a = 0; a < 4; ++a) {
        out[2 * a][2 * a + 1] = x[a];
        out[2 * a + 1][2 * a] = -x[a];
    }
    return out;
}

Mat8D torus_rotation(const std::array<double, 4>& x) {
    Mat8D out = Mat8D::Zero();
    for (int a = 0; a < 4; ++a) {
        double c = std::cos(x[a]), s = std::sin(x[a]);
        out(2 * a, 2 * a) = c;
        out(2 * a, 2 * a + 1) = s;
        out(2 * a + 1, 2 * a) = -s;
        out(2 * a + 1, 2 * a + 1) = c;
    }
    return out;
}

Mat8Q bracket(const Mat8Q& x, const Mat8Q& a) {
    return mat_add(mat_mul(x, a), mat_scale(Rat(-1), mat_mul(a, x)));
}

Mat8Q exp_quarter_turn(const Mat8Q& k, int quarters) {
    if (!is_skew(k)) throw std::invalid_argument("exp_quarter_turn requires a skew matrix");
    Mat8Q k2 = mat_mul(k, k);
    if (mat_mul(k2, k) != mat_scale(Rat(-1), k))
        throw std::invalid_argument("exp_quarter_turn requires K^3 = -K");
    static const int cos_table[4] = {1, 0, -1, 0};
    static const int sin_table[4] = {0, 1, 0, -1};
    int q = ((quarters % 4) + 4) % 4;
    Rat c(cos_table[q]), s(sin_table[q]);
    Mat8Q out = mat_identity();
    out = mat_add(out, mat_scale(s, k));
    out = mat_add(out, mat_scale(1 - c, k2));
    return out;
}

Mat8D exp_rotation(const Mat8D& x) {
    if ((x + x.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("exp_rotation requires a skew matrix");
    return x.exp();
}

namespace {

// Columns of the matrix as sparse (row, value) lists; the action rewrites
// e^i as sum_k col_i[k] e^k and expands products through sort_with_sign.
template <typename S>
using SparseCols = std::array<std::vector<std::pair<int, S>>, 8>;

template <typename S, typename M>
SparseCols<S> sparse_columns(const M& g);

template <>
SparseCols<Rat> sparse_columns<Rat, Mat8Q>(const Mat8Q& g) {
    SparseCols<Rat> cols;
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k)
            if (g[k][i] != 0) cols[i].push_back({k + 1, g[k][i]});
    return cols;
}

template <>
SparseCols<double> sparse_columns<double, Mat8D>(const Mat8D& g) {
    SparseCols<double> cols;
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k)
            if (g(k, i) != 0.0) cols[i].push_back({k + 1, g(k, i)});
    return cols;
}

template <typename S>
void accumulate_term(std::map<MultiIndex, S>& acc, const std::vector<int>& idx, S value) {
    auto sorted = sort_with_sign(idx);
    if (!sorted) return;
    if (sorted->second < 0) value = -value;
    acc[sorted->first] += value;
}

template <typename S, typename M>
std::map<MultiIndex, S> act_terms(const M& g, const KForm& omega) {
    SparseCols<S> cols = sparse_columns<S, M>(g);
    std::map<MultiIndex, S> acc;
    std::vector<int> idx(omega.degree);
    for (const auto& [term, coeff] : omega.coeffs) {
        S base;
        if constexpr (std::is_same_v<S, Rat>) {
            base = coeff;
        } else {
            base = coeff.get_d();
        }
        // Depth-first expansion of the product of transformed covectors.
        std::vector<std::size_t> choice(omega.degree, 0);
        int depth = 0;
        std::vector<S> partial(omega.degree + 1);
        partial[0] = base;
        if (omega.degree == 0) {
            acc[{}] += base;
            continue;
        }
        while (depth >= 0) {
            const auto& col = cols[term[depth] - 1];
            if (choice[depth] >= col.size()) {
                choice[depth] = 0;
                --depth;
                if (depth >= 0) ++choice[depth];
                continue;
            }
            idx[depth] = col[choice[depth]].first;
            partial[depth + 1] = partial[depth] * col[choice[depth]].second;
            if (depth + 1 == omega.degree) {
                accumulate_term(acc, idx, partial[depth + 1]);
                ++choice[depth];
            } else {
                ++depth;
            }
        }
    }
    return acc;
}

}  // namespace

KForm act_on_form(const Mat8Q& g, const KForm& omega) {
    auto acc = act_terms<Rat>(g, omega);
    KForm out = kform(omega.degree);
    for (auto& [idx, c] : acc)
        if (c != 0) out.coeffs.emplace(idx, std::move(c));
    return out;
}

KForm act_on_form(const Mat8D& g, const KForm& omega) {
    auto acc = act_terms<double>(g, omega);
    KForm out = kform(omega.degree);
    for (auto& [idx, c] : acc)
        if (c != 0.0) out.coeffs.emplace(idx, rat_from_double(c));
    return out;
}

KForm derive_on_form(const Mat8Q& x, const KForm& omega) {
    KForm out = kform(omega.degree);
    std::vector<int> idx;
    for (const auto& [term, coeff] : omega.coeffs) {
        for (int pos = 0; pos < omega.degree; ++pos) {
            int i = term[pos] - 1;
            for (int k = 0; k < 8; ++k) {
                if (x[k][i] == 0) continue;
                idx.assign(term.begin(), term.end());
                idx[pos] = k + 1;
                add_term(out, idx, coeff * x[k][i]);
            }
        }
    }
    return out;
}

const std::vector<std::pair<int, int>>& plane_index_order() {
    static const std::vector<std::pair<int, int>> order = [] {
        std::vector<std::pair<int, int>> out;
        for (int p = 1; p <= 8; ++p)
            for (int q = p + 1; q <= 8; ++q) out.push_back({p, q});
        return out;
    }();
    return order;
}

Mat8Q plane_generator(int p, int q) {
    if (p < 1 || q > 8 || p >= q)
        throw std::invalid_argument("plane_generator requires 1 <= p < q <= 8");
    Mat8Q out = mat_zero();
    out[p - 1][q - 1] = 1;
    out[q - 1][p - 1] = -1;
    return out;
}

Mat8Q skew_from_coeffs(const std::array<Rat, 28>& c) {
    Mat8Q out = mat_zero();
    const auto& order = plane_index_order();
    for (int i = 0; i < 28; ++i) {
        out[order[i].first - 1][order[i].second - 1] += c[i];
        out[order[i].second - 1][order[i].first - 1] -= c[i];
    }
    return out;
}

StabilizerResult stabilizer(const KForm& omega) {
    if (omega.degree != 4) throw std::invalid_argument("stabilizer requires degree 4");
    // Clear denominators; scaling omega does not change its stabilizer.
    mpz_class lcm(1);
    for (const auto& [idx, c] : omega.coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    KForm w = scale(Rat(lcm), omega);

    const auto& order = plane_index_order();
    constexpr int kRows = 70, kCols = 28;
    std::vector<std::array<mpz_class, kCols>> m(kRows);
    for (int col = 0; col < kCols; ++col) {
        KForm d = derive_on_form(plane_generator(order[col].first, order[col].second), w);
        for (const auto& [idx, c] : d.coeffs) m[basis4_position(idx)][col] = c.get_num();
    }

    // Fraction-free (Bareiss) row echelon; exact divisions stay integral.
    std::vector<int> pivot_cols;
    mpz_class prev(1);
    int r = 0;
    for (int c = 0; c < kCols && r < kRows; ++c) {
        int pivot = -1;
        for (int i = r; i < kRows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[r]);
        for (int i = r + 1; i < kRows; ++i) {
            for (int j = c + 1; j < kCols; ++j) {
                mpz_class num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivot_cols.push_back(c);
        ++r;
    }

    StabilizerResult result;
    result.dim = kCols - r;
    std::vector<bool> is_pivot(kCols, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    for (int f = 0; f < kCols; ++f) {
        if (is_pivot[f]) continue;
        std::array<Rat, 28> x;
        x.fill(Rat(0));
        x[f] = 1;
        for (int i = r - 1; i >= 0; --i) {
            int pc = pivot_cols[i];
            Rat s(0);
            for (int j = pc + 1; j < kCols; ++j)
                if (m[i][j] != 0 && x[j] != 0) s += Rat(m[i][j]) * x[j];
            x[pc] = -s / Rat(m[i][pc]);
        }
        result.kernel.push_back(std::move(x));
    }
    return result;
}

int stabilizer_dim(const KForm& omega) {
    return stabilizer(omega).dim;
}

Mat8Q random_quarter_rotation(SplitMix64& rng, int factors) {
    Mat8Q g = mat_identity();
    for (int f = 0; f < factors; ++f) {
        int p = static_cast<int>(rng.next_below(8)) + 1;
        int q = static_cast<int>(rng.next_below(7)) + 1;
        if (q >= p) ++q;
        if (p > q) std::swap(p, q);
        int quarters = static_cast<int>(rng.next_below(3)) + 1;
        g = mat_mul(exp_quarter_turn(plane_generator(p, q), quarters), g);
    }
    return g;
}

}  // namespace caliber
