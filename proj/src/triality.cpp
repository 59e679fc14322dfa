#include "caliber/triality.hpp"

#include <algorithm>
#include <stdexcept>

namespace caliber {

namespace {

constexpr int kMu[4][4] = {
    {1, -1, -1, -1},
    {1, 1, -1, 1},
    {1, 1, 1, -1},
    {1, -1, 1, 1},
};

// Diagonals of z_1, z_2, z_3.
constexpr int kZ[3][8] = {
    {1, 1, 1, 1, -1, -1, -1, -1},
    {1, 1, -1, -1, -1, -1, 1, 1},
    {1, 1, -1, -1, 1, 1, -1, -1},
};

}  // namespace

Rat diag_trace(const Diag8& d) {
    Rat t(0);
    for (const Rat& x : d) t += x;
    return t;
}

Rat diag_norm_sq(const Diag8& d) {
    Rat t(0);
    for (const Rat& x : d) t += x * x;
    return t;
}

Diag8 psi_inv(const Span7& c) {
    Diag8 out;
    out.fill(Rat(0));
    // Zero-weight part: e^{1234}, e^{1256}, e^{1278} pull back to
    // z_1/2, z_3/2, z_2/2 respectively.
    const int zslot[3] = {0, 2, 1};
    for (int i = 0; i < 3; ++i)
        for (int dpos = 0; dpos < 8; ++dpos)
            out[dpos] += c[i] * kZ[zslot[i]][dpos] / 2;
    // mu_j components of (c_4..c_7); the mu_j are orthogonal with norm^2 4,
    // and each mu_j pulls back to 2 u_j.
    for (int j = 0; j < 4; ++j) {
        Rat b(0);
        for (int i = 0; i < 4; ++i) b += c[3 + i] * kMu[j][i];
        b /= 4;
        out[2 * j] += 2 * b;
        out[2 * j + 1] -= 2 * b;
    }
    return out;
}

Span7 psi(const Diag8& d) {
    if (diag_trace(d) != 0)
        throw std::invalid_argument("psi requires a traceless diagonal");
    Span7 out;
    out.fill(Rat(0));
    const int zslot[3] = {0, 2, 1};
    for (int i = 0; i < 3; ++i) {
        Rat proj(0);
        for (int dpos = 0; dpos < 8; ++dpos) proj += d[dpos] * kZ[zslot[i]][dpos];
        out[i] = proj / 4;
    }
    for (int j = 0; j < 4; ++j) {
        Rat beta = (d[2 * j] - d[2 * j + 1]) / 2;
        for (int i = 0; i < 4; ++i) out[3 + i] += beta * kMu[j][i] / 2;
    }
    return out;
}

Rat comass_exact(const Span7& c) {
    Diag8 d = psi_inv(c);
    std::sort(d.begin(), d.end());
    Rat top(0);
    for (int i = 4; i < 8; ++i) top += d[i];
    return top / 2;
}

Rat wirtinger_ratio(const Span7& c) {
    Rat n2 = span_norm_sq(c);
    if (n2 == 0) throw std::invalid_argument("wirtinger_ratio requires a nonzero form");
    Rat m = comass_exact(c);
    return n2 / (m * m);
}

bool extremality_check(const Span7& c) {
    Diag8 d = psi_inv(c);
    if (span_norm_sq(c) == 0)
        throw std::invalid_argument("extremality_check requires a nonzero form");
    std::sort(d.begin(), d.end());
    // Multiset {7a, -a x7}: either the top entry is 7 times the negated
    // common value of the lower seven, or the mirrored pattern.
    bool low_equal = true, high_equal = true;
    for (int i = 0; i < 7; ++i)
        if (d[i] != d[0]) low_equal = false;
    for (int i = 1; i < 8; ++i)
        if (d[i] != d[7]) high_equal = false;
    if (low_equal && d[7] == -7 * d[0] && d[0] != 0) return true;
    if (high_equal && d[0] == -7 * d[7] && d[7] != 0) return true;
    return false;
}

const std::array<VertexForm, 8>& vertices() {
    static const std::array<VertexForm, 8> table = [] {
        const int coeffs[8][7] = {
            {1, 1, 1, 1, -1, -1, -1},    // omega1 (the Cayley form)
            {1, 1, 1, -1, 1, 1, 1},      // omega2
            {1, -1, -1, 1, 1, -1, 1},    // omega3
            {1, -1, -1, -1, -1, 1, -1},  // omega4
            {1, -1, 1, 1, 1, 1, -1},     // eta1
            {1, -1, 1, -1, -1, -1, 1},   // eta2
            {1, 1, -1, 1, -1, 1, 1},     // eta3
            {1, 1, -1, -1, 1, -1, -1},   // eta4
        };
        const char* labels[8] = {"omega1", "omega2", "omega3", "omega4",
                                 "eta1",   "eta2",   "eta3",   "eta4"};
        std::array<VertexForm, 8> out;
        for (int i = 0; i < 8; ++i) {
            out[i].label = labels[i];
            for (int j = 0; j < 7; ++j) out[i].coeffs[j] = coeffs[i][j];
            Diag8 m = psi_inv(out[i].coeffs);
            for (Rat& x : m) x /= 4;
            out[i].matrix = m;
        }
        return out;
    }();
    return table;
}

Span7 combine_vertices(const VertexWeights& w) {
    Span7 out;
    out.fill(Rat(0));
    const auto& verts = vertices();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 7; ++j) out[j] += w[i] * verts[i].coeffs[j];
    return out;
}

std::optional<VertexWeights> decompose_convex(const Span7& c) {
    const auto& verts = vertices();
    // Augmented system: 7 coefficient equations plus sum(w) = 1, unknowns w.
    constexpr int kEq = 8, kVar = 8;
    Rat m[kEq][kVar + 1];
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < kVar; ++j) m[i][j] = verts[j].coeffs[i];
        m[i][kVar] = c[i];
    }
    for (int j = 0; j < kVar; ++j) m[7][j] = 1;
    m[7][kVar] = 1;

    std::vector<int> pivot_cols;
    int r = 0;
    for (int col = 0; col < kVar && r < kEq; ++col) {
        int pivot = -1;
        for (int i = r; i < kEq; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j <= kVar; ++j) std::swap(m[pivot][j], m[r][j]);
        Rat inv = m[r][col];
        for (int j = col; j <= kVar; ++j) m[r][j] /= inv;
        for (int i = 0; i < kEq; ++i) {
            if (i == r || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (int j = col; j <= kVar; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    for (int i = r; i < kEq; ++i)
        if (m[i][kVar] != 0) return std::nullopt;  // not in the affine hull

    // The vertices carry exactly one affine dependency, so one free column.
    VertexWeights base, dir;
    base.fill(Rat(0));
    dir.fill(Rat(0));
    std::vector<bool> is_pivot(kVar, false);
    for (int cidx : pivot_cols) is_pivot[cidx] = true;
    int free_col = -1;
    for (int j = 0; j < kVar; ++j)
        if (!is_pivot[j]) free_col = j;
    if (free_col < 0) {
        // Unique solution; feasible iff componentwise nonnegative.
        for (int i = 0; i < r; ++i) base[pivot_cols[i]] = m[i][kVar];
        for (const Rat& w : base)
            if (w < 0) return std::nullopt;
        return base;
    }
    dir[free_col] = 1;
    for (int i = 0; i < r; ++i) {
        base[pivot_cols[i]] = m[i][kVar];
        dir[pivot_cols[i]] = -m[i][free_col];
    }

    // Feasible segment of base + t*dir with all weights >= 0.
    bool has_lo = false, has_hi = false;
    Rat t_lo(0), t_hi(0);
    for (int i = 0; i < kVar; ++i) {
        if (dir[i] > 0) {
            Rat bound = -base[i] / dir[i];
            if (!has_lo || bound > t_lo) t_lo = bound;
            has_lo = true;
        } else if (dir[i] < 0) {
            Rat bound = -base[i] / dir[i];
            if (!has_hi || bound < t_hi) t_hi = bound;
            has_hi = true;
        } else if (base[i] < 0) {
            return std::nullopt;
        }
    }
    if (!has_lo || !has_hi) return std::nullopt;  // dependency is signed, so both exist
    if (t_lo > t_hi) return std::nullopt;

    auto at = [&](const Rat& t) {
        VertexWeights w;
        for (int i = 0; i < kVar; ++i) w[i] = base[i] + t * dir[i];
        return w;
    };
    auto support = [](const VertexWeights& w) {
        int n = 0;
        for (const Rat& x : w)
            if (x != 0) ++n;
        return n;
    };
    VertexWeights lo = at(t_lo), hi = at(t_hi);
    if (t_lo == t_hi) return lo;
    int slo = support(lo), shi = support(hi);
    if (slo != shi) return slo < shi ? lo : hi;
    return std::lexicographical_compare(lo.begin(), lo.end(), hi.begin(), hi.end()) ? hi
                                                                                    : lo;
}

}  // namespace caliber
