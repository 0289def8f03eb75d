#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dhboltz/lattice.hpp"

namespace dhboltz {

/// Which eigenvalue ordering the rotation matrices follow.
///
/// strong: E_plus - E_minus = sqrt(J_k^2 + U^2) > 0 everywhere; the canonical
/// convention used by the kernels. weak: the approximate ordering with
/// E_minus ~ J_k + U/2 and E_plus ~ U/2, valid for |U| << |J_k| and used only
/// inside the weak-coupling validation path.
enum class Ordering { strong, weak };

enum Species : int { sp_minus = 0, sp_plus = 1 };

/// 2x2 rotation, rows indexed by quasi-particle species (minus, plus),
/// columns by the site basis X in {0, 1}.
struct RotationMatrix {
    double m[2][2];
    double row_sum(int a) const { return m[a][0] + m[a][1]; }
    double alt_sum(int a) const { return m[a][0] - m[a][1]; }
};

/// Hole and quasi-particle energies (E_minus, E_plus).
inline std::pair<double, double> energies(const ModelParams& params, double jk) {
    const double w = std::sqrt(jk * jk + params.U * params.U);
    return {0.5 * (params.U - jk - w), 0.5 * (params.U - jk + w)};
}

/// Energy of a particle-hole pair created at fixed momentum,
/// sqrt(J_k^2 + U^2); minimal value U where J_k vanishes.
inline double direct_gap(const ModelParams& params, double jk) {
    return std::sqrt(jk * jk + params.U * params.U);
}

/// Strong-order rotation. sin(phi) carries the sign of J_k and is defined
/// as 0 at J_k = 0 (the limit value).
inline RotationMatrix rotation_matrix(const ModelParams& params, double jk) {
    const double w = std::sqrt(jk * jk + params.U * params.U);
    double c = 1.0, s = 0.0;
    if (w > 0.0) {
        c = std::sqrt(0.5 * (1.0 + params.U / w));
        const double s2 = 0.5 * (1.0 - params.U / w);
        s = (jk > 0.0 ? 1.0 : (jk < 0.0 ? -1.0 : 0.0)) * std::sqrt(s2 > 0.0 ? s2 : 0.0);
    }
    return RotationMatrix{{{c, s}, {-s, c}}};
}

/// Weak-order energies (E_minus ~ J_k + U/2, E_plus ~ U/2).
inline std::pair<double, double> weak_energies(const ModelParams& params, double jk) {
    return {jk + 0.5 * params.U, 0.5 * params.U};
}

/// Weak-order approximate rotation, singular at J_k = 0.
inline RotationMatrix weak_rotation_matrix(const ModelParams& params, double jk) {
    if (jk == 0.0)
        throw std::domain_error("weak_rotation_matrix: singular at J_k = 0");
    const double u = params.U / (2.0 * jk);
    const double r = 1.0 / std::sqrt(2.0);
    return RotationMatrix{{{r * (1.0 + u), r * (1.0 - u)}, {r * (-1.0 + u), r * (1.0 + u)}}};
}

/// Largest residual of the eigenvalue equation
/// (J_k/2) sum_X O^a_X = (-E^a + U^Y) O^a_Y over a and Y.
inline double eigen_residual(const ModelParams& params, double jk,
                             const RotationMatrix& o, std::pair<double, double> e) {
    const double ea[2] = {e.first, e.second};
    const double uy[2] = {0.0, params.U};
    double worst = 0.0;
    for (int a = 0; a < 2; ++a) {
        const double lhs = 0.5 * jk * o.row_sum(a);
        for (int y = 0; y < 2; ++y) {
            const double r = std::abs(lhs - (-ea[a] + uy[y]) * o.m[a][y]);
            if (r > worst) worst = r;
        }
    }
    return worst;
}

/// Per-k energies, rotations and gaps for one ordering convention.
/// Construction is a pure map over k; the table is immutable afterwards.
struct SpectralTable {
    Ordering ordering = Ordering::strong;
    ModelParams params;
    std::vector<double> e[2];     // e[species][k]
    std::vector<double> o[2][2];  // o[species][X][k]
    std::vector<double> gap;      // sqrt(J_k^2 + U^2)
    std::vector<std::uint8_t> singular;  // weak order only: J_k == 0 fallback rows

    int npoints() const { return static_cast<int>(gap.size()); }
    double min_gap() const {
        double g = gap.empty() ? 0.0 : gap[0];
        for (double x : gap) g = std::min(g, x);
        return g;
    }
};

inline SpectralTable make_spectral_table(const ModelParams& params, const MomentumGrid& grid,
                                         Ordering ordering = Ordering::strong) {
    SpectralTable t;
    t.ordering = ordering;
    t.params = params;
    const int n = grid.npoints();
    for (int a = 0; a < 2; ++a) {
        t.e[a].resize(n);
        t.o[a][0].resize(n);
        t.o[a][1].resize(n);
    }
    t.gap.resize(n);
    t.singular.assign(n, 0);
    for (int k = 0; k < n; ++k) {
        const double jk = grid.dispersion_at(k);
        t.gap[k] = direct_gap(params, jk);
        RotationMatrix o;
        std::pair<double, double> e;
        if (ordering == Ordering::strong) {
            o = rotation_matrix(params, jk);
            e = energies(params, jk);
        } else {
            e = weak_energies(params, jk);
            if (jk == 0.0) {
                // U -> 0 limit row; these points are masked by the weak
                // validation path, the finite values just keep sums defined.
                const double r = 1.0 / std::sqrt(2.0);
                o = RotationMatrix{{{r, r}, {-r, r}}};
                t.singular[k] = 1;
            } else {
                o = weak_rotation_matrix(params, jk);
            }
        }
        t.e[0][k] = e.first;
        t.e[1][k] = e.second;
        for (int a = 0; a < 2; ++a)
            for (int x = 0; x < 2; ++x) t.o[a][x][k] = o.m[a][x];
    }
    return t;
}

/// Ground-state two-point correlators of the Mott insulator at double
/// occupancy docc: f01 = J_k/(4 sqrt(U^2+J_k^2)), f00 + f11 = 1/2,
/// f11 - f00 = -U/(2 sqrt(U^2+J_k^2)) + 2 docc.
struct GroundStateCorrelators {
    std::vector<double> f01, f00, f11;
    double docc = 0.0;
};

inline GroundStateCorrelators ground_state_correlators(const ModelParams& params,
                                                       const MomentumGrid& grid,
                                                       double docc = 0.0) {
    if (docc < 0.0 || docc > 0.5)
        throw std::invalid_argument("ground_state_correlators: docc must be in [0, 1/2]");
    GroundStateCorrelators g;
    g.docc = docc;
    const int n = grid.npoints();
    g.f01.resize(n);
    g.f00.resize(n);
    g.f11.resize(n);
    for (int k = 0; k < n; ++k) {
        const double jk = grid.dispersion_at(k);
        const double w = std::sqrt(params.U * params.U + jk * jk);
        const double uw = (w > 0.0) ? params.U / w : 1.0;
        g.f01[k] = (w > 0.0) ? jk / (4.0 * w) : 0.0;
        g.f00[k] = 0.25 + 0.25 * uw - docc;
        g.f11[k] = 0.25 - 0.25 * uw + docc;
    }
    return g;
}

struct DistributionPair {
    double f_minus = 0.0;
    double f_plus = 0.0;
    bool physical = true;  // within [-1e-9, 1 + 1e-9]
};

/// Distribution functions from the diagonal rotated correlators:
/// f^a = 1/2 + (1/2 - 2 docc) sum_X (-1)^X (O^a_X)^2 + 2 f^{aa,corr}.
/// Strong-order convention; sum_X (-1)^X (O^a_X)^2 = +-U/sqrt(U^2+J_k^2).
inline DistributionPair correlator_to_distribution(const ModelParams& params, double jk,
                                                   double corr_minus, double corr_plus,
                                                   double docc = 0.0) {
    const RotationMatrix o = rotation_matrix(params, jk);
    DistributionPair out;
    const double wgt = 0.5 - 2.0 * docc;
    const double proj[2] = {o.m[0][0] * o.m[0][0] - o.m[0][1] * o.m[0][1],
                            o.m[1][0] * o.m[1][0] - o.m[1][1] * o.m[1][1]};
    out.f_minus = 0.5 + wgt * proj[0] + 2.0 * corr_minus;
    out.f_plus = 0.5 + wgt * proj[1] + 2.0 * corr_plus;
    constexpr double eps = 1e-9;
    out.physical = out.f_minus >= -eps && out.f_minus <= 1.0 + eps &&
                   out.f_plus >= -eps && out.f_plus <= 1.0 + eps;
    return out;
}

}  // namespace dhboltz
