#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhboltz {

/// Hubbard model parameters. Energies are measured in units of the hopping
/// scale J, times in hbar/J. The coordination number is fixed by the
/// hypercubic realization, Z = 2*dim.
struct ModelParams {
    double U = 0.0;
    double J = 1.0;
    int dim = 2;

    int coordination() const { return 2 * dim; }

    void validate() const {
        if (U < 0.0) throw std::invalid_argument("ModelParams: U must be >= 0");
        if (J <= 0.0) throw std::invalid_argument("ModelParams: J must be > 0");
        if (dim < 2) throw std::invalid_argument("ModelParams: dim must be >= 2");
    }
};

/// Nearest-neighbor hypercubic dispersion J_k = (J/d) * sum_i cos(k_i).
/// The 1/d normalization keeps the bandwidth at 2J for every dimension.
inline double dispersion(const ModelParams& params, std::span<const double> k) {
    if (static_cast<int>(k.size()) != params.dim)
        throw std::invalid_argument("dispersion: k has wrong dimension");
    double acc = 0.0;
    for (double ki : k) acc += std::cos(ki);
    return params.J * acc / static_cast<double>(params.dim);
}

/// Periodic momentum grid with tabulated dispersion and closed index
/// arithmetic: add(i,j) and negate(i) return grid points, so momentum
/// conservation in collision sums is exact by construction.
///
/// Immutable after construction; safe to share across threads.
class MomentumGrid {
public:
    MomentumGrid(const ModelParams& params, std::vector<int> sizes)
        : params_(params), sizes_(std::move(sizes)) {
        params_.validate();
        if (static_cast<int>(sizes_.size()) != params_.dim)
            throw std::invalid_argument("MomentumGrid: sizes length must equal dim");
        for (int n : sizes_)
            if (n < 2)
                throw std::invalid_argument("MomentumGrid: every axis needs at least 2 points");
        n_ = 1;
        for (int n : sizes_) {
            if (n_ > (1 << 22) / n)
                throw std::invalid_argument("MomentumGrid: grid too large");
            n_ *= n;
        }

        const int d = params_.dim;
        jk_.resize(n_);
        std::vector<int> c(d);
        for (int i = 0; i < n_; ++i) {
            unravel(i, c);
            double acc = 0.0;
            for (int ax = 0; ax < d; ++ax)
                acc += std::cos(two_pi() * c[ax] / sizes_[ax]);
            jk_[i] = params_.J * acc / d;
        }

        neg_.resize(n_);
        for (int i = 0; i < n_; ++i) {
            unravel(i, c);
            for (int ax = 0; ax < d; ++ax) c[ax] = (sizes_[ax] - c[ax]) % sizes_[ax];
            neg_[i] = ravel(c);
        }

        add_.resize(static_cast<std::size_t>(n_) * n_);
        std::vector<int> cj(d);
        for (int i = 0; i < n_; ++i) {
            unravel(i, c);
            for (int j = 0; j < n_; ++j) {
                unravel(j, cj);
                int flat = 0;
                for (int ax = 0; ax < d; ++ax)
                    flat = flat * sizes_[ax] + (c[ax] + cj[ax]) % sizes_[ax];
                add_[static_cast<std::size_t>(i) * n_ + j] = flat;
            }
        }
    }

    const ModelParams& params() const { return params_; }
    int npoints() const { return n_; }
    int dim() const { return params_.dim; }
    const std::vector<int>& sizes() const { return sizes_; }

    double dispersion_at(int i) const { return jk_[i]; }
    const std::vector<double>& dispersions() const { return jk_; }

    int add(int i, int j) const { return add_[static_cast<std::size_t>(i) * n_ + j]; }
    int negate(int i) const { return neg_[i]; }
    int sub(int i, int j) const { return add(i, neg_[j]); }
    const std::int32_t* add_row(int i) const { return add_.data() + static_cast<std::size_t>(i) * n_; }
    const std::int32_t* negate_table() const { return neg_.data(); }

    /// Integer lattice coordinates m_i of point i, with k_i = 2 pi m_i / n_i.
    std::vector<int> coords(int i) const {
        std::vector<int> c(params_.dim);
        unravel(i, c);
        return c;
    }

    /// Momentum components in radians, each in [0, 2 pi).
    std::vector<double> kpoint(int i) const {
        std::vector<int> c = coords(i);
        std::vector<double> k(c.size());
        for (std::size_t ax = 0; ax < c.size(); ++ax)
            k[ax] = two_pi() * c[ax] / sizes_[ax];
        return k;
    }

    /// Sorted distinct dispersion values (1e-12 merge tolerance).
    std::vector<double> distinct_dispersions() const {
        std::vector<double> v = jk_;
        std::sort(v.begin(), v.end());
        std::vector<double> out;
        for (double x : v)
            if (out.empty() || x - out.back() > 1e-12) out.push_back(x);
        return out;
    }

    /// Mean spacing of distinct J_k values; the default delta broadening
    /// is half of this.
    double mean_level_spacing() const {
        std::vector<double> d = distinct_dispersions();
        if (d.size() < 2) return params_.J;
        return (d.back() - d.front()) / static_cast<double>(d.size() - 1);
    }

private:
    static constexpr double two_pi() { return 6.283185307179586476925286766559; }

    void unravel(int i, std::vector<int>& c) const {
        for (int ax = params_.dim - 1; ax >= 0; --ax) {
            c[ax] = i % sizes_[ax];
            i /= sizes_[ax];
        }
    }
    int ravel(const std::vector<int>& c) const {
        int flat = 0;
        for (int ax = 0; ax < params_.dim; ++ax) flat = flat * sizes_[ax] + c[ax];
        return flat;
    }

    ModelParams params_;
    std::vector<int> sizes_;
    int n_ = 0;
    std::vector<double> jk_;
    std::vector<std::int32_t> add_;
    std::vector<std::int32_t> neg_;
};

inline MomentumGrid build_grid(const ModelParams& params, const std::vector<int>& sizes) {
    return MomentumGrid(params, sizes);
}

}  // namespace dhboltz
