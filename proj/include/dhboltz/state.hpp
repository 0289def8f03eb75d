#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dhboltz {

enum Spin : int { spin_up = 0, spin_down = 1 };

/// Real field over (species, spin, k): the distribution planes f^a_{k,s}
/// and the collision right-hand sides share this layout. Flat storage in
/// (species, spin, k) order, k fastest.
struct Field {
    int n = 0;
    std::vector<double> data;

    Field() = default;
    explicit Field(int npoints) : n(npoints), data(4 * static_cast<std::size_t>(npoints), 0.0) {}

    double& at(int species, int spin, int k) {
        return data[plane_index(species, spin) * n + k];
    }
    double at(int species, int spin, int k) const {
        return data[plane_index(species, spin) * n + k];
    }
    double* plane(int species, int spin) {
        return data.data() + plane_index(species, spin) * n;
    }
    const double* plane(int species, int spin) const {
        return data.data() + plane_index(species, spin) * n;
    }

    double min_value() const { return *std::min_element(data.begin(), data.end()); }
    double max_value() const { return *std::max_element(data.begin(), data.end()); }

    void fill(double v) { std::fill(data.begin(), data.end(), v); }

    static std::size_t plane_index(int species, int spin) {
        return static_cast<std::size_t>(species) * 2 + spin;
    }
};

using RhsField = Field;

struct ClampReport {
    double magnitude = 0.0;  // largest distance outside [0, 1]
    int count = 0;           // number of clamped entries
};

/// Clamp occupations to [0, 1] in place.
inline ClampReport clamp_field(Field& f) {
    ClampReport r;
    for (double& x : f.data) {
        if (x < 0.0) {
            r.magnitude = std::max(r.magnitude, -x);
            x = 0.0;
            ++r.count;
        } else if (x > 1.0) {
            r.magnitude = std::max(r.magnitude, x - 1.0);
            x = 1.0;
            ++r.count;
        }
    }
    return r;
}

/// The solver's evolved state: occupations plus the current time
/// (units hbar/J).
struct DistributionState {
    Field f;
    double t = 0.0;

    DistributionState() = default;
    explicit DistributionState(int npoints) : f(npoints) {}

    int npoints() const { return f.n; }
};

}  // namespace dhboltz
