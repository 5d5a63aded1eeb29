#ifndef FRACBURG_GRID_HPP
#define FRACBURG_GRID_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracburg {

/// Uniform periodic grid on [-L, L)^m with N points per axis.
/// Grid points are x_i = -L + i*h, h = 2L/N; the dual lattice is
/// xi_k = pi*k/L with k in [-N/2, N/2).
struct GridSpec {
    int m = 2;      // spatial dimension, 1 or 2
    int n = 512;    // points per axis, power of two
    double box = 64.0;  // half-width L

    GridSpec() = default;
    GridSpec(int m_, int n_, double box_) : m(m_), n(n_), box(box_) { validate(); }

    void validate() const {
        if (m != 1 && m != 2)
            throw std::invalid_argument("GridSpec: m must be 1 or 2");
        if (n < 8 || (n & (n - 1)) != 0)
            throw std::invalid_argument("GridSpec: N must be a power of two >= 8");
        if (!(box > 0.0))
            throw std::invalid_argument("GridSpec: L must be positive");
    }

    double spacing() const { return 2.0 * box / n; }
    double cell_measure() const { return m == 1 ? spacing() : spacing() * spacing(); }
    std::size_t size() const { return m == 1 ? std::size_t(n) : std::size_t(n) * n; }

    /// Coordinate of index i along one axis.
    double coord(int i) const { return -box + spacing() * i; }
    /// Index of the origin (x = 0) along one axis.
    int origin_index() const { return n / 2; }
    /// Signed integer frequency for storage index i (FFT folding).
    int freq_index(int i) const { return i < n / 2 ? i : i - n; }
    /// Dual-lattice frequency for storage index i.
    double freq(int i) const { return M_PI * freq_index(i) / box; }

    bool operator==(const GridSpec& o) const {
        return m == o.m && n == o.n && box == o.box;
    }
};

/// Real scalar function sampled on a GridSpec; row-major for m = 2
/// (index = i1*n + i2). The universal value container of the library.
struct Field {
    GridSpec grid;
    std::vector<double> values;
    std::string meta;  // provenance tag, free-form

    Field() = default;
    explicit Field(const GridSpec& g, double fill = 0.0)
        : grid(g), values(g.size(), fill) {}
    Field(const GridSpec& g, std::vector<double> v, std::string tag = {})
        : grid(g), values(std::move(v)), meta(std::move(tag)) {
        if (values.size() != g.size())
            throw std::invalid_argument("Field: value count does not match grid");
    }

    double& at(int i1, int i2) { return values[std::size_t(i1) * grid.n + i2]; }
    double at(int i1, int i2) const { return values[std::size_t(i1) * grid.n + i2]; }
    double& at(int i) { return values[i]; }
    double at(int i) const { return values[i]; }

    /// Rejects NaN/Inf; fields are required to be finite everywhere.
    void check_finite() const {
        for (double v : values)
            if (!std::isfinite(v))
                throw std::invalid_argument("Field: non-finite value");
    }

    double sup_norm() const {
        double s = 0.0;
        for (double v : values) s = std::max(s, std::abs(v));
        return s;
    }
    /// sum(values) * cell measure, the grid surrogate of the integral.
    double integral() const {
        double s = 0.0;
        for (double v : values) s += v;
        return s * grid.cell_measure();
    }
    double lp_norm(double p) const {
        if (std::isinf(p)) return sup_norm();
        double s = 0.0;
        for (double v : values) s += std::pow(std::abs(v), p);
        return std::pow(s * grid.cell_measure(), 1.0 / p);
    }

    /// Euclidean radius |x| of the grid point at flat index. m = 2 only.
    double radius(std::size_t flat) const {
        int i1 = int(flat) / grid.n, i2 = int(flat) % grid.n;
        return std::hypot(grid.coord(i1), grid.coord(i2));
    }
};

} // namespace fracburg

#endif
