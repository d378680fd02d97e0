#include "metastab/collocation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace metastab {

std::size_t CollocationGrid::size() const {
    std::size_t s = 1;
    for (int a = 0; a < dim; ++a) s *= static_cast<std::size_t>(n_per_axis);
    return s;
}

Eigen::VectorXd CollocationGrid::node(std::size_t flat) const {
    Eigen::VectorXd q(dim);
    const double h = 1.0 / n_per_axis;
    for (int a = 0; a < dim; ++a) {
        q[a] = static_cast<double>(flat % n_per_axis) * h;
        flat /= n_per_axis;
    }
    return q;
}

std::vector<int> CollocationGrid::mode_indices() const {
    const int m = (n_per_axis - 1) / 2;
    std::vector<int> modes;
    modes.reserve(n_per_axis);
    for (int k = -m; k <= m; ++k) modes.push_back(k);
    return modes;
}

CollocationGrid build_grid(int dim, int n, std::size_t max_nodes) {
    if (dim < 1) throw std::invalid_argument("build_grid: dim must be >= 1");
    if (n < 3) throw std::invalid_argument("build_grid: n must be >= 3");
    if (n % 2 == 0)
        throw std::invalid_argument("build_grid: n must be odd (got " + std::to_string(n) +
                                    "); the symmetric Fourier mode set needs an odd node count");
    long double total = 1.0L;
    for (int a = 0; a < dim; ++a) total *= n;
    if (total > static_cast<long double>(max_nodes))
        throw std::invalid_argument("build_grid: n^dim = " + std::to_string(static_cast<double>(total)) +
                                    " exceeds the node cap of " + std::to_string(max_nodes));
    return CollocationGrid{dim, n};
}

DiffMatrices diff_matrices(const CollocationGrid& grid) {
    const int n = grid.n_per_axis;
    Eigen::MatrixXd d1 = Eigen::MatrixXd::Zero(n, n);
    // classical closed form for the periodic first-derivative matrix on n odd
    // nodes, period 1: entries pi*(-1)^(j-l)/sin(pi*(j-l)/n), antisymmetric.
    for (int j = 0; j < n; ++j) {
        for (int l = j + 1; l < n; ++l) {
            const int d = j - l;
            const double sign = (d % 2 == 0) ? 1.0 : -1.0;
            const double v = sign * M_PI / std::sin(M_PI * static_cast<double>(d) / n);
            d1(j, l) = v;
            d1(l, j) = -v;
        }
    }
    // The nodal space equals span{e^{2 pi i k q}, |k| <= (n-1)/2} exactly, so
    // the square of the exact first-derivative matrix is the exact
    // second-derivative matrix (and symmetric by antisymmetry of d1).
    Eigen::MatrixXd d2 = d1 * d1;
    return DiffMatrices{std::move(d1), std::move(d2)};
}

NodalMeasure nodal_measure(const CollocationGrid& grid, const CanonicalMeasure& measure) {
    if (measure.dim() != grid.dim)
        throw std::invalid_argument("nodal_measure: measure/grid dimension mismatch");
    const std::size_t n = grid.size();
    NodalMeasure nm;
    nm.coords.resize(n, grid.dim);
    nm.weights.resize(n);
    nm.f_q.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Eigen::VectorXd q = grid.node(i);
        nm.coords.row(i) = q.transpose();
        nm.weights[i] = measure.boltzmann_weight(q);
        nm.f_q[i] = measure.density(q);
    }
    nm.weights /= nm.weights.sum();
    return nm;
}

}  // namespace metastab
