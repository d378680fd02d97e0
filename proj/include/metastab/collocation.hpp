#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "metastab/measure.hpp"

namespace metastab {

// Uniform tensor Fourier grid on [0,1)^dim with an odd number of nodes per
// axis. Flat indices are axis-major with axis 0 fastest:
// i = i0 + n*i1 + n^2*i2 + ...
struct CollocationGrid {
    int dim = 1;
    int n_per_axis = 3;

    std::size_t size() const;
    Eigen::VectorXd node(std::size_t flat) const;
    // symmetric Fourier mode set -m..m, m = (n-1)/2
    std::vector<int> mode_indices() const;
};

// Default cap on the total node count; grids beyond it are rejected.
inline constexpr std::size_t kDefaultMaxNodes = 1u << 14;

CollocationGrid build_grid(int dim, int n, std::size_t max_nodes = kDefaultMaxNodes);

// First/second derivative collocation matrices for one axis (all axes share
// them: the grid is uniform with equal n). Exact on the resolved modes
// |k| <= (n-1)/2.
struct DiffMatrices {
    Eigen::MatrixXd d1;
    Eigen::MatrixXd d2;
};

DiffMatrices diff_matrices(const CollocationGrid& grid);

// coordinates / weights / f_Q at the grid nodes (weights: normalized
// Boltzmann factors, the discrete mu_Q)
NodalMeasure nodal_measure(const CollocationGrid& grid, const CanonicalMeasure& measure);

}  // namespace metastab
