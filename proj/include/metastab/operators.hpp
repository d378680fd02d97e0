#pragma once

#include <Eigen/Dense>

#include <string>

#include "metastab/collocation.hpp"
#include "metastab/dynamics.hpp"
#include "metastab/potential.hpp"

namespace metastab {

enum class OperatorKind {
    Generator,         // b^-1 Laplace - grad V . grad, lag-free
    Taylor,            // I + (t^2/2 - gamma t^3/6) * generator
    Exponential,       // expm((t^2/2) * generator)
    UlamSpatial,       // Monte-Carlo transition matrix of the spatial dynamics
    UlamSmoluchowski,  // Monte-Carlo transition matrix of the overdamped dynamics
};

std::string operator_kind_name(OperatorKind k);

// Dense nodal discretization of an operator on the collocation grid,
// tagged with its lag time and physical parameters.
struct OperatorMatrix {
    OperatorKind kind = OperatorKind::Generator;
    double t = 0.0;
    DynamicsParams params;
    CollocationGrid grid;
    Eigen::MatrixXd matrix;
};

// Nodal matrix of (1/beta) Laplace - grad V . grad. Rows are balanced so the
// constant vector lies in the kernel exactly.
OperatorMatrix assemble_generator(const CollocationGrid& grid, const PotentialSpec& spec,
                                  const DynamicsParams& params);

// I + (t^2/2 - gamma t^3/6) L; third-order accurate positional propagator.
OperatorMatrix taylor_propagator(const OperatorMatrix& generator, double t);

// expm((t^2/2) L); contractive reconstruction, equal to the overdamped
// propagator at lag t^2/2.
OperatorMatrix exp_propagator(const OperatorMatrix& generator, double t);

// expm(lag * L): the overdamped (Smoluchowski) transfer operator on the
// weighted space.
OperatorMatrix smoluchowski_propagator(const OperatorMatrix& generator, double lag);

}  // namespace metastab
