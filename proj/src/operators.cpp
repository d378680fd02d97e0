#include "metastab/operators.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <stdexcept>
#include <vector>

namespace metastab {

std::string operator_kind_name(OperatorKind k) {
    switch (k) {
        case OperatorKind::Generator: return "generator";
        case OperatorKind::Taylor: return "taylor";
        case OperatorKind::Exponential: return "exponential";
        case OperatorKind::UlamSpatial: return "ulam_spatial";
        case OperatorKind::UlamSmoluchowski: return "ulam_smoluchowski";
    }
    return "unknown";
}

namespace {

// out += row_scale .* (small matrix applied along `axis` of the tensor grid)
void add_axis_operator(Eigen::MatrixXd& out, const Eigen::MatrixXd& small, int axis,
                       const CollocationGrid& grid, const Eigen::VectorXd* row_scale) {
    const int n = grid.n_per_axis;
    const std::size_t total = grid.size();
    std::size_t stride = 1;
    for (int a = 0; a < axis; ++a) stride *= static_cast<std::size_t>(n);
    // every flat index splits as i = base + ia*stride with ia the axis index
    for (std::size_t i = 0; i < total; ++i) {
        const int ia = static_cast<int>((i / stride) % static_cast<std::size_t>(n));
        const std::size_t base = i - static_cast<std::size_t>(ia) * stride;
        const double scale = row_scale ? (*row_scale)[i] : 1.0;
        for (int ja = 0; ja < n; ++ja) {
            const std::size_t j = base + static_cast<std::size_t>(ja) * stride;
            out(i, j) += scale * small(ia, ja);
        }
    }
}

}  // namespace

OperatorMatrix assemble_generator(const CollocationGrid& grid, const PotentialSpec& spec,
                                  const DynamicsParams& params) {
    params.validate();
    spec.validate();
    if (spec.dim != grid.dim)
        throw std::invalid_argument("assemble_generator: potential/grid dimension mismatch");

    const std::size_t total = grid.size();
    const DiffMatrices dm = diff_matrices(grid);
    const CompiledPotential compiled(spec);

    // gradient components at all nodes
    std::vector<Eigen::VectorXd> grad_axis(grid.dim, Eigen::VectorXd(total));
    std::vector<double> g(grid.dim);
    for (std::size_t i = 0; i < total; ++i) {
        const Eigen::VectorXd q = grid.node(i);
        compiled.gradient(q.data(), g.data());
        for (int a = 0; a < grid.dim; ++a) grad_axis[a][i] = g[a];
    }

    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(total, total);
    const Eigen::MatrixXd d2_scaled = dm.d2 / params.beta;
    for (int a = 0; a < grid.dim; ++a) {
        add_axis_operator(L, d2_scaled, a, grid, nullptr);
        const Eigen::VectorXd neg_grad = -grad_axis[a];
        add_axis_operator(L, dm.d1, a, grid, &neg_grad);
    }

    // balance the diagonal so the row sums (hence L*1) vanish exactly;
    // the correction is at rounding level
    for (std::size_t i = 0; i < total; ++i) {
        double off = 0.0;
        for (std::size_t j = 0; j < total; ++j)
            if (j != i) off += L(i, j);
        L(i, i) = -off;
    }

    OperatorMatrix op;
    op.kind = OperatorKind::Generator;
    op.t = 0.0;
    op.params = params;
    op.grid = grid;
    op.matrix = std::move(L);
    return op;
}

namespace {

void require_generator(const OperatorMatrix& generator, const char* who) {
    if (generator.kind != OperatorKind::Generator)
        throw std::invalid_argument(std::string(who) + ": input must be a generator matrix");
}

}  // namespace

OperatorMatrix taylor_propagator(const OperatorMatrix& generator, double t) {
    require_generator(generator, "taylor_propagator");
    if (t < 0.0) throw std::invalid_argument("taylor_propagator: t must be >= 0");
    const double gamma = generator.params.gamma;
    const double c = t * t / 2.0 - gamma * t * t * t / 6.0;
    OperatorMatrix op;
    op.kind = OperatorKind::Taylor;
    op.t = t;
    op.params = generator.params;
    op.grid = generator.grid;
    const Eigen::Index n = generator.matrix.rows();
    op.matrix = Eigen::MatrixXd::Identity(n, n) + c * generator.matrix;
    return op;
}

OperatorMatrix smoluchowski_propagator(const OperatorMatrix& generator, double lag) {
    require_generator(generator, "smoluchowski_propagator");
    if (lag < 0.0) throw std::invalid_argument("smoluchowski_propagator: lag must be >= 0");
    OperatorMatrix op;
    op.kind = OperatorKind::Exponential;
    op.t = lag;
    op.params = generator.params;
    op.grid = generator.grid;
    if (lag == 0.0) {
        const Eigen::Index n = generator.matrix.rows();
        op.matrix = Eigen::MatrixXd::Identity(n, n);
    } else {
        op.matrix = (lag * generator.matrix).exp();
    }
    return op;
}

OperatorMatrix exp_propagator(const OperatorMatrix& generator, double t) {
    if (t < 0.0) throw std::invalid_argument("exp_propagator: t must be >= 0");
    OperatorMatrix op = smoluchowski_propagator(generator, t * t / 2.0);
    op.t = t;
    return op;
}

}  // namespace metastab
