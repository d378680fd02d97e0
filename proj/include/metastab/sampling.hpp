#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>

#include "metastab/dynamics.hpp"
#include "metastab/measure.hpp"
#include "metastab/rng.hpp"

namespace metastab {

// Axis-aligned half-open sub-box of [0,1)^dim.
struct Region {
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;

    void validate(int dim) const;
    bool contains(const double* q) const;
    double volume() const;
};

using Indicator = std::function<bool(const Eigen::VectorXd&)>;

// Rejection sampler for f_Q restricted to a box and/or an indicator set.
// Proposals are uniform on the box; the envelope is the dense-grid maximum of
// the (optionally reweighted) Boltzmann factor over the box, inflated by
// (1 + 1e-6). Each walker draws from its own counter stream, so results do
// not depend on scheduling.
class PositionSampler {
public:
    using PointWeight = std::function<double(const double*)>;

    PositionSampler(const CanonicalMeasure& measure, std::optional<Region> box,
                    Indicator indicator = {}, PointWeight extra_weight = {},
                    int scan_points_per_axis = 0);

    double predicted_acceptance() const { return predicted_acceptance_; }
    double region_mass() const { return region_mass_; }

    // draws one accepted point into q (dim doubles)
    void draw(Philox& rng, double* q) const;

    int dim() const { return measure_->dim(); }

private:
    const CanonicalMeasure* measure_;
    Region box_;
    Indicator indicator_;
    PointWeight extra_weight_;
    double envelope_ = 0.0;
    double predicted_acceptance_ = 0.0;
    double region_mass_ = 0.0;
};

// n i.i.d. draws from f_Q (optionally restricted), one column per sample.
Eigen::ArrayXXd sample_canonical_position(const PotentialSpec& spec, const DynamicsParams& params,
                                          int n, std::uint64_t seed);
Eigen::ArrayXXd sample_canonical_position(const PotentialSpec& spec, const DynamicsParams& params,
                                          int n, const Region& region, std::uint64_t seed);
Eigen::ArrayXXd sample_canonical_position(const PotentialSpec& spec, const DynamicsParams& params,
                                          int n, const Indicator& region, std::uint64_t seed);

// n i.i.d. Gaussian momenta with covariance (1/beta) * identity.
Eigen::ArrayXXd sample_canonical_momentum(int dim, const DynamicsParams& params, int n,
                                          std::uint64_t seed);

}  // namespace metastab
