#include "metastab/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "metastab/parallel.hpp"

namespace metastab {

namespace {

constexpr double kMinRegionMass = 1e-12;
constexpr double kMinAcceptance = 1e-4;
constexpr long kMaxProposalsPerDraw = 50'000'000;

int default_scan_points(int dim) {
    switch (dim) {
        case 1: return 4096;
        case 2: return 256;
        default: return 32;
    }
}

}  // namespace

void Region::validate(int dim) const {
    if (lo.size() != dim || hi.size() != dim)
        throw std::invalid_argument("Region: dimension mismatch");
    for (int a = 0; a < dim; ++a) {
        if (!(lo[a] >= 0.0 && lo[a] < hi[a] && hi[a] <= 1.0))
            throw std::invalid_argument("Region: need 0 <= lo < hi <= 1 on every axis");
    }
}

bool Region::contains(const double* q) const {
    for (int a = 0; a < lo.size(); ++a)
        if (q[a] < lo[a] || q[a] >= hi[a]) return false;
    return true;
}

double Region::volume() const {
    double v = 1.0;
    for (int a = 0; a < lo.size(); ++a) v *= hi[a] - lo[a];
    return v;
}

PositionSampler::PositionSampler(const CanonicalMeasure& measure, std::optional<Region> box,
                                 Indicator indicator, PointWeight extra_weight,
                                 int scan_points_per_axis)
    : measure_(&measure), indicator_(std::move(indicator)), extra_weight_(std::move(extra_weight)) {
    const int d = measure.dim();
    if (box) {
        box->validate(d);
        box_ = std::move(*box);
    } else {
        box_.lo = Eigen::VectorXd::Zero(d);
        box_.hi = Eigen::VectorXd::Ones(d);
    }

    // dense scan over the proposal box: envelope (indicator ignored, so the
    // bound is safe) and region mass / predicted acceptance
    const int pts = scan_points_per_axis > 0 ? scan_points_per_axis : default_scan_points(d);
    std::vector<int> idx(d, 0);
    Eigen::VectorXd q(d);
    long total = 1;
    for (int a = 0; a < d; ++a) total *= pts;
    double max_w = 0.0;
    double sum_region_w = 0.0;
    for (long it = 0; it < total; ++it) {
        for (int a = 0; a < d; ++a)
            q[a] = box_.lo[a] + (idx[a] + 0.5) * (box_.hi[a] - box_.lo[a]) / pts;
        double w = measure.boltzmann_weight(q.data());
        if (extra_weight_) w *= extra_weight_(q.data());
        if (w > max_w) max_w = w;
        if (!indicator_ || indicator_(q)) sum_region_w += w;
        for (int a = 0; a < d; ++a) {
            if (++idx[a] < pts) break;
            idx[a] = 0;
        }
    }
    envelope_ = max_w * (1.0 + 1e-6);

    const double cell_volume = box_.volume() / static_cast<double>(total);
    const double region_integral = sum_region_w * cell_volume;
    region_mass_ = region_integral / measure.partition_function();
    if (!(region_mass_ > kMinRegionMass))
        throw std::invalid_argument("PositionSampler: region has no f_Q mass (quadrature gave " +
                                    std::to_string(region_mass_) + ")");

    predicted_acceptance_ = envelope_ > 0.0 ? region_integral / (box_.volume() * envelope_) : 0.0;
    if (!(predicted_acceptance_ >= kMinAcceptance))
        throw std::runtime_error(
            "PositionSampler: predicted acceptance rate " + std::to_string(predicted_acceptance_) +
            " is below 1e-4; use a tighter proposal region (beta may be extreme)");
}

void PositionSampler::draw(Philox& rng, double* q) const {
    const int d = measure_->dim();
    Eigen::VectorXd point(d);
    for (long trial = 0; trial < kMaxProposalsPerDraw; ++trial) {
        for (int a = 0; a < d; ++a)
            point[a] = box_.lo[a] + (box_.hi[a] - box_.lo[a]) * rng.next_uniform();
        double w = measure_->boltzmann_weight(point.data());
        if (extra_weight_) w *= extra_weight_(point.data());
        if (rng.next_uniform() * envelope_ >= w) continue;
        if (indicator_ && !indicator_(point)) continue;
        for (int a = 0; a < d; ++a) q[a] = point[a];
        return;
    }
    throw std::runtime_error("PositionSampler: no acceptance within the proposal budget");
}

namespace {

Eigen::ArrayXXd draw_positions(const PotentialSpec& spec, const DynamicsParams& params, int n,
                               std::uint64_t seed, std::optional<Region> box, Indicator indicator) {
    params.validate();
    if (n < 0) throw std::invalid_argument("sample_canonical_position: n must be >= 0");
    const CanonicalMeasure measure(spec, params.beta);
    const PositionSampler sampler(measure, std::move(box), std::move(indicator));
    Eigen::ArrayXXd out(spec.dim, n);
    const std::uint64_t key = mix64(seed);
    parallel_for(0, static_cast<std::size_t>(n), [&](std::size_t w) {
        Philox rng(key, w);
        sampler.draw(rng, out.col(static_cast<Eigen::Index>(w)).data());
    });
    return out;
}

}  // namespace

Eigen::ArrayXXd sample_canonical_position(const PotentialSpec& spec, const DynamicsParams& params,
                                          int n, std::uint64_t seed) {
    return draw_positions(spec, params, n, seed, std::nullopt, {});
}

Eigen::ArrayXXd sample_canonical_position(const PotentialSpec& spec, const DynamicsParams& params,
                                          int n, const Region& region, std::uint64_t seed) {
    return draw_positions(spec, params, n, seed, region, {});
}

Eigen::ArrayXXd sample_canonical_position(const PotentialSpec& spec, const DynamicsParams& params,
                                          int n, const Indicator& region, std::uint64_t seed) {
    if (!region) throw std::invalid_argument("sample_canonical_position: empty indicator");
    return draw_positions(spec, params, n, seed, std::nullopt, region);
}

Eigen::ArrayXXd sample_canonical_momentum(int dim, const DynamicsParams& params, int n,
                                          std::uint64_t seed) {
    params.validate();
    if (dim < 1) throw std::invalid_argument("sample_canonical_momentum: dim must be >= 1");
    if (n < 0) throw std::invalid_argument("sample_canonical_momentum: n must be >= 0");
    Eigen::ArrayXXd out(dim, n);
    const double scale = 1.0 / std::sqrt(params.beta);
    const std::uint64_t key = mix64(seed);
    parallel_for(0, static_cast<std::size_t>(n), [&](std::size_t w) {
        Philox rng(key, w);
        for (int a = 0; a < dim; ++a) out(a, static_cast<Eigen::Index>(w)) = scale * rng.next_normal();
    });
    return out;
}

}  // namespace metastab
