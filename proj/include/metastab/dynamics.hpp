#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace metastab {

// Thermodynamic / friction parameters of the SDEs. The noise amplitude is
// always derived from (beta, gamma) so fluctuation-dissipation
// (sigma^2 * beta == 2 * gamma) holds exactly.
struct DynamicsParams {
    double beta = 1.0;
    double gamma = 1.0;

    double sigma() const { return std::sqrt(2.0 * gamma / beta); }

    void validate() const {
        if (!(beta > 0.0)) throw std::invalid_argument("DynamicsParams: beta must be > 0");
        if (!(gamma > 0.0)) throw std::invalid_argument("DynamicsParams: gamma must be > 0");
    }
};

enum class Scheme { LangevinBaoab, SmoluchowskiEm };

inline std::string scheme_name(Scheme s) {
    return s == Scheme::LangevinBaoab ? "langevin_baoab" : "smoluchowski_em";
}

inline Scheme scheme_from_name(const std::string& name) {
    if (name == "langevin_baoab") return Scheme::LangevinBaoab;
    if (name == "smoluchowski_em") return Scheme::SmoluchowskiEm;
    throw std::invalid_argument("unknown scheme '" + name +
                                "' (expected langevin_baoab or smoluchowski_em)");
}

struct SamplerConfig {
    double dt = 1e-3;
    std::uint64_t seed = 0;
    int n_walkers = 0;
    Scheme scheme = Scheme::LangevinBaoab;
    // optional trajectory dump (CSV: walker, step, q..., p...); empty = off
    std::string dump_path;
    int dump_stride = 1;

    void validate() const {
        if (!(dt > 0.0)) throw std::invalid_argument("SamplerConfig: dt must be > 0");
        if (dump_stride < 1) throw std::invalid_argument("SamplerConfig: dump_stride must be >= 1");
    }
};

// Lag times are realized as integer step counts. Rejects rounding that
// perturbs t by more than 0.5%.
inline long steps_for_lag(double t, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("steps_for_lag: dt must be > 0");
    if (t < 0.0) throw std::invalid_argument("steps_for_lag: t must be >= 0");
    if (t == 0.0) return 0;
    long steps = std::lround(t / dt);
    if (steps < 1) steps = 1;
    const double realized = static_cast<double>(steps) * dt;
    if (std::abs(realized - t) > 0.005 * t)
        throw std::invalid_argument("lag time " + std::to_string(t) +
                                    " is not compatible with dt=" + std::to_string(dt) +
                                    " (rounding to " + std::to_string(steps) +
                                    " steps changes it by more than 0.5%)");
    return steps;
}

}  // namespace metastab
