#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "vrsmooth/smoother.hpp"

namespace vrsmooth {

enum class Regression { Bimodal, LinearPeak, Sine };

enum class Design {
    Uniform01,
    TruncNormalA,  ///< N(0.5, 0.5^2) restricted to (0, 1)
    TruncNormalB,  ///< N(0, 1) restricted to (0, 1)
};

std::string_view to_string(Regression r);
std::string_view to_string(Design d);
Regression regression_from_string(std::string_view s);
Design design_from_string(std::string_view s);

/// Independent random stream keyed by (master seed, stream index), so that
/// replication i draws the same numbers whichever thread runs it.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    /// Uniform on the open interval (0, 1).
    double uniform();
    /// Standard normal by inversion.
    double normal();

private:
    std::mt19937_64 engine_;
};

/// Regression function, design and homoscedastic Gaussian noise of one
/// simulation setting. sigma = noise_k * sigma0(regression).
struct Scenario {
    Regression regression = Regression::Sine;
    Design design = Design::Uniform01;
    double noise_k = 1.0;

    double sigma0() const;
    double sigma() const { return noise_k * sigma0(); }

    double m(double x) const;
    double dm(double x) const;
    double d2m(double x) const;

    double density(double x) const;
    /// Design quantile: maps u in (0, 1) to a covariate in [0, 1].
    double design_quantile(double u) const;
};

/// n draws X ~ design, Y = m(X) + sigma * eps with eps ~ N(0, 1).
Dataset sample(const Scenario& s, std::size_t n, RngStream& stream);

}  // namespace vrsmooth
