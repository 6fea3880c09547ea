// chansvc - service-rate analysis and simulation for i.i.d. fading channels
// Copyright (C) 2026 the chansvc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Fading models, their power-gain densities and samplers, the link budget,
// and the instantaneous-capacity map C = W ln(1 + gamma Pt d^-alpha/(W N0)).

#ifndef CHANSVC_CHANNEL_HPP
#define CHANSVC_CHANNEL_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "chansvc/rng.hpp"

namespace chansvc {

// Physical-layer parameters. Pr is a dimensionless mean power gain
// multiplying Pt d^-alpha; dB conversions live in the CLI layer.
struct LinkBudget {
    double pt_watts = 0.0;     // average transmit power Pt (W), >= 0
    double n0_w_per_hz = 0.0;  // noise PSD N0 (W/Hz), > 0
    double w_hz = 0.0;         // bandwidth W (Hz), > 0
    double d_meters = 1.0;     // distance d (m), > 0
    double alpha = 0.0;        // path-loss exponent, >= 0
    double pr = 1.0;           // mean power gain Pr, > 0

    // Mean SNR scale rho = Pr*Pt / (W*N0*d^alpha).
    double rho() const;

    // SNR per unit power gain, Pt d^-alpha / (W N0) = rho / Pr.
    double snr_per_unit_gain() const;

    void validate() const;

    // Canonical link carrying a requested rho exactly: Pt = rho, N0 = 1/W,
    // Pr = 1, d = 1, alpha = 0.
    static LinkBudget from_rho(double rho, double w_hz);
};

namespace channel_detail {

// Tabulated inverse CDF on log-spaced nodes with monotone cubic
// interpolation; the sampling mechanism for models given only as a density.
class InverseCdfTable {
public:
    static std::shared_ptr<const InverseCdfTable> build(
        const std::function<double(double)>& pdf, double support_lo, double support_hi,
        int nodes = 4096);

    double sample(double u) const;

private:
    std::vector<double> u_;      // CDF values, strictly increasing
    std::vector<double> gamma_;  // corresponding power gains
    std::vector<double> slope_;  // monotone (Fritsch-Carlson) tangents
};

} // namespace channel_detail

// Which power-gain distribution governs gamma(t).
class FadingModel {
public:
    enum class Kind { nakagami, rayleigh, rician, deterministic, generic };

    static FadingModel nakagami(double m);
    static FadingModel rayleigh();
    static FadingModel rician(double k);
    static FadingModel deterministic();

    // Arbitrary power-gain density on [support_lo, support_hi]. The density
    // must integrate to 1 +- 1e-6 over the support (checked here). Pass
    // build_sampler to also tabulate the inverse CDF for sampling.
    static FadingModel generic(std::function<double(double)> pdf, double support_lo,
                               double support_hi, bool build_sampler = false);

    Kind kind() const noexcept { return kind_; }
    double m() const;  // Nakagami shape (nakagami kind only)
    double k() const;  // Rician K-factor (rician kind only)

    // Nakagami-equivalent shape: m, 1 for Rayleigh, (K+1)^2/(2K+1) for Rician.
    double effective_m() const;

    bool has_sampler() const noexcept { return table_ != nullptr; }
    const channel_detail::InverseCdfTable* sampler() const noexcept { return table_.get(); }
    const std::function<double(double)>& generic_pdf() const;
    std::pair<double, double> support() const;
    double normalization() const noexcept { return normalization_; }

    std::string describe() const;

private:
    FadingModel() = default;

    Kind kind_ = Kind::rayleigh;
    double param_ = 1.0;  // m or K
    std::function<double(double)> pdf_;
    double support_lo_ = 0.0;
    double support_hi_ = 0.0;
    double normalization_ = 1.0;
    std::shared_ptr<const channel_detail::InverseCdfTable> table_;
};

// m = (K+1)^2 / (2K+1); equals 1 iff K = 0, strictly increasing in K.
double rician_k_to_nakagami_m(double k);

// Power-gain density p_gamma(gamma) of the model with mean gain pr. For
// Nakagami m < 1 the density diverges at gamma = 0; +infinity is returned
// there as a boundary value, not an error.
double power_gain_pdf(const FadingModel& model, double pr, double gamma);

// One power-gain draw. Nakagami-family gains are gamma variates with shape
// m and scale pr/m; Deterministic returns pr exactly; Generic requires a
// tabulated sampler.
double sample_power_gain(const FadingModel& model, double pr, RngStream& stream);

// W ln(1 + gamma * Pt d^-alpha / (W N0)) in nats per second.
double instantaneous_capacity(double gamma, const LinkBudget& link);

// Gamma variate, shape > 0, by Marsaglia-Tsang squeeze rejection (shape >= 1)
// with the U^{1/shape} boost below 1.
double gamma_variate(RngStream& stream, double shape, double scale);

} // namespace chansvc

#endif
