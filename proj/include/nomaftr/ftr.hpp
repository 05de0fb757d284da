// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nomaftr/rng.hpp"

namespace nomaftr {

//! Fluctuating two-ray fading parameters of one link.
struct FtrParams {
    double m = 1;      //!< Gamma shape of the specular fluctuation
    double k = 0;      //!< specular-to-diffuse power ratio
    double delta = 0;  //!< similarity of the two specular amplitudes
    double sigma = 1;  //!< std of each diffuse quadrature component

    //! Throws DomainError naming the offending field.
    void validate() const;
    double two_sigma_sq() const { return 2 * sigma * sigma; }
    //! E[h] = 2 sigma^2 (1 + K)
    double mean_power() const { return two_sigma_sq() * (1 + k); }
    std::string describe() const;
};

/*!
 * Truncated gamma-mixture form of the FTR power density:
 * f(x) = sum_j H_j x^j e^{-x/2s^2} / (j! (2s^2)^{j+1}).
 */
class FtrSeries {
  public:
    FtrSeries() = default;
    FtrSeries(FtrParams params, std::vector<double> d, std::vector<double> h_coeff,
              double residual_imag_max, double cancellation_error);

    const FtrParams& params() const { return params_; }
    int n_terms() const { return static_cast<int>(h_.size()); }
    const std::vector<double>& d() const { return d_; }
    const std::vector<double>& h_coeff() const { return h_; }
    double residual_imag_max() const { return residual_imag_max_; }
    //! Bound on the absolute rounding error of any H_j.
    double cancellation_error() const { return cancellation_error_; }

    //! sum_j H_j
    double normalization() const { return normalization_; }
    //! sum_j H_j (j + 1), equal to 1 + K for the untruncated series
    double first_moment_sum() const { return first_moment_sum_; }
    //! |sum H_j - 1| <= 1e-6 and sum H_j (j+1) within 1e-5 of 1 + K
    bool meets_invariants() const;

    //! ln j! for j < n_terms + 2
    double ln_factorial(int j) const { return ln_fact_[j]; }

  private:
    FtrParams params_;
    std::vector<double> d_;
    std::vector<double> h_;
    std::vector<double> ln_fact_;
    double residual_imag_max_ = 0;
    double cancellation_error_ = 0;
    double normalization_ = 0;
    double first_moment_sum_ = 0;
};

namespace ftr {

inline constexpr int kDefaultTerms = 80;
//! build_series rejects a series whose normalization is off by more than this.
inline constexpr double kTruncationGate = 1e-4;

//! d_j of the Legendre double sum.
double coeff_d(int j, const FtrParams& params);

//! d_j and H_j for j < n_terms; TruncationError when sum H_j is off by > 1e-4.
enum class TruncationGate { enforce, skip };

//! Throws TruncationError past kTruncationGate unless gate is skip (for diagnostics).
FtrSeries build_series(const FtrParams& params, int n_terms = kDefaultTerms,
                       TruncationGate gate = TruncationGate::enforce);

double pdf(double x, const FtrSeries& series);
double cdf(double x, const FtrSeries& series);
//! 1 - cdf without cancellation for small tails.
double ccdf(double x, const FtrSeries& series);
//! Leading small-x behaviour m^m d_0 x / (2 sigma^2 Gamma(m)).
double cdf_asymptotic(double x, const FtrParams& params);
//! E[h^n] = (2 sigma^2)^n sum_j H_j (j+n)!/j!
double moment(int n, const FtrSeries& series);

//! Draws h from the physical two-ray-plus-diffuse construction.
class Sampler {
  public:
    explicit Sampler(const FtrParams& params);
    double operator()(rng::Stream& stream) const;

  private:
    double shape_;
    double v1_, v2_;
    double sigma_;
};

//! Fills out[i] for global indices [begin, begin + out.size()) of one chunk.
void sample_chunk(const FtrParams& params, std::uint64_t seed, std::uint32_t chunk,
                  std::uint32_t tag, double* out, std::size_t count);

std::vector<double> sample(const FtrParams& params, std::size_t count, std::uint64_t seed);

}  // namespace ftr
}  // namespace nomaftr
