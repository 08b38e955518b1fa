#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace phasebell {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Default node count for rectangle-rule quadrature on the circle. The rule
// is spectrally accurate for smooth periodic integrands.
inline constexpr std::size_t kDefaultQuadNodes = 4096;

// Wraps an angle into [0, 2pi).
double wrap_angle(double phi);

// Signed distance to the nearest representative, in (-pi, pi].
double wrap_centered(double phi);

/// Single-subsystem phase distribution P(phi) on the circle.
///
/// Variants: Uniform, WrappedGaussian(mean, sigma), PointMass(phi0) and
/// Histogram (piecewise-constant density over given bin edges). Histogram
/// weights are normalized to unit mass on construction.
class PhaseDistribution {
  public:
    enum class Kind { Uniform, WrappedGaussian, PointMass, Histogram };

    static PhaseDistribution uniform();
    static PhaseDistribution wrapped_gaussian(double mean, double sigma);
    static PhaseDistribution point_mass(double phi0);
    static PhaseDistribution histogram(std::vector<double> edges,
                                       std::vector<double> weights);

    Kind kind() const { return kind_; }

    // True for every variant except PointMass, which has no density.
    bool has_density() const { return kind_ != Kind::PointMass; }

    // P(phi). Wrapped Gaussians sum +/-6 wrap images (error < 1e-15 for
    // sigma <= 2.4). Throws InvalidModelError for PointMass.
    double density(double phi) const;

    // Integral of P(phi) e^{i h phi} by closed form:
    //   Uniform        -> 0 (h >= 1)
    //   PointMass      -> e^{i h phi0}
    //   WrappedGaussian-> e^{i h mean} e^{-h^2 sigma^2 / 2}
    //   Histogram      -> exact per-bin integrals of e^{i h phi}
    // h = 0 returns 1; negative h is rejected.
    std::complex<double> harmonic_moment(int harmonic) const;

    // n wrapped samples; identical (model, n, seed) give the identical
    // sequence.
    std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

    // Shifts the distribution by delta on the circle (P'(phi) = P(phi-delta)).
    PhaseDistribution rotated(double delta) const;

    double mean() const { return mean_; }
    double sigma() const { return sigma_; }
    const std::vector<double>& edges() const { return edges_; }
    const std::vector<double>& weights() const { return weights_; }

  private:
    PhaseDistribution() = default;

    Kind kind_ = Kind::Uniform;
    double mean_ = 0.0;  // WrappedGaussian mean or PointMass location
    double sigma_ = 0.0; // WrappedGaussian spread
    std::vector<double> edges_;
    std::vector<double> weights_; // normalized bin masses
    std::vector<double> cdf_;     // cumulative masses for sampling
};

/// Complex mean of e^{i h phi} over a finite sample, with the crude
/// delta-method standard error: sample standard deviation of the real
/// parts of the contributions divided by sqrt(N).
struct EmpiricalMoment {
    std::complex<double> value;
    double se = 0.0;
    std::size_t n = 0;
};

EmpiricalMoment empirical_harmonic_moment(std::span<const double> phases,
                                          int harmonic);

/// Probability density p(dphi) of the phase difference on the circle.
///
/// Unlike PhaseDistribution::harmonic_moment, Fourier coefficients of the
/// smooth variants are computed by quadrature, so they can be checked
/// against the Gaussian closed form as an independent route.
class PhaseDifferenceDensity {
  public:
    static PhaseDifferenceDensity uniform();
    static PhaseDifferenceDensity wrapped_gaussian(double sigma_l);
    static PhaseDifferenceDensity point_mass(double delta0);
    static PhaseDifferenceDensity histogram(std::vector<double> edges,
                                            std::vector<double> weights);

    PhaseDistribution::Kind kind() const { return dist_.kind(); }
    bool has_density() const { return dist_.has_density(); }
    double density(double dphi) const { return dist_.density(dphi); }

    // Integral of p(dphi) e^{i h dphi}. Rectangle-rule quadrature for the
    // wrapped Gaussian; exact handling of point masses, uniform and
    // histogram bins.
    std::complex<double> fourier_coefficient(
        int harmonic, std::size_t quad_nodes = kDefaultQuadNodes) const;

    // Mass under the module's quadrature; 1 within 1e-10 for valid input.
    double quadrature_mass(std::size_t quad_nodes = kDefaultQuadNodes) const;

  private:
    explicit PhaseDifferenceDensity(PhaseDistribution d) : dist_(std::move(d)) {}
    PhaseDistribution dist_;
};

// Locking coherence: the second Fourier coefficient of p(dphi).
std::complex<double> gamma_of_density(const PhaseDifferenceDensity& density,
                                      std::size_t quad_nodes = kDefaultQuadNodes);

// exp(-2 sigma_l^2): the h = 2 characteristic value of a Gaussian phase
// difference. Rejects negative sigma_l.
double gaussian_gamma_closed_form(double sigma_l);

/// Complex phase-locking amplitude E(dphi); |E|^2 is the phase-difference
/// density. Consumers square-normalize on their quadrature grid.
class LockingKernel {
  public:
    // |E|^2 is the wrapped Gaussian of spread sigma_l.
    static LockingKernel gaussian(double sigma_l);
    // Constant amplitude: no phase locking.
    static LockingKernel uniform();
    // E proportional to 1 + cos(2 dphi).
    static LockingKernel raised_cosine();
    static LockingKernel zero();
    static LockingKernel from_function(
        std::function<std::complex<double>(double)> amplitude);

    std::complex<double> amplitude(double dphi) const { return fn_(dphi); }

  private:
    explicit LockingKernel(std::function<std::complex<double>(double)> f)
        : fn_(std::move(f)) {}
    std::function<std::complex<double>(double)> fn_;
};

} // namespace phasebell
