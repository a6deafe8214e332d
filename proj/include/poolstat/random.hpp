#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace poolstat {

// Identifies one reproducible random stream. Distinct (master_seed,
// stream_index) pairs give independent streams; the harness uses the trial
// index as the stream index so trials are order-insensitive.
struct SeedStream {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

// Value-semantics random stream. The engine is std::mt19937_64 (bit-exact
// across platforms per the standard); all variate transforms are done here
// rather than with std::*_distribution, whose outputs are
// implementation-defined.
class RandomStream {
public:
    explicit RandomStream(SeedStream s);

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01();

    double uniform(double a, double b);

    // Marsaglia polar method; no spare caching, so the call sequence alone
    // determines the stream state.
    double normal(double mu, double sigma);

    // Inverse-CDF transform.
    double exponential(double rate);

    // Marsaglia-Tsang squeeze for shape >= 1; shape < 1 boosted through
    // gamma(shape+1) * U^(1/shape).
    double gamma(double shape, double scale);

private:
    std::mt19937_64 engine_;
};

struct NormalParams {
    double mu = 0.0;
    double sigma = 1.0;
};
struct UniformParams {
    double a = 0.0;
    double b = 1.0;
};
struct ExponentialParams {
    double rate = 1.0;
};
struct GammaParams {
    double shape = 1.0;
    double scale = 1.0;
};
// Two-component normal mixture weighted by fixed subsample counts:
// n1 draws from component 1, then n2 from component 2.
struct NormalMixtureParams {
    double mu1 = 0.0;
    double sigma1 = 1.0;
    long n1 = 0;
    double mu2 = 0.0;
    double sigma2 = 1.0;
    long n2 = 0;
};

using SourceDistribution = std::variant<NormalParams, UniformParams, ExponentialParams,
                                        GammaParams, NormalMixtureParams>;

// Throws data_error when parameters are out of range (sigma <= 0, b <= a, ...).
void validate(const SourceDistribution& dist);

std::string family_name(const SourceDistribution& dist);

// True when the family's support has a finite lower bound at zero
// (exponential, gamma, uniform with a >= 0).
bool positive_support(const SourceDistribution& dist);

// For mixtures, rescale the component counts proportionally so they sum to
// n (used when drawing subsets of a mixture scenario); identity otherwise.
SourceDistribution resize_for(const SourceDistribution& dist, long n);

// n i.i.d. draws. Mixtures require n == n1 + n2 and return the component-1
// draws first.
std::vector<double> sample(const SourceDistribution& dist, long n, RandomStream& rs);
std::vector<double> sample(const SourceDistribution& dist, long n, SeedStream seed);

}  // namespace poolstat
