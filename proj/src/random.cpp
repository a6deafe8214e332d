#include "poolstat/random.hpp"

#include <cmath>
#include <sstream>

#include "poolstat/errors.hpp"

namespace poolstat {

namespace {

// splitmix64 finalizer, used to spread (master_seed, stream_index) over the
// engine's seed space.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(SeedStream s)
    : engine_(mix64(mix64(s.master_seed) ^ mix64(s.stream_index + 1))) {}

double RandomStream::uniform01() {
    // Top 53 bits -> [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double a, double b) {
    return a + (b - a) * uniform01();
}

double RandomStream::normal(double mu, double sigma) {
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    return mu + sigma * u * std::sqrt(-2.0 * std::log(s) / s);
}

double RandomStream::exponential(double rate) {
    return -std::log1p(-uniform01()) / rate;
}

double RandomStream::gamma(double shape, double scale) {
    if (shape < 1.0) {
        const double g = gamma(shape + 1.0, 1.0);
        const double u = uniform01();
        return scale * g * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;) {
        double x, v;
        do {
            x = normal(0.0, 1.0);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
}

void validate(const SourceDistribution& dist) {
    std::ostringstream msg;
    const bool ok = std::visit(
        [&msg](const auto& p) -> bool {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NormalParams>) {
                if (!(p.sigma > 0.0)) {
                    msg << "normal: sigma must be > 0, got " << p.sigma;
                    return false;
                }
            } else if constexpr (std::is_same_v<T, UniformParams>) {
                if (!(p.b > p.a)) {
                    msg << "uniform: need b > a, got a=" << p.a << " b=" << p.b;
                    return false;
                }
            } else if constexpr (std::is_same_v<T, ExponentialParams>) {
                if (!(p.rate > 0.0)) {
                    msg << "exponential: rate must be > 0, got " << p.rate;
                    return false;
                }
            } else if constexpr (std::is_same_v<T, GammaParams>) {
                if (!(p.shape > 0.0) || !(p.scale > 0.0)) {
                    msg << "gamma: shape and scale must be > 0, got shape=" << p.shape
                        << " scale=" << p.scale;
                    return false;
                }
            } else if constexpr (std::is_same_v<T, NormalMixtureParams>) {
                if (!(p.sigma1 > 0.0) || !(p.sigma2 > 0.0)) {
                    msg << "normal_mixture: sigmas must be > 0";
                    return false;
                }
                if (p.n1 < 0 || p.n2 < 0 || p.n1 + p.n2 < 1) {
                    msg << "normal_mixture: component counts must be nonnegative and sum >= 1";
                    return false;
                }
            }
            return true;
        },
        dist);
    if (!ok) throw data_error(msg.str());
}

std::string family_name(const SourceDistribution& dist) {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NormalParams>) return "normal";
            if constexpr (std::is_same_v<T, UniformParams>) return "uniform";
            if constexpr (std::is_same_v<T, ExponentialParams>) return "exponential";
            if constexpr (std::is_same_v<T, GammaParams>) return "gamma";
            return "normal_mixture";
        },
        dist);
}

bool positive_support(const SourceDistribution& dist) {
    if (std::holds_alternative<ExponentialParams>(dist)) return true;
    if (std::holds_alternative<GammaParams>(dist)) return true;
    if (const auto* u = std::get_if<UniformParams>(&dist)) return u->a >= 0.0;
    return false;
}

SourceDistribution resize_for(const SourceDistribution& dist, long n) {
    const auto* mix = std::get_if<NormalMixtureParams>(&dist);
    if (mix == nullptr) return dist;
    NormalMixtureParams out = *mix;
    const double w1 = static_cast<double>(mix->n1) / static_cast<double>(mix->n1 + mix->n2);
    out.n1 = std::lround(w1 * static_cast<double>(n));
    out.n2 = n - out.n1;
    return out;
}

std::vector<double> sample(const SourceDistribution& dist, long n, RandomStream& rs) {
    validate(dist);
    if (n < 1) throw data_error("sample: n must be >= 1");
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(n));
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NormalParams>) {
                for (long i = 0; i < n; ++i) xs.push_back(rs.normal(p.mu, p.sigma));
            } else if constexpr (std::is_same_v<T, UniformParams>) {
                for (long i = 0; i < n; ++i) xs.push_back(rs.uniform(p.a, p.b));
            } else if constexpr (std::is_same_v<T, ExponentialParams>) {
                for (long i = 0; i < n; ++i) xs.push_back(rs.exponential(p.rate));
            } else if constexpr (std::is_same_v<T, GammaParams>) {
                for (long i = 0; i < n; ++i) xs.push_back(rs.gamma(p.shape, p.scale));
            } else if constexpr (std::is_same_v<T, NormalMixtureParams>) {
                if (p.n1 + p.n2 != n) {
                    std::ostringstream msg;
                    msg << "normal_mixture: component counts " << p.n1 << "+" << p.n2
                        << " must equal requested sample size " << n;
                    throw data_error(msg.str());
                }
                for (long i = 0; i < p.n1; ++i) xs.push_back(rs.normal(p.mu1, p.sigma1));
                for (long i = 0; i < p.n2; ++i) xs.push_back(rs.normal(p.mu2, p.sigma2));
            }
        },
        dist);
    return xs;
}

std::vector<double> sample(const SourceDistribution& dist, long n, SeedStream seed) {
    RandomStream rs(seed);
    return sample(dist, n, rs);
}

}  // namespace poolstat
