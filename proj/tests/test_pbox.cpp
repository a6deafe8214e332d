#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "poolstat/errors.hpp"
#include "poolstat/pbox.hpp"
#include "poolstat/random.hpp"

using namespace poolstat;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

IntervalDataset ds_of(std::initializer_list<Interval> items) {
    IntervalDataset ds;
    ds.items = items;
    return ds;
}

std::vector<double> iota_points(int n) {
    std::vector<double> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(static_cast<double>(i));
    return xs;
}

// Classical two-sided KS statistic against an analytic CDF.
double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

}  // namespace

TEST_CASE("ecdf") {
    const StepFunction f = ecdf({1.0, 2.0, 2.0, 3.0});
    CHECK(f(2.0) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(f(0.999) == 0.0);
    CHECK(f(3.0) == 1.0);
    CHECK(f(10.0) == 1.0);

    RandomStream rs(SeedStream{31, 0});
    std::vector<double> xs;
    for (int i = 0; i < 40; ++i) xs.push_back(std::round(rs.uniform(-5.0, 5.0)));
    const StepFunction g = ecdf(xs);
    for (const double q : {-6.0, -2.5, 0.0, 1.0, 7.0}) {
        long count = 0;
        for (double x : xs) count += x <= q ? 1 : 0;
        CHECK(g(q) == doctest::Approx(static_cast<double>(count) / 40.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(ecdf({}), data_error);
}

TEST_CASE("pbox from the six-interval example") {
    const IntervalDataset ds = ds_of({{5.05, 6.05},
                                      {5.72, 6.72},
                                      {5.14, 6.14},
                                      {3.51, 4.51},
                                      {4.69, 5.69},
                                      {4.78, 5.78}});
    const PBox pb = pbox_from_intervals(ds);
    CHECK(pb.upper(5.0) == doctest::Approx(3.0 / 6.0).epsilon(1e-12));
    CHECK(pb.lower(5.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

    // Point data collapse the box.
    const PBox pt = pbox_from_intervals(ds_of({{1, 1}, {2, 2}, {3, 3}}));
    for (const double x : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5}) {
        CHECK(pt.upper(x) == pt.lower(x));
    }

    // Widening an interval moves the upper bound up and the lower bound
    // down, never crossing.
    IntervalDataset wide = ds;
    wide.items[2].lo -= 1.0;
    wide.items[2].hi += 1.0;
    const PBox pw = pbox_from_intervals(wide);
    for (double x = 3.0; x <= 8.0; x += 0.05) {
        CHECK(pw.upper(x) >= pb.upper(x) - 1e-12);
        CHECK(pw.lower(x) <= pb.lower(x) + 1e-12);
        CHECK(pw.upper(x) >= pw.lower(x));
    }
}

TEST_CASE("ks band offsets and clipping") {
    RandomStream rs(SeedStream{32, 0});
    std::vector<double> xs;
    for (int i = 0; i < 30; ++i) xs.push_back(rs.normal(0.0, 1.0));
    IntervalDataset data;
    for (double x : xs) data.items.push_back(Interval{x - 0.1, x + 0.1});

    const PBox pb = pbox_from_intervals(data);
    const KSBand band = ks_band(pb, 30, Alpha(0.025));
    CHECK(band.d_crit == doctest::Approx(0.2417).epsilon(1e-3));

    for (double x = -4.0; x <= 4.0; x += 0.1) {
        const double bu = band.upper(x);
        const double fu = pb.upper(x);
        if (bu < 1.0) CHECK(bu == doctest::Approx(fu + band.d_crit).epsilon(1e-12));
        const double bl = band.lower(x);
        const double fl = pb.lower(x);
        if (bl > 0.0) CHECK(bl == doctest::Approx(fl - band.d_crit).epsilon(1e-12));
        CHECK(bu <= 1.0);
        CHECK(bl >= 0.0);
    }
    // Fully clipped above the data.
    CHECK(band.upper(100.0) == 1.0);
    CHECK(band.lower(-100.0) == 0.0);
}

TEST_CASE("band_inverse on the 1..30 example") {
    const StepFunction f = ecdf(iota_points(30));
    const double d = ks_critical(30, Alpha(0.025));
    const PBox pb{f, f};
    const KSBand band = ks_band(pb, 30, Alpha(0.025));

    // Upper band reaches 0.5 once the ECDF reaches 0.5 - d: at x = 8;
    // lower band needs the ECDF at 0.5 + d: at x = 23.
    CHECK(band_inverse(band.upper, 0.5) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(band_inverse(band.lower, 0.5) == doctest::Approx(23.0).epsilon(1e-12));
    CHECK(d > 0.2);  // premise of the counts above

    // Above the supremum.
    CHECK(band_inverse(band.lower, 0.999) == kInf);
    // Below the clipped floor of the upper band.
    CHECK(band_inverse(band.upper, 0.1) == -kInf);

    // Point mass: inverse is the jump for every p above the floor.
    const StepFunction point = ecdf({3.0, 3.0, 3.0});
    for (const double p : {0.05, 0.4, 0.99}) CHECK(band_inverse(point, p) == 3.0);
    CHECK_THROWS_AS(band_inverse(point, 0.0), data_error);
}

TEST_CASE("horizontal width") {
    // Flat layer of the 1..30 band: widths hover around 15.
    const StepFunction f = ecdf(iota_points(30));
    const KSBand band = ks_band(PBox{f, f}, 30, Alpha(0.025));
    const double h = horizontal_width(band, 0.5, 30, 101);
    CHECK(std::fabs(h - 15.0) <= 1.0);

    // Identical points: both inverses stay at the point, width 0 (the layer
    // must fit inside the unclipped region, needs n large enough).
    for (const long n : {12L, 30L}) {
        std::vector<double> same(static_cast<std::size_t>(n), 2.5);
        const StepFunction g = ecdf(same);
        const KSBand b = ks_band(PBox{g, g}, n, Alpha(0.025));
        CHECK(horizontal_width(b, 0.5, n, 101) == doctest::Approx(0.0).epsilon(1e-15));
    }

    // Tiny n: the band clips away from the layer, width becomes infinite.
    std::vector<double> five(5, 2.5);
    const StepFunction g5 = ecdf(five);
    const KSBand b5 = ks_band(PBox{g5, g5}, 5, Alpha(0.025));
    CHECK(horizontal_width(b5, 0.5, 5, 101) == kInf);

    // Identical bands give identical widths.
    CHECK(horizontal_width(band, 0.5, 30, 101) == h);

    CHECK_THROWS_AS(horizontal_width(band, 0.5, 1, 101), data_error);  // layer outside (0,1)
    CHECK_THROWS_AS(horizontal_width(band, 1.5, 30, 101), data_error);
}

TEST_CASE("enclosure chain B_lower <= F_lower <= F_upper <= B_upper") {
    RandomStream rs(SeedStream{33, 0});
    for (int rep = 0; rep < 200; ++rep) {
        IntervalDataset ds;
        const int n = 5 + static_cast<int>(rs.uniform(0.0, 40.0));
        for (int i = 0; i < n; ++i) {
            const double x = rs.normal(0.0, 2.0);
            const double w = rs.uniform(0.0, 1.5);
            ds.items.push_back(Interval{x - w, x + w});
        }
        const PBox pb = pbox_from_intervals(ds);
        const KSBand band = ks_band(pb, n, Alpha(0.05));
        for (double x = -7.0; x <= 7.0; x += 0.35) {
            CHECK(band.lower(x) <= pb.lower(x) + 1e-12);
            CHECK(pb.lower(x) <= pb.upper(x) + 1e-12);
            CHECK(pb.upper(x) <= band.upper(x) + 1e-12);
        }
    }
}

TEST_CASE("width is nonnegative wherever finite") {
    RandomStream rs(SeedStream{34, 0});
    for (int rep = 0; rep < 100; ++rep) {
        IntervalDataset ds;
        for (int i = 0; i < 25; ++i) {
            const double x = rs.normal(0.0, 2.0);
            ds.items.push_back(Interval{x - 0.3, x + 0.3});
        }
        const PBox pb = pbox_from_intervals(ds);
        const KSBand band = ks_band(pb, 25, Alpha(0.025));
        for (const double p : {0.3, 0.5, 0.7}) {
            const double left = band_inverse(band.upper, p);
            const double right = band_inverse(band.lower, p);
            if (!std::isinf(left) && !std::isinf(right)) CHECK(right - left >= 0.0);
        }
    }
}

TEST_CASE("band coverage of the true normal CDF (reduced replication)") {
    const int trials = 400;
    const int n = 30;
    const double d = ks_critical(n, Alpha(0.025));
    int covered = 0;
    auto cdf = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
    for (int t = 0; t < trials; ++t) {
        const std::vector<double> xs = sample(NormalParams{0.0, 1.0}, n, SeedStream{35, static_cast<std::uint64_t>(t)});
        if (ks_statistic(xs, cdf) <= d) ++covered;
    }
    // Nominal 95%; allow generous slack at 400 trials.
    CHECK(static_cast<double>(covered) / trials >= 0.91);
}
