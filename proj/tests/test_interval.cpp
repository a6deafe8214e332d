#include <doctest.h>

#include <cmath>
#include <limits>

#include "poolstat/errors.hpp"
#include "poolstat/interval.hpp"
#include "poolstat/random.hpp"

using namespace poolstat;

namespace {

IntervalDataset ds_of(std::initializer_list<Interval> items) {
    IntervalDataset ds;
    ds.items = items;
    return ds;
}

}  // namespace

TEST_CASE("make_interval validates endpoints") {
    const Interval a = make_interval(1.0, 2.0);
    CHECK(a.lo == 1.0);
    CHECK(a.hi == 2.0);

    const Interval pt = make_interval(3.0, 3.0);
    CHECK(pt.width() == 0.0);
    CHECK(pt.midpoint() == 3.0);

    CHECK_THROWS_AS(make_interval(2.0, 1.0), data_error);
    CHECK_THROWS_AS(make_interval(std::numeric_limits<double>::quiet_NaN(), 1.0), data_error);
    CHECK_THROWS_AS(make_interval(0.0, std::numeric_limits<double>::infinity()), data_error);
}

TEST_CASE("add is endpoint-wise") {
    const Interval r = add(Interval{1, 2}, Interval{3, 5});
    CHECK(r.lo == 4.0);
    CHECK(r.hi == 7.0);

    const Interval id = add(Interval{0, 0}, Interval{-2.5, 7.25});
    CHECK(id.lo == -2.5);
    CHECK(id.hi == 7.25);

    const Interval s = sum(ds_of({{1, 2}, {3, 4}}));
    CHECK(s.lo == 4.0);
    CHECK(s.hi == 6.0);
}

TEST_CASE("scale_recip_sum") {
    const Interval r = scale_recip_sum(ds_of({{1, 2}, {3, 4}}));
    CHECK(r.lo == doctest::Approx(2.0 / 6.0).epsilon(1e-15));
    CHECK(r.hi == doctest::Approx(0.5).epsilon(1e-15));

    const Interval pt = scale_recip_sum(ds_of({{5, 5}}));
    CHECK(pt.lo == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(pt.hi == doctest::Approx(0.2).epsilon(1e-15));

    CHECK_THROWS_AS(scale_recip_sum(ds_of({{0, 1}, {1, 2}})), data_error);
    CHECK_THROWS_AS(scale_recip_sum(IntervalDataset{}), data_error);
}

TEST_CASE("interval_max") {
    const Interval a = interval_max(ds_of({{1, 3}, {2, 2.5}}));
    CHECK(a.lo == 2.0);
    CHECK(a.hi == 3.0);

    const Interval b = interval_max(ds_of({{1, 2}, {3, 4}, {2, 5}}));
    CHECK(b.lo == 3.0);
    CHECK(b.hi == 5.0);

    const Interval c = interval_max(ds_of({{7, 7}}));
    CHECK(c.lo == 7.0);
    CHECK(c.hi == 7.0);

    CHECK_THROWS_AS(interval_max(IntervalDataset{}), data_error);
}

TEST_CASE("lex_sort orders by lo then hi and is idempotent") {
    const IntervalDataset sorted = lex_sort(ds_of({{2, 3}, {1, 5}, {1, 4}}));
    CHECK(sorted.items[0].lo == 1.0);
    CHECK(sorted.items[0].hi == 4.0);
    CHECK(sorted.items[1].hi == 5.0);
    CHECK(sorted.items[2].lo == 2.0);

    const IntervalDataset again = lex_sort(sorted);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        CHECK(again.items[i].lo == sorted.items[i].lo);
        CHECK(again.items[i].hi == sorted.items[i].hi);
    }

    const IntervalDataset ties = lex_sort(ds_of({{0, 9}, {0, 1}}));
    CHECK(ties.items[0].hi == 1.0);
    CHECK(ties.items[1].hi == 9.0);
}

TEST_CASE("endpoint folds bound every point selection") {
    RandomStream rs(SeedStream{814, 0});
    for (int rep = 0; rep < 200; ++rep) {
        IntervalDataset ds;
        const int n = 1 + static_cast<int>(rs.uniform(0.0, 8.0));
        for (int i = 0; i < n; ++i) {
            const double lo = rs.uniform(-10.0, 10.0);
            ds.items.push_back(Interval{lo, lo + rs.uniform(0.0, 5.0)});
        }
        const Interval total = sum(ds);
        const Interval max_bound = interval_max(ds);

        double point_sum = 0.0;
        double point_max = -std::numeric_limits<double>::infinity();
        for (const Interval& x : ds.items) {
            const double pick = rs.uniform(x.lo, x.hi);
            point_sum += pick;
            point_max = std::max(point_max, pick);
        }
        CHECK(point_sum >= total.lo - 1e-9);
        CHECK(point_sum <= total.hi + 1e-9);
        CHECK(max_bound.contains(point_max));
    }
}
