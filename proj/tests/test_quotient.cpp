#include <algorithm>
#include <set>

#include "doctest.h"
#include "tropquot/quotient.hpp"
#include "tropquot/sampling.hpp"

using namespace tropquot;

namespace {

LatticeVec lv(std::vector<long> v) {
    LatticeVec out;
    for (long x : v) out.emplace_back(x);
    return out;
}

IntMat im(std::vector<std::vector<long>> rows) {
    IntMat out;
    for (auto& r : rows) out.push_back(lv(r));
    return out;
}

std::vector<Fan> all_fans() {
    return {
        fan_from_max_cones("a1", 1, im({{1}}), {{0}}),
        fan_from_max_cones("p1", 1, im({{1}, {-1}}), {{0}, {1}}),
        fan_from_max_cones("a2", 2, im({{1, 0}, {0, 1}}), {{0, 1}}),
        fan_from_max_cones("p2", 2, im({{1, 0}, {0, 1}, {-1, -1}}),
                           {{0, 1}, {0, 2}, {1, 2}}),
        fan_from_max_cones("f1", 2, im({{1, 0}, {0, 1}, {-1, 1}, {0, -1}}),
                           {{0, 1}, {0, 3}, {1, 2}, {2, 3}}),
        fan_from_max_cones("sing", 2, im({{2, -1}, {0, 1}}), {{0, 1}}),
    };
}

// flattens a partition into a sorted element list
std::vector<int> elements_of(const std::vector<std::vector<int>>& parts) {
    std::vector<int> all;
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    return all;
}

bool report_equal(const QuotientReport& a, const QuotientReport& b) {
    return a.fan == b.fan && a.sample_count == b.sample_count && a.seed == b.seed &&
           a.samples == b.samples && a.classes == b.classes && a.fibers == b.fibers &&
           a.pass == b.pass && a.probe_relations == b.probe_relations &&
           a.ratio_relations == b.ratio_relations &&
           a.separation_checks == b.separation_checks && a.injected == b.injected &&
           a.strata_summary == b.strata_summary &&
           a.witness.has_value() == b.witness.has_value();
}

}  // namespace

TEST_CASE("quotient verification passes on every corpus fan") {
    for (const Fan& f : all_fans()) {
        const QuotientReport r = verify_quotient(f, 60, 42);
        INFO("fan ", f.name);
        CHECK(r.pass);
        CHECK_FALSE(r.witness.has_value());
        CHECK(r.sample_count == 60);
        CHECK(static_cast<int>(r.samples.size()) == 60);
        // both partitions cover exactly the sample indices
        std::vector<int> expect(60);
        for (int i = 0; i < 60; ++i) expect[i] = i;
        CHECK(elements_of(r.classes) == expect);
        CHECK(elements_of(r.fibers) == expect);
        // passing means the partitions are identical
        CHECK(r.classes == r.fibers);
        // probes found at least some identifications beyond exact duplicates
        CHECK(r.probe_relations + r.ratio_relations > 0);
        CHECK(r.separation_checks > 0);
        CHECK(r.injected.empty());
    }
}

TEST_CASE("degenerate sizes") {
    const Fan a1 = fan_from_max_cones("a1", 1, im({{1}}), {{0}});
    const QuotientReport r = verify_quotient(a1, 2, 1);
    CHECK(r.pass);
    CHECK(r.sample_count == 2);
}

TEST_CASE("serial and parallel kernels produce the same report") {
    for (const Fan& f : all_fans()) {
        QuotientOptions serial;
        serial.parallel = false;
        QuotientOptions parallel;
        parallel.parallel = true;
        const QuotientReport a = verify_quotient(f, 40, 7, serial);
        const QuotientReport b = verify_quotient(f, 40, 7, parallel);
        INFO("fan ", f.name);
        CHECK(report_equal(a, b));
    }
}

TEST_CASE("reports are deterministic in the seed") {
    const Fan p2 = all_fans()[3];
    const QuotientReport a = verify_quotient(p2, 50, 99);
    const QuotientReport b = verify_quotient(p2, 50, 99);
    CHECK(report_equal(a, b));
    CHECK(a.witness.has_value() == b.witness.has_value());
    const QuotientReport c = verify_quotient(p2, 50, 100);
    // a different seed draws different samples
    CHECK(a.samples != c.samples);
}

TEST_CASE("negative control fails with a valid witness") {
    for (const Fan& f : all_fans()) {
        QuotientOptions opts;
        opts.negative_control = true;
        const QuotientReport r = verify_quotient(f, 60, 42, opts);
        INFO("fan ", f.name);
        CHECK_FALSE(r.pass);
        REQUIRE(r.injected.size() == 1);
        REQUIRE(r.witness.has_value());
        const QuotientWitness& w = *r.witness;
        // the witness pair sits in one class but in different fibers
        auto in_same = [&](const std::vector<std::vector<int>>& parts) {
            for (const auto& p : parts) {
                const bool has_i = std::find(p.begin(), p.end(), w.i) != p.end();
                const bool has_j = std::find(p.begin(), p.end(), w.j) != p.end();
                if (has_i || has_j) return has_i && has_j;
            }
            return false;
        };
        CHECK(in_same(r.classes));
        CHECK_FALSE(in_same(r.fibers));
        CHECK(w.trop_i != w.trop_j);
        CHECK_FALSE(w.ratio_vals.empty());
        // a connecting ratio of valuation zero would be a unit relation, and
        // unit relations never connect different fibers
        bool some_nonzero = false;
        for (const auto& v : w.ratio_vals)
            if (v != "0") some_nonzero = true;
        CHECK(some_nonzero);
    }
}

TEST_CASE("classes never straddle strata") {
    for (const Fan& f : all_fans()) {
        const QuotientReport r = verify_quotient(f, 80, 5);
        // recover each sample's stratum from its rendered form: the fiber
        // partition groups equal-trop samples, and the per-stratum summary
        // must add up to the totals
        int total_samples = 0, total_classes = 0;
        std::set<int> seen_cones;
        for (const auto& row : r.strata_summary) {
            CHECK(row[0] >= 0);
            CHECK(static_cast<std::size_t>(row[0]) < f.cones.size());
            CHECK(seen_cones.insert(row[0]).second);
            CHECK(row[1] > 0);   // only hit strata are listed
            CHECK(row[2] > 0);
            CHECK(row[2] <= row[1]);
            total_samples += row[1];
            total_classes += row[2];
        }
        CHECK(total_samples == r.sample_count);
        CHECK(total_classes == static_cast<int>(r.classes.size()));
    }
}

TEST_CASE("fibers match brute-force tropicalization grouping") {
    // recompute the fiber partition from scratch with the same sampler
    for (const Fan& f : all_fans()) {
        const std::uint64_t seed = 42;
        const int n = 60;
        const QuotientReport r = verify_quotient(f, n, seed);
        Lcg64 rng(seed);
        std::vector<KPoint> pts;
        for (int i = 0; i < n; ++i) pts.push_back(sample_kpoint(f, rng));
        REQUIRE(static_cast<int>(r.samples.size()) == n);
        for (int i = 0; i < n; ++i) CHECK(r.samples[i] == to_string(f, pts[i]));
        std::vector<TropPoint> trops;
        for (const auto& x : pts) trops.push_back(trop(f, x));
        for (const auto& fiber : r.fibers) {
            REQUIRE_FALSE(fiber.empty());
            for (int idx : fiber) CHECK(trops[idx] == trops[fiber.front()]);
        }
        // different fibers have different trop values
        for (std::size_t a = 0; a < r.fibers.size(); ++a)
            for (std::size_t b = a + 1; b < r.fibers.size(); ++b)
                CHECK_FALSE(trops[r.fibers[a].front()] == trops[r.fibers[b].front()]);
    }
}
