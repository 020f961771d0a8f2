#include "tropquot/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tropquot/errors.hpp"
#include "tropquot/sampling.hpp"

namespace tropquot {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Extends the homomorphism b_j -> ratio_j on the orbit character lattice to
// the dense torus by sending the completion directions to 1, then returns the
// torus element with those character values on the standard basis.
KPoint connecting_element(const Fan& f, const KPoint& a, const KPoint& b) {
    const FanCone& tau = f.cones.at(a.orbit_cone);
    std::vector<RationalFunction> ratio;
    for (std::size_t j = 0; j < a.coords.size(); ++j)
        ratio.push_back(b.coords[j] / a.coords[j]);

    IntMat ucols = tau.orbit_basis;
    ucols.insert(ucols.end(), tau.orbit_completion.begin(), tau.orbit_completion.end());

    KPoint g;
    g.orbit_cone = f.zero_cone();
    const IntMat& torus_basis = f.cones[f.zero_cone()].orbit_basis;
    for (const auto& e : torus_basis) {
        auto dec = solve_integer(ucols, e);
        if (!dec) throw math_error("connecting element: unimodular solve failed");
        RationalFunction v = rf_const(1);
        for (std::size_t j = 0; j < tau.orbit_basis.size(); ++j)
            if ((*dec)[j] != 0) v = v * rf_pow(ratio[j], (*dec)[j]);
        g.coords.push_back(v);
    }
    return g;
}

std::vector<std::string> ratio_valuations(const KPoint& a, const KPoint& b) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < a.coords.size(); ++j)
        out.push_back(to_string(val(b.coords[j] / a.coords[j])));
    return out;
}

std::vector<TropPoint> compute_trops(const Fan& f, const std::vector<KPoint>& xs, bool parallel) {
    std::vector<TropPoint> out(xs.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(xs.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = trop(f, AnalyticPoint(xs[i]));
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = trop(f, AnalyticPoint(xs[i]));
    }
    return out;
}

struct ScanOut {
    std::vector<std::pair<int, int>> relations;  // verified unit identifications, i < j
    long ratio_relations = 0;
    long separation_checks = 0;
};

// Same-orbit pair scan: equal-trop pairs get an explicit connecting unit that
// is verified to identify them; differing-trop pairs are checked to be
// separated (some coordinate ratio has nonzero valuation).
ScanOut scan_pairs(const Fan& f, const std::vector<KPoint>& xs,
                   const std::vector<TropPoint>& tr, bool parallel) {
    const int n = static_cast<int>(xs.size());
    auto scan_row = [&](int i, ScanOut& acc) {
        for (int j = i + 1; j < n; ++j) {
            if (xs[i].orbit_cone != xs[j].orbit_cone) continue;
            if (tr[i] == tr[j]) {
                const KPoint g = connecting_element(f, xs[i], xs[j]);
                if (!is_affinoid_unit(f, g))
                    throw math_error("quotient: equal-trop connecting element is not a unit");
                if (!kpoint_equal(act(f, g, xs[i]), xs[j]))
                    throw math_error("quotient: connecting element does not identify the pair");
                acc.relations.emplace_back(i, j);
                ++acc.ratio_relations;
            } else {
                bool separated = false;
                for (std::size_t c = 0; c < xs[i].coords.size() && !separated; ++c) {
                    const ExtendedRat v = val(xs[j].coords[c] / xs[i].coords[c]);
                    if (v.infinite || v.value != 0) separated = true;
                }
                if (!separated)
                    throw math_error("quotient: differing trops with unit ratios");
                ++acc.separation_checks;
            }
        }
    };

    ScanOut total;
    if (parallel) {
#pragma omp parallel
        {
            ScanOut local;
#pragma omp for schedule(dynamic, 8)
            for (int i = 0; i < n; ++i) scan_row(i, local);
#pragma omp critical
            {
                total.relations.insert(total.relations.end(), local.relations.begin(),
                                       local.relations.end());
                total.ratio_relations += local.ratio_relations;
                total.separation_checks += local.separation_checks;
            }
        }
        std::sort(total.relations.begin(), total.relations.end());
    } else {
        for (int i = 0; i < n; ++i) scan_row(i, total);
    }
    return total;
}

std::vector<std::vector<int>> canonical_partition(UnionFind& uf, int n) {
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

QuotientReport verify_quotient(const Fan& f, int samples, std::uint64_t seed,
                               const QuotientOptions& opts) {
    if (samples <= 0) throw input_error("verify_quotient: sample count must be positive");

    QuotientReport rep;
    rep.fan = f.name;
    rep.sample_count = samples;
    rep.seed = seed;
    rep.negative_control = opts.negative_control;

    Lcg64 rng(seed);
    std::vector<KPoint> xs;
    xs.reserve(samples);
    for (int i = 0; i < samples; ++i) xs.push_back(sample_kpoint(f, rng));
    for (const auto& x : xs) rep.samples.push_back(to_string(f, x));

    // probe units are drawn before the parallel sections so the stream of rng
    // draws does not depend on the execution mode
    std::vector<KPoint> probes;
    const int probes_per_sample = 4;
    for (int i = 0; i < samples * probes_per_sample; ++i) probes.push_back(sample_unit(f, rng));

    const std::vector<TropPoint> trops = compute_trops(f, xs, opts.parallel);

    UnionFind uf(samples);

    // exact-match index for translated samples
    std::map<std::string, int> index;
    for (int i = 0; i < samples; ++i) {
        const std::string key = to_string(f, xs[i]);
        auto [it, fresh] = index.emplace(key, i);
        if (!fresh) {  // duplicate sample: identified by the identity unit
            uf.unite(it->second, i);
            ++rep.probe_relations;
        }
    }
    for (int i = 0; i < samples; ++i) {
        for (int p = 0; p < probes_per_sample; ++p) {
            const KPoint& g = probes[i * probes_per_sample + p];
            const KPoint moved = act(f, g, xs[i]);
            auto it = index.find(to_string(f, moved));
            if (it != index.end() && it->second != i) {
                uf.unite(i, it->second);
                ++rep.probe_relations;
            }
        }
    }

    const ScanOut scan = scan_pairs(f, xs, trops, opts.parallel);
    rep.ratio_relations = scan.ratio_relations;
    rep.separation_checks = scan.separation_checks;
    for (const auto& [i, j] : scan.relations) uf.unite(i, j);

    if (opts.negative_control) {
        // identify the first same-orbit pair with different tropicalizations,
        // as if some non-unit translation were allowed
        bool found = false;
        for (int i = 0; i < samples && !found; ++i)
            for (int j = i + 1; j < samples && !found; ++j)
                if (xs[i].orbit_cone == xs[j].orbit_cone && !(trops[i] == trops[j])) {
                    uf.unite(i, j);
                    rep.injected.emplace_back(i, j);
                    found = true;
                }
        if (!found)
            throw input_error("negative control: no same-orbit pair with differing "
                              "tropicalizations in the sample set");
    }

    rep.classes = canonical_partition(uf, samples);

    // fibers of trop, canonicalized the same way
    std::map<std::string, std::vector<int>> fiber_map;
    for (int i = 0; i < samples; ++i) fiber_map[to_string(f, trops[i])].push_back(i);
    for (auto& [key, members] : fiber_map) {
        std::sort(members.begin(), members.end());
        rep.fibers.push_back(members);
    }
    std::sort(rep.fibers.begin(), rep.fibers.end());

    rep.pass = rep.classes == rep.fibers;
    if (!rep.pass) {
        for (const auto& cls : rep.classes) {
            for (std::size_t a = 1; a < cls.size(); ++a) {
                if (!(trops[cls[a]] == trops[cls[0]])) {
                    QuotientWitness w;
                    w.i = cls[0];
                    w.j = cls[a];
                    w.trop_i = to_string(f, trops[w.i]);
                    w.trop_j = to_string(f, trops[w.j]);
                    w.ratio_vals = ratio_valuations(xs[w.i], xs[w.j]);
                    rep.witness = std::move(w);
                    break;
                }
            }
            if (rep.witness) break;
        }
    }

    // per-stratum bookkeeping: samples and classes by orbit cone
    std::map<int, std::array<int, 3>> strata;
    for (int i = 0; i < samples; ++i) {
        auto& row = strata.try_emplace(xs[i].orbit_cone,
                                       std::array<int, 3>{xs[i].orbit_cone, 0, 0}).first->second;
        ++row[1];
    }
    for (const auto& cls : rep.classes) {
        auto it = strata.find(xs[cls[0]].orbit_cone);
        if (it != strata.end()) ++it->second[2];
    }
    for (const auto& [cone, row] : strata) rep.strata_summary.push_back(row);

    return rep;
}

}  // namespace tropquot
