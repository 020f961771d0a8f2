// Verification that tropicalization is the quotient by the affinoid torus on
// sampled K-points: the partition generated by verified unit translations must
// coincide with the fibers of trop. The per-sample and per-pair kernels have
// serial and OpenMP variants that produce identical reports; the partition
// merge is the only synchronization point.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropquot/tropicalize.hpp"

namespace tropquot {

struct QuotientOptions {
    bool parallel = true;
    bool negative_control = false;  // inject one non-unit identification; must FAIL
};

struct QuotientWitness {
    int i = 0, j = 0;                      // sample indices in one class with different trop
    std::string trop_i, trop_j;            // rendered tropicalizations
    std::vector<std::string> ratio_vals;   // valuations of the connecting ratios
};

struct QuotientReport {
    std::string fan;
    int sample_count = 0;
    std::uint64_t seed = 0;
    bool negative_control = false;
    std::vector<std::string> samples;            // rendered sample points
    std::vector<std::vector<int>> classes;       // unit-translation partition
    std::vector<std::vector<int>> fibers;        // equal-trop partition
    bool pass = false;
    std::optional<QuotientWitness> witness;      // first mismatch when failing
    long probe_relations = 0;                    // matches found by unit probes
    long ratio_relations = 0;                    // verified coordinate-ratio units
    long separation_checks = 0;                  // differing-trop pairs with non-unit ratio
    std::vector<std::pair<int, int>> injected;   // negative-control identifications
    // per-stratum: cone index -> (samples, classes); classes never straddle strata
    std::vector<std::array<int, 3>> strata_summary;
};

QuotientReport verify_quotient(const Fan& f, int samples, std::uint64_t seed,
                               const QuotientOptions& opts = {});

}  // namespace tropquot
