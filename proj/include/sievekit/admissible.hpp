#pragma once
#include <map>
#include <string>
#include <vector>

#include "sievekit/common.hpp"

namespace skv {

// a set of offsets {h_1 < ... < h_k} avoids some residue class mod every prime p <= k
// (for p > k the k offsets cannot cover all p classes, so nothing to check)
struct admissibility_report {
    bool admissible = false;
    u64 covering_prime = 0;           // smallest p whose classes are all hit, when inadmissible
    std::map<u64, u64> witnesses;     // p -> a residue class mod p missed by the offsets
};

admissibility_report check_admissible(const std::vector<i64>& offsets);

struct tuple_result {
    std::vector<i64> offsets;
    std::map<u64, u64> witnesses;
};

// greedy scan from `start`, keeping each candidate that preserves admissibility
tuple_result greedy_admissible(u64 k, i64 start = 0);

// offsets {q, q+2} over the first k0 primes q >= z_start with q, q+2 both coprime
// to every prime <= 2*k0; consecutive hits two apart are not reused
tuple_result twin_paired_admissible(u64 k0, u64 z_start = 0);

i64 diameter(const std::vector<i64>& offsets);

// union of {q_i, q_i+2} over given pair anchors, normalized to start at 0
tuple_result tuple_from_twin_pairs(const std::vector<u64>& anchors, u64 k0);

std::vector<i64> load_tuple(const std::string& path);
void save_tuple(const std::string& path, const std::vector<i64>& offsets);

}  // namespace skv
