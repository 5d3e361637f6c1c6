#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "sievekit/admissible.hpp"

using namespace skv;

namespace {

// witness soundness: the witness class mod p avoids every offset
void check_witnesses(const std::vector<i64>& offs, const std::map<u64, u64>& wit) {
    for (auto& [p, cls] : wit)
        for (i64 h : offs) CHECK(u64(((h % i64(p)) + i64(p)) % i64(p)) != cls);
}

}  // namespace

TEST_CASE("admissibility check") {
    auto bad = check_admissible({0, 2, 4});
    CHECK_FALSE(bad.admissible);
    CHECK(bad.covering_prime == 3);

    auto good = check_admissible({0, 2, 6, 8, 12});
    CHECK(good.admissible);
    check_witnesses({0, 2, 6, 8, 12}, good.witnesses);
    // only primes <= k need witnesses, and none above k is ever covering
    for (auto& [p, cls] : good.witnesses) {
        CHECK(p <= 5);
        (void)cls;
    }

    CHECK(check_admissible({0}).admissible);
    CHECK_THROWS_AS((void)check_admissible({0, 2, 2}), domain_error);
    CHECK_THROWS_AS((void)check_admissible({}), domain_error);
}

TEST_CASE("shift invariance") {
    for (i64 s : {-7, 1, 30, 9999}) {
        std::vector<i64> t;
        for (i64 h : {0, 2, 6, 8, 12}) t.push_back(h + s);
        CHECK(check_admissible(t).admissible);
    }
}

TEST_CASE("greedy construction") {
    CHECK(greedy_admissible(1, 0).offsets == std::vector<i64>{0});
    auto t5 = greedy_admissible(5, 0);
    CHECK(t5.offsets == std::vector<i64>{0, 2, 6, 8, 12});
    CHECK(check_admissible(t5.offsets).admissible);
    CHECK(diameter(t5.offsets) >= 12);  // 12 is the minimal 5-tuple diameter
    // normalization and a different start
    auto t7 = greedy_admissible(7, 100);
    CHECK(t7.offsets.front() == 0);
    CHECK(check_admissible(t7.offsets).admissible);
    CHECK_THROWS_AS((void)greedy_admissible(0, 0), domain_error);
}

TEST_CASE("twin-paired construction") {
    CHECK(twin_paired_admissible(1, 3).offsets == std::vector<i64>{0, 2});
    CHECK(twin_paired_admissible(2, 100).offsets == std::vector<i64>{0, 2, 6, 8});

    auto t = twin_paired_admissible(5, 0);
    REQUIRE(t.offsets.size() == 10);
    for (size_t j = 0; j + 1 < t.offsets.size(); j += 2)
        CHECK(t.offsets[j + 1] == t.offsets[j] + 2);
    CHECK(check_admissible(t.offsets).admissible);
    CHECK_THROWS_AS((void)twin_paired_admissible(0, 0), domain_error);
}

TEST_CASE("diameter") {
    CHECK(diameter({0, 2, 6, 8, 12}) == 12);
    CHECK(diameter({0}) == 0);
    CHECK(diameter(twin_paired_admissible(2, 100).offsets) == 8);
    CHECK_THROWS_AS((void)diameter({}), domain_error);
}

TEST_CASE("tuple from twin pairs") {
    auto t = tuple_from_twin_pairs({11, 17}, 2);
    CHECK(t.offsets == std::vector<i64>{0, 2, 6, 8});

    CHECK_THROWS_WITH_AS((void)tuple_from_twin_pairs({3, 5}, 2),
                         doctest::Contains("offset 5"), domain_error);
    CHECK(tuple_from_twin_pairs({101, 107, 137}, 3).offsets.size() == 6);
    CHECK_THROWS_AS((void)tuple_from_twin_pairs({11}, 2), domain_error);
    // members must exceed 2*k0 once distinct
    CHECK_THROWS_AS((void)tuple_from_twin_pairs({3, 11}, 2), domain_error);
}

TEST_CASE("tuple files: json and plain lines") {
    const char* path = "tuple_roundtrip.json";
    save_tuple(path, {0, 4, 6});
    CHECK(load_tuple(path) == std::vector<i64>{0, 4, 6});
    {
        std::ofstream f(path);
        f << "0\n4\n\n6\n";
    }
    CHECK(load_tuple(path) == std::vector<i64>{0, 4, 6});
    {
        std::ofstream f(path);
        f << "0\nfour\n";
    }
    CHECK_THROWS_AS((void)load_tuple(path), domain_error);
    CHECK_THROWS_AS((void)load_tuple("no_such_file.json"), domain_error);
    std::remove(path);
}
