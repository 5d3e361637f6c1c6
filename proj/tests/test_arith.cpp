#include <numeric>

#include "doctest.h"
#include "sievekit/arith.hpp"
#include "sievekit/factor_table.hpp"

using namespace skv;

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK(is_prime(2305843009213693951ull));  // 2^61 - 1
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));  // Carmichael
    CHECK_FALSE(is_prime(9223372036854775807ull));  // 2^63 - 1 = 7 * 73 * ...
}

TEST_CASE("prime counting and listing") {
    CHECK(primes_in(3, 20) == std::vector<u64>{3, 5, 7, 11, 13, 17, 19});
    CHECK(count_primes_in(2, 1000001) == 78498);  // pi(10^6)
    // segmentation invariance
    CHECK(count_primes_in(2, 1000) == count_primes_in(2, 500) + count_primes_in(500, 1000));
    // thread invariance
    CHECK(count_primes_in(2, 300000, 3) == count_primes_in(2, 300000, 1));
    CHECK_THROWS_AS((void)primes_in(10, 5), domain_error);
}

TEST_CASE("theta weight positive exactly on primes") {
    auto ps = primes_in(2, 200);
    size_t pi = 0;
    for (u64 n = 2; n < 200; ++n) {
        bool listed = pi < ps.size() && ps[pi] == n;
        if (listed) ++pi;
        CHECK((theta_weight(n) > 0.0) == listed);
    }
    CHECK(theta_weight(5) == doctest::Approx(std::log(5.0)).epsilon(1e-15));
    CHECK(theta_weight(4) == 0.0);
}

TEST_CASE("twin pairs") {
    auto pairs = twin_pairs_in(3, 20);
    std::vector<u64> lows;
    for (auto p : pairs) lows.push_back(p.p);
    CHECK(lows == std::vector<u64>{3, 5, 11, 17});
    CHECK(count_twin_pairs_in(1, 1000000) == 8169);
    CHECK(count_twin_pairs_in(1, 200000, 4) == count_twin_pairs_in(1, 200000, 1));
}

TEST_CASE("big_omega and factoring") {
    CHECK(big_omega(1) == 0);
    CHECK(big_omega(2) == 1);
    CHECK(big_omega(12) == 3);
    CHECK(big_omega(1024) == 10);
    CHECK(big_omega(561) == 3);
    CHECK(big_omega(u64(1000003) * 1000033) == 2);
}

TEST_CASE("primorial") {
    CHECK(u128_to_string(primorial(1)) == "1");
    CHECK(u128_to_string(primorial(2)) == "2");
    CHECK(u128_to_string(primorial(5)) == "30");
    CHECK(u128_to_string(primorial(30)) == "6469693230");
    CHECK(u128_to_string(primorial(53)) == "32589158477190044730");
}

TEST_CASE("choose_b") {
    CHECK(choose_b({0}, 2) == 1);
    CHECK(choose_b({0, 2}, 6) == 5);
    CHECK(choose_b({0, 2, 6}, 30) == 11);
    CHECK_THROWS_AS((void)choose_b({0, 2, 4}, 30), invariant_error);
    // every shifted offset coprime to W
    u64 b = choose_b({0, 2, 6, 8}, 30);
    for (i64 h : {0, 2, 6, 8}) CHECK(gcd_u64(b + u64(h), 30) == 1);
}

TEST_CASE("bounded-cofactor prime counts") {
    CHECK(count_primes_with_bounded_cofactor(10, 1) == 2);
    CHECK(count_primes_with_bounded_cofactor(10, 2) == 4);
    CHECK(count_primes_with_bounded_cofactor(2, 1) == 0);
    CHECK_THROWS_AS((void)count_primes_with_bounded_cofactor(1, 1), domain_error);
    CHECK_THROWS_AS((void)count_primes_with_bounded_cofactor(10, 0), domain_error);
}

TEST_CASE("factor table against trial division") {
    factor_table ft(1000, 3000);
    for (u64 n = 1000; n < 3000; ++n) {
        u64 m = n, phi = 1, tau = 1;
        int mu = 1, om = 0;
        for (u64 p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            int e = 0;
            u64 pe = 1;
            while (m % p == 0) { m /= p; ++e; pe *= p; }
            phi *= pe - pe / p;
            tau *= u64(e + 1);
            om += e;
            mu = (e > 1) ? 0 : -mu;
        }
        if (m > 1) { phi *= m - 1; tau *= 2; om += 1; mu = -mu; }
        CHECK(ft.phi(n) == phi);
        CHECK(ft.tau(n) == tau);
        CHECK(ft.omega(n) == om);
        CHECK(ft.mu(n) == mu);
        CHECK(ft.prime(n) == is_prime(n));
        CHECK(ft.squarefree(n) == (mu != 0));
    }
    CHECK_THROWS_AS((void)ft.mu(999), domain_error);
    CHECK_THROWS_AS((void)ft.mu(3000), domain_error);
}

TEST_CASE("mobius divisor-sum identity") {
    factor_table ft(1, 100001);
    for (u64 n = 1; n <= 100000; n += 997) {
        i64 s = 0;
        for (u64 d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                s += ft.mu(d);
                if (d != n / d) s += ft.mu(n / d);
            }
        CHECK(s == (n == 1 ? 1 : 0));
    }
}
