#pragma once
#include <functional>
#include <vector>

#include "sievekit/common.hpp"

namespace skv {

// deterministic primality for the full u64 range (Miller-Rabin, fixed base set)
bool is_prime(u64 n);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

// number of prime factors counted with multiplicity (trial division + Pollard rho)
int big_omega(u64 n);

// log n if n is prime, else 0
double theta_weight(u64 n);

// product of primes <= w, exact in 128-bit; overflow -> resource_error
u128 primorial(u64 w);

// simple sieve: all primes <= limit
std::vector<u32> primes_up_to(u32 limit);

// segmented sieve over [lo, hi): calls fn(p) for each prime in increasing order.
// segment size derives from the memory budget (default 2^20 odd numbers per segment).
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn);

std::vector<u64> primes_in(u64 lo, u64 hi);
u64 count_primes_in(u64 lo, u64 hi, int threads = 1);

struct twin_pair {
    u64 p;  // p and p+2 both prime
};

// twin pairs with p in [lo, hi); p+2 may fall beyond hi
std::vector<twin_pair> twin_pairs_in(u64 lo, u64 hi);
u64 count_twin_pairs_in(u64 lo, u64 hi, int threads = 1);

// smallest b in [1, W] with gcd(b + h, W) = 1 for every offset h
u64 choose_b(const std::vector<i64>& offsets, u64 W);

// count primes p <= x with big_omega(p + 2) <= d
u64 count_primes_with_bounded_cofactor(u64 x, int d);

}  // namespace skv
