#include "sievekit/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace skv {

u64 mem_budget() {
    static u64 budget = [] {
        const char* e = std::getenv("SIEVEKIT_MEM_BUDGET");
        if (!e) return u64(1) << 28;  // 256 MiB default
        char* end = nullptr;
        unsigned long long v = std::strtoull(e, &end, 10);
        if (end == e || v < (1u << 16)) throw domain_error("SIEVEKIT_MEM_BUDGET must be an integer >= 65536 (bytes)");
        return u64(v);
    }();
    return budget;
}

u64 mulmod(u64 a, u64 b, u64 m) { return u64((u128(a) * b) % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // this base set is a proven deterministic witness family below 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    // Brent variant; n must be odd composite, not a prime power handled upstream
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) y = (mulmod(y, y, n) + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                u64 ys = y;
                int lim = std::min(128, lam - k);
                for (int i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = gcd_u64(q, n);
                if (d == n) {
                    // backtrack one step at a time
                    d = 1;
                    y = ys;
                    do {
                        y = (mulmod(y, y, n) + c) % n;
                        d = gcd_u64(x > y ? x - y : y - x, n);
                    } while (d == 1);
                    break;
                }
                k += lim;
            }
            lam *= 2;
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

int big_omega(u64 n) {
    if (n == 0) throw domain_error("big_omega: n must be positive");
    int cnt = 0;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull, 41ull, 43ull, 47ull}) {
        while (n % p == 0) { n /= p; ++cnt; }
    }
    if (n == 1) return cnt;
    std::vector<u64> fs;
    factor_rec(n, fs);
    return cnt + int(fs.size());
}

double theta_weight(u64 n) { return is_prime(n) ? std::log(double(n)) : 0.0; }

u128 primorial(u64 w) {
    u128 acc = 1;
    if (w < 2) return acc;
    const u128 lim = ~u128(0);
    if (w >= (u64(1) << 32)) throw resource_error("primorial: w too large");
    bool overflowed = false;
    for_each_prime(2, w + 1, [&](u64 p) {
        if (overflowed) return;
        if (acc > lim / p) { overflowed = true; return; }
        acc *= p;
    });
    if (overflowed) throw resource_error("primorial: product exceeds 128 bits");
    return acc;
}

std::vector<u32> primes_up_to(u32 limit) {
    std::vector<u32> out;
    if (limit < 2) return out;
    std::vector<bool> comp(size_t(limit) + 1, false);
    for (u64 i = 2; i * i <= limit; ++i)
        if (!comp[size_t(i)])
            for (u64 j = i * i; j <= limit; j += i) comp[size_t(j)] = true;
    for (u64 i = 2; i <= limit; ++i)
        if (!comp[size_t(i)]) out.push_back(u32(i));
    return out;
}

namespace {

// base primes up to sqrt(hi-1) for segmented sieving; guarded by the memory budget
std::vector<u32> base_primes_for(u64 hi) {
    if (hi < 3) return {};
    u64 root = u64(std::sqrt(double(hi - 1))) + 2;
    while (root > 2 && (root - 1) * (root - 1) >= hi) --root;
    if (root > (u64(1) << 32)) throw resource_error("sieve: range too large");
    if (root + 1 > mem_budget()) throw resource_error("sieve: base prime table exceeds memory budget");
    return primes_up_to(u32(root));
}

// sieve odd numbers in [seg_lo, seg_hi) into bits (bit i ~ seg_lo + 2i, seg_lo odd)
void sieve_segment(u64 seg_lo, u64 seg_hi, const std::vector<u32>& base, std::vector<u64>& bits) {
    u64 n_odd = (seg_hi - seg_lo + 1) / 2;
    bits.assign((n_odd + 63) / 64, ~u64(0));
    if (seg_lo == 1) bits[0] &= ~u64(1);  // 1 is not prime
    for (u32 p : base) {
        if (p == 2) continue;
        u64 pp = u64(p) * p;
        if (pp >= seg_hi) break;
        u64 start = std::max(pp, ((seg_lo + p - 1) / p) * u64(p));
        if ((start & 1) == 0) start += p;
        for (u64 m = start; m < seg_hi; m += 2 * u64(p)) {
            u64 idx = (m - seg_lo) / 2;
            bits[idx >> 6] &= ~(u64(1) << (idx & 63));
        }
    }
}

u64 segment_span() {
    // default 2^20 odd numbers per segment (128 KiB bitmap), shrunk to fit the budget
    u64 span = u64(1) << 21;
    u64 cap = std::max<u64>(u64(1) << 16, mem_budget() * 8);  // bits available
    while (span / 2 > cap) span /= 2;
    return span;
}

}  // namespace

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& fn) {
    if (lo < 1 || lo > hi) throw domain_error("for_each_prime: need 1 <= lo <= hi");
    if (hi > (u64(1) << 63)) throw domain_error("for_each_prime: hi exceeds 2^63");
    if (lo <= 2 && 2 < hi) fn(2);
    if (hi <= 3) return;
    auto base = base_primes_for(hi);
    u64 span = segment_span();
    std::vector<u64> bits;
    u64 seg_lo = std::max<u64>(lo, 3);
    if ((seg_lo & 1) == 0) ++seg_lo;
    while (seg_lo < hi) {
        u64 seg_hi = std::min(hi, seg_lo + span);
        sieve_segment(seg_lo, seg_hi, base, bits);
        u64 n_odd = (seg_hi - seg_lo + 1) / 2;
        for (u64 w = 0; w < bits.size(); ++w) {
            u64 word = bits[w];
            while (word) {
                u64 b = w * 64 + u64(__builtin_ctzll(word));
                word &= word - 1;
                if (b >= n_odd) break;
                fn(seg_lo + 2 * b);
            }
        }
        seg_lo = seg_hi;
        if ((seg_lo & 1) == 0) ++seg_lo;
    }
}

std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> out;
    for_each_prime(lo, hi, [&](u64 p) { out.push_back(p); });
    return out;
}

namespace {

template <typename Fn>
u64 chunked_count(u64 lo, u64 hi, int threads, Fn per_range) {
    if (threads <= 1 || hi - lo < (u64(1) << 22)) return per_range(lo, hi);
    u64 n = u64(threads);
    std::vector<u64> parts(n, 0);
    std::vector<std::thread> pool;
    u64 step = (hi - lo) / n;
    for (u64 t = 0; t < n; ++t) {
        u64 a = lo + t * step;
        u64 b = (t + 1 == n) ? hi : lo + (t + 1) * step;
        pool.emplace_back([&, a, b, t] { parts[t] = per_range(a, b); });
    }
    for (auto& th : pool) th.join();
    u64 total = 0;
    for (u64 v : parts) total += v;  // fixed order; integer sum is thread-count invariant anyway
    return total;
}

}  // namespace

u64 count_primes_in(u64 lo, u64 hi, int threads) {
    return chunked_count(lo, hi, threads, [](u64 a, u64 b) {
        u64 c = 0;
        for_each_prime(a, b, [&](u64) { ++c; });
        return c;
    });
}

std::vector<twin_pair> twin_pairs_in(u64 lo, u64 hi) {
    std::vector<twin_pair> out;
    u64 prev = 0;
    // sieve two past the end so p+2 is decided for p < hi
    for_each_prime(lo > 2 ? lo : 2, hi + 2, [&](u64 p) {
        if (prev && p == prev + 2 && prev < hi && prev >= lo) out.push_back({prev});
        prev = p;
    });
    return out;
}

u64 count_twin_pairs_in(u64 lo, u64 hi, int threads) {
    return chunked_count(lo, hi, threads, [](u64 a, u64 b) {
        u64 c = 0, prev = 0;
        for_each_prime(a > 2 ? a : 2, b + 2, [&](u64 p) {
            if (prev && p == prev + 2 && prev < b && prev >= a) ++c;
            prev = p;
        });
        return c;
    });
}

u64 choose_b(const std::vector<i64>& offsets, u64 W) {
    if (W == 0) throw domain_error("choose_b: W must be positive");
    if (W > (u64(1) << 40)) throw resource_error("choose_b: W too large to scan");
    for (u64 b = 1; b <= W; ++b) {
        bool ok = true;
        for (i64 h : offsets) {
            i64 v = i64(b) + h;
            u64 r = u64(((v % i64(W)) + i64(W)) % i64(W));
            if (gcd_u64(r, W) != 1) { ok = false; break; }
        }
        if (ok) return b;
    }
    throw invariant_error("choose_b: no residue b in [1,W] has all b+h coprime to W");
}

u64 count_primes_with_bounded_cofactor(u64 x, int d) {
    if (x < 2) throw domain_error("count_primes_with_bounded_cofactor: x must be >= 2");
    if (d < 1) throw domain_error("count_primes_with_bounded_cofactor: d must be >= 1");
    u64 c = 0;
    for_each_prime(2, x + 1, [&](u64 p) {
        if (big_omega(p + 2) <= d) ++c;
    });
    return c;
}

}  // namespace skv
