#pragma once
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace skv {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// error taxonomy mirrored by the CLI exit codes:
//   domain_error / invariant_error / numeric_error -> 1, resource_error -> 3
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& m) : std::runtime_error(m) {}
};
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& m) : std::runtime_error(m) {}
};
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& m) : std::runtime_error(m) {}
};

inline u64 gcd_u64(u64 a, u64 b) {
    while (b) { u64 t = a % b; a = b; b = t; }
    return a;
}

inline std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) { s.push_back(char('0' + int(v % 10))); v /= 10; }
    return {s.rbegin(), s.rend()};
}

// memory budget (bytes) for windowed tables and sieve segments
u64 mem_budget();

// compensated (Neumaier) accumulator: deterministic given summation order
struct kahan_sum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x)) c += (s - t) + x;
        else c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

}  // namespace skv
