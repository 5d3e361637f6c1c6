#include "sievekit/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sievekit/arith.hpp"
#include "json.hpp"

namespace skv {

namespace {

// does offsets + (optional extra) miss a residue class mod every prime <= k?
// fills `witness` when yes, else sets `bad_p` to the smallest covering prime
bool misses_class_everywhere(const std::vector<i64>& offsets, u64 k, std::map<u64, u64>* witness, u64* bad_p) {
    auto ps = primes_up_to(u32(std::max<u64>(k, 2)));
    std::vector<char> hit;
    for (u32 p : ps) {
        if (u64(p) > k) break;
        hit.assign(p, 0);
        for (i64 h : offsets) hit[size_t(((h % p) + p) % p)] = 1;
        u64 miss = p;
        for (u32 r = 0; r < p; ++r)
            if (!hit[r]) { miss = r; break; }
        if (miss == p) {
            if (bad_p) *bad_p = p;
            return false;
        }
        if (witness) (*witness)[p] = miss;
    }
    return true;
}

}  // namespace

admissibility_report check_admissible(const std::vector<i64>& offsets) {
    if (offsets.empty()) throw domain_error("check_admissible: empty offset list");
    std::vector<i64> s = offsets;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw domain_error("check_admissible: duplicate offsets");
    admissibility_report rep;
    u64 bad = 0;
    if (misses_class_everywhere(s, s.size(), &rep.witnesses, &bad)) {
        rep.admissible = true;
    } else {
        rep.admissible = false;
        rep.covering_prime = bad;
        rep.witnesses.clear();
    }
    return rep;
}

tuple_result greedy_admissible(u64 k, i64 start) {
    if (k == 0) throw domain_error("greedy_admissible: k must be positive");
    if (k > 5000000) throw resource_error("greedy_admissible: k too large");
    auto ps = primes_up_to(u32(std::max<u64>(k, 2)));
    while (!ps.empty() && u64(ps.back()) > k) ps.pop_back();
    // per-prime bitmap of residue classes hit so far; candidate c is rejected
    // iff it would fill the last free class of some prime
    std::vector<std::vector<char>> hit(ps.size());
    std::vector<u32> free_cnt(ps.size());
    for (size_t i = 0; i < ps.size(); ++i) {
        hit[i].assign(ps[i], 0);
        free_cnt[i] = ps[i];
    }
    std::vector<i64> acc;
    u64 tested = 0, budget = std::max<u64>(u64(1) << 20, 64 * k * 64);
    for (i64 c = start; acc.size() < k; ++c) {
        if (++tested > budget) throw resource_error("greedy_admissible: scan budget exhausted");
        bool ok = true;
        for (size_t i = 0; i < ps.size(); ++i) {
            u32 r = u32(((c % ps[i]) + ps[i]) % ps[i]);
            if (free_cnt[i] == 1 && !hit[i][r]) { ok = false; break; }
        }
        if (!ok) continue;
        for (size_t i = 0; i < ps.size(); ++i) {
            u32 r = u32(((c % ps[i]) + ps[i]) % ps[i]);
            if (!hit[i][r]) { hit[i][r] = 1; --free_cnt[i]; }
        }
        acc.push_back(c);
    }
    i64 base = acc.front();
    for (i64& h : acc) h -= base;
    tuple_result out;
    out.offsets = std::move(acc);
    out.witnesses = check_admissible(out.offsets).witnesses;
    return out;
}

tuple_result twin_paired_admissible(u64 k0, u64 z_start) {
    if (k0 == 0) throw domain_error("twin_paired_admissible: k0 must be positive");
    if (k0 > 2000000) throw resource_error("twin_paired_admissible: k0 too large");
    u64 z = z_start > 0 ? z_start : std::max<u64>(4 * k0 * k0, 100);
    auto small = primes_up_to(u32(2 * k0 + 1));
    std::vector<u64> anchors;
    u64 last = 0;
    double lk = std::log(double(k0) + 2.0);
    u64 budget = z + std::max<u64>(u64(1) << 24, u64(20000.0 * double(k0) * (lk + 2.0) * (lk + 2.0)));
    for (u64 q = z | 1; anchors.size() < k0; q += 2) {
        if (q > budget) {
            std::ostringstream os;
            os << "twin_paired_admissible: scan budget exhausted at q=" << q << " with " << anchors.size()
               << " of " << k0 << " anchors found (last anchor " << last << ")";
            throw resource_error(os.str());
        }
        if (last && q < last + 4) continue;  // q = last+2 would reuse last's upper offset
        bool ok = true;
        for (u32 p : small) {
            if (u64(p) > 2 * k0) break;
            if (q % p == 0 || (q + 2) % p == 0) { ok = false; break; }
        }
        if (!ok) continue;
        anchors.push_back(q);
        last = q;
    }
    return tuple_from_twin_pairs(anchors, k0);
}

i64 diameter(const std::vector<i64>& offsets) {
    if (offsets.empty()) throw domain_error("diameter: empty offset list");
    auto [mn, mx] = std::minmax_element(offsets.begin(), offsets.end());
    return *mx - *mn;
}

tuple_result tuple_from_twin_pairs(const std::vector<u64>& anchors, u64 k0) {
    if (anchors.size() != k0) throw domain_error("tuple_from_twin_pairs: anchor count != k0");
    std::vector<i64> off;
    off.reserve(2 * k0);
    for (u64 q : anchors) {
        off.push_back(i64(q));
        off.push_back(i64(q + 2));
    }
    std::sort(off.begin(), off.end());
    auto dup = std::adjacent_find(off.begin(), off.end());
    if (dup != off.end()) {
        std::ostringstream os;
        os << "tuple_from_twin_pairs: offset " << *dup << " produced twice (overlapping pairs)";
        throw domain_error(os.str());
    }
    for (u64 q : anchors)
        if (q <= 2 * k0) throw domain_error("tuple_from_twin_pairs: anchors must exceed 2*k0");
    i64 base = off.front();
    for (i64& h : off) h -= base;
    auto rep = check_admissible(off);
    if (!rep.admissible)
        throw invariant_error("tuple_from_twin_pairs: paired offsets failed admissibility, covering prime " +
                              std::to_string(rep.covering_prime));
    tuple_result out;
    out.offsets = std::move(off);
    out.witnesses = std::move(rep.witnesses);
    return out;
}

std::vector<i64> load_tuple(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("load_tuple: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::vector<i64> out;
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.is_array()) {
        for (auto& v : j) {
            if (!v.is_number_integer()) throw domain_error("load_tuple: non-integer entry in " + path);
            out.push_back(v.get<i64>());
        }
        return out;
    }
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        try {
            out.push_back(std::stoll(line.substr(a, b - a + 1)));
        } catch (...) {
            throw domain_error("load_tuple: bad line in " + path + ": " + line);
        }
    }
    if (out.empty()) throw domain_error("load_tuple: no offsets in " + path);
    return out;
}

void save_tuple(const std::string& path, const std::vector<i64>& offsets) {
    std::ofstream o(path);
    if (!o) throw domain_error("save_tuple: cannot open " + path);
    o << nlohmann::json(offsets).dump() << "\n";
}

}  // namespace skv
