#pragma once
#include <vector>

#include "sievekit/common.hpp"

namespace skv {

// multiplicative data for every n in a window [lo, hi), built by one sieve pass
class factor_table {
  public:
    factor_table(u64 lo, u64 hi);

    u64 lo() const { return lo_; }
    u64 hi() const { return hi_; }

    int mu(u64 n) const { return mu_[idx(n)]; }
    u64 phi(u64 n) const { return phi_[idx(n)]; }
    u32 tau(u64 n) const { return tau_[idx(n)]; }
    int omega(u64 n) const { return omega_[idx(n)]; }        // with multiplicity
    u64 least_factor(u64 n) const { return spf_[idx(n)]; }   // smallest prime factor (n for n=1)
    bool prime(u64 n) const { u64 m = n; return m >= 2 && spf_[idx(n)] == m; }
    bool squarefree(u64 n) const { return mu_[idx(n)] != 0; }

  private:
    size_t idx(u64 n) const {
        if (n < lo_ || n >= hi_) throw domain_error("factor_table: n outside window");
        return size_t(n - lo_);
    }
    u64 lo_, hi_;
    std::vector<u64> spf_, phi_;
    std::vector<u32> tau_;
    std::vector<signed char> mu_;
    std::vector<u8> omega_;
};

}  // namespace skv
