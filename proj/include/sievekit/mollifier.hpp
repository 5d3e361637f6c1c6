#pragma once
#include <vector>

#include "sievekit/common.hpp"
#include "sievekit/params.hpp"

namespace skv {

// normalized ramp r(u): 0 for u <= 0, 1 for u >= 1, C^1, monotone.
// built as a linear climb with quintic-eased corners occupying fraction c of each
// end, chosen so the peak slope is 1 + 0.9*delta times the ideal 1/delta when the
// ramp is compressed into width delta — inside the (1/delta) + 1 budget with slack
struct smooth_ramp {
    double c;  // corner fraction
    explicit smooth_ramp(double delta);
    double value(double u) const;
    double slope(double u) const;  // d/du; divide by the ramp width for the real bound
};

// product-form mollified density on k coordinates, scale = dimension:
//   F(t) = h1(t) * prod_j h2(k t_j) / (1 + k A t_j)
// so the full sieve dimension 2m at pair level m gives factors h2(2m t_j)/(1 + 2m A t_j).
// h1: 1 on the simplex sum <= 1-delta1, 0 off sum <= 1
// h2: 1 on [delta3, T-delta2], 0 off [0, T]
class mollifier {
  public:
    mollifier(int k, const sieve_params& p);

    int k() const { return k_; }  // dimension = per-coordinate scale
    const sieve_params& params() const { return p_; }

    double h1(const double* t) const;      // simplex cutoff
    double h2(double u) const;             // 1-D cutoff on [0, T]
    double h2_plateau(double u) const;     // variant with no lower ramp: 1 on [0, T-delta2]
    double F(const double* t) const;
    double Fcirc(const double* t) const;   // sharp-cutoff comparison density

    // |dh1/dt_j| <= 1/delta1 + 1 and the two h2 ramp bounds, checked by dense sampling
    void verify_ramp_bounds(int samples_per_ramp = 4096) const;

  private:
    int k_;
    sieve_params p_;
    smooth_ramp ramp1_, ramp2_, ramp3_;
};

}  // namespace skv
