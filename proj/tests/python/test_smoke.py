"""Smoke tests for the sievekit extension module."""

import json
import math
import sys

import sievekit as sk


def check(cond, label):
    if not cond:
        raise AssertionError(label)
    print(f"ok: {label}")


def main():
    check(sk.is_prime(2**61 - 1), "is_prime on a Mersenne prime")
    check(not sk.is_prime(561), "is_prime rejects a Carmichael number")
    check(sk.count_primes_in(2, 100) == 25, "count_primes_in(2, 100) == 25")
    check(sk.primes_in(3, 20) == [3, 5, 7, 11, 13, 17, 19], "primes_in window")
    check(sk.big_omega(1024) == 10, "big_omega(1024) == 10")
    check(sk.primorial(5) == 30, "primorial(5) == 30")
    check(sk.primorial(53) == 32589158477190044730, "primorial(53) exceeds 64 bits")
    check(sk.twin_pairs_in(3, 20) == [3, 5, 11, 17], "twin pair lower members")
    check(sk.count_twin_pairs_in(1, 1000000) == 8169, "twin pair count to 10^6")
    check(sk.choose_b([0, 2], 6) == 5, "choose_b for {0,2} mod 6")
    check(sk.count_primes_with_bounded_cofactor(10, 1) == 2, "bounded-cofactor count")

    rep = sk.check_admissible([0, 2, 4])
    check(not rep["admissible"] and rep["covering_prime"] == 3, "covering prime 3 detected")
    rep = sk.check_admissible([0, 2, 6, 8, 12])
    check(rep["admissible"], "5-tuple admissible")
    check(set(rep["missed_class_mod_p"]) == {2, 3, 5}, "witnesses for primes up to k")
    check(sk.greedy_admissible(5) == [0, 2, 6, 8, 12], "greedy 5-tuple")
    paired = sk.twin_paired_admissible(2, 100)
    check(paired == [0, 2, 6, 8], "paired 4-tuple from anchors >= 100")
    check(sk.diameter(paired) == 8, "diameter of the paired tuple")

    check(sk.tau_sum_exact(10, 1, 0) == 37, "divisor-sum window total")
    main_term = sk.tau_sum_main_term(100000, 6, 1)
    exact = sk.tau_sum_exact(100000, 6, 1)
    check(abs(main_term - exact) / exact < 0.05, "main term within 5% at x=10^5")

    p = sk.params_from_m(1)
    check(p["k0_int"] == 8886111, "k0 at m=1")
    check(abs(p["A"] - 11.0631506) < 1e-6, "A at m=1")
    check(abs(p["gamma"] - 0.09038875) < 1e-7, "gamma at m=1")
    check(abs(sk.one_dim_integral(1, 1, 1) - 0.25) < 1e-15, "one_dim_integral closed form")

    audit = sk.inequality_audit(1, 1)
    check(len(audit) == 1 and audit[0]["all_pass"], "audit all_pass at m=1")
    names = {row["name"] for row in audit[0]["rows"]}
    check(names == {"i", "ii", "iii", "iv", "v", "vi", "vii.1", "vii.2", "viii", "ix", "x"},
          "audit row names")

    cap = sk.omega_cap(1)
    check(cap["cap_int"] == 59 and cap["within_bound"], "divisor cap at m=1")

    w = sk.builtin_weight_constants(3)
    check(w["alpha"] == 24.0, "alpha for k=3")
    check(abs(w["beta1"] - 9.6) < 1e-12, "beta1 for k=3")
    check(abs(w["beta2"] + 4.8) < 1e-12, "beta2 for k=3")
    check(abs(w["density_sq"] - 9.6) < 1e-12, "density square integral for k=3")
    check(abs(w["avg_sq"] - 4.8) < 1e-12, "averaged square integral for k=3")

    est = sk.integrate_builtin("tg2", 3, samples=200000, seed=4)
    check(abs(est["estimate"] - 24.0) <= 3 * est["stderr"], "sampled alpha within 3 sigma")
    est2 = sk.integrate_builtin("tg2", 3, samples=200000, seed=4, threads=4)
    check(est2 == est, "thread-invariant sampling")

    vol = sk.integrate(lambda t: 1.0, "f2", 2, samples=50000, seed=9)
    check(abs(vol["estimate"] - 0.5) <= 3 * vol["stderr"], "python integrand: simplex volume")

    try:
        sk.params_from_m(0)
        raise AssertionError("params_from_m(0) should raise DomainError")
    except sk.DomainError:
        print("ok: DomainError mapped")
    try:
        sk.integrate(lambda t: math.nan, "f2", 2, samples=20000)
        raise AssertionError("NaN integrand should raise NumericError")
    except sk.NumericError:
        print("ok: NumericError mapped")

    out = json.loads(sk.simulate_json(x=20000, w=3, R=8.0, seed=1))
    check(out["W"] == 6 and out["b"] == 5, "simulation W and b")
    check(out["tuple"] == [0, 2, 6, 8], "simulation default tuple")
    check(out["S0"] >= 0.0, "simulation S0 nonnegative")
    check(len(out["S1_j"]) == 4, "simulation per-coordinate sums")
    check(out["predictions"]["tau_main"] is not None, "simulation prediction present")

    print("smoke: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
