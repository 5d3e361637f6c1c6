#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sievekit/admissible.hpp"
#include "sievekit/arith.hpp"
#include "sievekit/mc.hpp"
#include "sievekit/params.hpp"
#include "sievekit/sums.hpp"
#include "sievekit/tau_ap.hpp"
#include "sievekit/weights.hpp"

namespace py = pybind11;
using namespace skv;

namespace {

py::dict params_dict(const sieve_params& p) {
    py::dict d;
    d["m"] = p.m;
    d["k0_real"] = p.k0_real;
    if (p.k0_int_valid) d["k0_int"] = p.k0_int;
    d["A"] = p.A;
    d["T"] = p.T;
    d["gamma"] = p.gamma;
    d["delta1"] = p.delta1;
    d["delta2"] = p.delta2;
    d["delta3"] = p.delta3;
    d["R_exponent"] = p.R_exponent;
    return d;
}

py::dict estimate_dict(const mc_estimate& e) {
    py::dict d;
    d["estimate"] = e.estimate;
    d["stderr"] = e.stderr_;
    d["samples"] = e.samples;
    return d;
}

mc_mode parse_mode(const std::string& mode) {
    if (mode == "f2") return mc_mode::f_sq;
    if (mode == "tg2") return mc_mode::t_gm_sq;
    if (mode == "t2g2") return mc_mode::t2_gm_sq;
    if (mode == "tgf") return mc_mode::t_gm_f;
    if (mode == "avg2") return mc_mode::avg_sq;
    throw domain_error("unknown integration mode " + mode);
}

}  // namespace

PYBIND11_MODULE(sievekit, mod) {
    mod.doc() = "admissible tuples, divisor sums in progressions, and sieve-weight machinery";

    py::register_exception<domain_error>(mod, "DomainError");
    py::register_exception<invariant_error>(mod, "InvariantError");
    py::register_exception<numeric_error>(mod, "NumericError");
    py::register_exception<resource_error>(mod, "ResourceError");

    mod.def("is_prime", &is_prime, py::arg("n"));
    mod.def("big_omega", &big_omega, py::arg("n"), "number of prime factors counted with multiplicity");
    mod.def(
        "primorial",
        [](u64 w) {
            auto s = u128_to_string(primorial(w));
            return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
        },
        py::arg("w"), "product of all primes <= w");
    mod.def("primes_in", &primes_in, py::arg("lo"), py::arg("hi"));
    mod.def("count_primes_in", &count_primes_in, py::arg("lo"), py::arg("hi"), py::arg("threads") = 1);
    mod.def(
        "twin_pairs_in",
        [](u64 lo, u64 hi) {
            std::vector<u64> out;
            for (auto p : twin_pairs_in(lo, hi)) out.push_back(p.p);
            return out;
        },
        py::arg("lo"), py::arg("hi"), "lower members p of twin pairs (p, p+2) with p in [lo, hi)");
    mod.def("count_twin_pairs_in", &count_twin_pairs_in, py::arg("lo"), py::arg("hi"), py::arg("threads") = 1);
    mod.def("choose_b", &choose_b, py::arg("tuple"), py::arg("W"),
            "smallest b in [1, W] with gcd(b + h, W) = 1 for every offset h");
    mod.def("count_primes_with_bounded_cofactor", &count_primes_with_bounded_cofactor, py::arg("x"), py::arg("d"),
            "primes p <= x with at most d prime factors in p + 2");

    mod.def(
        "check_admissible",
        [](const std::vector<i64>& offsets) {
            auto rep = check_admissible(offsets);
            py::dict d;
            d["admissible"] = rep.admissible;
            if (!rep.admissible) d["covering_prime"] = rep.covering_prime;
            py::dict w;
            for (auto& [p, cls] : rep.witnesses) w[py::int_(p)] = cls;
            d["missed_class_mod_p"] = w;
            return d;
        },
        py::arg("offsets"));
    mod.def(
        "greedy_admissible", [](u64 k, i64 start) { return greedy_admissible(k, start).offsets; }, py::arg("k"),
        py::arg("start") = 0);
    mod.def(
        "twin_paired_admissible", [](u64 k0, u64 z_start) { return twin_paired_admissible(k0, z_start).offsets; },
        py::arg("k0"), py::arg("z_start") = 0);
    mod.def("diameter", &diameter, py::arg("offsets"));

    mod.def(
        "tau_sum_exact", [](u64 x, u64 q, u64 a) { return tau_sum_exact(tau_ap_query(x, q, a)); }, py::arg("x"),
        py::arg("q"), py::arg("a"), "sum of the divisor count over n in [x, 2x) with n = a (mod q)");
    mod.def(
        "tau_sum_main_term", [](u64 x, u64 q, u64 a) { return tau_sum_main_term(tau_ap_query(x, q, a)); },
        py::arg("x"), py::arg("q"), py::arg("a"));

    mod.def(
        "params_from_m", [](int m) { return params_dict(params_from_m(m)); }, py::arg("m"));
    mod.def(
        "params_from_k0", [](double k0) { return params_dict(params_from_k0(k0)); }, py::arg("k0"));
    mod.def("one_dim_integral", &one_dim_integral, py::arg("k"), py::arg("A"), py::arg("T"),
            "closed form of the per-coordinate integral of (1 + 2kAt)^-2 over [0, T/(2k)]");
    mod.def(
        "inequality_audit",
        [](int m_lo, int m_hi) {
            py::list out;
            for (const auto& rep : inequality_audit(m_lo, m_hi)) {
                py::dict d;
                d["m"] = rep.m;
                d["all_pass"] = rep.all_pass;
                py::list rows;
                for (const auto& r : rep.rows) {
                    py::dict rd;
                    rd["name"] = r.name;
                    rd["claim"] = r.claim;
                    rd["lhs"] = r.lhs;
                    rd["rhs"] = r.rhs;
                    rd["verdict"] = r.verdict;
                    rows.append(rd);
                }
                d["rows"] = rows;
                out.append(d);
            }
            return out;
        },
        py::arg("m_lo"), py::arg("m_hi"));
    mod.def(
        "omega_cap",
        [](int m) {
            auto c = omega_cap(m);
            py::dict d;
            d["C2"] = c.C2;
            d["cap_real"] = c.cap_real;
            d["cap_int"] = c.cap_int;
            d["bound"] = c.bound;
            d["within_bound"] = c.within_bound;
            return d;
        },
        py::arg("m"));

    mod.def(
        "builtin_weight_constants",
        [](int k) {
            auto spec = builtin_poly_weight(k, 2.0);
            py::dict d;
            d["alpha"] = spec.alpha_exact;
            d["beta1"] = spec.beta1_exact;
            d["beta2"] = spec.beta2_exact;
            d["density_sq"] = spec.density_sq_exact;
            d["avg_sq"] = spec.avg_sq_exact;
            return d;
        },
        py::arg("k"), "closed-form simplex integrals for the (1 - sum t)^(k+1) weight");
    mod.def(
        "integrate_builtin",
        [](const std::string& mode, int k, double r, u64 samples, u64 seed, int threads) {
            auto spec = builtin_poly_weight(k, 2.0);
            return estimate_dict(simplex_mc(spec.density, &spec.density_G, k, r, parse_mode(mode), samples, seed, threads));
        },
        py::arg("mode"), py::arg("k"), py::arg("r") = 1.0, py::arg("samples") = 400000, py::arg("seed") = 0,
        py::arg("threads") = 1);
    mod.def(
        "integrate",
        [](const std::function<double(std::vector<double>)>& f, const std::string& mode, int k, double r, u64 samples,
           u64 seed) {
            field_fn F = [&f](const double* t, int n) { return f(std::vector<double>(t, t + n)); };
            return estimate_dict(simplex_mc(F, nullptr, k, r, parse_mode(mode), samples, seed, 1));
        },
        py::arg("f"), py::arg("mode"), py::arg("k"), py::arg("r") = 1.0, py::arg("samples") = 100000,
        py::arg("seed") = 0, "Monte Carlo simplex integral of a Python integrand (single-threaded)");

    mod.def(
        "simulate_json",
        [](u64 x, u64 w, double R, const std::vector<i64>& tuple, const std::string& f_choice, int m, double C2,
           u64 samples, u64 seed, int threads) {
            sim_config cfg;
            cfg.x = x;
            cfg.w = w;
            cfg.R = R;
            if (!tuple.empty()) cfg.tuple = tuple;
            cfg.f_choice = f_choice;
            cfg.m = m;
            cfg.C2 = C2;
            cfg.mc_samples = samples;
            cfg.seed = seed;
            cfg.threads = threads;
            return sim_report_json(simulate(cfg));
        },
        py::arg("x") = 100000, py::arg("w") = 5, py::arg("R") = 0.0, py::arg("tuple") = std::vector<i64>{},
        py::arg("f_choice") = "builtin", py::arg("m") = 1, py::arg("C2") = 0.0, py::arg("samples") = 400000,
        py::arg("seed") = 0, py::arg("threads") = 1,
        "full weighted-sum run; returns the JSON report as a string");
}
