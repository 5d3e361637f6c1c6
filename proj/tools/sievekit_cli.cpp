#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sievekit/admissible.hpp"
#include "sievekit/arith.hpp"
#include "sievekit/mc.hpp"
#include "sievekit/mollifier.hpp"
#include "sievekit/params.hpp"
#include "sievekit/sums.hpp"
#include "sievekit/tau_ap.hpp"
#include "sievekit/weights.hpp"

using nlohmann::ordered_json;
using namespace skv;

namespace {

struct out_sink {
    std::string path;
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw domain_error("cannot open output path " + path);
        f << text;
    }
};

ordered_json caps_json(int m) {
    auto c = omega_cap(m);
    auto r = omega_cap_remark(params_from_m(m).k0_real);
    ordered_json j;
    j["C2"] = c.C2;
    j["cap_real"] = c.cap_real;
    j["cap_int"] = c.cap_int;
    j["bound"] = c.bound;
    j["within_bound"] = c.within_bound;
    j["remark"] = {{"C3", r.C3}, {"cap", r.cap}, {"bound", r.bound}, {"within_bound", r.within_bound}};
    return j;
}

ordered_json params_json(const sieve_params& p) {
    ordered_json j;
    j["m"] = p.m;
    j["k0_real"] = p.k0_real;
    if (p.k0_int_valid)
        j["k0_int"] = p.k0_int;
    else
        j["k0_int"] = nullptr;
    j["A"] = p.A;
    j["T"] = p.T;
    j["gamma"] = p.gamma;
    j["delta1"] = p.delta1;
    j["delta2"] = p.delta2;
    j["delta3"] = p.delta3;
    j["R_exponent"] = p.R_exponent;
    return j;
}

ordered_json audit_json(const audit_report& rep) {
    ordered_json j = params_json(rep.params);
    j["caps"] = caps_json(rep.m);
    ordered_json rows = ordered_json::array();
    for (const auto& r : rep.rows) {
        rows.push_back(ordered_json{{"name", r.name},
                                    {"claim", r.claim},
                                    {"lhs", r.lhs},
                                    {"rhs", r.rhs},
                                    {"verdict", r.verdict}});
    }
    j["audit"] = rows;
    j["all_pass"] = rep.all_pass;
    return j;
}

std::vector<u64> parse_u64_list(const std::string& csv) {
    std::vector<u64> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoull(item));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "sievekit: admissible tuples, divisor sums in progressions, sieve-weight sums,\n"
        "and the explicit constant chain k0 = m^2 e^(8m+8), A = log(2k0) - 2 log log(2k0),\n"
        "T = (e^A - 1)/A, gamma = (1/A)(1 - 1/(1+AT)) with its inequality audit"};
    app.require_subcommand(1);
    int threads = int(std::max(1u, std::thread::hardware_concurrency()));
    app.add_option("--threads", threads, "worker thread count (results are invariant to it)");

    // primes
    auto* sp = app.add_subcommand("primes", "count or list primes in [lo, hi) via a segmented sieve");
    u64 pr_lo = 2, pr_hi = 100;
    bool pr_list = false;
    out_sink pr_out;
    sp->add_option("--lo", pr_lo, "lower bound (inclusive)")->required();
    sp->add_option("--hi", pr_hi, "upper bound (exclusive)")->required();
    sp->add_flag("--list", pr_list, "emit every prime, not just the count");
    sp->add_option("--out", pr_out.path, "write output to this file instead of stdout");

    // twins
    auto* st = app.add_subcommand("twins", "count or list twin pairs (p, p+2) with p in [lo, hi)");
    u64 tw_lo = 2, tw_hi = 100;
    bool tw_list = false;
    std::string tw_format = "json";
    out_sink tw_out;
    st->add_option("--lo", tw_lo, "lower bound (inclusive)")->required();
    st->add_option("--hi", tw_hi, "upper bound (exclusive)")->required();
    st->add_flag("--list", tw_list, "emit every pair");
    st->add_option("--format", tw_format, "json or csv (csv lists 'p,q' rows)");
    st->add_option("--out", tw_out.path, "write output to this file instead of stdout");

    // tuple
    auto* tc = app.add_subcommand("tuple", "admissible offset tuples: check, build, measure");
    tc->require_subcommand(1);
    auto* tc_check = tc->add_subcommand("check", "verify a tuple misses a residue class mod every prime <= k");
    std::string tc_file;
    out_sink tc_out;
    tc_check->add_option("--file", tc_file, "tuple file (JSON array or newline-separated integers)")->required();
    tc_check->add_option("--out", tc_out.path, "write output to this file instead of stdout");
    auto* tc_greedy = tc->add_subcommand("greedy", "greedy admissible tuple of size k scanned from start");
    u64 tg_k = 5;
    i64 tg_start = 0;
    out_sink tg_out;
    tc_greedy->add_option("--k", tg_k, "tuple size")->required();
    tc_greedy->add_option("--start", tg_start, "scan start (default 0)");
    tc_greedy->add_option("--out", tg_out.path, "write output to this file instead of stdout");
    auto* tc_twin = tc->add_subcommand("twin-paired", "k0 twin-structured pairs {q, q+2} coprime to all p <= 2k0");
    u64 tp_k0 = 2, tp_z = 0;
    out_sink tp_out;
    tc_twin->add_option("--k0", tp_k0, "number of pairs")->required();
    tc_twin->add_option("--z-start", tp_z, "scan start (default max(4 k0^2, 100))");
    tc_twin->add_option("--out", tp_out.path, "write output to this file instead of stdout");
    auto* tc_diam = tc->add_subcommand("diameter", "max offset minus min offset");
    std::string td_file;
    out_sink td_out;
    tc_diam->add_option("--file", td_file, "tuple file")->required();
    tc_diam->add_option("--out", td_out.path, "write output to this file instead of stdout");

    // tau-ap
    auto* sq = app.add_subcommand("tau-ap",
                                  "divisor-count sums over x <= n < 2x restricted to n = a (mod q): exact\n"
                                  "window pass vs main term x*(density)*(log x + additive constant)");
    u64 ta_x = 100000, ta_q = 1, ta_a = 0;
    bool ta_scan = false;
    std::string ta_xlist, ta_qlist, ta_amode = "all";
    double ta_threshold = 0.05;
    std::string ta_format = "json";
    out_sink ta_out;
    sq->add_option("--x", ta_x, "window start (sum over [x, 2x))");
    sq->add_option("--q", ta_q, "modulus (squarefree)");
    sq->add_option("--a", ta_a, "residue class");
    sq->add_flag("--scan", ta_scan, "error scan over x and q lists");
    sq->add_option("--x-list", ta_xlist, "comma-separated x values for --scan");
    sq->add_option("--q-list", ta_qlist, "comma-separated q values for --scan");
    sq->add_option("--a-mode", ta_amode, "residues to scan: all | coprime | zero");
    sq->add_option("--threshold", ta_threshold, "relative-error flag threshold (default 0.05)");
    sq->add_option("--format", ta_format, "json or csv (scan emits x,q,a,r,exact,main,rel_err)");
    sq->add_option("--out", ta_out.path, "write output to this file instead of stdout");

    // params
    auto* spar = app.add_subcommand("params", "derived constants for level m, plus the two divisor caps");
    int pm = 1;
    out_sink pm_out;
    spar->add_option("--m", pm, "level (k0 = m^2 e^(8m+8))")->required();
    spar->add_option("--out", pm_out.path, "write output to this file instead of stdout");

    // audit
    auto* sau = app.add_subcommand("audit", "check the named inequality chain per m; exit 2 on any failure");
    int au_lo = 1, au_hi = 1;
    out_sink au_out;
    sau->add_option("--m-lo", au_lo, "first m")->required();
    sau->add_option("--m-hi", au_hi, "last m")->required();
    sau->add_option("--out", au_out.path, "write output to this file instead of stdout");

    // integrate
    auto* si = app.add_subcommand("integrate",
                                  "Monte Carlo simplex integrals: F^2, t G^2, t^2 G^2, t G F, or the\n"
                                  "squared inner average (integral over t_k of F)^2");
    std::string mi_mode = "f2", mi_f = "builtin";
    int mi_k = 2, mi_m = 1;
    double mi_r = 1.0;
    u64 mi_samples = 1000000, mi_seed = 0;
    out_sink mi_out;
    si->add_option("--mode", mi_mode, "f2 | tg2 | t2g2 | tgf | avg2");
    si->add_option("--f", mi_f, "integrand family: one | builtin | mollifier | fcirc");
    si->add_option("--k", mi_k, "dimension (<= 8)");
    si->add_option("--m", mi_m, "level for mollifier/fcirc parameters");
    si->add_option("--r", mi_r, "simplex scale (sum t_j <= r, coordinates in [0, r])");
    si->add_option("--samples", mi_samples, "sample count (>= 10^4)");
    si->add_option("--seed", mi_seed, "RNG seed (default 0; identical runs are byte-identical)");
    si->add_option("--out", mi_out.path, "write output to this file instead of stdout");

    // simulate
    auto* ss = app.add_subcommand("simulate",
                                  "weighted squared-sum run over n = b (mod W) in [x, 2x): plain, theta-,\n"
                                  "tau-weighted and excluded-mass sums vs their predicted main terms");
    sim_config sc;
    std::string ss_tuple_file, ss_config, ss_format = "json";
    out_sink ss_out;
    ss->add_option("--x", sc.x, "window start");
    ss->add_option("--w", sc.w, "small-prime level; W = product of primes <= w (default 5)");
    ss->add_option("--R", sc.R, "truncation level (default x^(1/8))");
    ss->add_option("--tuple", ss_tuple_file, "tuple file (default {0,2,6,8})");
    ss->add_option("--f", sc.f_choice, "weight family: builtin | mollifier");
    ss->add_option("--m", sc.m, "level for the paired selector and paper-faithful R");
    ss->add_option("--C2", sc.C2, "divisor-cap constant in the selector (default 1161 k0^2 / gamma)");
    ss->add_option("--samples", sc.mc_samples, "Monte Carlo samples for non-closed-form predictions");
    ss->add_option("--seed", sc.seed, "RNG seed (default 0)");
    ss->add_option("--config", ss_config, "key=value file: x, w, R, tuple, f, m, C2, samples, seed");
    ss->add_option("--format", ss_format, "json or csv (csv emits per-coordinate sums)");
    ss->add_option("--out", ss_out.path, "write output to this file instead of stdout");

    // omega-cap
    auto* so = app.add_subcommand("omega-cap",
                                  "prime-factor cap from the divisor bound tau < C2 = 1161 k0^2/gamma:\n"
                                  "cap = log2(C2), checked against 16m/log2 + 5 log(m)/log2 + 36.9");
    int oc_m = 1;
    double oc_remark_k0 = 0.0;
    out_sink oc_out;
    so->add_option("--m", oc_m, "level")->required();
    so->add_option("--remark-k0", oc_remark_k0, "also evaluate the C3 = 512 k0^3 log k0 variant at this k0");
    so->add_option("--out", oc_out.path, "write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        app.exit(e);
        return 1;
    }

    try {
        if (*sp) {
            ordered_json j;
            j["lo"] = pr_lo;
            j["hi"] = pr_hi;
            if (pr_list) {
                auto ps = primes_in(pr_lo, pr_hi);
                j["count"] = ps.size();
                j["primes"] = ps;
            } else {
                j["count"] = count_primes_in(pr_lo, pr_hi, threads);
            }
            pr_out.write(j.dump(2) + "\n");
        } else if (*st) {
            if (tw_list && tw_format == "csv") {
                auto pairs = twin_pairs_in(tw_lo, tw_hi);
                std::ostringstream os;
                os << "p,q\n";
                for (auto pr : pairs) os << pr.p << "," << pr.p + 2 << "\n";
                tw_out.write(os.str());
            } else {
                ordered_json j;
                j["lo"] = tw_lo;
                j["hi"] = tw_hi;
                if (tw_list) {
                    auto pairs = twin_pairs_in(tw_lo, tw_hi);
                    j["count"] = pairs.size();
                    auto arr = ordered_json::array();
                    for (auto pr : pairs) arr.push_back({pr.p, pr.p + 2});
                    j["pairs"] = arr;
                } else {
                    j["count"] = count_twin_pairs_in(tw_lo, tw_hi, threads);
                }
                tw_out.write(j.dump(2) + "\n");
            }
        } else if (*tc) {
            if (*tc_check) {
                auto offs = load_tuple(tc_file);
                auto rep = check_admissible(offs);
                ordered_json j;
                j["offsets"] = offs;
                j["admissible"] = rep.admissible;
                if (rep.admissible) {
                    ordered_json w = ordered_json::object();
                    for (auto& [p, cls] : rep.witnesses) w[std::to_string(p)] = cls;
                    j["missed_class_mod_p"] = w;
                } else {
                    j["covering_prime"] = rep.covering_prime;
                }
                tc_out.write(j.dump(2) + "\n");
                if (!rep.admissible) return 2;
            } else if (*tc_greedy) {
                auto t = greedy_admissible(tg_k, tg_start);
                tg_out.write(ordered_json(t.offsets).dump() + "\n");
            } else if (*tc_twin) {
                auto t = twin_paired_admissible(tp_k0, tp_z);
                tp_out.write(ordered_json(t.offsets).dump() + "\n");
            } else if (*tc_diam) {
                auto offs = load_tuple(td_file);
                ordered_json j;
                j["offsets"] = offs;
                j["diameter"] = diameter(offs);
                td_out.write(j.dump(2) + "\n");
            }
        } else if (*sq) {
            if (ta_scan) {
                auto xs = parse_u64_list(ta_xlist.empty() ? "10000,100000" : ta_xlist);
                auto qs = parse_u64_list(ta_qlist.empty() ? "1,2,3,5,6,30" : ta_qlist);
                residue_mode mode = ta_amode == "coprime" ? residue_mode::coprime
                                  : ta_amode == "zero"    ? residue_mode::zero
                                                          : residue_mode::all;
                auto rep = tau_sum_error_scan(xs, qs, mode, ta_threshold);
                if (ta_format == "csv") {
                    ta_out.write(tau_scan_csv(rep));
                } else {
                    ordered_json j;
                    j["worst_rel_err"] = rep.worst_rel_err;
                    j["mean_rel_err"] = rep.mean_rel_err;
                    auto rows = ordered_json::array();
                    for (const auto& r : rep.rows)
                        rows.push_back(ordered_json{{"x", r.x},
                                                    {"q", r.q},
                                                    {"a", r.a},
                                                    {"r", r.r},
                                                    {"exact", r.exact},
                                                    {"main", r.main},
                                                    {"rel_err", r.rel_err},
                                                    {"flagged", r.flagged}});
                    j["rows"] = rows;
                    ta_out.write(j.dump(2) + "\n");
                }
            } else {
                tau_ap_query qu(ta_x, ta_q, ta_a);
                u64 exact = tau_sum_exact(qu);
                double main = tau_sum_main_term(qu);
                ordered_json j;
                j["x"] = qu.x;
                j["q"] = qu.q;
                j["a"] = qu.a;
                j["exact"] = exact;
                j["main"] = main;
                j["rel_err"] = exact ? std::abs(main - double(exact)) / double(exact) : std::abs(main);
                ta_out.write(j.dump(2) + "\n");
            }
        } else if (*spar) {
            auto p = params_from_m(pm);
            ordered_json j = params_json(p);
            j["caps"] = caps_json(pm);
            pm_out.write(j.dump(2) + "\n");
        } else if (*sau) {
            auto reps = inequality_audit(au_lo, au_hi);
            ordered_json arr = ordered_json::array();
            bool all = true;
            for (const auto& r : reps) {
                arr.push_back(audit_json(r));
                all = all && r.all_pass;
            }
            au_out.write((reps.size() == 1 ? arr[0] : arr).dump(2) + "\n");
            if (!all) return 2;
        } else if (*si) {
            mc_mode mode = mi_mode == "f2"     ? mc_mode::f_sq
                         : mi_mode == "tg2"    ? mc_mode::t_gm_sq
                         : mi_mode == "t2g2"   ? mc_mode::t2_gm_sq
                         : mi_mode == "tgf"    ? mc_mode::t_gm_f
                         : mi_mode == "avg2"   ? mc_mode::avg_sq
                                               : throw domain_error("integrate: unknown mode " + mi_mode);
            field_fn F;
            field_fn G;
            const field_fn* Gp = nullptr;
            std::shared_ptr<mollifier> mol;
            if (mi_f == "one") {
                F = [](const double*, int) { return 1.0; };
            } else if (mi_f == "builtin") {
                auto spec = builtin_poly_weight(mi_k, 2.0);
                F = spec.density;
                G = spec.density_G;
                Gp = &G;
            } else if (mi_f == "mollifier" || mi_f == "fcirc") {
                mol = std::make_shared<mollifier>(mi_k, params_from_m(mi_m));
                if (mi_f == "mollifier") {
                    mol->verify_ramp_bounds();
                    F = [mol](const double* t, int) { return mol->F(t); };
                } else {
                    F = [mol](const double* t, int) { return mol->Fcirc(t); };
                }
            } else {
                throw domain_error("integrate: unknown integrand family " + mi_f);
            }
            auto est = simplex_mc(F, Gp, mi_k, mi_r, mode, mi_samples, mi_seed, threads);
            ordered_json j;
            j["mode"] = mi_mode;
            j["f"] = mi_f;
            j["k"] = mi_k;
            j["r"] = mi_r;
            j["samples"] = est.samples;
            j["seed"] = mi_seed;
            j["estimate"] = est.estimate;
            j["stderr"] = est.stderr_;
            mi_out.write(j.dump(2) + "\n");
        } else if (*ss) {
            if (!ss_config.empty()) {
                std::ifstream f(ss_config);
                if (!f) throw domain_error("simulate: cannot open config " + ss_config);
                std::string line;
                while (std::getline(f, line)) {
                    auto hash = line.find('#');
                    if (hash != std::string::npos) line = line.substr(0, hash);
                    auto eq = line.find('=');
                    if (eq == std::string::npos) continue;
                    auto trim = [](std::string s) {
                        size_t a = s.find_first_not_of(" \t\r");
                        if (a == std::string::npos) return std::string();
                        size_t b = s.find_last_not_of(" \t\r");
                        return s.substr(a, b - a + 1);
                    };
                    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
                    if (key == "x") sc.x = std::stoull(val);
                    else if (key == "w") sc.w = std::stoull(val);
                    else if (key == "R") sc.R = std::stod(val);
                    else if (key == "tuple") ss_tuple_file = val;
                    else if (key == "f") sc.f_choice = val;
                    else if (key == "m") sc.m = std::stoi(val);
                    else if (key == "C2") sc.C2 = std::stod(val);
                    else if (key == "samples") sc.mc_samples = std::stoull(val);
                    else if (key == "seed") sc.seed = std::stoull(val);
                    else throw domain_error("simulate: unknown config key '" + key + "'");
                }
            }
            if (!ss_tuple_file.empty()) sc.tuple = load_tuple(ss_tuple_file);
            sc.threads = threads;
            auto rep = simulate(sc);
            ss_out.write(ss_format == "csv" ? sim_report_csv(rep) : sim_report_json(rep));
        } else if (*so) {
            auto c = omega_cap(oc_m);
            ordered_json j;
            j["m"] = oc_m;
            j["C2"] = c.C2;
            j["cap_real"] = c.cap_real;
            j["cap_int"] = c.cap_int;
            j["bound"] = c.bound;
            j["within_bound"] = c.within_bound;
            if (oc_remark_k0 > 0) {
                auto r = omega_cap_remark(oc_remark_k0);
                j["remark"] = {{"k0", oc_remark_k0},
                               {"C3", r.C3},
                               {"cap", r.cap},
                               {"bound", r.bound},
                               {"within_bound", r.within_bound}};
            }
            oc_out.write(j.dump(2) + "\n");
            if (!c.within_bound) return 2;
        }
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
