// Command-line front end: exact counts, bound reports, verification sweeps,
// and the value-set experiments, as text, JSON, or CSV.
//
// Exit codes: 0 success/PASS, 1 FAIL, 2 UNDECIDED, 3 usage error,
// 4 budget or resource limit.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "facto/bounds.hpp"
#include "facto/cache.hpp"
#include "facto/factorizations.hpp"
#include "facto/fcount.hpp"
#include "facto/report_io.hpp"
#include "facto/sequences.hpp"
#include "facto/vector_partitions.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

enum ExitCode { kOk = 0, kFail = 1, kUndecided = 2, kUsage = 3, kBudget = 4 };

struct GlobalOpts {
    std::string format = "text";
    std::string cache_path;
    long precision_cap = facto::kPrecCap;
    double tail_tol = 1e-9;
    unsigned workers = 1;
};

void emit(const GlobalOpts& g, const facto::Json& j, const std::string& text) {
    if (g.format == "json")
        std::cout << j.dump(2) << "\n";
    else if (g.format == "csv")
        std::cout << facto::to_csv(j);
    else
        std::cout << text;
}

facto::Alpha parse_alpha(const std::vector<long>& comps) {
    std::vector<unsigned> v;
    for (long c : comps) {
        if (c < 1) throw facto::invalid_input("alpha components must be >= 1");
        v.push_back((unsigned)c);
    }
    return facto::Alpha::of(std::move(v));
}

std::string alpha_str(const facto::Alpha& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? "," : "") + std::to_string(a.comps[i]);
    return s + ")";
}

void load_cache_if_any(const GlobalOpts& g) {
    if (g.cache_path.empty() || !std::filesystem::exists(g.cache_path)) return;
    facto::cache_seed_memo(facto::cache_load(g.cache_path));
}

void save_cache_if_any(const GlobalOpts& g) {
    if (g.cache_path.empty()) return;
    facto::CacheFile snap = facto::cache_snapshot_memo();
    if (std::filesystem::exists(g.cache_path))
        snap = facto::cache_merge(facto::cache_load(g.cache_path), snap);
    facto::cache_store(snap, g.cache_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiplicative-partition counts, vector-partition "
                 "counts, certified bounds, and value-set surveys"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache", g.cache_path, "persistent p(alpha) cache file");
    app.add_option("--precision-cap", g.precision_cap, "interval precision cap in bits")
        ->check(CLI::Range(128L, 1L << 20));
    app.add_option("--tail-tol", g.tail_tol, "series tail tolerance")->check(CLI::PositiveNumber);
    app.add_option("--workers", g.workers, "worker thread count")->check(CLI::Range(1u, 256u));

    // f <n> [--list]
    auto* cmd_f = app.add_subcommand("f", "count unordered factorizations of n");
    std::string f_n;
    bool f_list = false;
    cmd_f->add_option("n", f_n, "target integer")->required();
    cmd_f->add_flag("--list", f_list, "also enumerate the factorizations");

    // pvec <a1> ...
    auto* cmd_pvec = app.add_subcommand("pvec", "count vector partitions of alpha");
    std::vector<long> pvec_comps;
    cmd_pvec->add_option("components", pvec_comps, "alpha components")->required()->expected(-1);

    // partition <n>
    auto* cmd_partition = app.add_subcommand("partition", "integer partition number p(n)");
    unsigned long part_n = 0;
    cmd_partition->add_option("n", part_n, "argument")->required();

    // bell <r>
    auto* cmd_bell = app.add_subcommand("bell", "Bell number B_r");
    unsigned long bell_r = 0;
    cmd_bell->add_option("r", bell_r, "argument")->required()->check(CLI::PositiveNumber);

    // bound <a1> ...
    auto* cmd_bound = app.add_subcommand("bound", "lower-bound report for alpha");
    std::vector<long> bound_comps;
    cmd_bound->add_option("components", bound_comps, "alpha components")->required()->expected(-1);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run every certified inequality sweep");
    unsigned long v_kmax = 300, v_nmax = 300, v_ymax = 5000, v_hmax = 10000;
    unsigned v_grid = 12;
    double v_corrupt = 0.0;
    cmd_verify->add_option("--kmax", v_kmax, "factorial/binomial k range");
    cmd_verify->add_option("--nmax", v_nmax, "binomial n range");
    cmd_verify->add_option("--ymax", v_ymax, "tuple-count bound range");
    cmd_verify->add_option("--hmax", v_hmax, "h-monotonicity range");
    cmd_verify->add_option("--grid-sum", v_grid, "alpha grid component-sum limit");
    cmd_verify->add_option("--selftest-corrupt", v_corrupt, "fault-injection offset (self-test only)")
        ->group("");

    // spectrum <x>
    auto* cmd_spectrum = app.add_subcommand("spectrum", "enumerate the value set up to x");
    std::string spec_x;
    cmd_spectrum->add_option("x", spec_x, "threshold")->required();

    // conjecture <x> [--B b]
    auto* cmd_conj = app.add_subcommand("conjecture", "distinct p(alpha) over the constrained set S");
    double conj_x = 0, conj_B = 1.0;
    cmd_conj->add_option("x", conj_x, "threshold")->required();
    cmd_conj->add_option("--B", conj_B, "sum budget constant")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        facto::precision_cap() = g.precision_cap;

        if (cmd_f->parsed()) {
            facto::BigNat n;
            if (mpz_set_str(n.get_mpz_t(), f_n.c_str(), 10) != 0 || n < 1)
                throw facto::invalid_input("n must be a positive integer");
            facto::BigNat count = facto::count_factorizations_big(n);
            facto::Json j{{"n", n.get_str()}, {"f", count.get_str()}};
            std::string text = "f(" + n.get_str() + ") = " + count.get_str() + "\n";
            if (f_list) {
                if (!n.fits_ulong_p())
                    throw facto::input_too_large("--list requires n within enumeration scale");
                auto all = facto::enumerate_factorizations(n.get_ui());
                facto::Json arr = facto::Json::array();
                for (const auto& f : all) {
                    facto::Json one = facto::Json::array();
                    std::string line = "  ";
                    for (std::size_t i = 0; i < f.size(); ++i) {
                        one.push_back(f[i]);
                        line += (i ? " * " : "") + std::to_string(f[i]);
                    }
                    arr.push_back(one);
                    text += line + "\n";
                }
                j["factorizations"] = arr;
            }
            emit(g, j, text);
            return kOk;
        }

        if (cmd_pvec->parsed()) {
            load_cache_if_any(g);
            facto::Alpha a = parse_alpha(pvec_comps);
            facto::BigNat p = facto::count_vpartitions(a);
            save_cache_if_any(g);
            emit(g, facto::Json{{"alpha", facto::to_json(a)}, {"p", p.get_str()}},
                 "p" + alpha_str(a) + " = " + p.get_str() + "\n");
            return kOk;
        }

        if (cmd_partition->parsed()) {
            facto::BigNat p = facto::partition_number(part_n);
            emit(g, facto::Json{{"n", (long)part_n}, {"p", p.get_str()}},
                 "p(" + std::to_string(part_n) + ") = " + p.get_str() + "\n");
            return kOk;
        }

        if (cmd_bell->parsed()) {
            facto::BigNat b = facto::bell_number(bell_r);
            emit(g, facto::Json{{"r", (long)bell_r}, {"bell", b.get_str()}},
                 "B_" + std::to_string(bell_r) + " = " + b.get_str() + "\n");
            return kOk;
        }

        if (cmd_bound->parsed()) {
            load_cache_if_any(g);
            facto::Alpha a = parse_alpha(bound_comps);
            facto::BoundContext ctx = facto::floor_N(a);
            facto::BoundReport rep = facto::bound_report(a, g.tail_tol);
            facto::BudgetReport budget;
            bool have_budget = false;
            if (rep.exact_p.get_d() > std::exp(std::exp(1.0)) + 1) {
                budget = facto::budget_check(rep.exact_p.get_d(), a);
                have_budget = true;
            }
            save_cache_if_any(g);
            facto::Json j = facto::to_json(rep);
            j["z_alpha"] = facto::to_json(ctx.z_alpha);
            j["n_floor"] = (long)ctx.n_floor;
            if (have_budget) j["budget"] = facto::to_json(budget);
            std::string text =
                "alpha       = " + alpha_str(a) + "\n" +
                "z(alpha)    = [" + ctx.z_alpha.lo_str() + ", " + ctx.z_alpha.hi_str() + "]\n" +
                "N           = " + std::to_string(ctx.n_floor) + "\n" +
                "closed-form = [" + rep.closed_form_lower.lo_str() + ", " + rep.closed_form_lower.hi_str() + "]\n" +
                "hypergeom   = [" + rep.hypergeom_lower.lo_str() + ", " + rep.hypergeom_lower.hi_str() + "]\n" +
                "exact p     = " + rep.exact_p.get_str() + "\n" +
                "slack (log) = " + std::to_string(rep.slack_log) + "\n" +
                "status      = " + std::string(rep.pass ? "PASS" : "FAIL") + "\n";
            emit(g, j, text);
            return rep.pass ? kOk : kFail;
        }

        if (cmd_verify->parsed()) {
            std::vector<facto::LemmaReport> lemmas;
            lemmas.push_back(facto::verify_h_monotone(v_hmax, g.workers, v_corrupt));
            lemmas.push_back(facto::verify_factorial_bound(v_kmax, g.workers));
            lemmas.push_back(facto::verify_binomial_bound(v_kmax, v_nmax, g.workers));
            lemmas.push_back(facto::verify_maxp(v_ymax, g.workers));
            lemmas.push_back(facto::verify_p_upper(2000, g.workers));
            lemmas.push_back(facto::verify_p_lower(2000, g.workers));
            lemmas.push_back(facto::verify_sandwich_grid(v_grid, g.tail_tol, g.workers));
            auto grid = facto::canonical_alphas_with_sum_at_most(v_grid);
            std::vector<facto::LemmaReport> eq;
            for (const auto& a : grid)
                if (a.sum() <= 6) eq.push_back(facto::term_inequality_check(facto::floor_N(a)));
            facto::LemmaReport eq_all{facto::LemmaId::PRODUCT_BOUND, "alpha sum <= 6"};
            eq_all.status = facto::CheckStatus::PASS;
            for (const auto& r : eq)
                if (r.status != facto::CheckStatus::PASS) eq_all = r;
            lemmas.push_back(eq_all);

            std::vector<facto::BoundReport> bounds;
            for (const auto& a : grid)
                if (a.sum() <= 6) bounds.push_back(facto::bound_report(a, g.tail_tol));

            bool any_fail = false, any_undecided = false;
            for (const auto& l : lemmas) {
                any_fail |= l.status == facto::CheckStatus::FAIL;
                any_undecided |= l.status == facto::CheckStatus::UNDECIDED;
            }
            for (const auto& b : bounds) any_fail |= !b.pass;

            facto::Json j{{"artifact_version", kVersion}};
            facto::Json jl = facto::Json::array(), jb = facto::Json::array();
            std::string text;
            for (const auto& l : lemmas) {
                jl.push_back(facto::to_json(l));
                text += std::string(facto::to_string(l.id)) + " [" + l.range +
                        "]: " + facto::to_string(l.status);
                if (!l.counterexample.empty()) text += " (" + l.counterexample + ")";
                text += "\n";
            }
            for (const auto& b : bounds) jb.push_back(facto::to_json(b));
            j["lemmas"] = jl;
            j["bounds"] = jb;
            const char* overall = any_fail ? "FAIL" : (any_undecided ? "UNDECIDED" : "PASS");
            j["overall"] = overall;
            text += std::string("overall: ") + overall + "\n";
            emit(g, j, text);
            return any_fail ? kFail : (any_undecided ? kUndecided : kOk);
        }

        if (cmd_spectrum->parsed()) {
            load_cache_if_any(g);
            facto::BigNat x;
            if (mpz_set_str(x.get_mpz_t(), spec_x.c_str(), 10) != 0 || x < 1)
                throw facto::invalid_input("x must be a positive integer");
            facto::SpectrumReport rep = facto::spectrum(x);
            facto::Json j = facto::to_json(rep);
            if (rep.complete && rep.distinct_count <= 1000) {
                facto::FeasibleSet fs = facto::enumerate_feasible(x);
                facto::DistinctValues dv = facto::distinct_values(fs);
                facto::Json vals = facto::Json::array();
                for (const auto& v : dv.values) vals.push_back(v.get_str());
                j["distinct_values"] = vals;
            }
            save_cache_if_any(g);
            std::string text = "x              = " + rep.x.get_str() + "\n" +
                               "tuples         = " + std::to_string(rep.tuple_count) + "\n" +
                               "distinct       = " + std::to_string(rep.distinct_count) + "\n";
            if (rep.asymptotics_defined) {
                text += "theorem bound  = " + std::to_string(rep.theorem_bound_value) + "\n" +
                        "prior bound    = " + std::to_string(rep.prior_bound_value) + "\n" +
                        "ratio_log      = " + std::to_string(rep.ratio_log) + "\n";
            }
            if (!rep.complete) text += "WARNING: enumeration incomplete (budget)\n";
            emit(g, j, text);
            return rep.complete ? kOk : kBudget;
        }

        if (cmd_conj->parsed()) {
            load_cache_if_any(g);
            facto::ConjectureSReport rep = facto::conjecture_S(conj_x, conj_B);
            save_cache_if_any(g);
            emit(g, facto::to_json(rep),
                 "|S|               = " + rep.s_size.get_str() + "\n" +
                     "distinct p values = " + rep.distinct_p_on_s.get_str() + "\n");
            return kOk;
        }
    } catch (const facto::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const facto::input_too_large& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const facto::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const facto::precision_exhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
