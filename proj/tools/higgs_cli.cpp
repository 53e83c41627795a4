#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "higgs/cache.hpp"
#include "higgs/identities.hpp"
#include "higgs/json_io.hpp"
#include "higgs/mozgovoy.hpp"
#include "higgs/schiffmann.hpp"

using nlohmann::json;
using namespace higgs;

namespace {

constexpr int kExitBadFlags = 1;
constexpr int kExitNotPolynomial = 2;
constexpr int kExitCheckFailed = 3;

std::string rf_to_text(const FactoredRat& a) {
    std::string out = "num:\n" + a.num().to_text();
    if (!a.den().empty()) {
        out += "\nden:";
        for (const auto& d : a.den())
            out += "\n  (" + d.poly.to_text() + ")^" + std::to_string(d.mult);
    }
    return out;
}

TSeries cached_series(const std::string& pipeline, const HiggsContext& ctx,
                      const SeriesCache& cache) {
    CacheKey key{pipeline, ctx.genus, ctx.order};
    if (auto hit = cache.get(key, ctx.vs)) return std::move(*hit);
    TSeries s = pipeline == "mozgovoy" ? omega_g_series(ctx) : omega_prime_series(ctx);
    cache.put(key, s);
    return s;
}

TSeries h_from(const std::string& pipeline, const HiggsContext& ctx,
               const SeriesCache& cache) {
    return plog(cached_series(pipeline, ctx, cache)).scale(plog_scalar(ctx.vs));
}

struct ComputeConfig {
    int genus = 0;
    int rank = 1;
    int degree = 0;
    bool degree_given = false;
    int threads = 1;
    int truncation_bound = 6;
    std::string pipeline = "mozgovoy";
    std::string specialize = "none";
    std::string output = "text";
    std::string cache_dir;
};

json compute_one(const std::string& pipeline, const ComputeConfig& cfg,
                 const SeriesCache& cache, std::string& text_out) {
    HiggsContext ctx(cfg.genus, cfg.rank, cfg.threads);
    TSeries h = h_from(pipeline, ctx, cache);
    const int r = cfg.rank;
    if (pipeline == "schiffmann" && cfg.specialize == "none") {
        const FactoredRat& c = h.coeff(r);
        text_out = rf_to_text(c);
        return rf_to_json(c);
    }
    LaurentPoly p = [&] {
        if (pipeline == "schiffmann") {
            // specialize == "a": z = 1 first, then force polynomiality
            std::map<int, Binding> z1{{ctx.vs.z_index(), Binding::to_constant(1)}};
            return rf_specialize(h.coeff(r), z1).to_poly_or_throw(
                "H' coefficient at z=1, T^" + std::to_string(r));
        }
        if (cfg.specialize == "none") return h_poly(h, r);
        if (cfg.specialize == "a") return a_poly(h, r);
        if (cfg.specialize == "e") return e_poly(h, ctx, r);
        return poincare_poly(h, ctx, r);
    }();
    text_out = p.to_text();
    return poly_to_json(p);
}

int run_compute(const ComputeConfig& cfg) {
    if (cfg.degree_given)
        std::cerr << "warning: --degree is ignored; the computed polynomials are "
                     "independent of the degree (the E-polynomials coincide for "
                     "all coprime degrees)\n";
    if (cfg.genus == 0)
        std::cerr << "note: g=0 is extended range\n";
    SeriesCache cache(SeriesCache::resolve_dir(cfg.cache_dir));
    try {
        json out;
        std::string text;
        if (cfg.pipeline == "both") {
            std::string t1, t2;
            json j1 = compute_one("mozgovoy", cfg, cache, t1);
            json j2 = compute_one("schiffmann", cfg, cache, t2);
            out = {{"mozgovoy", j1}, {"schiffmann", j2}};
            text = "== mozgovoy ==\n" + t1 + "\n== schiffmann ==\n" + t2;
        } else {
            out = compute_one(cfg.pipeline, cfg, cache, text);
        }
        if (cfg.output == "json")
            std::cout << out.dump(2) << '\n';
        else
            std::cout << text << '\n';
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotPolynomial;
    }
}

struct VerifyConfig {
    std::string suite = "all";
    int max_size = 0;  // 0 = per-check defaults
    int genus = 1;
    int rank = 2;
    int threads = 1;
    std::string output = "text";
};

struct Report {
    std::vector<VerificationRecord> records;
    std::vector<double> millis;

    template <typename Fn>
    void run(Fn fn) {
        auto t0 = std::chrono::steady_clock::now();
        VerificationRecord rec = fn();
        auto t1 = std::chrono::steady_clock::now();
        millis.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        records.push_back(std::move(rec));
    }

    int failures() const {
        int n = 0;
        for (const auto& r : records) n += r.pass ? 0 : 1;
        return n;
    }
};

void run_identity_suite(Report& rep, const VerifyConfig& cfg) {
    const int lem = cfg.max_size ? cfg.max_size : 6;
    const int sumz = cfg.max_size ? cfg.max_size : 8;
    const int prop = cfg.max_size ? cfg.max_size : 6;
    const int cor = cfg.max_size ? cfg.max_size : 5;
    const int jfac = cfg.max_size ? cfg.max_size : 5;
    for (int m = 0; m <= lem; ++m)
        for (const Partition& mu : gen_partitions(m))
            for (int n = 0; n <= lem; ++n)
                for (const Partition& nu : gen_partitions(n))
                    rep.run([&] { return check_arm_leg_sum(mu, nu); });
    for (int m = 0; m <= sumz; ++m)
        for (const Partition& mu : gen_partitions(m))
            rep.run([&] { return check_sumz(mu); });
    for (int m = 0; m <= prop; ++m)
        for (const Partition& mu : gen_partitions(m))
            rep.run([&] { return check_ratio_sum(mu); });
    for (int m = 0; m <= cor; ++m)
        for (const Partition& mu : gen_partitions(m))
            rep.run([&] { return check_armleg_product(mu); });
    for (int g = 0; g <= 2; ++g)
        for (int m = 0; m <= jfac; ++m)
            for (const Partition& mu : gen_partitions(m))
                rep.run([&] { return check_j_factorization(mu, g); });
    for (int n = 1; n <= 4; ++n) rep.run([&] { return l_n_identity(n); });
    for (int g = 0; g <= 2; ++g)
        for (int n = 0; n <= 2; ++n)
            rep.run([&] { return regularity_check(n, g); });
    for (int g = 0; g <= 1; ++g)
        rep.run([&] { return regularity_check(3, g); });
}

void run_denominator_suite(Report& rep, const VerifyConfig& cfg) {
    const int bound = cfg.max_size ? cfg.max_size : 5;
    for (int g = 0; g <= 2; ++g) {
        HiggsContext ctx(g, 1, cfg.threads);
        for (int m = 0; m <= bound; ++m)
            for (const Partition& mu : gen_partitions(m)) {
                FactoredRat fmu = f_mu(mu, ctx);
                rep.run([&] { return nmu_bound_check(mu, ctx, fmu); });
                rep.run([&] { return denominator_bound_check(mu, ctx, fmu); });
            }
    }
}

void run_main_suite(Report& rep, const VerifyConfig& cfg) {
    HiggsContext ctx(cfg.genus, cfg.rank, cfg.threads);
    TSeries h = h_series(ctx);
    TSeries hp = h_prime_series(ctx);
    for (int r = 1; r <= cfg.rank; ++r) {
        rep.run([&] { return check_laurent_in_z(hp, r); });
        rep.run([&] { return compare_at_z1(hp, h, r); });
        rep.run([&]() -> VerificationRecord {
            VerificationRecord rec;
            rec.check = "h_polynomiality";
            rec.instance = {{"g", cfg.genus}, {"r", r}};
            auto v = h.coeff(r).to_poly();
            rec.pass = std::holds_alternative<LaurentPoly>(v);
            rec.detail = rec.pass ? "H_{g,r} is a Laurent polynomial"
                                  : "cancellation incomplete";
            if (cfg.genus == 0) rec.detail += " [extended range: g=0]";
            return rec;
        });
    }
}

int run_verify(const VerifyConfig& cfg) {
    Report rep;
    if (cfg.suite == "identities" || cfg.suite == "all") run_identity_suite(rep, cfg);
    if (cfg.suite == "denominators" || cfg.suite == "all") run_denominator_suite(rep, cfg);
    if (cfg.suite == "main" || cfg.suite == "all") run_main_suite(rep, cfg);

    const int fails = rep.failures();
    if (cfg.output == "json") {
        json records = json::array();
        for (size_t i = 0; i < rep.records.size(); ++i) {
            json r = rep.records[i].to_json();
            r["millis"] = rep.millis[i];
            records.push_back(std::move(r));
        }
        json out = {{"engine", kEngineVersion},
                    {"records", records},
                    {"summary",
                     {{"total", rep.records.size()},
                      {"pass", rep.records.size() - static_cast<size_t>(fails)},
                      {"fail", fails}}}};
        std::cout << out.dump(2) << '\n';
    } else {
        for (size_t i = 0; i < rep.records.size(); ++i) {
            const auto& r = rep.records[i];
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << ' '
                      << r.instance.dump() << ": " << r.detail << '\n';
        }
        std::cout << "summary: " << rep.records.size() - static_cast<size_t>(fails)
                  << '/' << rep.records.size() << " passed\n";
    }
    return fails ? kExitCheckFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generating-series engine for Higgs bundle counts"};
    app.require_subcommand(1);

    ComputeConfig ccfg;
    CLI::App* compute = app.add_subcommand("compute", "compute H, A, E or Poincare polynomials");
    compute->add_option("-g,--genus", ccfg.genus, "curve genus (>= 0)")->required();
    compute->add_option("-r,--rank", ccfg.rank, "rank (coefficient of T^r)")->required();
    compute->add_option("-d,--degree", ccfg.degree, "degree (accepted and ignored)")
        ->each([&](const std::string&) { ccfg.degree_given = true; });
    compute->add_option("--pipeline", ccfg.pipeline, "mozgovoy | schiffmann | both")
        ->check(CLI::IsMember({"mozgovoy", "schiffmann", "both"}));
    compute->add_option("--specialize", ccfg.specialize, "none | a | e | poincare")
        ->check(CLI::IsMember({"none", "a", "e", "poincare"}));
    compute->add_option("--output", ccfg.output, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    compute->add_option("--cache-dir", ccfg.cache_dir, "series cache directory");
    compute->add_option("--threads", ccfg.threads, "worker threads");
    compute->add_option("--truncation-bound", ccfg.truncation_bound,
                        "maximum allowed rank (default 6)");

    VerifyConfig vcfg;
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", vcfg.suite, "identities | main | denominators | all")
        ->check(CLI::IsMember({"identities", "main", "denominators", "all"}));
    verify->add_option("--max-size", vcfg.max_size, "partition size bound override");
    verify->add_option("-g,--genus", vcfg.genus, "genus for the main suite");
    verify->add_option("-r,--rank", vcfg.rank, "rank bound for the main suite");
    verify->add_option("--output", vcfg.output, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--threads", vcfg.threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadFlags;
    }

    try {
        if (compute->parsed()) {
            if (ccfg.genus < 0 || ccfg.rank < 1 || ccfg.threads < 1 ||
                ccfg.rank > ccfg.truncation_bound) {
                std::cerr << "error: invalid genus/rank/threads "
                             "(rank must be <= truncation bound "
                          << ccfg.truncation_bound << ")\n";
                return kExitBadFlags;
            }
            if (ccfg.pipeline != "mozgovoy" &&
                (ccfg.specialize == "e" || ccfg.specialize == "poincare")) {
                std::cerr << "error: --specialize " << ccfg.specialize
                          << " requires the mozgovoy pipeline\n";
                return kExitBadFlags;
            }
            return run_compute(ccfg);
        }
        return run_verify(vcfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotPolynomial;
    }
}
