#include "dofia/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "dofia/errors.hpp"
#include "dofia/linalg.hpp"
#include "dofia/regions.hpp"
#include "dofia/schemes.hpp"
#include "dofia/simulator.hpp"

namespace dofia {

std::vector<AntennaConfig> normalized_configs(int max) {
    std::vector<AntennaConfig> out;
    for (int m1 = 1; m1 <= max; ++m1)
        for (int m2 = 1; m2 <= max; ++m2)
            for (int n1 = 1; n1 <= max; ++n1)
                for (int n2 = n1; n2 <= max; ++n2) out.push_back(AntennaConfig{m1, m2, n1, n2, false});
    return out;
}

int SweepResult::violations() const {
    int v = 0;
    for (const auto& [name, c] : checks) v += c.violations;
    return v;
}

namespace {

template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    const auto threads = std::min<std::size_t>(static_cast<std::size_t>(worker_threads()), std::max<std::size_t>(n, 1));
    std::vector<std::thread> pool;
    for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

constexpr std::size_t kMaxExamples = 25;

void record(SweepCheck& c, bool ok, const std::string& what) {
    ++c.checked;
    if (ok) return;
    ++c.violations;
    if (c.examples.size() < kMaxExamples) c.examples.push_back(what);
}

bool one_of(ConfigClass c, std::initializer_list<ConfigClass> set) {
    return std::find(set.begin(), set.end(), c) != set.end();
}

void check_classification(const AntennaConfig& cfg, SweepCheck& chk) {
    const ClassPredicates p = predicates(cfg);
    const int top = p.c1 + p.c2 + p.c3 + p.c4 + p.c5 + p.c6;
    const int sub = p.s1 + p.s2 + p.c61 + p.c62 + p.c63;
    const ConfigClass cls = classify(cfg);
    bool ok = top == 1 && sub <= 1 && (p.s == (p.s1 || p.s2)) && (sub == 0 || p.c6) && in_c6(cls) == p.c6;
    ok = ok && normalize(cfg) == cfg;
    if (cfg.n1 < cfg.n2) {
        AntennaConfig back = normalize(cfg.m2, cfg.m1, cfg.n2, cfg.n1);
        ok = ok && back.swapped && classify(back) == cls;
    }
    record(chk, ok, to_string(cfg));
}

// With N1 == N2 both user orders are normalized configs, possibly in
// different classes; they describe one channel, so the regions must mirror.
void check_relabeling(const AntennaConfig& cfg, SweepCheck& chk) {
    if (cfg.n1 != cfg.n2) return;
    const AntennaConfig other{cfg.m2, cfg.m1, cfg.n2, cfg.n1, false};
    const bool ok = equals(mirrored(achievable_region(cfg).region), achievable_region(other).region) &&
                    equals(mirrored(no_csit_region(cfg)), no_csit_region(other)) &&
                    equals(mirrored(intersect(perfect_csit_region(cfg), bc_delayed_region(cfg))),
                           intersect(perfect_csit_region(other), bc_delayed_region(other)));
    record(chk, ok, to_string(cfg) + " vs " + to_string(other));
}

}  // namespace

RankOracleResult rank_oracle(const std::vector<AntennaConfig>& cfgs, int max_w, int seeds, std::uint64_t base_seed) {
    struct Tuple {
        std::size_t cfg;
        int w, w1, w2;
    };
    std::vector<Tuple> tuples;
    for (std::size_t c = 0; c < cfgs.size(); ++c)
        for (int w = 2; w <= max_w; ++w)
            for (int w1 = 1; w1 < w; ++w1)
                for (int w2 = 1; w2 < w; ++w2) tuples.push_back({c, w, w1, w2});

    RankOracleResult res;
    res.tuples = static_cast<long long>(tuples.size());
    std::mutex mu;
    parallel_for(tuples.size(), [&](std::size_t idx) {
        const Tuple& tp = tuples[idx];
        const AntennaConfig& cfg = cfgs[tp.cfg];
        const SchemeSpec spec = generic_scheme(cfg, tp.w, tp.w1, tp.w2);
        const RankCondition rc = rank_condition(cfg, spec);
        long long bad = 0;
        bool tuple_bad = false, disagree = false;
        std::vector<RankMismatch> found;
        for (int i = 1; i <= 2; ++i) {
            const RankTerms t = rank_terms(cfg, spec, i);
            bool first = true;
            for (int s = 0; s < seeds; ++s) {
                const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(s);
                const auto r = static_cast<int>(rank(build_coefficient_matrix<Fp>(cfg, spec, i, seed).p));
                if ((r == t.unknowns) != rc.holds[static_cast<std::size_t>(i - 1)]) disagree = true;
                if (r == t.predicted_rank) continue;
                ++bad;
                tuple_bad = true;
                if (first) found.push_back({cfg, tp.w, tp.w1, tp.w2, i, seed, r, t.predicted_rank, t.unknowns});
                first = false;
            }
        }
        std::lock_guard<std::mutex> lk(mu);
        res.evaluations += 2LL * seeds;
        res.mismatched_evaluations += bad;
        res.mismatched_tuples += tuple_bad;
        res.decode_disagreements += disagree;
        res.mismatches.insert(res.mismatches.end(), found.begin(), found.end());
    });
    auto key = [](const RankMismatch& m) {
        return std::tuple(m.cfg.m1, m.cfg.m2, m.cfg.n1, m.cfg.n2, m.w, m.w1, m.w2, m.receiver);
    };
    std::sort(res.mismatches.begin(), res.mismatches.end(),
              [&](const RankMismatch& a, const RankMismatch& b) { return key(a) < key(b); });
    return res;
}

SweepResult run_sweep(const SweepOptions& opt, const Progress& progress) {
    if (opt.max_antennas < 1) throw ValidationError("max antennas must be >= 1");
    if (opt.trials < 1) throw ValidationError("trials must be >= 1");
    auto say = [&](const std::string& m) {
        if (progress) progress(m);
    };
    SweepResult res;
    res.options = opt;
    const auto cfgs = normalized_configs(opt.max_antennas);
    res.configs = static_cast<int>(cfgs.size());

    auto& cls_chk = res.checks["classification"];
    auto& inc_chk = res.checks["region_inclusions"];
    auto& tight_chk = res.checks["tightness"];
    auto& corner_chk = res.checks["corner_schemes"];

    say("regions and classification over " + std::to_string(cfgs.size()) + " configurations");
    for (const auto& cfg : cfgs) {
        const ConfigClass cls = classify(cfg);
        ++res.class_counts[std::string(to_string(cls))];
        check_classification(cfg, cls_chk);
        check_relabeling(cfg, res.checks["relabeling"]);

        RegionBundle b;
        try {
            b = region_bundle(cfg);
        } catch (const InvariantError& e) {
            record(tight_chk, false, e.what());
            continue;
        }
        const bool inclusions = subset(b.no_csit, b.achievable) && subset(b.achievable, b.outer) &&
                                subset(b.outer, b.perfect_csit) && subset(b.outer, b.bc_delayed);
        record(inc_chk, inclusions, to_string(cfg));
        const bool must_be_loose =
            one_of(cls, {ConfigClass::C2, ConfigClass::C5, ConfigClass::C63, ConfigClass::S1, ConfigClass::S2});
        record(tight_chk, !(must_be_loose && b.tight), to_string(cfg) + " class " + std::string(to_string(cls)) +
                                                           " is tight");
        if (b.tightness.finding)
            res.findings.push_back(to_string(cfg) + " class " + std::string(to_string(cls)) +
                                   " is tight without a case predicate");
    }

    say("corner schemes, " + std::to_string(opt.trials) + " trials each");
    for (const auto& cfg : cfgs) {
        for (const auto& label : scheme_corners(cfg)) {
            const std::string where = to_string(cfg) + " " + label;
            try {
                const SchemeSpec spec = corner_scheme(cfg, label);
                bool ok = true;
                if (spec.generic_structure())
                    ok = count_constraints(spec, cfg).holds() && rank_condition(cfg, spec).both();
                const Aggregate a = monte_carlo(cfg, spec, opt.trials, opt.seed);
                ok = ok && a.all_decoded() && a.staged_mismatches == 0;
                const auto formula = corner_formula(cfg, label == "symmetric" ? "P3" : label);
                ok = ok && formula && a.dof && (*a.dof)[0] == formula->d1 && (*a.dof)[1] == formula->d2;
                record(corner_chk, ok, where);
            } catch (const std::exception& e) {
                record(corner_chk, false, where + ": " + e.what());
            }
        }
    }

    auto& miso_chk = res.checks["miso"];
    for (int k = 2; k <= std::min(5, opt.max_antennas); ++k)
        for (int m = k; m <= std::min(k + 1, opt.max_antennas); ++m) {
            const MisoConfig mc{k, m};
            bool ok = true;
            for (int s = 0; s < opt.trials && ok; ++s) {
                const MisoTrial t = run_miso_detailed(mc, opt.seed + static_cast<std::uint64_t>(s));
                ok = t.report.all_decoded() && t.final_systems_invertible;
            }
            record(miso_chk, ok, "K=" + std::to_string(k) + " M=" + std::to_string(m));
        }

    if (opt.rank_max_w >= 2) {
        const int seeds = opt.rank_seeds > 0 ? opt.rank_seeds : opt.trials;
        say("rank formula oracle, W <= " + std::to_string(opt.rank_max_w) + ", " + std::to_string(seeds) + " seeds");
        const RankOracleResult r = rank_oracle(cfgs, opt.rank_max_w, seeds, opt.seed);
        auto& exact = res.checks["rank_formula"];
        auto& decode = res.checks["decode_iff_rank_condition"];
        exact.checked = decode.checked = static_cast<int>(r.tuples);
        exact.violations = static_cast<int>(r.mismatched_tuples);
        decode.violations = static_cast<int>(r.decode_disagreements);
        for (const auto& m : r.mismatches) {
            if (exact.examples.size() >= kMaxExamples) break;
            std::ostringstream os;
            os << to_string(m.cfg) << " W=" << m.w << " W1=" << m.w1 << " W2=" << m.w2 << " rx" << m.receiver
               << " seed " << m.seed << ": rank " << m.rank << " predicted " << m.predicted << " unknowns "
               << m.unknowns;
            exact.examples.push_back(os.str());
        }
    }
    return res;
}

Json sweep_json(const SweepResult& r) {
    Json j;
    j["max_antennas"] = r.options.max_antennas;
    j["trials"] = r.options.trials;
    j["rank_max_w"] = r.options.rank_max_w;
    j["seed"] = r.options.seed;
    j["configs"] = r.configs;
    Json cc;
    for (const auto& [k, v] : r.class_counts) cc[k] = v;
    j["class_counts"] = cc;
    Json checks;
    for (const auto& [name, c] : r.checks)
        checks[name] = Json{{"checked", c.checked}, {"violations", c.violations}, {"examples", c.examples}};
    j["checks"] = checks;
    j["findings"] = r.findings;
    j["violations"] = r.violations();
    return j;
}

std::string sweep_text(const SweepResult& r) {
    std::ostringstream os;
    os << "sweep: " << r.configs << " configurations, counts <= " << r.options.max_antennas << ", " << r.options.trials
       << " trials per scheme\n";
    os << "classes:";
    for (const auto& [k, v] : r.class_counts) os << ' ' << k << '=' << v;
    os << "\n";
    for (const auto& [name, c] : r.checks) {
        os << "  " << name << ": " << c.checked << " checked, " << c.violations << " violations\n";
        for (const auto& e : c.examples) os << "    " << e << "\n";
    }
    os << "findings: " << r.findings.size() << "\n";
    for (const auto& f : r.findings) os << "  " << f << "\n";
    os << (r.violations() == 0 ? "OK" : "VIOLATIONS: " + std::to_string(r.violations())) << "\n";
    return os.str();
}

}  // namespace dofia
