// dofia: command-line front end for classification, regions, scheme
// verification and sweeps.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dofia/config.hpp"
#include "dofia/errors.hpp"
#include "dofia/linalg.hpp"
#include "dofia/regions.hpp"
#include "dofia/report.hpp"
#include "dofia/schemes.hpp"
#include "dofia/simulator.hpp"
#include "dofia/sweep.hpp"

using namespace dofia;

namespace {

constexpr std::uint64_t kDefaultSeed = 20160901;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Counts {
    int m1 = 0, m2 = 0, n1 = 0, n2 = 0;
    void add(CLI::App* sc) {
        sc->add_option("m1", m1, "transmit antennas of user 1")->required();
        sc->add_option("m2", m2, "transmit antennas of user 2")->required();
        sc->add_option("n1", n1, "receive antennas of user 1")->required();
        sc->add_option("n2", n2, "receive antennas of user 2")->required();
    }
    [[nodiscard]] AntennaConfig cfg() const { return normalize(m1, m2, n1, n2); }
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw IoError("write to '" + path + "' failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string dof_text(const std::optional<std::vector<Rational>>& dof) {
    if (!dof) return "-";
    std::string s = "(";
    for (std::size_t k = 0; k < dof->size(); ++k) s += (k ? ", " : "") + (*dof)[k].str();
    return s + ")";
}

std::string aggregate_text(const Aggregate& a) {
    std::ostringstream os;
    os << "class " << a.class_name << "  scheme " << a.corner << "  W=" << a.spec.w << " W1=" << a.spec.w1
       << " W2=" << a.spec.w2 << "  trials " << a.trials << "  base seed " << a.base_seed << "\n";
    for (std::size_t r = 0; r < a.decoded.size(); ++r)
        os << "  receiver " << r + 1 << ": decoded " << a.decoded[r] << "/" << a.trials << ", rank "
           << a.min_rank[r] << ".." << a.max_rank[r] << ", rank agrees with formula " << a.rank_agreement[r] << "/"
           << a.trials << "\n";
    os << "  DoF " << dof_text(a.dof) << "\n";
    if (!a.failing_seeds.empty()) {
        os << "  failing seeds:";
        for (std::size_t k = 0; k < a.failing_seeds.size() && k < 20; ++k) os << ' ' << a.failing_seeds[k];
        os << (a.failing_seeds.size() > 20 ? " ..." : "") << "\n";
    }
    if (a.staged_mismatches) os << "  staged/joint mismatches: " << a.staged_mismatches << "\n";
    return os.str();
}

std::string render_aggregate(const Aggregate& a, const std::string& format) {
    if (format == "json") return dump(to_json(a));
    if (format == "csv") return to_csv(a);
    if (format == "text") return aggregate_text(a);
    throw ValidationError("format '" + format + "' is not available for this command");
}

// ---- subcommands ---------------------------------------------------------------

int cmd_classify(const Counts& c, const std::string& format, const std::string& out) {
    const AntennaConfig cfg = c.cfg();
    if (format == "json") {
        emit(dump(classification_json(cfg)), out);
        return 0;
    }
    if (format != "text") throw ValidationError("classify supports text or json");
    const DerivedParams d = derived(cfg);
    std::ostringstream os;
    os << to_string(classify(cfg)) << "\n";
    os << "normalized " << to_string(cfg) << (cfg.swapped ? " (users swapped)" : "") << "\n";
    os << "M1'=" << d.m1_prime << " M2'=" << d.m2_prime << " lambda=" << d.lambda
       << " Delta=" << (d.delta ? d.delta->str() : "undefined")
       << " Delta'=" << (d.delta_prime ? d.delta_prime->str() : "undefined") << "\n";
    emit(os.str(), out);
    return 0;
}

int cmd_region(const Counts& c, const std::string& format, const std::string& out, bool caller_order) {
    RegionBundle b = region_bundle(c.cfg());
    if (caller_order) b = in_caller_order(b);
    if (format == "json") {
        emit(dump(to_json(b)), out);
    } else if (format == "svg") {
        emit(render_svg(b), out);
    } else if (format == "text") {
        std::ostringstream os;
        os << "class " << to_string(b.cls) << "  " << to_string(b.cfg) << (b.tight ? "  tight" : "  not tight");
        if (b.tightness.case_label) os << " (case " << *b.tightness.case_label << ")";
        if (b.tightness.finding) os << " (tight without a case predicate)";
        os << "\n";
        auto verts = [&](const char* name, const Polytope2D& p) {
            os << "  " << name << ":";
            for (const auto& v : p.vertices()) os << ' ' << to_string(v);
            os << "\n";
        };
        verts("achievable  ", b.achievable);
        verts("outer       ", b.outer);
        verts("perfect CSIT", b.perfect_csit);
        verts("BC delayed  ", b.bc_delayed);
        verts("no CSIT     ", b.no_csit);
        for (const auto& cp : b.corner_points) os << "  " << cp.label << " = " << to_string(cp.point) << "\n";
        emit(os.str(), out);
    } else {
        throw ValidationError("region supports json, svg or text");
    }
    return 0;
}

int cmd_verify_corner(const Counts& c, const std::string& corner, int trials, std::uint64_t seed,
                      const std::string& format, const std::string& out) {
    const AntennaConfig cfg = c.cfg();
    const SchemeSpec spec = corner_scheme(cfg, corner);
    const Aggregate a = monte_carlo(cfg, spec, trials, seed);
    emit(render_aggregate(a, format), out);
    if (!a.all_decoded() || a.staged_mismatches) return 2;
    // The achieved pair must be the corner formula exactly.
    const std::string label = corner == "symmetric" ? "P3" : corner;
    if (const auto p = corner_formula(cfg, label); p && a.dof && (*a.dof)[0] != p->d1) return 2;
    if (const auto p = corner_formula(cfg, label); p && a.dof && (*a.dof)[1] != p->d2) return 2;
    return 0;
}

int cmd_verify_rank(const Counts& c, int w, int w1, int w2, int trials, std::uint64_t seed,
                    const std::string& field, const std::string& format, const std::string& out) {
    const AntennaConfig cfg = c.cfg();
    const SchemeSpec spec = generic_scheme(cfg, w, w1, w2);
    validate(spec, cfg);
    const CountConstraints cc = count_constraints(spec, cfg);
    const RankCondition rc = rank_condition(cfg, spec);
    const RankTerms t1 = rank_terms(cfg, spec, 1), t2 = rank_terms(cfg, spec, 2);

    Aggregate a;
    int real_min[2] = {INT32_MAX, INT32_MAX}, real_max[2] = {0, 0};
    if (field == "prime") {
        a = monte_carlo(cfg, spec, trials, seed);
    } else if (field == "real") {
        // Conditioning diagnostic only: numerical rank of the same structure.
        for (int k = 0; k < trials; ++k)
            for (int i = 1; i <= 2; ++i) {
                const auto r = static_cast<int>(rank(build_coefficient_matrix<double>(cfg, spec, i, seed + k).p));
                real_min[i - 1] = std::min(real_min[i - 1], r);
                real_max[i - 1] = std::max(real_max[i - 1], r);
            }
    } else {
        throw ValidationError("field must be prime or real");
    }

    // Exact-field decoding must agree with the rank condition at each receiver.
    bool consistent = true;
    if (field == "prime")
        for (int i = 0; i < 2; ++i) consistent = consistent && (a.decoded[static_cast<std::size_t>(i)] == trials) == rc.holds[static_cast<std::size_t>(i)];

    if (format == "json") {
        Json j;
        j["config"] = to_json(cfg);
        j["class"] = std::string(to_string(classify(cfg)));
        j["scheme"] = to_json(spec);
        j["count_constraints"] = to_json(cc);
        j["rank_terms"] = Json::array({to_json(t1), to_json(t2)});
        j["rank_condition"] = Json::array({rc.holds[0], rc.holds[1]});
        j["field"] = field;
        if (field == "prime") {
            j["simulation"] = to_json(a);
            j["consistent"] = consistent;
        } else {
            j["real_rank"] = Json::array({Json{{"min", real_min[0]}, {"max", real_max[0]}},
                                          Json{{"min", real_min[1]}, {"max", real_max[1]}}});
        }
        emit(dump(j), out);
    } else if (format == "csv" && field == "prime") {
        emit(to_csv(a), out);
    } else if (format == "text") {
        std::ostringstream os;
        os << "class " << to_string(classify(cfg)) << "  " << to_string(cfg) << "  W=" << w << " W1=" << w1
           << " W2=" << w2 << "\n";
        os << "count constraints: " << cc.lhs1 << " <= " << cc.rhs1 << ", " << cc.lhs2 << " <= " << cc.rhs2
           << (cc.holds() ? "  hold" : "  VIOLATED") << "\n";
        int i = 1;
        for (const auto& t : {t1, t2}) {
            os << "receiver " << i << ": r1=" << t.r1 << " r2=" << t.r2 << " r3=" << t.r3 << " predicted rank "
               << t.predicted_rank << " / " << t.unknowns << " unknowns  rank condition "
               << (rc.holds[static_cast<std::size_t>(i - 1)] ? "holds" : "FAILS") << "\n";
            ++i;
        }
        if (field == "prime") {
            os << aggregate_text(a);
            if (!consistent) os << "simulation disagrees with the rank condition\n";
        } else {
            for (int k = 0; k < 2; ++k)
                os << "receiver " << k + 1 << ": numerical rank " << real_min[k] << ".." << real_max[k] << "\n";
        }
        emit(os.str(), out);
    } else {
        throw ValidationError("verify-rank supports json, text, or csv with the prime field");
    }
    return consistent ? 0 : 2;
}

int cmd_miso(int k, int m, int trials, std::uint64_t seed, const std::string& format, const std::string& out) {
    const MisoConfig mc{k, m};
    validate(mc);
    const Aggregate a = monte_carlo_miso(mc, trials, seed);
    const MisoBounds b = miso_bounds(mc);
    Rational sum = 0;
    if (a.dof)
        for (const auto& r : *a.dof) sum += r;
    if (format == "json") {
        Json j = to_json(a);
        j["k"] = k;
        j["m"] = m;
        j["achievable_sum_dof"] = to_json(b.achievable_sum);
        j["upper_sum_dof"] = to_json(b.upper_sum);
        emit(dump(j), out);
    } else if (format == "csv") {
        emit(to_csv(a), out);
    } else if (format == "text") {
        std::ostringstream os;
        os << "K=" << k << " M=" << m << "  decoded " << (a.trials - static_cast<int>(a.failing_seeds.size())) << "/"
           << a.trials << "  sum-DoF " << (a.dof ? sum.str() : "-") << "  achievable " << b.achievable_sum.str()
           << "  upper " << b.upper_sum.str() << "\n";
        emit(os.str(), out);
    } else {
        throw ValidationError("miso supports json, csv or text");
    }
    if (!a.all_decoded() || (a.dof && sum != b.achievable_sum)) return 2;
    return 0;
}

int cmd_sweep(const SweepOptions& opt, const std::string& format, const std::string& out) {
    const SweepResult r = run_sweep(opt, [](const std::string& msg) { std::cerr << msg << "\n"; });
    emit(format == "json" ? dump(sweep_json(r)) : sweep_text(r), out);
    return r.violations() == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degrees-of-freedom regions and linear schemes for the two-user MIMO interference channel "
                 "with delayed local CSIT"};
    app.require_subcommand(1);
    std::string format = "text", out;
    std::uint64_t seed = kDefaultSeed;
    int trials = 100;
    auto common = [&](CLI::App* sc, bool simulated) {
        sc->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "svg", "text"}));
        sc->add_option("-o,--output", out, "write to this file instead of stdout");
        if (simulated) {
            sc->add_option("--trials", trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
            sc->add_option("--seed", seed, "base seed (trial k uses seed+k)")->capture_default_str();
        }
    };

    Counts counts;
    auto* classify_cmd = app.add_subcommand("classify", "class and derived parameters of a configuration");
    counts.add(classify_cmd);
    common(classify_cmd, false);

    bool caller_order = false;
    auto* region_cmd = app.add_subcommand("region", "achievable, outer, perfect-CSIT, BC and no-CSIT regions");
    counts.add(region_cmd);
    common(region_cmd, false);
    region_cmd->add_flag("--caller-order", caller_order, "report regions in the given user order, not normalized");

    std::string corner;
    auto* corner_cmd = app.add_subcommand("verify-corner", "simulate the prescribed scheme for a corner point");
    counts.add(corner_cmd);
    corner_cmd->add_option("corner", corner, "corner label (Q3, P3, symmetric, S3, T4..T9)")->required();
    common(corner_cmd, true);

    int w = 0, w1 = 0, w2 = 0;
    std::string field = "prime";
    auto* rank_cmd = app.add_subcommand("verify-rank", "rank condition and simulation of a generic scheme");
    counts.add(rank_cmd);
    rank_cmd->add_option("--W", w, "block length")->required();
    rank_cmd->add_option("--W1", w1, "phase-one length of transmitter 1")->required();
    rank_cmd->add_option("--W2", w2, "phase-one length of transmitter 2")->required();
    rank_cmd->add_option("--field", field, "prime (exact) or real (diagnostic)")
        ->check(CLI::IsMember({"prime", "real"}));
    common(rank_cmd, true);

    int k = 0, m = 0;
    auto* miso_cmd = app.add_subcommand("miso", "K-user MISO scheme");
    miso_cmd->add_option("K", k, "users")->required();
    miso_cmd->add_option("M", m, "antennas per transmitter")->required();
    common(miso_cmd, true);

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "invariant suite over every configuration up to a bound");
    sweep_cmd->add_option("max-antennas", sweep.max_antennas, "largest antenna count")->required()->check(
        CLI::Range(1, 12));
    sweep_cmd->add_option("trials", sweep.trials, "trials per corner scheme")->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--rank-max-w", sweep.rank_max_w,
                          "largest W in the rank-formula oracle (0 skips it)")
        ->capture_default_str();
    sweep_cmd->add_option("--rank-seeds", sweep.rank_seeds, "seeds per rank-formula tuple")->capture_default_str();
    sweep_cmd->add_option("--seed", sweep.seed, "base seed")->capture_default_str();
    sweep_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    sweep_cmd->add_option("-o,--output", out, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*classify_cmd) return cmd_classify(counts, format, out);
        if (*region_cmd) return cmd_region(counts, format, out, caller_order);
        if (*corner_cmd) return cmd_verify_corner(counts, corner, trials, seed, format, out);
        if (*rank_cmd) return cmd_verify_rank(counts, w, w1, w2, trials, seed, field, format, out);
        if (*miso_cmd) return cmd_miso(k, m, trials, seed, format, out);
        if (*sweep_cmd) return cmd_sweep(sweep, format, out);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
