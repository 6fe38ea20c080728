#include "dofia/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace dofia {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const DofPoint& p) { return Json::array({to_json(p.d1), to_json(p.d2)}); }

Json to_json(const Polytope2D& p) {
    Json cs = Json::array();
    for (const auto& h : p.constraints()) cs.push_back(Json::array({to_json(h.a), to_json(h.b), to_json(h.c)}));
    Json vs = Json::array();
    for (const auto& v : p.vertices()) vs.push_back(to_json(v));
    return Json{{"constraints", cs}, {"vertices", vs}};
}

Json to_json(const AntennaConfig& c) {
    return Json{{"m1", c.m1}, {"m2", c.m2}, {"n1", c.n1}, {"n2", c.n2}, {"swapped", c.swapped}};
}

Json classification_json(const AntennaConfig& c) {
    const DerivedParams d = derived(c);
    Json j;
    j["config"] = to_json(c);
    j["class"] = std::string(to_string(classify(c)));
    j["m1_prime"] = d.m1_prime;
    j["m2_prime"] = d.m2_prime;
    j["delta"] = d.delta ? to_json(*d.delta) : Json(nullptr);
    j["delta_prime"] = d.delta_prime ? to_json(*d.delta_prime) : Json(nullptr);
    j["lambda"] = d.lambda;
    return j;
}

Json to_json(const RegionBundle& b) {
    Json j;
    j["config"] = to_json(b.cfg);
    j["class"] = std::string(to_string(b.cls));
    j["tight"] = b.tight;
    j["tightness_case"] = b.tightness.case_label ? Json(std::string(1, *b.tightness.case_label)) : Json(nullptr);
    j["tightness_finding"] = b.tightness.finding;
    Json corners = Json::array();
    for (const auto& c : b.corner_points) corners.push_back(Json{{"label", c.label}, {"point", to_json(c.point)}});
    j["corner_points"] = corners;
    j["achievable"] = to_json(b.achievable);
    j["perfect_csit"] = to_json(b.perfect_csit);
    j["bc_delayed"] = to_json(b.bc_delayed);
    j["no_csit"] = to_json(b.no_csit);
    j["outer"] = to_json(b.outer);
    return j;
}

Json to_json(const SchemeSpec& s) {
    Json j;
    j["label"] = s.label;
    j["variant"] = std::string(to_string(s.variant));
    j["w"] = s.w;
    j["w1"] = s.w1;
    j["w2"] = s.w2;
    j["tx1_symbols_per_phase1_slot"] = s.tx1_symbols_per_phase1_slot;
    j["tx2_symbols_per_phase1_slot"] = s.tx2_symbols_per_phase1_slot;
    switch (s.variant) {
        case SchemeVariant::S1_T5:
            j["nu"] = s.nu;
            j["nu1"] = s.nu1;
            j["nu2"] = s.nu2;
            break;
        case SchemeVariant::S1_T8:
            j["mu1"] = s.mu1;
            j["mu2"] = s.mu2;
            break;
        case SchemeVariant::S2_T9:
            j["eta1"] = s.eta1;
            j["eta2"] = s.eta2;
            j["omega"] = s.omega;
            break;
        case SchemeVariant::S_T7_Reduction: j["effective_m2"] = s.effective_m2; break;
        default: break;
    }
    return j;
}

Json to_json(const RankTerms& t) {
    return Json{{"r1", t.r1},           {"r2", t.r2},       {"r3", t.r3},
                {"i_max", t.i_max},     {"i_min", t.i_min}, {"unknowns", t.unknowns},
                {"predicted_rank", t.predicted_rank}};
}

Json to_json(const CountConstraints& c) {
    return Json{{"lhs1", c.lhs1}, {"rhs1", c.rhs1}, {"lhs2", c.lhs2}, {"rhs2", c.rhs2}, {"holds", c.holds()}};
}

namespace {
Json dof_json(const std::optional<std::vector<Rational>>& dof) {
    if (!dof) return nullptr;
    Json a = Json::array();
    for (const auto& r : *dof) a.push_back(to_json(r));
    return a;
}
}  // namespace

Json to_json(const TrialReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["scheme"] = to_json(r.spec);
    Json rx = Json::array();
    for (const auto& rr : r.receivers)
        rx.push_back(Json{{"equations", rr.equations},
                          {"unknowns", rr.unknowns},
                          {"achieved_rank", rr.achieved_rank},
                          {"predicted_rank", rr.predicted_rank},
                          {"decoded", rr.decoded}});
    j["receivers"] = rx;
    j["dof"] = dof_json(r.dof);
    if (r.staged_matches_joint) j["staged_matches_joint"] = *r.staged_matches_joint;
    return j;
}

Json to_json(const Aggregate& a) {
    Json j;
    j["class"] = a.class_name;
    j["corner"] = a.corner;
    j["scheme"] = to_json(a.spec);
    j["trials"] = a.trials;
    j["base_seed"] = a.base_seed;
    Json rx = Json::array();
    for (std::size_t r = 0; r < a.decoded.size(); ++r)
        rx.push_back(Json{{"receiver", r + 1},
                          {"decoded", a.decoded[r]},
                          {"decode_rate", to_json(Rational(a.decoded[r], a.trials))},
                          {"rank_agreement", a.rank_agreement[r]},
                          {"min_rank", a.min_rank[r]},
                          {"max_rank", a.max_rank[r]}});
    j["receivers"] = rx;
    j["all_decoded"] = a.all_decoded();
    j["failing_seeds"] = a.failing_seeds;
    j["rank_mismatch_seeds"] = a.mismatch_seeds;
    j["staged_mismatches"] = a.staged_mismatches;
    j["dof"] = dof_json(a.dof);
    if (a.dof) {
        Rational sum = 0;
        for (const auto& r : *a.dof) sum += r;
        j["sum_dof"] = to_json(sum);
    }
    return j;
}

std::string trial_csv_header() {
    return "seed,class,corner,W,W1,W2,rank1,predicted1,decoded1,rank2,predicted2,decoded2,d1,d2";
}

std::string to_csv_row(const TrialReport& r, const std::string& class_name) {
    std::ostringstream os;
    os << r.seed << ',' << class_name << ',' << r.spec.label << ',' << r.spec.w << ',' << r.spec.w1 << ','
       << r.spec.w2;
    for (std::size_t i = 0; i < 2; ++i) {
        if (i < r.receivers.size()) {
            const auto& rr = r.receivers[i];
            os << ',' << rr.achieved_rank << ',' << rr.predicted_rank << ',' << (rr.decoded ? 1 : 0);
        } else {
            os << ",,,";
        }
    }
    if (r.dof && r.dof->size() >= 2)
        os << ',' << (*r.dof)[0].str() << ',' << (*r.dof)[1].str();
    else
        os << ",,";
    return os.str();
}

std::string to_csv(const Aggregate& a) {
    std::string out = trial_csv_header() + "\n";
    for (const auto& r : a.reports) out += to_csv_row(r, a.class_name) + "\n";
    return out;
}

namespace {

constexpr double kCanvas = 480, kMargin = 56;

struct Frame {
    double scale;
    [[nodiscard]] double x(const Rational& d1) const { return kMargin + d1.to_double() * scale; }
    [[nodiscard]] double y(const Rational& d2) const { return kCanvas - kMargin - d2.to_double() * scale; }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string polygon(const Frame& f, const Polytope2D& p, const char* fill, const char* stroke, const char* dash) {
    std::string pts;
    for (const auto& v : p.vertices()) pts += num(f.x(v.d1)) + "," + num(f.y(v.d2)) + " ";
    std::string s = "<polygon points=\"" + pts + "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"2\"";
    if (dash) s += std::string(" stroke-dasharray=\"") + dash + "\"";
    return s + "/>\n";
}

}  // namespace

std::string render_svg(const RegionBundle& b) {
    const auto& c = b.cfg;
    const int extent = std::max({c.n1 + c.n2, c.m1, c.m2});
    const Frame f{(kCanvas - 2 * kMargin) / extent};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas + 170 << "\" height=\"" << kCanvas
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kMargin << "\" y=\"24\" font-size=\"14\">(M1,M2,N1,N2) = (" << c.m1 << "," << c.m2 << ","
       << c.n1 << "," << c.n2 << ")  class " << to_string(b.cls) << (b.tight ? "  tight" : "  not tight") << "</text>\n";
    // axes with integer ticks
    os << "<line x1=\"" << num(f.x(0)) << "\" y1=\"" << num(f.y(0)) << "\" x2=\"" << num(f.x(extent) + 10) << "\" y2=\""
       << num(f.y(0)) << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << num(f.x(0)) << "\" y1=\"" << num(f.y(0)) << "\" x2=\"" << num(f.x(0)) << "\" y2=\""
       << num(f.y(extent) - 10) << "\" stroke=\"black\"/>\n";
    for (int k = 1; k <= extent; ++k) {
        os << "<text x=\"" << num(f.x(k) - 3) << "\" y=\"" << num(f.y(0) + 16) << "\">" << k << "</text>\n";
        os << "<text x=\"" << num(f.x(0) - 16) << "\" y=\"" << num(f.y(k) + 4) << "\">" << k << "</text>\n";
    }
    os << "<text x=\"" << num(f.x(extent) + 14) << "\" y=\"" << num(f.y(0) + 4) << "\">d1</text>\n";
    os << "<text x=\"" << num(f.x(0) - 6) << "\" y=\"" << num(f.y(extent) - 16) << "\">d2</text>\n";

    os << polygon(f, b.outer, "#fde0dd", "#c51b8a", "6,4");
    os << polygon(f, b.achievable, "#c6dbef", "#08519c", nullptr);
    os << polygon(f, b.no_csit, "#d9f0a3", "#31a354", "2,3");
    for (const auto& cp : b.corner_points) {
        os << "<circle cx=\"" << num(f.x(cp.point.d1)) << "\" cy=\"" << num(f.y(cp.point.d2))
           << "\" r=\"3\" fill=\"#08519c\"/>\n";
        os << "<text x=\"" << num(f.x(cp.point.d1) + 5) << "\" y=\"" << num(f.y(cp.point.d2) - 5) << "\">" << cp.label
           << " (" << cp.point.d1.str() << ", " << cp.point.d2.str() << ")</text>\n";
    }
    const double lx = kCanvas + 10;
    const char* names[] = {"outer bound", "delayed local CSIT", "no CSIT"};
    const char* fills[] = {"#fde0dd", "#c6dbef", "#d9f0a3"};
    for (int k = 0; k < 3; ++k) {
        os << "<rect x=\"" << lx << "\" y=\"" << 60 + 22 * k << "\" width=\"14\" height=\"14\" fill=\"" << fills[k]
           << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << lx + 20 << "\" y=\"" << 72 + 22 * k << "\">" << names[k] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace dofia
