#include <doctest.h>

#include "dofia/report.hpp"

using namespace dofia;

TEST_CASE("rationals serialize as num/den strings") {
    CHECK(to_json(Rational(2, 3)) == "2/3");
    CHECK(to_json(Rational(4)) == "4/1");
    CHECK(to_json(DofPoint{Rational(9, 5), Rational(11, 5)}).dump() == R"(["9/5","11/5"])");
}

TEST_CASE("polytope JSON") {
    const RegionBundle b = region_bundle(normalize(2, 2, 1, 1));
    const Json p = to_json(b.achievable);
    CHECK(p["vertices"].size() == 4);
    CHECK(p["vertices"][2] == Json::array({"2/3", "2/3"}));
    for (const auto& h : p["constraints"]) CHECK(h.size() == 3);
    const Json j = to_json(b);
    CHECK(j["tight"] == true);
    CHECK(j["tightness_case"] == "c");
    CHECK(j["class"] == "C4");
    for (const char* k : {"achievable", "perfect_csit", "bc_delayed", "no_csit", "outer"}) CHECK(j.contains(k));
    // No floats anywhere in a region document.
    const std::string text = j.dump();
    CHECK(text.find('.') == std::string::npos);
}

TEST_CASE("classification JSON") {
    const Json j = classification_json(normalize(3, 5, 2, 3));
    CHECK(j["delta"].is_null());
    CHECK(j["lambda"] == 3);
    CHECK(j["class"] == "C3");
}

TEST_CASE("identical inputs give identical output") {
    const AntennaConfig c = normalize(3, 5, 2, 3);
    const Aggregate a = monte_carlo(c, "Q3", 5, 1), b = monte_carlo(c, "Q3", 5, 1);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(to_csv(a) == to_csv(b));
    const Json j = to_json(a);
    CHECK(j["receivers"][0]["decode_rate"] == "1/1");
    CHECK(j["dof"] == Json::array({"4/3", "5/3"}));
}

TEST_CASE("CSV trial log") {
    const AntennaConfig c = normalize(2, 2, 1, 1);
    const Aggregate a = monte_carlo(c, "symmetric", 3, 10);
    const std::string csv = to_csv(a);
    CHECK(csv.rfind(trial_csv_header() + "\n", 0) == 0);
    CHECK(csv.find("10,C4,symmetric,3,1,1,3,3,1,3,3,1,2/3,2/3\n") != std::string::npos);
    int lines = 0;
    for (char ch : csv) lines += ch == '\n';
    CHECK(lines == 4);
}

TEST_CASE("SVG rendering") {
    const std::string svg = render_svg(region_bundle(normalize(2, 6, 3, 4)));
    CHECK(svg.rfind("<svg", 0) == 0);
    int polys = 0;
    for (std::size_t at = svg.find("<polygon"); at != std::string::npos; at = svg.find("<polygon", at + 1)) ++polys;
    CHECK(polys == 3);
    CHECK(svg.find("T9 (9/5, 11/5)") != std::string::npos);
    CHECK(svg.find("no CSIT") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}
