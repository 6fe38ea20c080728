#include "dofia/config.hpp"

#include <algorithm>
#include <array>

#include "dofia/errors.hpp"

namespace dofia {

AntennaConfig normalize(int m1, int m2, int n1, int n2) {
    if (m1 < 1 || m2 < 1 || n1 < 1 || n2 < 1)
        throw ValidationError("antenna counts must be positive, got (" + std::to_string(m1) + "," +
                              std::to_string(m2) + "," + std::to_string(n1) + "," + std::to_string(n2) + ")");
    if (n1 > n2) return AntennaConfig{m2, m1, n2, n1, true};
    return AntennaConfig{m1, m2, n1, n2, false};
}

AntennaConfig normalize(const AntennaConfig& cfg) {
    AntennaConfig out = normalize(cfg.m1, cfg.m2, cfg.n1, cfg.n2);
    out.swapped = out.swapped != cfg.swapped;
    return out;
}

DerivedParams derived(const AntennaConfig& c) {
    DerivedParams d;
    d.m1_prime = std::min(c.m1, c.n1 + c.n2);
    d.m2_prime = std::min(c.m2, c.n1 + c.n2);
    if (c.n2 != c.m1) d.delta = Rational(c.n1 * (c.n1 - c.m1), c.n2 - c.m1);
    if (c.m2 != c.n1) d.delta_prime = Rational(c.n1 * (c.m2 - c.n2), c.m2 - c.n1);
    d.lambda = c.m1 + c.m2 - c.n1 - c.n2;
    return d;
}

ClassPredicates predicates(const AntennaConfig& c) {
    const int M1 = c.m1, M2 = c.m2, N1 = c.n1, N2 = c.n2;
    const DerivedParams d = derived(c);
    ClassPredicates p{};
    p.c1 = M2 <= N1;
    p.c2 = std::min(M1, M2) > N1 && M2 <= N2;
    p.c3 = N1 < M1 && M1 <= N2 && N2 < M2;
    p.c4 = std::min(M1, M2) > N2 && N2 >= N1;
    p.c5 = M1 <= N1 && N1 < M2 && M2 <= N2;
    p.c6 = M1 <= N1 && N1 <= N2 && N2 < M2;

    // Undefined delta / delta' make every chain containing them false.
    const int rest = N1 + N2 - M1;
    if (d.delta) {
        const Rational D = *d.delta;
        p.s = D < M1 && M1 < N1 && N1 < N2 && N2 < rest && rest < M2;
        p.s1 = p.s && Rational(M2) <= Rational(N1 + N2) - D;
        p.s2 = p.s && !(Rational(M2) <= Rational(N1 + N2) - D);
        p.c61 = M1 <= D && D < N1 && N1 <= N2 && N2 < rest && rest < M2;
    }
    if (d.delta_prime) {
        const Rational Dp = *d.delta_prime;
        p.c62 = M1 <= Dp && Dp < N1 && N1 < N2 && N2 < M2 && M2 <= rest;
        p.c63 = Dp < M1 && M1 < N1 && N1 < N2 && N2 < M2 && M2 <= rest;
    }
    return p;
}

ConfigClass classify(const AntennaConfig& c) {
    const ClassPredicates p = predicates(c);
    if (p.c1) return ConfigClass::C1;
    if (p.c2) return ConfigClass::C2;
    if (p.c3) return ConfigClass::C3;
    if (p.c4) return ConfigClass::C4;
    if (p.c5) return ConfigClass::C5;
    if (p.s1) return ConfigClass::S1;
    if (p.s2) return ConfigClass::S2;
    if (p.c61) return ConfigClass::C61;
    if (p.c62) return ConfigClass::C62;
    if (p.c63) return ConfigClass::C63;
    return ConfigClass::C6B;
}

namespace {
constexpr std::array<std::pair<ConfigClass, std::string_view>, 11> kNames{{
    {ConfigClass::C1, "C1"},
    {ConfigClass::C2, "C2"},
    {ConfigClass::C3, "C3"},
    {ConfigClass::C4, "C4"},
    {ConfigClass::C5, "C5"},
    {ConfigClass::C61, "C61"},
    {ConfigClass::C62, "C62"},
    {ConfigClass::C63, "C63"},
    {ConfigClass::S1, "S1"},
    {ConfigClass::S2, "S2"},
    {ConfigClass::C6B, "C6B"},
}};
}  // namespace

std::string_view to_string(ConfigClass c) {
    for (const auto& [k, v] : kNames)
        if (k == c) return v;
    return "?";
}

std::optional<ConfigClass> class_from_string(std::string_view s) {
    for (const auto& [k, v] : kNames)
        if (v == s) return k;
    return std::nullopt;
}

void validate(const MisoConfig& mc) {
    if (mc.k < 2) throw ValidationError("MISO needs at least 2 users, got K=" + std::to_string(mc.k));
    if (mc.m < mc.k)
        throw ValidationError("MISO scheme needs M >= K antennas per transmitter, got K=" + std::to_string(mc.k) +
                              " M=" + std::to_string(mc.m));
}

std::string to_string(const AntennaConfig& c) {
    return "(" + std::to_string(c.m1) + "," + std::to_string(c.m2) + "," + std::to_string(c.n1) + "," +
           std::to_string(c.n2) + ")";
}

}  // namespace dofia
