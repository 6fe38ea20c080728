#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dofia/rational.hpp"

namespace dofia {

// Antenna counts of the two-user channel. After normalize(), n2 >= n1 always;
// `swapped` records that the caller's users 1 and 2 were exchanged.
struct AntennaConfig {
    int m1 = 1, m2 = 1, n1 = 1, n2 = 1;
    bool swapped = false;

    friend bool operator==(const AntennaConfig&, const AntennaConfig&) = default;
};

AntennaConfig normalize(int m1, int m2, int n1, int n2);
AntennaConfig normalize(const AntennaConfig& cfg);

struct DerivedParams {
    int m1_prime = 0;
    int m2_prime = 0;
    std::optional<Rational> delta;        // N1(N1-M1)/(N2-M1), absent when N2 == M1
    std::optional<Rational> delta_prime;  // N1(M2-N2)/(M2-N1), absent when M2 == N1
    int lambda = 0;                       // M1+M2-N1-N2
};

DerivedParams derived(const AntennaConfig& cfg);

// C6B holds the C6 members that none of the S/C61/C62/C63 predicates accept
// (the N1 == N2 and M1 == N1 edges).
enum class ConfigClass { C1, C2, C3, C4, C5, C61, C62, C63, S1, S2, C6B };

std::string_view to_string(ConfigClass c);
std::optional<ConfigClass> class_from_string(std::string_view s);

// Raw predicate values, evaluated independently of each other.
struct ClassPredicates {
    bool c1, c2, c3, c4, c5, c6;
    bool s, s1, s2, c61, c62, c63;
};

ClassPredicates predicates(const AntennaConfig& cfg);
ConfigClass classify(const AntennaConfig& cfg);

inline bool in_c6(ConfigClass c) {
    return c == ConfigClass::C61 || c == ConfigClass::C62 || c == ConfigClass::C63 || c == ConfigClass::S1 ||
           c == ConfigClass::S2 || c == ConfigClass::C6B;
}

struct MisoConfig {
    int k = 2;  // users
    int m = 2;  // antennas per transmitter
};

// Throws ValidationError unless k >= 2 and m >= k.
void validate(const MisoConfig& mc);

std::string to_string(const AntennaConfig& cfg);

}  // namespace dofia
