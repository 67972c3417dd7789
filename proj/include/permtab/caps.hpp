#pragma once

#include <string_view>

namespace permtab {

// Size guards for the exhaustive enumerators. They exist to refuse runtime
// blowups, not to tune accuracy; raise them via the PERMTAB_ENUM_CAPS
// environment variable ("perm=13,alt=15,tab=9", or a single integer that
// applies to all three).
struct EnumerationCaps {
    int permutations = 12;  // full S_n and derangement streams
    int alternating = 14;   // alternating backtracking streams
    int tableaux = 8;       // tableau streams, keyed by semiperimeter
};

// Defaults merged with the PERMTAB_ENUM_CAPS override; read once per process.
const EnumerationCaps& enumeration_caps();

// Parses the override syntax. Throws ParseError on malformed text.
EnumerationCaps parse_caps(std::string_view text);

}  // namespace permtab
