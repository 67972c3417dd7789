#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permtab/caps.hpp"

namespace permtab {

// Number of derangements of [n] via D_0 = 1, D_1 = 0,
// D_n = (n-1)(D_{n-1} + D_{n-2}). https://oeis.org/A000166
// Guarded at n <= 20 so the result always fits in 64 bits.
std::uint64_t derangement_count(int n);

// Number of alternating permutations of [n] (zigzag numbers,
// https://oeis.org/A000111), via the boustrophedon triangle. n <= 20.
std::uint64_t alternating_count(int n);

// Largest k such that some (reverse-)alternating permutation of [n] has k
// fixed points: ceil(n/2) for alternating (n >= 4), ceil((n+1)/2) for
// reverse alternating (n >= 5). DomainError below those lengths.
int max_fixed_points(int n, bool reverse);

// Fixed-point distribution over the alternating and reverse-alternating
// permutations of [n]: d[k] and d_star[k] count those with exactly k fixed
// points. Row sums equal alternating_count(n).
struct CountsTable {
    int n = 0;
    std::vector<std::uint64_t> d;       // size n+1
    std::vector<std::uint64_t> d_star;  // size n+1
    std::uint64_t derangements = 0;     // D_n
};

// Built by streaming the alternating enumerators (never all of S_n).
CountsTable counts_table(int n, const EnumerationCaps& caps = enumeration_caps());

std::string to_text(const CountsTable& table);
// One line per k: "n k d d_star".
std::string to_machine(const CountsTable& table);

}  // namespace permtab
