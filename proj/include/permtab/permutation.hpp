#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permtab/caps.hpp"

namespace permtab {

// A permutation of [n] in one-line notation. Positions and values are both
// 1-based: p(i) is the value at position i.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);  // DomainError unless word is a rearrangement of 1..n
    static Permutation identity(int n);
    // Skips validation; the caller guarantees word is a permutation of [n].
    static Permutation from_word_unchecked(std::vector<int> word);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int position) const { return word_[static_cast<size_t>(position) - 1]; }
    const std::vector<int>& word() const { return word_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

// Alternating: p(1) > p(2) < p(3) > p(4) < ...
// Reverse alternating: p(1) < p(2) > p(3) < p(4) > ...
// Lengths 0 and 1 satisfy both (vacuous).
bool is_alternating(const Permutation& p);
bool is_reverse_alternating(const Permutation& p);
// First position i where the required inequality between p(i) and p(i+1)
// fails, or nullopt if the pattern holds throughout.
std::optional<int> alternation_violation(const Permutation& p, bool reverse);

std::vector<int> fixed_points(const Permutation& p);       // ascending positions i with p(i) = i
bool is_derangement(const Permutation& p);
std::vector<int> weak_excedance_positions(const Permutation& p);  // ascending i with p(i) >= i

// Conjugation by the reversal j -> n+1-j. An involution; for odd n it swaps
// alternating with reverse alternating and preserves the fixed-point count.
Permutation reversal_conjugate(const Permutation& p);

// Value complement v -> n+1-v. Swaps alternating with reverse alternating.
Permutation complement(const Permutation& p);

// Text form: compact digits for n <= 9 ("52318674"), comma-separated values
// otherwise ("5,2,3,1,8,6,7,4"). The parser accepts either (compact only up
// to n = 9) and the empty string for n = 0.
std::string to_text(const Permutation& p);
Permutation parse_permutation(std::string_view text);

// Deterministic lexicographic enumeration over one-line words (1-based
// values; word[i] is p(i+1)). The visitor returns false to stop early; the
// scan returns false iff it was stopped. Scans exceeding the relevant cap
// throw CapError.
using WordVisitor = std::function<bool(std::span<const int>)>;
bool scan_permutations(int n, const WordVisitor& visit,
                       const EnumerationCaps& caps = enumeration_caps());
bool scan_derangements(int n, const WordVisitor& visit,
                       const EnumerationCaps& caps = enumeration_caps());
bool scan_alternating(int n, bool reverse, const WordVisitor& visit,
                      const EnumerationCaps& caps = enumeration_caps());

std::vector<Permutation> all_permutations(int n, const EnumerationCaps& caps = enumeration_caps());
std::vector<Permutation> all_derangements(int n, const EnumerationCaps& caps = enumeration_caps());
std::vector<Permutation> all_alternating(int n, bool reverse,
                                         const EnumerationCaps& caps = enumeration_caps());

}  // namespace permtab
