#include "permtab/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "permtab/errors.hpp"

namespace permtab {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const int v = word_[static_cast<size_t>(i) - 1];
        if (v < 1 || v > n)
            throw DomainError("not a permutation: value " + std::to_string(v) + " at position " +
                              std::to_string(i) + " is out of range for length " + std::to_string(n));
        if (seen[static_cast<size_t>(v)])
            throw DomainError("not a permutation: value " + std::to_string(v) +
                              " appears more than once");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    return from_word_unchecked(std::move(word));
}

Permutation Permutation::from_word_unchecked(std::vector<int> word) {
    Permutation p;
    p.word_ = std::move(word);
    return p;
}

namespace {

// Down-up when reverse is false. Returns the first bad position.
std::optional<int> violation_in_word(std::span<const int> word, bool reverse) {
    const int n = static_cast<int>(word.size());
    for (int i = 1; i < n; ++i) {
        const bool want_descent = (i % 2 == 1) != reverse;
        const bool is_descent = word[static_cast<size_t>(i) - 1] > word[static_cast<size_t>(i)];
        if (want_descent != is_descent) return i;
    }
    return std::nullopt;
}

}  // namespace

std::optional<int> alternation_violation(const Permutation& p, bool reverse) {
    return violation_in_word(p.word(), reverse);
}

bool is_alternating(const Permutation& p) { return !alternation_violation(p, false); }

bool is_reverse_alternating(const Permutation& p) { return !alternation_violation(p, true); }

std::vector<int> fixed_points(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) == i) out.push_back(i);
    return out;
}

bool is_derangement(const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) == i) return false;
    return true;
}

std::vector<int> weak_excedance_positions(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) >= i) out.push_back(i);
    return out;
}

Permutation reversal_conjugate(const Permutation& p) {
    const int n = p.size();
    std::vector<int> word(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) word[static_cast<size_t>(i) - 1] = n + 1 - p(n + 1 - i);
    return Permutation::from_word_unchecked(std::move(word));
}

Permutation complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> word(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) word[static_cast<size_t>(i) - 1] = n + 1 - p(i);
    return Permutation::from_word_unchecked(std::move(word));
}

std::string to_text(const Permutation& p) {
    std::string out;
    if (p.size() <= 9) {
        for (int v : p.word()) out += static_cast<char>('0' + v);
    } else {
        for (int i = 0; i < p.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(p.word()[static_cast<size_t>(i)]);
        }
    }
    return out;
}

Permutation parse_permutation(std::string_view text) {
    std::vector<int> word;
    if (text.find(',') != std::string_view::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            std::string_view item = text.substr(pos, comma - pos);
            if (item.empty()) throw ParseError("permutation: empty value in comma-separated list");
            int value = 0;
            for (char ch : item) {
                if (ch < '0' || ch > '9')
                    throw ParseError(std::string("permutation: invalid character '") + ch + "'");
                value = value * 10 + (ch - '0');
                if (value > 1000000) throw ParseError("permutation: value out of range");
            }
            word.push_back(value);
            if (comma == text.size()) break;
            pos = comma + 1;
        }
    } else {
        if (text.size() > 9)
            throw ParseError(
                "permutation: compact digit form is only valid up to length 9; "
                "use comma-separated values");
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw ParseError(std::string("permutation: invalid character '") + ch +
                                 "' in compact form");
            word.push_back(ch - '0');
        }
    }
    try {
        return Permutation(std::move(word));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

namespace {

void require_cap(int n, int cap, const char* what) {
    if (n < 0) throw DomainError(std::string(what) + ": negative length");
    if (n > cap)
        throw CapError(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " +
                       std::to_string(cap) + " (set PERMTAB_ENUM_CAPS to raise)");
}

// Backtracking over positions; values are tried in increasing order, so the
// stream is lexicographic. `admissible(i, v, prev)` gates value v at 1-based
// position i given the previous entry.
template <typename Admissible>
bool scan_backtracking(int n, const WordVisitor& visit, Admissible admissible) {
    std::vector<int> word(static_cast<size_t>(n), 0);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    if (n == 0) return visit(std::span<const int>(word.data(), 0));
    // next_try[d] is the next candidate value at depth d when control returns
    // to it; an explicit stack instead of recursion.
    std::vector<int> next_try(static_cast<size_t>(n) + 1, 1);
    int depth = 0;  // positions filled
    for (;;) {
        if (depth == n) {
            if (!visit(std::span<const int>(word.data(), word.size()))) return false;
            --depth;
            used[static_cast<size_t>(word[static_cast<size_t>(depth)])] = 0;
        }
        const int pos = depth + 1;
        const int prev = depth > 0 ? word[static_cast<size_t>(depth) - 1] : 0;
        int v = next_try[static_cast<size_t>(depth)];
        while (v <= n && (used[static_cast<size_t>(v)] || !admissible(pos, v, prev))) ++v;
        if (v > n) {
            if (depth == 0) return true;
            --depth;
            used[static_cast<size_t>(word[static_cast<size_t>(depth)])] = 0;
        } else {
            word[static_cast<size_t>(depth)] = v;
            used[static_cast<size_t>(v)] = 1;
            next_try[static_cast<size_t>(depth)] = v + 1;  // resume point after backtrack
            ++depth;
            next_try[static_cast<size_t>(depth)] = 1;
        }
    }
}

}  // namespace

bool scan_permutations(int n, const WordVisitor& visit, const EnumerationCaps& caps) {
    require_cap(n, caps.permutations, "permutation enumeration");
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        if (!visit(std::span<const int>(word.data(), word.size()))) return false;
    } while (std::next_permutation(word.begin(), word.end()));
    return true;
}

bool scan_derangements(int n, const WordVisitor& visit, const EnumerationCaps& caps) {
    require_cap(n, caps.permutations, "derangement enumeration");
    return scan_backtracking(n, visit, [](int pos, int v, int) { return v != pos; });
}

bool scan_alternating(int n, bool reverse, const WordVisitor& visit, const EnumerationCaps& caps) {
    require_cap(n, caps.alternating, "alternating enumeration");
    return scan_backtracking(n, visit, [reverse](int pos, int v, int prev) {
        if (pos == 1) return true;
        const bool want_descent = (pos % 2 == 0) != reverse;  // inequality between pos-1 and pos
        return want_descent ? v < prev : v > prev;
    });
}

namespace {

std::vector<Permutation> collect(int n, bool (*scan)(int, const WordVisitor&, const EnumerationCaps&),
                                 const EnumerationCaps& caps) {
    std::vector<Permutation> out;
    scan(n, [&out](std::span<const int> word) {
        out.push_back(Permutation::from_word_unchecked(std::vector<int>(word.begin(), word.end())));
        return true;
    }, caps);
    return out;
}

}  // namespace

std::vector<Permutation> all_permutations(int n, const EnumerationCaps& caps) {
    return collect(n, &scan_permutations, caps);
}

std::vector<Permutation> all_derangements(int n, const EnumerationCaps& caps) {
    return collect(n, &scan_derangements, caps);
}

std::vector<Permutation> all_alternating(int n, bool reverse, const EnumerationCaps& caps) {
    std::vector<Permutation> out;
    scan_alternating(n, reverse, [&out](std::span<const int> word) {
        out.push_back(Permutation::from_word_unchecked(std::vector<int>(word.begin(), word.end())));
        return true;
    }, caps);
    return out;
}

}  // namespace permtab
