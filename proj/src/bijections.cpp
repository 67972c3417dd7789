#include "permtab/bijections.hpp"

#include "permtab/errors.hpp"

namespace permtab {
namespace {

std::string alternation_message(const Permutation& p, bool reverse, int pos) {
    const char* rel = ((pos % 2 == 1) != reverse) ? ">" : "<";
    return std::string("not ") + (reverse ? "reverse-alternating" : "alternating") +
           ": violation at position " + std::to_string(pos) + " (need p(" + std::to_string(pos) +
           ") " + rel + " p(" + std::to_string(pos + 1) + "), got " + std::to_string(p(pos)) +
           " and " + std::to_string(p(pos + 1)) + ")";
}

void require_alternation(const Permutation& p, bool reverse) {
    if (auto pos = alternation_violation(p, reverse))
        throw DomainError(alternation_message(p, reverse, *pos));
}

void require_fixed_count(const Permutation& p, int want) {
    const int got = static_cast<int>(fixed_points(p).size());
    if (got != want)
        throw DomainError("expected " + std::to_string(want) + " fixed points for length " +
                          std::to_string(p.size()) + ", found " + std::to_string(got));
}

// Membership in A_m: even length 2m, alternating, exactly m fixed points.
void require_max_fixed_alternating_even(const Permutation& p) {
    if (p.size() % 2 != 0)
        throw DomainError("length must be even, got " + std::to_string(p.size()));
    require_alternation(p, false);
    require_fixed_count(p, p.size() / 2);
}

}  // namespace

Permutation psi_blockwise(const Permutation& p) {
    require_max_fixed_alternating_even(p);
    const int m = p.size() / 2;
    // Block j is {2j-1, 2j}; exactly one of the two is fixed, the other moves.
    std::vector<int> moved(static_cast<size_t>(m) + 1, 0);       // j -> moved point of block j
    std::vector<int> block_of(static_cast<size_t>(2 * m) + 1, 0);  // moved point -> its block
    for (int j = 1; j <= m; ++j) {
        const int lo = 2 * j - 1;
        const int hi = 2 * j;
        const int b = (p(lo) == lo) ? hi : lo;
        moved[static_cast<size_t>(j)] = b;
        block_of[static_cast<size_t>(b)] = j;
    }
    std::vector<int> word(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j)
        word[static_cast<size_t>(j) - 1] = block_of[static_cast<size_t>(p(moved[static_cast<size_t>(j)]))];
    return Permutation(std::move(word));
}

Permutation psi_delete_halve(const Permutation& p) {
    require_max_fixed_alternating_even(p);
    std::vector<int> word;
    word.reserve(static_cast<size_t>(p.size() / 2));
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) != i) word.push_back((p(i) + 1) / 2);
    return Permutation(std::move(word));
}

Permutation psi_inverse(const Permutation& s) {
    for (int j = 1; j <= s.size(); ++j)
        if (s(j) == j)
            throw DomainError("not a derangement: fixed point at position " + std::to_string(j));
    const int m = s.size();
    std::vector<int> fixed(static_cast<size_t>(m) + 1, 0);
    std::vector<int> moved(static_cast<size_t>(m) + 1, 0);
    for (int j = 1; j <= m; ++j) {
        if (s(j) < j) {
            fixed[static_cast<size_t>(j)] = 2 * j - 1;
            moved[static_cast<size_t>(j)] = 2 * j;
        } else {
            fixed[static_cast<size_t>(j)] = 2 * j;
            moved[static_cast<size_t>(j)] = 2 * j - 1;
        }
    }
    std::vector<int> word(static_cast<size_t>(2 * m), 0);
    for (int j = 1; j <= m; ++j) {
        word[static_cast<size_t>(fixed[static_cast<size_t>(j)]) - 1] = fixed[static_cast<size_t>(j)];
        word[static_cast<size_t>(moved[static_cast<size_t>(j)]) - 1] =
            moved[static_cast<size_t>(s(j))];
    }
    return Permutation(std::move(word));
}

Permutation reduce_reverse_alternating_even(const Permutation& p) {
    const int n = p.size();
    if (n < 2 || n % 2 != 0)
        throw DomainError("length must be even and at least 2, got " + std::to_string(n));
    require_alternation(p, true);
    require_fixed_count(p, n / 2 + 1);
    if (p(1) != 1 || p(n) != n)
        throw DomainError(
            "structural violation: a reverse-alternating permutation with maximal fixed points "
            "must fix positions 1 and " + std::to_string(n));
    std::vector<int> word(static_cast<size_t>(n) - 2);
    for (int i = 2; i <= n - 1; ++i) word[static_cast<size_t>(i) - 2] = p(i) - 1;
    return Permutation(std::move(word));
}

Permutation reduce_alternating_odd(const Permutation& p) {
    const int n = p.size();
    if (n % 2 != 1) throw DomainError("length must be odd, got " + std::to_string(n));
    require_alternation(p, false);
    require_fixed_count(p, (n + 1) / 2);
    if (p(n) != n)
        throw DomainError(
            "structural violation: an odd alternating permutation with maximal fixed points "
            "must fix position " + std::to_string(n));
    std::vector<int> word(p.word().begin(), p.word().end() - 1);
    return Permutation(std::move(word));
}

Permutation to_derangement(const Permutation& p, AlternationKind kind) {
    if (p.size() == 0) return Permutation();
    if (kind == AlternationKind::alternating) {
        if (p.size() % 2 == 0) return psi_blockwise(p);
        return psi_blockwise(reduce_alternating_odd(p));
    }
    if (p.size() % 2 == 1) {
        // Check membership before conjugating so diagnostics name the input.
        require_alternation(p, true);
        return psi_blockwise(reduce_alternating_odd(reversal_conjugate(p)));
    }
    return psi_blockwise(reduce_reverse_alternating_even(p));
}

}  // namespace permtab
