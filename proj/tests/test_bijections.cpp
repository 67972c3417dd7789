#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "oracle.hpp"
#include "permtab/bijections.hpp"
#include "permtab/errors.hpp"
#include "permtab/permutation.hpp"

using namespace permtab;

namespace {

Permutation perm(const std::string& text) { return parse_permutation(text); }

// Undo reduce_alternating_odd: put the dropped maximal fixed point back.
Permutation lift_odd(const Permutation& q) {
    std::vector<int> word = q.word();
    word.push_back(q.size() + 1);
    return Permutation(std::move(word));
}

// Undo reduce_reverse_alternating_even: shift up and pin 1 and 2m.
Permutation lift_even(const Permutation& q) {
    std::vector<int> word{1};
    for (int v : q.word()) word.push_back(v + 1);
    word.push_back(q.size() + 2);
    return Permutation(std::move(word));
}

}  // namespace

TEST_CASE("worked example, both formulations") {
    CHECK(psi_blockwise(perm("52318674")) == perm("3142"));
    CHECK(psi_delete_halve(perm("52318674")) == perm("3142"));
    // Deleting the fixed values leaves 5,1,8,4; halving up gives 3,1,4,2.
    std::vector<int> kept;
    const Permutation p = perm("52318674");
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) != i) kept.push_back(p(i));
    CHECK(kept == std::vector<int>{5, 1, 8, 4});
}

TEST_CASE("small and empty cases") {
    CHECK(psi_blockwise(Permutation()) == Permutation());
    CHECK(psi_delete_halve(Permutation()) == Permutation());
    // A_2 is exactly {4231}, and both formulations send it to 21.
    CHECK(oracle::alternating_with_fixed(4, 2) == std::vector<oracle::Word>{{4, 2, 3, 1}});
    CHECK(psi_blockwise(perm("4231")) == perm("21"));
    CHECK(psi_delete_halve(perm("4231")) == perm("21"));
}

TEST_CASE("psi rejects bad input with distinct diagnostics") {
    CHECK_THROWS_WITH_AS(psi_blockwise(perm("123")), doctest::Contains("even"), DomainError);
    CHECK_THROWS_WITH_AS(psi_blockwise(perm("1234")),
                         doctest::Contains("not alternating: violation at position 1"),
                         DomainError);
    CHECK_THROWS_WITH_AS(psi_blockwise(perm("2143")),
                         doctest::Contains("expected 2 fixed points"), DomainError);
    CHECK_THROWS_AS(psi_delete_halve(perm("2143")), DomainError);
}

TEST_CASE("psi inverse") {
    CHECK(psi_inverse(perm("3142")) == perm("52318674"));
    CHECK(psi_inverse(Permutation()) == Permutation());
    CHECK(psi_inverse(perm("21")) == perm("4231"));
    CHECK_THROWS_WITH_AS(psi_inverse(perm("132")),
                         doctest::Contains("fixed point at position 1"), DomainError);
}

TEST_CASE("psi roundtrips and image, exhaustively to m = 4") {
    for (int m = 0; m <= 4; ++m) {
        std::vector<Permutation> images;
        for (const auto& word : oracle::alternating_with_fixed(2 * m, m)) {
            const Permutation p(word);
            const Permutation sigma = psi_blockwise(p);
            CHECK(is_derangement(sigma));
            CHECK(sigma.size() == m);
            CHECK(sigma == psi_delete_halve(p));
            CHECK(psi_inverse(sigma) == p);
            images.push_back(sigma);
        }
        std::sort(images.begin(), images.end());
        CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
        const auto derangements = all_derangements(m);
        CHECK(images == derangements);
        for (const Permutation& s : derangements) CHECK(psi_blockwise(psi_inverse(s)) == s);
    }
}

TEST_CASE("block structure determined by the image") {
    for (int m = 0; m <= 4; ++m)
        for (const auto& word : oracle::alternating_with_fixed(2 * m, m)) {
            const Permutation p(word);
            const Permutation sigma = psi_blockwise(p);
            for (int j = 1; j <= m; ++j) {
                if (sigma(j) > j) CHECK(p(2 * j) == 2 * j);
                if (sigma(j) < j) CHECK(p(2 * j - 1) == 2 * j - 1);
            }
        }
}

TEST_CASE("even reverse-alternating reduction") {
    // 1324 is reverse alternating but has only 2 fixed points, not 3.
    CHECK(oracle::fixed_count({1, 3, 2, 4}) == 2);
    CHECK_THROWS_WITH_AS(reduce_reverse_alternating_even(perm("1324")),
                         doctest::Contains("expected 3 fixed points"), DomainError);
    // m = 1: the only valid input is 12, which reduces to the empty permutation.
    CHECK(reduce_reverse_alternating_even(perm("12")) == Permutation());
    // m = 3: exactly one reverse-alternating member of S_6 has 4 fixed points.
    const auto members = oracle::alternating_with_fixed(6, 4, /*reverse=*/true);
    REQUIRE(members.size() == 1);
    CHECK(members.front() == oracle::Word{1, 5, 3, 4, 2, 6});
    CHECK(reduce_reverse_alternating_even(Permutation(members.front())) == perm("4231"));
    // The reduction is undone by pinning 1 and 2m back on.
    for (const auto& word : members) {
        const Permutation p(word);
        CHECK(lift_even(reduce_reverse_alternating_even(p)) == p);
    }
}

TEST_CASE("odd alternating restriction") {
    CHECK_THROWS_WITH_AS(reduce_alternating_odd(perm("213")),
                         doctest::Contains("expected 2 fixed points"), DomainError);
    // m = 2: no alternating member of S_3 has 2 fixed points.
    CHECK(oracle::alternating_with_fixed(3, 2).empty());
    // m = 3: exactly one alternating member of S_5 has 3 fixed points.
    const auto members = oracle::alternating_with_fixed(5, 3);
    REQUIRE(members.size() == 1);
    CHECK(members.front() == oracle::Word{4, 2, 3, 1, 5});
    CHECK(reduce_alternating_odd(Permutation(members.front())) == perm("4231"));
    for (const auto& word : members) {
        const Permutation p(word);
        CHECK(lift_odd(reduce_alternating_odd(p)) == p);
    }
    // m = 1: the singleton permutation restricts to the empty one.
    CHECK(reduce_alternating_odd(perm("1")) == Permutation());
}

TEST_CASE("to_derangement dispatch") {
    CHECK(to_derangement(perm("52318674"), AlternationKind::alternating) == perm("3142"));
    CHECK(to_derangement(perm("4231"), AlternationKind::alternating) == perm("21"));
    CHECK(to_derangement(perm("12"), AlternationKind::reverse_alternating) == Permutation());
    CHECK(to_derangement(Permutation(), AlternationKind::alternating) == Permutation());
    CHECK(to_derangement(perm("42315"), AlternationKind::alternating) == perm("21"));
    // Odd reverse-alternating member: conjugate of 42315 by the reversal.
    const Permutation odd_rev = reversal_conjugate(perm("42315"));
    CHECK(is_reverse_alternating(odd_rev));
    CHECK(to_derangement(odd_rev, AlternationKind::reverse_alternating) == perm("21"));
    CHECK_THROWS_AS(to_derangement(perm("21"), AlternationKind::alternating), DomainError);
    CHECK_THROWS_WITH_AS(to_derangement(perm("12345"), AlternationKind::alternating),
                         doctest::Contains("position 1"), DomainError);
    // The reverse-alternating path names the input's own failure.
    CHECK_THROWS_WITH_AS(to_derangement(perm("213"), AlternationKind::reverse_alternating),
                         doctest::Contains("not reverse-alternating"), DomainError);
}

TEST_CASE("to_derangement covers each class onto the target derangements") {
    struct ClassCase {
        int n;
        bool reverse;
        int fixed;
        int target;
    };
    const ClassCase cases[] = {
        {4, false, 2, 2}, {6, false, 3, 3}, {8, false, 4, 4},
        {5, false, 3, 2}, {7, false, 4, 3},
        {6, true, 4, 2},  {8, true, 5, 3},
        {5, true, 3, 2},  {7, true, 4, 3},
    };
    for (const ClassCase& c : cases) {
        std::vector<Permutation> outputs;
        for (const auto& word : oracle::alternating_with_fixed(c.n, c.fixed, c.reverse))
            outputs.push_back(to_derangement(Permutation(word),
                                             c.reverse ? AlternationKind::reverse_alternating
                                                       : AlternationKind::alternating));
        std::sort(outputs.begin(), outputs.end());
        CHECK(std::adjacent_find(outputs.begin(), outputs.end()) == outputs.end());
        CHECK(outputs == all_derangements(c.target));
    }
}
