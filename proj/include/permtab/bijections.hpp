#pragma once

#include "permtab/permutation.hpp"

namespace permtab {

// Maps between alternating permutations with the maximal number of fixed
// points and derangements.
//
// For even length 2m the domain is A_m: alternating permutations of [2m]
// with exactly m fixed points. Each block {2j-1, 2j} then contains exactly
// one fixed position and one moved position, and following where the moved
// positions go defines a derangement of [m].

// Blockwise form: sigma(j) = k where p sends the moved point of block j to
// the moved point of block k.
Permutation psi_blockwise(const Permutation& p);

// List form: delete the fixed values from the one-line word, then replace
// each remaining value v by ceil(v/2). Agrees with psi_blockwise on every
// valid input; the two are implemented independently on purpose.
Permutation psi_delete_halve(const Permutation& p);

// Explicit inverse: for a derangement s of [m], block j fixes 2j-1 and moves
// 2j when s(j) > j, and fixes 2j and moves 2j-1 when s(j) < j. Output is
// alternating on [2m] with exactly m fixed points.
Permutation psi_inverse(const Permutation& s);

// A reverse-alternating permutation of [2m] with m+1 fixed points must fix 1
// and 2m; dropping those and shifting values down by one leaves an
// alternating permutation of [2m-2] with m-1 fixed points.
Permutation reduce_reverse_alternating_even(const Permutation& p);

// An alternating permutation of odd length 2m-1 with m fixed points must fix
// 2m-1; restricting to the first 2m-2 positions leaves an alternating
// permutation of [2m-2] with m-1 fixed points.
Permutation reduce_alternating_odd(const Permutation& p);

enum class AlternationKind { alternating, reverse_alternating };

// Dispatches a maximal-fixed-point member of any of the four classes
// (alternating/reverse-alternating, even/odd length) through the reductions
// above down to psi_blockwise. Returns a derangement of [floor(n/2)] for the
// alternating classes and of [floor((n-1)/2)] for the reverse ones.
Permutation to_derangement(const Permutation& p, AlternationKind kind);

}  // namespace permtab
