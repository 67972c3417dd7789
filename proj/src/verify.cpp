#include "permtab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "permtab/bijections.hpp"
#include "permtab/counting.hpp"
#include "permtab/permutation.hpp"
#include "permtab/tableau.hpp"

namespace permtab {

bool VerificationReport::all_passed() const {
    for (const CheckResult& check : checks)
        if (!check.passed) return false;
    return true;
}

namespace {

using CheckBody = std::function<std::optional<std::string>()>;

void run_check(VerificationReport& report, std::string name, std::string range,
               const CheckBody& body) {
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::string> witness = body();
    const auto stop = std::chrono::steady_clock::now();
    CheckResult result;
    result.name = std::move(name);
    result.range = std::move(range);
    result.passed = !witness.has_value();
    result.witness = witness.value_or("");
    result.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    report.checks.push_back(std::move(result));
}

std::string range_to(const char* var, int lo, int hi) {
    return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

std::string escape_newlines(const std::string& text) {
    std::string out;
    for (char ch : text) {
        if (ch == '\n')
            out += "\\n";
        else
            out += ch;
    }
    return out;
}

int fixed_count(std::span<const int> word) {
    int count = 0;
    for (size_t i = 0; i < word.size(); ++i)
        if (word[i] == static_cast<int>(i) + 1) ++count;
    return count;
}

std::uint64_t factorial(int n) {
    std::uint64_t out = 1;
    for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
    return out;
}

}  // namespace

VerificationReport verify_counts(int n_max) {
    VerificationReport report;
    std::map<int, CountsTable> tables;
    const auto table = [&tables](int n) -> const CountsTable& {
        auto it = tables.find(n);
        if (it == tables.end()) it = tables.emplace(n, counts_table(n)).first;
        return it->second;
    };

    run_check(report, "alt-max-fixed-equals-derangements", range_to("n", 4, n_max),
              [&]() -> std::optional<std::string> {
                  for (int n = 4; n <= n_max; ++n) {
                      const std::uint64_t got = table(n).d[static_cast<size_t>((n + 1) / 2)];
                      const std::uint64_t want = derangement_count(n / 2);
                      if (got != want)
                          return "n=" + std::to_string(n) + ";d[" + std::to_string((n + 1) / 2) +
                                 "]=" + std::to_string(got) + ";want=" + std::to_string(want);
                  }
                  return std::nullopt;
              });

    run_check(report, "rev-max-fixed-equals-derangements", range_to("n", 5, n_max),
              [&]() -> std::optional<std::string> {
                  for (int n = 5; n <= n_max; ++n) {
                      const std::uint64_t got = table(n).d_star[static_cast<size_t>((n + 2) / 2)];
                      const std::uint64_t want = derangement_count((n - 1) / 2);
                      if (got != want)
                          return "n=" + std::to_string(n) + ";d*[" + std::to_string((n + 2) / 2) +
                                 "]=" + std::to_string(got) + ";want=" + std::to_string(want);
                  }
                  return std::nullopt;
              });

    run_check(report, "max-fixed-formula-alt", range_to("n", 4, n_max),
              [&]() -> std::optional<std::string> {
                  for (int n = 4; n <= n_max; ++n) {
                      int largest = -1;
                      for (int k = 0; k <= n; ++k)
                          if (table(n).d[static_cast<size_t>(k)] != 0) largest = k;
                      if (largest != max_fixed_points(n, false))
                          return "n=" + std::to_string(n) + ";largest=" + std::to_string(largest) +
                                 ";formula=" + std::to_string(max_fixed_points(n, false));
                  }
                  return std::nullopt;
              });

    run_check(report, "max-fixed-formula-rev", range_to("n", 5, n_max),
              [&]() -> std::optional<std::string> {
                  for (int n = 5; n <= n_max; ++n) {
                      int largest = -1;
                      for (int k = 0; k <= n; ++k)
                          if (table(n).d_star[static_cast<size_t>(k)] != 0) largest = k;
                      if (largest != max_fixed_points(n, true))
                          return "n=" + std::to_string(n) + ";largest=" + std::to_string(largest) +
                                 ";formula=" + std::to_string(max_fixed_points(n, true));
                  }
                  return std::nullopt;
              });

    {
        const int hi = std::min(n_max, 10);
        run_check(report, "row-sums-equal-zigzag-count", range_to("n", 0, hi),
                  [&, hi]() -> std::optional<std::string> {
                      for (int n = 0; n <= hi; ++n) {
                          std::uint64_t sum_d = 0;
                          std::uint64_t sum_star = 0;
                          for (int k = 0; k <= n; ++k) {
                              sum_d += table(n).d[static_cast<size_t>(k)];
                              sum_star += table(n).d_star[static_cast<size_t>(k)];
                          }
                          const std::uint64_t want = alternating_count(n);
                          if (sum_d != want || sum_star != want)
                              return "n=" + std::to_string(n) + ";sum=" + std::to_string(sum_d) +
                                     ";sum*=" + std::to_string(sum_star) +
                                     ";zigzag=" + std::to_string(want);
                      }
                      return std::nullopt;
                  });
    }

    {
        const int hi = std::min(n_max, 9);
        run_check(report, "odd-length-alt-rev-symmetry", range_to("n", 1, hi),
                  [&, hi]() -> std::optional<std::string> {
                      for (int n = 1; n <= hi; n += 2)
                          for (int k = 0; k <= n; ++k)
                              if (table(n).d[static_cast<size_t>(k)] !=
                                  table(n).d_star[static_cast<size_t>(k)])
                                  return "n=" + std::to_string(n) + ";k=" + std::to_string(k) +
                                         ";d=" + std::to_string(table(n).d[static_cast<size_t>(k)]) +
                                         ";d*=" +
                                         std::to_string(table(n).d_star[static_cast<size_t>(k)]);
                      return std::nullopt;
                  });
    }

    {
        const int hi = std::min(n_max, 8);
        run_check(report, "derangement-recurrence-vs-brute-force", range_to("n", 0, hi),
                  [hi]() -> std::optional<std::string> {
                      for (int n = 0; n <= hi; ++n) {
                          std::uint64_t brute = 0;
                          scan_permutations(n, [&brute](std::span<const int> word) {
                              if (fixed_count(word) == 0) ++brute;
                              return true;
                          });
                          if (brute != derangement_count(n))
                              return "n=" + std::to_string(n) + ";brute=" + std::to_string(brute) +
                                     ";recurrence=" + std::to_string(derangement_count(n));
                      }
                      return std::nullopt;
                  });

        run_check(report, "derangement-stream-matches-filter", range_to("n", 0, hi),
                  [hi]() -> std::optional<std::string> {
                      for (int n = 0; n <= hi; ++n) {
                          std::vector<Permutation> filtered;
                          for (const Permutation& p : all_permutations(n))
                              if (is_derangement(p)) filtered.push_back(p);
                          if (all_derangements(n) != filtered)
                              return "n=" + std::to_string(n) + ";stream-differs-from-filter";
                      }
                      return std::nullopt;
                  });

        run_check(report, "alternating-stream-matches-filter", range_to("n", 0, hi),
                  [hi]() -> std::optional<std::string> {
                      for (int n = 0; n <= hi; ++n) {
                          for (bool reverse : {false, true}) {
                              std::vector<Permutation> filtered;
                              for (const Permutation& p : all_permutations(n))
                                  if (reverse ? is_reverse_alternating(p) : is_alternating(p))
                                      filtered.push_back(p);
                              if (all_alternating(n, reverse) != filtered)
                                  return "n=" + std::to_string(n) +
                                         ";reverse=" + (reverse ? "1" : "0") +
                                         ";stream-differs-from-filter";
                          }
                      }
                      return std::nullopt;
                  });

        run_check(report, "weak-excedances-partition-positions", range_to("n", 0, hi),
                  [hi]() -> std::optional<std::string> {
                      for (int n = 0; n <= hi; ++n)
                          for (const Permutation& p : all_permutations(n)) {
                              int non = 0;
                              for (int i = 1; i <= n; ++i)
                                  if (p(i) < i) ++non;
                              if (static_cast<int>(weak_excedance_positions(p).size()) + non != n)
                                  return "perm=" + to_text(p);
                          }
                      return std::nullopt;
                  });

        run_check(report, "complement-swaps-alternation", range_to("n", 0, hi),
                  [hi]() -> std::optional<std::string> {
                      for (int n = 0; n <= hi; ++n)
                          for (const Permutation& p : all_permutations(n)) {
                              if (is_alternating(p) != is_reverse_alternating(complement(p)) ||
                                  is_reverse_alternating(p) != is_alternating(complement(p)))
                                  return "perm=" + to_text(p);
                          }
                      return std::nullopt;
                  });
    }

    {
        const int hi = std::min(n_max, 9);
        run_check(report, "reversal-conjugation-odd-lengths", range_to("n", 1, hi),
                  [hi]() -> std::optional<std::string> {
                      for (int n = 1; n <= hi; n += 2)
                          for (const Permutation& p : all_permutations(n)) {
                              const Permutation q = reversal_conjugate(p);
                              if (is_alternating(p) != is_reverse_alternating(q) ||
                                  fixed_points(p).size() != fixed_points(q).size() ||
                                  reversal_conjugate(q) != p)
                                  return "perm=" + to_text(p);
                          }
                      return std::nullopt;
                  });
    }

    {
        const int hi = std::min(n_max, 10);
        run_check(report, "alternating-consecutive-fixed-points", range_to("n", 0, hi),
                  [hi]() -> std::optional<std::string> {
                      std::optional<std::string> witness;
                      for (int n = 0; n <= hi && !witness; ++n) {
                          scan_alternating(n, false, [&witness](std::span<const int> word) {
                              int run = 0;
                              for (size_t i = 0; i < word.size(); ++i) {
                                  if (word[i] != static_cast<int>(i) + 1) {
                                      run = 0;
                                      continue;
                                  }
                                  ++run;
                                  if (run > 2) {
                                      witness = "perm=" + to_text(Permutation::from_word_unchecked(
                                                              {word.begin(), word.end()})) +
                                                ";three-consecutive-fixed";
                                      return false;
                                  }
                                  // A pair at (i, i+1) in 1-based positions means
                                  // position i must be even.
                                  if (run == 2 && (i % 2) != 0) {
                                      witness = "perm=" + to_text(Permutation::from_word_unchecked(
                                                              {word.begin(), word.end()})) +
                                                ";pair-at-odd-position";
                                      return false;
                                  }
                              }
                              return true;
                          });
                      }
                      return witness;
                  });
    }

    return report;
}

namespace {

// A_m: alternating permutations of [2m] with exactly m fixed points.
std::vector<Permutation> max_fixed_alternating(int m) {
    std::vector<Permutation> out;
    scan_alternating(2 * m, false, [m, &out](std::span<const int> word) {
        if (fixed_count(word) == m)
            out.push_back(Permutation::from_word_unchecked({word.begin(), word.end()}));
        return true;
    });
    return out;
}

}  // namespace

VerificationReport verify_bijections(int m_max) {
    VerificationReport report;
    std::map<int, std::vector<Permutation>> a_sets;
    const auto a_set = [&a_sets](int m) -> const std::vector<Permutation>& {
        auto it = a_sets.find(m);
        if (it == a_sets.end()) it = a_sets.emplace(m, max_fixed_alternating(m)).first;
        return it->second;
    };

    run_check(report, "psi-formulations-agree", range_to("m", 0, m_max),
              [&]() -> std::optional<std::string> {
                  for (int m = 0; m <= m_max; ++m)
                      for (const Permutation& p : a_set(m))
                          if (psi_blockwise(p) != psi_delete_halve(p))
                              return "perm=" + to_text(p) + ";blockwise=" +
                                     to_text(psi_blockwise(p)) + ";delete-halve=" +
                                     to_text(psi_delete_halve(p));
                  return std::nullopt;
              });

    run_check(report, "psi-roundtrips", range_to("m", 0, m_max),
              [&]() -> std::optional<std::string> {
                  for (int m = 0; m <= m_max; ++m) {
                      for (const Permutation& p : a_set(m))
                          if (psi_inverse(psi_blockwise(p)) != p)
                              return "perm=" + to_text(p) + ";inverse-of-image-differs";
                      for (const Permutation& s : all_derangements(m))
                          if (psi_blockwise(psi_inverse(s)) != s)
                              return "derangement=" + to_text(s) + ";image-of-inverse-differs";
                  }
                  return std::nullopt;
              });

    run_check(report, "psi-image-is-derangement-set", range_to("m", 0, m_max),
              [&]() -> std::optional<std::string> {
                  for (int m = 0; m <= m_max; ++m) {
                      std::vector<Permutation> images;
                      images.reserve(a_set(m).size());
                      for (const Permutation& p : a_set(m)) images.push_back(psi_blockwise(p));
                      std::sort(images.begin(), images.end());
                      if (std::adjacent_find(images.begin(), images.end()) != images.end())
                          return "m=" + std::to_string(m) + ";duplicate-image";
                      if (images != all_derangements(m))
                          return "m=" + std::to_string(m) + ";image-set-differs;size=" +
                                 std::to_string(images.size()) + ";derangements=" +
                                 std::to_string(all_derangements(m).size());
                  }
                  return std::nullopt;
              });

    run_check(report, "psi-block-structure", range_to("m", 0, m_max),
              [&]() -> std::optional<std::string> {
                  for (int m = 0; m <= m_max; ++m)
                      for (const Permutation& p : a_set(m)) {
                          const Permutation sigma = psi_blockwise(p);
                          for (int j = 1; j <= m; ++j) {
                              // sigma(j) > j forces the block to fix 2j and move
                              // 2j-1; sigma(j) < j forces the opposite.
                              if (sigma(j) > j && p(2 * j) != 2 * j)
                                  return "perm=" + to_text(p) + ";block=" + std::to_string(j) +
                                         ";expected-fixed=" + std::to_string(2 * j);
                              if (sigma(j) < j && p(2 * j - 1) != 2 * j - 1)
                                  return "perm=" + to_text(p) + ";block=" + std::to_string(j) +
                                         ";expected-fixed=" + std::to_string(2 * j - 1);
                          }
                      }
                  return std::nullopt;
              });

    {
        const int hi = std::min(2 * m_max, 10);
        run_check(report, "to-derangement-injective-per-class", range_to("n", 4, hi),
                  [hi]() -> std::optional<std::string> {
                      struct ClassSpec {
                          const char* name;
                          bool reverse;
                          int min_n;
                          int parity;  // n % 2
                      };
                      const ClassSpec classes[] = {
                          {"alt-even", false, 4, 0},
                          {"alt-odd", false, 5, 1},
                          {"rev-even", true, 6, 0},
                          {"rev-odd", true, 5, 1},
                      };
                      for (const ClassSpec& cls : classes) {
                          for (int n = cls.min_n; n <= hi; ++n) {
                              if (n % 2 != cls.parity) continue;
                              const int max_fp = max_fixed_points(n, cls.reverse);
                              std::vector<Permutation> outputs;
                              scan_alternating(n, cls.reverse, [&](std::span<const int> word) {
                                  if (fixed_count(word) != max_fp) return true;
                                  const Permutation p = Permutation::from_word_unchecked(
                                      {word.begin(), word.end()});
                                  outputs.push_back(to_derangement(
                                      p, cls.reverse ? AlternationKind::reverse_alternating
                                                     : AlternationKind::alternating));
                                  return true;
                              });
                              std::sort(outputs.begin(), outputs.end());
                              if (std::adjacent_find(outputs.begin(), outputs.end()) !=
                                  outputs.end())
                                  return std::string(cls.name) + ";n=" + std::to_string(n) +
                                         ";duplicate-output";
                              const int target =
                                  cls.reverse ? (n - 1) / 2 : n / 2;  // floor((n-1)/2) or floor(n/2)
                              if (outputs != all_derangements(target))
                                  return std::string(cls.name) + ";n=" + std::to_string(n) +
                                         ";image-set-differs";
                          }
                      }
                      return std::nullopt;
                  });
    }

    return report;
}

VerificationReport verify_tableaux(int n_max) {
    VerificationReport report;
    const int phi_max = std::min(n_max, 7);
    const int dt_max = std::min(n_max, 6);
    const int at_max = std::min(n_max, 5);
    EnumerationCaps caps = enumeration_caps();
    caps.tableaux = std::max({caps.tableaux, phi_max, dt_max, 2 * at_max});

    std::map<int, std::vector<PermutationTableau>> dt_sets;
    const auto dt_set = [&dt_sets, &caps](int n) -> const std::vector<PermutationTableau>& {
        auto it = dt_sets.find(n);
        if (it == dt_sets.end()) it = dt_sets.emplace(n, derangement_tableaux(n, caps)).first;
        return it->second;
    };
    std::map<int, std::vector<PermutationTableau>> at_sets;
    const auto at_set = [&at_sets, &caps](int n) -> const std::vector<PermutationTableau>& {
        auto it = at_sets.find(n);
        if (it == at_sets.end())
            it = at_sets.emplace(n, alternating_tableaux_max_fixed(n, caps)).first;
        return it->second;
    };

    run_check(report, "tableau-count-is-factorial", range_to("s", 0, phi_max),
              [&]() -> std::optional<std::string> {
                  for (int s = 0; s <= phi_max; ++s) {
                      std::uint64_t count = 0;
                      scan_tableaux(s, [&count](const PermutationTableau&) {
                          ++count;
                          return true;
                      }, caps);
                      if (count != factorial(s))
                          return "s=" + std::to_string(s) + ";count=" + std::to_string(count) +
                                 ";factorial=" + std::to_string(factorial(s));
                  }
                  return std::nullopt;
              });

    run_check(report, "phi-images-distinct", range_to("s", 0, phi_max),
              [&]() -> std::optional<std::string> {
                  for (int s = 0; s <= phi_max; ++s) {
                      std::vector<Permutation> images;
                      scan_tableaux(s, [&images](const PermutationTableau& t) {
                          images.push_back(phi(t));
                          return true;
                      }, caps);
                      std::sort(images.begin(), images.end());
                      if (std::adjacent_find(images.begin(), images.end()) != images.end())
                          return "s=" + std::to_string(s) + ";duplicate-image";
                      if (images.size() != factorial(s))
                          return "s=" + std::to_string(s) + ";image-count=" +
                                 std::to_string(images.size());
                  }
                  return std::nullopt;
              });

    run_check(report, "phi-weak-excedances-are-vertical-labels", range_to("s", 0, phi_max),
              [&]() -> std::optional<std::string> {
                  std::optional<std::string> witness;
                  for (int s = 0; s <= phi_max && !witness; ++s) {
                      scan_tableaux(s, [&witness](const PermutationTableau& t) {
                          const BorderLabeling labels = border_labels(t.shape());
                          const Permutation image = phi(t);
                          std::vector<int> non_excedances;
                          for (int i = 1; i <= image.size(); ++i)
                              if (image(i) < i) non_excedances.push_back(i);
                          if (weak_excedance_positions(image) != labels.vertical_labels() ||
                              non_excedances != labels.horizontal_labels()) {
                              witness = "tableau=" + escape_newlines(to_text(t));
                              return false;
                          }
                          return true;
                      }, caps);
                  }
                  return witness;
              });

    run_check(report, "phi-fixed-points-are-empty-rows", range_to("s", 0, phi_max),
              [&]() -> std::optional<std::string> {
                  std::optional<std::string> witness;
                  for (int s = 0; s <= phi_max && !witness; ++s) {
                      scan_tableaux(s, [&witness](const PermutationTableau& t) {
                          const BorderLabeling labels = border_labels(t.shape());
                          std::vector<int> empty_labels;
                          for (int r : empty_rows(t)) empty_labels.push_back(labels.row_label(r));
                          std::sort(empty_labels.begin(), empty_labels.end());
                          if (fixed_points(phi(t)) != empty_labels) {
                              witness = "tableau=" + escape_newlines(to_text(t));
                              return false;
                          }
                          return true;
                      }, caps);
                  }
                  return witness;
              });

    run_check(report, "phi-alternating-images-consecutive-fixed", range_to("s", 0, phi_max),
              [&]() -> std::optional<std::string> {
                  std::optional<std::string> witness;
                  for (int s = 0; s <= phi_max && !witness; ++s) {
                      scan_tableaux(s, [&witness](const PermutationTableau& t) {
                          const Permutation image = phi(t);
                          if (!is_alternating(image)) return true;
                          int run = 0;
                          for (int i = 1; i <= image.size(); ++i) {
                              if (image(i) != i) {
                                  run = 0;
                                  continue;
                              }
                              ++run;
                              if (run > 2 || (run == 2 && (i - 1) % 2 != 0)) {
                                  witness = "tableau=" + escape_newlines(to_text(t)) +
                                            ";image=" + to_text(image);
                                  return false;
                              }
                          }
                          return true;
                      }, caps);
                  }
                  return witness;
              });

    run_check(report, "derangement-tableaux-have-no-empty-rows", range_to("n", 0, dt_max),
              [&]() -> std::optional<std::string> {
                  std::optional<std::string> witness;
                  for (int n = 0; n <= dt_max && !witness; ++n) {
                      scan_tableaux(n, [&witness](const PermutationTableau& t) {
                          if (is_derangement(phi(t)) != empty_rows(t).empty()) {
                              witness = "tableau=" + escape_newlines(to_text(t));
                              return false;
                          }
                          return true;
                      }, caps);
                  }
                  return witness;
              });

    run_check(report, "theta-doubles-semiperimeter", range_to("n", 0, dt_max),
              [&]() -> std::optional<std::string> {
                  for (int n = 0; n <= dt_max; ++n)
                      for (const PermutationTableau& t : dt_set(n)) {
                          const PermutationTableau big = theta(t);
                          if (!validate(big).ok())
                              return "tableau=" + escape_newlines(to_text(t)) + ";theta-invalid";
                          if (big.semiperimeter() != 2 * n)
                              return "tableau=" + escape_newlines(to_text(t)) +
                                     ";theta-semiperimeter=" +
                                     std::to_string(big.semiperimeter());
                          const Permutation image = phi(big);
                          if (!is_alternating(image) ||
                              static_cast<int>(fixed_points(image).size()) != n)
                              return "tableau=" + escape_newlines(to_text(t)) +
                                     ";theta-image=" + to_text(image);
                      }
                  return std::nullopt;
              });

    run_check(report, "psi-tab-inverts-theta", range_to("n", 0, dt_max),
              [&]() -> std::optional<std::string> {
                  for (int n = 0; n <= dt_max; ++n)
                      for (const PermutationTableau& t : dt_set(n))
                          if (psi_tab(theta(t)) != t)
                              return "tableau=" + escape_newlines(to_text(t));
                  return std::nullopt;
              });

    run_check(report, "theta-inverts-psi-tab", range_to("n", 0, at_max),
              [&]() -> std::optional<std::string> {
                  for (int n = 0; n <= at_max; ++n)
                      for (const PermutationTableau& t : at_set(n))
                          if (theta(psi_tab(t)) != t)
                              return "tableau=" + escape_newlines(to_text(t));
                  return std::nullopt;
              });

    run_check(report, "tableau-square-commutes", range_to("n", 0, at_max),
              [&]() -> std::optional<std::string> {
                  for (int n = 0; n <= at_max; ++n)
                      for (const PermutationTableau& t : at_set(n))
                          if (phi(psi_tab(t)) != psi_blockwise(phi(t)))
                              return "tableau=" + escape_newlines(to_text(t)) +
                                     ";phi-psi-tab=" + to_text(phi(psi_tab(t))) +
                                     ";psi-phi=" + to_text(psi_blockwise(phi(t)));
                  return std::nullopt;
              });

    run_check(report, "max-fixed-tableaux-first-row-nonempty", range_to("n", 1, at_max),
              [&]() -> std::optional<std::string> {
                  for (int n = 1; n <= at_max; ++n)
                      for (const PermutationTableau& t : at_set(n))
                          if (t.rows() == 0 || t.row_empty(1))
                              return "tableau=" + escape_newlines(to_text(t));
                  return std::nullopt;
              });

    run_check(report, "max-fixed-tableaux-no-triple-empty-run", range_to("n", 0, at_max),
              [&]() -> std::optional<std::string> {
                  for (int n = 0; n <= at_max; ++n)
                      for (const PermutationTableau& t : at_set(n)) {
                          int run = 0;
                          int prev_len = -1;
                          for (int r = 1; r <= t.rows(); ++r) {
                              if (!t.row_empty(r)) {
                                  run = 0;
                                  prev_len = -1;
                                  continue;
                              }
                              const int len = t.shape().part(r);
                              run = (len == prev_len) ? run + 1 : 1;
                              prev_len = len;
                              if (run >= 3) return "tableau=" + escape_newlines(to_text(t));
                          }
                      }
                  return std::nullopt;
              });

    run_check(report, "max-fixed-tableaux-empty-runs-strict-after-pair", range_to("n", 0, at_max),
              [&]() -> std::optional<std::string> {
                  for (int n = 0; n <= at_max; ++n)
                      for (const PermutationTableau& t : at_set(n)) {
                          // Within each maximal run of empty rows, lengths may
                          // repeat only at the leading pair.
                          int r = 1;
                          while (r <= t.rows()) {
                              if (!t.row_empty(r)) {
                                  ++r;
                                  continue;
                              }
                              std::vector<int> lens;
                              while (r <= t.rows() && t.row_empty(r))
                                  lens.push_back(t.shape().part(r++));
                              for (size_t i = 1; i + 1 < lens.size(); ++i)
                                  if (lens[i] == lens[i + 1])
                                      return "tableau=" + escape_newlines(to_text(t));
                          }
                      }
                  return std::nullopt;
              });

    return report;
}

VerificationReport verify_all(int n_max) {
    VerificationReport report = verify_counts(n_max);
    VerificationReport bijections = verify_bijections(std::min(n_max / 2, 6));
    VerificationReport tableaux = verify_tableaux(std::min(n_max, 7));
    for (CheckResult& check : bijections.checks) report.checks.push_back(std::move(check));
    for (CheckResult& check : tableaux.checks) report.checks.push_back(std::move(check));
    return report;
}

std::string to_text(const VerificationReport& report, bool with_timings) {
    size_t name_width = 0;
    size_t range_width = 0;
    for (const CheckResult& check : report.checks) {
        name_width = std::max(name_width, check.name.size());
        range_width = std::max(range_width, check.range.size());
    }
    std::string out;
    int passed = 0;
    for (const CheckResult& check : report.checks) {
        std::string line = check.passed ? "PASS " : "FAIL ";
        line += check.name + std::string(name_width - check.name.size() + 2, ' ');
        line += check.range + std::string(range_width - check.range.size(), ' ');
        if (with_timings) {
            const long millis = static_cast<long>(check.elapsed_seconds * 1000.0 + 0.5);
            line += "  " + std::to_string(millis) + "ms";
        }
        if (!check.passed) line += "  witness: " + check.witness;
        out += line + "\n";
        if (check.passed) ++passed;
    }
    out += std::to_string(passed) + "/" + std::to_string(report.checks.size()) +
           " checks passed\n";
    return out;
}

std::string to_machine(const VerificationReport& report) {
    std::string out;
    for (const CheckResult& check : report.checks) {
        out += "CHECK " + check.name + " " + check.range + " " +
               (check.passed ? "PASS" : "FAIL");
        if (!check.passed) out += " " + check.witness;
        out += "\n";
    }
    return out;
}

}  // namespace permtab
