#include "permtab/counting.hpp"

#include <span>

#include "permtab/errors.hpp"
#include "permtab/permutation.hpp"

namespace permtab {
namespace {

void require_count_range(int n, const char* what) {
    if (n < 0) throw DomainError(std::string(what) + ": negative n");
    if (n > 20)
        throw CapError(std::string(what) + ": n=" + std::to_string(n) +
                       " exceeds the 64-bit overflow guard (n <= 20)");
}

}  // namespace

std::uint64_t derangement_count(int n) {
    require_count_range(n, "derangement count");
    std::uint64_t prev2 = 1;  // D_0
    if (n == 0) return prev2;
    std::uint64_t prev1 = 0;  // D_1
    for (int i = 2; i <= n; ++i) {
        const std::uint64_t cur = static_cast<std::uint64_t>(i - 1) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

std::uint64_t alternating_count(int n) {
    require_count_range(n, "alternating count");
    // Boustrophedon triangle: row i ends in the zigzag number for length i.
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next(static_cast<size_t>(i) + 1, 0);
        for (int k = 1; k <= i; ++k)
            next[static_cast<size_t>(k)] =
                next[static_cast<size_t>(k) - 1] + row[static_cast<size_t>(i - k)];
        row = std::move(next);
    }
    return row.back();
}

int max_fixed_points(int n, bool reverse) {
    if (!reverse && n < 4)
        throw DomainError("max fixed points (alternating) is defined for n >= 4, got " +
                          std::to_string(n));
    if (reverse && n < 5)
        throw DomainError("max fixed points (reverse alternating) is defined for n >= 5, got " +
                          std::to_string(n));
    return reverse ? (n + 2) / 2 : (n + 1) / 2;
}

CountsTable counts_table(int n, const EnumerationCaps& caps) {
    if (n < 0) throw DomainError("counts table: negative n");
    CountsTable table;
    table.n = n;
    table.d.assign(static_cast<size_t>(n) + 1, 0);
    table.d_star.assign(static_cast<size_t>(n) + 1, 0);
    const auto bucket = [n](std::vector<std::uint64_t>& counts) {
        return [n, &counts](std::span<const int> word) {
            int fixed = 0;
            for (int i = 0; i < n; ++i)
                if (word[static_cast<size_t>(i)] == i + 1) ++fixed;
            ++counts[static_cast<size_t>(fixed)];
            return true;
        };
    };
    scan_alternating(n, false, bucket(table.d), caps);
    scan_alternating(n, true, bucket(table.d_star), caps);
    table.derangements = derangement_count(n);
    return table;
}

namespace {

std::string pad_left(const std::string& s, size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string to_text(const CountsTable& table) {
    std::string out;
    std::uint64_t sum_d = 0;
    std::uint64_t sum_star = 0;
    for (size_t k = 0; k < table.d.size(); ++k) {
        sum_d += table.d[k];
        sum_star += table.d_star[k];
    }
    out += "n = " + std::to_string(table.n) + "\n";
    out += "derangements = " + std::to_string(table.derangements) + "\n";
    out += "alternating = " + std::to_string(sum_d) +
           ", reverse alternating = " + std::to_string(sum_star) + "\n";
    out += "  k       d_k      d*_k\n";
    for (int k = 0; k <= table.n; ++k) {
        out += pad_left(std::to_string(k), 3);
        out += pad_left(std::to_string(table.d[static_cast<size_t>(k)]), 10);
        out += pad_left(std::to_string(table.d_star[static_cast<size_t>(k)]), 10);
        out += "\n";
    }
    return out;
}

std::string to_machine(const CountsTable& table) {
    std::string out;
    for (int k = 0; k <= table.n; ++k) {
        out += std::to_string(table.n) + " " + std::to_string(k) + " " +
               std::to_string(table.d[static_cast<size_t>(k)]) + " " +
               std::to_string(table.d_star[static_cast<size_t>(k)]) + "\n";
    }
    return out;
}

}  // namespace permtab
