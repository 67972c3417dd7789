#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permtab/caps.hpp"
#include "permtab/permutation.hpp"

namespace permtab {

// Partition shape: weakly decreasing nonnegative row lengths. Zero-length
// rows are allowed (they necessarily trail) and count as rows; the
// semiperimeter is rows + columns, where the column count is the first part.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> parts);  // DomainError unless weakly decreasing and >= 0

    int rows() const { return static_cast<int>(parts_.size()); }
    int cols() const { return parts_.empty() ? 0 : parts_.front(); }
    int part(int row) const { return parts_[static_cast<size_t>(row) - 1]; }  // 1-based
    int semiperimeter() const { return rows() + cols(); }
    int box_count() const;
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Shape&) const = default;

private:
    std::vector<int> parts_;
};

// A dot filling of a shape. Rows are numbered top to bottom and columns left
// to right, both 1-based. A *permutation tableau* additionally satisfies
//   (1) every column contains at least one dot, and
//   (2) no empty box has a dot above it in its column and a dot to its left
//       in its row;
// those two rules are checked by validate(), not by the constructor, so that
// candidate fillings can be represented.
class PermutationTableau {
public:
    PermutationTableau() = default;
    // Shape is derived from the row lengths and validated.
    explicit PermutationTableau(std::vector<std::vector<bool>> rows);
    // DomainError unless flat_dots has exactly one entry per box (row-major).
    PermutationTableau(Shape shape, std::vector<std::uint8_t> flat_dots);

    const Shape& shape() const { return shape_; }
    int rows() const { return shape_.rows(); }
    int cols() const { return shape_.cols(); }
    int semiperimeter() const { return shape_.semiperimeter(); }
    int box_count() const { return static_cast<int>(dots_.size()); }
    bool dot(int row, int col) const {
        return dots_[static_cast<size_t>(row_offset_[static_cast<size_t>(row) - 1] + col - 1)] != 0;
    }
    bool row_empty(int row) const;

    bool operator==(const PermutationTableau&) const = default;

private:
    void rebuild_offsets();

    Shape shape_;
    std::vector<int> row_offset_;      // per row, index of its first box in dots_
    std::vector<std::uint8_t> dots_;   // row-major

    friend class TableauEnumerator;
};

struct TableauViolation {
    int rule = 0;  // 1 = dotless column, 2 = forbidden empty box
    int row = 0;   // 0 for rule 1
    int col = 0;
};
std::string describe(const TableauViolation& v);

struct TableauValidation {
    std::vector<TableauViolation> violations;  // rule-1 by column, then rule-2 row-major
    bool ok() const { return violations.empty(); }
};
TableauValidation validate(const PermutationTableau& t);

// Border labeling: the northeast border of the shape is traversed from the
// top-right corner to the bottom-left one and its unit steps are labeled
// 1..semiperimeter in order. Each row contributes one vertical step (its
// right edge) and each column one horizontal step (its bottom edge).
struct BorderStep {
    int label = 0;
    bool vertical = false;
    int index = 0;  // row index if vertical, column index if horizontal
};

class BorderLabeling {
public:
    explicit BorderLabeling(const Shape& shape);

    const std::vector<BorderStep>& steps() const { return steps_; }
    const BorderStep& step(int label) const { return steps_[static_cast<size_t>(label) - 1]; }
    int row_label(int row) const { return row_labels_[static_cast<size_t>(row) - 1]; }
    int col_label(int col) const { return col_labels_[static_cast<size_t>(col) - 1]; }
    std::vector<int> vertical_labels() const;    // ascending
    std::vector<int> horizontal_labels() const;  // ascending

private:
    std::vector<BorderStep> steps_;
    std::vector<int> row_labels_;
    std::vector<int> col_labels_;
};

BorderLabeling border_labels(const Shape& shape);

struct GridPos {
    int row = 0;
    int col = 0;
    bool operator==(const GridPos&) const = default;
};

struct EdgeTarget {
    bool to_label = false;
    int label = 0;  // set when to_label
    GridPos pos;    // set otherwise
    bool operator==(const EdgeTarget&) const = default;
};

struct DotEdges {
    GridPos from;
    EdgeTarget east;   // nearest dot strictly east in the row, else the row's vertical label
    EdgeTarget south;  // nearest dot strictly south in the column, else the column's horizontal label
};

// The diagram of a valid tableau: every dot carries an east edge and a south
// edge per the rules above.
class Diagram {
public:
    Diagram(const PermutationTableau& t, BorderLabeling labels);

    const BorderLabeling& labels() const { return labels_; }
    const std::vector<DotEdges>& dots() const { return dots_; }  // row-major
    const DotEdges* at(int row, int col) const;                  // nullptr if no dot there

private:
    BorderLabeling labels_;
    std::vector<DotEdges> dots_;
    std::vector<int> index_;  // flat box index -> index into dots_, or -1
    std::vector<int> row_offset_;
};

Diagram build_diagram(const PermutationTableau& t);  // DomainError if t is invalid

// Decodes a valid tableau of semiperimeter n into a permutation of [n]:
// a label on an empty row maps to itself; a vertical label walks west to the
// westernmost dot of its row and then zig-zags southeast (south first,
// turning at every dot) until it exits at a label; a horizontal label walks
// north to the topmost dot of its column and zig-zags southeast starting
// east. Vertical labels land on labels >= themselves (weak excedances),
// horizontal ones on labels strictly below themselves.
Permutation phi(const PermutationTableau& t);

// The geometric walk behind phi for one label, for rendering: every entry of
// `turns` is a dot where the path changes direction (the first is the
// westernmost/topmost dot reached by the initial straight travel). Empty for
// a label on an empty row, in which case end_label == start_label.
struct ZigZagPath {
    int start_label = 0;
    int end_label = 0;
    std::vector<GridPos> turns;
};
ZigZagPath trace_zigzag(const PermutationTableau& t, int label);

std::vector<int> empty_rows(const PermutationTableau& t);  // ascending, zero-length rows included

// Deletes every empty row. Preserves validity and the column count; the
// result has no empty rows.
PermutationTableau psi_tab(const PermutationTableau& t);

// Inverse of psi_tab on tableaux without empty rows: between consecutive
// rows of lengths a >= b it inserts a - b + 1 empty rows of lengths
// (a, a, a-1, ..., b+1), and after the last row of length c it inserts c + 1
// empty rows of lengths (c, c, c-1, ..., 1). A tableau of semiperimeter n
// gains exactly n rows, doubling the semiperimeter, and phi of the result is
// alternating with n fixed points.
PermutationTableau theta(const PermutationTableau& t);

// Shapes of a given semiperimeter, ordered by descending row count and then
// descending lexicographic parts. For n >= 1 the first shape is the all-zero
// one with n rows; k rows force exactly n-k columns.
std::vector<Shape> shapes_with_semiperimeter(int n);

// Every valid permutation tableau of the given semiperimeter, exactly once:
// shapes in the order above, fillings within a shape in ascending row-major
// binary order (dot = 1, first box most significant). The visitor's argument
// is only valid during the call; copy it to keep it. Returns false iff the
// visitor stopped the scan.
bool scan_tableaux(int semiperimeter, const std::function<bool(const PermutationTableau&)>& visit,
                   const EnumerationCaps& caps = enumeration_caps());

std::vector<PermutationTableau> all_tableaux(int semiperimeter,
                                             const EnumerationCaps& caps = enumeration_caps());

// Tableaux of semiperimeter n whose phi-image is a derangement.
std::vector<PermutationTableau> derangement_tableaux(int n,
                                                     const EnumerationCaps& caps = enumeration_caps());
// Tableaux of semiperimeter 2n whose phi-image is alternating with n fixed
// points.
std::vector<PermutationTableau> alternating_tableaux_max_fixed(
    int n, const EnumerationCaps& caps = enumeration_caps());

// Text form, bit-exact:
//   shape: l1,l2,...,lk
// followed by one line per row with exactly l_i characters, '*' for a dot
// and '.' for an empty box; zero-length rows are empty lines. Every line
// ends with a newline. parse_tableau rejects any deviation with a
// line/column diagnostic.
std::string to_text(const PermutationTableau& t);
PermutationTableau parse_tableau(std::string_view text);

}  // namespace permtab
