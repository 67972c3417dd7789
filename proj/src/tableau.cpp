#include "permtab/tableau.hpp"

#include <algorithm>

#include "permtab/errors.hpp"

namespace permtab {

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw DomainError("shape part " + std::to_string(i + 1) + " is negative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("shape parts must be weakly decreasing: part " +
                              std::to_string(i + 1) + " (" + std::to_string(parts_[i]) +
                              ") exceeds part " + std::to_string(i) + " (" +
                              std::to_string(parts_[i - 1]) + ")");
    }
}

int Shape::box_count() const {
    int total = 0;
    for (int part : parts_) total += part;
    return total;
}

void PermutationTableau::rebuild_offsets() {
    row_offset_.resize(static_cast<size_t>(shape_.rows()));
    int offset = 0;
    for (int r = 1; r <= shape_.rows(); ++r) {
        row_offset_[static_cast<size_t>(r) - 1] = offset;
        offset += shape_.part(r);
    }
}

PermutationTableau::PermutationTableau(std::vector<std::vector<bool>> rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    shape_ = Shape(std::move(parts));
    dots_.reserve(static_cast<size_t>(shape_.box_count()));
    for (const auto& row : rows)
        for (bool dot : row) dots_.push_back(dot ? 1 : 0);
    rebuild_offsets();
}

PermutationTableau::PermutationTableau(Shape shape, std::vector<std::uint8_t> flat_dots)
    : shape_(std::move(shape)), dots_(std::move(flat_dots)) {
    if (static_cast<int>(dots_.size()) != shape_.box_count())
        throw DomainError("dot grid does not match shape: expected " +
                          std::to_string(shape_.box_count()) + " boxes, got " +
                          std::to_string(dots_.size()));
    rebuild_offsets();
}

bool PermutationTableau::row_empty(int row) const {
    const int len = shape_.part(row);
    const int offset = row_offset_[static_cast<size_t>(row) - 1];
    for (int c = 0; c < len; ++c)
        if (dots_[static_cast<size_t>(offset + c)]) return false;
    return true;
}

std::string describe(const TableauViolation& v) {
    if (v.rule == 1) return "column " + std::to_string(v.col) + " contains no dot (rule 1)";
    return "empty box (" + std::to_string(v.row) + "," + std::to_string(v.col) +
           ") has a dot above and a dot to its left (rule 2)";
}

TableauValidation validate(const PermutationTableau& t) {
    TableauValidation result;
    const int k = t.rows();
    const int cols = t.cols();
    std::vector<char> col_has_dot(static_cast<size_t>(cols) + 1, 0);
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= t.shape().part(r); ++c)
            if (t.dot(r, c)) col_has_dot[static_cast<size_t>(c)] = 1;
    for (int c = 1; c <= cols; ++c)
        if (!col_has_dot[static_cast<size_t>(c)])
            result.violations.push_back({1, 0, c});
    std::vector<char> dot_above(static_cast<size_t>(cols) + 1, 0);
    for (int r = 1; r <= k; ++r) {
        bool dot_left = false;
        for (int c = 1; c <= t.shape().part(r); ++c) {
            if (t.dot(r, c)) {
                dot_left = true;
            } else if (dot_above[static_cast<size_t>(c)] && dot_left) {
                result.violations.push_back({2, r, c});
            }
        }
        for (int c = 1; c <= t.shape().part(r); ++c)
            if (t.dot(r, c)) dot_above[static_cast<size_t>(c)] = 1;
    }
    return result;
}

namespace {

void require_valid(const PermutationTableau& t) {
    const TableauValidation v = validate(t);
    if (!v.ok()) throw DomainError("invalid tableau: " + describe(v.violations.front()));
}

}  // namespace

BorderLabeling::BorderLabeling(const Shape& shape) {
    const int k = shape.rows();
    row_labels_.assign(static_cast<size_t>(k), 0);
    col_labels_.assign(static_cast<size_t>(shape.cols()), 0);
    int label = 0;
    for (int r = 1; r <= k; ++r) {
        steps_.push_back({++label, true, r});
        row_labels_[static_cast<size_t>(r) - 1] = label;
        const int next_len = (r < k) ? shape.part(r + 1) : 0;
        for (int c = shape.part(r); c >= next_len + 1; --c) {
            steps_.push_back({++label, false, c});
            col_labels_[static_cast<size_t>(c) - 1] = label;
        }
    }
}

std::vector<int> BorderLabeling::vertical_labels() const {
    std::vector<int> out;
    for (const BorderStep& step : steps_)
        if (step.vertical) out.push_back(step.label);
    return out;
}

std::vector<int> BorderLabeling::horizontal_labels() const {
    std::vector<int> out;
    for (const BorderStep& step : steps_)
        if (!step.vertical) out.push_back(step.label);
    return out;
}

BorderLabeling border_labels(const Shape& shape) { return BorderLabeling(shape); }

Diagram::Diagram(const PermutationTableau& t, BorderLabeling labels) : labels_(std::move(labels)) {
    const int k = t.rows();
    row_offset_.assign(static_cast<size_t>(k), 0);
    int offset = 0;
    for (int r = 1; r <= k; ++r) {
        row_offset_[static_cast<size_t>(r) - 1] = offset;
        offset += t.shape().part(r);
    }
    index_.assign(static_cast<size_t>(offset), -1);
    // East edges row by row; south targets filled in a second pass.
    for (int r = 1; r <= k; ++r) {
        int prev = -1;  // index into dots_ of the previous dot in this row
        for (int c = 1; c <= t.shape().part(r); ++c) {
            if (!t.dot(r, c)) continue;
            const int di = static_cast<int>(dots_.size());
            dots_.push_back({{r, c}, {}, {}});
            index_[static_cast<size_t>(row_offset_[static_cast<size_t>(r) - 1] + c - 1)] = di;
            if (prev >= 0) {
                dots_[static_cast<size_t>(prev)].east =
                    EdgeTarget{false, 0, {r, c}};
            }
            prev = di;
        }
        if (prev >= 0)
            dots_[static_cast<size_t>(prev)].east =
                EdgeTarget{true, labels_.row_label(r), {}};
    }
    for (int c = 1; c <= t.cols(); ++c) {
        int prev = -1;
        for (int r = 1; r <= k && t.shape().part(r) >= c; ++r) {
            const int di = index_[static_cast<size_t>(row_offset_[static_cast<size_t>(r) - 1] + c - 1)];
            if (di < 0) continue;
            if (prev >= 0)
                dots_[static_cast<size_t>(prev)].south = EdgeTarget{false, 0, {r, c}};
            prev = di;
        }
        if (prev >= 0)
            dots_[static_cast<size_t>(prev)].south = EdgeTarget{true, labels_.col_label(c), {}};
    }
}

const DotEdges* Diagram::at(int row, int col) const {
    const int di = index_[static_cast<size_t>(row_offset_[static_cast<size_t>(row) - 1] + col - 1)];
    return di < 0 ? nullptr : &dots_[static_cast<size_t>(di)];
}

Diagram build_diagram(const PermutationTableau& t) {
    require_valid(t);
    return Diagram(t, BorderLabeling(t.shape()));
}

namespace {

// Follows the zig-zag from a starting dot, alternating directions and
// turning at every dot, until an edge exits at a border label. Records the
// turn dots when `turns` is given (the starting dot included).
int walk_zigzag(const Diagram& diagram, GridPos start, bool south_first,
                std::vector<GridPos>* turns) {
    GridPos cur = start;
    bool south = south_first;
    for (;;) {
        if (turns) turns->push_back(cur);
        const DotEdges* edges = diagram.at(cur.row, cur.col);
        const EdgeTarget& target = south ? edges->south : edges->east;
        if (target.to_label) return target.label;
        cur = target.pos;
        south = !south;
    }
}

// Westernmost dot of a row, or nullopt for an empty row.
std::optional<GridPos> row_west_dot(const PermutationTableau& t, int row) {
    for (int c = 1; c <= t.shape().part(row); ++c)
        if (t.dot(row, c)) return GridPos{row, c};
    return std::nullopt;
}

// Topmost dot of a column; always exists in a valid tableau.
GridPos col_top_dot(const PermutationTableau& t, int col) {
    for (int r = 1; r <= t.rows() && t.shape().part(r) >= col; ++r)
        if (t.dot(r, col)) return GridPos{r, col};
    throw DomainError("column " + std::to_string(col) + " contains no dot (rule 1)");
}

int decode_label(const PermutationTableau& t, const Diagram& diagram, int label,
                 std::vector<GridPos>* turns) {
    const BorderStep& step = diagram.labels().step(label);
    if (step.vertical) {
        const std::optional<GridPos> west = row_west_dot(t, step.index);
        if (!west) return label;  // empty row: the label maps to itself
        return walk_zigzag(diagram, *west, /*south_first=*/true, turns);
    }
    const GridPos top = col_top_dot(t, step.index);
    return walk_zigzag(diagram, top, /*south_first=*/false, turns);
}

}  // namespace

Permutation phi(const PermutationTableau& t) {
    const Diagram diagram = build_diagram(t);
    const int n = t.semiperimeter();
    std::vector<int> word(static_cast<size_t>(n), 0);
    for (int label = 1; label <= n; ++label)
        word[static_cast<size_t>(label) - 1] = decode_label(t, diagram, label, nullptr);
    return Permutation(std::move(word));
}

ZigZagPath trace_zigzag(const PermutationTableau& t, int label) {
    const int n = t.semiperimeter();
    if (label < 1 || label > n)
        throw DomainError("invalid label " + std::to_string(label) + ": expected 1.." +
                          std::to_string(n));
    const Diagram diagram = build_diagram(t);
    ZigZagPath path;
    path.start_label = label;
    path.end_label = decode_label(t, diagram, label, &path.turns);
    return path;
}

std::vector<int> empty_rows(const PermutationTableau& t) {
    std::vector<int> out;
    for (int r = 1; r <= t.rows(); ++r)
        if (t.row_empty(r)) out.push_back(r);
    return out;
}

PermutationTableau psi_tab(const PermutationTableau& t) {
    require_valid(t);
    std::vector<std::vector<bool>> rows;
    for (int r = 1; r <= t.rows(); ++r) {
        if (t.row_empty(r)) continue;
        std::vector<bool> row(static_cast<size_t>(t.shape().part(r)));
        for (int c = 1; c <= t.shape().part(r); ++c) row[static_cast<size_t>(c) - 1] = t.dot(r, c);
        rows.push_back(std::move(row));
    }
    return PermutationTableau(std::move(rows));
}

PermutationTableau theta(const PermutationTableau& t) {
    require_valid(t);
    for (int r = 1; r <= t.rows(); ++r)
        if (t.row_empty(r))
            throw DomainError("theta requires a tableau with no empty rows: row " +
                              std::to_string(r) + " is empty");
    const int k = t.rows();
    std::vector<std::vector<bool>> rows;
    for (int r = 1; r <= k; ++r) {
        std::vector<bool> row(static_cast<size_t>(t.shape().part(r)));
        for (int c = 1; c <= t.shape().part(r); ++c) row[static_cast<size_t>(c) - 1] = t.dot(r, c);
        rows.push_back(std::move(row));
        // Lengths (len, len, len-1, ..., next+1): one duplicated leader, then
        // a strict staircase down to just above the next row's length.
        const int len = t.shape().part(r);
        const int next_len = (r < k) ? t.shape().part(r + 1) : 0;
        rows.emplace_back(static_cast<size_t>(len), false);
        for (int fill = len; fill >= next_len + 1; --fill)
            rows.emplace_back(static_cast<size_t>(fill), false);
    }
    return PermutationTableau(std::move(rows));
}

std::vector<Shape> shapes_with_semiperimeter(int n) {
    std::vector<Shape> shapes;
    if (n == 0) {
        shapes.emplace_back();
        return shapes;
    }
    // k rows force exactly n-k columns; tails in descending lexicographic order.
    for (int k = n; k >= 1; --k) {
        const int first = n - k;
        std::vector<int> parts(static_cast<size_t>(k), 0);
        parts[0] = first;
        auto emit = [&shapes, &parts](auto&& self, int row, int bound) -> void {
            if (row >= static_cast<int>(parts.size())) {
                shapes.push_back(Shape(parts));
                return;
            }
            for (int len = bound; len >= 0; --len) {
                parts[static_cast<size_t>(row)] = len;
                self(self, row + 1, len);
            }
        };
        emit(emit, 1, first);
    }
    return shapes;
}

// Depth-first enumeration of the valid fillings of one shape. Rule (2) is
// checked exactly when a box is left empty; rule (1) is enforced at the last
// row of each column. Every leaf is therefore a valid tableau.
class TableauEnumerator {
public:
    explicit TableauEnumerator(Shape shape)
        : t_(shape, std::vector<std::uint8_t>(static_cast<size_t>(shape.box_count()), 0)) {
        last_row_of_col_.assign(static_cast<size_t>(t_.cols()) + 1, 0);
        for (int r = 1; r <= t_.rows(); ++r)
            for (int c = 1; c <= t_.shape().part(r); ++c)
                last_row_of_col_[static_cast<size_t>(c)] = r;
        col_has_dot_.assign(static_cast<size_t>(t_.cols()) + 1, 0);
    }

    bool run(const std::function<bool(const PermutationTableau&)>& visit) {
        return fill(1, 1, false, visit);
    }

private:
    bool fill(int r, int c, bool row_has_dot,
              const std::function<bool(const PermutationTableau&)>& visit) {
        if (r > t_.rows()) return visit(t_);
        if (c > t_.shape().part(r)) return fill(r + 1, 1, false, visit);
        const size_t flat =
            static_cast<size_t>(t_.row_offset_[static_cast<size_t>(r) - 1] + c - 1);
        // Empty first: fillings are visited in ascending binary order.
        const bool col_dotted = col_has_dot_[static_cast<size_t>(c)] != 0;
        const bool rule2_ok = !(col_dotted && row_has_dot);
        const bool rule1_ok = col_dotted || r < last_row_of_col_[static_cast<size_t>(c)];
        if (rule2_ok && rule1_ok) {
            t_.dots_[flat] = 0;
            if (!fill(r, c + 1, row_has_dot, visit)) return false;
        }
        t_.dots_[flat] = 1;
        col_has_dot_[static_cast<size_t>(c)] = 1;
        const bool ok = fill(r, c + 1, true, visit);
        t_.dots_[flat] = 0;
        col_has_dot_[static_cast<size_t>(c)] = col_dotted ? 1 : 0;
        return ok;
    }

    PermutationTableau t_;
    std::vector<int> last_row_of_col_;
    std::vector<char> col_has_dot_;
};

bool scan_tableaux(int semiperimeter, const std::function<bool(const PermutationTableau&)>& visit,
                   const EnumerationCaps& caps) {
    if (semiperimeter < 0) throw DomainError("tableau enumeration: negative semiperimeter");
    if (semiperimeter > caps.tableaux)
        throw CapError("tableau enumeration: semiperimeter " + std::to_string(semiperimeter) +
                       " exceeds cap " + std::to_string(caps.tableaux) +
                       " (set PERMTAB_ENUM_CAPS to raise)");
    for (const Shape& shape : shapes_with_semiperimeter(semiperimeter)) {
        TableauEnumerator enumerator(shape);
        if (!enumerator.run(visit)) return false;
    }
    return true;
}

std::vector<PermutationTableau> all_tableaux(int semiperimeter, const EnumerationCaps& caps) {
    std::vector<PermutationTableau> out;
    scan_tableaux(semiperimeter, [&out](const PermutationTableau& t) {
        out.push_back(t);
        return true;
    }, caps);
    return out;
}

std::vector<PermutationTableau> derangement_tableaux(int n, const EnumerationCaps& caps) {
    std::vector<PermutationTableau> out;
    scan_tableaux(n, [&out](const PermutationTableau& t) {
        if (is_derangement(phi(t))) out.push_back(t);
        return true;
    }, caps);
    return out;
}

std::vector<PermutationTableau> alternating_tableaux_max_fixed(int n, const EnumerationCaps& caps) {
    std::vector<PermutationTableau> out;
    scan_tableaux(2 * n, [&out, n](const PermutationTableau& t) {
        const Permutation image = phi(t);
        if (is_alternating(image) && static_cast<int>(fixed_points(image).size()) == n)
            out.push_back(t);
        return true;
    }, caps);
    return out;
}

std::string to_text(const PermutationTableau& t) {
    std::string out = "shape:";
    for (int r = 1; r <= t.rows(); ++r) {
        out += (r == 1) ? " " : ",";
        out += std::to_string(t.shape().part(r));
    }
    out += "\n";
    for (int r = 1; r <= t.rows(); ++r) {
        for (int c = 1; c <= t.shape().part(r); ++c) out += t.dot(r, c) ? '*' : '.';
        out += "\n";
    }
    return out;
}

PermutationTableau parse_tableau(std::string_view text) {
    if (text.empty()) throw ParseError("tableau: empty input");
    if (text.back() != '\n') throw ParseError("tableau: missing final newline");
    std::vector<std::string_view> lines;
    size_t start = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\n') {
            lines.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    std::string_view header = lines[0];
    if (header.substr(0, 6) != "shape:")
        throw ParseError("line 1: expected 'shape:' header");
    std::vector<int> parts;
    if (header.size() > 6) {
        if (header[6] != ' ')
            throw ParseError("line 1, column 7: expected a space after 'shape:'");
        std::string_view list = header.substr(7);
        if (list.empty()) throw ParseError("line 1: empty shape list");
        size_t pos = 0;
        while (pos <= list.size()) {
            size_t comma = list.find(',', pos);
            if (comma == std::string_view::npos) comma = list.size();
            std::string_view item = list.substr(pos, comma - pos);
            if (item.empty())
                throw ParseError("line 1, column " + std::to_string(8 + pos) + ": empty shape part");
            if (item.size() > 1 && item[0] == '0')
                throw ParseError("line 1, column " + std::to_string(8 + pos) +
                                 ": shape part has a leading zero");
            int value = 0;
            for (size_t j = 0; j < item.size(); ++j) {
                const char ch = item[j];
                if (ch < '0' || ch > '9')
                    throw ParseError("line 1, column " + std::to_string(8 + pos + j) +
                                     ": expected a digit, got '" + std::string(1, ch) + "'");
                value = value * 10 + (ch - '0');
                if (value > 100000) throw ParseError("line 1: shape part out of range");
            }
            parts.push_back(value);
            if (comma == list.size()) break;
            pos = comma + 1;
        }
    }
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw ParseError("line 1: shape parts must be weakly decreasing");
    const size_t k = parts.size();
    if (lines.size() < 1 + k)
        throw ParseError("tableau: expected " + std::to_string(k) + " row lines, got " +
                         std::to_string(lines.size() - 1));
    if (lines.size() > 1 + k)
        throw ParseError("line " + std::to_string(k + 2) + ": unexpected trailing content");
    std::vector<std::vector<bool>> rows;
    rows.reserve(k);
    for (size_t i = 0; i < k; ++i) {
        std::string_view line = lines[i + 1];
        const size_t expected = static_cast<size_t>(parts[i]);
        if (line.size() != expected)
            throw ParseError("line " + std::to_string(i + 2) + ": expected " +
                             std::to_string(expected) + " boxes, got " +
                             std::to_string(line.size()));
        std::vector<bool> row(expected);
        for (size_t c = 0; c < expected; ++c) {
            if (line[c] == '*')
                row[c] = true;
            else if (line[c] == '.')
                row[c] = false;
            else
                throw ParseError("line " + std::to_string(i + 2) + ", column " +
                                 std::to_string(c + 1) + ": expected '*' or '.', got '" +
                                 std::string(1, line[c]) + "'");
        }
        rows.push_back(std::move(row));
    }
    return PermutationTableau(std::move(rows));
}

}  // namespace permtab
