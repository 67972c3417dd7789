#include "permtab/render.hpp"

#include <algorithm>

#include "permtab/errors.hpp"

namespace permtab {
namespace {

void require_valid_for_render(const PermutationTableau& t) {
    const TableauValidation v = validate(t);
    if (!v.ok()) throw DomainError("invalid tableau: " + describe(v.violations.front()));
}

struct Canvas {
    std::vector<std::string> lines;

    void ensure(int y, int x) {
        if (y >= static_cast<int>(lines.size())) lines.resize(static_cast<size_t>(y) + 1);
        std::string& line = lines[static_cast<size_t>(y)];
        if (x >= static_cast<int>(line.size())) line.resize(static_cast<size_t>(x) + 1, ' ');
    }
    void put(int y, int x, char ch) {
        ensure(y, x);
        lines[static_cast<size_t>(y)][static_cast<size_t>(x)] = ch;
    }
    char get(int y, int x) const {
        if (y < 0 || y >= static_cast<int>(lines.size())) return ' ';
        const std::string& line = lines[static_cast<size_t>(y)];
        if (x < 0 || x >= static_cast<int>(line.size())) return ' ';
        return line[static_cast<size_t>(x)];
    }
    void text(int y, int x, const std::string& s) {
        for (size_t i = 0; i < s.size(); ++i) put(y, x + static_cast<int>(i), s[i]);
    }
    // Path marks keep dots visible; everything else is overwritten.
    void path_h(int y, int x1, int x2) {
        for (int x = std::min(x1, x2); x <= std::max(x1, x2); ++x)
            if (get(y, x) != '*') put(y, x, '-');
    }
    void path_v(int x, int y1, int y2) {
        for (int y = std::min(y1, y2); y <= std::max(y1, y2); ++y)
            if (get(y, x) != '*') put(y, x, '|');
    }

    std::string str() const {
        std::string out;
        for (std::string line : lines) {
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out += line;
            out += '\n';
        }
        return out;
    }
};

int center_x(int col) { return 4 * (col - 1) + 2; }

struct AsciiLayout {
    Canvas canvas;
    std::vector<int> content_y;  // per row, 1-based index
    std::vector<int> hlabel_y;   // per column, y of the line carrying its label
};

AsciiLayout draw_grid(const PermutationTableau& t, const BorderLabeling& labels) {
    AsciiLayout layout;
    const int k = t.rows();
    layout.content_y.assign(static_cast<size_t>(k) + 1, 0);
    layout.hlabel_y.assign(static_cast<size_t>(t.cols()) + 1, 0);
    Canvas& canvas = layout.canvas;
    const auto border = [&canvas](int y, int width) {
        for (int c = 0; c < width; ++c) canvas.text(y, 4 * c, "+---");
        canvas.put(y, 4 * width, '+');
    };
    int y = 0;
    if (k > 0 && t.shape().part(1) > 0) border(y++, t.shape().part(1));
    for (int r = 1; r <= k; ++r) {
        const int width = t.shape().part(r);
        layout.content_y[static_cast<size_t>(r)] = y;
        for (int c = 1; c <= width; ++c) {
            canvas.put(y, 4 * (c - 1), '|');
            if (t.dot(r, c)) canvas.put(y, center_x(c), '*');
        }
        if (width > 0) canvas.put(y, 4 * width, '|');
        canvas.text(y, 4 * width + 2, std::to_string(labels.row_label(r)));
        ++y;
        if (width > 0) {
            border(y++, width);
            const int next = (r < k) ? t.shape().part(r + 1) : 0;
            if (next < width) {
                for (int c = next + 1; c <= width; ++c) {
                    layout.hlabel_y[static_cast<size_t>(c)] = y;
                    canvas.text(y, center_x(c), std::to_string(labels.col_label(c)));
                }
                ++y;
            }
        }
    }
    return layout;
}

void overlay_trace(AsciiLayout& layout, const PermutationTableau& t,
                   const BorderLabeling& labels, const ZigZagPath& path) {
    if (path.turns.empty()) return;  // label on an empty row; nothing to draw
    Canvas& canvas = layout.canvas;
    const BorderStep& start = labels.step(path.start_label);
    if (start.vertical) {
        // West along the row from its right edge to the westernmost dot.
        const int row = start.index;
        canvas.path_h(layout.content_y[static_cast<size_t>(row)], center_x(path.turns.front().col),
                      4 * t.shape().part(row));
    } else {
        // North from just above the label to the topmost dot of the column.
        const int col = start.index;
        canvas.path_v(center_x(col),
                      layout.content_y[static_cast<size_t>(path.turns.front().row)] + 1,
                      layout.hlabel_y[static_cast<size_t>(col)] - 1);
    }
    for (size_t i = 0; i + 1 < path.turns.size(); ++i) {
        const GridPos& a = path.turns[i];
        const GridPos& b = path.turns[i + 1];
        if (a.col == b.col)
            canvas.path_v(center_x(a.col), layout.content_y[static_cast<size_t>(a.row)],
                          layout.content_y[static_cast<size_t>(b.row)]);
        else
            canvas.path_h(layout.content_y[static_cast<size_t>(a.row)], center_x(a.col),
                          center_x(b.col));
    }
    const GridPos& last = path.turns.back();
    const BorderStep& end = labels.step(path.end_label);
    if (end.vertical)
        canvas.path_h(layout.content_y[static_cast<size_t>(last.row)], center_x(last.col),
                      4 * t.shape().part(end.index));
    else
        canvas.path_v(center_x(end.index), layout.content_y[static_cast<size_t>(last.row)] + 1,
                      layout.hlabel_y[static_cast<size_t>(end.index)] - 1);
    for (const GridPos& turn : path.turns)
        canvas.put(layout.content_y[static_cast<size_t>(turn.row)], center_x(turn.col), '+');
}

}  // namespace

std::string render_ascii(const PermutationTableau& t, std::optional<int> trace) {
    require_valid_for_render(t);
    const BorderLabeling labels(t.shape());
    AsciiLayout layout = draw_grid(t, labels);
    std::string summary;
    if (trace) {
        const ZigZagPath path = trace_zigzag(t, *trace);
        overlay_trace(layout, t, labels, path);
        summary = "\npi(" + std::to_string(path.start_label) + ") = " +
                  std::to_string(path.end_label) + "\n";
    }
    return layout.canvas.str() + summary;
}

namespace {

const char* const kTraceColors[] = {"red", "blue", "green", "purple", "darkorange", "brown"};
constexpr size_t kTraceColorCount = sizeof(kTraceColors) / sizeof(kTraceColors[0]);

std::string point(int x, int y) { return std::to_string(x) + "," + std::to_string(y); }

}  // namespace

std::string render_svg(const PermutationTableau& t, const std::vector<int>& traces) {
    require_valid_for_render(t);
    const BorderLabeling labels(t.shape());
    const int n = t.semiperimeter();
    std::vector<int> wanted(traces);
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    for (int label : wanted)
        if (label < 1 || label > n)
            throw DomainError("invalid label " + std::to_string(label) + ": expected 1.." +
                              std::to_string(n));

    const int k = t.rows();
    std::vector<int> last_row_of_col(static_cast<size_t>(t.cols()) + 1, 0);
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= t.shape().part(r); ++c) last_row_of_col[static_cast<size_t>(c)] = r;

    const int width = t.cols() * 36 + 48;
    const int height = k * 36 + 36;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-6 -6 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";

    std::vector<std::string> used_colors;
    for (size_t i = 0; i < wanted.size() && i < kTraceColorCount; ++i)
        used_colors.push_back(kTraceColors[i]);
    if (!used_colors.empty()) {
        out += "<defs>\n";
        for (const std::string& color : used_colors) {
            out += "<marker id=\"arrow-" + color +
                   "\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"3.5\" "
                   "orient=\"auto\"><path d=\"M0,0 L7,3.5 L0,7 z\" fill=\"" +
                   color + "\"/></marker>\n";
        }
        out += "</defs>\n";
    }

    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= t.shape().part(r); ++c)
            out += "<rect x=\"" + std::to_string((c - 1) * 36) + "\" y=\"" +
                   std::to_string((r - 1) * 36) +
                   "\" width=\"36\" height=\"36\" fill=\"none\" stroke=\"black\"/>\n";
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= t.shape().part(r); ++c)
            if (t.dot(r, c))
                out += "<circle cx=\"" + std::to_string((c - 1) * 36 + 18) + "\" cy=\"" +
                       std::to_string((r - 1) * 36 + 18) + "\" r=\"5\" fill=\"black\"/>\n";

    const auto label_text = [&](int x, int y, const char* anchor, int label) {
        return "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
               "\" font-family=\"sans-serif\" font-size=\"16\" font-weight=\"bold\" "
               "text-anchor=\"" +
               anchor + "\" dominant-baseline=\"central\">" + std::to_string(label) + "</text>\n";
    };
    for (const BorderStep& step : labels.steps()) {
        if (step.vertical)
            out += label_text(t.shape().part(step.index) * 36 + 8, (step.index - 1) * 36 + 18,
                              "start", step.label);
        else
            out += label_text((step.index - 1) * 36 + 18,
                              last_row_of_col[static_cast<size_t>(step.index)] * 36 + 14, "middle",
                              step.label);
    }

    for (size_t i = 0; i < wanted.size(); ++i) {
        const ZigZagPath path = trace_zigzag(t, wanted[i]);
        if (path.turns.empty()) continue;  // fixed point: nothing to draw
        const std::string color = kTraceColors[i % kTraceColorCount];
        const BorderStep& start = labels.step(path.start_label);
        const BorderStep& end = labels.step(path.end_label);
        std::string points;
        if (start.vertical)
            points = point(t.shape().part(start.index) * 36 + 4, (start.index - 1) * 36 + 18);
        else
            points = point((start.index - 1) * 36 + 18,
                           last_row_of_col[static_cast<size_t>(start.index)] * 36 + 4);
        for (const GridPos& turn : path.turns)
            points += " " + point((turn.col - 1) * 36 + 18, (turn.row - 1) * 36 + 18);
        if (end.vertical)
            points += " " + point(t.shape().part(end.index) * 36 + 4, (end.index - 1) * 36 + 18);
        else
            points += " " + point((end.index - 1) * 36 + 18,
                                  last_row_of_col[static_cast<size_t>(end.index)] * 36 + 4);
        out += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"2\" marker-end=\"url(#arrow-" + color + ")\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace permtab
