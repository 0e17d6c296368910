#include "pseudoarc/render.hpp"

#include "pseudoarc/text_format.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace pseudoarc {

namespace {

int label_width(const LinearGraph& g) {
    return static_cast<int>(std::max(std::to_string(g.min_vertex()).size(), std::to_string(g.max_vertex()).size()));
}

LinearGraph read_graph(std::istringstream& in, int line) {
    std::string kind;
    int size = 0;
    if (!(in >> kind >> size) || (kind != "plain" && kind != "signed") || size < 1)
        throw ParseError(line, "expected 'plain <n>' or 'signed <k>'");
    return kind == "plain" ? LinearGraph::plain(size) : LinearGraph::signed_interval(size);
}

// Shared frame for both SVG pictures: x from the first axis, y upward from
// the second, each vertex one unit.
struct SvgFrame {
    const LinearGraph& xs;
    const LinearGraph& ys;
    static constexpr double margin = 1.5;

    double x(int pos) const { return margin + pos; }
    double y(int pos) const { return margin + (ys.size() - 1 - pos); }
    double width() const { return xs.size() + 2 * margin; }
    double height() const { return ys.size() + 2 * margin; }

    void open(std::ostream& os) const {
        os << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n'
           << R"(<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 )" << width() << ' ' << height()
           << R"(" width=")" << width() * 24 << R"(" height=")" << height() * 24 << R"(">)" << '\n';
    }

    // Labels centred on x(pos) + offset.
    void labels(std::ostream& os, double offset) const {
        os << R"(<g font-family="sans-serif" font-size="0.4" text-anchor="middle">)" << '\n';
        for (int i = 0; i < xs.size(); ++i)
            os << "<text x=\"" << x(i) + offset << "\" y=\"" << height() - margin + 0.9 << "\">" << xs.vertex_at(i)
               << "</text>\n";
        for (int j = 0; j < ys.size(); ++j)
            os << "<text x=\"" << margin - 0.6 << "\" y=\"" << y(j) + offset + 0.15 << "\">" << ys.vertex_at(j)
               << "</text>\n";
        os << "</g>\n";
    }
};

} // namespace

std::string board_ascii(const Board& b) {
    std::ostringstream os;
    os << "# rows " << b.rows().describe() << " cols " << b.cols().describe() << '\n';
    const int w = label_width(b.cols());
    for (int c = b.col_count() - 1; c >= 0; --c) {
        os << std::setw(w) << b.cols().vertex_at(c) << " |";
        for (int r = 0; r < b.row_count(); ++r)
            os << (b.is_black(b.cell_at(r, c)) ? '#' : '.');
        os << '\n';
    }
    return os.str();
}

Board parse_board_ascii(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::optional<Board> board;
    std::vector<bool> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        if (!board) {
            std::istringstream head(line);
            std::string hash, rows_kw, cols_kw;
            if (!(head >> hash >> rows_kw) || hash != "#" || rows_kw != "rows")
                throw ParseError(line_no, "expected '# rows <graph> cols <graph>'");
            LinearGraph rows = read_graph(head, line_no);
            if (!(head >> cols_kw) || cols_kw != "cols")
                throw ParseError(line_no, "expected 'cols'");
            LinearGraph cols = read_graph(head, line_no);
            board.emplace(rows, cols);
            seen.assign(static_cast<std::size_t>(cols.size()), false);
            continue;
        }
        auto bar = line.find('|');
        if (bar == std::string::npos)
            throw ParseError(line_no, "expected '<column> |<cells>'");
        Vertex col = 0;
        try {
            col = std::stoi(line.substr(0, bar));
        } catch (const std::exception&) {
            throw ParseError(line_no, "bad column label");
        }
        if (!board->cols().contains(col))
            throw ParseError(line_no, "column " + std::to_string(col) + " is not on the board");
        const auto slot = static_cast<std::size_t>(board->cols().position(col));
        if (seen[slot])
            throw ParseError(line_no, "column " + std::to_string(col) + " appears twice");
        seen[slot] = true;
        std::string cells = line.substr(bar + 1);
        while (!cells.empty() && (cells.back() == '\r' || cells.back() == ' '))
            cells.pop_back();
        if (static_cast<int>(cells.size()) != board->row_count())
            throw ParseError(line_no, "expected " + std::to_string(board->row_count()) + " cells");
        for (int r = 0; r < board->row_count(); ++r) {
            char ch = cells[static_cast<std::size_t>(r)];
            if (ch != '#' && ch != '.')
                throw ParseError(line_no, std::string("unexpected cell character '") + ch + "'");
            board->set({board->rows().vertex_at(r), col}, ch == '#' ? Color::black : Color::white);
        }
    }
    if (!board)
        throw ParseError(line_no, "empty board");
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw ParseError(line_no, "missing columns");
    return *board;
}

std::string board_svg(const Board& b) {
    SvgFrame frame{b.rows(), b.cols()};
    std::ostringstream os;
    frame.open(os);
    os << "<rect x=\"" << frame.x(0) << "\" y=\"" << frame.y(b.col_count() - 1) << "\" width=\"" << b.row_count()
       << "\" height=\"" << b.col_count() << R"(" fill="white" stroke="black" stroke-width="0.05"/>)" << '\n';
    for (int r = 0; r < b.row_count(); ++r)
        for (int c = 0; c < b.col_count(); ++c)
            if (b.is_black(b.cell_at(r, c)))
                os << "<rect x=\"" << frame.x(r) << "\" y=\"" << frame.y(c) << R"(" width="1" height="1" fill="black"/>)"
                   << '\n';
    frame.labels(os, 0.5);
    os << "</svg>\n";
    return os.str();
}

std::string graph_ascii(const AmalgGraph& g) {
    const int w = std::max(label_width(LinearGraph::signed_interval(g.q())), 2);
    std::ostringstream os;
    auto line = [&](int j, bool nodes) {
        if (nodes)
            os << std::setw(w) << j << ' ';
        else
            os << std::string(static_cast<std::size_t>(w) + 1, ' ');
        for (int i = -g.p(); i <= g.p(); ++i) {
            if (nodes) {
                os << 'o';
                if (i < g.p())
                    os << (g.has_edge({i, j}, {i + 1, j}) ? "---" : "   ");
            } else {
                os << (g.has_edge({i, j}, {i, j - 1}) ? '|' : ' ');
                if (i < g.p())
                    os << "   ";
            }
        }
        os << '\n';
    };
    for (int j = g.q(); j >= -g.q(); --j) {
        line(j, true);
        if (j > -g.q())
            line(j, false);
    }
    os << std::string(static_cast<std::size_t>(w) + 1, ' ');
    for (int i = -g.p(); i <= g.p(); ++i) {
        std::string label = std::to_string(i);
        os << label;
        if (i < g.p())
            os << std::string(4 - std::min<std::size_t>(label.size(), 3), ' ');
    }
    os << '\n';
    return os.str();
}

std::string graph_svg(const AmalgGraph& g) {
    LinearGraph xs = LinearGraph::plain(2 * g.p() + 1), ys = LinearGraph::plain(2 * g.q() + 1);
    SvgFrame frame{xs, ys};
    std::ostringstream os;
    frame.open(os);
    os << R"(<g stroke="black" stroke-width="0.08">)" << '\n';
    for (const auto& [a, b] : g.edges())
        os << "<line x1=\"" << frame.x(a.row + g.p()) << "\" y1=\"" << frame.y(a.col + g.q()) << "\" x2=\""
           << frame.x(b.row + g.p()) << "\" y2=\"" << frame.y(b.col + g.q()) << "\"/>\n";
    os << "</g>\n<g fill=\"black\">\n";
    for (int i = -g.p(); i <= g.p(); ++i)
        for (int j = -g.q(); j <= g.q(); ++j)
            os << "<circle cx=\"" << frame.x(i + g.p()) << "\" cy=\"" << frame.y(j + g.q()) << "\" r=\"0.1\"/>\n";
    os << "</g>\n";
    // Axis labels are the signed block indices, not the plain positions.
    os << R"(<g font-family="sans-serif" font-size="0.4" text-anchor="middle">)" << '\n';
    for (int i = -g.p(); i <= g.p(); ++i)
        os << "<text x=\"" << frame.x(i + g.p()) << "\" y=\"" << frame.height() - frame.margin + 0.9 << "\">" << i
           << "</text>\n";
    for (int j = -g.q(); j <= g.q(); ++j)
        os << "<text x=\"" << frame.margin - 0.6 << "\" y=\"" << frame.y(j + g.q()) + 0.15 << "\">" << j
           << "</text>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace pseudoarc
