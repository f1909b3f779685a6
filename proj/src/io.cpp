#include "qwalg/io.hpp"

#include <fstream>
#include <sstream>

namespace qwalg {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) +
                         (column > 0 ? ":" + std::to_string(column) : "") +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        Line line;
        line.number = number;
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (line.tokens.empty() || line.tokens[0][0] == '#') continue;
        out.push_back(std::move(line));
    }
    return out;
}

int parse_index(const std::string& tok, int max, int line, int column) {
    size_t pos = 0;
    long v = -1;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line, column);
    }
    if (pos != tok.size())
        throw ParseError("expected an integer, got '" + tok + "'", line, column);
    if (v < 0 || v >= max)
        throw IndexOutOfRangeError("index " + std::to_string(v) +
                                       " out of range [0, " +
                                       std::to_string(max - 1) + "]",
                                   line, column);
    return static_cast<int>(v);
}

} // namespace

ParsedAlgebra parse_algebra(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty input", 1);

    int order = -1;
    int one = -1;
    std::vector<std::string> names;
    std::vector<int> star;
    std::vector<int> table;
    bool is_product = false;
    bool have_table = false;
    bool have_star = false;
    bool have_one = false;
    bool have_names = false;

    size_t i = 0;
    auto read_rows = [&](size_t& idx, int header_line) {
        table.reserve(static_cast<size_t>(order) * order);
        for (int r = 0; r < order; ++r) {
            if (idx >= lines.size())
                throw ParseError("expected " + std::to_string(order) +
                                     " table rows, got " + std::to_string(r),
                                 header_line);
            const Line& row = lines[idx++];
            if (row.tokens.size() != static_cast<size_t>(order))
                throw ParseError("row has " + std::to_string(row.tokens.size()) +
                                     " entries, expected " + std::to_string(order),
                                 row.number);
            for (size_t c = 0; c < row.tokens.size(); ++c)
                table.push_back(parse_index(row.tokens[c], order, row.number,
                                            static_cast<int>(c + 1)));
        }
    };

    while (i < lines.size()) {
        const Line& line = lines[i];
        const std::string& key = line.tokens[0];
        if (key == "order") {
            if (order >= 0) throw DuplicateBlockError("duplicate 'order'", line.number);
            if (line.tokens.size() != 2)
                throw ParseError("'order' takes one value", line.number);
            size_t pos = 0;
            long v = 0;
            try {
                v = std::stol(line.tokens[1], &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != line.tokens[1].size() || v < 1 ||
                v > FiniteAlgebra::kMaxOrder)
                throw ParseError("order must be an integer in [1, 255]",
                                 line.number);
            order = static_cast<int>(v);
            ++i;
            continue;
        }
        if (order < 0)
            throw ParseError("'order' must come before '" + key + "'", line.number);
        if (key == "one") {
            if (have_one) throw DuplicateBlockError("duplicate 'one'", line.number);
            if (line.tokens.size() != 2)
                throw ParseError("'one' takes one value", line.number);
            one = parse_index(line.tokens[1], order, line.number, 2);
            have_one = true;
            ++i;
            continue;
        }
        if (key == "names") {
            if (have_names) throw DuplicateBlockError("duplicate 'names'", line.number);
            if (line.tokens.size() != static_cast<size_t>(order) + 1)
                throw ParseError("'names' needs " + std::to_string(order) +
                                     " labels",
                                 line.number);
            names.assign(line.tokens.begin() + 1, line.tokens.end());
            have_names = true;
            ++i;
            continue;
        }
        if (key == "star") {
            if (have_star) throw DuplicateBlockError("duplicate 'star'", line.number);
            if (line.tokens.size() != static_cast<size_t>(order) + 1)
                throw ParseError("'star' needs " + std::to_string(order) +
                                     " indices",
                                 line.number);
            for (size_t c = 1; c < line.tokens.size(); ++c)
                star.push_back(parse_index(line.tokens[c], order, line.number,
                                           static_cast<int>(c + 1)));
            have_star = true;
            ++i;
            continue;
        }
        if (key == "imp") {
            if (have_table)
                throw DuplicateBlockError("second operation block", line.number);
            if (line.tokens.size() != 1)
                throw ParseError("'imp' takes no arguments", line.number);
            int header = line.number;
            ++i;
            read_rows(i, header);
            have_table = true;
            is_product = false;
            continue;
        }
        if (key == "op") {
            if (line.tokens.size() != 2 || line.tokens[1] != "prod")
                throw ParseError("expected 'op prod'", line.number);
            if (have_table)
                throw DuplicateBlockError("second operation block", line.number);
            int header = line.number;
            ++i;
            read_rows(i, header);
            have_table = true;
            is_product = true;
            continue;
        }
        throw ParseError("unknown directive '" + key + "'", line.number);
    }

    if (!have_table) throw ParseError("missing 'imp' or 'op prod' block", 1);
    if (!have_one) throw ParseError("missing 'one'", 1);
    if (is_product && !have_star)
        throw ParseError("product-signature input requires a 'star' line", 1);
    if (!is_product && have_star)
        throw ParseError("'star' is only valid with 'op prod'", 1);

    if (is_product)
        return make_product_algebra(order, std::move(table), std::move(star),
                                    one, std::move(names));
    return FiniteAlgebra(order, std::move(table), one, std::move(names));
}

ParsedAlgebra parse_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

namespace {

void write_header(std::ostream& out, int order, int one,
                  const std::vector<std::string>& names) {
    out << "order " << order << "\n";
    out << "one " << one << "\n";
    if (!names.empty()) {
        out << "names";
        for (const std::string& n : names) out << ' ' << n;
        out << "\n";
    }
}

void write_rows(std::ostream& out, int order, const std::vector<int>& table) {
    for (int r = 0; r < order; ++r) {
        for (int c = 0; c < order; ++c)
            out << (c ? " " : "") << table[r * order + c];
        out << "\n";
    }
}

} // namespace

std::string write_algebra(const FiniteAlgebra& alg) {
    std::ostringstream out;
    write_header(out, alg.order(), alg.one(), alg.names());
    out << "imp\n";
    write_rows(out, alg.order(), alg.imp_table());
    return out.str();
}

std::string write_algebra(const ProductAlgebra& p) {
    std::ostringstream out;
    write_header(out, p.order, p.one, p.names);
    out << "star";
    for (int v : p.star) out << ' ' << v;
    out << "\n";
    out << "op prod\n";
    write_rows(out, p.order, p.prod);
    return out.str();
}

FiniteAlgebra as_implication(const ParsedAlgebra& parsed) {
    if (std::holds_alternative<FiniteAlgebra>(parsed))
        return std::get<FiniteAlgebra>(parsed);
    return to_implication(std::get<ProductAlgebra>(parsed));
}

} // namespace qwalg
