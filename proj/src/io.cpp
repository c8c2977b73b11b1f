#include "quasisym/io.hpp"

#include "quasisym/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace quasisym {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Nonblank lines that do not start with '#', trimmed.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto eol = text.find('\n');
        const auto raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        lines.push_back({number, line});
    }
    return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos > start) out.push_back(s.substr(start, pos - start));
    }
    return out;
}

int parse_header(const std::vector<Line>& lines, int max_n) {
    if (lines.empty()) throw ParseError("missing 'n=<count>' header");
    const auto& head = lines.front();
    if (head.text.substr(0, 2) != "n=") throw ParseError("expected 'n=<count>', got '" + std::string(head.text) + "'", head.number);
    const auto digits = trim(head.text.substr(2));
    int n = 0;
    if (digits.empty() || digits.size() > 3) throw ParseError("bad player count '" + std::string(digits) + "'", head.number);
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad player count '" + std::string(digits) + "'", head.number);
        n = n * 10 + (c - '0');
    }
    if (n < 1 || n > max_n)
        throw ParseError("player count " + std::to_string(n) + " outside 1.." + std::to_string(max_n), head.number);
    return n;
}

template <class F>
auto at_line(std::size_t number, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        if (e.line() != 0) throw;
        throw ParseError(e.what(), number);
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), number);
    }
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string coalition_label(Mask m) {
    if (m == 0) return "0";
    std::string out;
    for (int i = 0; m >> i; ++i)
        if (contains(m, i)) {
            if (!out.empty()) out += ',';
            out += std::to_string(i + 1);
        }
    return out;
}

Mask parse_members(std::string_view text, int n) {
    if (text == "0") return 0;
    Mask m = 0;
    while (true) {
        const auto comma = text.find(',');
        const auto tok = text.substr(0, comma);
        if (tok.empty() || tok.size() > 3) throw ParseError("bad coalition member '" + std::string(tok) + "'");
        int p = 0;
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad coalition member '" + std::string(tok) + "'");
            p = p * 10 + (c - '0');
        }
        if (p < 1 || p > n) throw ParseError("coalition member " + std::to_string(p) + " outside 1.." + std::to_string(n));
        if (contains(m, p - 1)) throw ParseError("coalition member " + std::to_string(p) + " repeated");
        m |= Mask{1} << (p - 1);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return m;
}

PermGroup parse_group(std::string_view text) {
    const auto lines = content_lines(text);
    const int n = parse_header(lines, kMaxPoints);
    std::vector<Permutation> gens;
    for (std::size_t k = 1; k < lines.size(); ++k)
        gens.push_back(at_line(lines[k].number, [&] { return parse_cycles(lines[k].text, n); }));
    return PermGroup::generate(n, gens);
}

Game parse_game(std::string_view text) {
    const auto lines = content_lines(text);
    const int n = parse_header(lines, kMaxGamePlayers);
    Game v(n);
    std::vector<bool> listed(std::size_t{1} << n, false);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        at_line(line.number, [&] {
            const auto fields = split_ws(line.text);
            if (fields.size() != 2) throw ParseError("expected '<members> <value>'");
            const Mask m = parse_members(fields[0], n);
            const Rational value = parse_rational(fields[1]);
            if (listed[m]) throw ParseError("coalition " + std::string(fields[0]) + " listed twice");
            listed[m] = true;
            if (m == 0 && value != 0) throw ParseError("the empty coalition must have value 0");
            v.set(m, value);
            return 0;
        });
    }
    return v;
}

std::string format_matrix(const ValueMatrix& m) {
    const int n = m.players();
    std::string out = "i";
    for (Mask r = 1; r <= full_mask(n); ++r) out += '\t' + coalition_label(r);
    out += '\n';
    for (int i = 0; i < n; ++i) {
        out += std::to_string(i + 1);
        for (Mask r = 1; r <= full_mask(n); ++r) out += '\t' + to_string(m(i, r));
        out += '\n';
    }
    return out;
}

ValueMatrix parse_matrix(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty matrix");
    const auto header = split_ws(lines.front().text);
    if (header.empty() || header.front() != "i")
        throw ParseError("matrix header must start with 'i'", lines.front().number);
    const std::size_t cols = header.size() - 1;
    const int n = static_cast<int>(lines.size()) - 1;
    if (n < 1 || n > kMaxGamePlayers) throw ParseError("matrix must have 1.." + std::to_string(kMaxGamePlayers) + " player rows");
    if (cols != full_mask(n))
        throw ParseError("header lists " + std::to_string(cols) + " coalitions, expected " +
                             std::to_string(full_mask(n)) + " for " + std::to_string(n) + " players",
                         lines.front().number);
    for (Mask r = 1; r <= full_mask(n); ++r)
        if (header[r] != coalition_label(r))
            throw ParseError("header column " + std::to_string(r) + " is '" + std::string(header[r]) +
                                 "', expected '" + coalition_label(r) + "'",
                             lines.front().number);

    ValueMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const auto& line = lines[static_cast<std::size_t>(i) + 1];
        at_line(line.number, [&] {
            const auto fields = split_ws(line.text);
            if (fields.size() != cols + 1)
                throw ParseError("expected " + std::to_string(cols + 1) + " fields, got " + std::to_string(fields.size()));
            if (fields[0] != std::to_string(i + 1))
                throw ParseError("row label '" + std::string(fields[0]) + "', expected " + std::to_string(i + 1));
            for (Mask r = 1; r <= full_mask(n); ++r) m(i, r) = parse_rational(fields[r]);
            return 0;
        });
    }
    return m;
}

std::string format_allocation(const Allocation& x) {
    std::string out;
    for (int i = 0; i < x.players(); ++i)
        out += std::to_string(i + 1) + '\t' + to_string(x.payoff[static_cast<std::size_t>(i)]) + '\n';
    return out;
}

std::vector<std::pair<Permutation, Rational>> parse_coset_weights(std::string_view text, int n) {
    std::vector<std::pair<Permutation, Rational>> out;
    for (const auto& line : content_lines(text)) {
        out.push_back(at_line(line.number, [&] {
            const auto split = line.text.find_last_of(" \t");
            if (split == std::string_view::npos) throw ParseError("expected '<representative> <weight>'");
            return std::make_pair(parse_cycles(trim(line.text.substr(0, split)), n),
                                  parse_rational(line.text.substr(split + 1)));
        }));
    }
    return out;
}

} // namespace quasisym
