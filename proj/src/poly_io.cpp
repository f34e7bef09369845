#include "st34/poly_io.hpp"

#include <map>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef ST34_TABLES_DIR
#define ST34_TABLES_DIR "tables"
#endif

namespace st34 {

namespace {

template <class R>
std::string monomial_text(const Monomial& m, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const unsigned e = m.exponent(i);
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += names[i];
        if (e > 1) {
            out += '^' + std::to_string(e);
        }
    }
    return out;
}

/// Each term as (negative?, body) so callers can choose the separators.
std::vector<std::pair<bool, std::string>> rational_terms(const Polynomial<Rational>& p)
{
    std::vector<std::pair<bool, std::string>> out;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c.sign() < 0;
        const Rational a = neg ? -c : c;
        std::string mono = monomial_text<Rational>(m, *p.vars());
        std::string body;
        if (mono.empty()) {
            body = a.to_string();
        } else if (a.is_one()) {
            body = mono;
        } else {
            body = a.to_string() + "*" + mono;
        }
        out.emplace_back(neg, std::move(body));
    }
    return out;
}

class Parser {
public:
    Parser(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

    [[noreturn]] void fail(std::size_t at, const std::string& what) const
    {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(source_, line, col, what);
    }

    void skip_space(std::size_t& pos) const
    {
        while (pos < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos])) != 0) {
            ++pos;
        }
    }

    std::string_view identifier(std::size_t& pos) const
    {
        const std::size_t start = pos;
        while (pos < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos])) != 0 || text_[pos] == '_')) {
            ++pos;
        }
        return text_.substr(start, pos - start);
    }

    std::string_view digits(std::size_t& pos) const
    {
        const std::size_t start = pos;
        while (pos < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos])) != 0) {
            ++pos;
        }
        return text_.substr(start, pos - start);
    }

    /// Parses text_[begin, end) as a polynomial over vars.
    Polynomial<Rational> polynomial(std::size_t begin, std::size_t end, const VarList& vars) const
    {
        std::vector<Polynomial<Rational>::Term> terms;
        std::vector<std::size_t> term_pos;
        std::size_t pos = begin;
        const std::string_view body = text_.substr(0, end);
        auto at_end = [&] {
            skip_space(pos);
            return pos >= end;
        };
        if (at_end()) {
            fail(pos, "empty polynomial");
        }
        bool first = true;
        while (!at_end()) {
            const std::size_t term_start = pos;
            bool neg = false;
            if (body[pos] == '+' || body[pos] == '-') {
                neg = body[pos] == '-';
                ++pos;
                skip_space(pos);
            } else if (!first) {
                fail(pos, "expected '+' or '-' between terms");
            }
            first = false;
            Rational coeff = 1;
            std::vector<unsigned> exps(vars->size(), 0);
            bool need_factor = true;
            if (pos < end && std::isdigit(static_cast<unsigned char>(body[pos])) != 0) {
                const std::size_t num_start = pos;
                Integer num(std::string(digits(pos)));
                Integer den = 1;
                if (pos < end && body[pos] == '/') {
                    ++pos;
                    const auto d = digits(pos);
                    if (d.empty()) {
                        fail(pos, "expected a denominator after '/'");
                    }
                    den = Integer(std::string(d));
                    if (sgn(den) == 0) {
                        fail(num_start, "zero denominator");
                    }
                }
                coeff = rational_reduce(num, den);
                need_factor = false;
                skip_space(pos);
                if (pos < end && body[pos] == '*') {
                    ++pos;
                    skip_space(pos);
                    need_factor = true;
                }
            }
            if (need_factor) {
                while (true) {
                    const std::size_t name_pos = pos;
                    const auto name = identifier(pos);
                    if (name.empty()) {
                        fail(name_pos, "expected a variable name");
                    }
                    const auto it = std::find(vars->begin(), vars->end(), name);
                    if (it == vars->end()) {
                        fail(name_pos, "unknown variable '" + std::string(name) + "'");
                    }
                    unsigned e = 1;
                    skip_space(pos);
                    if (pos < end && body[pos] == '^') {
                        ++pos;
                        skip_space(pos);
                        const std::size_t exp_pos = pos;
                        const auto d = digits(pos);
                        if (d.empty() || d.size() > 3) {
                            fail(exp_pos, "expected an exponent up to 255");
                        }
                        e = static_cast<unsigned>(std::stoul(std::string(d)));
                    }
                    auto& slot = exps[static_cast<std::size_t>(it - vars->begin())];
                    if (slot + e > kMaxExponent) {
                        fail(name_pos, "exponent exceeds 255");
                    }
                    slot += e;
                    skip_space(pos);
                    if (pos < end && body[pos] == '*') {
                        ++pos;
                        skip_space(pos);
                        continue;
                    }
                    break;
                }
            }
            if (pos < end && body[pos] != '+' && body[pos] != '-') {
                fail(pos, std::string("unexpected character '") + body[pos] + "'");
            }
            if (coeff.is_zero()) {
                fail(term_start, "zero coefficient");
            }
            terms.emplace_back(Monomial::from_exponents(exps), neg ? -coeff : coeff);
            term_pos.push_back(term_start);
        }
        for (std::size_t i = 0; i < terms.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (terms[i].first == terms[j].first) {
                    fail(term_pos[i], "duplicate monomial");
                }
            }
        }
        if (terms.size() == 1 && terms[0].first == Monomial() && terms[0].second.is_zero()) {
            terms.clear();
        }
        return Polynomial<Rational>::from_terms(vars, std::move(terms));
    }

    std::string_view text() const { return text_; }

private:
    std::string_view text_;
    std::string source_;
};

}  // namespace

std::string to_string(const Polynomial<Rational>& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [neg, body] : rational_terms(p)) {
        if (first) {
            out += neg ? "-" + body : body;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
        first = false;
    }
    return out;
}

std::string to_string(const Polynomial<QOmega>& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + to_string(c) + ")";
        const std::string mono = monomial_text<QOmega>(m, *p.vars());
        if (!mono.empty()) {
            out += "*" + mono;
        }
    }
    return out;
}

std::string to_wrapped_string(const Polynomial<Rational>& p, std::size_t width, std::string_view indent)
{
    if (p.is_zero()) {
        return std::string(indent) + "0";
    }
    std::string out(indent);
    std::size_t line_len = indent.size();
    bool first = true;
    for (const auto& [neg, body] : rational_terms(p)) {
        std::string piece;
        if (first) {
            piece = neg ? "-" + body : body;
        } else {
            piece = (neg ? "- " : "+ ") + body;
        }
        if (!first && line_len + 1 + piece.size() > width) {
            out += "\n";
            out += indent;
            line_len = indent.size();
        } else if (!first) {
            out += ' ';
            ++line_len;
        }
        out += piece;
        line_len += piece.size();
        first = false;
    }
    return out;
}

Polynomial<Rational> parse_polynomial(std::string_view text, const VarList& vars, const std::string& source)
{
    const Parser parser(text, source);
    if (text.find_first_not_of(" \t\r\n") != std::string_view::npos &&
        text.substr(text.find_first_not_of(" \t\r\n")).substr(0, 1) == "0") {
        std::size_t pos = text.find_first_not_of(" \t\r\n") + 1;
        parser.skip_space(pos);
        if (pos >= text.size()) {
            return Polynomial<Rational>(vars);
        }
    }
    return parser.polynomial(0, text.size(), vars);
}

const Polynomial<Rational>& PolyTable::get(const std::string& name) const
{
    for (const auto& [n, p] : entries) {
        if (n == name) {
            return p;
        }
    }
    throw std::out_of_range("table " + path.string() + " has no entry '" + name + "'");
}

bool PolyTable::contains(const std::string& name) const
{
    return std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.first == name; });
}

PolyTable parse_table(std::string_view text, const std::string& source)
{
    const Parser parser(text, source);
    PolyTable table;
    table.path = source;
    VarList current;
    std::size_t pos = 0;
    while (true) {
        parser.skip_space(pos);
        if (pos >= text.size()) {
            break;
        }
        if (text[pos] == '#') {
            const std::size_t eol = std::min(text.find('\n', pos), text.size());
            auto line = text.substr(pos + 1, eol - pos - 1);
            if (!line.empty() && line.front() == ' ') {
                line.remove_prefix(1);
            }
            if (!table.description.empty()) {
                table.description += '\n';
            }
            table.description += line;
            pos = eol;
            continue;
        }
        if (text[pos] == '@') {
            const std::size_t start = pos;
            ++pos;
            if (parser.identifier(pos) != "vars") {
                parser.fail(start, "unknown directive");
            }
            const std::size_t eol = std::min(text.find('\n', pos), text.size());
            std::istringstream names{std::string(text.substr(pos, eol - pos))};
            std::vector<std::string> list;
            for (std::string n; names >> n;) {
                list.push_back(n);
            }
            try {
                current = make_vars(std::move(list));
                if (!table.vars) {
                    table.vars = current;
                }
            } catch (const PolynomialError& e) {
                parser.fail(start, e.what());
            }
            pos = eol;
            continue;
        }
        const std::size_t name_pos = pos;
        const std::string name(parser.identifier(pos));
        if (name.empty()) {
            parser.fail(name_pos, "expected an entry name");
        }
        if (!current) {
            parser.fail(name_pos, "entry before the @vars line");
        }
        if (table.contains(name)) {
            parser.fail(name_pos, "duplicate entry '" + name + "'");
        }
        parser.skip_space(pos);
        if (pos >= text.size() || text[pos] != '=') {
            parser.fail(pos, "expected '='");
        }
        ++pos;
        const std::size_t semi = text.find(';', pos);
        if (semi == std::string_view::npos) {
            parser.fail(pos, "entry is not terminated by ';'");
        }
        std::size_t probe = pos;
        parser.skip_space(probe);
        Polynomial<Rational> poly(current);
        if (probe < semi && text[probe] == '0') {
            std::size_t after = probe + 1;
            parser.skip_space(after);
            if (after != semi) {
                poly = parser.polynomial(pos, semi, current);
            }
        } else {
            poly = parser.polynomial(pos, semi, current);
        }
        table.entries.emplace_back(name, std::move(poly));
        pos = semi + 1;
    }
    if (!table.vars) {
        parser.fail(text.size(), "missing @vars line");
    }
    return table;
}

PolyTable load_table(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open table " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    PolyTable t = parse_table(buf.str(), path.string());
    t.path = path;
    return t;
}

std::string format_table(const PolyTable& table)
{
    std::string out;
    if (!table.description.empty()) {
        std::istringstream lines(table.description);
        for (std::string l; std::getline(lines, l);) {
            out += "# " + l + "\n";
        }
    }
    VarList current;
    auto directive = [&](const VarList& vars) {
        out += "@vars";
        for (const auto& v : *vars) {
            out += " " + v;
        }
        out += "\n";
        current = vars;
    };
    if (table.entries.empty()) {
        directive(table.vars);
    }
    for (const auto& [name, p] : table.entries) {
        if (!current || !same_vars(current, p.vars())) {
            out += current ? "\n" : "";
            directive(p.vars());
        }
        out += "\n" + name + " =\n" + to_wrapped_string(p) + ";\n";
    }
    return out;
}

std::filesystem::path default_tables_dir()
{
    if (const char* env = std::getenv("ST34_TABLES"); env != nullptr && *env != '\0') {
        return env;
    }
    return ST34_TABLES_DIR;
}

std::string table_contents(const std::string& stem)
{
    static const std::map<std::string, std::string> known = {
        {"m1", "m1 in p3, p6, p9, p12, p15, s6"},
        {"m2", "m2 in p3, p6, p9, p12, p15, s6"},
        {"m3", "m3 in p3, p6, p9, p12, p15, s6"},
        {"m4", "m4 in p3, p6, p9, p12, p15, s6"},
        {"m5", "m5 in p3, p6, p9, p12, p15, s6"},
        {"m7", "m7 in p3, p6, p9, p12, p15, s6"},
        {"f", "the Terao-Enta invariants f1..f6 as multiples of mu_k and m_j"},
        {"q_expr", "p3..p15 as polynomials of the power sums q1..q5 and s6"},
        {"pR2", "p3..p15 and s6 composed with R2, in q1..q5 and s6"},
        {"eq1", "f1..f6 in the flat coordinates u1..u6"},
        {"h1", "the potential vector field component h1"},
        {"h2", "the potential vector field component h2"},
        {"h3", "the potential vector field component h3"},
        {"h4", "the potential vector field component h4"},
        {"h5", "the potential vector field component h5"},
        {"h6", "the potential vector field component h6"},
        {"ptilde", "p3..p15 and s6 restricted to x5 = x6 = 1, in r3, r4, r6, r9"},
        {"J", "the restricted invariants J4, J6, J10, J12, J18"},
        {"J_relations", "J24, J30, J42 as polynomials of J4, J6, J10, J12, J18"},
    };
    const auto it = known.find(stem);
    return it == known.end() ? "an unnamed table" : it->second;
}

PolyTable load_named_table(const std::string& stem, const std::filesystem::path& dir)
{
    const auto path = dir / (stem + ".poly");
    try {
        return load_table(path);
    } catch (const std::exception& e) {
        throw std::runtime_error("cannot load table '" + stem + "' (" + table_contents(stem) + ") from " +
                                 path.string() + ": " + e.what());
    }
}

}  // namespace st34
