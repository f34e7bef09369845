#ifndef ST34_POLY_IO_HPP
#define ST34_POLY_IO_HPP

#include "st34/polynomial.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace st34 {

/// Parse failure with a 1-based position in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          source_(std::move(source)), line_(line), column_(column) {}
    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string source_;
    std::size_t line_;
    std::size_t column_;
};

/// Canonical text: descending graded-lex terms, "c*x^e*y" factors, unit
/// coefficients omitted, "0" for the zero polynomial.
std::string to_string(const Polynomial<Rational>& p);
std::string to_string(const Polynomial<QOmega>& p);

/// Canonical text broken into lines of at most `width` columns.
std::string to_wrapped_string(const Polynomial<Rational>& p, std::size_t width = 100, std::string_view indent = "  ");

/// Parses sums of terms with rational coefficients. Terms may appear in any
/// order; a repeated monomial is an error.
Polynomial<Rational> parse_polynomial(std::string_view text, const VarList& vars, const std::string& source = "<input>");

/// A transcribed table: "# ..." comments, then entries "name = polynomial;".
/// Each "@vars" line sets the variables of the entries that follow it; `vars`
/// is the first such list.
struct PolyTable {
    std::filesystem::path path;
    std::string description;
    VarList vars;
    std::vector<std::pair<std::string, Polynomial<Rational>>> entries;

    const Polynomial<Rational>& get(const std::string& name) const;
    bool contains(const std::string& name) const;
};

PolyTable parse_table(std::string_view text, const std::string& source);
PolyTable load_table(const std::filesystem::path& path);
std::string format_table(const PolyTable& table);

/// Directory holding the transcribed tables: ST34_TABLES if set, otherwise
/// the directory configured at build time.
std::filesystem::path default_tables_dir();
/// Human description of what a shipped table transcribes.
std::string table_contents(const std::string& stem);

/// load_table(dir / (stem + ".poly")); errors name the table and its contents.
PolyTable load_named_table(const std::string& stem, const std::filesystem::path& dir = default_tables_dir());

}  // namespace st34

#endif  // ST34_POLY_IO_HPP
