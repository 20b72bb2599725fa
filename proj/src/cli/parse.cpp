#include "slicenum/cli/parse.hpp"

#include "slicenum/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace slicenum::cli {

namespace {

class PolyParser {
  public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    LaurentPoly parse() {
        LaurentPoly out;
        skip_ws();
        if (at_end())
            fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            out += term(sign);
            first = false;
            skip_ws();
        }
        return out;
    }

  private:
    LaurentPoly term(int sign) {
        BigInt coeff = 1;
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = digits();
            have_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || peek() != 't')
                    fail("expected 't' after '*'");
            }
        }
        LaurentPoly::Exponent e = 0;
        if (!at_end() && peek() == 't') {
            ++pos_;
            e = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                int esign = 1;
                if (!at_end() && (peek() == '-' || peek() == '+')) {
                    esign = peek() == '-' ? -1 : 1;
                    ++pos_;
                    skip_ws();
                }
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected an exponent");
                const std::size_t at = pos_;
                const BigInt v = digits();
                if (!v.fits_slong_p())
                    throw SyntaxError("exponent out of range", at);
                e = esign * v.get_si();
            }
        } else if (!have_coeff) {
            fail("expected a coefficient or 't'");
        }
        return LaurentPoly::monomial(sign * coeff, e);
    }

    BigInt digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    [[noreturn]] void fail(const std::string &msg) const {
        throw SyntaxError(msg + " at position " + std::to_string(pos_), pos_);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool is_integer_token(std::string_view tok) {
    if (!tok.empty() && (tok.front() == '-' || tok.front() == '+'))
        tok.remove_prefix(1);
    if (tok.empty())
        return false;
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

BigInt to_bigint(std::string_view tok) {
    if (!tok.empty() && tok.front() == '+')
        tok.remove_prefix(1);
    return BigInt(std::string(tok));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

} // namespace

LaurentPoly parse_polynomial(std::string_view s) { return PolyParser(s).parse(); }

std::string format_polynomial(const LaurentPoly &p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto &[e, c] = *it;
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const BigInt mag = abs(c);
        if (mag != 1 || e == 0)
            out += mag.get_str();
        if (e == 1)
            out += "t";
        else if (e != 0)
            out += "t^" + std::to_string(e);
        first = false;
    }
    return out;
}

IntMatrix parse_matrix(std::string_view s) {
    std::vector<std::vector<BigInt>> rows;
    std::size_t line_no = 0;
    std::size_t last_line = 0;
    for (std::string_view line : split(s, '\n')) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#')
            continue;
        std::vector<BigInt> row;
        std::istringstream is{std::string(line)};
        std::string tok;
        while (is >> tok) {
            if (!is_integer_token(tok))
                throw SyntaxError("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer", line_no);
            row.push_back(to_bigint(tok));
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw SyntaxError("line " + std::to_string(line_no) + ": expected " + std::to_string(rows.front().size()) +
                                  " entries, found " + std::to_string(row.size()),
                              line_no);
        rows.push_back(std::move(row));
        last_line = line_no;
    }
    if (rows.empty())
        throw SyntaxError("matrix has no rows", last_line + 1);
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

IntMatrix read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

Fraction parse_fraction(std::string_view s) {
    s = trim(s);
    const auto slash = s.find('/');
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!is_integer_token(num) || !is_integer_token(den))
        throw SyntaxError("'" + std::string(s) + "' is not a fraction", 0);
    const BigInt d = to_bigint(den);
    if (d == 0)
        throw SyntaxError("'" + std::string(s) + "' has a zero denominator", slash);
    return make_fraction(to_bigint(num), d);
}

std::vector<std::int64_t> parse_int_list(std::string_view s) {
    std::vector<std::int64_t> out;
    std::size_t offset = 0;
    for (std::string_view tok : split(s, ',')) {
        const std::string_view t = trim(tok);
        if (!is_integer_token(t))
            throw SyntaxError("'" + std::string(t) + "' is not an integer", offset);
        const BigInt v = to_bigint(t);
        if (!v.fits_slong_p())
            throw SyntaxError("'" + std::string(t) + "' is out of range", offset);
        out.push_back(v.get_si());
        offset += tok.size() + 1;
    }
    return out;
}

std::vector<std::vector<Fraction>> parse_gram(std::string_view s) {
    std::vector<std::vector<Fraction>> gram;
    for (std::string_view row_text : split(s, ';')) {
        std::string row_str(row_text);
        for (char &c : row_str)
            if (c == ',')
                c = ' ';
        std::istringstream is(row_str);
        std::vector<Fraction> row;
        std::string tok;
        while (is >> tok)
            row.push_back(parse_fraction(tok));
        gram.push_back(std::move(row));
    }
    return gram;
}

std::string format_element(const Element &x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i)
        s += (i ? ", " : "") + std::to_string(x[i]);
    return s + ")";
}

} // namespace slicenum::cli
