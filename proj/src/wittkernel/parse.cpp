#include "wittkernel/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <vector>

namespace wk {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int64_t scan_integer(const std::string& token, const std::string& what) {
    if (token.empty()) throw ParseError("empty " + what);
    std::size_t i = token[0] == '-' ? 1 : 0;
    if (i == token.size())
        throw ParseError("invalid " + what + " '" + token + "'");
    for (std::size_t j = i; j < token.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(token[j])))
            throw ParseError("invalid " + what + " '" + token + "'");
    // reject values that do not fit in 64 bits
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(token.c_str(), &end, 10);
    if (errno != 0 || end != token.c_str() + token.size())
        throw ParseError("integer out of range '" + token + "'");
    return v;
}

} // namespace

int64_t parse_integer(const std::string& token) {
    return scan_integer(strip_spaces(token), "integer");
}

Rational parse_rational(const std::string& raw) {
    std::string token = strip_spaces(raw);
    std::vector<std::string> parts = split(token, '/');
    if (parts.size() > 2) throw ParseError("invalid rational '" + raw + "'");
    int64_t num = scan_integer(parts[0], "rational");
    int64_t den = 1;
    if (parts.size() == 2) {
        den = scan_integer(parts[1], "rational");
        if (den <= 0) throw ParseError("invalid rational '" + raw + "': denominator must be positive");
    }
    return Rational(num, den);
}

QuadraticForm parse_form(const std::string& raw) {
    std::string text = strip_spaces(raw);
    if (text.empty()) throw ParseError("empty form");
    std::vector<Rational> coeffs;
    for (const std::string& tok : split(text, ',')) {
        if (tok.empty()) throw ParseError("invalid form '" + raw + "': empty coefficient");
        coeffs.push_back(parse_rational(tok));
        if (coeffs.back().is_zero())
            throw DomainError("degenerate form '" + raw + "': zero coefficient");
    }
    return QuadraticForm(std::move(coeffs));
}

PlaceQ parse_place(const std::string& raw) {
    std::string token = strip_spaces(raw);
    if (token == "inf") return PlaceQ::real();
    int64_t p = scan_integer(token, "place");
    if (!is_prime(p)) throw ParseError("invalid place '" + raw + "': not a prime");
    return PlaceQ::prime(p);
}

BrauerClassQ parse_brauer_class(const std::string& raw) {
    std::string text = strip_spaces(raw);
    if (text.empty()) throw ParseError("empty Brauer class");
    if (text == "0") return BrauerClassQ();
    std::vector<BrauerClassQ::Entry> entries;
    for (const std::string& tok : split(text, ',')) {
        std::vector<std::string> kv = split(tok, ':');
        if (kv.size() != 2)
            throw ParseError("invalid Brauer invariant '" + tok + "': expected place:value");
        entries.emplace_back(parse_place(kv[0]), parse_rational(kv[1]));
    }
    return BrauerClassQ::from_invariants(std::move(entries));
}

bool parse_bool(const std::string& raw) {
    std::string token = strip_spaces(raw);
    if (token == "true") return true;
    if (token == "false") return false;
    throw ParseError("invalid boolean '" + raw + "': expected true or false");
}

} // namespace wk
