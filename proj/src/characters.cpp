#include "qeuler/characters.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "qeuler/errors.hpp"

namespace qeuler {

CharValue char_value_zero() { return CharValue{0, 0}; }

CharValue char_value_root(long long order, long long exponent) {
    if (order <= 0) fail(errc::invalid_request, "root of unity needs a positive order");
    exponent %= order;
    if (exponent < 0) exponent += order;
    if (exponent == 0) return CharValue{1, 0};
    long long g = std::gcd(exponent, order);
    return CharValue{order / g, exponent / g};
}

CharValue char_value_of_int(long long v) {
    if (v == 0) return char_value_zero();
    if (v == 1) return CharValue{1, 0};
    if (v == -1) return CharValue{2, 1};
    fail(errc::invalid_request, "integer character entries must be -1, 0 or 1");
}

CharValue char_value_mul(const CharValue& a, const CharValue& b) {
    if (a.is_zero() || b.is_zero()) return char_value_zero();
    long long L = std::lcm(a.order, b.order);
    long long e = a.exponent * (L / a.order) + b.exponent * (L / b.order);
    return char_value_root(L, e);
}

DirichletCharacter::DirichletCharacter(long long f, std::vector<CharValue> values)
    : f_(f), values_(std::move(values)) {
    real_ = true;
    for (const auto& v : values_)
        if (!v.is_real()) { real_ = false; break; }
}

const CharValue& DirichletCharacter::entry(long long m) const {
    long long r = m % f_;
    if (r < 0) r += f_;
    return values_[static_cast<size_t>(r)];
}

bool DirichletCharacter::principal() const {
    for (const auto& v : values_)
        if (!v.is_zero() && v != CharValue{1, 0}) return false;
    return true;
}

Rat DirichletCharacter::evaluate_exact(long long m) const {
    const CharValue& v = entry(m);
    if (v.is_zero()) return Rat(0);
    if (v.order == 1) return Rat(1);
    if (v.order == 2) return Rat(-1);
    fail(errc::non_real_value_in_exact_mode,
         "character value of order " + std::to_string(v.order) + " requested in exact mode");
}

Approx DirichletCharacter::evaluate_float(long long m) const {
    const CharValue& v = entry(m);
    if (v.is_zero()) return approx_exact(0.0);
    if (v.order == 1) return approx_exact(1.0);
    if (v.order == 2) return approx_exact(-1.0);
    if (v.order == 4) // exact axis values, cos/sin would leave residue
        return Approx(std::complex<double>(0.0, v.exponent == 1 ? 1.0 : -1.0), 0.0);
    double theta = 2.0 * std::acos(-1.0) * static_cast<double>(v.exponent) /
                   static_cast<double>(v.order);
    return Approx(std::complex<double>(std::cos(theta), std::sin(theta)), 4.0 * detail::kEps);
}

DirichletCharacter character_from_table(long long f, std::vector<CharValue> values) {
    if (f <= 0) fail(errc::invalid_request, "conductor must be positive");
    if (f % 2 == 0) fail(errc::even_conductor, "conductor " + std::to_string(f) + " is even");
    if (static_cast<long long>(values.size()) != f)
        fail(errc::invalid_request, "value table size does not match the conductor");
    for (long long m = 0; m < f; ++m) {
        bool unit = std::gcd(m, f) == 1;
        if (unit && values[static_cast<size_t>(m)].is_zero())
            fail(errc::wrong_support, "zero value at unit residue " + std::to_string(m));
        if (!unit && !values[static_cast<size_t>(m)].is_zero())
            fail(errc::wrong_support, "nonzero value at non-unit residue " + std::to_string(m));
    }
    if (values[static_cast<size_t>(1 % f)] != CharValue{1, 0})
        fail(errc::not_multiplicative, "chi(1) != 1");
    for (long long a = 0; a < f; ++a)
        for (long long b = a; b < f; ++b) {
            CharValue lhs = values[static_cast<size_t>((a * b) % f)];
            CharValue rhs = char_value_mul(values[static_cast<size_t>(a)],
                                           values[static_cast<size_t>(b)]);
            if (lhs != rhs)
                fail(errc::not_multiplicative,
                     "chi(" + std::to_string(a) + ")*chi(" + std::to_string(b) +
                         ") != chi(" + std::to_string(a * b % f) + ")");
        }
    return DirichletCharacter(f, std::move(values));
}

DirichletCharacter trivial_character() {
    return character_from_table(1, {CharValue{1, 0}});
}

long long jacobi_symbol(long long a, long long n) {
    if (n <= 0 || n % 2 == 0) fail(errc::invalid_request, "Jacobi symbol needs odd positive n");
    a %= n;
    if (a < 0) a += n;
    long long result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

DirichletCharacter quadratic_character(long long f) {
    if (f <= 1) fail(errc::invalid_request, "quadratic character needs f > 1");
    if (f % 2 == 0) fail(errc::even_conductor, "conductor " + std::to_string(f) + " is even");
    for (long long d = 3; d * d <= f; d += 2)
        if (f % (d * d) == 0)
            fail(errc::not_squarefree, std::to_string(f) + " is divisible by " + std::to_string(d * d));
    std::vector<CharValue> values;
    values.reserve(static_cast<size_t>(f));
    for (long long m = 0; m < f; ++m) values.push_back(char_value_of_int(jacobi_symbol(m, f)));
    return character_from_table(f, std::move(values));
}

namespace {

CharValue parse_entry(const std::string& tok) {
    if (tok == "0") return char_value_zero();
    if (tok == "1") return CharValue{1, 0};
    if (tok == "-1") return CharValue{2, 1};
    if (!tok.empty() && tok[0] == 'w') {
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            try {
                long long order = std::stoll(tok.substr(1, caret - 1));
                long long exp = std::stoll(tok.substr(caret + 1));
                return char_value_root(order, exp);
            } catch (const std::exception&) {
            }
        }
    }
    fail(errc::invalid_request, "bad character entry '" + tok + "'");
}

} // namespace

DirichletCharacter parse_character(const std::string& text) {
    if (text == "trivial") return trivial_character();
    auto colon = text.find(':');
    if (colon == std::string::npos)
        fail(errc::invalid_request, "character format is trivial, quad:<f> or f:v0,v1,...");
    std::string head = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    if (head == "quad") {
        try {
            return quadratic_character(std::stoll(rest));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail(errc::invalid_request, "bad conductor in '" + text + "'");
        }
    }
    long long f = 0;
    try {
        f = std::stoll(head);
    } catch (const std::exception&) {
        fail(errc::invalid_request, "bad conductor in '" + text + "'");
    }
    std::vector<CharValue> values;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) values.push_back(parse_entry(tok));
    return character_from_table(f, std::move(values));
}

std::string format_character(const DirichletCharacter& chi) {
    std::ostringstream out;
    out << chi.conductor() << ':';
    for (long long m = 0; m < chi.conductor(); ++m) {
        if (m) out << ',';
        const CharValue& v = chi.entry(m);
        if (v.is_zero()) out << '0';
        else if (v.order == 1) out << '1';
        else if (v.order == 2) out << "-1";
        else out << 'w' << v.order << '^' << v.exponent;
    }
    return out.str();
}

} // namespace qeuler

