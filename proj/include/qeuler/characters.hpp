#ifndef QEULER_CHARACTERS_HPP
#define QEULER_CHARACTERS_HPP

#include <string>
#include <vector>

#include "qeuler/approx.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

// A character value: zero, or the root of unity e^{2 pi i exponent/order}
// kept in lowest terms (order 1 is the value 1, order 2 the value -1).
struct CharValue {
    long long order = 0; // 0 encodes the value zero
    long long exponent = 0;

    bool is_zero() const { return order == 0; }
    bool is_real() const { return order <= 2; }
    bool operator==(const CharValue&) const = default;
};

CharValue char_value_zero();
CharValue char_value_root(long long order, long long exponent);
CharValue char_value_of_int(long long v); // v in {-1, 0, 1}
CharValue char_value_mul(const CharValue& a, const CharValue& b);

class DirichletCharacter {
  public:
    long long conductor() const { return f_; }
    const CharValue& entry(long long m) const;
    bool real_valued() const { return real_; }
    bool principal() const;

    Rat evaluate_exact(long long m) const;  // NonRealValueInExactMode for higher order
    Approx evaluate_float(long long m) const;

  private:
    DirichletCharacter(long long f, std::vector<CharValue> values);
    long long f_ = 1;
    std::vector<CharValue> values_;
    bool real_ = true;

    friend DirichletCharacter character_from_table(long long f, std::vector<CharValue> values);
};

// Validates support, chi(1)=1 and full multiplicativity (O(f^2)).
DirichletCharacter character_from_table(long long f, std::vector<CharValue> values);

// Trivial character mod 1 (constant 1).
DirichletCharacter trivial_character();

// Jacobi-symbol character m -> (m|f), f odd squarefree > 1.
DirichletCharacter quadratic_character(long long f);

long long jacobi_symbol(long long a, long long n);

// CLI format: "quad:<f>" or "f:v0,v1,..." with entries 0, 1, -1 or w<order>^<exp>.
DirichletCharacter parse_character(const std::string& text);
std::string format_character(const DirichletCharacter& chi);

} // namespace qeuler

#endif
