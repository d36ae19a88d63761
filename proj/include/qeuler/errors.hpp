#ifndef QEULER_ERRORS_HPP
#define QEULER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qeuler {

// Every failure mode the library can signal. Names match the error
// contracts of the individual operations.
enum class errc {
    non_integer_exponent_in_exact_mode,
    q_equals_one_in_exact_mode,
    q_equals_minus_one,
    non_unit_division,
    no_convergence,
    even_conductor,
    not_multiplicative,
    wrong_support,
    not_squarefree,
    non_real_value_in_exact_mode,
    vanishing_pochhammer_factor,
    series_not_convergent,
    convergence_budget_exceeded,
    invalid_request,
    quadrature_failure,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_integer_exponent_in_exact_mode: return "NonIntegerExponentInExactMode";
        case errc::q_equals_one_in_exact_mode: return "QEqualsOneInExactMode";
        case errc::q_equals_minus_one: return "QEqualsMinusOne";
        case errc::non_unit_division: return "NonUnitDivision";
        case errc::no_convergence: return "NoConvergence";
        case errc::even_conductor: return "EvenConductor";
        case errc::not_multiplicative: return "NotMultiplicative";
        case errc::wrong_support: return "WrongSupport";
        case errc::not_squarefree: return "NotSquarefree";
        case errc::non_real_value_in_exact_mode: return "NonRealValueInExactMode";
        case errc::vanishing_pochhammer_factor: return "VanishingPochhammerFactor";
        case errc::series_not_convergent: return "SeriesNotConvergent";
        case errc::convergence_budget_exceeded: return "ConvergenceBudgetExceeded";
        case errc::invalid_request: return "InvalidRequest";
        case errc::quadrature_failure: return "QuadratureFailure";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
    throw Error(code, detail);
}

} // namespace qeuler

#endif
