#include <doctest.h>

#include <complex>

#include "qeuler/characters.hpp"

using namespace qeuler;

TEST_CASE("table construction rejects malformed input") {
    // Even conductor.
    CHECK_THROWS_AS(character_from_table(2, {char_value_of_int(0), char_value_of_int(1)}), Error);
    try {
        character_from_table(2, {char_value_of_int(0), char_value_of_int(1)});
    } catch (const Error& e) {
        CHECK(e.code() == errc::even_conductor);
    }

    // Nonzero on a non-unit: f = 3 with chi(0) = 1.
    try {
        character_from_table(3, {char_value_of_int(1), char_value_of_int(1), char_value_of_int(1)});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::wrong_support);
    }

    // Not multiplicative: f = 5, chi(2) = 1 but chi(4) = -1.
    try {
        character_from_table(5, {char_value_of_int(0), char_value_of_int(1), char_value_of_int(1),
                                 char_value_of_int(1), char_value_of_int(-1)});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_multiplicative);
    }
}

TEST_CASE("quadratic character facts") {
    CHECK_THROWS_AS(quadratic_character(9), Error);
    CHECK_THROWS_AS(quadratic_character(45), Error);
    try {
        quadratic_character(9);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_squarefree);
    }

    DirichletCharacter q3 = quadratic_character(3);
    CHECK(q3.conductor() == 3);
    CHECK(q3.real_valued());
    CHECK(!q3.principal());
    CHECK(q3.evaluate_exact(1) == Rat(1));
    CHECK(q3.evaluate_exact(2) == Rat(-1));
    CHECK(q3.evaluate_exact(3) == Rat(0));
    CHECK(q3.evaluate_exact(4) == Rat(1)); // periodicity
    CHECK(q3.evaluate_exact(-1) == Rat(-1));

    // Jacobi symbol mod 15 = (a|3)(a|5): 2 is a non-residue mod both.
    DirichletCharacter q15 = quadratic_character(15);
    CHECK(q15.evaluate_exact(2) == Rat(1));
    CHECK(jacobi_symbol(2, 15) == 1);
    CHECK(jacobi_symbol(2, 3) == -1);
    CHECK(jacobi_symbol(2, 5) == -1);
    CHECK(jacobi_symbol(10, 15) == 0);
}

TEST_CASE("orthogonality over a period") {
    for (long long f : {3, 5, 7, 15}) {
        DirichletCharacter chi = quadratic_character(f);
        Rat total = 0;
        for (long long a = 0; a < f; ++a) total += chi.evaluate_exact(a);
        CHECK(total == Rat(0));
    }
    // The trivial character sums to its conductor instead.
    DirichletCharacter triv = trivial_character();
    CHECK(triv.conductor() == 1);
    CHECK(triv.principal());
    CHECK(triv.evaluate_exact(0) == Rat(1));
    CHECK(triv.evaluate_exact(41) == Rat(1));
}

TEST_CASE("higher-order characters are float-only") {
    // Order-4 character mod 5 generated by chi(2) = i.
    DirichletCharacter chi = character_from_table(
        5, {char_value_zero(), char_value_root(4, 0), char_value_root(4, 1), char_value_root(4, 3),
            char_value_root(4, 2)});
    CHECK(!chi.real_valued());
    CHECK_THROWS_AS(chi.evaluate_exact(2), Error);
    try {
        chi.evaluate_exact(2);
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_real_value_in_exact_mode);
    }
    std::complex<double> v = chi.evaluate_float(2).z;
    CHECK(std::abs(v - std::complex<double>(0.0, 1.0)) < 1e-14);
    std::complex<double> v4 = chi.evaluate_float(4).z;
    CHECK(std::abs(v4 - std::complex<double>(-1.0, 0.0)) < 1e-14);

    // Orthogonality still holds in float form.
    std::complex<double> total = 0.0;
    for (long long a = 0; a < 5; ++a) total += chi.evaluate_float(a).z;
    CHECK(std::abs(total) < 1e-13);
}

TEST_CASE("parse and format round trips") {
    for (const char* text : {"trivial", "quad:3", "quad:15", "3:0,1,-1"}) {
        DirichletCharacter chi = parse_character(text);
        DirichletCharacter back = parse_character(format_character(chi));
        CHECK(back.conductor() == chi.conductor());
        for (long long a = 0; a < chi.conductor(); ++a) CHECK(back.entry(a) == chi.entry(a));
    }
    DirichletCharacter ord4 = parse_character("5:0,1,w4^1,w4^3,w4^2");
    CHECK(!ord4.real_valued());
    DirichletCharacter back = parse_character(format_character(ord4));
    for (long long a = 0; a < 5; ++a) CHECK(back.entry(a) == ord4.entry(a));

    CHECK_THROWS_AS(parse_character(""), Error);
    CHECK_THROWS_AS(parse_character("quad:4"), Error);
    CHECK_THROWS_AS(parse_character("3:0,1"), Error);
    CHECK_THROWS_AS(parse_character("banana"), Error);
}
