#ifndef QEULER_IO_HPP
#define QEULER_IO_HPP

#include <complex>
#include <string>
#include <vector>

#include "qeuler/rational.hpp"

namespace qeuler {

// One evaluation for machine-readable output. Exact results carry a
// rational value string; float results carry re/im and an error bound.
struct ResultRecord {
    std::string family;
    long long n = 0;
    std::string x;
    std::string q;
    std::string method;
    bool exact = false;
    std::string value;
    double re = 0.0;
    double im = 0.0;
    double error_bound = 0.0;
};

// Single JSON line, keys in a fixed (alphabetical) order so identical
// computations serialize identically.
std::string to_json(const ResultRecord& rec);
std::string csv_header();
std::string to_csv(const ResultRecord& rec);

// "2", "0..4", or "1,3,5".
std::vector<long long> parse_range(const std::string& text);
// Comma-separated rationals: "1/2,2/3,1".
std::vector<Rat> parse_rat_list(const std::string& text);
std::vector<long long> parse_int_list(const std::string& text);
// "1.5" or "1.5,-0.25" as re[,im].
std::complex<double> parse_complex(const std::string& text);

std::string format_double(double v); // shortest round-trip decimal

} // namespace qeuler

#endif
