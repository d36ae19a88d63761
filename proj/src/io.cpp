#include "qeuler/io.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "qeuler/errors.hpp"

namespace qeuler {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) fail(errc::invalid_request, "unformattable double");
    return std::string(buf, ptr);
}

std::string to_json(const ResultRecord& rec) {
    nlohmann::json j; // object keys serialize sorted
    j["family"] = rec.family;
    j["n"] = rec.n;
    j["x"] = rec.x;
    j["q"] = rec.q;
    j["method"] = rec.method;
    j["exact"] = rec.exact;
    if (rec.exact) {
        j["value"] = rec.value;
    } else {
        j["re"] = rec.re;
        j["im"] = rec.im;
        j["error_bound"] = rec.error_bound;
    }
    return j.dump();
}

std::string csv_header() { return "family,n,x,q,method,exact,value,re,im,error_bound"; }

std::string to_csv(const ResultRecord& rec) {
    std::ostringstream os;
    os << '"' << rec.family << "\"," << rec.n << ',' << rec.x << ',' << rec.q << ','
       << rec.method << ',' << (rec.exact ? "true" : "false") << ',';
    if (rec.exact)
        os << rec.value << ",,,";
    else
        os << ',' << format_double(rec.re) << ',' << format_double(rec.im) << ','
           << format_double(rec.error_bound);
    return os.str();
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

long long parse_ll(const std::string& text) {
    try {
        size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        fail(errc::invalid_request, "bad integer '" + text + "'");
    }
}

} // namespace

std::vector<long long> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        long long lo = parse_ll(text.substr(0, dots));
        long long hi = parse_ll(text.substr(dots + 2));
        if (hi < lo || hi - lo > 1'000'000)
            fail(errc::invalid_request, "bad range '" + text + "'");
        std::vector<long long> out;
        for (long long v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::vector<long long> out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_ll(tok));
    if (out.empty()) fail(errc::invalid_request, "empty integer list");
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    for (const auto& tok : split(text, ',')) out.push_back(rat_parse(tok));
    if (out.empty()) fail(errc::invalid_request, "empty rational list");
    return out;
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_ll(tok));
    if (out.empty()) fail(errc::invalid_request, "empty integer list");
    return out;
}

std::complex<double> parse_complex(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.empty() || parts.size() > 2)
        fail(errc::invalid_request, "complex format is re or re,im");
    try {
        size_t used = 0;
        double re = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
        double im = 0.0;
        if (parts.size() == 2) {
            double v = std::stod(parts[1], &used);
            if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
            im = v;
        }
        return {re, im};
    } catch (const std::exception&) {
        fail(errc::invalid_request, "bad complex number '" + text + "'");
    }
}

} // namespace qeuler
