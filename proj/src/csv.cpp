#include "vrsmooth/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string_view>

namespace vrsmooth::csv {
namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_number(std::string_view s, double& out) {
    s = trim(s);
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "NA";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Dataset read_xy(std::istream& in) {
    std::vector<double> xs;
    std::vector<double> ys;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto comma = t.find(',');
        double x = 0.0;
        double y = 0.0;
        if (comma == std::string_view::npos || t.find(',', comma + 1) != std::string_view::npos ||
            !parse_number(t.substr(0, comma), x) || !parse_number(t.substr(comma + 1), y)) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected two numeric columns 'x,y'");
        }
        xs.push_back(x);
        ys.push_back(y);
    }
    if (xs.empty()) throw std::invalid_argument("no observations in input");
    return Dataset(std::move(xs), std::move(ys));
}

}  // namespace vrsmooth::csv
