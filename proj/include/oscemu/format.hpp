#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace oscemu {

// Shortest round-trip decimal form of a double, matching the common
// repr conventions: fixed notation for mid-range exponents, scientific
// with a signed two-digit exponent otherwise.
inline std::string repr_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, res.ptr);
    auto epos = s.find('e');
    if (epos == std::string::npos) {
        if (s.find('.') == std::string::npos && s.find("inf") == std::string::npos &&
            s.find("nan") == std::string::npos)
            s += ".0";
        return s;
    }
    // normalize exponent to sign + at least two digits
    std::string mant = s.substr(0, epos);
    std::string exp = s.substr(epos + 1);
    bool neg = false;
    if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
        neg = exp[0] == '-';
        exp.erase(0, 1);
    }
    while (exp.size() < 2) exp.insert(0, "0");
    if (mant.find('.') == std::string::npos) mant += ".0";
    return mant + "e" + (neg ? "-" : "+") + exp;
}

}  // namespace oscemu
