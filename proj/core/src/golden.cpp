#include "coxinv/golden.hpp"

#include <cstddef>
#include <stdexcept>

namespace coxinv {

Golden Golden::inv() const {
    Rat n = norm();
    if (n == 0) {
        if (is_zero()) throw std::domain_error("division by zero in Q(sqrt5)");
        // a^2 = 5 b^2 with (a,b) != 0 is impossible over Q (5 is not a square),
        // so a zero norm implies a zero element.
        throw std::domain_error("zero norm for nonzero element (unreachable)");
    }
    return Golden(a / n, -b / n);
}

std::string Golden::str() const {
    if (b == 0) return rat_str(a);
    std::string r5part = (b == 1)    ? "r5"
                         : (b == -1) ? "-r5"
                                     : rat_str(b) + "*r5";
    if (a == 0) return r5part;
    std::string out = rat_str(a);
    if (b > 0) out += "+";
    // negative b carries its own sign via rat_str
    if (b == 1)
        out += "r5";
    else if (b == -1)
        out += "-r5";
    else
        out += rat_str(b) + "*r5";
    return out;
}

namespace {

// Split "X" or "X*r5" or "r5" into a rational literal and an r5 flag.
// Returns false on malformed input.
bool parse_part(const std::string& s, Rat& val, bool& is_r5) {
    if (s == "r5") {
        val = 1;
        is_r5 = true;
        return true;
    }
    if (s == "-r5") {
        val = -1;
        is_r5 = true;
        return true;
    }
    std::string t = s;
    is_r5 = false;
    if (t.size() > 3 && t.compare(t.size() - 3, 3, "*r5") == 0) {
        is_r5 = true;
        t = t.substr(0, t.size() - 3);
    }
    try {
        val = rat_parse(t);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

}  // namespace

Golden golden_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty field-element literal");
    // Split on '+' or '-' at positions > 0 that are not part of an exponent or
    // leading sign; the canonical form has at most two parts.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' &&
            s[i - 1] != '-')
            split = i;  // last such sign starts the r5 part
    }
    Rat a(0), b(0);
    bool ok = true;
    if (split == std::string::npos) {
        Rat v;
        bool r5;
        ok = parse_part(s, v, r5);
        if (ok) (r5 ? b : a) = v;
    } else {
        std::string first = s.substr(0, split);
        std::string second = s.substr(split);  // keeps its sign
        if (second[0] == '+') second = second.substr(1);
        Rat v1, v2;
        bool r51, r52;
        ok = parse_part(first, v1, r51) && parse_part(second, v2, r52) &&
             !r51 && r52;
        if (ok) {
            a = v1;
            b = v2;
        }
    }
    if (!ok) throw std::invalid_argument("bad field-element literal: " + s);
    return Golden(a, b);
}

}  // namespace coxinv
