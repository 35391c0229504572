#include "coxinv/format.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxinv {

namespace {

std::string mono_str(const std::vector<int>& e, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

bool term_less_desc(const RawTerm& x, const RawTerm& y) {
    int tx = std::accumulate(x.exps.begin(), x.exps.end(), 0);
    int ty = std::accumulate(y.exps.begin(), y.exps.end(), 0);
    if (tx != ty) return tx > ty;
    return x.exps > y.exps;
}

}  // namespace

std::string canonical_expr(RawPoly raw) {
    if (raw.terms.empty()) return "0";
    std::sort(raw.terms.begin(), raw.terms.end(), term_less_desc);
    std::string out;
    bool first = true;
    for (const auto& t : raw.terms) {
        const Rat& a = t.c.a;
        const Rat& b = t.c.b;
        std::string mono = mono_str(t.exps, raw.names);
        char sgn;
        std::string body;
        if (a != 0 && b != 0) {
            sgn = '+';
            body = "(" + rat_str(a) + (b > 0 ? "+" : "-") + rat_str(abs(b)) + "*r5)";
            if (!mono.empty()) body += "*" + mono;
        } else if (b != 0) {
            sgn = b < 0 ? '-' : '+';
            Rat m = abs(b);
            body = (m == 1) ? "r5" : rat_str(m) + "*r5";
            if (!mono.empty()) body += "*" + mono;
        } else {
            sgn = a < 0 ? '-' : '+';
            Rat m = abs(a);
            if (!mono.empty() && m == 1)
                body = mono;
            else if (!mono.empty())
                body = rat_str(m) + "*" + mono;
            else
                body = rat_str(m);
        }
        if (first) {
            if (sgn == '-') out += '-';
            out += body;
            first = false;
        } else {
            out += sgn;
            out += body;
        }
    }
    return out;
}

std::string poly_str(const Poly& p) {
    return canonical_expr(poly_to_raw(p));
}

std::string golden_file_str(const GoldenFile& f) {
    std::string out = "ring ";
    for (std::size_t i = 0; i < f.names.size(); ++i) {
        if (i) out += ",";
        out += f.names[i];
    }
    out += "\n";
    for (const auto& e : f.entries) {
        RawPoly rp = e.poly;
        rp.names = f.names;
        out += e.kind + " " + canonical_expr(std::move(rp)) + "\n";
    }
    return out;
}

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& ctx) {
    throw std::invalid_argument("parse error: " + what + " in \"" + ctx + "\"");
}

// One term (no leading sign).  Factors are separated by '*', except that a
// mixed coefficient is parenthesized and may itself contain '*' and signs.
RawTerm parse_term(const std::vector<std::string>& names, const std::string& text) {
    RawTerm t;
    t.exps.assign(names.size(), 0);
    t.c = Golden(1);
    std::string rest = text;
    if (!rest.empty() && rest[0] == '(') {
        auto close = rest.find(')');
        if (close == std::string::npos) bad("unbalanced parenthesis", text);
        t.c = golden_parse(rest.substr(1, close - 1));
        rest = rest.substr(close + 1);
        if (!rest.empty()) {
            if (rest[0] != '*') bad("expected '*' after coefficient", text);
            rest = rest.substr(1);
        }
    }
    if (rest.empty() && text.empty()) bad("empty term", text);
    // Remaining: '*'-separated rational / "r5" / variable factors.
    std::size_t pos = 0;
    bool seen_var = false;
    while (pos < rest.size()) {
        auto star = rest.find('*', pos);
        std::string tok = rest.substr(pos, star == std::string::npos ? std::string::npos
                                                                     : star - pos);
        pos = star == std::string::npos ? rest.size() : star + 1;
        if (tok.empty()) bad("empty factor", text);
        if (tok == "r5") {
            if (seen_var) bad("coefficient after variable", text);
            t.c *= Golden::sqrt5();
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
            if (seen_var) bad("coefficient after variable", text);
            t.c *= Golden(rat_parse(tok));
            continue;
        }
        // variable[^exponent]
        auto caret = tok.find('^');
        std::string vname = tok.substr(0, caret);
        int e = 1;
        if (caret != std::string::npos) {
            try {
                e = std::stoi(tok.substr(caret + 1));
            } catch (...) {
                bad("bad exponent", text);
            }
        }
        auto it = std::find(names.begin(), names.end(), vname);
        if (it == names.end()) bad("unknown variable '" + vname + "'", text);
        t.exps[static_cast<std::size_t>(it - names.begin())] += e;
        seen_var = true;
    }
    return t;
}

}  // namespace

RawPoly parse_expr(const std::vector<std::string>& names, const std::string& expr) {
    RawPoly rp;
    rp.names = names;
    if (expr.empty()) bad("empty expression", expr);
    if (expr == "0") return rp;
    // Split at top-level '+'/'-' (not inside parentheses, not right after '^').
    std::vector<std::pair<int, std::string>> signed_terms;  // sign, text
    int depth = 0;
    int sign = 1;
    std::size_t start = 0;
    if (expr[0] == '-') {
        sign = -1;
        start = 1;
    } else if (expr[0] == '+') {
        start = 1;
    }
    std::size_t tstart = start;
    for (std::size_t i = start; i <= expr.size(); ++i) {
        if (i < expr.size()) {
            char ch = expr[i];
            if (ch == '(') {
                ++depth;
                continue;
            }
            if (ch == ')') {
                if (--depth < 0) bad("unbalanced parenthesis", expr);
                continue;
            }
            bool splitter = (ch == '+' || ch == '-') && depth == 0 && i > tstart &&
                            expr[i - 1] != '^';
            if (!splitter) continue;
        }
        signed_terms.emplace_back(sign, expr.substr(tstart, i - tstart));
        if (i < expr.size()) {
            sign = expr[i] == '-' ? -1 : 1;
            tstart = i + 1;
        }
    }
    if (depth != 0) bad("unbalanced parenthesis", expr);
    for (auto& [sg, text] : signed_terms) {
        if (text.empty()) bad("empty term", expr);
        RawTerm t = parse_term(names, text);
        if (sg < 0) t.c = -t.c;
        if (!t.c.is_zero()) rp.terms.push_back(std::move(t));
    }
    return rp;
}

GoldenFile parse_golden_file(const std::string& text) {
    GoldenFile f;
    std::istringstream in(text);
    std::string line;
    bool have_ring = false;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto sp = line.find(' ');
        if (sp == std::string::npos) bad("missing space after keyword", line);
        std::string kw = line.substr(0, sp);
        std::string rest = line.substr(sp + 1);
        if (kw == "ring") {
            if (have_ring) bad("duplicate ring line", line);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                auto comma = rest.find(',', pos);
                std::string nm = rest.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                if (nm.empty()) bad("empty variable name", line);
                f.names.push_back(nm);
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            have_ring = true;
        } else if (kw == "poly" || kw == "form") {
            if (!have_ring) bad("entry before ring line", line);
            f.entries.push_back({kw, parse_expr(f.names, rest)});
        } else {
            bad("unknown keyword '" + kw + "'", line);
        }
    }
    if (!have_ring) bad("missing ring line", text.substr(0, 40));
    return f;
}

Poly raw_to_poly(const RingPtr& ring, const RawPoly& raw) {
    if (ring->names != raw.names)
        throw std::invalid_argument("ring names do not match data");
    Poly p(ring);
    for (const auto& t : raw.terms) {
        for (int e : t.exps)
            if (e < 0)
                throw std::invalid_argument(
                    "negative exponent; this datum is Laurent and needs a "
                    "localized carrier");
        p.add_term(key_pack(t.exps), t.c);
    }
    return p;
}

RawPoly poly_to_raw(const Poly& p) {
    RawPoly rp;
    rp.names = p.ring() ? p.ring()->names : std::vector<std::string>{};
    for (const auto& [k, c] : p.terms())
        rp.terms.push_back({key_unpack(k, p.nvars()), c});
    return rp;
}

std::string poly_json(const RawPoly& raw) {
    RawPoly sorted = raw;
    std::sort(sorted.terms.begin(), sorted.terms.end(), term_less_desc);
    nlohmann::json j;
    j["ring"] = sorted.names;
    j["terms"] = nlohmann::json::array();
    for (const auto& t : sorted.terms) {
        nlohmann::json jt;
        jt["exp"] = t.exps;
        jt["a"] = rat_str(t.c.a);
        jt["b"] = rat_str(t.c.b);
        j["terms"].push_back(jt);
    }
    return j.dump();
}

std::string poly_json(const Poly& p) {
    return poly_json(poly_to_raw(p));
}

}  // namespace coxinv
