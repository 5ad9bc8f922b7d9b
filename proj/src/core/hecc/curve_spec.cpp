#include "hecc/curve_spec.hpp"

#include <map>
#include <sstream>

#include "hecc/literals.hpp"

namespace hecc {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

// split a bracketed list "[a, b, (c, d)]" into top-level items
std::vector<std::string> list_items(const std::string& raw, int line_no) {
    std::string s = strip(raw);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("expected a [...] list", line_no);
    s = s.substr(1, s.size() - 2);
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            if (!strip(cur).empty()) out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!strip(cur).empty()) out.push_back(strip(cur));
    return out;
}

} // namespace

CurveSpec CurveSpec::parse(const std::string& text) {
    std::map<std::string, std::pair<std::string, int>> kv;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", line_no);
        const std::string key = strip(line.substr(0, eq));
        const std::string val = strip(line.substr(eq + 1));
        if (kv.count(key)) throw ParseError("duplicate key '" + key + "'", line_no);
        kv[key] = {val, line_no};
    }

    if (!kv.count("field")) throw ParseError("missing 'field'");
    if (!kv.count("f")) throw ParseError("missing 'f'");

    CurveSpec spec;
    spec.field = Field::parse(unquote(kv["field"].first));
    for (const std::string& item : list_items(kv["f"].first, kv["f"].second))
        spec.f_coeffs.push_back(parse_field_literal(spec.field, item));

    if (kv.count("hints")) {
        for (const std::string& item : list_items(kv["hints"].first, kv["hints"].second)) {
            std::string s = strip(item);
            if (s.size() < 2 || s.front() != '(' || s.back() != ')')
                throw ParseError("hint must be a point (x, y)", kv["hints"].second);
            s = s.substr(1, s.size() - 2);
            const size_t comma = s.find(',');
            if (comma == std::string::npos)
                throw ParseError("hint must be a point (x, y)", kv["hints"].second);
            spec.hints.emplace_back(parse_field_literal(spec.field, strip(s.substr(0, comma))),
                                    parse_field_literal(spec.field, strip(s.substr(comma + 1))));
        }
    }
    if (kv.count("seed")) {
        const std::string s = strip(kv["seed"].first);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("seed must be a nonnegative integer", kv["seed"].second);
        spec.seed = std::stoull(s);
        spec.has_seed = true;
    }

    const std::vector<std::string> known{"field", "f", "hints", "seed"};
    for (const auto& [key, v] : kv)
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ParseError("unknown key '" + key + "'", v.second);
    return spec;
}

CurvePtr CurveSpec::make_validated_curve() const {
    CurvePtr curve = make_curve(field, Poly(field, f_coeffs));
    for (const auto& [x0, y0] : hints) {
        if (y0 * y0 != curve->f().eval(x0))
            throw ValidationError("hint (" + x0.str() + ", " + y0.str() +
                                  ") does not lie on the curve");
    }
    return curve;
}

std::vector<Place> CurveSpec::hint_places(const CurvePtr& curve) const {
    std::vector<Place> out;
    for (const auto& [x0, y0] : hints) {
        const Poly m = Poly(field, {-x0, FieldElem(field, 1)});
        if (y0.is_zero()) out.push_back(Place::ramified(m));
        else out.push_back(Place::split(m, Poly::constant(y0)));
    }
    return out;
}

} // namespace hecc
