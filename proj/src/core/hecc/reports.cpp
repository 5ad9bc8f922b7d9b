#include "hecc/reports.hpp"

#include <sstream>

#include <json.hpp>

#include "hecc/cert.hpp"
#include "hecc/literals.hpp"
#include "hecc/rr.hpp"

namespace hecc {

using ojson = nlohmann::ordered_json;

std::string genus_report(const CurvePtr& curve, bool as_json) {
    if (as_json) {
        ojson j;
        j["curve"] = curve->describe();
        j["field"] = curve->field().describe();
        j["genus"] = curve->genus();
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "curve: " << curve->describe() << "\n";
    out << "genus: " << curve->genus() << "\n";
    return out.str();
}

std::string rr_report(const CurvePtr& curve, const std::string& divisor_literal, bool as_json) {
    const Divisor d = parse_divisor(curve, divisor_literal);
    RRSpace sp = rr_basis(d);
    if (as_json) {
        ojson j;
        j["divisor"] = d.str();
        j["h0"] = sp.dim();
        ojson basis = ojson::array();
        for (const FunctionElement& h : sp.basis) basis.push_back(h.str());
        j["basis"] = std::move(basis);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "divisor: " << d.str() << "\n";
    out << "h0: " << sp.dim() << "\n";
    out << "basis:" << (sp.basis.empty() ? " (empty)" : "") << "\n";
    for (const FunctionElement& h : sp.basis) out << "  " << h.str() << "\n";
    return out.str();
}

std::string h1_report(const CurvePtr& curve, const std::string& divisor_literal, bool as_json) {
    const Divisor d = parse_divisor(curve, divisor_literal);
    const Divisor dual = canonical_divisor(curve) - d;
    const int h1_val = h0(dual);
    if (as_json) {
        ojson j;
        j["divisor"] = d.str();
        j["h1"] = h1_val;
        j["serre_dual"] = dual.str();
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "divisor: " << d.str() << "\n";
    out << "h1: " << h1_val << "\n";
    out << "serre_dual: " << dual.str() << "\n";
    return out.str();
}

std::string flat_report(const CurvePtr& curve, const std::string& defs, bool as_json) {
    BundleEnv env;
    struct Eval {
        std::string text;
        FlatnessVerdict verdict;
    };
    std::vector<Eval> evals;

    std::istringstream in(defs);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        std::string rest;
        std::getline(ls, rest);
        try {
            if (word == "class") {
                // class NAME over <divisor> = <tail> [; <tail>]...
                const size_t over = rest.find(" over ");
                const size_t eq = rest.find('=');
                if (over == std::string::npos || eq == std::string::npos || eq < over)
                    throw ParseError("expected: class NAME over <divisor> = <tails>", line_no);
                std::string name = rest.substr(0, over);
                name.erase(remove_if(name.begin(), name.end(), ::isspace), name.end());
                const Divisor ambient =
                    parse_divisor(curve, rest.substr(over + 6, eq - over - 6));
                TailMap tails;
                std::istringstream ts(rest.substr(eq + 1));
                std::string one;
                while (std::getline(ts, one, ';')) {
                    if (one.find_first_not_of(" \t") == std::string::npos) continue;
                    auto [pl, tail] = parse_tail(curve, one);
                    for (const auto& [ord, c] : tail.terms) {
                        auto [it, fresh] = tails[pl].terms.emplace(ord, c);
                        if (!fresh) it->second = it->second + c;
                    }
                }
                env.classes.emplace_back(name, H1Class(ambient, std::move(tails)));
            } else if (word == "bundle") {
                const size_t eq = rest.find('=');
                if (eq == std::string::npos)
                    throw ParseError("expected: bundle NAME = <expr>", line_no);
                std::string name = rest.substr(0, eq);
                name.erase(remove_if(name.begin(), name.end(), ::isspace), name.end());
                env.bundles.emplace_back(name, parse_bundle(curve, env, rest.substr(eq + 1)));
            } else if (word == "eval") {
                BundlePtr b = parse_bundle(curve, env, rest);
                evals.push_back({print_bundle(b, env), is_flat(*b)});
            } else {
                throw ParseError("unknown directive '" + word + "'", line_no);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(std::string(e.what()) + " (line " + std::to_string(line_no) + ")",
                             line_no);
        }
    }

    if (as_json) {
        ojson j;
        ojson arr = ojson::array();
        for (const Eval& e : evals) {
            ojson je;
            je["bundle"] = e.text;
            je["verdict"] = flatness_name(e.verdict.verdict);
            if (e.verdict.verdict == Flatness::Unknown)
                je["reason"] = e.verdict.unknown_reason;
            ojson tr = ojson::array();
            for (const TraceStep& s : e.verdict.trace) {
                ojson js;
                js["rule"] = s.rule;
                js["node"] = s.node.empty() ? "root" : s.node;
                js["anchor"] = s.anchor;
                ojson facts = ojson::object();
                for (const auto& [k, v] : s.facts) facts[k] = v;
                js["facts"] = std::move(facts);
                tr.push_back(std::move(js));
            }
            je["trace"] = std::move(tr);
            arr.push_back(std::move(je));
        }
        j["evals"] = std::move(arr);
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    for (const Eval& e : evals) {
        out << "bundle: " << e.text << "\n";
        out << "verdict: " << flatness_name(e.verdict.verdict);
        if (e.verdict.verdict == Flatness::Unknown) out << " (" << e.verdict.unknown_reason << ")";
        out << "\n";
        for (const TraceStep& s : e.verdict.trace) {
            out << "  " << s.rule << " @ " << (s.node.empty() ? "root" : s.node) << " ["
                << s.anchor << "]";
            for (const auto& [k, v] : s.facts) out << " " << k << "=" << v;
            out << "\n";
        }
    }
    if (evals.empty()) out << "nothing to evaluate\n";
    return out.str();
}

} // namespace hecc
