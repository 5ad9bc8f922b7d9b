#include "hecc/cert.hpp"

#include <json.hpp>

#include "hecc/literals.hpp"

namespace hecc {

using ojson = nlohmann::ordered_json;

namespace {

ojson h1class_to_json(const H1Class& c) {
    ojson j;
    j["ambient"] = c.ambient().str();
    ojson tails = ojson::array();
    for (const auto& [pl, tail] : c.tails())
        tails.push_back(print_tail(c.ambient().curve(), pl, tail));
    j["tails"] = std::move(tails);
    return j;
}

H1Class h1class_from_json(const CurvePtr& curve, const ojson& j) {
    Divisor ambient = parse_divisor(curve, j.at("ambient").get<std::string>());
    TailMap tails;
    for (const auto& t : j.at("tails")) {
        auto [pl, tail] = parse_tail(curve, t.get<std::string>());
        for (const auto& [ord, c] : tail.terms) {
            auto [it, fresh] = tails[pl].terms.emplace(ord, c);
            if (!fresh) it->second = it->second + c;
        }
    }
    return H1Class(std::move(ambient), std::move(tails));
}

ojson kv_to_json(const std::vector<std::pair<std::string, std::string>>& kv) {
    ojson j = ojson::object();
    for (const auto& [k, v] : kv) j[k] = v;
    return j;
}

} // namespace

std::string certificate_to_json(const Certificate& cert) {
    const ConstructionData& d = *cert.data;
    ojson j;
    j["version"] = cert.version;
    ojson jc;
    jc["field"] = cert.curve->field().describe();
    ojson fc = ojson::array();
    for (int i = 0; i <= cert.curve->f().degree(); ++i)
        fc.push_back(cert.curve->f().coeff(i).str());
    jc["f"] = std::move(fc);
    jc["genus"] = cert.curve->genus();
    j["curve"] = std::move(jc);
    j["seed"] = cert.seed;

    BundleEnv env;
    env.classes.emplace_back("theta", d.theta);
    env.classes.emplace_back("omega", d.omega);

    ojson jd;
    jd["P"] = d.p.str();
    jd["D"] = d.d.str();
    jd["D_Q"] = d.d_q.str();
    jd["D_R"] = d.d_r.str();
    jd["theta"] = h1class_to_json(d.theta);
    jd["omega"] = h1class_to_json(d.omega);
    jd["F"] = print_bundle(d.f_bundle, env);
    jd["V"] = print_bundle(d.v_bundle, env);
    jd["E"] = print_bundle(d.e_bundle, env);
    jd["Q"] = print_bundle(d.q_bundle, env);
    j["construction"] = std::move(jd);

    ojson checks = ojson::array();
    for (const CheckResult& c : cert.checks) {
        ojson cj;
        cj["check_id"] = c.id;
        cj["statement"] = c.statement;
        cj["paper_anchor"] = c.anchor;
        cj["inputs"] = kv_to_json(c.inputs);
        cj["witnesses"] = kv_to_json(c.witnesses);
        cj["pass"] = c.pass;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["overall_pass"] = cert.overall_pass;
    return j.dump(2) + "\n";
}

CheckOutcome check_certificate(const std::string& json_text) {
    ojson j;
    try {
        j = ojson::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad certificate JSON: ") + e.what());
    }

    try {
        const Field field = Field::parse(j.at("curve").at("field").get<std::string>());
        std::vector<FieldElem> coeffs;
        for (const auto& c : j.at("curve").at("f"))
            coeffs.push_back(parse_field_literal(field, c.get<std::string>()));
        CurvePtr curve = make_curve(field, Poly(field, coeffs));
        const std::uint64_t seed = j.at("seed").get<std::uint64_t>();

        const ojson& jd = j.at("construction");
        const Place p = parse_place(curve, jd.at("P").get<std::string>());
        const Divisor d_q = parse_divisor(curve, jd.at("D_Q").get<std::string>());
        const Divisor d_r = parse_divisor(curve, jd.at("D_R").get<std::string>());
        const H1Class theta = h1class_from_json(curve, jd.at("theta"));
        const H1Class stored_omega = h1class_from_json(curve, jd.at("omega"));

        if (theta.ambient() != d_q + d_r)
            throw ValidationError("theta ambient divisor is not D_Q + D_R");

        ConstructionData data = assemble(curve, seed, p, d_q, d_r, theta);
        Certificate fresh = verify(data);

        CheckOutcome out;
        out.omega_matches = data.omega == stored_omega;
        out.overall_recorded = j.at("overall_pass").get<bool>();
        out.overall_recomputed = fresh.overall_pass;

        const ojson& recorded = j.at("checks");
        if (recorded.size() != fresh.checks.size())
            throw ValidationError("certificate lists " + std::to_string(recorded.size()) +
                                  " checks, expected " + std::to_string(fresh.checks.size()));
        for (size_t i = 0; i < fresh.checks.size(); ++i) {
            CheckAgreement a;
            a.id = fresh.checks[i].id;
            const std::string rid = recorded[i].at("check_id").get<std::string>();
            if (rid != a.id)
                throw ValidationError("check order mismatch: " + rid + " vs " + a.id);
            a.recorded = recorded[i].at("pass").get<bool>();
            a.recomputed = fresh.checks[i].pass;
            out.agree = out.agree && a.recorded == a.recomputed;
            out.checks.push_back(std::move(a));
        }
        out.agree = out.agree && out.overall_recorded == out.overall_recomputed;
        return out;
    } catch (const ojson::exception& e) {
        throw ParseError(std::string("certificate structure: ") + e.what());
    }
}

} // namespace hecc
