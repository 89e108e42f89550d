#include "theta/json_io.hpp"

namespace theta {

using nlohmann::json;

namespace {

json chi_json(const Characteristic& c) {
    return json{{"ep", c.eps_prime.str()}, {"e", c.eps.str()}};
}

Characteristic chi_from(const json& j) {
    return {Rational::parse(j.at("ep").get<std::string>()),
            Rational::parse(j.at("e").get<std::string>())};
}

} // namespace

json to_json(const ThetaExpression& e) {
    json terms = json::array();
    for (const auto& m : e.monomials) {
        json facs = json::array();
        for (const auto& f : m.factors) {
            json fj = chi_json(f.chi);
            fj["exp"] = f.exponent;
            facs.push_back(std::move(fj));
        }
        terms.push_back(json{{"scalar", m.scalar.str()},
                             {"phase_r", m.phase.r().str()},
                             {"pi_power", m.pi_power},
                             {"dtheta_half_power", m.dtheta_half_power},
                             {"factors", std::move(facs)}});
    }
    return json{{"schema", "v1"},
                {"target", chi_json(e.target)},
                {"jacobi_applied", e.jacobi_applied},
                {"terms", std::move(terms)}};
}

ThetaExpression expression_from_json(const json& j) {
    if (j.contains("schema") && j.at("schema").get<std::string>() != "v1")
        throw std::invalid_argument("expression_from_json: unsupported schema");
    ThetaExpression e;
    e.target = chi_from(j.at("target"));
    e.jacobi_applied = j.at("jacobi_applied").get<bool>();
    for (const auto& t : j.at("terms")) {
        ThetaMonomial m;
        m.scalar = Rational::parse(t.at("scalar").get<std::string>());
        m.phase = Phase::of(Rational::parse(t.at("phase_r").get<std::string>()));
        m.pi_power = t.at("pi_power").get<int>();
        m.dtheta_half_power = t.at("dtheta_half_power").get<int>();
        for (const auto& f : t.at("factors"))
            m.factors.push_back({chi_from(f), f.at("exp").get<int>()});
        e.monomials.push_back(std::move(m));
    }
    return e;
}

} // namespace theta
