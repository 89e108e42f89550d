// Command-line front end: orbit exploration, symbolic derivation of theta
// derivatives, and numeric certification suites.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "theta/json_io.hpp"
#include "theta/solver.hpp"
#include "theta/verification.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailure = 1,
    kDegenerate = 2,
    kBadInput = 3,
    kResourceCap = 4,
};

using nlohmann::json;

// "a+bi" with decimal literals, e.g. "0+1i", "0.3+1.7i", "-0.4+0.9i", "2i".
theta::TauPoint parse_tau(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("cannot parse tau '" + s + "' (expected a+bi)"); };
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty() || (t.back() != 'i' && t.back() != 'I')) throw bad();
    t.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
        if (t[k] == '+' || t[k] == '-') {
            split = k;
            break;
        }
    }
    auto to_d = [&](const std::string& u, double empty_value) {
        if (u.empty() || u == "+") return empty_value;
        if (u == "-") return -empty_value;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(u, &pos);
        } catch (const std::exception&) {
            throw bad();
        }
        if (pos != u.size()) throw bad();
        return v;
    };
    double re = 0.0, im;
    if (split == std::string::npos) {
        im = to_d(t, 1.0);
    } else {
        re = to_d(t.substr(0, split), 0.0);
        im = to_d(t.substr(split), 1.0);
    }
    if (!(im > 0.0)) throw std::invalid_argument("tau must satisfy Im tau > 0");
    return theta::TauPoint(re, im);
}

std::vector<theta::TauPoint> tau_list(const std::vector<std::string>& specs) {
    if (specs.empty()) return theta::default_tau_samples();
    std::vector<theta::TauPoint> out;
    for (const auto& s : specs) out.push_back(parse_tau(s));
    return out;
}

json orbit_json(const theta::Orbit& o) {
    json elems = json::array();
    for (const auto& el : o.elements) elems.push_back(el.str());
    const char* kind = o.kind == theta::OrbitKind::periodic               ? "periodic"
                       : o.kind == theta::OrbitKind::stationary_terminated ? "stationary-terminated"
                                                                            : "merges-into-periodic";
    return json{{"elements", elems}, {"kind", kind}, {"tail_length", o.tail_length},
                {"cardinality", o.cardinality()}};
}

std::string orbit_text(const theta::Orbit& o) {
    std::string s = "{";
    for (std::size_t i = 0; i < o.elements.size(); ++i) {
        if (i) s += ", ";
        s += o.elements[i].str();
    }
    s += "}";
    switch (o.kind) {
        case theta::OrbitKind::periodic: s += "  periodic, cardinality " + std::to_string(o.cardinality()); break;
        case theta::OrbitKind::stationary_terminated: s += "  stationary endpoint"; break;
        case theta::OrbitKind::merges_into_periodic:
            s += "  merges into periodic core (tail " + std::to_string(o.tail_length) + ")";
            break;
    }
    return s;
}

struct GlobalOptions {
    std::vector<std::string> taus;
    double tol = 0.0; // 0 = per-check default
    std::uint64_t seed = 42;
    bool jacobi = false;
    std::string format = "text";
    std::size_t max_period = 64;
    bool verbose = false;
};

void print_config(const GlobalOptions& g, const std::vector<theta::TauPoint>& taus) {
    std::cerr << "config: format=" << g.format << " jacobi=" << (g.jacobi ? "on" : "off")
              << " seed=" << g.seed << " max-period=" << g.max_period << " tol="
              << (g.tol > 0 ? std::to_string(g.tol) : std::string("default")) << " tau={";
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (i) std::cerr << ", ";
        std::cerr << taus[i].value.real() << "+" << taus[i].value.imag() << "i";
    }
    std::cerr << "}\n";
}

int cmd_orbit(const std::string& arg, const GlobalOptions& g, bool partition_only) {
    if (g.verbose) std::cerr << "config: format=" << g.format << "\n";
    bool json_out = g.format == "json";
    json jout = json::array();
    auto emit = [&](const theta::Orbit& o) {
        if (json_out)
            jout.push_back(orbit_json(o));
        else
            std::cout << orbit_text(o) << "\n";
    };
    bool all_digits = !arg.empty() && arg.find_first_not_of("0123456789") == std::string::npos;
    if (!all_digits && arg.find('/') == std::string::npos)
        throw std::invalid_argument("expected a positive integer p or a fraction m/p, got '" + arg + "'");
    if (all_digits) {
        unsigned long pl = std::stoul(arg);
        if (pl < 2 || pl > 1000000) throw std::invalid_argument("p must be in [2, 10^6]");
        unsigned p = static_cast<unsigned>(pl);
        if (p % 3 != 0) {
            for (const auto& o : theta::partition(p)) emit(o);
        } else if (partition_only) {
            throw std::invalid_argument("partition: p divisible by 3 is not partitionable into "
                                        "disjoint orbits; use `orbit` per element");
        } else {
            // chains with stationary or periodic endpoints, one per element
            for (unsigned m = 1; m < p; ++m)
                emit(theta::orbit_of(theta::Rational(m, p)));
        }
    } else {
        emit(theta::orbit_of(theta::Rational::parse(arg).frac()));
    }
    if (json_out) std::cout << jout.dump(2) << "\n";
    return kOk;
}

int cmd_chain(const theta::Characteristic& c, const GlobalOptions& g) {
    if (g.verbose) std::cerr << "config: format=" << g.format << "\n";
    theta::CharacteristicChain chain = theta::char_chain(c);
    if (g.format == "json") {
        json elems = json::array();
        for (const auto& ch : chain.chain) elems.push_back({{"ep", ch.eps_prime.str()}, {"e", ch.eps.str()}});
        json j{{"chain", elems},
               {"preperiod", chain.preperiod},
               {"period", chain.period},
               {"endpoint", chain.endpoint == theta::ChainEndpoint::stationary ? "stationary" : "periodic-core"}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < chain.chain.size(); ++i) {
            if (i) std::cout << " -> ";
            if (i == chain.preperiod) std::cout << "| ";
            std::cout << "[" << chain.chain[i].eps_prime.str() << ";" << chain.chain[i].eps.str() << "]";
        }
        std::cout << "\n  preperiod " << chain.preperiod << ", period " << chain.period << ", "
                  << (chain.endpoint == theta::ChainEndpoint::stationary ? "stationary endpoint"
                                                                          : "periodic core")
                  << "\n";
    }
    return kOk;
}

int cmd_derive(const theta::Characteristic& c, const GlobalOptions& g) {
    theta::ThetaEngine engine;
    auto taus = tau_list(g.taus);
    if (g.verbose) print_config(g, taus);
    theta::SolveOptions opts;
    opts.jacobi = g.jacobi;
    opts.max_period = g.max_period;
    theta::ThetaExpression e = theta::solve_chain(c, opts);

    double tol = g.tol > 0 ? g.tol : 1e-9;
    double max_residual = 0.0;
    bool ok = true;
    for (const auto& tau : taus) {
        auto rep = theta::check_expression(engine, e, tau, tol);
        max_residual = std::max(max_residual, rep.residual);
        ok = ok && rep.pass;
    }

    if (g.format == "json") {
        json j = theta::to_json(e);
        j["certification"] = {{"max_residual", max_residual}, {"tolerance", tol}, {"pass", ok}};
        std::cout << j.dump(2) << "\n";
    } else if (g.format == "latex") {
        std::cout << theta::render_latex(e) << "\n";
        std::cerr << "certified: max residual " << max_residual << " over " << taus.size()
                  << " tau samples (tol " << tol << (ok ? ", pass" : ", FAIL") << ")\n";
    } else {
        std::cout << theta::render_text(e) << "\n";
        std::cout << "certified: max residual " << max_residual << " over " << taus.size()
                  << " tau samples (tol " << tol << (ok ? ", pass" : ", FAIL") << ")\n";
    }
    return ok ? kOk : kVerificationFailure;
}

int cmd_verify(const theta::Characteristic& c, const GlobalOptions& g) {
    theta::ThetaEngine engine;
    auto taus = tau_list(g.taus);
    if (g.verbose) print_config(g, taus);
    double tol = g.tol > 0 ? g.tol : 1e-10;
    std::vector<theta::ResidualReport> reports;
    for (const auto& tau : taus) reports.push_back(theta::check_fundamental(engine, c, tau, tol));

    // certify the emitted expression as well when one exists
    bool derivable = true;
    try {
        theta::ThetaExpression e = theta::solve_chain(c, {.jacobi = true, .max_period = g.max_period});
        double etol = g.tol > 0 ? g.tol : 1e-9;
        for (const auto& tau : taus) reports.push_back(theta::check_expression(engine, e, tau, etol));
    } catch (const theta::DegenerateIdentity&) {
        derivable = false;
    } catch (const theta::PeriodTooLarge&) {
        derivable = false;
    }

    bool ok = theta::all_pass(reports);
    if (g.format == "json") {
        for (const auto& r : reports) std::cout << r.to_json().dump() << "\n"; // JSON lines
    } else {
        for (const auto& r : reports) std::cout << r.line() << "\n";
        if (!derivable)
            std::cout << "note: no expression derivable for [" << c.str()
                      << "] (degenerate or over period cap); checked the identity only\n";
    }
    return ok ? kOk : kVerificationFailure;
}

int cmd_suite(const GlobalOptions& g) {
    theta::ThetaEngine engine;
    auto taus = tau_list(g.taus);
    if (g.verbose) print_config(g, taus);
    std::vector<theta::ResidualReport> reports;
    int failures = 0;

    // golden corpus: every worked characteristic with a printed expression
    const char* golden[] = {
        "0,1/3", "1/3,0", "1/3,1/3", "1/3,2/3", "1/2,1/3", "1/3,1/2",                // p=3
        "0,1/4", "1/4,0", "1/4,1/4", "1/4,3/4", "1/4,1/2", "1/2,1/4",                // p=4
        "1/5,2/5", "3/5,1/5",                                                         // p=5
        "0,1/6", "1/6,0", "1/3,1/6", "2/3,1/6", "1/6,1/3", "1/6,2/3",                // p=6
        "1/4,1/6", "3/4,1/6", "1/6,1/4", "1/6,3/4",                                   // p=6, pre-periodic
        "1/5,1/2", "2/5,1/2", "1/5,1/6", "1/2,1/5", "1/2,2/5", "1/6,1/5",            // p=6x5
        "1/13,12/13",                                                                 // p=13
    };
    for (const char* s : golden) {
        theta::Characteristic c = theta::Characteristic::parse(s);
        theta::ThetaExpression e = theta::solve_chain(c, {.jacobi = true, .max_period = g.max_period});
        if (theta::homogeneity_degree(e) != 3) {
            std::cout << "FAIL homogeneity [" << s << "]\n";
            ++failures;
        }
        for (const auto& tau : taus) reports.push_back(theta::check_expression(engine, e, tau, 1e-9));
    }
    // degenerate cases must be refused
    for (const char* s : {"1/6,1/6", "1/6,5/6", "1/2,1/6", "1/6,1/2"}) {
        try {
            theta::solve_chain(theta::Characteristic::parse(s), {});
            std::cout << "FAIL expected DegenerateIdentity for [" << s << "]\n";
            ++failures;
        } catch (const theta::DegenerateIdentity&) {
        }
    }
    for (const auto& tau : taus)
        for (auto& r : theta::cross_check_quoted_identities(engine, tau)) reports.push_back(r);
    for (auto& r : theta::relation_suite(engine, 100, g.seed)) reports.push_back(r);
    for (auto& r : theta::fundamental_sweep(engine, 50, g.seed, 30, taus)) reports.push_back(r);

    for (const auto& r : reports) {
        if (g.format == "json") {
            std::cout << r.to_json().dump() << "\n"; // JSON lines
            if (!r.pass) ++failures;
        } else if (!r.pass) {
            std::cout << r.line() << "\n";
            ++failures;
        } else if (g.verbose) {
            std::cout << r.line() << "\n";
        }
    }
    std::ostream& sum = g.format == "json" ? std::cerr : std::cout;
    sum << (failures == 0 ? "suite: all " : "suite: FAILURES among ") << reports.size()
        << " checks" << (failures ? " (" + std::to_string(failures) + " failed)" : " passed")
        << "\n";
    return failures == 0 ? kOk : kVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta-deriv: theta-constant expressions for derivatives of Jacobi theta "
                 "functions with rational characteristics"};
    app.require_subcommand(1);

    GlobalOptions g;
    if (const char* env = std::getenv("THETA_DERIV_SEED")) g.seed = std::strtoull(env, nullptr, 10);

    std::string arg_orbit, arg_partition, ep, e;

    auto add_common = [&](CLI::App* cmd, bool with_tau) {
        cmd->add_option("--format", g.format, "text | json | latex")->check(CLI::IsMember({"text", "json", "latex"}));
        cmd->add_flag("--verbose", g.verbose, "print the effective configuration");
        if (with_tau) {
            cmd->add_option("--tau", g.taus, "tau sample 'a+bi' (repeatable)");
            cmd->add_option("--tol", g.tol, "residual tolerance override");
        }
    };

    CLI::App* c_orbit = app.add_subcommand("orbit", "orbit of m/p, or all orbits of P(p)");
    c_orbit->add_option("value", arg_orbit, "positive integer p or fraction m/p")->required();
    add_common(c_orbit, false);

    CLI::App* c_part = app.add_subcommand("partition", "split P(p) into periodic orbits (gcd(p,3)=1)");
    c_part->add_option("p", arg_partition, "positive integer coprime to 3")->required();
    add_common(c_part, false);

    CLI::App* c_chain = app.add_subcommand("chain", "multiplication-by-3 chain of a characteristic");
    c_chain->add_option("eps_prime", ep, "top entry a/b")->required();
    c_chain->add_option("eps", e, "bottom entry c/d")->required();
    add_common(c_chain, false);

    CLI::App* c_derive = app.add_subcommand("derive", "theta-constant expression for theta'[ep;e]");
    c_derive->add_option("eps_prime", ep)->required();
    c_derive->add_option("eps", e)->required();
    c_derive->add_flag("--jacobi", g.jacobi, "substitute theta'[1/2;1/2] via the Jacobi identity");
    c_derive->add_option("--max-period", g.max_period, "orbit period cap");
    add_common(c_derive, true);

    CLI::App* c_verify = app.add_subcommand("verify", "check the fundamental identity (and the "
                                                      "emitted expression) numerically");
    c_verify->add_option("eps_prime", ep)->required();
    c_verify->add_option("eps", e)->required();
    c_verify->add_option("--max-period", g.max_period, "orbit period cap");
    add_common(c_verify, true);

    CLI::App* c_suite = app.add_subcommand("suite", "golden examples + randomized relation suite");
    c_suite->add_option("--seed", g.seed, "seed (default from THETA_DERIV_SEED or 42)");
    add_common(c_suite, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (app.got_subcommand(c_orbit)) return cmd_orbit(arg_orbit, g, false);
        if (app.got_subcommand(c_part)) return cmd_orbit(arg_partition, g, true);
        if (app.got_subcommand(c_chain))
            return cmd_chain({theta::Rational::parse(ep), theta::Rational::parse(e)}, g);
        if (app.got_subcommand(c_derive))
            return cmd_derive({theta::Rational::parse(ep), theta::Rational::parse(e)}, g);
        if (app.got_subcommand(c_verify))
            return cmd_verify({theta::Rational::parse(ep), theta::Rational::parse(e)}, g);
        if (app.got_subcommand(c_suite)) return cmd_suite(g);
    } catch (const theta::DegenerateIdentity& err) {
        std::cerr << "degenerate: " << err.what() << "\n";
        return kDegenerate;
    } catch (const theta::PeriodTooLarge& err) {
        std::cerr << "resource cap: " << err.what() << "\n";
        return kResourceCap;
    } catch (const std::invalid_argument& err) {
        std::cerr << "bad input: " << err.what() << "\n";
        return kBadInput;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kBadInput;
    }
    return kOk;
}
