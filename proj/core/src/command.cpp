#include "gwa/command.hpp"

#include <sstream>
#include <vector>

#include <json.hpp>

#include "gwa/endo.hpp"
#include "gwa/parse.hpp"
#include "gwa/semiclassical.hpp"
#include "gwa/verify.hpp"

namespace gwa {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

struct Entry {
    std::string name;
    std::string status;  // "pass" | "fail" | "info"
    Json detail;
};

struct Report {
    std::string command;
    std::optional<std::string> a_canonical;
    std::int64_t conductor = 1;
    std::vector<Entry> entries;
    bool verification = false;  // exit 1 when a pass/fail entry fails

    void info(std::string name, Json detail) {
        entries.push_back({std::move(name), "info", std::move(detail)});
    }
    void check(std::string name, bool ok, Json detail = Json()) {
        entries.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
    }
    bool all_passed() const {
        for (const auto& e : entries)
            if (e.status == "fail") return false;
        return true;
    }
};

std::string detail_text(const Json& d) {
    if (d.is_null()) return "";
    if (d.is_string()) return d.get<std::string>();
    return d.dump();
}

RunResult render(const Report& report, const std::string& format) {
    RunResult result;
    if (format == "json") {
        Json j;
        j["schema"] = 1;
        j["command"] = report.command;
        j["input"]["a"] = report.a_canonical ? Json(*report.a_canonical) : Json(nullptr);
        j["input"]["conductor"] = report.conductor;
        Json results = Json::array();
        for (const auto& e : report.entries) {
            Json entry;
            entry["name"] = e.name;
            entry["status"] = e.status;
            entry["detail"] = e.detail;
            results.push_back(entry);
        }
        j["results"] = results;
        result.output = j.dump() + "\n";
    } else {
        std::ostringstream os;
        if (report.a_canonical)
            os << "a = " << *report.a_canonical << "  (conductor " << report.conductor << ")\n";
        for (const auto& e : report.entries) {
            if (e.status == "info") {
                os << e.name << ": " << detail_text(e.detail) << "\n";
            } else {
                os << (e.status == "pass" ? "[PASS] " : "[FAIL] ") << e.name;
                std::string d = detail_text(e.detail);
                if (!d.empty()) os << ": " << d;
                os << "\n";
            }
        }
        result.output = os.str();
    }
    result.exit_code = report.verification && !report.all_passed() ? 1 : 0;
    return result;
}

GWAParams params_from(const Command& cmd) {
    if (cmd.a_expr.empty()) throw UsageError("missing required option --a");
    return GWAParams(parse_a_poly(cmd.a_expr), cmd.conductor);
}

// A pair component is a generator letter or an h-expression.
PoissonElement parse_pair_component(const std::string& text) {
    if (text == "x") return PoissonElement::x();
    if (text == "y") return PoissonElement::y();
    return PoissonElement::from_laurent(parse_a_poly(text));
}

std::pair<PoissonElement, PoissonElement> parse_pair(const std::string& pair_expr) {
    auto comma = pair_expr.find(',');
    if (comma == std::string::npos)
        throw UsageError("--pair expects two comma-separated components");
    return {parse_pair_component(pair_expr.substr(0, comma)),
            parse_pair_component(pair_expr.substr(comma + 1))};
}

void run_limit(const Command& cmd, Report& report) {
    GWAParams params = params_from(cmd);
    if (cmd.pair_expr.empty()) throw UsageError("missing required option --pair");
    auto [f, g] = parse_pair(cmd.pair_expr);
    PoissonElement result = sc_bracket(lift(f), lift(g), params);
    report.info("sc_bracket", result.str());
}

void run_bracket(const Command& cmd, Report& report) {
    GWAParams params = params_from(cmd);
    if (cmd.pair_expr.empty()) throw UsageError("missing required option --pair");
    auto [f, g] = parse_pair(cmd.pair_expr);
    GWAElement result = gwa_bracket(gwa_reduce(f, params), gwa_reduce(g, params), params);
    report.info("gwa_bracket", result.str());
}

void run_central(const Command& cmd, Report& report) {
    GWAParams params = params_from(cmd);
    report.verification = true;
    CentralityReport main = is_central(central_element(params), params);
    report.check("x*y - a(t*h) is central", main.central,
                 main.central ? Json() : Json(main.witness.str()));
    const std::pair<const char*, OreElement> probes[] = {
        {"x is not central", OreElement::x()},
        {"y is not central", OreElement::y()},
        {"h*x is not central", OreElement::monomial({0, 1, 1, 0}, Scalar::one())},
    };
    for (const auto& [name, elem] : probes) {
        CentralityReport r = is_central(elem, params);
        Json detail;
        if (!r.central)
            detail = Json{{"witness_generator", r.witness_generator},
                          {"witness", r.witness.str()}};
        report.check(name, !r.central, detail);
    }
}

void run_simple(const Command& cmd, Report& report) {
    GWAParams params = params_from(cmd);
    SimplicityResult r = simplicity_test(params);
    report.info("simplicity", Json{{"simple", r.simple}, {"witness", r.witness.str()}});
}

void run_jacobi(const Command& cmd, Report& report) {
    GWAParams params = params_from(cmd);
    report.verification = true;
    JacobiReport r = jacobi_check(BracketSpec::for_gwa(params));
    report.check("Jacobi identity on (h,x,y)", r.ok, r.ok ? Json() : Json(r.residual.str()));
}

void run_endos(const Command& cmd, Report& report) {
    GWAParams params = params_from(cmd);
    PositiveFamily family = enumerate_positive(params);
    Json gammas = Json::array();
    for (const Scalar& g : family.gammas) gammas.push_back(g.str());
    report.info("positive", Json{{"k", family.k},
                                 {"gammas", gammas},
                                 {"family", "h -> gamma*h, x -> b*h^n*x, y -> gamma^d*b^-1*h^-n*y"
                                            " with gamma^k = 1, b nonzero, n integer"}});

    ZeroTypeResult zero = find_zero_type(params);
    Json roots = Json::array();
    for (const Scalar& r : zero.roots) roots.push_back(r.str());
    report.info("zero", Json{{"certificate", zero.certificate.str()},
                             {"roots", roots},
                             {"residual", zero.residual.str()}});

    NegativeSolutionSet neg = solve_negative(params);
    Json negative;
    negative["feasible"] = neg.feasible;
    if (neg.feasible) {
        negative["s"] = neg.s;
        negative["constraint"] = "gamma^" + std::to_string(neg.g) + " = " + neg.c0.str();
        Json sols = Json::array();
        for (const NegativeSolution& sol : neg.solutions)
            sols.push_back(Json{{"gamma", sol.gamma.str()}, {"bc", sol.bc.str()}});
        negative["solutions"] = sols;
        negative["residual_constraint"] = neg.residual_constraint.str();
    }
    report.info("negative", negative);
}

void run_check_endo(const Command& cmd, Report& report) {
    GWAParams params = params_from(cmd);
    report.verification = true;
    if (cmd.gamma_expr.empty()) throw UsageError("missing required option --gamma");
    Scalar gamma = parse_scalar(cmd.gamma_expr);
    Endomorphism psi;
    if (cmd.kind == "positive") {
        psi = Endomorphism::positive(gamma, parse_scalar(cmd.b_expr), cmd.n);
    } else if (cmd.kind == "zero") {
        psi = Endomorphism::zero_type(gamma);
    } else if (cmd.kind == "negative") {
        psi = Endomorphism::negative(gamma, parse_scalar(cmd.b_expr), parse_scalar(cmd.c_expr),
                                     cmd.u, cmd.v);
    } else {
        throw UsageError("--kind must be positive, zero or negative");
    }
    report.info("endomorphism", psi.str());
    EndoCheckReport r = check_endomorphism(psi, params);
    for (const auto& item : r.items)
        report.check(item.name, item.ok, item.ok ? Json() : Json(item.residual.str()));
}

void run_specialize(const Command& cmd, Report& report) {
    GWAParams params = params_from(cmd);
    report.verification = true;
    if (cmd.lambda_expr.empty()) throw UsageError("missing required option --lambda");
    Scalar lambda = parse_scalar(cmd.lambda_expr);
    if (lambda.is_zero()) throw UsageError("--lambda must be nonzero");

    OreElement x = OreElement::x(), y = OreElement::y(), h = OreElement::h();
    auto specialized = [&](const OreElement& f, const OreElement& g) {
        return specialize(ore_mul(f, g, params), lambda, params);
    };
    SpecializationResult xh = specialized(x, h);
    report.info("lambda", lambda.str());
    if (xh.parameter_warning)
        report.info("warning", "lambda is 1 or a root of unity, outside the deformation "
                               "parameter set");

    OreElement hx = OreElement::monomial({0, 1, 1, 0}, Scalar::one());
    OreElement hy = OreElement::monomial({0, 1, 0, 1}, Scalar::one());
    report.check("x*h = lambda*h*x", xh.element == hx * lambda);
    report.check("y*h = lambda^-1*h*y", specialized(y, h).element == hy * lambda.inverse());
    OreElement expected_yx = ore_mul(x, y, params) + OreElement::from_laurent(params.a()) -
                             OreElement::from_laurent(substitute_h(params.a(), lambda, 1));
    report.check("y*x = x*y + a(h) - a(lambda*h)", specialized(y, x).element == expected_yx);
}

void run_verify(const Command& cmd, Report& report) {
    report.verification = true;
    for (const CriterionResult& r : run_acceptance_suite(cmd.seed)) {
        report.check("criterion " + std::to_string(r.index) + ": " + r.name, r.passed,
                     r.detail.empty() ? Json() : Json(r.detail));
    }
}

}  // namespace

RunResult run(const Command& command) {
    Report report;
    report.command = command.name;
    report.conductor = command.conductor;
    try {
        if (!command.a_expr.empty()) {
            GWAParams params = params_from(command);
            report.a_canonical = params.a().str();
            report.conductor = params.conductor();
        }
        if (command.name == "limit") {
            run_limit(command, report);
        } else if (command.name == "bracket") {
            run_bracket(command, report);
        } else if (command.name == "central") {
            run_central(command, report);
        } else if (command.name == "simple") {
            run_simple(command, report);
        } else if (command.name == "jacobi") {
            run_jacobi(command, report);
        } else if (command.name == "endos") {
            run_endos(command, report);
        } else if (command.name == "check-endo") {
            run_check_endo(command, report);
        } else if (command.name == "specialize") {
            run_specialize(command, report);
        } else if (command.name == "verify") {
            run_verify(command, report);
        } else {
            return {2, "", "unknown command '" + command.name + "'\n"};
        }
        if (command.format != "text" && command.format != "json")
            return {2, "", "unknown format '" + command.format + "'\n"};
        return render(report, command.format);
    } catch (const UsageError& e) {
        return {2, "", std::string(e.what()) + "\n"};
    } catch (const ParseError& e) {
        return {2, "", std::string(e.what()) + "\n"};
    } catch (const InvalidArgumentError& e) {
        return {2, "", std::string(e.what()) + "\n"};
    } catch (const Error& e) {
        return {1, "", std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace gwa
