#include "tensorwalk/serialization.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tensorwalk::io {

using nlohmann::json;

namespace {

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

json parse(const std::string& text) {
    return json::parse(text);  // throws nlohmann's parse_error on bad input
}

json poly_to_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

IntPoly poly_from_json(const json& j) {
    std::vector<BigInt> cs;
    for (const auto& c : j) cs.push_back(parse_decimal(c.get<std::string>()));
    return IntPoly(std::move(cs));
}

}  // namespace

std::string sequence_to_json(const Sequence& a, int indent) {
    json arr = json::array();
    for (const auto& v : a) arr.push_back(v.str());
    return dump(arr, indent);
}

Sequence sequence_from_json(const std::string& text) {
    Sequence out;
    for (const auto& v : parse(text)) out.push_back(parse_decimal(v.get<std::string>()));
    return out;
}

std::string series_to_json(const series::PowerSeries& s, int indent) {
    json arr = json::array();
    for (int i = 0; i <= s.order(); ++i) arr.push_back(to_fraction_string(s[i]));
    return dump(arr, indent);
}

series::PowerSeries series_from_json(const std::string& text) {
    std::vector<BigRational> cs;
    for (const auto& v : parse(text)) cs.push_back(parse_fraction(v.get<std::string>()));
    return series::PowerSeries(std::move(cs));
}

namespace {

json laurent_to_json(const laurent::LaurentPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term = json::array();
        for (int x : e) term.push_back(x);
        term.push_back(c.str());
        arr.push_back(term);
    }
    return arr;
}

laurent::LaurentPoly laurent_from_json(const json& j, int vars) {
    laurent::LaurentPoly p(vars);
    for (const auto& term : j) {
        if (static_cast<int>(term.size()) != vars + 1)
            throw std::invalid_argument("laurent term arity does not match vars");
        laurent::Exponents e(vars);
        for (int i = 0; i < vars; ++i) e[i] = term[i].get<int>();
        p.add_term(e, parse_decimal(term[vars].get<std::string>()));
    }
    return p;
}

}  // namespace

std::string ct_spec_to_json(const laurent::CTSpec& spec, int indent) {
    json j;
    j["vars"] = spec.vars();
    j["delta"] = laurent_to_json(spec.delta);
    j["kernel"] = laurent_to_json(spec.kernel);
    return dump(j, indent);
}

laurent::CTSpec ct_spec_from_json(const std::string& text) {
    const json j = parse(text);
    const int vars = j.at("vars").get<int>();
    if (vars < 1) throw std::invalid_argument("vars must be positive");
    return laurent::CTSpec(laurent_from_json(j.at("delta"), vars),
                           laurent_from_json(j.at("kernel"), vars));
}

namespace {

json constraint_to_json(const walks::LinearConstraint& c) {
    json j;
    j["coeffs"] = {c.coeffs[0], c.coeffs[1]};
    j["bound"] = c.bound;
    j["relation"] = c.rel == walks::LinearConstraint::Rel::Ge ? ">=" : "=";
    return j;
}

walks::LinearConstraint constraint_from_json(const json& j) {
    walks::LinearConstraint c;
    c.coeffs = {j.at("coeffs").at(0).get<int>(), j.at("coeffs").at(1).get<int>()};
    c.bound = j.at("bound").get<int>();
    const std::string rel = j.at("relation").get<std::string>();
    if (rel == ">=")
        c.rel = walks::LinearConstraint::Rel::Ge;
    else if (rel == "=")
        c.rel = walks::LinearConstraint::Rel::Eq;
    else
        throw std::invalid_argument("relation must be \">=\" or \"=\"");
    if (c.coeffs[0] == 0 && c.coeffs[1] == 0)
        throw std::invalid_argument("constraint coefficients must not both vanish");
    return c;
}

}  // namespace

std::string walk_config_to_json(const walks::WalkConfig& cfg, int indent) {
    json j;
    j["domain"] = json::array();
    for (const auto& c : cfg.domain) j["domain"].push_back(constraint_to_json(c));
    j["steps"] = json::array();
    for (const auto& s : cfg.steps) {
        json step;
        step["vector"] = {s.vec[0], s.vec[1]};
        step["multiplicity"] = s.multiplicity;
        step["forbidden_when"] = json::array();
        for (const auto& c : s.forbidden_when) step["forbidden_when"].push_back(constraint_to_json(c));
        j["steps"].push_back(step);
    }
    j["start"] = {cfg.start[0], cfg.start[1]};
    return dump(j, indent);
}

walks::WalkConfig walk_config_from_json(const std::string& text) {
    const json j = parse(text);
    walks::WalkConfig cfg;
    for (const auto& c : j.at("domain")) cfg.domain.push_back(constraint_from_json(c));
    for (const auto& s : j.at("steps")) {
        walks::StepRule rule;
        rule.vec = {s.at("vector").at(0).get<int>(), s.at("vector").at(1).get<int>()};
        rule.multiplicity = s.at("multiplicity").get<int>();
        if (rule.multiplicity < 1) throw std::invalid_argument("step multiplicity must be >= 1");
        if (s.contains("forbidden_when"))
            for (const auto& c : s.at("forbidden_when")) rule.forbidden_when.push_back(constraint_from_json(c));
        cfg.steps.push_back(std::move(rule));
    }
    if (j.contains("start")) cfg.start = {j.at("start").at(0).get<int>(), j.at("start").at(1).get<int>()};
    if (!cfg.in_domain(cfg.start)) throw std::invalid_argument("start position violates the domain");
    return cfg;
}

std::string recurrence_to_json(const holonomic::PRecurrence& rec, int indent) {
    json j;
    j["coeffs"] = json::array();
    for (const auto& p : rec.coeff) j["coeffs"].push_back(poly_to_json(p));
    return dump(j, indent);
}

holonomic::PRecurrence recurrence_from_json(const std::string& text) {
    const json j = parse(text);
    holonomic::PRecurrence rec;
    for (const auto& p : j.at("coeffs")) rec.coeff.push_back(poly_from_json(p));
    if (rec.coeff.empty() || rec.coeff.back().is_zero())
        throw std::invalid_argument("leading recurrence polynomial must be nonzero");
    return rec;
}

std::string diffop_to_json(const holonomic::DiffOp& op, int indent) {
    json j;
    j["coeffs"] = json::array();
    for (const auto& c : op.coeff) {
        json rf;
        rf["num"] = poly_to_json(c.num());
        rf["den"] = poly_to_json(c.den());
        j["coeffs"].push_back(rf);
    }
    return dump(j, indent);
}

holonomic::DiffOp diffop_from_json(const std::string& text) {
    const json j = parse(text);
    holonomic::DiffOp op;
    for (const auto& c : j.at("coeffs"))
        op.coeff.emplace_back(poly_from_json(c.at("num")), poly_from_json(c.at("den")));
    if (op.coeff.empty() || op.coeff.back().is_zero())
        throw std::invalid_argument("leading operator coefficient must be nonzero");
    return op;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace tensorwalk::io
