#include "absrr/json_io.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace absrr {

using nlohmann::json;

json divisor_to_json(const ArakelovDivisor& d) {
    json finite = json::object();
    for (auto [p, e] : d.finite_part())
        finite[std::to_string(p)] = e;
    return json{{"finite", finite}, {"lambda", d.arch_multiplier().str()}};
}

ArakelovDivisor divisor_from_json(const json& j) {
    ArakelovDivisor::FinitePart finite;
    if (j.contains("finite"))
        for (auto& [key, value] : j.at("finite").items())
            finite[std::stoull(key)] = value.get<long>();
    PosRational lambda = PosRational::parse(j.at("lambda").get<std::string>());
    return ArakelovDivisor(std::move(finite), std::move(lambda));
}

json genset_report_to_json(const GenSetReport& r) {
    json gens = json::array();
    for (const auto& g : r.generators)
        gens.push_back(g.get_str());
    return json{{"n", r.n.get_str()},
                {"generators", gens},
                {"cardinality", r.cardinality},
                {"sum", r.sum.get_str()},
                {"verified", r.verified},
                {"surjective", r.surjective},
                {"mass_ok", r.mass_ok},
                {"special_case", to_string(r.special_case)}};
}

json circle_genset_to_json(const CircleGenSet& g, bool verified) {
    json gens = json::array();
    for (const auto& x : g.generators)
        gens.push_back(to_string(x));
    return json{{"lambda", g.lambda.str()},
                {"generators", gens},
                {"m", g.m},
                {"cover_verified", verified}};
}

json rr_report_to_json(const RRReport& r) {
    return json{{"divisor", divisor_to_json(r.divisor)},
                {"exp_deg", r.exp_deg.str()},
                {"deg_float", LogValue::of(r.exp_deg).approx},
                {"h0", r.h0},
                {"h1", r.h1},
                {"euler", r.euler},
                {"rhs_ceil", r.rhs_ceil},
                {"in_L", r.in_L},
                {"consistent", r.consistent}};
}

json serre_report_to_json(const SerreReport& r) {
    return json{{"divisor", divisor_to_json(r.divisor)},
                {"lambda", r.lambda.str()},
                {"exp_deg_complement", r.exp_deg_complement.str()},
                {"dim_h0_complement", r.dim_h0_complement},
                {"dim_dual_characters", r.dim_dual_characters},
                {"degree_relation_ok", r.degree_relation_ok},
                {"consistent", r.consistent}};
}

std::string rr_csv_header() {
    return "divisor,exp_deg,deg_float,h0,h1,euler,rhs_ceil,in_L,consistent";
}

std::string rr_report_to_csv(const RRReport& r) {
    std::ostringstream out;
    out << '"' << r.divisor.render() << "\"," << r.exp_deg.str() << ','
        << LogValue::of(r.exp_deg).approx << ',' << r.h0 << ',' << r.h1 << ',' << r.euler << ','
        << r.rhs_ceil << ',' << r.in_L << ',' << (r.consistent ? 1 : 0);
    return out.str();
}

namespace {

GroupElem elem_from_key(const std::string& key, std::size_t rank) {
    GroupElem e;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ','))
        e.push_back(std::stoll(part));
    if (e.size() != rank)
        throw std::invalid_argument("element key '" + key + "' has wrong rank");
    return e;
}

ExtQ extq_from_json(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "inf")
        return ExtQ::inf();
    return ExtQ::of(parse_rational(s));
}

}  // namespace

FiniteToleranceModule module_from_json(const json& j) {
    FiniteAbelianGroup group({0});
    std::vector<GroupElem> carrier;
    bool diagonal = false;

    const json& gj = j.at("group");
    if (gj.contains("interval")) {
        long long n = gj.at("interval").get<long long>();
        if (n < 0)
            throw std::invalid_argument("interval bound must be >= 0");
        for (long long v = -n; v <= n; ++v)
            carrier.push_back({v});
    } else {
        std::vector<long long> moduli = gj.at("moduli").get<std::vector<long long>>();
        group = FiniteAbelianGroup(moduli);
        carrier = group.elements();
    }

    auto table_fn = [&](const json& table) -> ElemFn {
        auto map = std::make_shared<std::map<GroupElem, ExtQ>>();
        for (auto& [key, value] : table.items())
            (*map)[group.normalize(elem_from_key(key, group.rank()))] = extq_from_json(value);
        auto g = group;
        return [map, g](const GroupElem& x) {
            auto it = map->find(g.normalize(x));
            if (it == map->end())
                return ExtQ::inf();
            return it->second;
        };
    };

    ElemFn mass;
    const json& mj = j.at("mass");
    if (mj.is_string() && mj == "zero") {
        mass = [](const GroupElem&) { return ExtQ::of(0); };
    } else if (mj.is_string() && mj == "abs") {
        mass = [](const GroupElem& x) {
            long long v = 0;
            for (long long c : x)
                v += c < 0 ? -c : c;
            return ExtQ::of(Rational(static_cast<long>(v)));
        };
    } else if (mj.is_object() && mj.contains("table")) {
        mass = table_fn(mj.at("table"));
    } else {
        throw std::invalid_argument("mass must be \"zero\", \"abs\" or {\"table\": ...}");
    }

    ExtQ bound = extq_from_json(j.at("mass_bound"));

    ElemFn cost;
    const json& cj = j.at("cost");
    if (cj.is_string() && cj == "diagonal") {
        diagonal = true;
        auto g = group;
        cost = [g](const GroupElem& x) {
            return g.normalize(x) == g.zero() ? ExtQ::of(0) : ExtQ::inf();
        };
    } else if (cj.is_object() && cj.contains("circle")) {
        long long q = cj.at("circle").get<long long>();
        if (group.rank() != 1 || group.moduli()[0] != q)
            throw std::invalid_argument("circle cost requires the group Z/q");
        cost = [q](const GroupElem& x) {
            long long r = ((x[0] % q) + q) % q;
            return ExtQ::of(make_rational(mpz_class(static_cast<long>(std::min(r, q - r))),
                                          mpz_class(static_cast<long>(q))));
        };
    } else if (cj.is_object() && cj.contains("table")) {
        cost = table_fn(cj.at("table"));
    } else {
        throw std::invalid_argument("cost must be \"diagonal\", {\"circle\": q} or {\"table\": ...}");
    }

    Rational tol = parse_rational(j.at("tol").get<std::string>());
    FiniteToleranceModule m(group, std::move(carrier), std::move(mass), bound, std::move(cost),
                            tol, j.value("name", std::string()));
    if (diagonal)
        m.mark_diagonal();
    return m;
}

}  // namespace absrr
