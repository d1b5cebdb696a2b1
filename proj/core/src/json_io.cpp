#include "qtwist/json_io.hpp"

#include <algorithm>
#include <set>

namespace qtwist {

Rational rational_from_json(const Json& j) {
    if (!j.is_string())
        fail("ParseError", "rationals must be strings like \"1/24\", got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

namespace {

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) fail("SchemaError", "unknown key \"" + it.key() + "\"");
}

std::vector<Rational> rational_list(const Json& j) {
    if (!j.is_array()) fail("SchemaError", "expected an array of rational strings");
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(rational_from_json(v));
    return out;
}

} // namespace

DatumInput parse_datum_file(const Json& j, const std::vector<std::string>& extra_keys) {
    if (!j.is_object()) fail("SchemaError", "input must be a JSON object");
    std::set<std::string> allowed{"cartan", "q", "linking", "q_I", "sqrt_q", "max_degree"};
    for (const auto& k : extra_keys) allowed.insert(k);
    reject_unknown_keys(j, allowed);
    if (!j.contains("cartan")) fail("SchemaError", "missing key \"cartan\"");
    if (!j.contains("q")) fail("SchemaError", "missing key \"q\"");

    std::vector<std::vector<int>> cartan;
    for (const auto& row : j.at("cartan")) {
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) fail("SchemaError", "cartan entries must be integers");
            r.push_back(v.get<int>());
        }
        cartan.push_back(std::move(r));
    }
    std::vector<std::vector<Rational>> q;
    for (const auto& row : j.at("q")) q.push_back(rational_list(row));

    std::optional<std::vector<Rational>> linking;
    if (j.contains("linking")) linking = rational_list(j.at("linking"));

    DatumInput in{validate_reduced_datum(validate_cartan(cartan), QMatrix::validate(q), linking),
                  std::nullopt,
                  {},
                  6,
                  Json::object()};
    if (j.contains("q_I")) in.q_I = rational_list(j.at("q_I"));
    if (j.contains("sqrt_q")) {
        for (const auto& pair : j.at("sqrt_q")) {
            if (!pair.is_array() || pair.size() != 2)
                fail("SchemaError", "sqrt_q entries must be [value, root] pairs");
            in.radicals.insert(rational_from_json(pair[0]), rational_from_json(pair[1]));
        }
    }
    if (j.contains("max_degree")) {
        if (!j.at("max_degree").is_number_integer())
            fail("SchemaError", "max_degree must be an integer");
        in.max_degree = j.at("max_degree").get<int>();
    }
    for (const auto& k : extra_keys)
        if (j.contains(k)) in.extras[k] = j.at(k);
    return in;
}

Json element_to_json(const MonomialYD& V, const SmashElement& a) {
    Json out = Json::array();
    for (const auto& [m, c] : a.terms) {
        Json term;
        term["word"] = m.word;
        if (V.abelian_group())
            term["group"] = m.group.exponents();
        else
            term["perm"] = m.group.images();
        term["coef"] = c.str();
        out.push_back(std::move(term));
    }
    return out;
}

Json certificate_to_json(const MonomialYD& V, const MembershipCertificate& c) {
    Json out;
    out["member"] = c.decision;
    out["bound"] = c.bound;
    Json comb = Json::array();
    for (const auto& t : c.combination) {
        Json e;
        e["left"] = element_to_json(V, sm_monomial(t.left));
        e["relation"] = t.relation;
        e["right"] = element_to_json(V, sm_monomial(t.right));
        e["coef"] = t.coefficient.str();
        comb.push_back(std::move(e));
    }
    out["combination"] = std::move(comb);
    return out;
}

Json cocycle_to_json(const HopfCocycle& c) {
    Json out;
    if (const Bicharacter* b = c.as_bicharacter()) {
        out["kind"] = "bicharacter";
        Json m = Json::array();
        for (const auto& row : b->matrix()) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(v.str());
            m.push_back(std::move(r));
        }
        out["matrix"] = std::move(m);
        if (b->projection()) out["projection"] = *b->projection();
        return out;
    }
    if (const GroupCocycleTable* t = c.as_table()) {
        out["kind"] = "table";
        Json vals = Json::object();
        for (const auto& [k, v] : t->values())
            vals[k.first.str() + "," + k.second.str()] = v.str();
        out["values"] = std::move(vals);
        return out;
    }
    if (const auto* f = c.as_convolved()) {
        out["kind"] = "convolve";
        Json factors = Json::array();
        for (const auto& g : *f) factors.push_back(cocycle_to_json(g));
        out["factors"] = std::move(factors);
        return out;
    }
    out["kind"] = c.kind();
    return out;
}

Json report_to_json(const VerifyReport& r) {
    Json out;
    out["theorem"] = r.theorem;
    out["bound"] = r.bound;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.note.empty()) e["note"] = c.note;
        checks.push_back(std::move(e));
    }
    out["checks"] = std::move(checks);
    out["pass"] = r.pass;
    return out;
}

std::string input_hash(const Json& j) {
    nlohmann::json sorted = nlohmann::json::parse(j.dump());
    std::string dump = sorted.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

RackInput parse_rack_file(const Json& j) {
    if (!j.is_object()) fail("SchemaError", "input must be a JSON object");
    RackInput in;
    if (j.contains("rack")) {
        reject_unknown_keys(j, {"rack", "n", "cocycle", "phi"});
        if (j.at("rack").get<std::string>() != "transpositions")
            fail("SchemaError", "only the builtin rack \"transpositions\" is known");
        if (!j.contains("n")) fail("SchemaError", "missing key \"n\"");
        in.builtin = transposition_rack(j.at("n").get<int>());
        std::string c = j.value("cocycle", "minus_one");
        if (c == "minus_one")
            in.builtin_cocycle = FKCocycle::MinusOne;
        else if (c == "chi")
            in.builtin_cocycle = FKCocycle::Chi;
        else
            fail("SchemaError", "cocycle must be \"minus_one\" or \"chi\"");
        in.rack = in.builtin->rack;
        in.cocycle = in.builtin_cocycle == FKCocycle::MinusOne ? in.builtin->minus_one
                                                               : in.builtin->chi;
    } else {
        reject_unknown_keys(j, {"elements", "op", "q", "phi"});
        if (!j.contains("elements")) fail("SchemaError", "missing key \"elements\"");
        if (!j.contains("op")) fail("SchemaError", "missing key \"op\"");
        std::vector<std::string> labels;
        for (const auto& l : j.at("elements")) labels.push_back(l.get<std::string>());
        std::vector<std::vector<int>> op;
        for (const auto& row : j.at("op")) {
            std::vector<int> r;
            for (const auto& v : row) r.push_back(v.get<int>());
            op.push_back(std::move(r));
        }
        in.rack = validate_rack(std::move(labels), std::move(op));
        if (j.contains("q")) {
            std::vector<std::vector<Rational>> q;
            for (const auto& row : j.at("q")) q.push_back(rational_list(row));
            in.cocycle = validate_rack_cocycle(*in.rack, std::move(q));
        }
    }
    if (j.contains("phi")) {
        std::vector<std::vector<Rational>> phi;
        for (const auto& row : j.at("phi")) phi.push_back(rational_list(row));
        in.phi_table = std::move(phi);
    }
    return in;
}

GroupCocycleTable parse_group_cocycle(const Json& j, int n) {
    if (!j.is_object()) fail("SchemaError", "phi must be a JSON object");
    reject_unknown_keys(j, {"group", "values"});
    if (j.contains("group")) {
        std::string g = j.at("group").get<std::string>();
        if (g != "S" + std::to_string(n))
            fail("SchemaError", "phi group \"" + g + "\" does not match S" + std::to_string(n));
    }
    std::map<std::pair<GroupElement, GroupElement>, Rational> values;
    if (j.contains("values")) {
        for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it) {
            const std::string& key = it.key();
            auto comma = key.find(',');
            if (comma == std::string::npos)
                fail("SchemaError", "phi keys must look like \"(12),(34)\"");
            GroupElement a = parse_perm(key.substr(0, comma), n);
            GroupElement b = parse_perm(key.substr(comma + 1), n);
            values[{a, b}] = rational_from_json(*it);
        }
    }
    return GroupCocycleTable(n, std::move(values));
}

} // namespace qtwist
