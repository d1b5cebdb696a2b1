#include "qtwist/cli.hpp"

#include <chrono>

namespace qtwist {

const std::vector<std::string>& command_list() {
    static const std::vector<std::string> cmds{
        "validate",        "present",     "serre",      "twist-to-dj",
        "verify-iso",      "quotient-dj", "halfroot-cocycle", "rack-check",
        "nichols-hilbert", "hq-deform",   "compose-twist"};
    return cmds;
}

namespace {

bool is_datum_command(const std::string& c) {
    return c == "validate" || c == "present" || c == "serre" || c == "twist-to-dj" ||
           c == "verify-iso" || c == "quotient-dj" || c == "halfroot-cocycle";
}

std::vector<std::string> datum_extras(const std::string& c) {
    if (c == "present") return {"which"};
    if (c == "serre") return {"serre"};
    if (c == "verify-iso") return {"negative_control"};
    return {};
}

FKCocycle cocycle_kind(const Json& j) {
    std::string c = j.value("cocycle", "minus_one");
    if (c == "minus_one") return FKCocycle::MinusOne;
    if (c == "chi") return FKCocycle::Chi;
    fail("SchemaError", "cocycle must be \"minus_one\" or \"chi\"");
}

} // namespace

Job parse_input(const std::string& command, const Json& input, std::optional<int> max_degree,
                long size_budget) {
    bool known = false;
    for (const auto& c : command_list()) known = known || c == command;
    if (!known) fail("UnknownCommand", "no such command \"" + command + "\"");
    Job job{command, input, max_degree, size_budget};
    // schema validation happens eagerly so bad files fail before any work
    if (is_datum_command(command)) {
        parse_datum_file(input, datum_extras(command));
    } else if (command == "rack-check") {
        parse_rack_file(input);
    } else if (command == "nichols-hilbert") {
        if (!input.contains("n")) fail("SchemaError", "missing key \"n\"");
        cocycle_kind(input);
    } else if (command == "hq-deform" || command == "compose-twist") {
        if (!input.contains("n")) fail("SchemaError", "missing key \"n\"");
        if (!input.contains("lambda")) fail("SchemaError", "missing key \"lambda\"");
        rational_from_json(input.at("lambda"));
        if (command == "compose-twist" && !input.contains("phi"))
            fail("SchemaError", "missing key \"phi\"");
    }
    return job;
}

namespace {

ExecResult run(const Job& job) {
    Json out;
    out["command"] = job.command;
    out["input_hash"] = input_hash(job.input);
    bool pass = true;

    const std::string& cmd = job.command;
    if (is_datum_command(cmd)) {
        DatumInput in = parse_datum_file(job.input, datum_extras(cmd));
        int D = job.max_degree_override.value_or(std::min(in.max_degree, 6));
        if (cmd == "verify-iso") D = job.max_degree_override.value_or(4);
        out["bounds"] = Json{{"max_degree", D}, {"size_budget", job.size_budget}};

        if (cmd == "validate") {
            out["theta"] = in.datum.theta();
            Json comps = Json::array();
            for (const auto& comp : in.datum.component_list()) {
                Json c = Json::array();
                for (int i : comp) c.push_back(i + 1);
                comps.push_back(std::move(c));
            }
            out["components"] = std::move(comps);
            try {
                Symmetrizer d = symmetrize(in.datum.cartan);
                out["symmetrizer"] = d.d;
            } catch (const Error& e) {
                out["symmetrizer"] = e.code();
            }
            Json l = Json::array();
            for (const auto& v : in.datum.linking) l.push_back(v.str());
            out["linking"] = std::move(l);
            out["warnings"] = in.datum.warnings;
            if (in.q_I) {
                DJDatum dj = build_dj_datum(in.datum, *in.q_I);
                out["dj_twist_equivalent"] = is_twist_equivalent(in.datum.q, dj.base.q);
            }
        } else if (cmd == "present") {
            std::string which = in.extras.value("which", "ured");
            Presentation P = which == "hpr" ? build_hpr(in.datum) : build_ured(in.datum);
            Json rels = Json::array();
            for (const auto& r : P.relations) rels.push_back(element_to_json(*P.model, r));
            out["which"] = which;
            out["relations"] = std::move(rels);
        } else if (cmd == "serre") {
            if (!in.extras.contains("serre")) fail("SchemaError", "missing key \"serre\"");
            const Json& s = in.extras.at("serre");
            SerreKind kind = s.value("kind", "x") == "y" ? SerreKind::Y : SerreKind::X;
            auto model = MonomialYD::diagonal(in.datum);
            SmashElement z = serre_expand(in.datum, *model, kind, s.at("i").get<int>() - 1,
                                          s.at("j").get<int>() - 1, s.at("n").get<int>());
            out["element"] = element_to_json(*model, z);
            out["printed"] = to_string(*model, z);
        } else if (cmd == "verify-iso") {
            std::optional<Rational> mutate;
            if (in.extras.value("negative_control", "") == "R5") mutate = Rational(1);
            VerifyReport rep = verify_isomorphism(in.datum, D, mutate);
            Json r = report_to_json(rep);
            r["datum_hash"] = out["input_hash"];
            for (auto it = r.begin(); it != r.end(); ++it) out[it.key()] = it.value();
            pass = rep.pass;
        } else if (cmd == "twist-to-dj") {
            if (!in.q_I) fail("SchemaError", "twist-to-dj needs \"q_I\"");
            TwistToDJResult res = twist_to_dj(in.datum, *in.q_I, D);
            out["report"] = report_to_json(res.report);
            out["sigma"] = cocycle_to_json(res.sigma);
            pass = res.report.pass;
        } else if (cmd == "quotient-dj") {
            if (!in.q_I) fail("SchemaError", "quotient-dj needs \"q_I\"");
            DJDatum dj = build_dj_datum(in.datum, *in.q_I);
            Presentation P = quotient_dj(build_ured(dj.base));
            const MonomialYD& V = *P.model;
            Json rels = Json::array();
            for (const auto& r : P.relations) rels.push_back(element_to_json(V, r));
            out["relations"] = std::move(rels);
            bool collapsed = true;
            for (int i = 0; i < dj.base.theta() && collapsed; ++i)
                collapsed = equal_mod(sm_group(dj.base.K(i)), sm_group(dj.base.L(i)), P, D);
            out["K_equals_L"] = collapsed;
            pass = collapsed;
        } else { // halfroot-cocycle
            HopfCocycle sigma = hpr_halfroot_cocycle(in.datum, in.radicals);
            out["sigma"] = cocycle_to_json(sigma);
            auto model = MonomialYD::diagonal(in.datum);
            // omega_mu vs omega'_mu agreement and epsilon-vanishing on words
            bool agree = true;
            int theta = in.datum.theta();
            for (int i = 0; i < theta && agree; ++i)
                for (int j = 0; j < theta && agree; ++j) {
                    SmashMonomial w{{}, in.datum.K(i)};
                    SmashMonomial wp{{}, in.datum.L(i, -1)};
                    SmashMonomial v{{}, in.datum.K(j)};
                    agree = sigma.eval(*model, w, v) == sigma.eval(*model, wp, v);
                }
            bool vanish = true;
            for (int i = 0; i < model->size() && vanish; ++i)
                vanish = sigma.eval(*model, SmashMonomial{{i}, model->group_identity()},
                                    SmashMonomial{{}, in.datum.K(0)})
                             .is_zero();
            out["omega_agreement"] = agree;
            out["vanishes_off_group"] = vanish;
            pass = agree && vanish;
        }
    } else if (cmd == "rack-check") {
        RackInput in = parse_rack_file(job.input);
        out["bounds"] = Json{{"size_budget", job.size_budget}};
        out["elements"] = static_cast<int>(in.rack->size());
        out["rack_valid"] = true; // parse_rack_file validated already
        if (in.cocycle) out["cocycle_valid"] = true;
        if (in.phi_table) {
            if (!in.cocycle) fail("SchemaError", "phi twist needs a base cocycle");
            auto res = twist_rack_cocycle(*in.rack, *in.cocycle, *in.phi_table);
            out["twist_valid"] = res.valid;
            bool twisted_is_cocycle = !rack_cocycle_violation(*in.rack, res.q_phi).has_value();
            out["twisted_is_cocycle"] = twisted_is_cocycle;
            out["iff_agreement"] = res.valid == twisted_is_cocycle;
            if (res.witness) {
                out["witness"] = {(*res.witness)[0], (*res.witness)[1], (*res.witness)[2]};
            }
            pass = res.valid == twisted_is_cocycle;
        }
    } else if (cmd == "nichols-hilbert") {
        int n = job.input.at("n").get<int>();
        int maxdeg = job.max_degree_override.value_or(job.input.value("max_degree", 4));
        out["bounds"] = Json{{"max_degree", maxdeg}, {"size_budget", job.size_budget}};
        auto series = nichols_hilbert(n, cocycle_kind(job.input), maxdeg, job.size_budget);
        out["series"] = series;
    } else if (cmd == "hq-deform") {
        int n = job.input.at("n").get<int>();
        Rational lambda = rational_from_json(job.input.at("lambda"));
        out["bounds"] = Json{{"size_budget", job.size_budget}};
        VerifyReport rep = verify_exp_deformation(n, lambda, job.size_budget);
        out["report"] = report_to_json(rep);
        pass = rep.pass;
    } else { // compose-twist
        int n = job.input.at("n").get<int>();
        Rational lambda = rational_from_json(job.input.at("lambda"));
        out["bounds"] = Json{{"size_budget", job.size_budget}};
        GroupCocycleTable phi = parse_group_cocycle(job.input.at("phi"), n);
        VerifyReport rep = compose_with_group_twist(n, phi, lambda, job.size_budget);
        out["report"] = report_to_json(rep);
        pass = rep.pass;
    }

    out["pass"] = pass;
    return ExecResult{std::move(out), pass ? 0 : 1};
}

} // namespace

ExecResult execute(const Job& job) {
    auto t0 = std::chrono::steady_clock::now();
    ExecResult res;
    try {
        res = run(job);
    } catch (const Error& e) {
        res.report = Json{{"command", job.command},
                          {"input_hash", input_hash(job.input)},
                          {"error", Json{{"code", e.code()}, {"message", e.what()}}},
                          {"pass", false}};
        res.exit_code = 2;
    }
    auto t1 = std::chrono::steady_clock::now();
    res.report["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return res;
}

} // namespace qtwist
