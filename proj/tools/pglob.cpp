// pglob: exact-arithmetic validation and globalization of partial group
// actions and representations on finite-dimensional algebras.
//
// Subcommands read one self-contained JSON document and write a JSON report
// to stdout. Exit codes: 0 all checks pass, 1 a mathematical check failed,
// 2 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pglob/io.hpp"

namespace {

using pglob::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pglob::InputError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

/// Runs every validator appropriate to the entity kind; an entity whose
/// construction throws a MathError becomes a failed check with the error
/// text as witness.
int cmd_validate(const std::string& path) {
    pglob::Workspace ws = pglob::Workspace::parse(read_file(path));
    json entities = json::object();
    bool all = true;

    auto record = [&](const std::string& key, const pglob::ValidationReport& rep) {
        entities[key] = pglob::report_to_json(rep);
        all = all && rep.overall();
    };
    auto record_error = [&](const std::string& key, const std::string& what) {
        pglob::ValidationReport rep;
        rep.add("constructible", false, what);
        record(key, rep);
    };

    for (const auto& [name, raw] : ws.groups()) {
        try {
            ws.build_group(name);
            pglob::ValidationReport rep;
            rep.add("group_axioms", true);
            record("groups/" + name, rep);
        } catch (const pglob::MathError& e) {
            record_error("groups/" + name, e.what());
        }
    }
    for (const auto& [name, raw] : ws.algebras()) {
        try {
            pglob::Algebra a = ws.build_algebra(name);
            pglob::ValidationReport rep;
            rep.add("well_formed", true);
            if (raw.kind) {
                bool ok = *raw.kind == pglob::AlgebraKind::associative ? pglob::is_associative(a)
                                                                       : pglob::is_lie(a);
                rep.add("declared_kind", ok,
                        ok ? "" : "algebra is not " + pglob::algebra_kind_name(*raw.kind));
            }
            record("algebras/" + name, rep);
        } catch (const pglob::MathError& e) {
            record_error("algebras/" + name, e.what());
        }
    }
    for (const auto& [name, raw] : ws.global_actions()) {
        try {
            record("global_actions/" + name,
                   pglob::check_global_action(ws.build_global_action(name)));
        } catch (const pglob::MathError& e) {
            record_error("global_actions/" + name, e.what());
        }
    }
    for (const auto& [name, raw] : ws.partial_actions()) {
        try {
            record("partial_actions/" + name,
                   pglob::check_partial_action(ws.build_partial_action(name)));
        } catch (const pglob::MathError& e) {
            record_error("partial_actions/" + name, e.what());
        }
    }
    for (const auto& [name, raw] : ws.partial_reps()) {
        try {
            pglob::PartialRep rep = ws.build_partial_rep(name);
            pglob::ValidationReport out = pglob::check_partial_rep(rep);
            if (rep.target_kind == pglob::TargetKind::algebra && out.overall())
                out.merge("ideal", pglob::check_ideal_condition(rep));
            record("partial_reps/" + name, out);
        } catch (const pglob::MathError& e) {
            record_error("partial_reps/" + name, e.what());
        }
    }
    for (const auto& [name, raw] : ws.derivation_actions()) {
        try {
            record("derivation_actions/" + name,
                   pglob::check_derivation_action(ws.build_derivation_action(name)));
        } catch (const pglob::MathError& e) {
            record_error("derivation_actions/" + name, e.what());
        }
    }
    for (const auto& [name, raw] : ws.covariant()) {
        try {
            if (raw.is_dilation())
                record("covariant/" + name, pglob::check_dilated(ws.build_dilated(name)));
            else
                record("covariant/" + name, pglob::check_covariant(ws.build_covariant(name)));
        } catch (const pglob::MathError& e) {
            record_error("covariant/" + name, e.what());
        }
    }

    emit(json{{"command", "validate"}, {"entities", entities}, {"overall", all}});
    return all ? kExitOk : kExitCheckFailed;
}

std::vector<pglob::Polynomial> variety_from_spec(const std::string& spec) {
    if (spec == "lie") return pglob::lie_identities();
    if (spec == "associative") return pglob::associative_identities();
    // Otherwise a file: { "identities": [ { "n_vars": n, "terms": [
    //   { "coeff": "p/q", "monomial": "((x1 x2) x3)" }, ... ] }, ... ] }
    json doc;
    try {
        doc = json::parse(read_file(spec));
    } catch (const json::parse_error& e) {
        throw pglob::InputError(std::string("ParseError in variety file: ") + e.what());
    }
    if (!doc.contains("identities") || !doc["identities"].is_array())
        throw pglob::InputError("variety file needs an \"identities\" array");
    std::vector<pglob::Polynomial> out;
    for (const auto& ident : doc["identities"]) {
        if (!ident.contains("n_vars") || !ident.contains("terms"))
            throw pglob::InputError("each identity needs n_vars and terms");
        std::vector<pglob::Term> terms;
        for (const auto& t : ident["terms"])
            terms.push_back(pglob::Term{
                pglob::rational_from_json(t.at("coeff")),
                pglob::Monomial::parse(t.at("monomial").get<std::string>())});
        out.push_back(pglob::Polynomial(std::move(terms), ident["n_vars"].get<std::size_t>()));
    }
    return out;
}

int cmd_globalize(const std::string& path, const std::string& rep_name,
                  const std::string& variety) {
    pglob::Workspace ws = pglob::Workspace::parse(read_file(path));
    pglob::PartialRep rep = ws.build_partial_rep(rep_name);

    json out{{"command", "globalize"}, {"rep", rep_name}};
    auto axioms = pglob::check_partial_rep(rep);
    out["rep_axioms"] = pglob::report_to_json(axioms);
    if (!axioms.overall()) {
        out["overall"] = false;
        emit(out);
        return kExitCheckFailed;
    }

    pglob::LambdaSpace ls = pglob::build_lambda(rep);
    out["lambda"] = pglob::lambda_to_json(ls);
    out["global"] = pglob::is_global_rep(rep);

    bool all = true;
    if (ls.has_product()) {
        auto wd = pglob::check_product_well_defined(ls);
        auto glob = pglob::check_globalization(ls);
        out["product_well_defined"] = pglob::report_to_json(wd);
        out["globalization"] = pglob::report_to_json(glob);
        all = wd.overall() && glob.overall();
        if (!variety.empty()) {
            auto var = pglob::check_variety(ls, variety_from_spec(variety));
            out["variety"] = pglob::report_to_json(var);
            all = all && var.overall();
        }
    } else if (rep.target_kind == pglob::TargetKind::algebra) {
        // Module-level Lambda was still emitted above.
        out["error"] = "NotIdeal: " + ls.product_refusal();
        all = false;
    } else if (!variety.empty()) {
        throw pglob::InputError("variety checks need an algebra-valued rep");
    }
    out["overall"] = all;
    emit(out);
    return all ? kExitOk : kExitCheckFailed;
}

int cmd_covariant(const std::string& path, const std::string& cov_name, bool dilate,
                  const std::string& adjoint_with) {
    pglob::Workspace ws = pglob::Workspace::parse(read_file(path));
    auto it = ws.covariant().find(cov_name);
    if (it == ws.covariant().end())
        throw pglob::InputError("unknown covariant entry \"" + cov_name + "\"");

    json out{{"command", "covariant"}, {"entry", cov_name}};
    bool all = true;

    if (it->second.is_dilation()) {
        pglob::DilatedRep d = ws.build_dilated(cov_name);
        auto rep = pglob::check_dilated(d);
        out["dilated"] = pglob::report_to_json(rep);
        all = rep.overall();
    } else {
        pglob::CovariantRep c = ws.build_covariant(cov_name);
        auto rep = pglob::check_covariant(c);
        out["covariant"] = pglob::report_to_json(rep);
        all = rep.overall();
        if (all) {
            pglob::LiftResult lift = pglob::lift_to_lambda(c);
            json lifted{{"w_dim", lift.dilated.w_dim},
                        {"module_lambda_dim", lift.module_lambda.dim()},
                        {"T", pglob::matrix_to_json(lift.dilated.T)}};
            if (dilate) {
                json rho = json::object();
                for (std::size_t g = 0; g < lift.dilated.rho.size(); ++g)
                    rho[std::to_string(g)] = pglob::matrix_to_json(lift.dilated.rho[g]);
                lifted["rho"] = rho;
                auto drep = pglob::check_dilated(lift.dilated);
                lifted["report"] = pglob::report_to_json(drep);
                all = all && drep.overall();
            }
            out["lift"] = lifted;
            if (!adjoint_with.empty()) {
                pglob::DilatedRep d = ws.build_dilated(adjoint_with);
                auto adj = pglob::check_adjunction(c, d);
                out["adjunction"] = {{"with", adjoint_with},
                                     {"dim_hom_dilated", adj.dim_hom_dilated},
                                     {"dim_hom_covariant", adj.dim_hom_covariant},
                                     {"report", pglob::report_to_json(adj.checks)}};
                all = all && adj.checks.overall();
            }
        }
    }
    out["overall"] = all;
    emit(out);
    return all ? kExitOk : kExitCheckFailed;
}

int cmd_semidirect(const std::string& path, const std::string& lambda_name,
                   const std::string& pi_name, const std::string& action_name) {
    pglob::Workspace ws = pglob::Workspace::parse(read_file(path));
    pglob::PartialRep lam = ws.build_partial_rep(lambda_name);
    pglob::PartialRep pi = ws.build_partial_rep(pi_name);
    if (lam.target_kind != pglob::TargetKind::algebra ||
        pi.target_kind != pglob::TargetKind::algebra)
        throw pglob::InputError("semidirect needs algebra-valued reps");
    pglob::DerivationAction da = ws.build_derivation_action(action_name);

    pglob::SemidirectIso iso = pglob::check_semidirect_iso(pglob::IdealPartialRep{lam},
                                                           pglob::IdealPartialRep{pi}, da);
    json out{{"command", "semidirect"},
             {"lambda", lambda_name},
             {"pi", pi_name},
             {"action", action_name},
             {"lambda_of_semidirect", pglob::algebra_to_json(iso.lambda_of_semidirect)},
             {"semidirect_of_lambdas", pglob::algebra_to_json(iso.semidirect_of_lambdas)},
             {"dim_lambda_L", iso.dim_lambda_L},
             {"dim_lambda_M", iso.dim_lambda_M},
             {"psi", pglob::matrix_to_json(iso.psi)},
             {"phi", pglob::matrix_to_json(iso.phi)},
             {"report", pglob::report_to_json(iso.checks)},
             {"overall", iso.checks.overall()}};
    emit(out);
    return iso.checks.overall() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact globalization of partial group actions on algebras"};
    app.require_subcommand(1);

    std::string file, rep_name, variety, cov_name, adjoint_with;
    std::string sd_lambda, sd_pi, sd_action;
    bool dilate = false;

    auto* validate = app.add_subcommand("validate", "run every entity's validator");
    validate->add_option("file", file, "input document")->required();

    auto* globalize = app.add_subcommand("globalize", "build and verify Lambda for a rep");
    globalize->add_option("file", file, "input document")->required();
    globalize->add_option("--rep", rep_name, "partial rep name")->required();
    globalize->add_option("--variety", variety, "lie | associative | identities file");

    auto* covariant = app.add_subcommand("covariant", "covariant/dilation checks and the lift");
    covariant->add_option("file", file, "input document")->required();
    covariant->add_option("--cov", cov_name, "covariant entry name")->required();
    covariant->add_flag("--dilate", dilate, "emit the full lifted dilation with its report");
    covariant->add_option("--adjoint", adjoint_with, "dilation entry for the adjunction check");

    auto* semidirect =
        app.add_subcommand("semidirect", "verify Lambda(L⋉M) ≅ Lambda(L)⋉Lambda(M)");
    semidirect->add_option("file", file, "input document")->required();
    semidirect->add_option("--lambda", sd_lambda, "ideal partial rep on L")->required();
    semidirect->add_option("--pi", sd_pi, "ideal partial rep on M")->required();
    semidirect->add_option("--action", sd_action, "derivation action name")->required();

    try {
        app.parse(argc, argv);
        if (validate->parsed()) return cmd_validate(file);
        if (globalize->parsed()) return cmd_globalize(file, rep_name, variety);
        if (covariant->parsed()) return cmd_covariant(file, cov_name, dilate, adjoint_with);
        if (semidirect->parsed()) return cmd_semidirect(file, sd_lambda, sd_pi, sd_action);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    } catch (const pglob::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const pglob::MathError& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInputError;
}
