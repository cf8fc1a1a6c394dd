// ============================================================================
// empl/cli.hpp — batch command-line front end
// ============================================================================
//
// Subcommands:
//
//   parse          parse a formula, print its canonical form
//   eval           valuate a formula in a model (per world + validity)
//   check-schema   check a schema over a model's signature
//   countermodel   bounded exhaustive countermodel search
//   prove          check a proof script (file or bundled)
//   qlattice verify  subspace lattice laws + lemma trials
//   fr run         the four-qubit protocol simulation
//   nogo           end-to-end pipeline: simulation facts + proof suite
//
// Exit status is 0 exactly when every check the subcommand ran passed;
// usage/configuration errors exit 2.  --json switches to machine-readable
// output with the same fields.
//
// ============================================================================

#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "empl/bundled.hpp"
#include "empl/countermodel.hpp"
#include "empl/fr.hpp"
#include "empl/kripke.hpp"
#include "empl/parse.hpp"
#include "empl/proof.hpp"
#include "empl/qlattice.hpp"

namespace empl::cli {

using nlohmann::json;

namespace detail {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

// --model accepts a path or "bundled:<name>"
inline KripkeModel load_model(const std::string& spec) {
    const std::string prefix = "bundled:";
    if (spec.rfind(prefix, 0) == 0) return bundled_model(spec.substr(prefix.size()));
    try {
        return parse_model(slurp(spec));
    } catch (const ModelError& e) {
        throw ModelError(spec + ": " + e.what());
    }
}

inline std::string fmt(double x) {
    std::ostringstream out;
    out << std::setprecision(15) << x;
    return out.str();
}

inline json trial_report_json(const TrialReport& r) {
    return json{{"name", r.name},
                {"dim", r.dim},
                {"trials", r.trials},
                {"applicable", r.applicable},
                {"failures", r.failures},
                {"noncommuting_logged", r.noncommuting_logged},
                {"max_residual", r.max_residual},
                {"ok", r.ok()}};
}

inline void print_trial_report(std::ostream& out, const TrialReport& r) {
    out << (r.ok() ? "[ ok ] " : "[FAIL] ") << r.name << " dim=" << r.dim
        << " trials=" << r.trials << " applicable=" << r.applicable
        << " failures=" << r.failures;
    if (r.noncommuting_logged) out << " noncommuting_logged=" << r.noncommuting_logged;
    out << " max_residual=" << fmt(r.max_residual) << "\n";
}

inline std::vector<AgentId> parse_agent_list(const std::vector<std::string>& names) {
    std::vector<AgentId> agents;
    for (const std::string& n : names) agents.push_back(AgentId{n});
    if (agents.empty()) agents = {AgentId{"A"}, AgentId{"B"}};
    return agents;
}

}  // namespace detail

// ----------------------------------------------------------------------------
// Subcommand bodies.  Each returns the process exit code.
// ----------------------------------------------------------------------------

struct CommonOpts {
    bool json_output = false;
};

inline int cmd_parse(const CommonOpts& common, const std::string& formula_text,
                     const std::vector<std::string>& agent_names, std::ostream& out,
                     std::ostream& err) {
    std::set<std::string> agents(agent_names.begin(), agent_names.end());
    try {
        Formula f = parse_formula(formula_text, agent_names.empty() ? nullptr : &agents);
        std::set<std::string> atoms = atoms_of(f);
        std::set<AgentId> used = agents_of(f);
        if (common.json_output) {
            json j{{"input", formula_text}, {"canonical", render(f)}, {"ok", true}};
            j["atoms"] = atoms;
            std::vector<std::string> agent_list;
            for (const AgentId& a : used) agent_list.push_back(a.name);
            j["agents"] = agent_list;
            out << j.dump() << "\n";
        } else {
            out << render(f) << "\n";
        }
        return 0;
    } catch (const ParseError& e) {
        if (common.json_output)
            out << json{{"input", formula_text}, {"ok", false}, {"error", e.what()}}.dump()
                << "\n";
        else
            err << "parse error " << e.what() << "\n";
        return 1;
    }
}

inline int cmd_eval(const CommonOpts& common, const std::string& model_spec,
                    const std::string& formula_text, const std::string& world,
                    std::ostream& out, std::ostream& err) {
    try {
        KripkeModel m = detail::load_model(model_spec);
        Formula f = parse_formula(formula_text);
        json j{{"model", model_spec}, {"formula", render(f)}};
        json per_world = json::object();
        bool all = true;
        for (int w = 0; w < static_cast<int>(m.worlds.size()); ++w) {
            int v = valuate(m, f, w);
            per_world[m.worlds[w]] = v;
            all = all && v == 1;
        }
        j["per_world"] = per_world;
        j["valid"] = all;
        bool pass = all;
        if (!world.empty()) {
            int w = m.world_index(world);
            if (w < 0) throw ModelError("no world named " + world);
            pass = valuate(m, f, w) == 1;
            j["world"] = world;
            j["value_at_world"] = pass ? 1 : 0;
        }
        if (common.json_output) {
            j["ok"] = pass;
            out << j.dump() << "\n";
        } else {
            for (const std::string& name : m.worlds)
                out << "V(" << render(f) << ", " << name
                    << ") = " << per_world[name].get<int>() << "\n";
            out << (all ? "valid in model" : "not valid in model") << "\n";
        }
        return pass ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int cmd_check_schema(const CommonOpts& common, const std::string& model_spec,
                            const std::string& schema_name,
                            const std::vector<std::string>& agent_names, std::ostream& out,
                            std::ostream& err) {
    try {
        KripkeModel m = detail::load_model(model_spec);
        const Schema& s = builtin_schema(schema_name);
        SchemaCheckResult r = check_schema(m, s, detail::parse_agent_list(agent_names));
        if (common.json_output) {
            json j{{"model", model_spec}, {"schema", schema_name}, {"ok", r.ok}};
            if (!r.ok) {
                j["bindings"] = r.bindings.str();
                j["world"] = m.worlds[r.world];
                j["instance"] = render(r.instance);
            }
            out << j.dump() << "\n";
        } else if (r.ok) {
            out << "schema " << schema_name << " holds over the model signature\n";
        } else {
            out << "counterexample: " << r.bindings.str() << " at world " << m.worlds[r.world]
                << " (instance " << render(r.instance) << ")\n";
        }
        return r.ok ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int cmd_countermodel(const CommonOpts& common, const std::string& target_text,
                            const std::vector<std::string>& assume_names,
                            const std::vector<std::string>& premise_texts,
                            const std::vector<std::string>& agent_names, SearchBounds bounds,
                            FrameConstraints frame, std::ostream& out, std::ostream& err) {
    try {
        Formula target = parse_formula(target_text);
        std::vector<Schema> assumed;
        for (const std::string& name : assume_names) assumed.push_back(builtin_schema(name));
        for (std::size_t k = 0; k < premise_texts.size(); ++k)
            assumed.push_back(Schema::ground("premise" + std::to_string(k + 1),
                                             parse_formula(premise_texts[k])));
        SearchOutcome o =
            search_countermodel(assumed, target, bounds, frame, detail::parse_agent_list(agent_names));
        bool found = o.status == SearchOutcome::Status::CountermodelFound;
        if (common.json_output) {
            json j{{"target", render(target)},
                   {"status", found ? "countermodel" : "exhausted"},
                   {"models_enumerated", o.models_enumerated}};
            if (found) j["model"] = write_model(*o.model);
            out << j.dump() << "\n";
        } else if (found) {
            out << "countermodel found after " << o.models_enumerated << " candidates:\n"
                << write_model(*o.model);
        } else {
            out << "exhausted " << o.models_enumerated
                << " candidate models within bounds; no countermodel (not a validity proof)\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int cmd_prove(const CommonOpts& common, const std::string& script_path,
                     const std::string& bundled_name, bool list, const std::string& export_path,
                     const std::vector<std::string>& drop_schemas, const std::string& mode_override,
                     std::ostream& out, std::ostream& err) {
    try {
        BundledKernel kernel = load_bundled();
        if (list) {
            for (const ProofScript& s : kernel.scripts)
                out << s.name << " (" << to_string(s.mode)
                    << (s.requires_refl ? ", requires REFL" : "") << ", "
                    << s.lines.size() << " lines)\n";
            return 0;
        }
        ProofScript script = [&] {
            if (!bundled_name.empty()) return kernel.script(bundled_name);
            return parse_script(detail::slurp(script_path));
        }();
        if (!export_path.empty()) {
            detail::spit(export_path, write_script(script));
            out << "exported " << script.name << " to " << export_path << "\n";
        }
        for (const std::string& name : drop_schemas) script = without_schema(script, name);
        if (!mode_override.empty())
            script = with_mode(script, mode_override == "classical" ? LogicMode::Classical
                                                                    : LogicMode::Intuitionistic);
        CheckResult r = check_proof(script, kernel.lemmas);
        if (common.json_output) {
            json j{{"script", script.name}, {"ok", r.ok}, {"lines", script.lines.size()}};
            if (!r.ok) {
                j["failed_line"] = r.failed_line;
                j["reason"] = r.reason;
            }
            out << j.dump() << "\n";
        } else if (r.ok) {
            out << script.name << ": ok (" << script.lines.size() << " lines, "
                << to_string(script.mode) << (script.requires_refl ? ", REFL" : "") << ")\n";
        } else {
            out << script.name << ": FAILED at line " << r.failed_line << ": " << r.reason
                << "\n";
        }
        return r.ok ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int cmd_qlattice_verify(const CommonOpts& common, std::vector<int> dims, int trials,
                               std::uint64_t seed, std::ostream& out, std::ostream& err) {
    try {
        if (dims.empty()) dims = {2, 3, 4};
        bool all_ok = true;
        json reports = json::array();
        for (int dim : dims) {
            if (dim < 2 || dim > 16) throw QlError("dimension must be in [2, 16]");
            for (const TrialReport& r :
                 {run_lattice_laws(dim, trials, seed), verify_lemma_contraposition(dim, trials, seed),
                  verify_lemma_connective_identity(dim, trials, seed)}) {
                all_ok = all_ok && r.ok();
                if (common.json_output)
                    reports.push_back(detail::trial_report_json(r));
                else
                    detail::print_trial_report(out, r);
            }
        }
        NondistributivityWitness w = nondistributivity_witness_dim2();
        all_ok = all_ok && w.witnessed;
        if (common.json_output) {
            json j{{"reports", reports},
                   {"nondistributivity_witnessed", w.witnessed},
                   {"lhs_rank", w.lhs.rank()},
                   {"rhs_rank", w.rhs.rank()},
                   {"ok", all_ok}};
            out << j.dump() << "\n";
        } else {
            out << (w.witnessed ? "[ ok ] " : "[FAIL] ")
                << "non-distributivity witness in dim 2: (p | q) & ~p has rank " << w.lhs.rank()
                << ", (p & ~p) | (q & ~p) has rank " << w.rhs.rank() << "\n";
        }
        return all_ok ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int cmd_fr_run(const CommonOpts& common, std::ostream& out, std::ostream& err) {
    try {
        fr::QState psi = fr::fr_state();
        fr::InferenceChainReport rep = fr::inference_chain_report();
        bool ok = rep.paradox;
        for (const fr::ChainCheck& c : rep.checks) ok = ok && c.holds;

        if (common.json_output) {
            json amps = json::object();
            for (std::size_t i = 0; i < psi.dim(); ++i) {
                if (std::abs(psi.amp[i]) == 0.0) continue;
                std::string key;
                for (int b = 0; b < psi.arity(); ++b)
                    key += psi.bit_of(i, b) ? '1' : '0';
                amps[key] = json{{"re", psi.amp[i].real()}, {"im", psi.amp[i].imag()}};
            }
            json checks = json::array();
            for (const fr::ChainCheck& c : rep.checks)
                checks.push_back(json{{"name", c.name},
                                      {"via", c.via},
                                      {"forbidden_probability", c.residual},
                                      {"conditional", c.conditional},
                                      {"holds", c.holds}});
            json j{{"state", amps},
                   {"checks", checks},
                   {"p_uok", rep.p_uok},
                   {"p_uok_wok", rep.p_ok_ok},
                   {"paradox", rep.paradox},
                   {"verdict", rep.verdict},
                   {"ok", ok}};
            out << j.dump() << "\n";
        } else {
            out << "protocol state over R,A,S,B:\n";
            for (std::size_t i = 0; i < psi.dim(); ++i) {
                if (std::abs(psi.amp[i]) == 0.0) continue;
                out << "  |";
                for (int b = 0; b < psi.arity(); ++b) out << psi.bit_of(i, b);
                out << ">  " << detail::fmt(psi.amp[i].real()) << "\n";
            }
            for (const fr::ChainCheck& c : rep.checks)
                out << (c.holds ? "[ ok ] " : "[FAIL] ") << c.name << "  (" << c.via
                    << ", forbidden probability " << detail::fmt(c.residual) << ")\n";
            out << "P[u=ok] = " << detail::fmt(rep.p_uok) << "\n";
            out << "P[u=ok, w=ok] = " << detail::fmt(rep.p_ok_ok) << "\n";
            out << rep.verdict << "\n";
        }
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

// The integrated pipeline: protocol facts, certified-proposition injection,
// the whole proof suite, then the summary table.
inline int cmd_nogo(const CommonOpts& common, const std::vector<std::string>& drop_schemas,
                    const std::string& mode_override, std::ostream& out, std::ostream& err) {
    try {
        bool all_ok = true;
        json j;

        // 1. simulation facts
        fr::InferenceChainReport rep = fr::inference_chain_report();
        bool fr_ok = rep.paradox && std::abs(rep.p_ok_ok - 1.0 / 12.0) <= fr::kTol;
        for (const fr::ChainCheck& c : rep.checks) fr_ok = fr_ok && c.holds;
        all_ok = all_ok && fr_ok;

        // 2. certified propositions injected as interpretation facts on a
        //    reflexive one-world model (the Q linkage: what the physics
        //    certifies, the reasoning agent knows)
        auto props = fr::certified_propositions();
        KripkeModel injected;
        injected.worlds = {"w"};
        injected.relation = {{0, 0}};
        bool inject_ok = true;
        for (const auto& [name, bit] : props) {
            Formula atom = Formula::atom(name);
            Formula known = Formula::knows(AgentId{"A"}, atom);
            injected.interp[atom] = {static_cast<std::uint8_t>(bit)};
            injected.interp[known] = {static_cast<std::uint8_t>(bit)};
            std::set<Formula> c = closure(known);
            injected.signature.insert(c.begin(), c.end());
            inject_ok = inject_ok && bit == 1;
        }
        injected.validate();
        for (const auto& [name, bit] : props)
            inject_ok = inject_ok &&
                        valuate(injected, Formula::knows(AgentId{"A"}, Formula::atom(name)), 0) == bit;
        all_ok = all_ok && inject_ok;

        // 3. proof suite
        BundledKernel kernel = load_bundled();
        struct Row {
            std::string name;
            bool ok;
            int line;
            std::string reason;
        };
        std::vector<Row> rows;
        std::string first_failure;
        for (const ProofScript& base : kernel.scripts) {
            ProofScript script = base;
            for (const std::string& name : drop_schemas) script = without_schema(script, name);
            if (!mode_override.empty())
                script = with_mode(script, mode_override == "classical"
                                               ? LogicMode::Classical
                                               : LogicMode::Intuitionistic);
            CheckResult r = check_proof(script, kernel.lemmas);
            rows.push_back({script.name, r.ok, r.failed_line, r.reason});
            if (!r.ok && first_failure.empty()) first_failure = script.name;
            all_ok = all_ok && r.ok;
        }

        // 4. summary in the shape: assumption violated / rejected axioms /
        //    deduction mode / REFL needed — read off the checked scripts
        auto axioms_of = [&](const std::string& lemma) {
            std::string text;
            for (const std::string& d : kernel.lemmas.at(lemma).deps) {
                if (!text.empty()) text += " or ";
                text += d;
            }
            return text;
        };
        struct SummaryRow {
            std::string violated, axioms, deduction, refl;
        };
        std::vector<SummaryRow> summary{
            {"Q (quantum predictions)", axioms_of("VIOLATING_Q"),
             to_string(kernel.script("violating_q").mode),
             kernel.script("violating_q").requires_refl ? "yes" : "no"},
            {"S (single outcome)", axioms_of("VIOLATING_S"),
             to_string(kernel.script("violating_s").mode),
             kernel.script("violating_s").requires_refl ? "yes" : "no"},
            {"C (consistency)", axioms_of("VIOLATING_C"),
             to_string(kernel.script("violating_c").mode),
             kernel.script("violating_c").requires_refl ? "yes" : "no"},
            {"U (large-scale unitarity)", "(configuration premise only)", "-", "-"},
        };

        if (common.json_output) {
            j["p_uok_wok"] = rep.p_ok_ok;
            j["fr_ok"] = fr_ok;
            json certified = json::object();
            for (const auto& [name, bit] : props) certified[name] = bit;
            j["certified"] = certified;
            j["injection_ok"] = inject_ok;
            json scripts = json::array();
            for (const Row& r : rows) {
                json row{{"name", r.name}, {"ok", r.ok}};
                if (!r.ok) {
                    row["failed_line"] = r.line;
                    row["reason"] = r.reason;
                }
                scripts.push_back(row);
            }
            j["scripts"] = scripts;
            if (!first_failure.empty()) j["first_failure"] = first_failure;
            json table = json::array();
            for (const SummaryRow& s : summary)
                table.push_back(json{{"assumption_violated", s.violated},
                                     {"rejected_axioms", s.axioms},
                                     {"deduction", s.deduction},
                                     {"refl_needed", s.refl}});
            j["summary"] = table;
            j["ok"] = all_ok;
            j["verdict"] = all_ok ? "CONST & KCONT & DIST & REFL jointly refuted" : "pipeline failed";
            out << j.dump() << "\n";
        } else {
            out << (fr_ok ? "[ ok ] " : "[FAIL] ") << "protocol: P[u=ok, w=ok] = "
                << detail::fmt(rep.p_ok_ok) << ", deterministic chain certified\n";
            out << (inject_ok ? "[ ok ] " : "[FAIL] ")
                << "certified propositions injected as interpretation facts:";
            for (const auto& [name, bit] : props) out << " " << name << "=" << bit;
            out << "\n";
            for (const Row& r : rows) {
                out << (r.ok ? "[ ok ] " : "[FAIL] ") << "script " << r.name;
                if (!r.ok) out << " (line " << r.line << ": " << r.reason << ")";
                out << "\n";
            }
            if (!first_failure.empty()) out << "first failure: " << first_failure << "\n";
            out << "\nassumption violated        | rejected axioms         | deduction      | REFL\n";
            out << "---------------------------+-------------------------+----------------+-----\n";
            for (const SummaryRow& s : summary) {
                out << std::left << std::setw(27) << s.violated << "| " << std::setw(24)
                    << s.axioms << "| " << std::setw(15) << s.deduction << "| " << s.refl
                    << "\n";
            }
            out << "\n"
                << (all_ok ? "verdict: CONST & KCONT & DIST & REFL jointly refuted"
                           : "verdict: pipeline failed")
                << "\n";
        }
        return all_ok ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

// ----------------------------------------------------------------------------
// Argument wiring.
// ----------------------------------------------------------------------------

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"epistemic modal logic toolkit: models, proofs, quantum-logic "
                 "semantics, and the four-agent protocol simulation"};
    app.require_subcommand(1);
    CommonOpts common;
    app.add_flag("--json", common.json_output, "machine-readable output");

    // parse
    auto* parse_cmd = app.add_subcommand("parse", "parse a formula");
    std::string formula_text;
    std::vector<std::string> agent_names;
    parse_cmd->add_option("--formula", formula_text, "formula text")->required();
    parse_cmd->add_option("--agents", agent_names, "allowed agent ids (default: any)");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "valuate a formula in a model");
    std::string model_spec, eval_formula, world;
    eval_cmd->add_option("--model", model_spec, "model file or bundled:<name>")->required();
    eval_cmd->add_option("--formula", eval_formula, "formula text")->required();
    eval_cmd->add_option("--world", world, "restrict the verdict to one world");

    // check-schema
    auto* cs_cmd = app.add_subcommand("check-schema", "check a schema over a model");
    std::string cs_model, cs_schema;
    std::vector<std::string> cs_agents;
    cs_cmd->add_option("--model", cs_model, "model file or bundled:<name>")->required();
    cs_cmd->add_option("--schema", cs_schema, "schema name (CONST, KCONT, DIST, S, C, ...)")
        ->required();
    cs_cmd->add_option("--agents", cs_agents, "agents for agent metavariables (default A B)");

    // countermodel
    auto* cm_cmd = app.add_subcommand("countermodel", "bounded countermodel search");
    std::string cm_target;
    std::vector<std::string> cm_assume, cm_premises, cm_agents;
    SearchBounds bounds;
    FrameConstraints frame;
    cm_cmd->add_option("--target", cm_target, "formula that should fail somewhere")->required();
    cm_cmd->add_option("--assume", cm_assume, "schema names assumed valid");
    cm_cmd->add_option("--premise", cm_premises, "ground formulas assumed valid");
    cm_cmd->add_option("--agents", cm_agents, "agents for schema instantiation (default A B)");
    cm_cmd->add_option("--max-worlds", bounds.max_worlds, "world bound (default 3)");
    cm_cmd->add_option("--max-atoms", bounds.max_atoms, "atom bound (default 2)");
    cm_cmd->add_option("--max-agents", bounds.max_agents, "agent bound (default 2)");
    cm_cmd->add_option("--budget", bounds.budget, "candidate-model budget");
    cm_cmd->add_flag("--require-reflexive", frame.require_reflexive, "restrict to reflexive frames");
    cm_cmd->add_flag("--require-transitive", frame.require_transitive, "restrict to transitive frames");
    cm_cmd->add_flag("--require-symmetric", frame.require_symmetric, "restrict to symmetric frames");

    // prove
    auto* prove_cmd = app.add_subcommand("prove", "check a proof script");
    std::string script_path, bundled_name, export_path, mode_override;
    std::vector<std::string> drop_schemas;
    bool list_scripts = false;
    prove_cmd->add_option("--script", script_path, "proof script file");
    prove_cmd->add_option("--bundled", bundled_name, "bundled script name");
    prove_cmd->add_flag("--list", list_scripts, "list bundled scripts");
    prove_cmd->add_option("--export", export_path, "write the script text to a file");
    prove_cmd->add_option("--drop-schema", drop_schemas, "remove a schema before checking");
    prove_cmd->add_option("--mode", mode_override, "force intuitionistic or classical mode")
        ->check(CLI::IsMember({"intuitionistic", "classical"}));

    // qlattice verify
    auto* ql_cmd = app.add_subcommand("qlattice", "projective-subspace lattice checks");
    auto* qlv_cmd = ql_cmd->add_subcommand("verify", "run the seeded trial suites");
    std::vector<int> dims;
    int trials = 1000;
    std::uint64_t seed = 0;
    qlv_cmd->add_option("--dim", dims, "ambient dimensions (default 2 3 4)");
    qlv_cmd->add_option("--trials", trials, "trials per suite (default 1000)");
    qlv_cmd->add_option("--seed", seed, "RNG seed (default 0)");
    ql_cmd->require_subcommand(1);

    // fr run
    auto* fr_cmd = app.add_subcommand("fr", "four-qubit protocol simulation");
    auto* frr_cmd = fr_cmd->add_subcommand("run", "build the state and verify the chain");
    fr_cmd->require_subcommand(1);

    // nogo
    auto* nogo_cmd = app.add_subcommand("nogo", "end-to-end pipeline with summary table");
    std::vector<std::string> nogo_drop;
    std::string nogo_mode;
    nogo_cmd->add_option("--drop-schema", nogo_drop, "remove a schema from every script");
    nogo_cmd->add_option("--mode", nogo_mode, "force intuitionistic or classical mode")
        ->check(CLI::IsMember({"intuitionistic", "classical"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (*parse_cmd) return cmd_parse(common, formula_text, agent_names, out, err);
    if (*eval_cmd) return cmd_eval(common, model_spec, eval_formula, world, out, err);
    if (*cs_cmd) return cmd_check_schema(common, cs_model, cs_schema, cs_agents, out, err);
    if (*cm_cmd)
        return cmd_countermodel(common, cm_target, cm_assume, cm_premises, cm_agents, bounds,
                                frame, out, err);
    if (*prove_cmd)
        return cmd_prove(common, script_path, bundled_name, list_scripts, export_path,
                         drop_schemas, mode_override, out, err);
    if (*qlv_cmd) return cmd_qlattice_verify(common, dims, trials, seed, out, err);
    if (*frr_cmd) return cmd_fr_run(common, out, err);
    if (*nogo_cmd) return cmd_nogo(common, nogo_drop, nogo_mode, out, err);
    err << "no subcommand\n";
    return 2;
}

}  // namespace empl::cli
