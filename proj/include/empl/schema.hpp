// ============================================================================
// empl/schema.hpp — axiom schemas and instantiation
// ============================================================================
//
// A Schema is a formula-shaped tree whose leaves may be formula metavariables
// (phi, psi, alpha, beta, ...) and whose K-operators may carry agent
// metavariables (i, j).  Internally metavariables are stored as reserved
// atom / agent names prefixed with '$', which the concrete syntax cannot
// produce, so they can never collide with user formulas.
//
// instantiate() performs simultaneous replacement.  EMPL has no binders, so
// plain replacement is capture-free.
//
// ============================================================================

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "empl/formula.hpp"
#include "empl/parse.hpp"

namespace empl {

struct Bindings {
    std::map<std::string, Formula> formulas;  // metavariable name -> formula
    std::map<std::string, AgentId> agents;    // metavariable name -> agent

    std::string str() const {
        std::string out;
        for (const auto& [k, v] : formulas) {
            if (!out.empty()) out += ", ";
            out += k + " := " + render(v);
        }
        for (const auto& [k, v] : agents) {
            if (!out.empty()) out += ", ";
            out += k + " := " + v.name;
        }
        return out;
    }
};

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Schema {
public:
    Schema() = default;

    // `body` is written in ordinary formula syntax; identifiers listed in
    // `formula_metavars` / `agent_metavars` are read as metavariables.
    static Schema make(std::string name, const std::string& body,
                       std::vector<std::string> formula_metavars,
                       std::vector<std::string> agent_metavars) {
        Schema s;
        s.name_ = std::move(name);
        s.formula_metavars_ = std::move(formula_metavars);
        s.agent_metavars_ = std::move(agent_metavars);
        s.body_ = mark_metavars(parse_formula(body), s.formula_metavars_, s.agent_metavars_);
        return s;
    }

    // A schema with no metavariables: a ground assumption usable wherever
    // schemas are expected (e.g. premises handed to countermodel search).
    static Schema ground(std::string name, Formula f) {
        Schema s;
        s.name_ = std::move(name);
        s.body_ = std::move(f);
        return s;
    }

    // Wraps an already-marked body (leaves may use '$'-prefixed names).
    static Schema from_marked(std::string name, Formula marked_body,
                              std::vector<std::string> formula_metavars,
                              std::vector<std::string> agent_metavars) {
        Schema s;
        s.name_ = std::move(name);
        s.body_ = std::move(marked_body);
        s.formula_metavars_ = std::move(formula_metavars);
        s.agent_metavars_ = std::move(agent_metavars);
        return s;
    }

    const std::string& name() const { return name_; }
    const std::vector<std::string>& formula_metavars() const { return formula_metavars_; }
    const std::vector<std::string>& agent_metavars() const { return agent_metavars_; }
    bool is_ground() const { return formula_metavars_.empty() && agent_metavars_.empty(); }

    Formula instantiate(const Bindings& b) const {
        for (const std::string& mv : formula_metavars_)
            if (!b.formulas.count(mv))
                throw SchemaError("schema " + name_ + ": missing binding for metavariable " + mv);
        for (const std::string& mv : agent_metavars_)
            if (!b.agents.count(mv))
                throw SchemaError("schema " + name_ + ": missing binding for agent metavariable " + mv);
        return subst(body(), b);
    }

    // Display form: metavariables printed by their bare names.
    std::string str() const { return render(unmark(body())); }

private:
    const Formula& body() const {
        if (!body_) throw SchemaError("empty schema");
        return *body_;
    }

    static Formula mark_metavars(const Formula& f, const std::vector<std::string>& fmv,
                                 const std::vector<std::string>& amv) {
        switch (f.kind()) {
            case Formula::Kind::Atom: {
                for (const std::string& mv : fmv)
                    if (f.atom_name() == mv) return Formula::atom("$" + mv);
                return f;
            }
            case Formula::Kind::Falsum:
                return f;
            case Formula::Kind::Knows: {
                AgentId ag = f.agent();
                for (const std::string& mv : amv)
                    if (ag.name == mv) ag.name = "$" + mv;
                return Formula::knows(ag, mark_metavars(f.left(), fmv, amv));
            }
            default:
                break;
        }
        if (f.is_unary()) {
            Formula a = mark_metavars(f.left(), fmv, amv);
            switch (f.kind()) {
                case Formula::Kind::Not: return Formula::neg(a);
                case Formula::Kind::Box: return Formula::box(a);
                default: return Formula::diamond(a);
            }
        }
        Formula a = mark_metavars(f.left(), fmv, amv);
        Formula b = mark_metavars(f.right(), fmv, amv);
        switch (f.kind()) {
            case Formula::Kind::And: return Formula::conj(a, b);
            case Formula::Kind::Or: return Formula::disj(a, b);
            default: return Formula::implies(a, b);
        }
    }

    static Formula unmark(const Formula& f) {
        switch (f.kind()) {
            case Formula::Kind::Atom:
                if (f.atom_name()[0] == '$') return Formula::atom(f.atom_name().substr(1));
                return f;
            case Formula::Kind::Falsum:
                return f;
            case Formula::Kind::Knows: {
                AgentId ag = f.agent();
                if (ag.name[0] == '$') ag.name = ag.name.substr(1);
                return Formula::knows(ag, unmark(f.left()));
            }
            case Formula::Kind::Not: return Formula::neg(unmark(f.left()));
            case Formula::Kind::Box: return Formula::box(unmark(f.left()));
            case Formula::Kind::Diamond: return Formula::diamond(unmark(f.left()));
            case Formula::Kind::And: return Formula::conj(unmark(f.left()), unmark(f.right()));
            case Formula::Kind::Or: return Formula::disj(unmark(f.left()), unmark(f.right()));
            default: return Formula::implies(unmark(f.left()), unmark(f.right()));
        }
    }

    static Formula subst(const Formula& f, const Bindings& b) {
        switch (f.kind()) {
            case Formula::Kind::Atom: {
                const std::string& n = f.atom_name();
                if (n[0] == '$') {
                    auto it = b.formulas.find(n.substr(1));
                    if (it == b.formulas.end())
                        throw SchemaError("unbound metavariable " + n.substr(1));
                    return it->second;
                }
                return f;
            }
            case Formula::Kind::Falsum:
                return f;
            case Formula::Kind::Knows: {
                AgentId ag = f.agent();
                if (ag.name[0] == '$') {
                    auto it = b.agents.find(ag.name.substr(1));
                    if (it == b.agents.end())
                        throw SchemaError("unbound agent metavariable " + ag.name.substr(1));
                    ag = it->second;
                }
                return Formula::knows(ag, subst(f.left(), b));
            }
            case Formula::Kind::Not: return Formula::neg(subst(f.left(), b));
            case Formula::Kind::Box: return Formula::box(subst(f.left(), b));
            case Formula::Kind::Diamond: return Formula::diamond(subst(f.left(), b));
            case Formula::Kind::And: return Formula::conj(subst(f.left(), b), subst(f.right(), b));
            case Formula::Kind::Or: return Formula::disj(subst(f.left(), b), subst(f.right(), b));
            default: return Formula::implies(subst(f.left(), b), subst(f.right(), b));
        }
    }

    std::string name_;
    std::optional<Formula> body_;
    std::vector<std::string> formula_metavars_;
    std::vector<std::string> agent_metavars_;
};

// ----------------------------------------------------------------------------
// Built-in schemas.
//
//   CONST   phi -> <>K[i]phi                       knowability of truths
//   KCONT   ~<>(K[i]phi & K[i](~K[i]phi))          knowledge continuity
//   DIST    K[i]alpha & K[i]beta -> K[i](alpha & beta)
//   DIST2   K[i](alpha & beta) -> K[i]alpha & K[i]beta   (converse; unused by
//           the bundled derivations, provided for experimentation)
//   K       [](phi -> psi) -> ([]phi -> []psi)     Kripke axiom, always usable
//   REFLAX  phi -> <>phi                           frame axiom; only usable in
//           proofs that declare requires_refl
//   S       ~(K[i]phi & K[i](~phi))                single-outcome constraint
//   C       K[i](K[j]phi) -> K[i]phi               cross-agent consistency
//
// S and C are constraint schemas for model checking, not proof axioms.
// ----------------------------------------------------------------------------

inline const std::map<std::string, Schema>& builtin_schemas() {
    static const std::map<std::string, Schema> table = [] {
        std::map<std::string, Schema> t;
        auto add = [&t](Schema s) { t.emplace(s.name(), std::move(s)); };
        add(Schema::make("CONST", "phi -> <>K[i]phi", {"phi"}, {"i"}));
        add(Schema::make("KCONT", "~<>(K[i]phi & K[i](~K[i]phi))", {"phi"}, {"i"}));
        add(Schema::make("DIST", "K[i]alpha & K[i]beta -> K[i](alpha & beta)",
                         {"alpha", "beta"}, {"i"}));
        add(Schema::make("DIST2", "K[i](alpha & beta) -> K[i]alpha & K[i]beta",
                         {"alpha", "beta"}, {"i"}));
        add(Schema::make("K", "[](phi -> psi) -> ([]phi -> []psi)", {"phi", "psi"}, {}));
        add(Schema::make("REFLAX", "phi -> <>phi", {"phi"}, {}));
        add(Schema::make("S", "~(K[i]phi & K[i](~phi))", {"phi"}, {"i"}));
        add(Schema::make("C", "K[i](K[j]phi) -> K[i]phi", {"phi"}, {"i", "j"}));
        return t;
    }();
    return table;
}

inline const Schema& builtin_schema(const std::string& name) {
    auto it = builtin_schemas().find(name);
    if (it == builtin_schemas().end()) throw SchemaError("no built-in schema named " + name);
    return it->second;
}

}  // namespace empl
