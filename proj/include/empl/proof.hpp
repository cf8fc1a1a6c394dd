// ============================================================================
// empl/proof.hpp — Hilbert-style proof checker
// ============================================================================
//
// A proof script is a header (name, logic mode, reflexivity requirement,
// citable schema names) followed by numbered lines, each a formula with a
// justification.  check_proof verifies every line in order and reports the
// first failure with the expected-vs-found shapes.
//
// Premises are read globally: a line derived from assumptions is treated as
// holding at every world, so NEC on premise-tainted lines is the global
// consequence reading.
//
// Justifications:
//
//   ASSUME                     premise
//   AX NAME{x := f, i := A}    instance of an axiom schema or proven lemma
//   MP i j                     modus ponens; one cited line is (other -> this)
//   NEC i                      this == [](line i)
//   CONTRAPOS i                from a -> b infer ~b -> ~a
//   CONNID i fwd|bwd           between a -> b and ~(a & ~b); bwd is classical
//   REFL i                     this == <>(line i); needs requires_refl
//   BOT i j                    cited lines are a and ~a; this == _|_
//   RULE IPL refs...           this follows from cited lines intuitionistically
//   RULE PL refs...            classical propositional consequence (classical)
//   RULE DNE                   this == ~~a -> a (classical)
//   RULE KMONO[A] i            from a -> b infer K[A]a -> K[A]b
//   RULE DIAMONO i             from a -> b infer <>a -> <>b
//   RULE DIST-INNER i          from K[a](K[b]x & K[b]y) infer K[a](K[b](x & y));
//                              needs DIST among the citable schemas
//
// KMONO and DIST-INNER are the epistemic monotonicity steps that Hilbert
// derivations about knowledge operators take tacitly.  They are rules of the
// kernel, not schema instances; semantic cross-checks condition on them via
// semantic_assumptions() below.
//
// Axiom citation rules: CONST/KCONT/DIST/DIST2 must be listed in the script's
// schema set.  K is always citable.  REFLAX is citable exactly when the
// script declares requires_refl.  A lemma is citable when it is registered as
// proven, is listed in the schema set, its axiom dependencies are all in the
// schema set, its mode fits (classical lemmas need classical scripts), and
// its reflexivity requirement is covered.
//
// ============================================================================

#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "empl/formula.hpp"
#include "empl/parse.hpp"
#include "empl/pl.hpp"
#include "empl/schema.hpp"

namespace empl {

struct Justification {
    enum class Kind : std::uint8_t {
        Assume, Axiom, MP, Nec, Contrapos, ConnId, Refl, Bot, Rule,
    };
    Kind kind = Kind::Assume;
    std::string name;            // Axiom: schema/lemma name; Rule: rule name
    Bindings bindings;           // Axiom
    std::vector<int> refs;       // 1-based line references
    bool forward = true;         // ConnId direction
    std::optional<AgentId> agent;  // KMONO

    std::string str() const {
        std::ostringstream out;
        switch (kind) {
            case Kind::Assume: out << "ASSUME"; break;
            case Kind::Axiom: out << "AX " << name << "{" << bindings.str() << "}"; break;
            case Kind::MP: out << "MP"; break;
            case Kind::Nec: out << "NEC"; break;
            case Kind::Contrapos: out << "CONTRAPOS"; break;
            case Kind::ConnId: out << "CONNID"; break;
            case Kind::Refl: out << "REFL"; break;
            case Kind::Bot: out << "BOT"; break;
            case Kind::Rule:
                out << "RULE " << name;
                if (agent) out << "[" << agent->name << "]";
                break;
        }
        if (kind != Kind::Assume && kind != Kind::Axiom)
            for (int r : refs) out << " " << r;
        if (kind == Kind::ConnId) out << (forward ? " fwd" : " bwd");
        return out.str();
    }
};

struct ProofLine {
    Formula formula;
    Justification just;
    std::string comment;  // carried through parse/serialize, ignored by checking
};

struct ProofScript {
    std::string name;
    LogicMode mode = LogicMode::Intuitionistic;
    bool requires_refl = false;
    bool assumes_unitarity = false;  // configuration note only; never checked
    std::vector<std::string> schema_set;
    std::vector<ProofLine> lines;

    bool allows(const std::string& schema_name) const {
        for (const std::string& s : schema_set)
            if (s == schema_name) return true;
        return false;
    }
    const Formula& conclusion() const {
        if (lines.empty()) throw std::logic_error("empty script");
        return lines.back().formula;
    }
};

// A proven script is citable as a schema in later scripts, the way the
// source derivations cite earlier theorems.  `deps` records which base
// knowledge axioms the lemma's own derivation leaned on (transitively).
struct Lemma {
    std::string name;
    Schema schema;
    std::set<std::string> deps;  // subset of {CONST, KCONT, DIST, DIST2}
    LogicMode mode = LogicMode::Intuitionistic;
    bool requires_refl = false;
};

class LemmaRegistry {
public:
    bool contains(const std::string& name) const { return lemmas_.count(name) > 0; }
    const Lemma& at(const std::string& name) const { return lemmas_.at(name); }
    void add(Lemma l) { lemmas_.emplace(l.name, std::move(l)); }
    const std::map<std::string, Lemma>& all() const { return lemmas_; }

private:
    std::map<std::string, Lemma> lemmas_;
};

struct CheckResult {
    bool ok = true;
    int failed_line = 0;  // 1-based
    std::string reason;

    static CheckResult failure(int line, std::string why) {
        return {false, line, std::move(why)};
    }
};

namespace detail {

inline const std::set<std::string>& knowledge_axiom_names() {
    static const std::set<std::string> names{"CONST", "KCONT", "DIST", "DIST2"};
    return names;
}

inline std::string shape_mismatch(const std::string& rule, const Formula& expected,
                                  const Formula& found) {
    return rule + ": expected " + render(expected) + ", found " + render(found);
}

}  // namespace detail

// Checks line `index` (0-based) assuming all earlier lines already checked.
inline CheckResult check_line(const ProofScript& script, std::size_t index,
                              const LemmaRegistry& lemmas) {
    const ProofLine& line = script.lines[index];
    const Formula& f = line.formula;
    const Justification& j = line.just;
    const int lineno = static_cast<int>(index) + 1;

    auto fail = [&](const std::string& why) { return CheckResult::failure(lineno, why); };

    auto ref = [&](int r) -> const Formula* {
        if (r < 1 || r > static_cast<int>(index)) return nullptr;
        return &script.lines[r - 1].formula;
    };
    auto need_refs = [&](std::size_t n) -> std::optional<CheckResult> {
        if (j.refs.size() != n)
            return fail(j.str() + ": expected " + std::to_string(n) + " line reference(s)");
        for (int r : j.refs)
            if (!ref(r))
                return fail(j.str() + ": reference " + std::to_string(r) +
                            " does not precede line " + std::to_string(lineno));
        return std::nullopt;
    };

    switch (j.kind) {
        case Justification::Kind::Assume:
            return {};

        case Justification::Kind::Axiom: {
            const Schema* schema = nullptr;
            const auto& builtins = builtin_schemas();
            auto bit = builtins.find(j.name);
            if (bit != builtins.end()) {
                if (j.name == "S" || j.name == "C")
                    return fail("schema " + j.name + " is a model constraint, not a proof axiom");
                if (j.name == "REFLAX" && !script.requires_refl)
                    return fail("REFLAX cited but the script does not declare requires_refl");
                if (detail::knowledge_axiom_names().count(j.name) && !script.allows(j.name))
                    return fail("schema " + j.name + " is not in the script's schema set");
                schema = &bit->second;
            } else if (lemmas.contains(j.name)) {
                const Lemma& lem = lemmas.at(j.name);
                if (!script.allows(j.name))
                    return fail("lemma " + j.name + " is not in the script's schema set");
                for (const std::string& dep : lem.deps)
                    if (!script.allows(dep))
                        return fail("lemma " + j.name + " depends on schema " + dep +
                                    ", which is not in the script's schema set");
                if (lem.mode == LogicMode::Classical && script.mode != LogicMode::Classical)
                    return fail("lemma " + j.name + " is classical; script mode is intuitionistic");
                if (lem.requires_refl && !script.requires_refl)
                    return fail("lemma " + j.name +
                                " requires reflexivity; script does not declare requires_refl");
                schema = &lem.schema;
            } else {
                return fail("unknown axiom or lemma: " + j.name);
            }
            try {
                Formula inst = schema->instantiate(j.bindings);
                if (inst != f) return fail(detail::shape_mismatch("AX " + j.name, inst, f));
            } catch (const SchemaError& e) {
                return fail(e.what());
            }
            return {};
        }

        case Justification::Kind::MP: {
            if (auto bad = need_refs(2)) return *bad;
            const Formula& x = *ref(j.refs[0]);
            const Formula& y = *ref(j.refs[1]);
            // one cited line must be (other -> current); accept either order
            if (y == Formula::implies(x, f) || x == Formula::implies(y, f)) return {};
            return fail("MP: neither cited line is an implication from the other to " + render(f) +
                        " (cited: " + render(x) + " ; " + render(y) + ")");
        }

        case Justification::Kind::Nec: {
            if (auto bad = need_refs(1)) return *bad;
            Formula expected = Formula::box(*ref(j.refs[0]));
            if (f != expected) return fail(detail::shape_mismatch("NEC", expected, f));
            return {};
        }

        case Justification::Kind::Contrapos: {
            if (auto bad = need_refs(1)) return *bad;
            const Formula& src = *ref(j.refs[0]);
            if (src.kind() != Formula::Kind::Implies)
                return fail("CONTRAPOS: cited line is not an implication: " + render(src));
            Formula expected =
                Formula::implies(Formula::neg(src.right()), Formula::neg(src.left()));
            if (f != expected) return fail(detail::shape_mismatch("CONTRAPOS", expected, f));
            return {};
        }

        case Justification::Kind::ConnId: {
            if (auto bad = need_refs(1)) return *bad;
            const Formula& src = *ref(j.refs[0]);
            if (j.forward) {
                if (src.kind() != Formula::Kind::Implies)
                    return fail("CONNID fwd: cited line is not an implication: " + render(src));
                Formula expected =
                    Formula::neg(Formula::conj(src.left(), Formula::neg(src.right())));
                if (f != expected) return fail(detail::shape_mismatch("CONNID fwd", expected, f));
                return {};
            }
            if (script.mode != LogicMode::Classical)
                return fail("CONNID bwd is not intuitionistically valid; script mode is intuitionistic");
            // src == ~(a & ~b), current == a -> b
            if (src.kind() != Formula::Kind::Not || src.left().kind() != Formula::Kind::And ||
                src.left().right().kind() != Formula::Kind::Not)
                return fail("CONNID bwd: cited line does not have shape ~(a & ~b): " + render(src));
            Formula expected =
                Formula::implies(src.left().left(), src.left().right().left());
            if (f != expected) return fail(detail::shape_mismatch("CONNID bwd", expected, f));
            return {};
        }

        case Justification::Kind::Refl: {
            if (!script.requires_refl)
                return fail("REFL rule used but the script does not declare requires_refl");
            if (auto bad = need_refs(1)) return *bad;
            Formula expected = Formula::diamond(*ref(j.refs[0]));
            if (f != expected) return fail(detail::shape_mismatch("REFL", expected, f));
            return {};
        }

        case Justification::Kind::Bot: {
            if (auto bad = need_refs(2)) return *bad;
            const Formula& x = *ref(j.refs[0]);
            const Formula& y = *ref(j.refs[1]);
            if (f.kind() != Formula::Kind::Falsum)
                return fail("BOT: conclusion must be _|_, found " + render(f));
            if (y == Formula::neg(x) || x == Formula::neg(y)) return {};
            return fail("BOT: cited lines are not a formula and its negation (cited: " +
                        render(x) + " ; " + render(y) + ")");
        }

        case Justification::Kind::Rule: {
            if (j.name == "IPL" || j.name == "PL") {
                LogicMode m = j.name == "PL" ? LogicMode::Classical : LogicMode::Intuitionistic;
                if (m == LogicMode::Classical && script.mode != LogicMode::Classical)
                    return fail("RULE PL used in intuitionistic mode");
                std::vector<Formula> prem;
                for (int r : j.refs) {
                    const Formula* p = ref(r);
                    if (!p)
                        return fail("RULE " + j.name + ": reference " + std::to_string(r) +
                                    " does not precede line " + std::to_string(lineno));
                    prem.push_back(*p);
                }
                bool holds = false;
                try {
                    holds = pl_consequence(prem, f, m);
                } catch (const PlTooLarge& e) {
                    return fail(std::string("RULE ") + j.name + ": " + e.what());
                }
                if (!holds)
                    return fail("RULE " + j.name + ": " + render(f) +
                                " is not a propositional consequence of the cited lines");
                return {};
            }
            if (j.name == "DNE") {
                if (script.mode != LogicMode::Classical)
                    return fail("RULE DNE (double negation elimination) used in intuitionistic mode");
                if (!j.refs.empty()) return fail("RULE DNE takes no line references");
                // shape ~~a -> a
                if (f.kind() == Formula::Kind::Implies &&
                    f.left().kind() == Formula::Kind::Not &&
                    f.left().left().kind() == Formula::Kind::Not &&
                    f.left().left().left() == f.right())
                    return {};
                return fail("RULE DNE: expected shape ~~a -> a, found " + render(f));
            }
            if (j.name == "KMONO") {
                if (auto bad = need_refs(1)) return *bad;
                if (!j.agent) return fail("RULE KMONO needs an agent, e.g. KMONO[A]");
                const Formula& src = *ref(j.refs[0]);
                if (src.kind() != Formula::Kind::Implies)
                    return fail("RULE KMONO: cited line is not an implication: " + render(src));
                Formula expected = Formula::implies(Formula::knows(*j.agent, src.left()),
                                                    Formula::knows(*j.agent, src.right()));
                if (f != expected) return fail(detail::shape_mismatch("RULE KMONO", expected, f));
                return {};
            }
            if (j.name == "DIAMONO") {
                if (auto bad = need_refs(1)) return *bad;
                const Formula& src = *ref(j.refs[0]);
                if (src.kind() != Formula::Kind::Implies)
                    return fail("RULE DIAMONO: cited line is not an implication: " + render(src));
                Formula expected = Formula::implies(Formula::diamond(src.left()),
                                                    Formula::diamond(src.right()));
                if (f != expected) return fail(detail::shape_mismatch("RULE DIAMONO", expected, f));
                return {};
            }
            if (j.name == "DIST-INNER") {
                if (!script.allows("DIST"))
                    return fail("RULE DIST-INNER needs schema DIST in the script's schema set");
                if (auto bad = need_refs(1)) return *bad;
                const Formula& src = *ref(j.refs[0]);
                // src == K[a](K[b]x & K[b]y)  =>  f == K[a](K[b](x & y))
                if (src.kind() != Formula::Kind::Knows ||
                    src.left().kind() != Formula::Kind::And ||
                    src.left().left().kind() != Formula::Kind::Knows ||
                    src.left().right().kind() != Formula::Kind::Knows ||
                    src.left().left().agent() != src.left().right().agent())
                    return fail("RULE DIST-INNER: cited line does not have shape "
                                "K[a](K[b]x & K[b]y): " + render(src));
                Formula expected = Formula::knows(
                    src.agent(),
                    Formula::knows(src.left().left().agent(),
                                   Formula::conj(src.left().left().left(),
                                                 src.left().right().left())));
                if (f != expected)
                    return fail(detail::shape_mismatch("RULE DIST-INNER", expected, f));
                return {};
            }
            return fail("unknown derived rule: " + j.name);
        }
    }
    return fail("unreachable justification kind");
}

inline CheckResult check_proof(const ProofScript& script, const LemmaRegistry& lemmas) {
    if (script.lines.empty()) return CheckResult::failure(0, "script has no lines");
    for (std::size_t i = 0; i < script.lines.size(); ++i) {
        CheckResult r = check_line(script, i, lemmas);
        if (!r.ok) return r;
    }
    return {};
}

// ----------------------------------------------------------------------------
// Semantic content of a script, for the model-theoretic cross-checks.
//
// Returns the formulas a model must validate (at all worlds) for the script's
// line-by-line reading to be forced semantically:
//   - every premise,
//   - every cited axiom/lemma instance,
//   - for each KMONO / DIST-INNER line, the implication from the cited line
//     to the derived line (the epistemic transport the source reasoning takes
//     for granted, which opaque K-interpretations do not enforce on their own).
// Every other rule preserves validity in any model outright (REFL on
// reflexive frames).
// ----------------------------------------------------------------------------

inline std::vector<Formula> semantic_assumptions(const ProofScript& script) {
    std::vector<Formula> out;
    for (std::size_t i = 0; i < script.lines.size(); ++i) {
        const ProofLine& line = script.lines[i];
        switch (line.just.kind) {
            case Justification::Kind::Assume:
            case Justification::Kind::Axiom:
                out.push_back(line.formula);
                break;
            case Justification::Kind::Rule:
                if (line.just.name == "KMONO" || line.just.name == "DIST-INNER") {
                    const Formula& src = script.lines[line.just.refs[0] - 1].formula;
                    out.push_back(Formula::implies(src, line.formula));
                }
                break;
            default:
                break;
        }
    }
    return out;
}

// ----------------------------------------------------------------------------
// Script text format.
//
//   # comment
//   name: fitch
//   mode: intuitionistic | classical
//   requires_refl: true | false
//   assumes_unitarity: true | false        (optional, default false)
//   schemas: CONST KCONT ...
//   lines:
//   1. <formula> ;; <justification>        (optional "# comment" at end)
// ----------------------------------------------------------------------------

struct ScriptError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline Justification parse_justification(const std::string& text, int lineno) {
    auto fail = [&](const std::string& why) {
        throw ScriptError("script line " + std::to_string(lineno) + ": " + why);
    };
    Justification j;
    std::string t = trim(text);
    if (t == "ASSUME") {
        j.kind = Justification::Kind::Assume;
        return j;
    }
    if (t.rfind("AX ", 0) == 0) {
        j.kind = Justification::Kind::Axiom;
        std::size_t brace = t.find('{');
        if (brace == std::string::npos || t.back() != '}')
            fail("AX justification needs bindings: AX NAME{x := f, i := A}");
        j.name = trim(t.substr(3, brace - 3));
        std::string body = t.substr(brace + 1, t.size() - brace - 2);
        if (!trim(body).empty()) {
            std::size_t pos = 0;
            while (pos <= body.size()) {
                std::size_t comma = body.find(',', pos);
                std::string item = body.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                std::size_t assign = item.find(":=");
                if (assign == std::string::npos) fail("binding must use ':=' in " + item);
                std::string key = trim(item.substr(0, assign));
                std::string val = trim(item.substr(assign + 2));
                if (key.empty() || val.empty()) fail("empty binding in " + item);
                // single lowercase letters i/j/k bind agents, everything else formulas
                if (key.size() == 1 && key[0] >= 'i' && key[0] <= 'k')
                    j.bindings.agents[key] = AgentId{val};
                else
                    j.bindings.formulas.emplace(key, parse_formula(val));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
        return j;
    }

    std::istringstream in(t);
    std::string head;
    in >> head;
    auto read_refs = [&](std::size_t want, bool exact) {
        int r;
        while (in >> r) j.refs.push_back(r);
        if (exact && j.refs.size() != want)
            fail(head + " expects " + std::to_string(want) + " line reference(s)");
    };
    if (head == "MP") {
        j.kind = Justification::Kind::MP;
        read_refs(2, true);
    } else if (head == "NEC") {
        j.kind = Justification::Kind::Nec;
        read_refs(1, true);
    } else if (head == "CONTRAPOS") {
        j.kind = Justification::Kind::Contrapos;
        read_refs(1, true);
    } else if (head == "CONNID") {
        j.kind = Justification::Kind::ConnId;
        int r;
        if (!(in >> r)) fail("CONNID expects a line reference");
        j.refs.push_back(r);
        std::string dir;
        if (!(in >> dir) || (dir != "fwd" && dir != "bwd"))
            fail("CONNID expects direction fwd or bwd");
        j.forward = dir == "fwd";
    } else if (head == "REFL") {
        j.kind = Justification::Kind::Refl;
        read_refs(1, true);
    } else if (head == "BOT") {
        j.kind = Justification::Kind::Bot;
        read_refs(2, true);
    } else if (head == "RULE") {
        j.kind = Justification::Kind::Rule;
        std::string rule;
        if (!(in >> rule)) fail("RULE expects a rule name");
        std::size_t brack = rule.find('[');
        if (brack != std::string::npos) {
            if (rule.back() != ']') fail("bad agent suffix in rule name " + rule);
            j.agent = AgentId{rule.substr(brack + 1, rule.size() - brack - 2)};
            rule = rule.substr(0, brack);
        }
        j.name = rule;
        read_refs(0, false);
    } else {
        fail("unknown justification '" + head + "'");
    }
    return j;
}

}  // namespace detail

inline ProofScript parse_script(const std::string& text) {
    ProofScript s;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool in_lines = false;
    bool saw_name = false;

    auto fail = [&](const std::string& why) {
        throw ScriptError("script line " + std::to_string(lineno) + ": " + why);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = detail::trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        if (!in_lines) {
            std::size_t colon = stripped.find(':');
            if (colon == std::string::npos) fail("expected 'key: value' header line");
            std::string key = detail::trim(stripped.substr(0, colon));
            std::string val = detail::trim(stripped.substr(colon + 1));
            if (key == "name") {
                s.name = val;
                saw_name = true;
            } else if (key == "mode") {
                if (val == "intuitionistic")
                    s.mode = LogicMode::Intuitionistic;
                else if (val == "classical")
                    s.mode = LogicMode::Classical;
                else
                    fail("mode must be intuitionistic or classical");
            } else if (key == "requires_refl") {
                s.requires_refl = val == "true";
            } else if (key == "assumes_unitarity") {
                s.assumes_unitarity = val == "true";
            } else if (key == "schemas") {
                std::istringstream vs(val);
                std::string name;
                while (vs >> name) s.schema_set.push_back(name);
            } else if (key == "lines") {
                in_lines = true;
            } else {
                fail("unknown header key '" + key + "'");
            }
            continue;
        }

        // N. formula ;; justification [# comment]
        std::string comment;
        std::size_t hash = stripped.find(" #");
        if (hash != std::string::npos) {
            comment = detail::trim(stripped.substr(hash + 2));
            stripped = detail::trim(stripped.substr(0, hash));
        }
        std::size_t dot = stripped.find('.');
        if (dot == std::string::npos) fail("proof line must start with 'N.'");
        int n = 0;
        try {
            n = std::stoi(stripped.substr(0, dot));
        } catch (...) {
            fail("bad line number '" + stripped.substr(0, dot) + "'");
        }
        if (n != static_cast<int>(s.lines.size()) + 1)
            fail("line numbered " + std::to_string(n) + ", expected " +
                 std::to_string(s.lines.size() + 1));
        std::size_t sep = stripped.find(";;");
        if (sep == std::string::npos) fail("proof line needs ';; justification'");
        std::string ftext = detail::trim(stripped.substr(dot + 1, sep - dot - 1));
        Formula f = [&] {
            try {
                return parse_formula(ftext);
            } catch (const ParseError& e) {
                fail(std::string("bad formula: ") + e.what());
                throw;
            }
        }();
        Justification j = detail::parse_justification(stripped.substr(sep + 2), lineno);
        s.lines.push_back(ProofLine{f, j, comment});
    }
    if (!saw_name) throw ScriptError("script has no 'name:' header");
    if (s.lines.empty()) throw ScriptError("script has no proof lines");
    return s;
}

inline std::string write_script(const ProofScript& s) {
    std::ostringstream out;
    out << "name: " << s.name << "\n";
    out << "mode: " << to_string(s.mode) << "\n";
    out << "requires_refl: " << (s.requires_refl ? "true" : "false") << "\n";
    if (s.assumes_unitarity) out << "assumes_unitarity: true\n";
    out << "schemas:";
    for (const std::string& name : s.schema_set) out << " " << name;
    out << "\n";
    out << "lines:\n";
    for (std::size_t i = 0; i < s.lines.size(); ++i) {
        out << (i + 1) << ". " << render(s.lines[i].formula) << " ;; " << s.lines[i].just.str();
        if (!s.lines[i].comment.empty()) out << " # " << s.lines[i].comment;
        out << "\n";
    }
    return out.str();
}

}  // namespace empl
