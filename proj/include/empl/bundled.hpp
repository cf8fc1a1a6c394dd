// ============================================================================
// empl/bundled.hpp — bundled proof scripts, lemma registration, demo models
// ============================================================================
//
// The scripts below machine-check the knowledge-axiom derivations this
// library is organized around:
//
//   fitch        CONST, KCONT |- phi -> ~~K[i]phi          (intuitionistic)
//   fitch_star   CONST, KCONT |- phi -> K[i]phi            (classical; DNE)
//   lemma_contradictory_knowledge
//                CONST, KCONT |- ~<>K[i](phi & ~phi)
//   violating_q  p_Q, ~K[i]p_Q, FITCH |- _|_               (no REFL needed)
//   violating_s  K[i](p_S & ~p_S), LEMMA3, REFL |- _|_
//   violating_c  K[i](K[j]p_C) & ~K[i]p_C, FITCH*, DIST, LEMMA3, REFL |- _|_
//   no_go        disjunction of the three violation premises |- _|_
//
// Scripts are shipped as text in the proof-script file format, so they
// exercise the script parser and can be exported for editing.  Where the
// compact pen-and-paper derivations lean on tacit steps (projecting a
// conjunction inside a K operator, carrying an implication through K or <>),
// the transcriptions spell those steps out as KMONO / DIAMONO / DIST-INNER
// lines; comments mark them as reconstruction.
//
// Checking a script registers it as a citable lemma: a script with premises
// P1..Pn and conclusion C is packaged as the schema (P1 & ... & Pn) -> C with
// its atoms generalized to metavariables.  A lemma citation requires the
// lemma's axiom dependencies to be present in the citing script's schema set,
// so dropping a base axiom breaks every derivation that leaned on it,
// directly or not.
//
// ============================================================================

#pragma once

#include <map>
#include <string>
#include <vector>

#include "empl/kripke.hpp"
#include "empl/proof.hpp"

namespace empl {

namespace bundled_text {

inline const char* fitch = R"raw(
# Knowability plus knowledge continuity force phi -> ~~K[A]phi.
# Lines 4-10 bridge the conjunction form of KCONT to the form
# ~<>K[A](phi & ~K[A]phi); the bridge is reconstruction, via KMONO/DIAMONO.
name: fitch
mode: intuitionistic
requires_refl: false
schemas: CONST KCONT
lines:
1. (phi & ~K[A]phi) -> <>K[A](phi & ~K[A]phi) ;; AX CONST{phi := phi & ~K[A]phi, i := A}
2. ~<>K[A](phi & ~K[A]phi) -> ~(phi & ~K[A]phi) ;; CONTRAPOS 1
3. ~<>(K[A]phi & K[A](~K[A]phi)) ;; AX KCONT{phi := phi, i := A}
4. (phi & ~K[A]phi) -> phi ;; RULE IPL
5. K[A](phi & ~K[A]phi) -> K[A]phi ;; RULE KMONO[A] 4
6. (phi & ~K[A]phi) -> ~K[A]phi ;; RULE IPL
7. K[A](phi & ~K[A]phi) -> K[A](~K[A]phi) ;; RULE KMONO[A] 6
8. K[A](phi & ~K[A]phi) -> K[A]phi & K[A](~K[A]phi) ;; RULE IPL 5 7
9. <>K[A](phi & ~K[A]phi) -> <>(K[A]phi & K[A](~K[A]phi)) ;; RULE DIAMONO 8
10. ~<>(K[A]phi & K[A](~K[A]phi)) -> ~<>K[A](phi & ~K[A]phi) ;; CONTRAPOS 9
11. ~<>K[A](phi & ~K[A]phi) ;; MP 3 10
12. ~(phi & ~K[A]phi) ;; MP 11 2
13. phi -> ~~K[A]phi ;; RULE IPL 12
)raw";

inline const char* fitch_star = R"raw(
# Classical strengthening: double negation elimination on the target of
# fitch gives phi -> K[A]phi.
name: fitch_star
mode: classical
requires_refl: false
schemas: CONST KCONT FITCH
lines:
1. phi -> ~~K[A]phi ;; AX FITCH{phi := phi, i := A}
2. ~~K[A]phi -> K[A]phi ;; RULE DNE
3. phi -> K[A]phi ;; RULE IPL 1 2
)raw";

inline const char* lemma_contradictory_knowledge = R"raw(
# No agent can possibly know a contradiction: ~<>K[A](phi & ~phi).
# Line 3 is immediate because its antecedent is contradictory; lines 4-5
# carry it through K[A] and <>.  Lines 7-14 are the same KCONT bridge as in
# fitch.  Line 2 mirrors the usual contraposition companion of line 1 and is
# not cited below.
name: lemma_contradictory_knowledge
mode: intuitionistic
requires_refl: false
schemas: CONST KCONT FITCH
lines:
1. phi -> ~~K[A]phi ;; AX FITCH{phi := phi, i := A}
2. ~K[A]phi -> ~phi ;; RULE IPL 1
3. (phi & ~phi) -> (phi & ~K[A]phi) ;; RULE IPL
4. K[A](phi & ~phi) -> K[A](phi & ~K[A]phi) ;; RULE KMONO[A] 3
5. <>K[A](phi & ~phi) -> <>K[A](phi & ~K[A]phi) ;; RULE DIAMONO 4
6. ~<>K[A](phi & ~K[A]phi) -> ~<>K[A](phi & ~phi) ;; CONTRAPOS 5
7. ~<>(K[A]phi & K[A](~K[A]phi)) ;; AX KCONT{phi := phi, i := A}
8. (phi & ~K[A]phi) -> phi ;; RULE IPL
9. K[A](phi & ~K[A]phi) -> K[A]phi ;; RULE KMONO[A] 8
10. (phi & ~K[A]phi) -> ~K[A]phi ;; RULE IPL
11. K[A](phi & ~K[A]phi) -> K[A](~K[A]phi) ;; RULE KMONO[A] 10
12. K[A](phi & ~K[A]phi) -> K[A]phi & K[A](~K[A]phi) ;; RULE IPL 9 11
13. <>K[A](phi & ~K[A]phi) -> <>(K[A]phi & K[A](~K[A]phi)) ;; RULE DIAMONO 12
14. ~<>(K[A]phi & K[A](~K[A]phi)) -> ~<>K[A](phi & ~K[A]phi) ;; CONTRAPOS 13
15. ~<>K[A](phi & ~K[A]phi) ;; MP 7 14
16. ~<>K[A](phi & ~phi) ;; MP 15 6
)raw";

inline const char* violating_q = R"raw(
# If p_Q is a fact an agent cannot know, FITCH refutes the conjunction of
# CONST and KCONT outright.  No frame condition is needed.
name: violating_q
mode: intuitionistic
requires_refl: false
schemas: CONST KCONT FITCH
lines:
1. p_Q ;; ASSUME
2. ~K[A]p_Q ;; ASSUME
3. p_Q -> ~~K[A]p_Q ;; AX FITCH{phi := p_Q, i := A}
4. ~~K[A]p_Q ;; MP 1 3
5. _|_ ;; BOT 2 4
)raw";

inline const char* violating_s = R"raw(
# A single-outcome violation, stated in the distributed form K[A](p_S & ~p_S),
# clashes with lemma_contradictory_knowledge on reflexive frames.
name: violating_s
mode: intuitionistic
requires_refl: true
schemas: CONST KCONT LEMMA3
lines:
1. K[A](p_S & ~p_S) ;; ASSUME
2. ~<>K[A](p_S & ~p_S) ;; AX LEMMA3{phi := p_S, i := A}
3. <>K[A](p_S & ~p_S) ;; REFL 1
4. _|_ ;; BOT 3 2
)raw";

inline const char* violating_c = R"raw(
# A consistency violation K[A](K[B]p_C) & ~K[A]p_C lets agent A assemble
# knowledge of a contradiction; lemma_contradictory_knowledge then closes the
# argument twice over, on reflexive frames, classically.
# Lines 4-8 unpack the premise (reconstruction).  Lines 22-24 push the
# reflexivity axiom through K[A] (reconstruction): from line 21 A knows that
# B knows a contradiction, hence A knows that <>K[B](contradiction), which
# contradicts the lemma inside A's knowledge.
name: violating_c
mode: classical
requires_refl: true
schemas: CONST KCONT DIST FITCH* LEMMA3
lines:
1. K[A](K[B]p_C) & ~K[A]p_C ;; ASSUME
2. ~K[A]p_C -> K[B](~K[A]p_C) ;; AX FITCH*{phi := ~K[A]p_C, i := B}
3. K[B](~K[A]p_C) -> K[A](K[B](~K[A]p_C)) ;; AX FITCH*{phi := K[B](~K[A]p_C), i := A}
4. K[A](K[B]p_C) ;; RULE IPL 1
5. ~K[A]p_C ;; RULE IPL 1
6. K[B](~K[A]p_C) ;; MP 5 2
7. K[A](K[B](~K[A]p_C)) ;; MP 6 3
8. K[A](K[B]p_C) & K[A](K[B](~K[A]p_C)) ;; RULE IPL 4 7
9. K[A](K[B]p_C) & K[A](K[B](~K[A]p_C)) -> K[A](K[B]p_C & K[B](~K[A]p_C)) ;; AX DIST{alpha := K[B]p_C, beta := K[B](~K[A]p_C), i := A}
10. K[A](K[B]p_C & K[B](~K[A]p_C)) ;; MP 8 9
11. K[A](K[B](p_C & ~K[A]p_C)) ;; RULE DIST-INNER 10
12. p_C -> K[A]p_C ;; AX FITCH*{phi := p_C, i := A}
13. ~(p_C & ~K[A]p_C) ;; CONNID 12 fwd
14. ~(p_C & ~K[A]p_C) -> K[B](~(p_C & ~K[A]p_C)) ;; AX FITCH*{phi := ~(p_C & ~K[A]p_C), i := B}
15. K[B](~(p_C & ~K[A]p_C)) ;; MP 13 14
16. K[B](~(p_C & ~K[A]p_C)) -> K[A](K[B](~(p_C & ~K[A]p_C))) ;; AX FITCH*{phi := K[B](~(p_C & ~K[A]p_C)), i := A}
17. K[A](K[B](~(p_C & ~K[A]p_C))) ;; MP 15 16
18. K[A](K[B](p_C & ~K[A]p_C)) & K[A](K[B](~(p_C & ~K[A]p_C))) ;; RULE IPL 11 17
19. K[A](K[B](p_C & ~K[A]p_C)) & K[A](K[B](~(p_C & ~K[A]p_C))) -> K[A](K[B](p_C & ~K[A]p_C) & K[B](~(p_C & ~K[A]p_C))) ;; AX DIST{alpha := K[B](p_C & ~K[A]p_C), beta := K[B](~(p_C & ~K[A]p_C)), i := A}
20. K[A](K[B](p_C & ~K[A]p_C) & K[B](~(p_C & ~K[A]p_C))) ;; MP 18 19
21. K[A](K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) ;; RULE DIST-INNER 20
22. K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C)) -> <>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C)) ;; AX REFLAX{phi := K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))}
23. K[A](K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) -> K[A](<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) ;; RULE KMONO[A] 22
24. K[A](<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) ;; MP 21 23
25. ~<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C)) ;; AX LEMMA3{phi := p_C & ~K[A]p_C, i := B}
26. ~<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C)) -> K[A](~<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) ;; AX FITCH*{phi := ~<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C)), i := A}
27. K[A](~<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) ;; MP 25 26
28. K[A](<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) & K[A](~<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) ;; RULE IPL 24 27
29. K[A](<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) & K[A](~<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) -> K[A](<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C)) & ~<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) ;; AX DIST{alpha := <>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C)), beta := ~<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C)), i := A}
30. K[A](<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C)) & ~<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) ;; MP 28 29
31. ~<>K[A](<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C)) & ~<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) ;; AX LEMMA3{phi := <>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C)), i := A}
32. <>K[A](<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C)) & ~<>K[B]((p_C & ~K[A]p_C) & ~(p_C & ~K[A]p_C))) ;; REFL 30
33. _|_ ;; BOT 32 31
)raw";

inline const char* no_go = R"raw(
# Composition of the three violation cases: once the quantum protocol rules
# out Q & S & C holding together, CONST & KCONT & DIST cannot all stand on
# reflexive frames.  Unitary modelling of the agents is a background premise,
# recorded as configuration only.
name: no_go
mode: classical
requires_refl: true
assumes_unitarity: true
schemas: CONST KCONT DIST VIOLATING_Q VIOLATING_S VIOLATING_C
lines:
1. (p_Q & ~K[A]p_Q) | K[A](p_S & ~p_S) | (K[A](K[B]p_C) & ~K[A]p_C) ;; ASSUME
2. p_Q & ~K[A]p_Q -> _|_ ;; AX VIOLATING_Q{phi := p_Q, i := A}
3. K[A](p_S & ~p_S) -> _|_ ;; AX VIOLATING_S{phi := p_S, i := A}
4. K[A](K[B]p_C) & ~K[A]p_C -> _|_ ;; AX VIOLATING_C{phi := p_C, i := A, j := B}
5. _|_ ;; RULE IPL 1 2 3 4
)raw";

}  // namespace bundled_text

// Lemma shapes published by the bundled scripts, keyed by script name.
struct BundledLemmaSpec {
    std::string script_name;
    std::string lemma_name;
    std::string shape;   // schema body over metavariables phi / i / j
    std::string generic_atom;  // the atom the script proves the shape for
};

inline const std::vector<BundledLemmaSpec>& bundled_lemma_specs() {
    static const std::vector<BundledLemmaSpec> specs{
        {"fitch", "FITCH", "phi -> ~~K[i]phi", "phi"},
        {"fitch_star", "FITCH*", "phi -> K[i]phi", "phi"},
        {"lemma_contradictory_knowledge", "LEMMA3", "~<>K[i](phi & ~phi)", "phi"},
        {"violating_q", "VIOLATING_Q", "phi & ~K[i]phi -> _|_", "p_Q"},
        {"violating_s", "VIOLATING_S", "K[i](phi & ~phi) -> _|_", "p_S"},
        {"violating_c", "VIOLATING_C", "K[i](K[j]phi) & ~K[i]phi -> _|_", "p_C"},
    };
    return specs;
}

inline const std::vector<std::pair<std::string, const char*>>& bundled_script_texts() {
    static const std::vector<std::pair<std::string, const char*>> texts{
        {"fitch", bundled_text::fitch},
        {"fitch_star", bundled_text::fitch_star},
        {"lemma_contradictory_knowledge", bundled_text::lemma_contradictory_knowledge},
        {"violating_q", bundled_text::violating_q},
        {"violating_s", bundled_text::violating_s},
        {"violating_c", bundled_text::violating_c},
        {"no_go", bundled_text::no_go},
    };
    return texts;
}

// Removes one schema name from a script's citable set (mutation testing and
// the --drop-schema flag).
inline ProofScript without_schema(ProofScript s, const std::string& name) {
    std::erase(s.schema_set, name);
    return s;
}

// Forces a logic mode (the --mode flag).
inline ProofScript with_mode(ProofScript s, LogicMode m) {
    s.mode = m;
    return s;
}

namespace detail {

// Axiom-level dependencies of a script: knowledge axioms cited directly plus
// the dependencies of every cited lemma.
inline std::set<std::string> script_axiom_deps(const ProofScript& s, const LemmaRegistry& reg) {
    std::set<std::string> deps;
    for (const ProofLine& line : s.lines) {
        if (line.just.kind != Justification::Kind::Axiom) continue;
        const std::string& n = line.just.name;
        if (knowledge_axiom_names().count(n)) deps.insert(n);
        if (reg.contains(n)) {
            const auto& d = reg.at(n).deps;
            deps.insert(d.begin(), d.end());
        }
    }
    return deps;
}

}  // namespace detail

// Checks a script and, when it succeeds, packages it as a citable lemma:
// premises P1..Pn and conclusion C become (P1 & ... & Pn) -> C with the
// script's atoms generalized per `spec`.  Scripts with premises must not use
// NEC (discharging premises across necessitation is the global/local
// consequence pitfall; none of the bundled derivations needs it).
inline Lemma register_bundled_lemma(const ProofScript& script, const BundledLemmaSpec& spec,
                                    LemmaRegistry& reg) {
    CheckResult r = check_proof(script, reg);
    if (!r.ok)
        throw ScriptError("bundled script " + script.name + " failed at line " +
                          std::to_string(r.failed_line) + ": " + r.reason);

    std::vector<Formula> premises;
    for (const ProofLine& line : script.lines)
        if (line.just.kind == Justification::Kind::Assume) premises.push_back(line.formula);
    std::optional<Formula> packaged;
    for (const Formula& p : premises)
        packaged = packaged ? Formula::conj(*packaged, p) : p;
    Formula derived = packaged ? Formula::implies(*packaged, script.conclusion())
                               : script.conclusion();
    if (!premises.empty()) {
        for (const ProofLine& line : script.lines)
            if (line.just.kind == Justification::Kind::Nec)
                throw ScriptError("script " + script.name +
                                  " uses NEC on premises; cannot package as an implication");
    }

    Schema shape = Schema::make(spec.lemma_name, spec.shape, {"phi"},
                                spec.shape.find("[j]") != std::string::npos
                                    ? std::vector<std::string>{"i", "j"}
                                    : std::vector<std::string>{"i"});
    Bindings generic;
    generic.formulas["phi"] = Formula::atom(spec.generic_atom);
    generic.agents["i"] = AgentId{"A"};
    if (!shape.agent_metavars().empty() && shape.agent_metavars().size() > 1)
        generic.agents["j"] = AgentId{"B"};
    Formula expected = shape.instantiate(generic);
    if (expected != derived)
        throw ScriptError("script " + script.name + " does not prove the published shape: " +
                          render(expected) + " vs " + render(derived));

    Lemma lem;
    lem.name = spec.lemma_name;
    lem.schema = shape;
    lem.deps = detail::script_axiom_deps(script, reg);
    lem.mode = script.mode;
    lem.requires_refl = script.requires_refl;
    reg.add(lem);
    return lem;
}

// The bundled kernel: every script parsed, checked in dependency order, and
// its lemma registered.  Construction throws if any bundled derivation fails.
struct BundledKernel {
    std::vector<ProofScript> scripts;
    LemmaRegistry lemmas;

    const ProofScript& script(const std::string& name) const {
        for (const ProofScript& s : scripts)
            if (s.name == name) return s;
        throw ScriptError("no bundled script named " + name);
    }
    bool has_script(const std::string& name) const {
        for (const ProofScript& s : scripts)
            if (s.name == name) return true;
        return false;
    }
};

inline BundledKernel load_bundled() {
    BundledKernel k;
    for (const auto& [name, text] : bundled_script_texts()) {
        ProofScript s = parse_script(text);
        if (s.name != name)
            throw ScriptError("bundled script name mismatch: " + s.name + " vs " + name);
        k.scripts.push_back(s);
    }
    for (const BundledLemmaSpec& spec : bundled_lemma_specs())
        register_bundled_lemma(k.script(spec.script_name), spec, k.lemmas);
    CheckResult r = check_proof(k.script("no_go"), k.lemmas);
    if (!r.ok)
        throw ScriptError("bundled script no_go failed at line " +
                          std::to_string(r.failed_line) + ": " + r.reason);
    return k;
}

// Convenience per the library surface: all bundled scripts, checked.
inline std::vector<ProofScript> bundled_scripts() { return load_bundled().scripts; }

// ----------------------------------------------------------------------------
// Demo models, in the model text format.
// ----------------------------------------------------------------------------

inline const std::vector<std::pair<std::string, const char*>>& bundled_model_texts() {
    static const std::vector<std::pair<std::string, const char*>> texts{
        {"reflexive_point", R"raw(
# one reflexive world; p and K[A]p hold
world w
rel w w
val p w 1
val K[A]p w 1
)raw"},
        {"irreflexive_point", R"raw(
# one world with an empty relation; the agent knows p at w, but there is no
# accessible world, so <>K[A]p fails: knowledge would be forgotten
world w
val p w 1
val K[A]p w 1
)raw"},
        {"two_chain", R"raw(
# two worlds, w -> u only; p holds at u, not at w
world w
world u
rel w u
val p w 0
val p u 1
)raw"},
        {"s_violation", R"raw(
# an agent knows p and knows ~p at the same world
world w
rel w w
val p w 1
val K[A]p w 1
val K[A](~p) w 1
)raw"},
        {"c_violation", R"raw(
# agent A knows that B knows p, yet does not know p
world w
rel w w
val p w 1
val K[A](K[B]p) w 1
val K[A]p w 0
)raw"},
    };
    return texts;
}

inline KripkeModel bundled_model(const std::string& name) {
    for (const auto& [n, text] : bundled_model_texts())
        if (n == name) return parse_model(text);
    throw ModelError("no bundled model named " + name);
}

}  // namespace empl
