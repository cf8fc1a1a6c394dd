// ============================================================================
// empl/kripke.hpp — Kripke models, valuation, validity, schema checking
// ============================================================================
//
// A model is a triple (worlds, relation, interp).  The interpretation
// function assigns 0/1 directly to atoms and K-prefixed formulas at each
// world; K-formulas are opaque (no relational semantics for knowledge
// operators).  Models carry an explicit finite signature — the formula set
// over which interp is total and over which schema metavariables range — so
// exhaustive checking stays decidable.
//
// Valuation clauses: atoms and K-formulas read from interp; falsum is 0;
// ~ -> & | are classical at a world; []f holds at w iff f holds at every
// R-successor of w; <>f iff f holds at some R-successor.
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
#include "empl/schema.hpp"

namespace empl {

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct KripkeModel {
    std::vector<std::string> worlds;               // world names, order fixed
    std::set<std::pair<int, int>> relation;        // accessibility, index pairs
    std::map<Formula, std::vector<std::uint8_t>> interp;  // atom/K-formula -> per-world bit
    std::set<Formula> signature;                   // finite closure set

    int world_index(const std::string& name) const {
        for (std::size_t i = 0; i < worlds.size(); ++i)
            if (worlds[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool related(int w, int u) const { return relation.count({w, u}) > 0; }

    // Enforces the structural invariants: at least one world, indices in
    // range, interp total (per-world vectors of the right length) on the
    // interp-relevant part of the signature.
    void validate() const {
        if (worlds.empty()) throw ModelError("model has no worlds");
        for (auto [a, b] : relation)
            if (a < 0 || b < 0 || a >= static_cast<int>(worlds.size()) ||
                b >= static_cast<int>(worlds.size()))
                throw ModelError("relation references a world out of range");
        for (const auto& [f, bits] : interp) {
            if (!f.is_interp_formula())
                throw ModelError("interp key is not an atom or K-formula: " + render(f));
            if (bits.size() != worlds.size())
                throw ModelError("interp for " + render(f) + " is not total over worlds");
        }
        for (const Formula& f : signature)
            if (f.is_interp_formula() && !interp.count(f))
                throw ModelError("signature formula lacks an interpretation: " + render(f));
    }
};

struct OutsideSignature : std::runtime_error {
    Formula formula;
    explicit OutsideSignature(Formula f)
        : std::runtime_error("formula outside model signature: " + render(f)),
          formula(std::move(f)) {}
};

inline int valuate(const KripkeModel& m, const Formula& f, int w) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::Knows: {
            auto it = m.interp.find(f);
            if (it == m.interp.end()) throw OutsideSignature(f);
            return it->second[w];
        }
        case Formula::Kind::Falsum:
            return 0;
        case Formula::Kind::Not:
            return 1 - valuate(m, f.left(), w);
        case Formula::Kind::And:
            return valuate(m, f.left(), w) && valuate(m, f.right(), w) ? 1 : 0;
        case Formula::Kind::Or:
            return valuate(m, f.left(), w) || valuate(m, f.right(), w) ? 1 : 0;
        case Formula::Kind::Implies:
            return !valuate(m, f.left(), w) || valuate(m, f.right(), w) ? 1 : 0;
        case Formula::Kind::Box: {
            for (int u = 0; u < static_cast<int>(m.worlds.size()); ++u)
                if (m.related(w, u) && !valuate(m, f.left(), u)) return 0;
            return 1;
        }
        case Formula::Kind::Diamond: {
            for (int u = 0; u < static_cast<int>(m.worlds.size()); ++u)
                if (m.related(w, u) && valuate(m, f.left(), u)) return 1;
            return 0;
        }
    }
    throw std::logic_error("unreachable");
}

inline bool is_valid_in_model(const KripkeModel& m, const Formula& f) {
    for (int w = 0; w < static_cast<int>(m.worlds.size()); ++w)
        if (!valuate(m, f, w)) return false;
    return true;
}

struct FrameReport {
    bool reflexive = false;
    bool transitive = false;
    bool symmetric = false;
};

inline FrameReport frame_properties(const KripkeModel& m) {
    int n = static_cast<int>(m.worlds.size());
    FrameReport r{true, true, true};
    for (int w = 0; w < n; ++w)
        if (!m.related(w, w)) r.reflexive = false;
    for (auto [a, b] : m.relation) {
        if (!m.related(b, a)) r.symmetric = false;
        for (int c = 0; c < n; ++c)
            if (m.related(b, c) && !m.related(a, c)) r.transitive = false;
    }
    return r;
}

// ----------------------------------------------------------------------------
// Schema checking over a signature.
//
// Formula metavariables range over the model signature, agent metavariables
// over the given agent list.  Bindings whose instance mentions an atom or
// K-formula outside the signature are skipped: the signature is the declared
// scope of the check.  Enumeration order (signature order for formulas,
// given order for agents, ascending worlds) fixes which counterexample is
// reported first.
// ----------------------------------------------------------------------------

struct SchemaCheckResult {
    bool ok = true;
    Bindings bindings;   // set when !ok
    int world = -1;      // set when !ok
    Formula instance = Formula::falsum();
};

namespace detail {

inline bool instance_in_signature(const KripkeModel& m, const Formula& inst) {
    for (const Formula& g : subformulas(inst))
        if (g.is_interp_formula() && !m.interp.count(g)) return false;
    return true;
}

inline bool next_assignment(std::vector<std::size_t>& idx, std::size_t base) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (++idx[k] < base) return true;
        idx[k] = 0;
    }
    return false;
}

}  // namespace detail

inline SchemaCheckResult check_schema(const KripkeModel& m, const Schema& s,
                                      const std::vector<AgentId>& agents) {
    std::vector<Formula> sig(m.signature.begin(), m.signature.end());
    const auto& fmv = s.formula_metavars();
    const auto& amv = s.agent_metavars();
    if (!fmv.empty() && sig.empty()) return {};
    if (!amv.empty() && agents.empty()) return {};

    std::vector<std::size_t> fidx(fmv.size(), 0), aidx(amv.size(), 0);
    while (true) {
        Bindings b;
        for (std::size_t k = 0; k < fmv.size(); ++k) b.formulas[fmv[k]] = sig[fidx[k]];
        bool agents_done = false;
        while (!agents_done) {
            for (std::size_t k = 0; k < amv.size(); ++k) b.agents[amv[k]] = agents[aidx[k]];
            Formula inst = s.instantiate(b);
            if (detail::instance_in_signature(m, inst)) {
                for (int w = 0; w < static_cast<int>(m.worlds.size()); ++w) {
                    if (!valuate(m, inst, w)) {
                        SchemaCheckResult r;
                        r.ok = false;
                        r.bindings = b;
                        r.world = w;
                        r.instance = inst;
                        return r;
                    }
                }
            }
            if (amv.empty() || !detail::next_assignment(aidx, agents.size())) agents_done = true;
        }
        if (fmv.empty() || !detail::next_assignment(fidx, sig.size())) break;
    }
    return {};
}

// ----------------------------------------------------------------------------
// Model text format.  Line oriented; '#' starts a comment.
//
//   world <name>
//   rel <from> <to>
//   val <formula> <world> <0|1>      formula must be an atom or K[...]-form
//   sig <formula>                    extra signature entry (optional)
//
// The signature is the closure of every val/sig formula.  Interpretation
// entries omitted for a signature atom/K-formula default to 0.
// ----------------------------------------------------------------------------

inline KripkeModel parse_model(const std::string& text) {
    KripkeModel m;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::pair<std::string, std::string>> pending_rel;
    std::vector<std::tuple<Formula, std::string, int, int>> pending_val;

    auto fail = [&](const std::string& msg) {
        throw ModelError("model line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "world") {
            std::string name;
            if (!(ls >> name)) fail("expected world name");
            if (m.world_index(name) >= 0) fail("duplicate world " + name);
            m.worlds.push_back(name);
        } else if (kw == "rel") {
            std::string a, b;
            if (!(ls >> a >> b)) fail("expected two world names");
            pending_rel.emplace_back(a, b);
        } else if (kw == "val") {
            std::string rest;
            std::getline(ls, rest);
            // formula may contain spaces; world and bit are the last two fields
            std::istringstream rs(rest);
            std::vector<std::string> parts;
            std::string tok;
            while (rs >> tok) parts.push_back(tok);
            if (parts.size() < 3) fail("expected: val <formula> <world> <0|1>");
            int bit;
            if (parts.back() == "0")
                bit = 0;
            else if (parts.back() == "1")
                bit = 1;
            else
                fail("value must be 0 or 1, got " + parts.back());
            std::string world = parts[parts.size() - 2];
            std::string ftext;
            for (std::size_t k = 0; k + 2 < parts.size(); ++k) {
                if (k) ftext += ' ';
                ftext += parts[k];
            }
            Formula f = [&] {
                try {
                    return parse_formula(ftext);
                } catch (const ParseError& e) {
                    fail(std::string("bad formula: ") + e.what());
                    throw;
                }
            }();
            if (!f.is_interp_formula())
                fail("interp formulas must be atoms or K[...]-prefixed: " + ftext);
            pending_val.emplace_back(f, world, bit, lineno);
        } else if (kw == "sig") {
            std::string rest;
            std::getline(ls, rest);
            try {
                std::set<Formula> c = closure(parse_formula(rest));
                m.signature.insert(c.begin(), c.end());
            } catch (const ParseError& e) {
                fail(std::string("bad formula: ") + e.what());
            }
        } else {
            fail("unknown directive '" + kw + "'");
        }
    }

    if (m.worlds.empty()) throw ModelError("model has no worlds");
    for (const auto& [a, b] : pending_rel) {
        int ia = m.world_index(a), ib = m.world_index(b);
        if (ia < 0) throw ModelError("rel references unknown world " + a);
        if (ib < 0) throw ModelError("rel references unknown world " + b);
        m.relation.emplace(ia, ib);
    }
    for (const auto& [f, world, bit, at] : pending_val) {
        int w = m.world_index(world);
        if (w < 0)
            throw ModelError("model line " + std::to_string(at) + ": unknown world " + world);
        std::set<Formula> c = closure(f);
        m.signature.insert(c.begin(), c.end());
        auto& bits = m.interp[f];
        bits.resize(m.worlds.size(), 0);
        bits[w] = static_cast<std::uint8_t>(bit);
    }
    // default-fill 0 for signature atoms/K-formulas never mentioned in a val
    for (const Formula& f : m.signature)
        if (f.is_interp_formula() && !m.interp.count(f))
            m.interp[f] = std::vector<std::uint8_t>(m.worlds.size(), 0);
    for (auto& [f, bits] : m.interp) bits.resize(m.worlds.size(), 0);
    m.validate();
    return m;
}

inline std::string write_model(const KripkeModel& m) {
    std::ostringstream out;
    for (const std::string& w : m.worlds) out << "world " << w << "\n";
    for (auto [a, b] : m.relation) out << "rel " << m.worlds[a] << " " << m.worlds[b] << "\n";
    for (const auto& [f, bits] : m.interp)
        for (std::size_t w = 0; w < bits.size(); ++w)
            out << "val " << render(f) << " " << m.worlds[w] << " " << int(bits[w]) << "\n";
    // signature entries beyond the interp closures (added via `sig` lines)
    std::set<Formula> covered;
    for (const auto& [f, bits] : m.interp) {
        std::set<Formula> c = closure(f);
        covered.insert(c.begin(), c.end());
    }
    for (const Formula& f : m.signature)
        if (!covered.count(f)) out << "sig " << render(f) << "\n";
    return out.str();
}

}  // namespace empl
