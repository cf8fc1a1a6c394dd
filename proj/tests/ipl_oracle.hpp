// Test-only oracle for the intuitionistic tautology decision: exhaustive
// refutation search over finite intuitionistic Kripke models (preorders with
// persistent valuations), independent of the G4ip prover under test.
//
// A propositional formula is IPL-valid iff it holds at every world of every
// finite such model; this search enumerates all models up to `max_worlds`
// worlds and reports whether a refuting world exists.

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "empl/formula.hpp"

namespace ipl_oracle {

struct Model {
    int n = 0;
    // reach[w] bitmask of worlds u with w <= u (reflexive-transitive)
    std::vector<unsigned> reach;
    // val[atom] bitmask of worlds where the atom holds (persistent)
    std::map<std::string, unsigned> val;
};

inline bool holds(const Model& m, const empl::Formula& f, int w);

inline bool holds_all_above(const Model& m, const empl::Formula& a, const empl::Formula& b,
                            int w) {
    for (int u = 0; u < m.n; ++u)
        if ((m.reach[w] >> u) & 1u)
            if (holds(m, a, u) && !holds(m, b, u)) return false;
    return true;
}

inline bool holds(const Model& m, const empl::Formula& f, int w) {
    using K = empl::Formula::Kind;
    switch (f.kind()) {
        case K::Atom: {
            auto it = m.val.find(f.atom_name());
            return it != m.val.end() && ((it->second >> w) & 1u);
        }
        case K::Falsum:
            return false;
        case K::And:
            return holds(m, f.left(), w) && holds(m, f.right(), w);
        case K::Or:
            return holds(m, f.left(), w) || holds(m, f.right(), w);
        case K::Implies:
            return holds_all_above(m, f.left(), f.right(), w);
        case K::Not: {
            // ~a == a -> falsum: a fails at every reachable world
            for (int u = 0; u < m.n; ++u)
                if (((m.reach[w] >> u) & 1u) && holds(m, f.left(), u)) return false;
            return true;
        }
        default:
            throw std::logic_error("oracle handles propositional formulas only");
    }
}

// True when some model with at most max_worlds worlds refutes f somewhere.
inline bool refutable(const empl::Formula& f, int max_worlds) {
    std::set<std::string> atom_set = empl::atoms_of(f);
    std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
    for (int n = 1; n <= max_worlds; ++n) {
        unsigned rel_bits = n * n;
        for (unsigned rel = 0; rel < (1u << rel_bits); ++rel) {
            Model m;
            m.n = n;
            m.reach.assign(n, 0);
            auto related = [&](int a, int b) { return (rel >> (a * n + b)) & 1u; };
            bool preorder = true;
            for (int a = 0; a < n && preorder; ++a) {
                if (!related(a, a)) preorder = false;
                for (int b = 0; b < n && preorder; ++b) {
                    if (!related(a, b)) continue;
                    for (int c = 0; c < n; ++c)
                        if (related(b, c) && !related(a, c)) {
                            preorder = false;
                            break;
                        }
                }
            }
            if (!preorder) continue;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (related(a, b)) m.reach[a] |= 1u << b;

            unsigned val_bits = static_cast<unsigned>(atoms.size()) * n;
            for (unsigned v = 0; v < (1u << val_bits); ++v) {
                bool persistent = true;
                m.val.clear();
                for (std::size_t k = 0; k < atoms.size() && persistent; ++k) {
                    unsigned mask = (v >> (k * n)) & ((1u << n) - 1u);
                    for (int a = 0; a < n && persistent; ++a)
                        if ((mask >> a) & 1u)
                            for (int b = 0; b < n; ++b)
                                if (related(a, b) && !((mask >> b) & 1u)) {
                                    persistent = false;
                                    break;
                                }
                    m.val[atoms[k]] = mask;
                }
                if (!persistent) continue;
                for (int w = 0; w < n; ++w)
                    if (!holds(m, f, w)) return true;
            }
        }
    }
    return false;
}

}  // namespace ipl_oracle
