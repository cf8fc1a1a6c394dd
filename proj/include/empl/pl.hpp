// ============================================================================
// empl/pl.hpp — propositional tautology decisions (classical / intuitionistic)
// ============================================================================
//
// Input formulas are treated as propositional over their atomic constituents:
// maximal Box/Diamond/Knows subformulas are mapped to opaque atoms (equal
// subtrees map to the same atom), Falsum maps to bottom.
//
// Classical mode is a truth-table decision, capped at 24 distinct atoms.
//
// Intuitionistic mode is the contraction-free sequent calculus G4ip
// (Dyckhoff 1992, "Contraction-free sequent calculi for intuitionistic
// logic").  G4ip is sound and complete for IPL and terminates on all inputs,
// so no size bound or depth cutoff is needed.  tests/ cross-check it against
// a bounded intuitionistic-Kripke countermodel search and against Glivenko's
// theorem.
//
// ============================================================================

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "empl/formula.hpp"

namespace empl {

enum class LogicMode : std::uint8_t { Intuitionistic, Classical };

inline std::string to_string(LogicMode m) {
    return m == LogicMode::Intuitionistic ? "intuitionistic" : "classical";
}

struct PlTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace pl {

// Compact propositional representation.  Nodes live in a flat arena; `Var`
// uses `a` as the variable index.  Negation is encoded as Imp(x, Bot).
enum class Op : std::uint8_t { Var, Bot, And, Or, Imp };

struct PlNode {
    Op op;
    int a = -1, b = -1;
    friend bool operator==(const PlNode&, const PlNode&) = default;
};

class Arena {
public:
    int add(PlNode n) {
        auto it = index_.find(n);
        if (it != index_.end()) return it->second;
        nodes_.push_back(n);
        int id = static_cast<int>(nodes_.size()) - 1;
        index_.emplace(n, id);
        return id;
    }
    const PlNode& operator[](int id) const { return nodes_[id]; }
    int var_count() const { return var_count_; }

    int var(int v) {
        var_count_ = std::max(var_count_, v + 1);
        return add({Op::Var, v, -1});
    }
    int bot() { return add({Op::Bot, -1, -1}); }
    int conj(int x, int y) { return add({Op::And, x, y}); }
    int disj(int x, int y) { return add({Op::Or, x, y}); }
    int imp(int x, int y) { return add({Op::Imp, x, y}); }

private:
    struct Less {
        bool operator()(const PlNode& x, const PlNode& y) const {
            if (x.op != y.op) return x.op < y.op;
            if (x.a != y.a) return x.a < y.a;
            return x.b < y.b;
        }
    };
    std::vector<PlNode> nodes_;
    std::map<PlNode, int, Less> index_;
    int var_count_ = 0;
};

// Maps a modal formula to the arena, atomizing Box/Diamond/Knows subtrees.
inline int atomize(const Formula& f, Arena& ar, std::map<Formula, int>& atom_ids) {
    switch (f.kind()) {
        case Formula::Kind::Falsum:
            return ar.bot();
        case Formula::Kind::Atom:
        case Formula::Kind::Box:
        case Formula::Kind::Diamond:
        case Formula::Kind::Knows: {
            auto it = atom_ids.find(f);
            if (it == atom_ids.end())
                it = atom_ids.emplace(f, static_cast<int>(atom_ids.size())).first;
            return ar.var(it->second);
        }
        case Formula::Kind::Not:
            return ar.imp(atomize(f.left(), ar, atom_ids), ar.bot());
        case Formula::Kind::And:
            return ar.conj(atomize(f.left(), ar, atom_ids), atomize(f.right(), ar, atom_ids));
        case Formula::Kind::Or:
            return ar.disj(atomize(f.left(), ar, atom_ids), atomize(f.right(), ar, atom_ids));
        case Formula::Kind::Implies:
            return ar.imp(atomize(f.left(), ar, atom_ids), atomize(f.right(), ar, atom_ids));
    }
    throw std::logic_error("unreachable");
}

// -- classical: truth tables --------------------------------------------------

inline bool eval_classical(const Arena& ar, int id, std::uint32_t assignment) {
    const PlNode& n = ar[id];
    switch (n.op) {
        case Op::Var: return (assignment >> n.a) & 1u;
        case Op::Bot: return false;
        case Op::And: return eval_classical(ar, n.a, assignment) && eval_classical(ar, n.b, assignment);
        case Op::Or: return eval_classical(ar, n.a, assignment) || eval_classical(ar, n.b, assignment);
        case Op::Imp: return !eval_classical(ar, n.a, assignment) || eval_classical(ar, n.b, assignment);
    }
    return false;
}

inline bool classical_tautology(const Arena& ar, int id) {
    int n = ar.var_count();
    if (n > 24) throw PlTooLarge("too many distinct atoms for a truth-table decision");
    std::uint32_t total = 1u << n;
    for (std::uint32_t a = 0; a < total; ++a)
        if (!eval_classical(ar, id, a)) return false;
    return true;
}

// -- intuitionistic: G4ip ------------------------------------------------------

// Proves the sequent  ctx |- goal.  The context is kept as a sorted multiset
// of node ids so recursion can share the arena.
class G4ip {
public:
    explicit G4ip(Arena& ar) : ar_(ar) {}

    bool prove(std::vector<int> ctx, int goal) {
        std::sort(ctx.begin(), ctx.end());

        // Right-invertible rules first.
        const PlNode& g = ar_[goal];
        if (g.op == Op::And) return prove(ctx, g.a) && prove(ctx, g.b);
        if (g.op == Op::Imp) {
            ctx.push_back(g.a);
            return prove(std::move(ctx), g.b);
        }

        // Saturate the invertible left rules.
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 0; k < ctx.size(); ++k) {
                const PlNode& n = ar_[ctx[k]];
                if (n.op == Op::Bot) return true;
                if (n.op == Op::Var && ctx[k] == goal) return true;
                if (n.op == Op::And) {
                    int a = n.a, b = n.b;
                    ctx.erase(ctx.begin() + k);
                    ctx.push_back(a);
                    ctx.push_back(b);
                    changed = true;
                    break;
                }
                if (n.op == Op::Or) {
                    int a = n.a, b = n.b;
                    ctx.erase(ctx.begin() + k);
                    std::vector<int> left = ctx, right = ctx;
                    left.push_back(a);
                    right.push_back(b);
                    return prove(std::move(left), goal) && prove(std::move(right), goal);
                }
                if (n.op == Op::Imp) {
                    const PlNode& ant = ar_[n.a];
                    if (ant.op == Op::Bot) {  // bottom antecedent: vacuous
                        ctx.erase(ctx.begin() + k);
                        changed = true;
                        break;
                    }
                    if (ant.op == Op::And) {  // (a&b)->c  ~~>  a->(b->c)
                        int rewritten = ar_.imp(ant.a, ar_.imp(ant.b, n.b));
                        ctx[k] = rewritten;
                        changed = true;
                        break;
                    }
                    if (ant.op == Op::Or) {  // (a|b)->c  ~~>  a->c, b->c
                        int c = n.b;
                        int ia = ar_.imp(ant.a, c), ib = ar_.imp(ant.b, c);
                        ctx.erase(ctx.begin() + k);
                        ctx.push_back(ia);
                        ctx.push_back(ib);
                        changed = true;
                        break;
                    }
                    if (ant.op == Op::Var &&
                        std::find(ctx.begin(), ctx.end(), n.a) != ctx.end()) {
                        // p, p->c  ~~>  p, c
                        ctx[k] = n.b;
                        changed = true;
                        break;
                    }
                }
            }
        }

        if (ar_[goal].op == Op::Var &&
            std::find(ctx.begin(), ctx.end(), goal) != ctx.end())
            return true;

        // Non-invertible phase: R-or, and L-imp-imp for each nested implication.
        if (ar_[goal].op == Op::Or) {
            if (prove(ctx, ar_[goal].a)) return true;
            if (prove(ctx, ar_[goal].b)) return true;
        }
        for (std::size_t k = 0; k < ctx.size(); ++k) {
            const PlNode& n = ar_[ctx[k]];
            if (n.op != Op::Imp) continue;
            const PlNode& ant = ar_[n.a];
            if (ant.op != Op::Imp) continue;
            // ctx', (a->b)->c |- goal  from  ctx', b->c, a |- b  and  ctx', c |- goal
            std::vector<int> rest = ctx;
            rest.erase(rest.begin() + k);
            std::vector<int> prem1 = rest;
            prem1.push_back(ar_.imp(ant.b, n.b));
            prem1.push_back(ant.a);
            std::vector<int> prem2 = rest;
            prem2.push_back(n.b);
            if (prove(std::move(prem1), ant.b) && prove(std::move(prem2), goal)) return true;
        }
        return false;
    }

private:
    Arena& ar_;
};

}  // namespace pl

// Decides whether `f` is a propositional tautology in the given mode, with
// modal/K subformulas treated as opaque atoms.
inline bool pl_tautology(const Formula& f, LogicMode mode) {
    pl::Arena ar;
    std::map<Formula, int> atom_ids;
    int id = pl::atomize(f, ar, atom_ids);
    if (mode == LogicMode::Classical) return pl::classical_tautology(ar, id);
    return pl::G4ip(ar).prove({}, id);
}

// Decides premises |- conclusion as the tautology (p1 & ... & pn) -> c
// (equivalently, by deduction, c from the premises).
inline bool pl_consequence(const std::vector<Formula>& premises, const Formula& conclusion,
                           LogicMode mode) {
    pl::Arena ar;
    std::map<Formula, int> atom_ids;
    int id = pl::atomize(conclusion, ar, atom_ids);
    for (auto it = premises.rbegin(); it != premises.rend(); ++it)
        id = ar.imp(pl::atomize(*it, ar, atom_ids), id);
    if (mode == LogicMode::Classical) return pl::classical_tautology(ar, id);
    return pl::G4ip(ar).prove({}, id);
}

}  // namespace empl
