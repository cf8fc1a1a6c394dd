// ============================================================================
// empl/formula.hpp — formula trees for epistemic modal propositional logic
// ============================================================================
//
// A Formula is an immutable tree over:
//
//   Atom(name) | Falsum | Not f | And f g | Or f g | Implies f g
//   | Box f | Diamond f | Knows(agent) f
//
// Nodes are shared (shared_ptr) and never mutated after construction, so
// formulas are cheap to copy and safe to share across threads.  Equality is
// structural; each node caches its hash so equality can fail fast.
//
// Falsum (_|_) is a constant used by the proof kernel to state contradiction
// targets.  Diamond is a primitive node; the definitional identity
// <>f == ~[]~f is available as expand_diamonds(), not forced.
//
// ============================================================================

#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace empl {

// Agent identifiers are short strings ("A", "B", ...).  Sessions that care
// about a fixed agent set enforce it at parse time, not here.
struct AgentId {
    std::string name;

    friend bool operator==(const AgentId& a, const AgentId& b) { return a.name == b.name; }
    friend bool operator!=(const AgentId& a, const AgentId& b) { return a.name != b.name; }
    friend bool operator<(const AgentId& a, const AgentId& b) { return a.name < b.name; }
};

class Formula {
public:
    enum class Kind : std::uint8_t {
        Atom,
        Falsum,
        Not,
        And,
        Or,
        Implies,
        Box,
        Diamond,
        Knows,
    };

    // -- constructors --------------------------------------------------------

    // Default is Falsum, so containers of Formula are always in a valid state.
    Formula() : node_(falsum_node()) {}

    static Formula atom(std::string name) {
        assert(!name.empty());
        return Formula(std::make_shared<Node>(Kind::Atom, std::move(name), AgentId{}, nullptr, nullptr));
    }
    static Formula falsum() {
        return Formula(std::make_shared<Node>(Kind::Falsum, "", AgentId{}, nullptr, nullptr));
    }
    static Formula neg(Formula a) {
        return Formula(std::make_shared<Node>(Kind::Not, "", AgentId{}, a.node_, nullptr));
    }
    static Formula conj(Formula a, Formula b) {
        return Formula(std::make_shared<Node>(Kind::And, "", AgentId{}, a.node_, b.node_));
    }
    static Formula disj(Formula a, Formula b) {
        return Formula(std::make_shared<Node>(Kind::Or, "", AgentId{}, a.node_, b.node_));
    }
    static Formula implies(Formula a, Formula b) {
        return Formula(std::make_shared<Node>(Kind::Implies, "", AgentId{}, a.node_, b.node_));
    }
    static Formula box(Formula a) {
        return Formula(std::make_shared<Node>(Kind::Box, "", AgentId{}, a.node_, nullptr));
    }
    static Formula diamond(Formula a) {
        return Formula(std::make_shared<Node>(Kind::Diamond, "", AgentId{}, a.node_, nullptr));
    }
    static Formula knows(AgentId agent, Formula a) {
        assert(!agent.name.empty());
        return Formula(std::make_shared<Node>(Kind::Knows, "", std::move(agent), a.node_, nullptr));
    }

    // -- accessors -----------------------------------------------------------

    Kind kind() const { return node_->kind; }

    const std::string& atom_name() const {
        assert(kind() == Kind::Atom);
        return node_->label;
    }
    const AgentId& agent() const {
        assert(kind() == Kind::Knows);
        return node_->agent;
    }
    // Unary child, or left operand of a binary connective.
    Formula left() const {
        assert(node_->a);
        return Formula(node_->a);
    }
    Formula right() const {
        assert(node_->b);
        return Formula(node_->b);
    }

    bool is_unary() const {
        Kind k = kind();
        return k == Kind::Not || k == Kind::Box || k == Kind::Diamond || k == Kind::Knows;
    }
    bool is_binary() const {
        Kind k = kind();
        return k == Kind::And || k == Kind::Or || k == Kind::Implies;
    }
    bool is_leaf() const { return kind() == Kind::Atom || kind() == Kind::Falsum; }

    // True when the formula contains no Box/Diamond/Knows node.
    bool is_propositional() const {
        if (is_leaf()) return true;
        Kind k = kind();
        if (k == Kind::Box || k == Kind::Diamond || k == Kind::Knows) return false;
        if (is_unary()) return left().is_propositional();
        return left().is_propositional() && right().is_propositional();
    }

    // Atoms and K-prefixed formulas are the ones a Kripke interpretation
    // function assigns values to directly.
    bool is_interp_formula() const { return kind() == Kind::Atom || kind() == Kind::Knows; }

    std::size_t hash() const { return node_->hash; }

    friend bool operator==(const Formula& x, const Formula& y) {
        return equal_nodes(x.node_.get(), y.node_.get());
    }
    friend bool operator!=(const Formula& x, const Formula& y) { return !(x == y); }
    friend bool operator<(const Formula& x, const Formula& y) {
        return compare_nodes(x.node_.get(), y.node_.get()) < 0;
    }

private:
    struct Node {
        Kind kind;
        std::string label;
        AgentId agent;
        std::shared_ptr<const Node> a, b;
        std::size_t hash;

        Node(Kind k, std::string l, AgentId ag,
             std::shared_ptr<const Node> x, std::shared_ptr<const Node> y)
            : kind(k), label(std::move(l)), agent(std::move(ag)), a(std::move(x)), b(std::move(y)) {
            std::size_t h = static_cast<std::size_t>(kind) * 0x9e3779b97f4a7c15ull;
            h ^= std::hash<std::string>{}(label) + 0x9e3779b9 + (h << 6) + (h >> 2);
            h ^= std::hash<std::string>{}(agent.name) + 0x9e3779b9 + (h << 6) + (h >> 2);
            if (a) h ^= a->hash + 0x9e3779b9 + (h << 6) + (h >> 2);
            if (b) h ^= b->hash + 0x9e3779b9 + (h << 6) + (h >> 2);
            hash = h;
        }
    };

    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static const std::shared_ptr<const Node>& falsum_node() {
        static const std::shared_ptr<const Node> node =
            std::make_shared<Node>(Kind::Falsum, "", AgentId{}, nullptr, nullptr);
        return node;
    }

    static bool equal_nodes(const Node* x, const Node* y) {
        if (x == y) return true;
        if (x->hash != y->hash || x->kind != y->kind) return false;
        if (x->label != y->label || x->agent.name != y->agent.name) return false;
        if (!!x->a != !!y->a || !!x->b != !!y->b) return false;
        if (x->a && !equal_nodes(x->a.get(), y->a.get())) return false;
        if (x->b && !equal_nodes(x->b.get(), y->b.get())) return false;
        return true;
    }

    static int compare_nodes(const Node* x, const Node* y) {
        if (x == y) return 0;
        if (x->kind != y->kind) return x->kind < y->kind ? -1 : 1;
        if (int c = x->label.compare(y->label)) return c;
        if (int c = x->agent.name.compare(y->agent.name)) return c;
        if (!!x->a != !!y->a) return x->a ? 1 : -1;
        if (x->a) {
            if (int c = compare_nodes(x->a.get(), y->a.get())) return c;
        }
        if (!!x->b != !!y->b) return x->b ? 1 : -1;
        if (x->b) {
            if (int c = compare_nodes(x->b.get(), y->b.get())) return c;
        }
        return 0;
    }

    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// ----------------------------------------------------------------------------
// Rendering.  Canonical concrete syntax; see parse.hpp for the grammar.
// Precedence, tightest first: ~ [] <> K[i]  >  &  >  |  >  ->.
// & and | associate left, -> associates right.
// ----------------------------------------------------------------------------

namespace detail {

inline int precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::Implies: return 1;
        case Formula::Kind::Or: return 2;
        case Formula::Kind::And: return 3;
        case Formula::Kind::Not:
        case Formula::Kind::Box:
        case Formula::Kind::Diamond:
        case Formula::Kind::Knows: return 4;
        default: return 5;
    }
}

inline void render_into(const Formula& f, int context, std::string& out) {
    int prec = precedence(f.kind());
    bool wrap = prec < context;
    if (wrap) out += '(';
    switch (f.kind()) {
        case Formula::Kind::Atom:
            out += f.atom_name();
            break;
        case Formula::Kind::Falsum:
            out += "_|_";
            break;
        case Formula::Kind::Not:
            out += '~';
            render_into(f.left(), 4, out);
            break;
        case Formula::Kind::Box:
            out += "[]";
            render_into(f.left(), 4, out);
            break;
        case Formula::Kind::Diamond:
            out += "<>";
            render_into(f.left(), 4, out);
            break;
        case Formula::Kind::Knows:
            out += "K[";
            out += f.agent().name;
            out += ']';
            render_into(f.left(), 4, out);
            break;
        case Formula::Kind::And:
            render_into(f.left(), 3, out);
            out += " & ";
            render_into(f.right(), 4, out);
            break;
        case Formula::Kind::Or:
            render_into(f.left(), 2, out);
            out += " | ";
            render_into(f.right(), 3, out);
            break;
        case Formula::Kind::Implies:
            render_into(f.left(), 2, out);
            out += " -> ";
            render_into(f.right(), 1, out);
            break;
    }
    if (wrap) out += ')';
}

}  // namespace detail

inline std::string render(const Formula& f) {
    std::string out;
    detail::render_into(f, 0, out);
    return out;
}

// ----------------------------------------------------------------------------
// Structural queries.
// ----------------------------------------------------------------------------

inline void collect_subformulas(const Formula& f, std::set<Formula>& out) {
    if (!out.insert(f).second) return;
    if (f.is_unary() || f.is_binary()) collect_subformulas(f.left(), out);
    if (f.is_binary()) collect_subformulas(f.right(), out);
}

inline std::set<Formula> subformulas(const Formula& f) {
    std::set<Formula> out;
    collect_subformulas(f, out);
    return out;
}

// Subformula closure plus, for every Diamond subformula <>g, its dual
// expansion ~[]~g (with that expansion's own subformulas).  This is the
// finite signature used by model checking and bounded search.
inline std::set<Formula> closure(const Formula& f) {
    std::set<Formula> out = subformulas(f);
    std::vector<Formula> diamonds;
    for (const Formula& g : out)
        if (g.kind() == Formula::Kind::Diamond) diamonds.push_back(g);
    for (const Formula& g : diamonds)
        collect_subformulas(Formula::neg(Formula::box(Formula::neg(g.left()))), out);
    return out;
}

inline std::set<Formula> closure_of(const std::vector<Formula>& fs) {
    std::set<Formula> out;
    for (const Formula& f : fs) {
        std::set<Formula> c = closure(f);
        out.insert(c.begin(), c.end());
    }
    return out;
}

// Rewrites every Diamond via the duality <>g == ~[]~g.
inline Formula expand_diamonds(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::Falsum:
            return f;
        case Formula::Kind::Not:
            return Formula::neg(expand_diamonds(f.left()));
        case Formula::Kind::Box:
            return Formula::box(expand_diamonds(f.left()));
        case Formula::Kind::Diamond:
            return Formula::neg(Formula::box(Formula::neg(expand_diamonds(f.left()))));
        case Formula::Kind::Knows:
            return Formula::knows(f.agent(), expand_diamonds(f.left()));
        case Formula::Kind::And:
            return Formula::conj(expand_diamonds(f.left()), expand_diamonds(f.right()));
        case Formula::Kind::Or:
            return Formula::disj(expand_diamonds(f.left()), expand_diamonds(f.right()));
        case Formula::Kind::Implies:
            return Formula::implies(expand_diamonds(f.left()), expand_diamonds(f.right()));
    }
    throw std::logic_error("unreachable");
}

inline void collect_atoms(const Formula& f, std::set<std::string>& out) {
    if (f.kind() == Formula::Kind::Atom) {
        out.insert(f.atom_name());
        return;
    }
    if (f.is_unary() || f.is_binary()) collect_atoms(f.left(), out);
    if (f.is_binary()) collect_atoms(f.right(), out);
}

inline std::set<std::string> atoms_of(const Formula& f) {
    std::set<std::string> out;
    collect_atoms(f, out);
    return out;
}

inline void collect_agents(const Formula& f, std::set<AgentId>& out) {
    if (f.kind() == Formula::Kind::Knows) out.insert(f.agent());
    if (f.is_unary() || f.is_binary()) collect_agents(f.left(), out);
    if (f.is_binary()) collect_agents(f.right(), out);
}

inline std::set<AgentId> agents_of(const Formula& f) {
    std::set<AgentId> out;
    collect_agents(f, out);
    return out;
}

}  // namespace empl
