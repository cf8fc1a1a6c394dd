#include <gtest/gtest.h>

#include <random>

#include "empl/formula.hpp"
#include "empl/parse.hpp"
#include "empl/schema.hpp"

using namespace empl;

namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }
AgentId A() { return AgentId{"A"}; }
AgentId B() { return AgentId{"B"}; }

TEST(Parse, KnowabilityShape) {
    Formula f = parse_formula("p -> <>K[A]p");
    Formula expected = Formula::implies(p(), Formula::diamond(Formula::knows(A(), p())));
    EXPECT_EQ(f, expected);
}

TEST(Parse, BareAtom) {
    EXPECT_EQ(parse_formula("p"), p());
}

TEST(Parse, ContinuityShape) {
    Formula f = parse_formula("~( K[A]p & K[A](~K[A]p) )");
    Formula kp = Formula::knows(A(), p());
    Formula expected = Formula::neg(Formula::conj(kp, Formula::knows(A(), Formula::neg(kp))));
    EXPECT_EQ(f, expected);
}

TEST(Parse, PrecedenceAndAssociativity) {
    // -> binds loosest and associates right; & over |; unaries tightest
    EXPECT_EQ(parse_formula("p -> q -> p"),
              Formula::implies(p(), Formula::implies(q(), p())));
    EXPECT_EQ(parse_formula("p & q | p"),
              Formula::disj(Formula::conj(p(), q()), p()));
    EXPECT_EQ(parse_formula("p & q & p"),
              Formula::conj(Formula::conj(p(), q()), p()));
    EXPECT_EQ(parse_formula("~[]<>p"),
              Formula::neg(Formula::box(Formula::diamond(p()))));
    EXPECT_EQ(parse_formula("_|_ -> p"), Formula::implies(Formula::falsum(), p()));
}

TEST(Parse, ErrorsCarryPosition) {
    try {
        parse_formula("p -> (q & ");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_GE(e.pos, 10u);
    }
    EXPECT_THROW(parse_formula("p @ q"), ParseError);
    EXPECT_THROW(parse_formula("p -> "), ParseError);
    EXPECT_THROW(parse_formula("(p"), ParseError);
    EXPECT_THROW(parse_formula("p q"), ParseError);
}

TEST(Parse, UnknownAgentRejectedWithWhitelist) {
    std::set<std::string> agents{"A", "B"};
    EXPECT_NO_THROW(parse_formula("K[A]p", &agents));
    EXPECT_THROW(parse_formula("K[W]p", &agents), ParseError);
    EXPECT_NO_THROW(parse_formula("K[W]p"));  // no whitelist: any agent
}

TEST(Render, Basics) {
    EXPECT_EQ(render(p()), "p");
    EXPECT_EQ(render(Formula::diamond(p())), "<>p");
    EXPECT_EQ(render(Formula::knows(A(), Formula::conj(p(), q()))), "K[A](p & q)");
    EXPECT_EQ(render(Formula::falsum()), "_|_");
    EXPECT_EQ(render(Formula::implies(Formula::implies(p(), q()), p())), "(p -> q) -> p");
    EXPECT_EQ(render(Formula::conj(p(), Formula::conj(q(), p()))), "p & (q & p)");
}

// Exhaustive tree enumeration to the given depth over two atoms and two
// agents; the enumeration is the oracle for the parse/render round trip.
void enumerate(int depth, std::vector<Formula>& out) {
    if (depth == 0) return;
    std::vector<Formula> smaller;
    enumerate(depth - 1, smaller);
    std::vector<Formula> result{p(), q(), Formula::falsum()};
    for (const Formula& a : smaller) {
        result.push_back(Formula::neg(a));
        result.push_back(Formula::box(a));
        result.push_back(Formula::diamond(a));
        result.push_back(Formula::knows(A(), a));
        result.push_back(Formula::knows(B(), a));
    }
    for (const Formula& a : smaller)
        for (const Formula& b : smaller) {
            result.push_back(Formula::conj(a, b));
            result.push_back(Formula::disj(a, b));
            result.push_back(Formula::implies(a, b));
        }
    out = std::move(result);
}

TEST(RoundTrip, ExhaustiveDepth3) {
    std::vector<Formula> all;
    enumerate(3, all);
    ASSERT_GT(all.size(), 6000u);
    for (const Formula& f : all) {
        Formula back = parse_formula(render(f));
        ASSERT_EQ(back, f) << render(f);
    }
}

Formula random_tree(std::mt19937_64& rng, int depth) {
    int pick = static_cast<int>(rng() % (depth <= 1 ? 3 : 11));
    switch (pick) {
        case 0: return p();
        case 1: return q();
        case 2: return Formula::falsum();
        case 3: return Formula::neg(random_tree(rng, depth - 1));
        case 4: return Formula::box(random_tree(rng, depth - 1));
        case 5: return Formula::diamond(random_tree(rng, depth - 1));
        case 6: return Formula::knows(A(), random_tree(rng, depth - 1));
        case 7: return Formula::knows(B(), random_tree(rng, depth - 1));
        case 8: return Formula::conj(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 9: return Formula::disj(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        default:
            return Formula::implies(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    }
}

TEST(RoundTrip, RandomDeepTrees) {
    std::mt19937_64 rng(20240817);
    for (int t = 0; t < 20000; ++t) {
        Formula f = random_tree(rng, 5);
        ASSERT_EQ(parse_formula(render(f)), f) << render(f);
    }
}

TEST(Closure, Examples) {
    EXPECT_EQ(closure(p()), std::set<Formula>{p()});

    Formula kp = Formula::knows(A(), p());
    Formula impl = Formula::implies(p(), kp);
    EXPECT_EQ(closure(impl), (std::set<Formula>{p(), kp, impl}));

    // <>p expands to ~[]~p alongside the plain subformulas
    Formula dp = Formula::diamond(p());
    std::set<Formula> expected{p(), dp, Formula::neg(p()), Formula::box(Formula::neg(p())),
                               Formula::neg(Formula::box(Formula::neg(p())))};
    EXPECT_EQ(closure(dp), expected);
}

TEST(Closure, MonotoneUnderSubformulas) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        Formula f = random_tree(rng, 4);
        std::set<Formula> big = closure(f);
        for (const Formula& g : subformulas(f)) {
            for (const Formula& h : closure(g)) ASSERT_TRUE(big.count(h)) << render(f);
        }
    }
}

TEST(Diamonds, ExpansionIsSyntacticDual) {
    EXPECT_EQ(expand_diamonds(Formula::diamond(p())),
              Formula::neg(Formula::box(Formula::neg(p()))));
    Formula nested = parse_formula("<>(p & <>q)");
    EXPECT_EQ(expand_diamonds(nested), parse_formula("~[]~(p & ~[]~q)"));
}

TEST(Schema, InstantiateKnowabilityShape) {
    const Schema& c = builtin_schema("CONST");
    Bindings b;
    b.formulas["phi"] = parse_formula("p & ~K[A]p");
    b.agents["i"] = A();
    EXPECT_EQ(c.instantiate(b), parse_formula("(p & ~K[A]p) -> <>K[A](p & ~K[A]p)"));
}

TEST(Schema, InstantiateDistributionDegenerate) {
    const Schema& d = builtin_schema("DIST");
    Bindings b;
    b.formulas["alpha"] = p();
    b.formulas["beta"] = p();
    b.agents["i"] = A();
    EXPECT_EQ(d.instantiate(b), parse_formula("K[A]p & K[A]p -> K[A](p & p)"));
}

TEST(Schema, InstantiateContinuity) {
    const Schema& k = builtin_schema("KCONT");
    Bindings b;
    b.formulas["phi"] = q();
    b.agents["i"] = B();
    EXPECT_EQ(k.instantiate(b), parse_formula("~<>( K[B]q & K[B](~K[B]q) )"));
}

TEST(Schema, MissingBindingIsAnError) {
    const Schema& c = builtin_schema("CONST");
    Bindings b;
    b.formulas["phi"] = p();
    EXPECT_THROW(c.instantiate(b), SchemaError);  // agent i unbound
    Bindings b2;
    b2.agents["i"] = A();
    EXPECT_THROW(c.instantiate(b2), SchemaError);  // phi unbound
}

TEST(Schema, InstantiationCommutesWithClosure) {
    const Schema& c = builtin_schema("CONST");
    Bindings b;
    b.formulas["phi"] = parse_formula("p & q");
    b.agents["i"] = A();
    Formula inst = c.instantiate(b);
    // manual replacement on the body shape
    Formula by_hand = Formula::implies(
        parse_formula("p & q"), Formula::diamond(Formula::knows(A(), parse_formula("p & q"))));
    EXPECT_EQ(inst, by_hand);
    EXPECT_EQ(closure(inst), closure(by_hand));
}

TEST(Schema, UserAtomsCannotCollideWithMetavariables) {
    // an atom literally named "phi" in a binding value stays an atom
    const Schema& c = builtin_schema("CONST");
    Bindings b;
    b.formulas["phi"] = Formula::atom("phi");
    b.agents["i"] = A();
    EXPECT_EQ(c.instantiate(b), parse_formula("phi -> <>K[A]phi"));
}

TEST(Formula, StructuralQueries) {
    Formula f = parse_formula("K[A]p & <>K[B]q -> _|_");
    EXPECT_EQ(atoms_of(f), (std::set<std::string>{"p", "q"}));
    EXPECT_EQ(agents_of(f), (std::set<AgentId>{A(), B()}));
    EXPECT_FALSE(f.is_propositional());
    EXPECT_TRUE(parse_formula("p & ~q -> _|_").is_propositional());
}

TEST(Formula, OrderingIsTotalAndConsistent) {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
        Formula a = random_tree(rng, 3), b = random_tree(rng, 3);
        EXPECT_EQ(a == b, !(a < b) && !(b < a));
        if (a == b) EXPECT_EQ(a.hash(), b.hash());
    }
}

}  // namespace
