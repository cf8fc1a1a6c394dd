#include <gtest/gtest.h>

#include <random>

#include "empl/parse.hpp"
#include "empl/pl.hpp"
#include "ipl_oracle.hpp"

using namespace empl;

namespace {

bool ipl(const std::string& text) {
    return pl_tautology(parse_formula(text), LogicMode::Intuitionistic);
}
bool cpl(const std::string& text) {
    return pl_tautology(parse_formula(text), LogicMode::Classical);
}

TEST(Classical, Basics) {
    EXPECT_TRUE(cpl("p -> p"));
    EXPECT_TRUE(cpl("p | ~p"));
    EXPECT_TRUE(cpl("~~p -> p"));
    EXPECT_TRUE(cpl("((p -> q) -> p) -> p"));  // Peirce
    EXPECT_TRUE(cpl("~(p & ~q) -> (p -> q)"));
    EXPECT_FALSE(cpl("p -> q"));
    EXPECT_FALSE(cpl("p"));
    EXPECT_TRUE(cpl("_|_ -> p"));
    EXPECT_FALSE(cpl("p -> _|_"));
}

TEST(Intuitionistic, Basics) {
    EXPECT_TRUE(ipl("p -> p"));
    EXPECT_TRUE(ipl("p & q -> p"));
    EXPECT_TRUE(ipl("p -> p | q"));
    EXPECT_TRUE(ipl("(p & ~p) -> q"));       // ex falso
    EXPECT_TRUE(ipl("_|_ -> p"));
    EXPECT_TRUE(ipl("p -> ~~p"));
    EXPECT_TRUE(ipl("~~~p -> ~p"));
    EXPECT_TRUE(ipl("~p -> ~~~p"));
    EXPECT_TRUE(ipl("(p -> q) -> (~q -> ~p)"));  // contraposition
}

TEST(Intuitionistic, ClassicalOnlyPrinciplesRejected) {
    EXPECT_FALSE(ipl("~~p -> p"));
    EXPECT_FALSE(ipl("p | ~p"));
    EXPECT_FALSE(ipl("((p -> q) -> p) -> p"));
    EXPECT_FALSE(ipl("(p -> q) | (q -> p)"));
    EXPECT_FALSE(ipl("~(p & ~q) -> (p -> q)"));
    EXPECT_TRUE(ipl("~~(p | ~p)"));
}

TEST(Intuitionistic, NamedShapesUsedByTheDerivations) {
    // line 4 of the knowability derivation
    EXPECT_TRUE(ipl("~(p & ~q) -> (p -> ~~q)"));
    // contraposition companion with the triple negation collapsed
    EXPECT_TRUE(ipl("(p -> ~~q) -> (~q -> ~p)"));
    // contradictory antecedent absorbs any strengthening
    EXPECT_TRUE(ipl("(p & ~p) -> (p & ~q)"));
    // conjunction projections and pairing
    EXPECT_TRUE(ipl("p & q -> p"));
    EXPECT_TRUE(ipl("(r -> p) & (r -> q) -> (r -> p & q)"));
    // case split used by the composed refutation
    EXPECT_TRUE(ipl("(p | q | r) & (p -> _|_) & (q -> _|_) & (r -> _|_) -> _|_"));
}

TEST(Atomization, ModalSubformulasAreOpaqueAtoms) {
    // identical modal subtrees share an atom
    EXPECT_TRUE(ipl("K[A]p -> K[A]p"));
    EXPECT_TRUE(ipl("<>p -> <>p"));
    // different modal subtrees do not
    EXPECT_FALSE(cpl("[]p -> <>p"));
    EXPECT_FALSE(cpl("K[A]p -> p"));
    EXPECT_FALSE(cpl("K[A]p -> K[B]p"));
    // classical-only reasoning stays classical-only over opaque atoms
    EXPECT_TRUE(cpl("~~K[A]p -> K[A]p"));
    EXPECT_FALSE(ipl("~~K[A]p -> K[A]p"));
}

TEST(Consequence, FoldsPremises) {
    std::vector<Formula> prem{parse_formula("p -> q"), parse_formula("p")};
    EXPECT_TRUE(pl_consequence(prem, parse_formula("q"), LogicMode::Intuitionistic));
    EXPECT_FALSE(pl_consequence({parse_formula("p | q")}, parse_formula("p"),
                                LogicMode::Classical));
    EXPECT_TRUE(pl_consequence({}, parse_formula("p -> p"), LogicMode::Intuitionistic));
}

TEST(Limits, TooManyAtomsForTruthTable) {
    Formula f = Formula::atom("a0");
    for (int i = 1; i < 26; ++i) f = Formula::conj(f, Formula::atom("a" + std::to_string(i)));
    f = Formula::implies(f, Formula::atom("a0"));
    EXPECT_THROW(pl_tautology(f, LogicMode::Classical), PlTooLarge);
}

// -- systematic cross-checks over an enumerated formula space -----------------

void enumerate_prop(int depth, std::vector<Formula>& out) {
    std::vector<Formula> leaves{Formula::atom("p"), Formula::atom("q"), Formula::falsum()};
    if (depth == 1) {
        out = leaves;
        return;
    }
    std::vector<Formula> smaller;
    enumerate_prop(depth - 1, smaller);
    out = leaves;
    for (const Formula& a : smaller) out.push_back(Formula::neg(a));
    for (const Formula& a : smaller)
        for (const Formula& b : smaller) {
            out.push_back(Formula::conj(a, b));
            out.push_back(Formula::disj(a, b));
            out.push_back(Formula::implies(a, b));
        }
}

TEST(CrossCheck, IntuitionisticImpliesClassical) {
    std::vector<Formula> space;
    enumerate_prop(3, space);
    for (const Formula& f : space)
        if (pl_tautology(f, LogicMode::Intuitionistic))
            ASSERT_TRUE(pl_tautology(f, LogicMode::Classical)) << render(f);
}

TEST(CrossCheck, GlivenkoDoubleNegation) {
    // classical |- f  iff  intuitionistic |- ~~f, for propositional f
    std::vector<Formula> space;
    enumerate_prop(3, space);
    for (const Formula& f : space) {
        bool classical = pl_tautology(f, LogicMode::Classical);
        bool ipl_nn = pl_tautology(Formula::neg(Formula::neg(f)), LogicMode::Intuitionistic);
        ASSERT_EQ(classical, ipl_nn) << render(f);
    }
}

TEST(CrossCheck, AgainstBoundedKripkeOracle) {
    // the prover and the 3-world countermodel search agree on every depth-2
    // formula over two atoms, and on a seeded sample of the depth-3 space
    std::vector<Formula> space;
    enumerate_prop(2, space);
    std::vector<Formula> deep;
    enumerate_prop(3, deep);
    std::mt19937_64 rng(20240817);
    for (int t = 0; t < 250; ++t) space.push_back(deep[rng() % deep.size()]);

    int refuted = 0;
    for (const Formula& f : space) {
        bool proved = pl_tautology(f, LogicMode::Intuitionistic);
        bool refutable = ipl_oracle::refutable(f, 3);
        ASSERT_NE(proved, refutable) << render(f);
        refuted += refutable ? 1 : 0;
    }
    EXPECT_GT(refuted, 0);
}

}  // namespace
