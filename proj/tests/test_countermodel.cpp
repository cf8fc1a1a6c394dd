#include <gtest/gtest.h>

#include "empl/countermodel.hpp"

using namespace empl;

namespace {

AgentId A() { return AgentId{"A"}; }

TEST(Search, KnowabilityAloneDoesNotForceTheFitchShape) {
    // assuming the knowability schema on reflexive frames still leaves room
    // to refute p -> ~~K[A]p; brute-force enumeration is the oracle here
    SearchBounds b;
    b.max_worlds = 2;
    b.max_atoms = 1;
    b.max_agents = 1;
    FrameConstraints fc;
    fc.require_reflexive = true;
    Formula target = parse_formula("p -> ~~K[A]p");
    SearchOutcome o = search_countermodel({builtin_schema("CONST")}, target, b, fc, {A()});
    ASSERT_EQ(o.status, SearchOutcome::Status::CountermodelFound);
    ASSERT_TRUE(o.model.has_value());

    // the returned model re-verifies, per module contract
    EXPECT_TRUE(frame_properties(*o.model).reflexive);
    EXPECT_FALSE(is_valid_in_model(*o.model, target));
    EXPECT_TRUE(check_schema(*o.model, builtin_schema("CONST"), {A()}).ok);
    for (const Formula& inst : o.assumed_instances)
        EXPECT_TRUE(is_valid_in_model(*o.model, inst)) << render(inst);
}

TEST(Search, KripkeAxiomHasNoCountermodel) {
    SearchBounds b;
    b.max_worlds = 3;
    Formula target = parse_formula("[](p -> q) -> ([]p -> []q)");
    SearchOutcome o = search_countermodel({}, target, b, {}, {A()});
    EXPECT_EQ(o.status, SearchOutcome::Status::Exhausted);
    EXPECT_FALSE(o.model.has_value());
    EXPECT_GT(o.models_enumerated, 1000u);
}

TEST(Search, TruthToPossibilityNeedsReflexivity) {
    SearchBounds b;
    b.max_worlds = 2;
    Formula target = parse_formula("p -> <>p");

    SearchOutcome free_frames = search_countermodel({}, target, b, {}, {A()});
    ASSERT_EQ(free_frames.status, SearchOutcome::Status::CountermodelFound);
    // lexicographically first hit: one world, empty relation, p true
    EXPECT_EQ(free_frames.model->worlds.size(), 1u);
    EXPECT_TRUE(free_frames.model->relation.empty());
    EXPECT_EQ(valuate(*free_frames.model, parse_formula("p"), 0), 1);

    FrameConstraints fc;
    fc.require_reflexive = true;
    SearchOutcome reflexive = search_countermodel({}, target, b, fc, {A()});
    EXPECT_EQ(reflexive.status, SearchOutcome::Status::Exhausted);
}

TEST(Search, DeterministicAcrossRuns) {
    SearchBounds b;
    b.max_worlds = 2;
    b.max_atoms = 1;
    b.max_agents = 1;
    FrameConstraints fc;
    fc.require_reflexive = true;
    Formula target = parse_formula("p -> ~~K[A]p");
    SearchOutcome o1 = search_countermodel({builtin_schema("CONST")}, target, b, fc, {A()});
    SearchOutcome o2 = search_countermodel({builtin_schema("CONST")}, target, b, fc, {A()});
    ASSERT_TRUE(o1.model && o2.model);
    EXPECT_EQ(write_model(*o1.model), write_model(*o2.model));
    EXPECT_EQ(o1.models_enumerated, o2.models_enumerated);
}

TEST(Search, GroundPremisesConstrainTheSpace) {
    // premise p forces p everywhere, so p -> <>p can only fail for lack of a
    // successor; requiring symmetry and transitivity still leaves the empty
    // relation
    SearchBounds b;
    b.max_worlds = 1;
    FrameConstraints fc;
    fc.require_transitive = true;
    fc.require_symmetric = true;
    Formula target = parse_formula("p -> <>p");
    SearchOutcome o = search_countermodel({Schema::ground("fact", parse_formula("p"))}, target,
                                          b, fc, {A()});
    ASSERT_EQ(o.status, SearchOutcome::Status::CountermodelFound);
    EXPECT_TRUE(o.model->relation.empty());
    EXPECT_EQ(valuate(*o.model, parse_formula("p"), 0), 1);
}

TEST(Search, ContradictoryPremisesExhaust) {
    SearchBounds b;
    b.max_worlds = 2;
    SearchOutcome o = search_countermodel(
        {Schema::ground("fact", parse_formula("p")), Schema::ground("co", parse_formula("~p"))},
        parse_formula("_|_"), b, {}, {A()});
    EXPECT_EQ(o.status, SearchOutcome::Status::Exhausted);
}

TEST(Search, BudgetGuards) {
    SearchBounds tiny;
    tiny.max_worlds = 3;
    tiny.budget = 10;
    EXPECT_THROW(
        search_countermodel({}, parse_formula("[](p -> q) -> ([]p -> []q)"), tiny, {}, {A()}),
        BudgetExceeded);

    SearchBounds strict;
    strict.max_atoms = 1;
    EXPECT_THROW(search_countermodel({}, parse_formula("p & q"), strict, {}, {A()}),
                 BudgetExceeded);

    SearchBounds one_agent;
    one_agent.max_agents = 1;
    EXPECT_THROW(search_countermodel({}, parse_formula("K[A]p & K[B]p"), one_agent, {},
                                     {A(), AgentId{"B"}}),
                 BudgetExceeded);
}

TEST(Search, KMonotoneConstraintPrunes) {
    // without the constraint there is a model where K[A](p & q) holds but
    // K[A]p fails; with it, the transport implication is forced
    Formula kpq = parse_formula("K[A](p & q)");
    Formula kp = parse_formula("K[A]p");
    Formula target = Formula::implies(kpq, kp);
    SearchBounds b;
    b.max_worlds = 1;
    SearchOutcome plain = search_countermodel({}, target, b, {}, {A()});
    EXPECT_EQ(plain.status, SearchOutcome::Status::CountermodelFound);

    FrameConstraints fc;
    fc.require_k_monotone = true;
    SearchOutcome mono = search_countermodel({}, target, b, fc, {A()});
    EXPECT_EQ(mono.status, SearchOutcome::Status::Exhausted);
}

}  // namespace
