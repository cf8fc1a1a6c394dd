#include <gtest/gtest.h>

#include "empl/bundled.hpp"
#include "empl/kripke.hpp"

using namespace empl;

namespace {

AgentId A() { return AgentId{"A"}; }
AgentId B() { return AgentId{"B"}; }

// Small builder used throughout: worlds w0..w(n-1), explicit relation and
// interpretation entries, signature = closure of the interp keys and extras.
KripkeModel make_model(int n, std::vector<std::pair<int, int>> rel,
                       std::vector<std::tuple<std::string, int, int>> vals,
                       std::vector<std::string> extra_sig = {}) {
    KripkeModel m;
    for (int i = 0; i < n; ++i) m.worlds.push_back("w" + std::to_string(i));
    for (auto [a, b] : rel) m.relation.emplace(a, b);
    for (auto& [text, w, bit] : vals) {
        Formula f = parse_formula(text);
        auto& bits = m.interp[f];
        bits.resize(n, 0);
        bits[w] = static_cast<std::uint8_t>(bit);
        std::set<Formula> c = closure(f);
        m.signature.insert(c.begin(), c.end());
    }
    for (const std::string& text : extra_sig) {
        std::set<Formula> c = closure(parse_formula(text));
        m.signature.insert(c.begin(), c.end());
    }
    for (const Formula& f : m.signature)
        if (f.is_interp_formula() && !m.interp.count(f))
            m.interp[f] = std::vector<std::uint8_t>(n, 0);
    for (auto& [f, bits] : m.interp) bits.resize(n, 0);
    m.validate();
    return m;
}

TEST(Valuate, ReflexiveWitness) {
    KripkeModel m = make_model(1, {{0, 0}}, {{"p", 0, 1}});
    EXPECT_EQ(valuate(m, parse_formula("<>p"), 0), 1);
}

TEST(Valuate, VacuousBoxEmptyDiamond) {
    KripkeModel m = make_model(1, {}, {{"q", 0, 1}});
    EXPECT_EQ(valuate(m, parse_formula("[]q"), 0), 1);
    EXPECT_EQ(valuate(m, parse_formula("<>q"), 0), 0);
}

TEST(Valuate, TwoWorldChain) {
    KripkeModel m = make_model(2, {{0, 1}}, {{"p", 0, 0}, {"p", 1, 1}});
    EXPECT_EQ(valuate(m, parse_formula("<>p"), 0), 1);
    EXPECT_EQ(valuate(m, parse_formula("[]p"), 0), 1);
    EXPECT_EQ(valuate(m, parse_formula("p -> <>p"), 0), 1);
}

TEST(Valuate, ClassicalConnectivesAtAWorld) {
    KripkeModel m = make_model(1, {}, {{"p", 0, 1}, {"q", 0, 0}});
    EXPECT_EQ(valuate(m, parse_formula("p & q"), 0), 0);
    EXPECT_EQ(valuate(m, parse_formula("p | q"), 0), 1);
    EXPECT_EQ(valuate(m, parse_formula("p -> q"), 0), 0);
    EXPECT_EQ(valuate(m, parse_formula("q -> p"), 0), 1);
    EXPECT_EQ(valuate(m, parse_formula("~q"), 0), 1);
    EXPECT_EQ(valuate(m, parse_formula("_|_"), 0), 0);
}

TEST(Valuate, KFormulasAreOpaque) {
    KripkeModel m = make_model(1, {{0, 0}}, {{"p", 0, 0}, {"K[A]p", 0, 1}});
    // the agent "knows" p even where p is false: no factivity built in
    EXPECT_EQ(valuate(m, parse_formula("K[A]p"), 0), 1);
    EXPECT_EQ(valuate(m, parse_formula("K[A]p & ~p"), 0), 1);
}

TEST(Valuate, OutsideSignatureIsAnError) {
    KripkeModel m = make_model(1, {}, {{"p", 0, 1}});
    EXPECT_THROW(valuate(m, parse_formula("r"), 0), OutsideSignature);
    EXPECT_THROW(valuate(m, parse_formula("K[A]p"), 0), OutsideSignature);
}

TEST(Validity, ClassicalTautologyEverywhere) {
    KripkeModel m = make_model(2, {{0, 1}}, {{"p", 0, 1}, {"p", 1, 0}});
    EXPECT_TRUE(is_valid_in_model(m, parse_formula("p | ~p")));
    EXPECT_FALSE(is_valid_in_model(m, parse_formula("p")));
}

TEST(Validity, KripkeAxiomInstancesHold) {
    // spot-check several frames; the exhaustive sweep lives in the acceptance suite
    for (auto rel : std::vector<std::vector<std::pair<int, int>>>{
             {}, {{0, 0}}, {{0, 1}}, {{0, 0}, {0, 1}, {1, 1}}, {{1, 0}}}) {
        for (int pa = 0; pa < 2; ++pa)
            for (int pb = 0; pb < 2; ++pb) {
                KripkeModel m = make_model(
                    2, rel, {{"p", 0, pa}, {"p", 1, pb}, {"q", 0, pb}, {"q", 1, pa}});
                EXPECT_TRUE(
                    is_valid_in_model(m, parse_formula("[](p -> q) -> ([]p -> []q)")));
            }
    }
}

TEST(Validity, IrreflexiveKnowledgeLoss) {
    // knowledge held at an irreflexive world cannot be possible knowledge
    KripkeModel m = make_model(1, {}, {{"K[A]p", 0, 1}});
    EXPECT_FALSE(is_valid_in_model(m, parse_formula("K[A]p -> <>K[A]p")));
}

TEST(Frames, Reports) {
    KripkeModel loop = make_model(1, {{0, 0}}, {{"p", 0, 1}});
    FrameReport r1 = frame_properties(loop);
    EXPECT_TRUE(r1.reflexive && r1.transitive && r1.symmetric);

    KripkeModel empty = make_model(1, {}, {{"p", 0, 1}});
    FrameReport r2 = frame_properties(empty);
    EXPECT_FALSE(r2.reflexive);
    EXPECT_TRUE(r2.transitive && r2.symmetric);  // vacuously

    KripkeModel arrow = make_model(2, {{0, 1}}, {{"p", 0, 1}});
    FrameReport r3 = frame_properties(arrow);
    EXPECT_FALSE(r3.reflexive);
    EXPECT_TRUE(r3.transitive);
    EXPECT_FALSE(r3.symmetric);
}

TEST(CheckSchema, SingleOutcomeCounterexample) {
    KripkeModel m =
        make_model(1, {{0, 0}}, {{"p", 0, 1}, {"K[A]p", 0, 1}, {"K[A](~p)", 0, 1}});
    SchemaCheckResult r = check_schema(m, builtin_schema("S"), {A()});
    ASSERT_FALSE(r.ok);
    EXPECT_EQ(r.bindings.formulas.at("phi"), parse_formula("p"));
    EXPECT_EQ(r.bindings.agents.at("i"), A());
    EXPECT_EQ(r.world, 0);
}

TEST(CheckSchema, AllZeroKnowledgeSatisfiesS) {
    KripkeModel m =
        make_model(2, {{0, 1}}, {{"p", 0, 1}}, {"K[A]p", "K[A](~p)", "K[A]q", "K[A](~q)"});
    EXPECT_TRUE(check_schema(m, builtin_schema("S"), {A()}).ok);
}

TEST(CheckSchema, ConsistencyCounterexample) {
    KripkeModel m =
        make_model(1, {{0, 0}}, {{"p", 0, 1}, {"K[A](K[B]p)", 0, 1}, {"K[A]p", 0, 0}});
    SchemaCheckResult r = check_schema(m, builtin_schema("C"), {A(), B()});
    ASSERT_FALSE(r.ok);
    EXPECT_EQ(r.bindings.agents.at("i"), A());
    EXPECT_EQ(r.bindings.agents.at("j"), B());
    EXPECT_EQ(r.bindings.formulas.at("phi"), parse_formula("p"));
    EXPECT_EQ(r.world, 0);
    EXPECT_EQ(r.instance, parse_formula("K[A](K[B]p) -> K[A]p"));
}

TEST(CheckSchema, OutOfSignatureInstancesAreSkipped) {
    // phi := K[A]p would need K[A]K[A]p; there is no such entry, so only the
    // atom instance is checked and it holds
    KripkeModel m = make_model(1, {{0, 0}}, {{"p", 0, 0}, {"K[A]p", 0, 0}, {"K[A](~p)", 0, 0}});
    EXPECT_TRUE(check_schema(m, builtin_schema("S"), {A()}).ok);
}

// -- properties over an enumerated family of small models ---------------------

std::vector<KripkeModel> enumerate_models() {
    std::vector<KripkeModel> out;
    for (int n = 1; n <= 2; ++n) {
        unsigned rel_space = 1u << (n * n);
        unsigned interp_space = 1u << (3 * n);  // p, q, K[A]p
        for (unsigned rel = 0; rel < rel_space; ++rel) {
            for (unsigned iv = 0; iv < interp_space; ++iv) {
                std::vector<std::pair<int, int>> pairs;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if ((rel >> (a * n + b)) & 1u) pairs.emplace_back(a, b);
                std::vector<std::tuple<std::string, int, int>> vals;
                const char* names[3] = {"p", "q", "K[A]p"};
                for (int k = 0; k < 3; ++k)
                    for (int w = 0; w < n; ++w)
                        vals.emplace_back(names[k], w, (iv >> (k * n + w)) & 1u);
                out.push_back(make_model(n, pairs, vals));
            }
        }
    }
    return out;
}

TEST(Properties, DiamondBoxDuality) {
    std::vector<Formula> probes{
        parse_formula("<>p"), parse_formula("<>~p"), parse_formula("<>(p & q)"),
        parse_formula("<><>p"), parse_formula("<>[]p"), parse_formula("<>K[A]p"),
        parse_formula("<>(p -> q)")};
    for (const KripkeModel& m : enumerate_models())
        for (const Formula& d : probes)
            for (int w = 0; w < static_cast<int>(m.worlds.size()); ++w) {
                Formula dual = Formula::neg(Formula::box(Formula::neg(d.left())));
                ASSERT_EQ(valuate(m, d, w), valuate(m, dual, w));
            }
}

TEST(Properties, SemanticModusPonensAndNecessitation) {
    std::vector<Formula> fs{parse_formula("p"), parse_formula("p -> q"),
                            parse_formula("K[A]p -> p"), parse_formula("[]p"),
                            parse_formula("p | ~q")};
    for (const KripkeModel& m : enumerate_models()) {
        for (const Formula& f : fs)
            for (const Formula& g : fs) {
                if (is_valid_in_model(m, f) && is_valid_in_model(m, Formula::implies(f, g)))
                    ASSERT_TRUE(is_valid_in_model(m, g));
            }
        for (const Formula& f : fs)
            if (is_valid_in_model(m, f)) ASSERT_TRUE(is_valid_in_model(m, Formula::box(f)));
    }
}

TEST(Properties, ReflexivityAndTheTruthToPossibilityInstances) {
    std::vector<Formula> probes{parse_formula("p"), parse_formula("q"), parse_formula("K[A]p"),
                                parse_formula("p & q"), parse_formula("~p")};
    for (const KripkeModel& m : enumerate_models()) {
        if (frame_properties(m).reflexive) {
            for (const Formula& f : probes)
                ASSERT_TRUE(is_valid_in_model(m, Formula::implies(f, Formula::diamond(f))));
        }
    }
    // on every frame with an irreflexive world some interpretation refutes
    // some instance at that world
    for (int bad_world = 0; bad_world < 2; ++bad_world) {
        bool refuted = false;
        for (const KripkeModel& m : enumerate_models()) {
            if (m.worlds.size() != 2 || m.related(bad_world, bad_world)) continue;
            for (const Formula& f : probes)
                if (!valuate(m, Formula::implies(f, Formula::diamond(f)), bad_world))
                    refuted = true;
        }
        EXPECT_TRUE(refuted);
    }
}

TEST(ModelIO, RoundTrip) {
    KripkeModel m =
        make_model(2, {{0, 1}, {1, 1}}, {{"p", 0, 1}, {"K[A]p", 1, 1}}, {"<>q"});
    KripkeModel back = parse_model(write_model(m));
    EXPECT_EQ(back.worlds, m.worlds);
    EXPECT_EQ(back.relation, m.relation);
    EXPECT_EQ(back.interp, m.interp);
    EXPECT_EQ(back.signature, m.signature);
    EXPECT_EQ(write_model(back), write_model(m));
}

TEST(ModelIO, ParseErrorsCarryLineNumbers) {
    try {
        parse_model("world w\nrel w u\n");
        FAIL() << "expected ModelError";
    } catch (const ModelError& e) {
        EXPECT_NE(std::string(e.what()).find("unknown world"), std::string::npos);
    }
    try {
        parse_model("world w\nval p & q w 1\n");
        FAIL() << "expected ModelError";
    } catch (const ModelError& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("line 2"), std::string::npos);
        EXPECT_NE(msg.find("atoms or K"), std::string::npos);
    }
    EXPECT_THROW(parse_model(""), ModelError);
    EXPECT_THROW(parse_model("world w\nval p w 2\n"), ModelError);
    EXPECT_THROW(parse_model("world w\nworld w\n"), ModelError);
    EXPECT_THROW(parse_model("world w\nfrobnicate\n"), ModelError);
}

TEST(ModelIO, OmittedValuationsDefaultToZero) {
    KripkeModel m = parse_model("world w\nworld u\nval p w 1\nsig K[A]p\n");
    EXPECT_EQ(valuate(m, parse_formula("p"), 1), 0);
    EXPECT_EQ(valuate(m, parse_formula("K[A]p"), 0), 0);
}

TEST(Bundled, DemoModelsLoadAndBehave) {
    KripkeModel refl = bundled_model("reflexive_point");
    EXPECT_TRUE(is_valid_in_model(refl, parse_formula("p -> <>p")));
    KripkeModel irr = bundled_model("irreflexive_point");
    EXPECT_FALSE(is_valid_in_model(irr, parse_formula("K[A]p -> <>K[A]p")));
    KripkeModel chain = bundled_model("two_chain");
    EXPECT_EQ(valuate(chain, parse_formula("<>p"), 0), 1);
    EXPECT_FALSE(check_schema(bundled_model("s_violation"), builtin_schema("S"), {A()}).ok);
    EXPECT_FALSE(
        check_schema(bundled_model("c_violation"), builtin_schema("C"), {A(), B()}).ok);
    EXPECT_THROW(bundled_model("missing"), ModelError);
}

}  // namespace
