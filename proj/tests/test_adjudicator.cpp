#include <catch2/catch_amalgamated.hpp>

#include "colarena/random_gen.hpp"
#include "colarena/schemes.hpp"

using namespace colarena;

namespace {
const Letter eP{"P", LetterKind::Enumeration, 0};
const Letter eQ{"Q", LetterKind::Enumeration, 0};
const Letter bp{"p", LetterKind::Elementary, 2};

LabeledMove mv(Player by, std::vector<Segment> path, Payload pay) {
    return LabeledMove{by, std::move(path), pay};
}
}  // namespace

TEST_CASE("unresolved choice conventions") {
    Interpretation all_true;
    all_true.set_elementary("p", ElemTable{true, {}});

    // A x . E y . ~p(x,y): after the environment picks x=1 the machine's E y
    // is unresolved, so the environment wins
    Formula f = parse_formula("A x . E y . ~p(x,y)");
    Run r{mv(Player::Environment, {}, Payload::constant(1))};
    CHECK(winner_finite(f, all_true, r) == Player::Environment);

    // E x . A y . p(x,y), empty run: the machine's unresolved choice loses
    Formula g = parse_formula("E x . A y . p(x,y)");
    CHECK(winner_finite(g, all_true, {}) == Player::Environment);

    // and dually, an unresolved environment choice is machine-won
    CHECK(winner_finite(f, all_true, {}) == Player::Machine);
}

TEST_CASE("branching win condition evaluates every leaf") {
    Formula f = Formula::brec(Cardinality::Uncountable, Formula::atom(eP));
    Interpretation I;
    I.set_enumeration("P", EnumSuperset{});

    Run r{
        mv(Player::Environment, {}, Payload::replicate("")),
        mv(Player::Environment, {Segment::thread("0")}, Payload::constant(5)),
        mv(Player::Machine, {Segment::thread("0")}, Payload::constant(5)),
    };
    // thread 0: {5} contains {5}; thread 1: empty sets — machine wins both
    CHECK(winner_finite(f, I, r) == Player::Machine);

    // without the echo the machine loses thread 0, and with it the game
    Run r2{r[0], r[1]};
    CHECK(winner_finite(f, I, r2) == Player::Environment);

    Verdict v = decompose_verdict(f, I, r);
    REQUIRE(v.breakdown.size() >= 3);
    for (const auto& line : v.breakdown) CHECK(line.winner == Player::Machine);
}

TEST_CASE("illegal runs and missing letters are reported") {
    Formula f = Formula::atom(eP);
    Interpretation I;  // missing P
    CHECK_THROWS_AS(winner_finite(f, I, {}), std::invalid_argument);

    Interpretation J;
    J.set_enumeration("P", EnumAlways{true});
    Run bad{mv(Player::Machine, {Segment::index(1)}, Payload::constant(1))};
    CHECK_THROWS_AS(winner_finite(f, J, bad), IllegalRunError);
}

TEST_CASE("components of the quantified instance after the opening move") {
    Formula f = make_s4_instance(Cardinality::Aleph0, bp);
    Interpretation all_true;
    all_true.set_elementary("p", ElemTable{true, {}});

    // environment opens with 1 at the recurrence-free component
    Run r{mv(Player::Environment, {Segment::index(1)}, Payload::constant(1))};
    Verdict v = decompose_verdict(f, all_true, r);
    CHECK(v.winner == Player::Environment);
    for (const auto& line : v.breakdown) {
        INFO(line.component);
        CHECK(line.winner == Player::Environment);
    }

    // single-atom game: the report is just the winner
    Formula a = Formula::atom(eP);
    Interpretation J;
    J.set_enumeration("P", EnumAlways{false});
    Verdict va = decompose_verdict(a, J, {});
    CHECK(va.winner == Player::Environment);
    REQUIRE(va.breakdown.size() == 1);
    CHECK(va.breakdown[0].winner == va.winner);
}

TEST_CASE("flip_run") {
    CHECK(flip_run({}).empty());
    Run r{mv(Player::Machine, {}, Payload::constant(1)),
          mv(Player::Environment, {}, Payload::constant(2))};
    Run f = flip_run(r);
    CHECK(f[0].by == Player::Environment);
    CHECK(f[1].by == Player::Machine);
    CHECK(flip_run(f) == r);
}

TEST_CASE("duality: negation swaps the winner of the flipped run") {
    Rng rng(424242);
    int done = 0;
    for (int iter = 0; iter < 200; ++iter) {
        Formula f = random_formula(rng);
        Interpretation I = random_interpretation(rng, f);
        Run run = random_run(rng, f, (int)rand_below(rng, 5), OracleBounds{{1, 2}, 2});
        Player w = winner_finite(f, I, run);
        Run flipped = flip_run(run);
        CHECK(winner_finite(Formula::neg(f), I, flipped) == opponent(w));
        // and through the syntactic normal-form dual as well
        CHECK(winner_finite(negate_nnf(f), I, flipped) == opponent(w));
        ++done;
    }
    CHECK(done == 200);
}

TEST_CASE("to_nnf preserves the game behaviorally") {
    Rng rng(99);
    for (int iter = 0; iter < 150; ++iter) {
        Formula f = random_formula(rng);
        Interpretation I = random_interpretation(rng, f);
        Run run = random_run(rng, f, (int)rand_below(rng, 5), OracleBounds{{1, 2}, 2});
        CHECK(winner_finite(to_nnf(f), I, run) == winner_finite(f, I, run));
    }
}

TEST_CASE("finite thread collapse: both branching cardinalities agree") {
    Rng rng(1234);
    for (int iter = 0; iter < 150; ++iter) {
        FormulaGenOptions o;
        o.max_depth = 3;
        Formula base = random_formula(rng, o);
        Formula fu = Formula::brec(Cardinality::Uncountable, base);
        Formula fc = Formula::brec(Cardinality::Aleph0, base);
        Interpretation I = random_interpretation(rng, fu);
        Run run = random_run(rng, fu, (int)rand_below(rng, 6), OracleBounds{{1, 2}, 2});

        Player wu = winner_finite(fu, I, run);
        CHECK(winner_finite(fc, I, run) == wu);

        // per-leaf recombination through the projection operator
        GameState g = replay(fu, run);
        std::vector<Segment> root{};
        bool all_machine = true;
        for (const auto& leaf : g.tree_view(root).second) {
            Run proj = project_thread(run, root, leaf, true);
            all_machine &= winner_finite(base, I, proj) == Player::Machine;
        }
        CHECK((all_machine ? Player::Machine : Player::Environment) == wu);
    }
}

TEST_CASE("verdicts ignore interleaving of independent components") {
    // moves in distinct components commute when both orders are legal
    Formula f = make_short_production(eP, eQ);
    Interpretation I;
    I.set_enumeration("P", EnumSuperset{});
    I.set_enumeration("Q", EnumSetsEqual{});

    auto c1 = mv(Player::Environment, {Segment::index(1)}, Payload::constant(3));
    auto c2 = mv(Player::Environment, {Segment::index(3), Segment::copy(2)}, Payload::constant(4));
    auto c3 = mv(Player::Machine, {Segment::index(2), Segment::copy(1), Segment::index(1)},
                 Payload::constant(3));
    Run a{c1, c2, c3}, b{c3, c2, c1}, c{c2, c3, c1};
    Player w = winner_finite(f, I, a);
    CHECK(winner_finite(f, I, b) == w);
    CHECK(winner_finite(f, I, c) == w);
}

TEST_CASE("a verdict recombines from its breakdown") {
    Rng rng(555);
    for (int iter = 0; iter < 60; ++iter) {
        Formula f = make_s6_instance(eP);
        Interpretation I = random_interpretation(rng, f);
        Run run = random_run(rng, f, (int)rand_below(rng, 6), OracleBounds{{1, 2}, 2});
        Verdict v = decompose_verdict(f, I, run);
        bool some_machine = false;
        for (const auto& line : v.breakdown)
            if (line.component.find('/') == std::string::npos)  // top-level disjuncts
                some_machine |= line.winner == Player::Machine;
        CHECK((some_machine ? Player::Machine : Player::Environment) == v.winner);
    }
}
