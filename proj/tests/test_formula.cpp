#include <catch2/catch_amalgamated.hpp>

#include "colarena/nnf.hpp"
#include "colarena/parser.hpp"
#include "colarena/schemes.hpp"

using namespace colarena;

namespace {
const Letter eP{"P", LetterKind::Enumeration, 0};
const Letter eQ{"Q", LetterKind::Enumeration, 0};
const Letter eR{"R", LetterKind::Enumeration, 0};
const Letter bp{"p", LetterKind::Elementary, 2};

ParseOptions enum_opts(BangKind bang) {
    ParseOptions o;
    o.bang = bang;
    o.enumeration = {"P", "Q", "R"};
    return o;
}
}  // namespace

TEST_CASE("parsing the production principles") {
    // P & !(P -> P & P) -> !P, with ! the parallel recurrence
    Formula f = parse_formula("P & !(P -> P & P) -> !P", enum_opts(BangKind::PRec));
    Formula P = Formula::atom(eP);
    Formula expect = Formula::implies(
        Formula::conj({P, Formula::prec(Formula::implies(P, Formula::conj({P, P})))}),
        Formula::prec(P));
    CHECK(f == expect);

    CHECK(parse_formula("P", enum_opts(BangKind::PRec)) == P);

    Formula g = parse_formula("!(P -> P & Q)", enum_opts(BangKind::BRecAleph0));
    Formula Q = Formula::atom(eQ);
    CHECK(g == Formula::brec(Cardinality::Aleph0,
                             Formula::implies(P, Formula::conj({P, Q}))));
}

TEST_CASE("parser errors carry a position") {
    CHECK_THROWS_AS(parse_formula("P &"), ParseError);
    CHECK_THROWS_AS(parse_formula("E x . p(x, y)"), ParseError);      // unbound y
    CHECK_THROWS_AS(parse_formula("p(x) | A x . p(x)"), ParseError);  // unbound + arity clash
    CHECK_THROWS_AS(parse_formula("!P"), ParseError);                 // no bang binding
    CHECK_THROWS_AS(parse_formula("A x . E x . p(x,x)"), ParseError); // shadowing
    CHECK_THROWS_AS(parse_formula("p(0)"), ParseError);               // constants start at 1
}

TEST_CASE("negation normal form matches the rewritten productions") {
    // the general short production rewrites to ~P | ?(P & (~P | ~Q)) | !Q
    Formula surface = parse_formula("P & !(P -> P & Q) -> !Q", enum_opts(BangKind::PRec));
    CHECK(to_nnf(surface) == make_short_production(eP, eQ));

    // double negation
    Formula nnP = Formula::neg(Formula::neg(Formula::atom(eP)));
    CHECK(to_nnf(nnP) == Formula::atom(eP));

    // the general long production rewrites to
    // ~P | ?(P & (~P | ~Q)) | ?((R | Q) & ~R) | !R
    Formula lsurface =
        parse_formula("P & !(P -> P & Q) & !(R | Q -> R) -> !R", enum_opts(BangKind::PRec));
    CHECK(to_nnf(lsurface) == make_long_production(BangKind::PRec, eP, eQ, eR));

    Formula lsurface_c =
        parse_formula("P & !(P -> P & Q) & !(R | Q -> R) -> !R", enum_opts(BangKind::BRecAleph0));
    CHECK(to_nnf(lsurface_c) == make_long_production(BangKind::BRecAleph0, eP, eQ, eR));
}

TEST_CASE("quantified instance is the normal form of its surface formula") {
    const char* surface =
        "E x . A y . p(x,y) & !(E x . A y . p(x,y) -> E x . A y . p(x,y) & E x . A y . p(x,y))"
        " -> ! E x . A y . p(x,y)";
    ParseOptions o;
    o.bang = BangKind::BRecAleph0;
    Formula f = to_nnf(parse_formula(surface, o));
    CHECK(f == make_s4_instance(Cardinality::Aleph0, bp));

    o.bang = BangKind::BRecUncountable;
    CHECK(to_nnf(parse_formula(surface, o)) == make_s4_instance(Cardinality::Uncountable, bp));
}

TEST_CASE("enumeration instance has eight occurrences, four per sign") {
    Formula f = make_s6_instance(eP);
    int pos = 0, neg = 0;
    auto walk = [&](auto&& self, const Formula& g, bool under_neg) -> void {
        if (g.kind() == Kind::Atom) {
            (under_neg ? neg : pos)++;
            return;
        }
        for (const auto& k : g.kids()) self(self, k, under_neg != (g.kind() == Kind::Neg));
    };
    walk(walk, f, false);
    CHECK(pos == 4);
    CHECK(neg == 4);
    CHECK(is_nnf(f));
}

TEST_CASE("rendering is parse-stable") {
    CHECK(Formula::atom(eP).to_string() == "P");
    CHECK(Formula::brec(Cardinality::Uncountable, Formula::atom(eP)).to_string() == "!u P");

    // golden string for the rewritten short production
    Formula e4 = make_short_production(eP, eQ);
    CHECK(e4.to_string() == "~P | ?p (P & (~P | ~Q)) | !p Q");

    auto roundtrip = [&](const Formula& f) {
        ParseOptions o;
        o.enumeration = {"P", "Q", "R"};
        Formula back = parse_formula(f.to_string(), o);
        CHECK(back == f);
    };
    roundtrip(e4);
    roundtrip(make_long_production(BangKind::BRecAleph0, eP, eQ, eR));
    roundtrip(make_s4_instance(Cardinality::Aleph0, bp));
    roundtrip(make_s4_instance(Cardinality::Uncountable, bp));
    roundtrip(make_s6_instance(eP));
    roundtrip(parse_formula("P & !(P -> P & P) -> !P", enum_opts(BangKind::PRec)));
}

TEST_CASE("to_nnf is idempotent on the scheme formulas") {
    for (Formula f : {make_short_production(eP, eQ),
                      make_long_production(BangKind::PRec, eP, eQ, eR),
                      make_long_production(BangKind::BRecAleph0, eP, eQ, eR),
                      make_s4_instance(Cardinality::Aleph0, bp), make_s6_instance(eP)}) {
        CHECK(to_nnf(f) == f);
        CHECK(is_nnf(f));
    }
}

TEST_CASE("scheme and selector pairs outside the table are rejected") {
    CHECK_THROWS_AS(instantiate_scheme(Scheme::ShortProd, BangKind::BRecAleph0),
                    std::invalid_argument);
    CHECK_THROWS_AS(instantiate_scheme(Scheme::LongProd, BangKind::BRecUncountable),
                    std::invalid_argument);
    CHECK_THROWS_AS(instantiate_scheme(Scheme::S4Instance, BangKind::PRec), std::invalid_argument);
    CHECK_THROWS_AS(instantiate_scheme(Scheme::S6Instance, BangKind::PRec), std::invalid_argument);
    SchemeLetters L;
    L.p = Letter{"p", LetterKind::Elementary, 1};  // wrong arity
    CHECK_THROWS_AS(instantiate_scheme(Scheme::S4Instance, BangKind::BRecAleph0, L),
                    std::invalid_argument);
    L = SchemeLetters{};
    L.P = Letter{"P", LetterKind::Elementary, 0};  // wrong kind for the enumeration instance
    CHECK_THROWS_AS(instantiate_scheme(Scheme::S6Instance, BangKind::BRecUncountable, L),
                    std::invalid_argument);
}
