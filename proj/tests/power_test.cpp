#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hyperalg;
using test_util::fixture;

namespace {

Hypermatrix<Rational> load_rational(const std::string& name) {
    return std::get<Hypermatrix<Rational>>(parse_hmx(test_util::fixture(name)));
}

}  // namespace

TEST_CASE("ternary parenthesization counts") {
    // degree: count, the arity-3 Fuss-Catalan numbers
    const std::pair<std::size_t, long> expected[] = {{1, 1},  {3, 1},   {5, 3},   {7, 12},
                                                     {9, 55}, {11, 273}, {13, 1428}};
    for (const auto& [deg, count] : expected) {
        CHECK(fuss_catalan_count(deg) == count);
        CHECK(fuss_catalan_closed_form(deg) == count);
        CHECK(enumerate_trees(deg).size() == static_cast<std::size_t>(count));
    }
    CHECK_THROWS_AS(fuss_catalan_count(4), DimensionError);
    CHECK_THROWS_AS(enumerate_trees(2), DimensionError);
}

TEST_CASE("tree enumeration is canonical and duplicate-free") {
    for (std::size_t deg : {3, 5, 7, 9}) {
        const auto trees = enumerate_trees(deg);
        for (std::size_t i = 0; i < trees.size(); ++i) {
            CHECK(trees[i]->degree() == deg);
            if (i > 0) CHECK(trees[i - 1]->repr() < trees[i]->repr());  // sorted, distinct
        }
    }
    CHECK(enumerate_trees(3)[0]->repr() == "(A A A)");
    // the three degree-5 shapes: cube nested in each slot
    const auto five = enumerate_trees(5);
    CHECK(five[0]->repr() == "((A A A) A A)");
    CHECK(five[1]->repr() == "(A (A A A) A)");
    CHECK(five[2]->repr() == "(A A (A A A))");
}

TEST_CASE("first-formulation powers of delta are all delta") {
    const auto d = delta<Rational>(3, 2);
    const auto powers = enumerate_powers_first(d, 7);
    CHECK(powers.size() == 1 + 1 + 3 + 12);
    for (const auto& [tree, value] : powers) CHECK(value == d);
    CHECK(span_dimension([&] {
              std::vector<Hypermatrix<Rational>> terms;
              for (const auto& [t, v] : powers) terms.push_back(v);
              return terms;
          }()) == 1);
}

TEST_CASE("evaluate_tree matches explicit product nesting") {
    std::mt19937_64 rng(11);
    const auto a = test_util::random_cubic<Rational>(rng, 3, 3);
    const auto cube = bm_product(std::vector{a, a, a});
    const auto five = enumerate_trees(5);
    CHECK(evaluate_tree(five[0], a) == bm_product(std::vector{cube, a, a}));
    CHECK(evaluate_tree(five[1], a) == bm_product(std::vector{a, cube, a}));
    CHECK(evaluate_tree(five[2], a) == bm_product(std::vector{a, a, cube}));
}

TEST_CASE("second-formulation sequence: base cases and recurrence") {
    std::mt19937_64 rng(12);
    const auto a = test_util::random_cubic<Rational>(rng, 3, 3);
    const auto seq = power_sequence_second(a, 5);
    CHECK(seq[0] == delta<Rational>(3, 3));
    CHECK(seq[1] == a);
    CHECK(seq[2] == general_bm_product(std::vector{a, a, a}, seq[0]));
    // delta background collapses, so term 2 is the plain cube
    CHECK(seq[2] == bm_product(std::vector{a, a, a}));
    CHECK(seq[3] == oracles::general_bm3(a, a, a, a, false));
    CHECK(seq[4] == oracles::general_bm3(a, a, a, seq[2], false));
}

TEST_CASE("degree bookkeeping of the second formulation") {
    // deg A^[0] = 0, deg A^[1] = 1, deg A^[k+2] = deg A^[k] + 3: the entry
    // growth of the all-ones cube makes the degree observable, since every
    // term of an all-ones base evaluates to a constant hypermatrix n^{(deg-1)/2
    // * ...}; we check the recurrence through the exact entry values instead.
    const std::size_t n = 2;
    const Hypermatrix<Rational> ones({n, n, n}, Rational(1));
    const auto seq = power_sequence_second(ones, 8);
    // entries: c_{k+2} = n^3 * c_k * c_1^3 with c_0 via delta pattern; verify
    // against an independent scalar recurrence on the uniform entry value.
    CHECK(seq[2].entries()[0] == Rational(n));         // plain cube of ones
    CHECK(seq[3].entries()[0] == Rational(n * n * n)); // background = ones
    for (std::size_t k = 4; k < 8; ++k) {
        Rational total(0);
        for (const auto& e : seq[k - 2].entries()) total += e;
        CHECK(seq[k].entries()[0] == total);  // uniform operand entries are 1
    }
}

TEST_CASE("span dimension of fixture power sets") {
    // First formulation, witness sides 1..3 exact: spans 1, 8, 27.
    const std::size_t max_degree[] = {7, 7, 9};
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto a = load_rational("span_first_" + std::to_string(n) + ".hmx");
        REQUIRE(a.side() == n);
        std::vector<Hypermatrix<Rational>> terms;
        for (const auto& [t, v] : enumerate_powers_first(a, max_degree[n - 1]))
            terms.push_back(v);
        CHECK(span_dimension(terms) == n * n * n);
    }
    // Second formulation, witness sides 1..3 exact: spans 1, 8, 27 from
    // sequence terms 0..n^3-1.
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto a = load_rational("span_second_" + std::to_string(n) + ".hmx");
        REQUIRE(a.side() == n);
        const auto seq = power_sequence_second(a, n * n * n);
        CHECK(span_dimension(seq) == n * n * n);
    }
}

TEST_CASE("rank routines agree with each other and with hand values") {
    // rows: e1, e2, e1+e2, e1-e2 -> rank 2
    std::vector<std::vector<Rational>> rows{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}};
    CHECK(rank_rows(rows) == 2);
    std::vector<std::vector<Fp>> frows;
    for (const auto& r : rows) {
        std::vector<Fp> fr;
        for (const auto& x : r) fr.push_back(Fp::from_rational(x, 1000003));
        frows.push_back(fr);
    }
    CHECK(rank_rows(frows) == 2);
    CHECK(bareiss_det({{Int(2), Int(1)}, {Int(7), Int(4)}}) == 1);
    CHECK(bareiss_det({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 0);
}

TEST_CASE("echelon tracker reports the exact first dependence") {
    EchelonTracker<Rational> t;
    CHECK_FALSE(t.append({1, 0, 0}).has_value());
    CHECK_FALSE(t.append({1, 1, 0}).has_value());
    const auto dep = t.append({5, 3, 0});  // = 2*r0 + 3*r1
    REQUIRE(dep.has_value());
    CHECK(dep->index == 2);
    CHECK(dep->coefficients == std::vector<Rational>{2, 3});
    // after a dependence the tracker keeps accepting rows
    CHECK_FALSE(t.append({0, 0, 7}).has_value());
    CHECK(t.rank() == 3);
}

TEST_CASE("characteristic polynomial via Faddeev-LeVerrier vs cofactor oracle") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int iter = 0; iter < 15; ++iter) {
        const std::size_t n = 1 + iter % 5;
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
        for (auto& row : m)
            for (auto& x : row) x = Rational(d(rng));
        CHECK(char_poly(m) == oracles::charpoly_cofactor(m));
    }
    // 4-cycle: x^4 - 4x^2
    std::vector<std::vector<Rational>> c4(4, std::vector<Rational>(4, Rational(0)));
    for (std::size_t i = 0; i < 4; ++i) c4[i][(i + 1) % 4] = c4[(i + 1) % 4][i] = 1;
    CHECK(char_poly(c4) == std::vector<Rational>{0, 0, -4, 0, 1});
}

TEST_CASE("matrix coefficient extraction recovers the characteristic polynomial") {
    // M = [[1,1],[0,1]]: M^2 = 2M - I, so I, M independent and
    // M^2 = (-1)*I + 2*M.
    Hypermatrix<Rational> m({2, 2});
    m(0, 0) = 1; m(0, 1) = 1; m(1, 0) = 0; m(1, 1) = 1;
    const auto cv = matrix_ch_coefficients(m);
    CHECK(cv.r == 2);
    CHECK(cv.alphas == std::vector<Rational>{-1, 2});

    // the swap matrix is an involution: M^2 = I before degree 2 terms enter
    Hypermatrix<Rational> s({2, 2});
    s(0, 1) = 1; s(1, 0) = 1;
    const auto sv = matrix_ch_coefficients(s);
    CHECK(sv.r == 2);
    CHECK(sv.alphas == std::vector<Rational>{1, 0});
}

TEST_CASE("hypermatrix coefficient extraction: trivial and witness cases") {
    // n = 1: entries are scalars a; A^[2] = a^3 = a^2 * A^[1], dependence at
    // index 1 only when a = 1 makes A^[1] = A^[0].
    Hypermatrix<Rational> one({1, 1, 1}, Rational(1));
    const auto cv1 = ch_coefficients(one, Formulation::Second);
    CHECK(cv1.r == 1);
    CHECK(cv1.alphas == std::vector<Rational>{1});

    // the ambient space is 1-dimensional, so A = 2 depends on delta at once
    Hypermatrix<Rational> two({1, 1, 1}, Rational(2));
    const auto cv2 = ch_coefficients(two, Formulation::Second);
    CHECK(cv2.r == 1);
    CHECK(cv2.alphas == std::vector<Rational>{2});

    // witness side 2: the first 8 second-formulation terms are independent,
    // so the first dependence lands exactly at index 8.
    const auto a = load_rational("span_second_2.hmx");
    const auto cv = ch_coefficients(a, Formulation::Second);
    CHECK(cv.r == 8);
    CHECK(cv.alphas.size() == 8);
    // verification property: substituting the alphas annihilates term r
    const auto seq = power_sequence_second(a, cv.r + 1);
    for (std::size_t f = 0; f < seq[0].size(); ++f) {
        Rational s(0);
        for (std::size_t k = 0; k < cv.r; ++k) s += cv.alphas[k] * seq[k].entries()[f];
        CHECK(s == seq[cv.r].entries()[f]);
    }
}

TEST_CASE("coefficient extraction agrees across backends") {
    const auto a = load_rational("span_second_2.hmx");
    const auto exact = ch_coefficients(a, Formulation::Second);
    Hypermatrix<Fp> am({2, 2, 2}, Fp(0, kDefaultPrime));
    for (std::size_t f = 0; f < a.size(); ++f)
        am.entries()[f] = Fp::from_rational(a.entries()[f], kDefaultPrime);
    const auto modp = ch_coefficients(am, Formulation::Second);
    CHECK(modp.r == exact.r);
    for (std::size_t k = 0; k < exact.r; ++k)
        CHECK(Fp::from_rational(exact.alphas[k], kDefaultPrime) == modp.alphas[k]);
}

TEST_CASE("first-formulation coefficient extraction terminates with a verified relation") {
    std::mt19937_64 rng(14);
    const auto a = test_util::random_cubic<Rational>(rng, 3, 2);
    const auto cv = ch_coefficients(a, Formulation::First);
    CHECK(cv.r <= 2 * 2 * 2 + 1);
    // regenerate the canonical term list and verify the dependence
    std::vector<Hypermatrix<Rational>> terms;
    std::map<std::string, Hypermatrix<Rational>> memo;
    for (std::size_t d = 1; terms.size() <= cv.r; d += 2)
        for (const auto& tree : enumerate_trees(d)) terms.push_back(evaluate_tree(tree, a, &memo));
    for (std::size_t f = 0; f < terms[0].size(); ++f) {
        Rational s(0);
        for (std::size_t k = 0; k < cv.r; ++k) s += cv.alphas[k] * terms[k].entries()[f];
        CHECK(s == terms[cv.r].entries()[f]);
    }
}
