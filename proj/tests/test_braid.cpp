#include "doctest.h"

#include <cmath>
#include <numbers>

#include "glink/braid.hpp"
#include "helpers.hpp"

using namespace glink;

namespace {

ColorTuple random_tuple(std::mt19937_64& rng, int n) {
    std::vector<GStarColor> c;
    for (int i = 0; i < n; ++i) c.push_back(testing::random_admissible_color(rng));
    return ColorTuple(std::move(c), std::vector<int>(n, 0));
}

double tuple_dist(const ColorTuple& a, const ColorTuple& b) {
    double d = 0;
    for (size_t i = 0; i < a.colors.size(); ++i) {
        d = std::max(d, std::abs(a.colors[i].kappa - b.colors[i].kappa));
        d = std::max(d, std::abs(a.colors[i].epsilon - b.colors[i].epsilon));
    }
    return d;
}

const BraidWord kTrefoil(2, {1, 1, 1});
const BraidWord kFigureEight(3, {-2, 1, -2, 1});

}  // namespace

TEST_CASE("braid word validation") {
    CHECK_THROWS_AS(BraidWord(2, {2}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(2, {0}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(0, {}), std::invalid_argument);
    CHECK_NOTHROW(BraidWord(1, {}));
}

TEST_CASE("permutation and components") {
    CHECK(permutation(kTrefoil) == std::vector<int>{1, 0});
    CHECK(permutation(BraidWord(3, {})) == std::vector<int>{0, 1, 2});

    const auto ccT = components(kTrefoil);
    CHECK(ccT.count == 1);
    CHECK(ccT.members[0] == std::vector<int>{0, 1});

    CHECK(components(BraidWord(3, {})).count == 3);

    // figure eight closes to a knot: a single cycle
    const auto cc8 = components(kFigureEight);
    CHECK(cc8.count == 1);
    CHECK(cc8.members[0].size() == 3);
}

TEST_CASE("writhe per component") {
    CHECK(writhe_by_component(kTrefoil) == std::vector<int>{3});
    CHECK(writhe_by_component(BraidWord(3, {})) == std::vector<int>{0, 0, 0});
    CHECK(writhe_by_component(BraidWord(2, {1})) == std::vector<int>{1});
    CHECK(writhe_by_component(kFigureEight) == std::vector<int>{0});
    // crossing between two distinct components contributes to neither
    CHECK(writhe_by_component(BraidWord(2, {1, -1})) == std::vector<int>{0, 0});
}

TEST_CASE("act: permutes kappas, fixes epsilon=0, is a homomorphism") {
    std::mt19937_64 rng(31);
    const ColorTuple y0 = random_tuple(rng, 3);
    ColorTuple z = y0;
    for (auto& c : z.colors) c = GStarColor(c.kappa, 0.0);

    const ColorTuple out = act(kFigureEight, z);
    const auto perm = permutation(kFigureEight);
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(out.colors[perm[i]].kappa - z.colors[i].kappa) < 1e-14);
        CHECK(std::abs(out.colors[perm[i]].epsilon) < 1e-14);
    }

    // act(b1.b2, y) = act(b2, act(b1, y))
    const BraidWord b1(3, {1, -2});
    const BraidWord b2(3, {2, 2, -1});
    BraidWord cat(3, {1, -2, 2, 2, -1});
    CHECK(tuple_dist(act(cat, y0), act(b2, act(b1, y0))) < 1e-12);
}

TEST_CASE("act satisfies the braid relations on colors") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 25; ++i) {
        const ColorTuple y = random_tuple(rng, 4);
        CHECK(tuple_dist(act(BraidWord(4, {1, 2, 1}), y), act(BraidWord(4, {2, 1, 2}), y)) <
              1e-11);
        CHECK(tuple_dist(act(BraidWord(4, {1, 3}), y), act(BraidWord(4, {3, 1}), y)) < 1e-11);
        CHECK(tuple_dist(act(BraidWord(4, {2, -2}), y), y) < 1e-11);
    }
}

TEST_CASE("stabilization tuple is a fixed point of the one-letter braid") {
    std::mt19937_64 rng(33);
    const GStarColor y = testing::random_admissible_color(rng);
    const ColorTuple t({y, smap(y)}, {0, 0});
    CHECK(is_fixed_point(BraidWord(2, {1}), t));
    CHECK(is_fixed_point(BraidWord(2, {-1}), t));
    // generic perturbation is not fixed
    const ColorTuple bad({y, GStarColor(y.kappa, y.epsilon + 0.5)}, {0, 0});
    CHECK_FALSE(is_fixed_point(BraidWord(2, {1}), bad));
}

TEST_CASE("epsilon transfer matrix: single letter block and composition") {
    const Complex k = 2.0;
    const Eigen::MatrixXcd m = epsilon_transfer_matrix(BraidWord(2, {1}), {k, k});
    CHECK(std::abs(m(0, 0) - (k - 1.0 / k) / k) < 1e-15);
    CHECK(std::abs(m(0, 1) - 1.0 / k) < 1e-15);
    CHECK(std::abs(m(1, 0) - 1.0 / k) < 1e-15);
    CHECK(std::abs(m(1, 1)) < 1e-15);

    CHECK(testing::matrix_max_diff(epsilon_transfer_matrix(BraidWord(3, {}), {k, k, k}),
                                   Eigen::MatrixXcd::Identity(3, 3)) == 0.0);

    // cube of the one-letter block (equal kappas)
    const Eigen::MatrixXcd m3 = epsilon_transfer_matrix(kTrefoil, {k, k});
    CHECK(testing::matrix_max_diff(m3, m * m * m) < 1e-14);
}

TEST_CASE("transfer matrix reproduces act on random epsilon vectors") {
    std::mt19937_64 rng(34);
    for (const BraidWord& b : {kFigureEight, BraidWord(3, {1, 1, 2, -1, 2})}) {
        const auto cc = components(b);
        std::vector<Complex> kap_comp;
        for (int c = 0; c < cc.count; ++c)
            kap_comp.push_back(testing::random_admissible_kappa(rng));
        const ColorTuple zero = tuple_from_components(b, kap_comp, std::vector<int>(cc.count, 0));
        std::vector<Complex> kap_pos;
        for (const auto& c : zero.colors) kap_pos.push_back(c.kappa);
        const Eigen::MatrixXcd m = epsilon_transfer_matrix(b, kap_pos);
        const auto perm = permutation(b);

        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Complex> eps(b.strands);
            for (auto& e : eps) e = testing::random_complex(rng);
            ColorTuple y = zero;
            for (int i = 0; i < b.strands; ++i)
                y.colors[i] = GStarColor(y.colors[i].kappa, eps[i]);
            const ColorTuple out = act(b, y);
            Eigen::VectorXcd ev(b.strands);
            for (int i = 0; i < b.strands; ++i) ev(i) = eps[i];
            const Eigen::VectorXcd pred = m * ev;
            for (int i = 0; i < b.strands; ++i)
                CHECK(std::abs(out.colors[i].epsilon - pred(i)) < 1e-11);
            for (int j = 0; j < b.strands; ++j)
                CHECK(std::abs(out.colors[perm[j]].kappa - kap_pos[j]) < 1e-13);
        }
    }
}

TEST_CASE("solve_colorings: trefoil carries the conjugation line at generic kappa") {
    // The one-letter block always fixes (1, 1/kappa) -- the coloring obtained
    // by conjugating the diagonal representation -- so the nullity is 1 away
    // from the Alexander roots and jumps to 2 at them.
    const auto sol = solve_colorings(kTrefoil, {Complex(2.0, 0.0)}, {0});
    CHECK(sol.nullity == 1);
    REQUIRE(sol.basis.size() == 1);
    CHECK(is_fixed_point(kTrefoil, sol.basis[0], 1e-9));
    const Complex ratio = sol.basis[0].colors[1].epsilon / sol.basis[0].colors[0].epsilon;
    CHECK(std::abs(ratio - 0.5) < 1e-12);

    const Complex root = std::polar(1.0, std::numbers::pi / 6.0);  // kappa^2+kappa^-2 = 1
    const auto sol2 = solve_colorings(kTrefoil, {root}, {0});
    CHECK(sol2.nullity == 2);
    for (const auto& t : sol2.basis) CHECK(is_fixed_point(kTrefoil, t, 1e-9));

    CHECK_THROWS_AS(solve_colorings(kTrefoil, {Complex(1.0, 0.0)}, {0}), std::invalid_argument);
}

TEST_CASE("solve_colorings: figure eight rank jump at its Alexander root") {
    const auto generic = solve_colorings(kFigureEight, {Complex(1.3, 0.4)}, {0});
    CHECK(generic.nullity == 1);

    const Complex root = std::sqrt(Complex((3.0 + std::sqrt(5.0)) / 2.0, 0.0));
    const auto sol = solve_colorings(kFigureEight, {root}, {0});
    CHECK(sol.nullity == 2);
    for (const auto& t : sol.basis) {
        CHECK(is_fixed_point(kFigureEight, t, 1e-8));
        double norm = 0;
        for (const auto& c : t.colors) norm += std::norm(c.epsilon);
        CHECK(norm == doctest::Approx(1.0));
    }
    // all-zero epsilons are always a coloring
    CHECK(is_fixed_point(kFigureEight, tuple_from_components(kFigureEight, {root}, {0})));
}

TEST_CASE("markov_rotate") {
    const Complex root = std::polar(1.0, std::numbers::pi / 6.0);
    const auto sol = solve_colorings(kTrefoil, {root}, {0});
    const ColorTuple y = sol.basis.back();

    const auto r0 = markov_rotate(kTrefoil, y, 0);
    CHECK(tuple_dist(r0.coloring, y) == 0.0);

    const auto full = markov_rotate(kTrefoil, y, 3);
    CHECK(full.word.letters == kTrefoil.letters);
    CHECK(tuple_dist(full.coloring, y) < 1e-9);

    const auto r1 = markov_rotate(kTrefoil, y, 1);
    CHECK(r1.word.letters == kTrefoil.letters);
    CHECK(is_fixed_point(r1.word, r1.coloring, 1e-8));
    CHECK(tuple_dist(r1.coloring, act(BraidWord(2, {1}), y)) < 1e-12);
    CHECK(writhe_by_component(r1.word) == writhe_by_component(kTrefoil));

    ColorTuple notfixed = y;
    notfixed.colors[0] = GStarColor(y.colors[0].kappa, y.colors[0].epsilon + 1.0);
    CHECK_THROWS_AS(markov_rotate(kTrefoil, notfixed, 1), std::invalid_argument);
}

TEST_CASE("stabilize and destabilize") {
    std::mt19937_64 rng(35);
    const GStarColor y0 = testing::random_admissible_color(rng);
    const ColorTuple single({y0}, {0});
    const BraidWord empty1(1, {});

    const auto up = stabilize(empty1, single, +1);
    CHECK(up.word.strands == 2);
    CHECK(up.word.letters == std::vector<int>{1});
    CHECK(std::abs(up.coloring.colors[1].epsilon - y0.epsilon / y0.kappa) < 1e-14);
    CHECK(is_fixed_point(up.word, up.coloring));

    const auto down = destabilize(up.word, up.coloring);
    CHECK(down.word.strands == 1);
    CHECK(tuple_dist(down.coloring, single) == 0.0);

    // negative stabilization: same appended color, inverse letter
    const auto dn = stabilize(empty1, single, -1);
    CHECK(dn.word.letters == std::vector<int>{-1});
    CHECK(std::abs(dn.coloring.colors[1].epsilon - y0.epsilon / y0.kappa) < 1e-14);
    CHECK(is_fixed_point(dn.word, dn.coloring));

    // on the trefoil with a solved coloring
    const Complex root = std::polar(1.0, std::numbers::pi / 6.0);
    const ColorTuple t = solve_colorings(kTrefoil, {root}, {0}).basis.back();
    for (int sign : {+1, -1}) {
        const auto st = stabilize(kTrefoil, t, sign);
        CHECK(is_fixed_point(st.word, st.coloring, 1e-8));
        const auto w = writhe_by_component(st.word);
        CHECK(w == std::vector<int>{3 + sign});
        const auto back = destabilize(st.word, st.coloring);
        CHECK(back.word.letters == kTrefoil.letters);
        CHECK(tuple_dist(back.coloring, t) < 1e-12);
    }

    CHECK_THROWS_AS(destabilize(kTrefoil, t), std::invalid_argument);
}
