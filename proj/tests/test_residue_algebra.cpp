#include "arrpot/errors.hpp"
#include "arrpot/potentials.hpp"
#include "arrpot/random_family.hpp"
#include "arrpot/residue_algebra.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace arrpot;
using namespace arrpot::testing;

namespace {

// Dense univariate polynomials over Q, lowest degree first. Used as an
// independent model of the k = 1 algebra: Q[t] modulo the critical-point
// polynomial, with the pairing given by the sum of residues.
using Poly = std::vector<Rat>;

void trim(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    Poly q(a.size() - b.size() + 1, 0);
    for (std::size_t i = a.size(); i-- >= b.size();) {
        const Rat c = a[i] / b.back();
        q[i - (b.size() - 1)] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
        if (i == b.size() - 1) break;
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly mod(const Poly& a, const Poly& m) { return divmod(a, m).second; }

Poly inverse_mod(const Poly& a, const Poly& m) {
    Poly r0 = m, r1 = mod(a, m), s0, s1{1};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    REQUIRE(r1.size() == 1);
    for (auto& c : s1) c /= r1[0];
    return mod(s1, m);
}

struct LineModel {
    Poly n_poly;  // sum_j a_j b_j prod_{i != j} f_i
    Poly w_poly;  // prod_i f_i
    std::vector<Poly> p;

    LineModel(const ArrangementFamily& arr, const BasePoint& z) {
        const std::size_t n = arr.n();
        std::vector<Poly> f;
        for (std::size_t j = 0; j < n; ++j) f.push_back({z[j], arr.coefficients()(0, j)});
        w_poly = {1};
        for (const auto& fj : f) w_poly = mul(w_poly, fj);
        for (std::size_t j = 0; j < n; ++j) {
            Poly term{arr.weight(j) * arr.coefficients()(0, j)};
            for (std::size_t i = 0; i < n; ++i)
                if (i != j) term = mul(term, f[i]);
            if (n_poly.size() < term.size()) n_poly.resize(term.size(), 0);
            for (std::size_t d = 0; d < term.size(); ++d) n_poly[d] += term[d];
        }
        trim(n_poly);
        for (std::size_t j = 0; j < n; ++j) {
            Poly inv = inverse_mod(f[j], n_poly);
            for (auto& c : inv) c *= arr.weight(j);
            p.push_back(inv);
        }
    }

    Poly product(std::initializer_list<std::size_t> factors) const {
        Poly out{1};
        for (auto j : factors) out = mod(mul(out, p[j]), n_poly);
        return out;
    }

    // Sum over the critical points of h / Hess, as minus the residue at infinity.
    Rat residue(const Poly& h) const {
        const Poly r = mod(mul(h, w_poly), n_poly);
        const std::size_t top = n_poly.size() - 2;
        return (top < r.size() ? r[top] : Rat(0)) / n_poly.back();
    }
};

AlgebraElement p_of(const ResidueAlgebra& alg, std::initializer_list<int> one_based) {
    return alg.monomial_p(idx(one_based));
}

}  // namespace

TEST_CASE("polynomial model helpers") {
    const Poly a{1, 2, 1};  // (t + 1)^2
    const Poly b{1, 1};
    CHECK(divmod(a, b).first == Poly{1, 1});
    CHECK(divmod(a, b).second.empty());
    const Poly m{3, 8, 3};
    CHECK(mod(mul(inverse_mod(Poly{0, 1}, m), Poly{0, 1}), m) == Poly{1});
}

TEST_CASE("three collinear points") {
    const auto arr = collinear(3);
    const ResidueAlgebra alg(arr, {0, 1, 3});
    REQUIRE(alg.dimension() == 2);
    const auto p1 = p_of(alg, {1}), p2 = p_of(alg, {2});
    AlgebraElement diff = p1;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= p2[i];
    CHECK(alg.multiply(p1, p2) == diff);
    CHECK(alg.multiply(p1, p1) == AlgebraElement{make_rat(-5, 3), make_rat(2, 3)});
    CHECK(alg.residue_pairing(p1, p2) == make_rat(1, 3));
    CHECK(alg.residue_pairing(p1, p1) == make_rat(-2, 3));
    CHECK(alg.residue_pairing(alg.multiply_by_p(1, p1), p1) == -1);

    const LineModel model(arr, {0, 1, 3});
    CHECK(model.residue(model.product({0, 1})) == make_rat(1, 3));
    CHECK(model.residue(model.product({0, 0})) == make_rat(-2, 3));
}

TEST_CASE("k = 1 algebra agrees with the polynomial residue model (seeded)") {
    for (std::uint64_t seed = 700; seed < 740; ++seed) {
        const std::size_t n = 2 + seed % 5;
        const auto inst = random_family(seed, 1, n);
        const auto& arr = inst.arrangement;
        const ResidueAlgebra alg(arr, inst.base_point);
        const LineModel model(arr, inst.base_point);
        CHECK(alg.dimension() == n - 1);
        std::vector<AlgebraElement> p;
        for (Index j = 0; j < n; ++j) p.push_back(alg.monomial_p({j}));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(alg.residue_pairing(p[i], p[j]) == model.residue(model.product({i, j})));
                for (std::size_t l = 0; l < n; ++l)
                    CHECK(alg.residue_pairing(alg.multiply(p[i], p[j]), p[l]) ==
                          model.residue(model.product({i, j, l})));
            }
    }
}

TEST_CASE("FIG1 pairing and triple values") {
    const auto arr = fig1();
    const ResidueAlgebra alg(arr, {0, 1, 0, 2});
    CHECK(alg.dimension() == 2);
    CHECK(alg.residue_pairing(p_of(alg, {1, 3}), p_of(alg, {2, 4})) == make_rat(1, 8));
    CHECK(pairing_via_P(arr, potential_first(arr), idx({1, 3}), idx({2, 4})).value == make_rat(1, 8));

    const BasePoint z{0, 1, 0, 2};
    const Rat direct = alg.residue_pairing(alg.multiply_by_p(3, p_of(alg, {1, 3})), p_of(alg, {3, 4}));
    CHECK(direct == make_rat(-1, 2));
    CHECK(triple_via_Q(arr, potential_second(arr), z, 3, idx({1, 3}), idx({3, 4})) == make_rat(-1, 2));
}

TEST_CASE("potentials reproduce the algebra at random weights and base points") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 5; ++trial) {
        const auto arr = fig1(random_weights(rng, 4));
        const BasePoint z = random_point(rng, arr);
        const ResidueAlgebra alg(arr, z);
        DerivativeCache pc(potential_first(arr));
        DerivativeCache qc(potential_second(arr));
        for (const auto& i : alg.independent())
            for (const auto& l : alg.independent()) {
                const PairingViaP via = pairing_via_P(arr, pc, i, l);
                REQUIRE(via.z_independent);
                CHECK(via.value == alg.residue_pairing(alg.monomial_p(i), alg.monomial_p(l)));
                for (Index i0 = 0; i0 < arr.n(); ++i0)
                    CHECK(triple_via_Q(arr, qc, z, i0, i, l) ==
                          alg.residue_pairing(alg.multiply_by_p(i0, alg.monomial_p(i)), alg.monomial_p(l)));
            }
    }
}

TEST_CASE("structure of the algebra (seeded families)") {
    for (std::uint64_t seed = 800; seed < 830; ++seed) {
        const auto [k, n] = random_shape(seed);
        const auto inst = random_family(seed, k, n);
        const auto& arr = inst.arrangement;
        const ResidueAlgebra alg(arr, inst.base_point);
        const std::size_t mu = alg.dimension();
        CHECK(mu == sing_dimension(arr));
        CHECK(rank(alg.gram()) == mu);
        CHECK(alg.gram() == alg.gram().transpose());

        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j)
                CHECK(alg.multiplication_operator(i) * alg.multiplication_operator(j) ==
                      alg.multiplication_operator(j) * alg.multiplication_operator(i));

        // sum_j d_{j,S} K_j = 0 for every independent (k-1)-subset S
        for (const auto& s : independent_subsets(arr, k - 1)) {
            RatMatrix sum(mu, mu);
            for (Index j = 0; j < n; ++j) {
                IndexTuple js{j};
                js.insert(js.end(), s.begin(), s.end());
                const Rat d = minor(arr, js);
                const RatMatrix& kj = alg.multiplication_operator(j);
                for (std::size_t r = 0; r < mu; ++r)
                    for (std::size_t c = 0; c < mu; ++c) sum(r, c) += d * kj(r, c);
            }
            CHECK(sum.is_zero());
        }

        // multiplication operators are self-adjoint for the pairing
        for (Index j = 0; j < n; ++j) {
            const RatMatrix gk = alg.gram() * alg.multiplication_operator(j);
            CHECK(gk == gk.transpose());
        }

        for (std::size_t b = 0; b < mu; ++b)
            for (Index j = 0; j < n; ++j)
                if (alg.has_alternate_rewrite(j, alg.basis_labels()[b])) {
                    AlgebraElement unit(mu, 0);
                    unit[b] = 1;
                    CHECK(alg.multiply_by_p(j, unit, Rewrite::Alternate) == alg.multiply_by_p(j, unit));
                }
    }
}

TEST_CASE("marked elements") {
    const auto arr = fig1();
    const ResidueAlgebra alg(arr, {0, 1, 0, 2});
    CHECK(alg.marked_vector(idx({1, 2})).is_zero());
    CHECK(alg.marked_w(idx({1, 2})) == AlgebraElement(2, 0));
    CHECK_THROWS_AS(alg.monomial_p(idx({1, 2})), std::invalid_argument);
    AlgebraElement neg = alg.marked_w(idx({1, 3}));
    for (auto& x : neg) x *= -1;
    CHECK(alg.marked_w(idx({3, 1})) == neg);
    // sum_j w_{j,S} = 0 for each S
    for (Index s = 0; s < arr.n(); ++s) {
        FlagVector rel;
        for (Index j = 0; j < arr.n(); ++j) rel += alg.marked_vector({j, s});
        CHECK(rel.is_zero());
    }
}

TEST_CASE("construction preconditions") {
    CHECK_THROWS_AS(ResidueAlgebra(fig1(), {0, 0, 1, 1}), DiscriminantError);
    CHECK_THROWS_AS(ResidueAlgebra(fig1(), {0, 1, 0}), InputError);
}
