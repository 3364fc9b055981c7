#include <doctest.h>

#include <stdexcept>

#include "bei/ideal.hpp"
#include "bei/oracles.hpp"
#include "bei/structure.hpp"
#include "bei/verify.hpp"
#include "test_support.hpp"

using namespace bei;

// Expected values below were produced by tests/oracle/derive_expected.py.

namespace {

const Graph p3 = families::path(3);
const Graph p4 = families::path(4);
const Graph c4 = families::cycle(4);
const Graph k13 = families::star(3);
const Graph k23 = families::complete_bipartite(2, 3);
const Graph two_k2 = disjoint_union(families::complete(2), families::complete(2));

std::vector<VertexSet> separators(const std::vector<MinimalPrime>& primes) {
    std::vector<VertexSet> out;
    for (const auto& p : primes) out.push_back(p.separator);
    return out;
}

std::vector<int> dimensions(const std::vector<MinimalPrime>& primes) {
    std::vector<int> out;
    for (const auto& p : primes) out.push_back(p.dimension);
    return out;
}

}  // namespace

TEST_CASE("prime dimension") {
    CHECK(prime_dimension(families::cycle(5), {}) == 6);
    CHECK(prime_dimension(p3, VertexSet{1}) == 4);
    CHECK(prime_dimension(families::complete(4), VertexSet::all(4)) == 0);
}

TEST_CASE("alpha and top cut profiles") {
    CHECK(alpha(c4) == 1);
    CHECK(alpha(k13) == 2);
    for (int n = 1; n <= 7; ++n) CHECK(alpha(families::complete(n)) == 1);
    CHECK(alpha(two_k2) == 2);

    const auto top_p3 = top_cut_profiles(p3);
    REQUIRE(top_p3.size() == 2);
    CHECK(top_p3[0] == CutProfile{VertexSet{}, 1, 1});
    CHECK(top_p3[1] == CutProfile{VertexSet{1}, 2, 1});
    CHECK(top_cut_profiles(c4) == std::vector<CutProfile>{CutProfile{VertexSet{}, 1, 1}});
    const auto top_k23 = top_cut_profiles(k23);
    REQUIRE(top_k23.size() == 2);
    CHECK(top_k23[0].separator == VertexSet{});
    CHECK(top_k23[1].separator == VertexSet{0, 1});
}

TEST_CASE("minimal primes") {
    for (int n = 1; n <= 7; ++n) {
        const auto primes = minimal_primes(families::complete(n));
        REQUIRE(primes.size() == 1);
        CHECK(primes[0].separator.empty());
        CHECK(primes[0].dimension == n + 1);
    }

    const auto c4p = minimal_primes(c4);
    CHECK(separators(c4p) == std::vector<VertexSet>{VertexSet{}, VertexSet{0, 2}, VertexSet{1, 3}});
    CHECK(dimensions(c4p) == std::vector<int>{5, 4, 4});
    CHECK(c4p[1].blocks == std::vector<VertexSet>{VertexSet{1}, VertexSet{3}});

    const auto k23p = minimal_primes(k23);
    CHECK(separators(k23p) == std::vector<VertexSet>{VertexSet{}, VertexSet{0, 1}, VertexSet{2, 3, 4}});
    CHECK(dimensions(k23p) == std::vector<int>{6, 6, 4});

    CHECK(dimensions(minimal_primes(k13)) == std::vector<int>{5, 6});
    CHECK(dimensions(minimal_primes(families::cycle(5))) == std::vector<int>{6, 5, 5, 5, 5, 5});
    CHECK(separators(minimal_primes(two_k2)) == std::vector<VertexSet>{VertexSet{}});

    CHECK(is_minimal_prime_separator(c4, VertexSet{0, 2}));
    CHECK_FALSE(is_minimal_prime_separator(c4, VertexSet{0}));
    CHECK_FALSE(is_minimal_prime_separator(c4, VertexSet{0, 1}));
}

TEST_CASE("minimal primes against the containment oracle") {
    for (int n = 1; n <= 6; ++n) {
        for_each_labeled_graph(n, [](const Graph& g) {
            REQUIRE(separators(minimal_primes(g)) == oracle::minimal_prime_separators(g));
        });
    }
}

TEST_CASE("krull dimension and equidimensionality") {
    CHECK(krull_dimension(p4) == 5);
    CHECK(krull_dimension(k13) == 6);
    CHECK(krull_dimension(families::complete(6)) == 7);
    CHECK(krull_dimension(families::complete(1)) == 2);
    CHECK(krull_dimension(two_k2) == 6);
    CHECK(is_equidimensional(families::complete(5)));
    CHECK_FALSE(is_equidimensional(c4));
    CHECK(is_equidimensional(p3));
    CHECK_FALSE(is_equidimensional(families::cycle(5)));
}

TEST_CASE("hilbert-samuel multiplicity") {
    for (int n = 1; n <= 10; ++n) CHECK(hilbert_samuel(families::complete(n)) == n);
    CHECK(hilbert_samuel(p3) == 4);
    CHECK(hilbert_samuel(p4) == 8);
    CHECK(hilbert_samuel(k13) == 1);
    CHECK(hilbert_samuel(families::path(5)) == 16);
    CHECK(hilbert_samuel(c4) == 4);
    CHECK(hilbert_samuel(families::cycle(5)) == 5);
    CHECK(hilbert_samuel(k23) == 6);
    CHECK(hilbert_samuel(test::bowtie()) == 9);
    CHECK(hilbert_samuel(two_k2) == 4);
}

TEST_CASE("hilbert-kunz multiplicity") {
    const std::vector<std::pair<long long, long long>> complete{
        {1, 1},       {4, 3},         {13, 8},          {61, 30},          {361, 144},
        {2521, 840},  {20161, 5760},  {181441, 45360},  {1814401, 403200}, {19958401, 3991680}};
    for (int n = 1; n <= 10; ++n) {
        CHECK(hilbert_kunz(families::complete(n)) == make_rational(complete[n - 1].first, complete[n - 1].second));
    }
    CHECK(hilbert_kunz(families::complete(3)) == make_rational(13, 8));
    CHECK(hilbert_kunz(c4) == make_rational(61, 30));
    CHECK(hilbert_kunz(p4) == make_rational(47, 10));
    CHECK(hilbert_kunz(families::complete(1)) == 1);
    CHECK(hilbert_kunz(p3) == make_rational(21, 8));
    CHECK(hilbert_kunz(families::path(5)) == make_rational(1229, 144));
    CHECK(hilbert_kunz(families::cycle(5)) == make_rational(361, 144));
    CHECK(hilbert_kunz(k13) == 1);
    CHECK(hilbert_kunz(k23) == make_rational(505, 144));
    CHECK(hilbert_kunz(test::bowtie()) == make_rational(617, 144));
    CHECK(hilbert_kunz(two_k2) == make_rational(16, 9));

    CHECK(block_hilbert_samuel(7) == 7);
    CHECK(block_hilbert_kunz(2) == make_rational(4, 3));
}

TEST_CASE("multiplicities report") {
    const MultiplicityReport r = multiplicities(p4);
    CHECK(r.alpha == 1);
    CHECK(r.top_separators == std::vector<VertexSet>{VertexSet{}, VertexSet{1}, VertexSet{2}});
    CHECK(r.hilbert_samuel == 8);
    CHECK(r.hilbert_kunz == make_rational(47, 10));
}

TEST_CASE("joint dimension with the empty separator") {
    CHECK(joint_dim_with_empty(c4, VertexSet{0, 2}) == 3);
    CHECK(joint_dim_with_empty(k23, VertexSet{2, 3, 4}) == 3);
    CHECK(joint_dim_with_empty(p3, VertexSet{1}) == 3);
    CHECK_THROWS_AS(joint_dim_with_empty(c4, VertexSet{0}), DomainError);
    CHECK_THROWS_AS(joint_dim_with_empty(c4, VertexSet{}), DomainError);
    CHECK_THROWS_AS(joint_dim_with_empty(two_k2, VertexSet{0}), DomainError);
}

TEST_CASE("dimension bounds from toughness") {
    const auto b13 = dim_bounds_from_toughness(k13);
    CHECK(b13.lower == 6);
    CHECK(b13.upper == 6);
    CHECK(krull_dimension(k13) == 6);
    const auto b4 = dim_bounds_from_toughness(p4);
    CHECK(b4.lower == 5);
    CHECK(b4.upper == make_rational(11, 2));
    const auto b3 = dim_bounds_from_toughness(p3);
    CHECK(b3.lower == 4);
    CHECK(b3.upper == 4);
    const auto b5 = dim_bounds_from_toughness(families::path(5));
    CHECK(b5.lower == 6);
    CHECK(b5.upper == 7);
    const auto b23 = dim_bounds_from_toughness(k23);
    CHECK(b23.lower == make_rational(11, 2));
    CHECK(b23.upper == make_rational(19, 3));

    CHECK_THROWS_AS(dim_bounds_from_toughness(families::complete(4)), DomainError);
    CHECK_THROWS_AS(dim_bounds_from_toughness(c4), DomainError);
    CHECK_THROWS_AS(dim_bounds_from_toughness(two_k2), DomainError);
}

TEST_CASE("toughness bounds from dimension") {
    const auto t13 = toughness_bounds_from_dimension(k13);
    CHECK(t13.lower == make_rational(1, 3));
    REQUIRE(t13.upper);
    CHECK(*t13.upper == make_rational(5, 3));
    const auto t5 = toughness_bounds_from_dimension(families::path(5));
    CHECK(t5.lower == make_rational(1, 2));
    CHECK(*t5.upper == make_rational(5, 4));
    const auto c5 = toughness_bounds_from_dimension(families::cycle(5));
    CHECK(c5.lower == make_rational(1, 2));
    CHECK_FALSE(c5.upper);
    CHECK(*toughness_bounds_from_dimension(p3).upper == make_rational(3, 2));
    CHECK(*toughness_bounds_from_dimension(p4).upper == make_rational(4, 3));
}

TEST_CASE("one-tough via primes") {
    CHECK(one_tough_via_primes(c4));
    CHECK_FALSE(one_tough_via_primes(p4));
    CHECK(one_tough_via_primes(families::complete(4)));
    CHECK(one_tough_via_primes(families::cycle(5)));
}

TEST_CASE("depth and projective dimension bounds") {
    CHECK(depth_upper_bound(families::cycle(6)) == 6);
    CHECK(pd_lower_bound(families::cycle(6)) == 6);
    CHECK(depth_upper_bound(families::path(5)) == 6);
    CHECK(pd_lower_bound(families::path(5)) == 4);
    CHECK(depth_upper_bound(k23) == 5);
    CHECK(pd_lower_bound(k23) == 5);
    for (int n = 4; n <= 8; ++n) CHECK(pd_lower_bound(families::cycle(n)) == n);
    CHECK_THROWS_AS(depth_upper_bound(families::complete(4)), DomainError);
    CHECK_THROWS_AS(pd_lower_bound(two_k2), DomainError);
}

TEST_CASE("sufficient conditions") {
    CHECK(is_disjoint_union_of_paths(disjoint_union(p3, families::path(2))));
    CHECK_FALSE(is_disjoint_union_of_paths(c4));
    CHECK_FALSE(is_disjoint_union_of_paths(k13));
    CHECK(is_disjoint_union_of_paths(Graph(3)));
    CHECK(chordal_cm_sufficient(test::bowtie()));
    CHECK_FALSE(chordal_cm_sufficient(k13));
    CHECK_FALSE(chordal_cm_sufficient(families::cycle(5)));
}

TEST_CASE("additivity and component products, exhaustive up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        for_each_labeled_graph(n, [](const Graph& g) {
            const auto primes = minimal_primes(g);
            const auto m = multiplicities(g);
            const auto additive = oracle::multiplicities_from_primes(g, separators(primes));
            REQUIRE(m.hilbert_samuel == additive.hilbert_samuel);
            REQUIRE(m.hilbert_kunz == additive.hilbert_kunz);
            REQUIRE(m.hilbert_samuel >= 1);
            REQUIRE(m.hilbert_kunz >= 1);

            const auto parts = components(g);
            if (parts.size() < 2) return;
            BigInt e = 1;
            Rational ehk = 1;
            for (VertexSet p : parts) {
                const Graph h = induced_subgraph(g, p);
                e *= hilbert_samuel(h);
                ehk *= hilbert_kunz(h);
            }
            REQUIRE(m.hilbert_samuel == e);
            REQUIRE(m.hilbert_kunz == ehk);
        });
    }
}
