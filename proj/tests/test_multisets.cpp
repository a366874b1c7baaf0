#include <doctest.h>

#include <random>
#include <set>

#include "xsep/multisets.hpp"

using namespace xsep;

namespace {

BalancedMultiset from_strings(std::initializer_list<const char*> bits) {
    std::vector<std::uint32_t> elems;
    int n = 0;
    for (const char* b : bits) {
        const Index i = Index::from_string(b);
        n = i.n();
        elems.push_back(i.rank());
    }
    return BalancedMultiset(n, std::move(elems));
}

}  // namespace

TEST_SUITE("multisets") {

TEST_CASE("balance and irreducibility basics") {
    CHECK(from_strings({"010", "101"}).is_balanced());
    CHECK(from_strings({"010", "101"}).is_irreducible());
    CHECK(from_strings({"000", "011", "101", "110"}).is_irreducible());
    const auto reducible = from_strings({"000", "111", "001", "110"});
    CHECK(reducible.is_balanced());
    CHECK_FALSE(reducible.is_irreducible());
    CHECK_FALSE(from_strings({"000", "001"}).is_balanced());
    // repeated elements are allowed in multisets
    const auto order6 = from_strings({"0000", "0000", "0111", "1110", "1101", "1011"});
    CHECK(order6.is_balanced());
    CHECK(order6.is_irreducible());
}

TEST_CASE("direct enumeration counts") {
    const auto c2 = enumerate_irreducible(2, 2);
    CHECK(c2.count(2) == 2);
    const auto c3 = enumerate_irreducible(3, 4);
    CHECK(c3.count(2) == 4);
    CHECK(c3.count(4) == 2);
    CHECK(c3.family(4)[0] == from_strings({"000", "011", "101", "110"}));
    CHECK(c3.family(4)[1] == from_strings({"001", "010", "100", "111"}));
    const auto c4 = enumerate_irreducible(4, 8);
    CHECK(c4.count(2) == 8);
    CHECK(c4.count(4) == 24);
    CHECK(c4.count(6) == 16);
    CHECK(c4.count(8) == 0);
    // the order-6 member spelled out in the four-qubit discussion
    const auto& f6 = c4.family(6);
    const auto probe = from_strings({"0000", "0000", "0111", "1110", "1101", "1011"});
    CHECK(std::find(f6.begin(), f6.end(), probe) != f6.end());
}

TEST_CASE("order four for two qubits is empty") {
    // every order-4 multiset over two qubits splits into conjugate pairs
    const auto cat = enumerate_irreducible(2, 2);
    CHECK(cat.count(2) == 2);
    std::size_t count4 = 0;
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = a; b < 4; ++b)
            for (std::uint32_t c = b; c < 4; ++c)
                for (std::uint32_t d = c; d < 4; ++d) {
                    const BalancedMultiset t(2, {a, b, c, d});
                    if (t.is_irreducible()) ++count4;
                }
    CHECK(count4 == 0);
}

TEST_CASE("recursive order-4 family matches the recursion counts") {
    CHECK(t4_count(3) == 2);
    CHECK(t4_count(4) == 24);
    CHECK(t4_count(5) == 200);
    CHECK(t4_count(6) == 1440);
    CHECK(recursive_t4(4).size() == 24);
    CHECK(recursive_t4(5).size() == 200);
    CHECK(recursive_t4(6).size() == 1440);
}

TEST_CASE("recursive construction equals direct enumeration as sets") {
    for (int n = 4; n <= 5; ++n) {
        const auto rec = recursive_t4(n);
        const auto direct = enumerate_irreducible(n, 4).family(4);
        REQUIRE(rec.size() == direct.size());
        CHECK(rec == direct);  // both canonically sorted
        for (const auto& t : rec) CHECK(t.is_irreducible());
    }
}

TEST_CASE("conjugate closure of irreducibility") {
    const auto cat = enumerate_irreducible(4, 6);
    for (const auto& [order, fam] : cat.by_order) {
        for (const auto& t : fam) {
            CHECK(t.conjugate().is_irreducible());
        }
    }
}

TEST_CASE("tilde delta") {
    SUBCASE("all ones gives one") {
        for (int n = 1; n <= 4; ++n) CHECK(tilde_delta(DiagVec::ones(n)) == doctest::Approx(1.0));
    }
    SUBCASE("three-qubit six-term minimum") {
        std::mt19937_64 rng(19);
        std::uniform_real_distribution<double> uni(0.2, 4.0);
        for (int trial = 0; trial < 50; ++trial) {
            DiagVec a(3);
            for (std::uint32_t r = 0; r < 8; ++r) a[r] = uni(rng);
            const double expected = std::min(
                {std::sqrt(a[0] * a[7]), std::sqrt(a[1] * a[6]), std::sqrt(a[2] * a[5]),
                 std::sqrt(a[3] * a[4]), std::pow(a[0] * a[3] * a[5] * a[6], 0.25),
                 std::pow(a[7] * a[4] * a[2] * a[1], 0.25)});
            CHECK(tilde_delta(a) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
    SUBCASE("order-four term can win") {
        DiagVec a(3);
        a[0b000] = 16.0;
        a[0b011] = 1.0;
        a[0b101] = 1.0;
        a[0b110] = 1.0;
        a[0b001] = 16.0;
        a[0b010] = 16.0;
        a[0b100] = 16.0;
        a[0b111] = 16.0;
        CHECK(tilde_delta(a) == doctest::Approx(2.0));  // (16*1*1*1)^{1/4}
    }
    SUBCASE("zero entries propagate to zero means") {
        DiagVec a = DiagVec::ones(3);
        a[0] = 0.0;
        CHECK(tilde_delta(a) == doctest::Approx(0.0));
    }
}

TEST_CASE("log-subadditivity of geometric means under balanced partitions") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> uni(0.1, 5.0);
    const auto cat = enumerate_irreducible(3, 4);
    for (int trial = 0; trial < 50; ++trial) {
        DiagVec a(3);
        for (std::uint32_t r = 0; r < 8; ++r) a[r] = uni(rng);
        const auto& t1 = cat.family(2)[rng() % 4];
        const auto& t2 = cat.family(4)[rng() % 2];
        std::vector<std::uint32_t> merged = t1.elems();
        merged.insert(merged.end(), t2.elems().begin(), t2.elems().end());
        const BalancedMultiset t(3, merged);
        REQUIRE(t.is_balanced());
        const auto gm = [&](const BalancedMultiset& m) {
            double v = 1.0;
            for (std::uint32_t e : m.elems()) v *= a[e];
            return std::pow(v, 1.0 / m.order());
        };
        CHECK(std::min(gm(t1), gm(t2)) <= gm(t) + 1e-12);
    }
}

TEST_CASE("catalog determinism") {
    const auto c1 = enumerate_irreducible(4, 6);
    const auto c2 = enumerate_irreducible(4, 6);
    for (const auto& [order, fam] : c1.by_order) {
        const auto& other = c2.family(order);
        REQUIRE(fam.size() == other.size());
        CHECK(fam == other);
    }
}

TEST_CASE("cost guards") {
    CHECK_THROWS_AS(enumerate_irreducible(7, 4), CostGuardError);
    CHECK_THROWS_AS(enumerate_irreducible(6, 34), ValidationError);  // order above 2^{n-1}
    CHECK_THROWS_AS(enumerate_irreducible(6, 30), CostGuardError);
    try {
        enumerate_irreducible(7, 4);
    } catch (const CostGuardError& e) {
        CHECK(e.estimated_size > 0.0);
    }
}

TEST_CASE("mixed qubit counts are rejected") {
    CHECK_THROWS_AS(BalancedMultiset(3, {0, 8}), ValidationError);
}

}  // TEST_SUITE
