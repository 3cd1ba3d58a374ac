#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "provclose/variety.hpp"

using namespace provclose;

namespace {

PseudovarietyDescriptor V(const std::string& text) { return PseudovarietyDescriptor::parse(text); }

FiniteGroup make_s3() {
    return build_permutation_group(3, {parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)", 3)},
                                   "S3");
}
FiniteGroup make_a4() {
    return build_permutation_group(
        4, {parse_permutation("(1 2 3)", 4), parse_permutation("(1 2)(3 4)", 4)}, "A4");
}
FiniteGroup make_q8() {
    return build_permutation_group(8,
                                   {parse_permutation("(1 2 3 4)(5 6 7 8)", 8),
                                    parse_permutation("(1 5 3 7)(2 8 4 6)", 8)},
                                   "Q8");
}

}  // namespace

TEST_CASE("descriptor parsing and canonical text") {
    for (const std::string& t : {"G", "GP:2,3", "GP:!2", "O", "N", "S", "Su", "Ab:6", "Vp:3"})
        CHECK(V(t).text() == t);
    CHECK(V("GP:odd").text() == "GP:!2");
    CHECK_THROWS_AS(V("Vp:4"), std::invalid_argument);
    CHECK_THROWS_AS(V("GP:"), std::invalid_argument);
    CHECK_THROWS_AS(V("Ab:0"), std::invalid_argument);
    CHECK_THROWS_AS(V("X"), std::invalid_argument);
    CHECK_THROWS_AS(V("gp:2"), std::invalid_argument);
}

TEST_CASE("descriptor flags are fixed by kind") {
    CHECK(V("G").extension_closed());
    CHECK(V("GP:2").extension_closed());
    CHECK(V("GP:!2").extension_closed());
    CHECK(V("O").extension_closed());
    CHECK(V("S").extension_closed());
    CHECK_FALSE(V("N").extension_closed());
    CHECK_FALSE(V("Su").extension_closed());
    CHECK(V("Ab:1").extension_closed());
    CHECK_FALSE(V("Ab:2").extension_closed());
    CHECK_FALSE(V("Ab:6").extension_closed());
    CHECK(V("Vp:2").extension_closed());  // V_2 collapses to the 2-groups
    CHECK_FALSE(V("Vp:3").extension_closed());

    for (const std::string& t : {"G", "N", "S", "Su"}) {
        CHECK(V(t).contains_all_abelian());
        CHECK(V(t).contains_nilpotent());
    }
    for (const std::string& t : {"GP:2", "GP:!2", "O", "Ab:6", "Vp:3"}) {
        CHECK_FALSE(V(t).contains_all_abelian());
        CHECK_FALSE(V(t).contains_nilpotent());
    }
    // contains_nilpotent implies contains_all_abelian
    for (const std::string& t : {"G", "GP:2", "O", "N", "S", "Su", "Ab:6", "Vp:3", "Vp:2"})
        if (V(t).contains_nilpotent()) CHECK(V(t).contains_all_abelian());
}

TEST_CASE("cyclic membership") {
    CHECK(cyclic_membership(6, V("N")));
    CHECK_FALSE(cyclic_membership(4, V("Vp:3")));  // C_4 = C_{(3-1)^2}
    CHECK(cyclic_membership(12, V("GP:2,3")));
    CHECK(cyclic_membership(6, V("Vp:3")));  // 6 = 3 * 2 and 2 divides 3-1
    CHECK(cyclic_membership(1, V("Ab:1")));
    CHECK(cyclic_membership(3, V("Ab:6")));
    CHECK_FALSE(cyclic_membership(4, V("Ab:6")));
    CHECK(cyclic_membership(9, V("O")));
    CHECK_FALSE(cyclic_membership(6, V("O")));
    CHECK(cyclic_membership(25, V("Vp:5")));
    CHECK(cyclic_membership(20, V("Vp:5")));   // 5 * 4, 4 divides 4
    CHECK_FALSE(cyclic_membership(15, V("Vp:5")));

    SECTION("matches the concrete group test for k up to 24") {
        std::vector<std::string> supported = {"G",   "GP:2", "GP:3", "GP:2,3", "GP:!2", "O",
                                              "N",   "S",    "Ab:1", "Ab:6",   "Ab:12", "Vp:2",
                                              "Vp:3", "Vp:5", "Vp:7"};
        for (const std::string& t : supported) {
            PseudovarietyDescriptor v = V(t);
            for (long long k = 1; k <= 24; ++k)
                CHECK(cyclic_membership(k, v) == finite_group_membership(build_cyclic(k), v));
        }
    }

    SECTION("closed under coprime cyclic extensions when extension-closed") {
        for (const std::string& t : {"G", "GP:2", "GP:2,3", "O", "S"}) {
            PseudovarietyDescriptor v = V(t);
            for (long long k = 1; k <= 24; ++k)
                for (long long l = 1; l <= 24; ++l) {
                    if (std::gcd(k, l) != 1) continue;
                    if (cyclic_membership(k, v) && cyclic_membership(l, v))
                        CHECK(cyclic_membership(k * l, v));
                }
        }
    }

    SECTION("G_P membership is exactly P-smoothness") {
        for (const std::string& t : {"GP:2", "GP:2,3", "GP:!2"}) {
            PseudovarietyDescriptor v = V(t);
            for (long long k = 1; k <= 200; ++k)
                CHECK(cyclic_membership(k, v) == (nu(k, v.prime_set()) == k));
        }
    }
}

TEST_CASE("finite group membership") {
    FiniteGroup s3 = make_s3();
    FiniteGroup a4 = make_a4();
    FiniteGroup q8 = make_q8();

    CHECK_FALSE(finite_group_membership(s3, V("N")));  // smallest non-nilpotent group
    CHECK(finite_group_membership(s3, V("Vp:3")));
    CHECK(finite_group_membership(a4, V("GP:2,3")));
    CHECK(finite_group_membership(q8, V("S")));

    SECTION("derived series of Q8 stops at the unique involution") {
        // independent route: close the commutator set by hand
        std::set<int> comms;
        for (int x = 0; x < q8.order; ++x)
            for (int y = 0; y < q8.order; ++y)
                comms.insert(q8.mul(q8.mul(q8.mul(x, y), q8.inverse[x]), q8.inverse[y]));
        std::set<int> closure = comms;
        closure.insert(0);
        bool grew = true;
        while (grew) {
            grew = false;
            for (int x : std::set<int>(closure))
                for (int y : std::set<int>(closure))
                    if (closure.insert(q8.mul(x, y)).second) grew = true;
        }
        CHECK(closure.size() == 2);
        int z = *closure.rbegin();
        CHECK(q8.mul(z, z) == 0);
        for (int x = 0; x < q8.order; ++x) CHECK(q8.mul(z, x) == q8.mul(x, z));
    }

    SECTION("more memberships") {
        CHECK(finite_group_membership(s3, V("S")));
        CHECK(finite_group_membership(s3, V("GP:2,3")));
        CHECK_FALSE(finite_group_membership(s3, V("GP:2")));
        CHECK_FALSE(finite_group_membership(s3, V("O")));
        CHECK_FALSE(finite_group_membership(s3, V("Ab:6")));
        CHECK(finite_group_membership(build_cyclic(6), V("Ab:6")));
        CHECK_FALSE(finite_group_membership(build_cyclic(4), V("Ab:6")));
        CHECK(finite_group_membership(q8, V("N")));
        CHECK(finite_group_membership(q8, V("Vp:2")));
        CHECK_FALSE(finite_group_membership(q8, V("Vp:3")));
        CHECK_FALSE(finite_group_membership(a4, V("N")));
        CHECK_FALSE(finite_group_membership(a4, V("Vp:3")));  // four Sylow 3-subgroups
        CHECK_FALSE(finite_group_membership(a4, V("Vp:2")));  // quotient C_3, but 3 does not divide 1
        CHECK(finite_group_membership(build_unitriangular(3), V("Vp:3")));
    }

    SECTION("nonabelian groups with a normal Sylow 5-subgroup") {
        FiniteGroup d5 = build_permutation_group(
            5, {parse_permutation("(1 2 3 4 5)", 5), parse_permutation("(2 5)(3 4)", 5)}, "D5");
        REQUIRE(d5.order == 10);
        CHECK(finite_group_membership(d5, V("Vp:5")));
        CHECK(finite_group_membership(d5, V("S")));
        CHECK_FALSE(finite_group_membership(d5, V("N")));
        CHECK_FALSE(finite_group_membership(d5, V("Vp:3")));

        FiniteGroup f20 = build_permutation_group(
            5, {parse_permutation("(1 2 3 4 5)", 5), parse_permutation("(2 3 5 4)", 5)}, "F20");
        REQUIRE(f20.order == 20);
        CHECK(finite_group_membership(f20, V("Vp:5")));
        CHECK_FALSE(finite_group_membership(f20, V("N")));
        CHECK_FALSE(finite_group_membership(f20, V("Vp:2")));
    }

    SECTION("unsupported checks are rejected") {
        CHECK_THROWS_AS(finite_group_membership(s3, V("Su")), std::domain_error);
        PseudovarietyDescriptor c = PseudovarietyDescriptor::custom(
            "2-powers", [](long long k) { return (k & (k - 1)) == 0; }, true);
        CHECK_THROWS_AS(finite_group_membership(s3, c), std::domain_error);
    }
}

TEST_CASE("custom cyclic predicates") {
    PseudovarietyDescriptor c = PseudovarietyDescriptor::custom(
        "2-powers", [](long long k) { return (k & (k - 1)) == 0; }, true);
    PseudovarietyDescriptor g2 = V("GP:2");
    for (long long k = 1; k <= 64; ++k)
        CHECK(cyclic_membership(k, c) == cyclic_membership(k, g2));
    CHECK(max_divisor_in_variety(24, c) == 8);

    PseudovarietyDescriptor unflagged =
        PseudovarietyDescriptor::custom("anything", [](long long) { return true; }, false);
    CHECK_THROWS_AS(max_divisor_in_variety(24, unflagged), std::domain_error);
}
