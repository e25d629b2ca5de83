#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "quintic/local_enum.hpp"

using namespace quintic;

TEST_CASE("totally ramified quintics over Q5 form 25 classes of mass 1/625", "[local]") {
    const auto& classes = wild_quintics_q5();
    REQUIRE(classes.size() == 25);

    std::map<long, int> by_disc;
    Rat mass(0);
    int galois_count = 0;
    std::set<std::string> keys;
    for (const auto& c : classes) {
        REQUIRE(c.e == 5);
        REQUIRE(c.f == 1);
        REQUIRE(c.wild);
        REQUIRE(is_eisenstein_at(c.rep, 5));
        REQUIRE(star_condition(c.rep) == c.star);
        REQUIRE(c.star == c.galois);
        REQUIRE(c.aut == (c.galois ? 5 : 1));
        by_disc[c.disc_exp]++;
        mass += Rat(1, pow_int(5, static_cast<unsigned long>(c.disc_exp)) * c.aut);
        if (c.galois) {
            ++galois_count;
            REQUIRE(c.disc_exp == 8);
        }
        keys.insert(c.key());
    }
    REQUIRE(keys.size() == 25);
    REQUIRE(galois_count == 5);
    REQUIRE(by_disc == std::map<long, int>{{5, 4}, {6, 4}, {7, 4}, {8, 8}, {9, 5}});
    REQUIRE(mass == Rat(1, 625));
}

TEST_CASE("tame quintic classes at small primes", "[local]") {
    // gcd(5, 7-1) = 1: a single totally ramified class with trivial automorphisms
    int tr7 = 0;
    for (const auto& c : tame_field_classes(7)) {
        if (c.e == 5) {
            ++tr7;
            REQUIRE(c.f == 1);
            REQUIRE(c.aut == 1);
            REQUIRE_FALSE(c.galois);
            REQUIRE(c.disc_exp == 4);
        }
        if (c.e == 1) {
            REQUIRE(c.disc_exp == 0);
            REQUIRE(c.aut == c.f);
            REQUIRE(c.galois);
        }
    }
    REQUIRE(tr7 == 1);

    // gcd(5, 11-1) = 5: five totally ramified classes, each galois
    int tr11 = 0;
    for (const auto& c : tame_field_classes(11)) {
        if (c.e == 5) {
            ++tr11;
            REQUIRE(c.aut == 5);
            REQUIRE(c.galois);
            REQUIRE(c.disc_exp == 4);
        }
    }
    REQUIRE(tr11 == 5);

    // exactly one unramified class per residue degree
    std::map<long, int> unram;
    for (const auto& c : tame_field_classes(7))
        if (c.e == 1) unram[c.f]++;
    REQUIRE(unram == std::map<long, int>{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}});
}

TEST_CASE("inventories record wild completeness", "[local]") {
    REQUIRE(local_field_inventory(5).wild_complete);
    REQUIRE(local_field_inventory(7).wild_complete);
    REQUIRE_FALSE(local_field_inventory(2).wild_complete);
    REQUIRE_FALSE(local_field_inventory(3).wild_complete);
}

TEST_CASE("etale classes decompose the full mass", "[local]") {
    for (Int p : {Int(5), Int(7), Int(11), Int(13)}) {
        auto classes = etale_quintic_classes(p);
        Rat total(0);
        for (const auto& ec : classes) {
            long deg = 0;
            for (const auto& part : ec.splitting) deg += part.e * part.f;
            REQUIRE(deg == 5);
            REQUIRE(ec.total_aut >= 1);
            REQUIRE(ec.is_field() == (ec.components.size() == 1 && ec.components[0].second == 1));
            total += Rat(1, pow_int(p, static_cast<unsigned long>(ec.disc_exp)) * ec.total_aut);
        }
        REQUIRE(total == mass_all_closed(p));
        REQUIRE(total == mass_subset(LocalConditionSet::all(p)));
    }
    REQUIRE_THROWS_AS(etale_quintic_classes(2), UnsupportedPrimeError);
    REQUIRE_THROWS_AS(etale_quintic_classes(3), UnsupportedPrimeError);
}

TEST_CASE("closed-form masses at small primes", "[local]") {
    REQUIRE(mass_all_closed(5) == Rat(811, 625));
    REQUIRE(mass_all_closed(7) == Rat(2857, 2401));
    REQUIRE(mass_all_closed(11) == Rat(16237, 14641));
    REQUIRE(mass_all_closed(13) == Rat(31123, 28561));
    REQUIRE(mass_all_closed(2) == Rat(37, 16));
}

TEST_CASE("masses of distinguished subsets", "[local]") {
    REQUIRE(mass_subset(LocalConditionSet::totally_ramified(5)) == Rat(1, 625));
    REQUIRE(mass_subset(LocalConditionSet::totally_ramified_galois()) == Rat(1, 390625));
    REQUIRE(mass_subset(LocalConditionSet::totally_ramified_star()) == Rat(1, 390625));
    REQUIRE(mass_subset(LocalConditionSet::inert(5)) == Rat(1, 5));
    REQUIRE(mass_subset(LocalConditionSet::totally_ramified(11)) == Rat(1, 14641));
    REQUIRE(mass_subset(LocalConditionSet::not_totally_ramified(11)) == Rat(16236, 14641));
    // tame-safe conditions work even at 2
    REQUIRE(mass_subset(LocalConditionSet::inert(2)) == Rat(1, 5));
    REQUIRE(mass_subset(LocalConditionSet::totally_ramified(2)) == Rat(1, 16));
}

TEST_CASE("density factors against the full mass", "[local]") {
    REQUIRE(local_density_factor(LocalConditionSet::inert(2)) == Rat(16, 185));
    REQUIRE(local_density_factor(LocalConditionSet::inert(5)) == Rat(125, 811));
    REQUIRE(local_density_factor(LocalConditionSet::totally_ramified(7)) == Rat(1, 2857));
    REQUIRE(local_density_factor(LocalConditionSet::totally_ramified_star()) == Rat(1, 506875));
}

TEST_CASE("unsupported and mismatched mass queries", "[local]") {
    REQUIRE_THROWS_AS(mass_subset(LocalConditionSet::all(2)), UnsupportedPrimeError);
    REQUIRE_THROWS_AS(mass_subset(LocalConditionSet::not_totally_ramified(3)), UnsupportedPrimeError);
    REQUIRE_THROWS_AS(mass_subset(7, LocalConditionSet::inert(11)), InvalidInputError);
    REQUIRE_THROWS_AS(mass_subset(7, LocalConditionSet::totally_ramified_galois()),
                      InvalidInputError);
    REQUIRE(mass_subset(11, LocalConditionSet::inert(11)) == Rat(1, 5));
}
