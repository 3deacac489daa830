#include <doctest.h>

#include <algorithm>
#include <set>

#include "spets/group.hpp"
#include "spets/multipartition.hpp"
#include "spets/partition.hpp"

using namespace spets;

TEST_CASE("partition parsing, printing, and normal form") {
    Partition p = Partition::parse("3,2,2,1");
    CHECK(p.parts() == std::vector<long long>{1, 2, 2, 3});
    CHECK(p.sum() == 8);
    CHECK(p.length() == 4);
    CHECK(p.str() == "3,2,2,1");

    // Parse accepts any order; storage is weakly increasing.
    CHECK(Partition::parse("1,2,2,3") == p);
    CHECK(Partition({2, 1}).parts() == std::vector<long long>{1, 2});

    Partition empty = Partition::parse("-");
    CHECK(empty.empty());
    CHECK(empty.sum() == 0);
    CHECK(empty.str() == "-");
    CHECK(Partition::parse("") == empty);

    // Round trip parse(str()) over everything small.
    for (long long n = 0; n <= 8; ++n)
        for (const Partition& q : partitions_of(n)) CHECK(Partition::parse(q.str()) == q);
}

TEST_CASE("partition padding and conjugation") {
    Partition p = Partition::parse("3,1");
    CHECK(p.padded(4) == std::vector<long long>{0, 0, 1, 3});
    CHECK(p.conjugate() == Partition::parse("2,1,1"));
    CHECK(p.conjugate().conjugate() == p);
    CHECK(Partition::parse("-").conjugate().empty());
    for (long long n = 0; n <= 7; ++n)
        for (const Partition& q : partitions_of(n)) {
            CHECK(q.conjugate().sum() == n);
            CHECK(q.conjugate().conjugate() == q);
        }
}

TEST_CASE("standard tableaux counts (hook lengths)") {
    CHECK(Partition::parse("-").standard_tableaux() == 1);
    CHECK(Partition::parse("5").standard_tableaux() == 1);
    CHECK(Partition::parse("1,1,1,1").standard_tableaux() == 1);
    CHECK(Partition::parse("2,1").standard_tableaux() == 2);
    CHECK(Partition::parse("2,2").standard_tableaux() == 2);
    CHECK(Partition::parse("3,2").standard_tableaux() == 5);
    CHECK(Partition::parse("3,1,1").standard_tableaux() == 6);
    CHECK(Partition::parse("2,2,1").standard_tableaux() == 5);
    // Sum over partitions of n of f^2 = n!.
    long long sum = 0;
    for (const Partition& q : partitions_of(5)) {
        long long f = q.standard_tableaux();
        sum += f * f;
    }
    CHECK(sum == 120);
}

TEST_CASE("right-aligned partition sum") {
    CHECK(Partition::parse("2,1") + Partition::parse("1") == Partition::parse("3,1"));
    CHECK(Partition::parse("3,2,1") + Partition::parse("1,1,1") == Partition::parse("4,3,2"));
    CHECK(Partition::parse("-") + Partition::parse("2") == Partition::parse("2"));
    CHECK(Partition::parse("-") + Partition::parse("-") == Partition::parse("-"));
}

TEST_CASE("partition enumeration counts") {
    const long long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (long long n = 0; n <= 8; ++n) {
        auto list = partitions_of(n);
        CHECK((long long)list.size() == expected[n]);
        std::set<Partition> uniq(list.begin(), list.end());
        CHECK(uniq.size() == list.size());
        for (const Partition& q : list) CHECK(q.sum() == n);
    }
}

TEST_CASE("multipartition parsing and printing") {
    Multipartition mp = Multipartition::parse("2|-|1,1");
    CHECK(mp.count() == 3);
    CHECK(mp.total() == 4);
    CHECK(mp.component(0) == Partition::parse("2"));
    CHECK(mp.component(1).empty());
    CHECK(mp.component(2) == Partition::parse("1,1"));
    CHECK(mp.str() == "2|-|1,1");

    // Round trip over all multipartitions with q <= 4, n <= 5.
    for (long long q = 1; q <= 4; ++q)
        for (long long n = 0; n <= 5; ++n)
            for (const Multipartition& m : enumerate_multipartitions(q, n))
                CHECK(Multipartition::parse(m.str()) == m);
}

TEST_CASE("multipartition rotation and orbits") {
    Multipartition mp = Multipartition::parse("2|-|1,1");
    CHECK(mp.rotated(1) == Multipartition::parse("-|1,1|2"));
    CHECK(mp.rotated(2) == Multipartition::parse("1,1|2|-"));
    CHECK(mp.rotated(3) == mp);
    CHECK(mp.conjugated() == Multipartition::parse("1,1|-|2"));

    // Stabilizer: the stuttering triple is fixed by every rotation.
    Multipartition stut = Multipartition::parse("1|1|1");
    CHECK(stut.stabilizer_order(1, 3) == 3);
    CHECK(mp.stabilizer_order(1, 3) == 1);

    MultipartitionOrbit orb = orbit_of(mp, 1, 3);
    CHECK(orb.stabilizer == 1);
    CHECK(orb.rep == orbit_of(mp.rotated(1), 1, 3).rep);
    CHECK(orb.rep == orbit_of(mp.rotated(2), 1, 3).rep);
}

TEST_CASE("multipartition enumeration counts") {
    CHECK(enumerate_multipartitions(1, 4).size() == 5);
    CHECK(enumerate_multipartitions(2, 2).size() == 5);
    CHECK(enumerate_multipartitions(3, 3).size() == 22);
    CHECK(enumerate_multipartitions(2, 3).size() == 10);
    CHECK(enumerate_multipartitions(4, 1).size() == 4);
    CHECK(enumerate_multipartitions(3, 0).size() == 1);

    // Orbit counts: G(3,3,3) has 8 rotation orbits (one stuttering).
    auto orbits = enumerate_orbits(GroupSpec::make(1, 3, 3));
    CHECK(orbits.size() == 8);
    long long stuttering = 0;
    for (const auto& o : orbits)
        if (o.stabilizer > 1) ++stuttering;
    CHECK(stuttering == 1);

    // Orbit sizes partition the full list.
    long long covered = 0;
    for (const auto& o : orbits) covered += 3 / o.stabilizer;
    CHECK(covered == 22);

    // e = 1: orbits are just the multipartitions.
    CHECK(enumerate_orbits(GroupSpec::make(3, 1, 3)).size() == 22);
}

TEST_CASE("wreath irrep dimensions") {
    CHECK(irrep_dimension(Multipartition::parse("3|-|-")) == 1);
    CHECK(irrep_dimension(Multipartition::parse("-|3|-")) == 1);
    CHECK(irrep_dimension(Multipartition::parse("1|1|1")) == 6);
    CHECK(irrep_dimension(Multipartition::parse("2|1|-")) == 3);
    CHECK(irrep_dimension(Multipartition::parse("2,1|-|-")) == 2);
    // Sum of squares = |G(q,1,n)|.
    for (long long q = 1; q <= 3; ++q)
        for (long long n = 0; n <= 4; ++n) {
            long long sum = 0;
            for (const Multipartition& m : enumerate_multipartitions(q, n)) {
                long long d = irrep_dimension(m);
                sum += d * d;
            }
            CHECK(sum == GroupSpec::make(q, 1, n).order());
        }
}

TEST_CASE("group specifications") {
    GroupSpec g = GroupSpec::make(3, 1, 3);
    CHECK(g.q() == 3);
    CHECK(g.order() == 162);
    CHECK(g.degrees() == std::vector<long long>{3, 6, 9});
    CHECK(g.reflection_count() == 15);
    CHECK(g.str() == "G(3,1,3)");

    GroupSpec h = GroupSpec::from_qen(3, 3, 3);
    CHECK(h == GroupSpec::make(1, 3, 3));
    CHECK(h.order() == 54);
    std::vector<long long> hd = h.degrees();
    std::sort(hd.begin(), hd.end());
    CHECK(hd == std::vector<long long>{3, 3, 6});
    CHECK(h.reflection_count() == 9);
    CHECK(h.str() == "G(3,3,3)");

    GroupSpec s3 = GroupSpec::make(1, 1, 3);
    CHECK(s3.order() == 6);
    // rank-n convention: the symmetric group keeps its degree-1 invariant
    CHECK(s3.degrees() == std::vector<long long>{1, 2, 3});

    GroupSpec g422 = GroupSpec::from_qen(4, 2, 2);
    CHECK(g422.d == 2);
    CHECK(g422.e == 2);
    CHECK(g422.order() == 16);

    CHECK_THROWS_AS(GroupSpec::from_qen(4, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::make(0, 1, 2), std::invalid_argument);

    // Product of degrees = group order, for a spread of groups.
    for (long long d = 1; d <= 3; ++d)
        for (long long e = 1; e <= 3; ++e)
            for (long long n = 1; n <= 4; ++n) {
                GroupSpec w = GroupSpec::make(d, e, n);
                long long prod = 1;
                for (long long deg : w.degrees()) prod *= deg;
                CHECK(prod == w.order());
            }
}
