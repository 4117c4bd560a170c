#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mubgeo/incidence.hpp"

using namespace mubgeo;

TEST_CASE("kind names round-trip") {
    CHECK(kind_name(GeometryKind::APG) == "APG");
    CHECK(parse_kind("apg") == GeometryKind::APG);
    CHECK(parse_kind("DAPG") == GeometryKind::DAPG);
    CHECK(parse_kind("Fpp") == GeometryKind::FPP);
    CHECK_THROWS_AS(parse_kind("projective"), std::invalid_argument);
}

TEST_CASE("parameter table for all three geometries") {
    for (long long d : {3LL, 5LL, 7LL}) {
        Incidence apg = build_apg(d);
        CHECK(apg.num_points == d * d);
        CHECK(apg.num_lines == d * (d + 1));
        CHECK(apg.k_line() == d);
        CHECK(apg.r_point() == d + 1);

        Incidence dapg = build_dapg(d);
        CHECK(dapg.num_points == d * (d + 1));
        CHECK(dapg.num_lines == d * d);
        CHECK(dapg.k_line() == d + 1);
        CHECK(dapg.r_point() == d);

        for (const Incidence& base : {apg, dapg}) {
            Incidence fpp = complete_to_fpp(base);
            CHECK(fpp.num_points == d * d + d + 1);
            CHECK(fpp.num_lines == d * d + d + 1);
            CHECK(fpp.k_line() == d + 1);
            CHECK(fpp.r_point() == d + 1);
        }
    }
    CHECK_THROWS_AS(build_apg(4), std::invalid_argument);
    CHECK_THROWS_AS(build_dapg(9), std::invalid_argument);
}

TEST_CASE("axioms pass exhaustively") {
    for (long long d : {3LL, 5LL, 7LL}) {
        CHECK(check_axioms(build_apg(d)).all_pass());
        CHECK(check_axioms(build_dapg(d)).all_pass());
        CHECK(check_axioms(complete_to_fpp(build_apg(d))).all_pass());
        CHECK(check_axioms(complete_to_fpp(build_dapg(d))).all_pass());
    }
}

TEST_CASE("worked d=3 line holds its four points") {
    Incidence g = build_dapg(3);
    long long l = dapg_line_index(3, 1, 1);
    std::set<long long> expect = {
        dapg_point_index(3, 1, BasisLabel::cb(3)),
        dapg_point_index(3, 1, BasisLabel::residue(0, 3)),
        dapg_point_index(3, 0, BasisLabel::residue(1, 3)),
        dapg_point_index(3, 2, BasisLabel::residue(2, 3)),
    };
    std::vector<long long> got = g.line_points(l);
    CHECK(std::set<long long>(got.begin(), got.end()) == expect);
}

TEST_CASE("lines of equal m-ddot meet exactly in the CB column") {
    for (long long d : {3LL, 5LL}) {
        Incidence g = build_dapg(d);
        for (long long md = 0; md < d; ++md)
            for (long long m0 = 0; m0 < d; ++m0)
                for (long long m0p = m0 + 1; m0p < d; ++m0p) {
                    std::vector<long long> a = g.line_points(dapg_line_index(d, md, m0));
                    std::vector<long long> b = g.line_points(dapg_line_index(d, md, m0p));
                    std::vector<long long> common;
                    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                          std::back_inserter(common));
                    REQUIRE(common.size() == 1);
                    CHECK(common[0] == dapg_point_index(d, md, BasisLabel::cb(d)));
                }
    }
}

TEST_CASE("a single flipped membership bit is caught with a witness") {
    Incidence g = build_dapg(3);
    long long p = dapg_point_index(3, 0, BasisLabel::cb(3));
    long long l = dapg_line_index(3, 0, 0);
    REQUIRE(g.incident(p, l));
    g.set_incident(p, l, false);

    AxiomReport rep = check_axioms(g);
    CHECK_FALSE(rep.all_pass());
    bool lambda1_failed = false;
    for (const AxiomCheck& c : rep.checks) {
        if (!c.pass && c.name.find("dual lambda1") != std::string::npos) {
            lambda1_failed = true;
            CHECK_FALSE(c.witness.empty());
        }
    }
    CHECK(lambda1_failed);
}

TEST_CASE("mutated structures lose uniform counts") {
    Incidence g = build_dapg(3);
    g.set_incident(0, 0, !g.incident(0, 0));
    CHECK_THROWS_AS(g.k_line(), std::domain_error);
}

TEST_CASE("pencils partition into d+1 classes of d") {
    for (long long d : {3LL, 5LL}) {
        for (const Incidence& g : {build_apg(d), build_dapg(d)}) {
            std::vector<std::vector<long long>> cls = pencils(g);
            REQUIRE(cls.size() == static_cast<size_t>(d + 1));
            std::set<long long> all;
            for (const auto& c : cls) {
                CHECK(c.size() == static_cast<size_t>(d));
                all.insert(c.begin(), c.end());
            }
            long long total = g.kind == GeometryKind::APG ? g.num_lines : g.num_points;
            CHECK(static_cast<long long>(all.size()) == total);
        }
        CHECK_THROWS_AS(pencils(complete_to_fpp(build_apg(d))), std::invalid_argument);
    }
}

TEST_CASE("pencil classes are mutually unconnected, cross classes connected") {
    long long d = 5;
    Incidence g = build_dapg(d);
    std::vector<std::vector<long long>> pls;
    for (long long p = 0; p < g.num_points; ++p) pls.push_back(g.point_lines(p));
    auto connected = [&](long long p, long long q) {
        for (long long l : pls[static_cast<size_t>(p)])
            if (g.incident(q, l)) return true;
        return false;
    };
    std::vector<std::vector<long long>> cls = pencils(g);
    for (size_t ci = 0; ci < cls.size(); ++ci) {
        for (size_t i = 0; i < cls[ci].size(); ++i)
            for (size_t j = i + 1; j < cls[ci].size(); ++j)
                CHECK_FALSE(connected(cls[ci][i], cls[ci][j]));
        for (size_t cj = ci + 1; cj < cls.size(); ++cj)
            CHECK(connected(cls[ci][0], cls[cj][0]));
    }
}

TEST_CASE("completion adds pencil objects in order and removal undoes it") {
    long long d = 3;
    Incidence apg = build_apg(d);
    Incidence fpp = complete_to_fpp(apg);

    // Original indices are preserved; the line at infinity is last.
    Incidence back = remove_line_and_points(fpp, fpp.num_lines - 1);
    CHECK(back.kind == GeometryKind::APG);
    REQUIRE(back.num_points == apg.num_points);
    REQUIRE(back.num_lines == apg.num_lines);
    CHECK(back.membership == apg.membership);
}

TEST_CASE("deleting any projective line leaves an affine plane") {
    long long d = 3;
    Incidence fpp = complete_to_fpp(build_dapg(d));
    for (long long l = 0; l < fpp.num_lines; l += 5) {
        Incidence cut = remove_line_and_points(fpp, l);
        CHECK(cut.num_points == d * d);
        CHECK(cut.num_lines == d * (d + 1));
        CHECK(check_axioms(cut).all_pass());

        // Seen dually the same structure is the dual affine plane.
        Incidence dual = dual_incidence(cut);
        CHECK(dual.kind == GeometryKind::DAPG);
        CHECK(dual.num_points == d * (d + 1));
        CHECK(dual.num_lines == d * d);
        CHECK(check_axioms(dual).all_pass());
    }
    CHECK_THROWS_AS(remove_line_and_points(build_apg(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(remove_line_and_points(fpp, fpp.num_lines), std::invalid_argument);
}

TEST_CASE("completion rejects broken input") {
    Incidence g = build_dapg(3);
    g.set_incident(0, 0, !g.incident(0, 0));
    CHECK_THROWS_AS(complete_to_fpp(g), std::invalid_argument);
    CHECK_THROWS_AS(complete_to_fpp(complete_to_fpp(build_apg(3))), std::invalid_argument);
}

TEST_CASE("duality is an involution on membership") {
    Incidence g = build_dapg(3);
    Incidence dd = dual_incidence(dual_incidence(g));
    CHECK(dd.kind == g.kind);
    CHECK(dd.membership == g.membership);
    CHECK(dual_incidence(g).kind == GeometryKind::APG);
    CHECK(dual_incidence(complete_to_fpp(g)).kind == GeometryKind::FPP);
}

TEST_CASE("counting identity") {
    for (long long d : {3LL, 5LL, 7LL}) {
        for (const Incidence& g :
             {build_apg(d), build_dapg(d), complete_to_fpp(build_apg(d))}) {
            auto [by_lines, by_points] = counting_identity(g);
            CHECK(by_lines == by_points);
            CHECK(by_lines == g.num_lines * g.k_line());
            CHECK(by_points == g.num_points * g.r_point());
        }
    }
    auto [by_lines, by_points] = counting_identity(build_dapg(3));
    CHECK(by_lines == 36);
    CHECK(by_points == 36);
}

TEST_CASE("parameters deduced from point count and line size") {
    CHECK(deduce_parameters(9, 3) == std::pair<long long, long long>(12, 4));
    CHECK(deduce_parameters(25, 5) == std::pair<long long, long long>(30, 6));
    CHECK(deduce_parameters(49, 7) == std::pair<long long, long long>(56, 8));
    CHECK_THROWS_AS(deduce_parameters(10, 3), std::invalid_argument);
    CHECK_THROWS_AS(deduce_parameters(16, 4), std::invalid_argument);
}

TEST_CASE("index helpers are bijections onto the canonical ranges") {
    long long d = 5;
    std::set<long long> seen;
    for (long long m = 0; m < d; ++m)
        for (const BasisLabel& b : BasisLabel::all(d)) seen.insert(dapg_point_index(d, m, b));
    CHECK(seen.size() == static_cast<size_t>(d * (d + 1)));
    CHECK(*seen.begin() == 0);
    CHECK(*seen.rbegin() == d * (d + 1) - 1);

    CHECK(apg_point_index(d, 2, 3) == 13);
    CHECK(apg_slant_index(d, 1, 0) == 5);
    CHECK(apg_vertical_index(d, 4) == 29);
}

TEST_CASE("line and point accessors agree with membership") {
    Incidence g = build_apg(3);
    for (long long l = 0; l < g.num_lines; ++l) {
        for (long long p : g.line_points(l)) CHECK(g.incident(p, l));
        CHECK(g.line_points(l).size() == 3);
    }
    for (long long p = 0; p < g.num_points; ++p) CHECK(g.point_lines(p).size() == 4);
}
