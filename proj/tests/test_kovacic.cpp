#include <doctest.h>

#include "p2galois/expression.hpp"
#include "p2galois/kovacic.hpp"
#include "p2galois/nve.hpp"

using namespace p2g;

namespace {

RationalFunction rf(const std::string& text) { return parse_rational_expression(text); }

GaloisCertificate certify_n(int n) {
    VorobevYablonskiTable table;
    NVEProblem problem = nve_potential(n, table);
    RationalFunction r = problem.r;
    return analyze(r, problem);
}

}  // namespace

TEST_CASE("singularity profile of the hierarchy potentials") {
    VorobevYablonskiTable table;
    for (int n = 1; n <= 4; ++n) {
        SingularityProfile profile = singularity_profile(nve_potential(n, table).r);
        REQUIRE(profile.pole_classes.size() == 1);
        const PoleClass& cls = profile.pole_classes[0];
        CHECK(cls.order == 2);
        CHECK(cls.root_count == n * n);
        CHECK(cls.factor == table.polynomial(n) * table.polynomial(n + 1));
        REQUIRE(cls.alpha.has_value());
        CHECK(laurent_is_constant(*cls.alpha));
        CHECK(laurent_constant(*cls.alpha) == Rational(6));
        CHECK(*cls.delta == Rational(5));
        CHECK(profile.o_infinity_paper == 5);
        CHECK(profile.order_at_infinity == -1);
        CHECK(profile.m_plus == 5);
        CHECK(profile.gamma == n * n + 1);
    }
}

TEST_CASE("profile of simple potentials") {
    SingularityProfile airy = singularity_profile(rf("z"));
    CHECK(airy.pole_classes.empty());
    CHECK(airy.o_infinity_paper == 5);
    CHECK(airy.order_at_infinity == -1);

    SingularityProfile p = singularity_profile(rf("2/z^2"));
    REQUIRE(p.pole_classes.size() == 1);
    CHECK(laurent_constant(*p.pole_classes[0].alpha) == Rational(2));
    CHECK(*p.pole_classes[0].delta == Rational(3));
    CHECK(p.o_infinity_paper == 2);
    CHECK(p.order_at_infinity == 2);
    CHECK(p.gamma == 2);  // the double root and infinity both have order 2

    CHECK_THROWS_AS(singularity_profile(RationalFunction()), std::domain_error);
}

TEST_CASE("laurent_alpha standalone") {
    SingularityProfile p = singularity_profile(rf("2/z^2"));
    CHECK(laurent_constant(laurent_alpha(rf("2/z^2"), p.pole_classes[0])) == Rational(2));

    VorobevYablonskiTable table;
    RationalFunction r2 = nve_potential(2, table).r;
    SingularityProfile p2 = singularity_profile(r2);
    CHECK(laurent_constant(laurent_alpha(r2, p2.pole_classes[0])) == Rational(6));
}

TEST_CASE("pole classes with different alpha values are split") {
    // 2/z^2 + 6/(z-1)^2: one squarefree factor z(z-1), split by alpha level sets
    RationalFunction r = rf("2/z^2 + 6/(z - 1)^2");
    SingularityProfile p = singularity_profile(r);
    REQUIRE(p.pole_classes.size() == 2);
    CHECK(p.pole_classes[0].factor == rf("z").numerator());
    CHECK(laurent_constant(*p.pole_classes[0].alpha) == Rational(2));
    CHECK(p.pole_classes[1].factor == rf("z - 1").numerator());
    CHECK(laurent_constant(*p.pole_classes[1].alpha) == Rational(6));
}

TEST_CASE("beta values") {
    // r = 1/z^2 + 3/z has beta = 3 at the double pole at 0
    SingularityProfile p = singularity_profile(rf("(3*z + 1)/z^2"));
    REQUIRE(p.pole_classes.size() == 1);
    REQUIRE(p.pole_classes[0].beta.has_value());
    CHECK(laurent_constant(*p.pole_classes[0].beta) == Rational(3));

    // order-1 pole: residue
    SingularityProfile q = singularity_profile(rf("5/z"));
    REQUIRE(q.pole_classes.size() == 1);
    CHECK(q.pole_classes[0].order == 1);
    CHECK(laurent_constant(*q.pole_classes[0].alpha) == Rational(0));
    CHECK(laurent_constant(*q.pole_classes[0].beta) == Rational(5));
}

TEST_CASE("case filter") {
    VorobevYablonskiTable table;
    CaseFilter hierarchy = case_filter(singularity_profile(nve_potential(1, table).r));
    CHECK(hierarchy.allowed == std::set<int>{2});
    REQUIRE(hierarchy.annotation.has_value());

    CaseFilter airy = case_filter(singularity_profile(rf("z")));
    CHECK(airy.allowed.empty());

    CaseFilter inverse_square = case_filter(singularity_profile(rf("2/z^2")));
    CHECK(inverse_square.allowed == std::set<int>{1, 2, 3});
    CHECK(!inverse_square.annotation.has_value());
}

TEST_CASE("case 2 exponent sets") {
    VorobevYablonskiTable table;
    for (int n : {1, 2, 3}) {
        RationalFunction r = nve_potential(n, table).r;
        SingularityProfile profile = singularity_profile(r);
        ExponentData e = case2_exponents(r, profile);
        REQUIRE(e.per_class.size() == 1);
        CHECK(e.per_class[0] == std::vector<long long>{-8, 2, 12});
        CHECK(e.at_infinity == std::vector<long long>{5});
        CHECK(e.undecided_classes.empty());
    }

    RationalFunction r = rf("2/z^2");
    ExponentData e = case2_exponents(r, singularity_profile(r));
    CHECK(e.per_class[0] == std::vector<long long>{-4, 2, 8});
    CHECK(e.at_infinity == std::vector<long long>{-4, 2, 8});
}

TEST_CASE("case 2 search excludes the hierarchy potentials") {
    VorobevYablonskiTable table;

    RationalFunction r1 = nve_potential(1, table).r;
    SingularityProfile p1 = singularity_profile(r1);
    Case2Result res1 = case2_search(r1, p1, case2_exponents(r1, p1));
    CHECK(res1.status == SearchStatus::Excluded);
    CHECK(res1.parity_excludes);
    CHECK(res1.assignments_checked == 3);
    CHECK(res1.candidates.empty());
    CHECK(res1.methods == std::vector<std::string>{"parity", "exhaustive"});

    RationalFunction r2 = nve_potential(2, table).r;
    SingularityProfile p2 = singularity_profile(r2);
    Case2Result res2 = case2_search(r2, p2, case2_exponents(r2, p2));
    CHECK(res2.status == SearchStatus::Excluded);
    CHECK(res2.assignments_checked == 81);

    // beyond the enumeration bound only the parity argument runs
    RationalFunction r4 = nve_potential(4, table).r;
    SingularityProfile p4 = singularity_profile(r4);
    Case2Result res4 = case2_search(r4, p4, case2_exponents(r4, p4));
    CHECK(res4.status == SearchStatus::Excluded);
    CHECK(res4.parity_excludes);
    CHECK(res4.methods == std::vector<std::string>{"parity"});
}

TEST_CASE("case 2 candidates and payload for 2/z^2") {
    RationalFunction r = rf("2/z^2");
    SingularityProfile profile = singularity_profile(r);
    Case2Result result = case2_search(r, profile, case2_exponents(r, profile));
    CHECK(result.status == SearchStatus::Success);
    REQUIRE(result.success.has_value());
    CHECK(validate_case2(r, result.success->theta, result.success->completion));

    // the hand-checked candidate e = (2, 2), theta = 1/z, P = 1 is present and valid
    bool found = false;
    for (const auto& candidate : result.candidates) {
        if (candidate.class_exponents == std::vector<std::vector<long long>>{{2}} &&
            candidate.e_infinity == 2) {
            found = true;
            CHECK(candidate.d_paper == 0);
            CHECK(candidate.d_classic == 0);
        }
    }
    CHECK(found);
    CHECK(validate_case2(r, rf("1/z"), Polynomial(1)));
}

TEST_CASE("case 1 search") {
    RationalFunction r = rf("2/z^2");
    Case1Result result = case1_search(r, singularity_profile(r));
    CHECK(result.status == SearchStatus::Success);
    REQUIRE(result.success.has_value());
    CHECK(result.success->omega == rf("2/z"));
    CHECK(result.success->d == 0);
    CHECK(validate_case1(r, result.success->omega));

    // r = 0: y = 1, omega = 0
    Case1Result zero = case1_search(RationalFunction(), SingularityProfile{});
    CHECK(zero.status == SearchStatus::Success);
    CHECK(zero.success->omega.is_zero());

    // completion with positive degree: r = 2/z^2 - 2/z + 1 has solution
    // y = (z^2 + ...) e^... ; just check self-validation on whatever returns
    RationalFunction shifted = rf("2/z^2 + 1");
    Case1Result other = case1_search(shifted, singularity_profile(shifted));
    if (other.status == SearchStatus::Success) CHECK(validate_case1(shifted, other.success->omega));
}

TEST_CASE("full analysis of the hierarchy potentials") {
    for (int n : {0, 1, 2, 3}) {
        GaloisCertificate cert = certify_n(n);
        CHECK(cert.verdict == Verdict::SL2);
        CHECK(cert.parameter_n == n);
        REQUIRE(cert.conclusion.has_value());
        if (n == 0) CHECK(cert.conclusion->find("Airy") != std::string::npos);
        if (n >= 1) {
            CHECK(cert.case1->status == SearchStatus::FilteredOut);
            CHECK(cert.case2->status == SearchStatus::Excluded);
        }
    }
}

TEST_CASE("analysis of raw potentials") {
    // Airy without context: SL2, no conclusion attached
    GaloisCertificate airy = analyze(rf("z"));
    CHECK(airy.verdict == Verdict::SL2);
    CHECK(!airy.conclusion.has_value());

    GaloisCertificate zero = analyze(RationalFunction());
    CHECK(zero.verdict == Verdict::LiouvillianCase1);
    CHECK(zero.case1->success->omega.is_zero());

    GaloisCertificate inverse_square = analyze(rf("2/z^2"));
    CHECK(inverse_square.verdict == Verdict::LiouvillianCase1);
    CHECK(inverse_square.case1->success->omega == rf("2/z"));

    // imprimitive example: case 1 filtered out, case 2 succeeds
    GaloisCertificate imprimitive = analyze(rf("(16*z - 3)/(16*z^2)"));
    CHECK(imprimitive.verdict == Verdict::LiouvillianCase2);
    CHECK(imprimitive.case1->status == SearchStatus::FilteredOut);
    REQUIRE(imprimitive.case2->success.has_value());
    CHECK(validate_case2(imprimitive.r, imprimitive.case2->success->theta,
                         imprimitive.case2->success->completion));

    // irrational exponent difference: honestly undecided
    GaloisCertificate undecided = analyze(rf("1/z^2"));
    CHECK(undecided.verdict == Verdict::Undecided);
    CHECK(undecided.profile->pole_classes[0].delta_irrational);

    // triangle-group potential with exponent differences 1/2, 1/3, 1/5:
    // cases 1 and 2 are excluded, case 3 passes the filter and stays open
    GaloisCertificate triangle =
        analyze(rf("-3/(16*z^2) - 2/(9*(z - 1)^2) + 611/(3600*z*(z - 1))"));
    CHECK(triangle.filter.allowed == std::set<int>{1, 2, 3});
    CHECK(triangle.case1->status == SearchStatus::Excluded);
    CHECK(triangle.case2->status == SearchStatus::Excluded);
    CHECK(triangle.verdict == Verdict::Case3PossibleUnresolved);
}

TEST_CASE("exhaustive enumeration agrees with the parity argument for n <= 3") {
    VorobevYablonskiTable table;
    for (int n : {1, 2, 3}) {
        RationalFunction r = nve_potential(n, table).r;
        SingularityProfile profile = singularity_profile(r);
        Case2Result result = case2_search(r, profile, case2_exponents(r, profile));
        CHECK(result.parity_excludes);
        CHECK(result.candidates.empty());
        std::uint64_t expected = 1;
        for (int i = 0; i < n * n; ++i) expected *= 3;
        CHECK(result.assignments_checked == expected);
    }
}
