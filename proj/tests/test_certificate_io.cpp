#include <doctest.h>

#include "p2galois/certificate_io.hpp"
#include "p2galois/expression.hpp"
#include "p2galois/nve.hpp"

using namespace p2g;

namespace {

GaloisCertificate certify_n(int n) {
    VorobevYablonskiTable table;
    NVEProblem problem = nve_potential(n, table);
    RationalFunction r = problem.r;
    return analyze(r, problem);
}

}  // namespace

TEST_CASE("structured output round-trips") {
    std::vector<GaloisCertificate> certificates;
    certificates.push_back(certify_n(0));
    certificates.push_back(certify_n(1));
    certificates.push_back(certify_n(2));
    certificates.push_back(analyze(parse_rational_expression("2/z^2")));
    certificates.push_back(analyze(parse_rational_expression("(16*z - 3)/(16*z^2)")));
    certificates.push_back(analyze(parse_rational_expression("1/z^2")));
    certificates.push_back(analyze(RationalFunction()));

    for (const auto& cert : certificates) {
        std::string json = certificate_to_json(cert);
        GaloisCertificate parsed = certificate_from_json(json);
        CHECK(parsed == cert);
        // and the rendering is reproducible
        CHECK(certificate_to_json(parsed) == json);
    }
}

TEST_CASE("schema stability") {
    std::string json = certificate_to_json(certify_n(1));
    for (const char* field :
         {"\"parameter_n\"", "\"r\"", "\"pole_classes\"", "\"o_infinity_paper\"", "\"order_at_infinity\"",
          "\"m_plus\"", "\"gamma\"", "\"exponent_sets\"", "\"case_filter\"", "\"case1\"", "\"case2\"",
          "\"verdict\"", "\"conclusion\""}) {
        CAPTURE(field);
        CHECK(json.find(field) != std::string::npos);
    }
    // numbers are exact decimal strings, never JSON numbers or floats
    CHECK(json.find("\"gamma\": \"2\"") != std::string::npos);
    CHECK(json.find("\"-8\"") != std::string::npos);
    CHECK(json.find("\"order_at_infinity\": \"-1\"") != std::string::npos);
}

TEST_CASE("text report carries the main facts") {
    Report report = render_report(certify_n(1), ReportFormat::Text);
    CHECK(report.body.find("verdict: SL2") != std::string::npos);
    CHECK(report.body.find("E(z) = {-8, 2, 12}") != std::string::npos);
    CHECK(report.body.find("E(infinity) = {5}") != std::string::npos);
    CHECK(report.body.find("alpha = 6") != std::string::npos);

    Report airy = render_report(certify_n(0), ReportFormat::Text);
    CHECK(airy.body.find("note: Airy equation") != std::string::npos);
    CHECK(airy.body.find("pole classes: none") != std::string::npos);

    Report structured = render_report(certify_n(1), ReportFormat::Structured);
    CHECK(structured.body == certificate_to_json(certify_n(1)));
}
