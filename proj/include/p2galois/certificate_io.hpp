#pragma once

#include <string>

#include "p2galois/kovacic.hpp"

namespace p2g {

enum class ReportFormat { Text, Structured };

struct Report {
    ReportFormat format = ReportFormat::Text;
    std::string body;
};

/// Stable JSON document with fixed field names ("parameter_n", "r",
/// "pole_classes", "o_infinity_paper", "order_at_infinity", "m_plus", "gamma",
/// "exponent_sets", "case_filter", "case1", "case2", "verdict", "conclusion").
/// Every number is an exact decimal string ("-8", "1/2"), never a float.
std::string certificate_to_json(const GaloisCertificate& certificate);

/// Inverse of certificate_to_json: parse(render(c)) == c.
GaloisCertificate certificate_from_json(const std::string& text);

/// Human rendering of the same record (Text) or the JSON document
/// (Structured); both views are produced from the one certificate struct.
Report render_report(const GaloisCertificate& certificate, ReportFormat format);

}  // namespace p2g
