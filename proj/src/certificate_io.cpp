#include "p2galois/certificate_io.hpp"

#include <json.hpp>
#include <sstream>

#include "p2galois/error.hpp"
#include "p2galois/expression.hpp"
#include "p2galois/printer.hpp"

namespace p2g {

namespace {

using Json = nlohmann::ordered_json;

Json integer_string(long long v) { return std::to_string(v); }

Polynomial parse_polynomial(const std::string& text) {
    RationalFunction f = parse_rational_expression(text);
    if (!f.is_polynomial()) throw std::domain_error("certificate: expected a polynomial, got " + text);
    return f.numerator();
}

long long parse_integer(const Json& j) {
    Rational v = Rational::from_string(j.get<std::string>());
    if (!v.is_integer() || !v.numerator().fits_slong_p())
        throw std::domain_error("certificate: expected an integer, got " + j.get<std::string>());
    return v.numerator().get_si();
}

Json laurent_to_json(const std::optional<LaurentCoefficient>& value) {
    if (!value) return nullptr;
    if (laurent_is_constant(*value)) return laurent_constant(*value).str();
    const auto& element = std::get<QuotientRingElement>(*value);
    Json j;
    j["representative"] = format_polynomial(element.representative());
    j["modulus"] = format_polynomial(element.modulus());
    return j;
}

std::optional<LaurentCoefficient> laurent_from_json(const Json& j) {
    if (j.is_null()) return std::nullopt;
    if (j.is_string()) return LaurentCoefficient(Rational::from_string(j.get<std::string>()));
    return LaurentCoefficient(QuotientRingElement(parse_polynomial(j.at("representative").get<std::string>()),
                                                  parse_polynomial(j.at("modulus").get<std::string>())));
}

Json case1_to_json(const Case1Result& result) {
    Json j;
    j["status"] = to_string(result.status);
    if (result.success) {
        j["omega"] = format_rational(result.success->omega);
        j["d"] = integer_string(result.success->d);
    }
    if (!result.notes.empty()) j["notes"] = result.notes;
    return j;
}

Json case2_to_json(const Case2Result& result) {
    Json j;
    j["status"] = to_string(result.status);
    if (result.status != SearchStatus::FilteredOut) {
        j["methods"] = result.methods;
        j["assignments_checked"] = std::to_string(result.assignments_checked);
        j["parity_excludes"] = result.parity_excludes;
        Json candidates = Json::array();
        for (const auto& candidate : result.candidates) {
            Json c;
            Json classes = Json::array();
            for (const auto& cls : candidate.class_exponents) {
                Json one = Json::array();
                for (long long e : cls) one.push_back(integer_string(e));
                classes.push_back(one);
            }
            c["class_exponents"] = classes;
            c["e_infinity"] = integer_string(candidate.e_infinity);
            c["d_paper"] = candidate.d_paper ? Json(integer_string(*candidate.d_paper)) : Json(nullptr);
            c["d_classic"] = candidate.d_classic ? Json(integer_string(*candidate.d_classic)) : Json(nullptr);
            candidates.push_back(c);
        }
        j["candidates"] = candidates;
    }
    if (result.success) {
        j["theta"] = format_rational(result.success->theta);
        j["P"] = format_polynomial(result.success->completion);
        j["d"] = integer_string(result.success->d);
        j["formula"] = result.success->formula;
    }
    if (!result.notes.empty()) j["notes"] = result.notes;
    return j;
}

SearchStatus status_from_string(const std::string& s) {
    if (s == "success") return SearchStatus::Success;
    if (s == "excluded") return SearchStatus::Excluded;
    if (s == "undecided") return SearchStatus::Undecided;
    if (s == "excluded-by-filter") return SearchStatus::FilteredOut;
    throw std::domain_error("certificate: unknown search status " + s);
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "SL2") return Verdict::SL2;
    if (s == "Liouvillian-case-1") return Verdict::LiouvillianCase1;
    if (s == "Liouvillian-case-2") return Verdict::LiouvillianCase2;
    if (s == "case-3-possible-unresolved") return Verdict::Case3PossibleUnresolved;
    if (s == "undecided") return Verdict::Undecided;
    throw std::domain_error("certificate: unknown verdict " + s);
}

}  // namespace

std::string certificate_to_json(const GaloisCertificate& cert) {
    Json j;
    j["parameter_n"] = cert.parameter_n ? Json(std::to_string(*cert.parameter_n)) : Json(nullptr);
    j["r"] = format_rational(cert.r);

    Json classes = Json::array();
    if (cert.profile) {
        for (const auto& cls : cert.profile->pole_classes) {
            Json c;
            c["factor"] = format_polynomial(cls.factor);
            c["order"] = integer_string(cls.order);
            c["root_count"] = integer_string(cls.root_count);
            c["alpha"] = laurent_to_json(cls.alpha);
            c["beta"] = laurent_to_json(cls.beta);
            if (cls.delta)
                c["delta"] = cls.delta->str();
            else if (cls.delta_irrational)
                c["delta"] = "irrational";
            else
                c["delta"] = nullptr;
            classes.push_back(c);
        }
    }
    j["pole_classes"] = classes;
    j["o_infinity_paper"] = cert.profile ? Json(integer_string(cert.profile->o_infinity_paper)) : Json(nullptr);
    j["order_at_infinity"] = cert.profile ? Json(integer_string(cert.profile->order_at_infinity)) : Json(nullptr);
    j["m_plus"] = cert.profile ? Json(integer_string(cert.profile->m_plus)) : Json(nullptr);
    j["gamma"] = cert.profile ? Json(integer_string(cert.profile->gamma)) : Json(nullptr);

    if (cert.exponents) {
        Json e;
        Json per_class = Json::array();
        for (const auto& set : cert.exponents->per_class) {
            Json one = Json::array();
            for (long long v : set) one.push_back(integer_string(v));
            per_class.push_back(one);
        }
        e["classes"] = per_class;
        Json infinity = Json::array();
        for (long long v : cert.exponents->at_infinity) infinity.push_back(integer_string(v));
        e["infinity"] = infinity;
        Json undecided = Json::array();
        for (int v : cert.exponents->undecided_classes) undecided.push_back(integer_string(v));
        e["undecided_classes"] = undecided;
        e["infinity_undecided"] = cert.exponents->infinity_undecided;
        j["exponent_sets"] = e;
    } else {
        j["exponent_sets"] = nullptr;
    }

    {
        Json f;
        Json allowed = Json::array();
        for (int c : cert.filter.allowed) allowed.push_back(integer_string(c));
        f["allowed"] = allowed;
        f["reasons"] = cert.filter.reasons;
        if (cert.filter.annotation) f["annotation"] = *cert.filter.annotation;
        j["case_filter"] = f;
    }

    j["case1"] = cert.case1 ? case1_to_json(*cert.case1) : Json(nullptr);
    j["case2"] = cert.case2 ? case2_to_json(*cert.case2) : Json(nullptr);
    j["verdict"] = to_string(cert.verdict);
    j["conclusion"] = cert.conclusion ? Json(*cert.conclusion) : Json(nullptr);
    return j.dump(2);
}

GaloisCertificate certificate_from_json(const std::string& text) {
    Json j = Json::parse(text);
    GaloisCertificate cert;
    if (!j.at("parameter_n").is_null())
        cert.parameter_n = static_cast<int>(parse_integer(j.at("parameter_n")));
    cert.r = parse_rational_expression(j.at("r").get<std::string>());

    if (!j.at("o_infinity_paper").is_null()) {
        SingularityProfile profile;
        for (const auto& c : j.at("pole_classes")) {
            PoleClass cls;
            cls.factor = parse_polynomial(c.at("factor").get<std::string>());
            cls.order = static_cast<int>(parse_integer(c.at("order")));
            cls.root_count = static_cast<int>(parse_integer(c.at("root_count")));
            cls.alpha = laurent_from_json(c.at("alpha"));
            cls.beta = laurent_from_json(c.at("beta"));
            const Json& delta = c.at("delta");
            if (delta.is_string()) {
                if (delta.get<std::string>() == "irrational")
                    cls.delta_irrational = true;
                else
                    cls.delta = Rational::from_string(delta.get<std::string>());
            }
            profile.pole_classes.push_back(std::move(cls));
        }
        profile.o_infinity_paper = static_cast<int>(parse_integer(j.at("o_infinity_paper")));
        profile.order_at_infinity = static_cast<int>(parse_integer(j.at("order_at_infinity")));
        profile.m_plus = static_cast<int>(parse_integer(j.at("m_plus")));
        profile.gamma = static_cast<int>(parse_integer(j.at("gamma")));
        for (const auto& cls : profile.pole_classes) profile.gamma_counts[cls.order] += cls.root_count;
        profile.gamma_counts[profile.o_infinity_paper] += 1;
        cert.profile = std::move(profile);
    }

    if (!j.at("exponent_sets").is_null()) {
        const Json& e = j.at("exponent_sets");
        ExponentData data;
        for (const auto& set : e.at("classes")) {
            std::vector<long long> one;
            for (const auto& v : set) one.push_back(parse_integer(v));
            data.per_class.push_back(std::move(one));
        }
        for (const auto& v : e.at("infinity")) data.at_infinity.push_back(parse_integer(v));
        for (const auto& v : e.at("undecided_classes"))
            data.undecided_classes.push_back(static_cast<int>(parse_integer(v)));
        data.infinity_undecided = e.at("infinity_undecided").get<bool>();
        cert.exponents = std::move(data);
    }

    {
        const Json& f = j.at("case_filter");
        for (const auto& v : f.at("allowed")) cert.filter.allowed.insert(static_cast<int>(parse_integer(v)));
        for (const auto& v : f.at("reasons")) cert.filter.reasons.push_back(v.get<std::string>());
        if (f.contains("annotation")) cert.filter.annotation = f.at("annotation").get<std::string>();
    }

    if (!j.at("case1").is_null()) {
        const Json& c = j.at("case1");
        Case1Result result;
        result.status = status_from_string(c.at("status").get<std::string>());
        if (c.contains("omega")) {
            Case1Success success;
            success.omega = parse_rational_expression(c.at("omega").get<std::string>());
            success.d = parse_integer(c.at("d"));
            result.success = std::move(success);
        }
        if (c.contains("notes"))
            for (const auto& note : c.at("notes")) result.notes.push_back(note.get<std::string>());
        cert.case1 = std::move(result);
    }

    if (!j.at("case2").is_null()) {
        const Json& c = j.at("case2");
        Case2Result result;
        result.status = status_from_string(c.at("status").get<std::string>());
        if (c.contains("methods")) {
            for (const auto& m : c.at("methods")) result.methods.push_back(m.get<std::string>());
            result.assignments_checked = mpz_class(c.at("assignments_checked").get<std::string>()).get_ui();
            result.parity_excludes = c.at("parity_excludes").get<bool>();
            for (const auto& cd : c.at("candidates")) {
                Case2Candidate candidate;
                for (const auto& cls : cd.at("class_exponents")) {
                    std::vector<long long> one;
                    for (const auto& v : cls) one.push_back(parse_integer(v));
                    candidate.class_exponents.push_back(std::move(one));
                }
                candidate.e_infinity = parse_integer(cd.at("e_infinity"));
                if (!cd.at("d_paper").is_null()) candidate.d_paper = parse_integer(cd.at("d_paper"));
                if (!cd.at("d_classic").is_null()) candidate.d_classic = parse_integer(cd.at("d_classic"));
                result.candidates.push_back(std::move(candidate));
            }
        }
        if (c.contains("theta")) {
            Case2Success success;
            success.theta = parse_rational_expression(c.at("theta").get<std::string>());
            success.completion = parse_polynomial(c.at("P").get<std::string>());
            success.d = parse_integer(c.at("d"));
            success.formula = c.at("formula").get<std::string>();
            result.success = std::move(success);
        }
        if (c.contains("notes"))
            for (const auto& note : c.at("notes")) result.notes.push_back(note.get<std::string>());
        cert.case2 = std::move(result);
    }

    cert.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    if (!j.at("conclusion").is_null()) cert.conclusion = j.at("conclusion").get<std::string>();
    return cert;
}

namespace {

std::string laurent_text(const std::optional<LaurentCoefficient>& value) {
    if (!value) return "-";
    if (laurent_is_constant(*value)) return laurent_constant(*value).str();
    const auto& element = std::get<QuotientRingElement>(*value);
    return "[" + format_polynomial(element.representative()) + " mod " +
           format_polynomial(element.modulus()) + "]";
}

std::string exponent_set_text(const std::vector<long long>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(set[i]);
    }
    return out + "}";
}

}  // namespace

Report render_report(const GaloisCertificate& cert, ReportFormat format) {
    if (format == ReportFormat::Structured) return {ReportFormat::Structured, certificate_to_json(cert)};

    std::ostringstream out;
    out << "potential r = " << format_rational(cert.r) << "\n";
    if (cert.parameter_n) out << "parameter n = " << *cert.parameter_n << "\n";
    if (cert.r == RationalFunction::variable()) out << "note: Airy equation\n";

    if (cert.profile) {
        const SingularityProfile& profile = *cert.profile;
        if (profile.pole_classes.empty()) {
            out << "pole classes: none\n";
        } else {
            out << "pole classes:\n";
            for (const auto& cls : profile.pole_classes) {
                out << "  factor " << format_polynomial(cls.factor) << ": order " << cls.order << ", roots "
                    << cls.root_count << ", alpha = " << laurent_text(cls.alpha)
                    << ", beta = " << laurent_text(cls.beta) << ", delta = "
                    << (cls.delta ? cls.delta->str() : (cls.delta_irrational ? "irrational" : "-")) << "\n";
            }
        }
        out << "infinity: o(infinity) = " << profile.o_infinity_paper
            << " (paper convention), order at infinity = " << profile.order_at_infinity << " (classic)\n";
        out << "m+ = " << profile.m_plus << ", gamma = " << profile.gamma << "\n";
    }

    out << "case filter: allowed {";
    bool first = true;
    for (int c : cert.filter.allowed) {
        if (!first) out << ", ";
        out << c;
        first = false;
    }
    out << "}\n";
    for (const auto& reason : cert.filter.reasons) out << "  - " << reason << "\n";
    if (cert.filter.annotation) out << "  note: " << *cert.filter.annotation << "\n";

    if (cert.exponents) {
        out << "exponent sets:\n";
        for (std::size_t i = 0; i < cert.exponents->per_class.size(); ++i) {
            out << "  E(" << format_polynomial(cert.profile->pole_classes[i].factor)
                << ") = " << exponent_set_text(cert.exponents->per_class[i]) << "\n";
        }
        out << "  E(infinity) = " << exponent_set_text(cert.exponents->at_infinity) << "\n";
    }

    if (cert.case1) {
        out << "case 1: " << to_string(cert.case1->status);
        if (cert.case1->success)
            out << ", omega = " << format_rational(cert.case1->success->omega) << ", d = "
                << cert.case1->success->d;
        out << "\n";
        for (const auto& note : cert.case1->notes) out << "  note: " << note << "\n";
    }
    if (cert.case2) {
        out << "case 2: " << to_string(cert.case2->status);
        if (cert.case2->status != SearchStatus::FilteredOut) {
            out << " [";
            for (std::size_t i = 0; i < cert.case2->methods.size(); ++i) {
                if (i) out << ", ";
                out << cert.case2->methods[i];
            }
            out << "], assignments checked: " << cert.case2->assignments_checked
                << ", candidates with integral degree: " << cert.case2->candidates.size();
        }
        if (cert.case2->success)
            out << ", theta = " << format_rational(cert.case2->success->theta)
                << ", P = " << format_polynomial(cert.case2->success->completion) << ", d = "
                << cert.case2->success->d << " (" << cert.case2->success->formula << ")";
        out << "\n";
        for (const auto& note : cert.case2->notes) out << "  note: " << note << "\n";
    }

    out << "verdict: " << to_string(cert.verdict) << "\n";
    if (cert.conclusion) out << "conclusion: " << *cert.conclusion << "\n";
    return {ReportFormat::Text, out.str()};
}

}  // namespace p2g
