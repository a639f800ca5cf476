#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "p2galois/nve.hpp"
#include "p2galois/quotient_ring.hpp"
#include "p2galois/rational_function.hpp"

namespace p2g {

/// Laurent datum attached to a whole pole class: a plain rational when the
/// value is the same at every root of the class factor, otherwise the honest
/// quotient-ring element (one value per root, never materialized as surds).
using LaurentCoefficient = std::variant<Rational, QuotientRingElement>;

bool laurent_is_constant(const LaurentCoefficient& value);
Rational laurent_constant(const LaurentCoefficient& value);

/// One squarefree factor of the denominator together with the multiplicity of
/// its roots as poles and the Laurent data the case analysis needs.
struct PoleClass {
    Polynomial factor;  // monic squarefree
    int order = 0;
    int root_count = 0;  // = deg factor
    std::optional<LaurentCoefficient> alpha;  // 1/(z-c)^2 coefficient, for order <= 2
    std::optional<LaurentCoefficient> beta;   // 1/(z-c) coefficient, when cheaply constant
    std::optional<Rational> delta;            // sqrt(1 + 4 alpha) when rational
    bool delta_irrational = false;            // alpha constant but 1 + 4 alpha not a square

    friend bool operator==(const PoleClass&, const PoleClass&);
};

struct SingularityProfile {
    std::vector<PoleClass> pole_classes;
    int o_infinity_paper = 0;   // max(0, 4 + deg R - deg S)
    int order_at_infinity = 0;  // deg S - deg R
    int m_plus = 0;             // max order over all of Y (infinity in the paper convention)
    std::map<int, int> gamma_counts;  // order -> number of points of Y with that order
    int gamma = 0;              // gamma_2 + sum of gamma_k over odd k in [3, m_plus]

    friend bool operator==(const SingularityProfile&, const SingularityProfile&) = default;
};

/// Pole classes, both infinity conventions, and the gamma bookkeeping.
/// Classes whose 1/(z-c)^2 coefficient is not constant are split along
/// rational level sets where possible. Requires r nonzero.
SingularityProfile singularity_profile(const RationalFunction& r);

/// Standalone Laurent alpha for an order-2 class of r.
LaurentCoefficient laurent_alpha(const RationalFunction& r, const PoleClass& cls);

struct CaseFilter {
    std::set<int> allowed;
    std::vector<std::string> reasons;
    std::optional<std::string> annotation;

    friend bool operator==(const CaseFilter&, const CaseFilter&) = default;
};

/// Necessary-condition filtering of the three Liouvillian cases, driven by
/// pole orders and the classic order at infinity.
CaseFilter case_filter(const SingularityProfile& profile);

struct ExponentData {
    std::vector<std::vector<long long>> per_class;  // aligned with profile.pole_classes
    std::vector<long long> at_infinity;
    std::vector<int> undecided_classes;  // class indices without a usable set
    bool infinity_undecided = false;

    friend bool operator==(const ExponentData&, const ExponentData&) = default;
};

/// Imprimitive-case exponent sets E_c = {2 - (2-2j) delta | j = 0,1,2} n Z per
/// order-2 class, and the set at infinity ({o_paper} below order 2 at
/// infinity, the order-2 analogue at order 2, {0, 2, 4} above).
ExponentData case2_exponents(const RationalFunction& r, const SingularityProfile& profile);

enum class SearchStatus { Success, Excluded, Undecided, FilteredOut };

std::string to_string(SearchStatus status);

struct Case2Candidate {
    std::vector<std::vector<long long>> class_exponents;  // sorted within each class
    long long e_infinity = 0;
    std::optional<long long> d_paper;    // 2 - (sum + e_inf)/2 when a nonnegative integer
    std::optional<long long> d_classic;  // (e_inf - sum)/2 when a nonnegative integer

    friend bool operator==(const Case2Candidate&, const Case2Candidate&) = default;
};

struct Case2Success {
    RationalFunction theta;
    Polynomial completion;  // monic P of degree d
    long long d = 0;
    std::string formula;  // "paper" or "classic"

    friend bool operator==(const Case2Success&, const Case2Success&) = default;
};

struct Case2Result {
    SearchStatus status = SearchStatus::FilteredOut;
    std::optional<Case2Success> success;
    std::vector<Case2Candidate> candidates;
    std::vector<std::string> methods;  // subset of {"parity", "exhaustive"}
    std::uint64_t assignments_checked = 0;
    bool parity_excludes = false;
    std::vector<std::string> notes;

    friend bool operator==(const Case2Result&, const Case2Result&) = default;
};

struct Case1Success {
    RationalFunction omega;
    long long d = 0;

    friend bool operator==(const Case1Success&, const Case1Success&) = default;
};

struct Case1Result {
    SearchStatus status = SearchStatus::FilteredOut;
    std::optional<Case1Success> success;
    std::vector<std::string> notes;

    friend bool operator==(const Case1Result&, const Case1Result&) = default;
};

struct AnalyzeOptions {
    /// Upper bound on the size of the root-level Cartesian product that the
    /// exhaustive search will walk; beyond it only the parity argument runs.
    std::uint64_t max_enumeration = 1'000'000;
};

/// Reducible-case search (rational Riccati solution), scoped to pole orders
/// <= 2 with order at infinity >= 2. Any success payload is re-validated
/// against omega' + omega^2 = r before being returned.
Case1Result case1_search(const RationalFunction& r, const SingularityProfile& profile,
                         const AnalyzeOptions& options = {});

/// Imprimitive-case search: exhaustive root-level enumeration under both
/// degree formulas when tractable, parity shortcut always, completions
/// re-validated against the auxiliary cubic identity.
Case2Result case2_search(const RationalFunction& r, const SingularityProfile& profile,
                         const ExponentData& exponents, const AnalyzeOptions& options = {});

/// omega' + omega^2 = r, exactly.
bool validate_case1(const RationalFunction& r, const RationalFunction& omega);

/// P''' + 3 t P'' + (3t^2 + 3t' - 4r) P' + (t'' + 3tt' + t^3 - 4rt - 2r') P = 0,
/// exactly, with t = theta.
bool validate_case2(const RationalFunction& r, const RationalFunction& theta, const Polynomial& P);

enum class Verdict { LiouvillianCase1, LiouvillianCase2, Case3PossibleUnresolved, SL2, Undecided };

std::string to_string(Verdict verdict);

struct GaloisCertificate {
    std::optional<int> parameter_n;
    RationalFunction r;
    std::optional<SingularityProfile> profile;  // absent only for r = 0
    CaseFilter filter;
    std::optional<ExponentData> exponents;
    std::optional<Case1Result> case1;
    std::optional<Case2Result> case2;
    Verdict verdict = Verdict::Undecided;
    std::optional<std::string> conclusion;

    friend bool operator==(const GaloisCertificate&, const GaloisCertificate&);
};

/// Full pipeline: profile, filter, per-case searches, verdict. SL2 is claimed
/// only when every admissible case was constructively excluded; an admissible
/// case 3 is reported as unresolved, never as SL2. With a Hamiltonian context
/// attached and an SL2 verdict, the non-integrability conclusion is recorded.
GaloisCertificate analyze(const RationalFunction& r, const std::optional<NVEProblem>& context = {},
                          const AnalyzeOptions& options = {});

}  // namespace p2g
