#include "p2galois/kovacic.hpp"

#include <algorithm>
#include <map>

#include "linear_solve.hpp"
#include "modular_arith.hpp"
#include "p2galois/error.hpp"

namespace p2g {

bool laurent_is_constant(const LaurentCoefficient& value) {
    return std::holds_alternative<Rational>(value);
}

Rational laurent_constant(const LaurentCoefficient& value) { return std::get<Rational>(value); }

bool operator==(const PoleClass& a, const PoleClass& b) {
    return a.factor == b.factor && a.order == b.order && a.root_count == b.root_count && a.alpha == b.alpha &&
           a.beta == b.beta && a.delta == b.delta && a.delta_irrational == b.delta_irrational;
}

bool operator==(const GaloisCertificate& a, const GaloisCertificate& b) {
    return a.parameter_n == b.parameter_n && a.r == b.r && a.profile == b.profile && a.filter == b.filter &&
           a.exponents == b.exponents && a.case1 == b.case1 && a.case2 == b.case2 && a.verdict == b.verdict &&
           a.conclusion == b.conclusion;
}

std::string to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Success: return "success";
        case SearchStatus::Excluded: return "excluded";
        case SearchStatus::Undecided: return "undecided";
        case SearchStatus::FilteredOut: return "excluded-by-filter";
    }
    throw std::logic_error("unreachable");
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::LiouvillianCase1: return "Liouvillian-case-1";
        case Verdict::LiouvillianCase2: return "Liouvillian-case-2";
        case Verdict::Case3PossibleUnresolved: return "case-3-possible-unresolved";
        case Verdict::SL2: return "SL2";
        case Verdict::Undecided: return "undecided";
    }
    throw std::logic_error("unreachable");
}

namespace {

// ---------------------------------------------------------------------------
// Laurent data per pole class
// ---------------------------------------------------------------------------

// a = c * b for a scalar c, checked coefficientwise; detects class-constant
// Laurent data without a quotient-ring inversion.
std::optional<Rational> proportionality_constant(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Rational(0);
    int k = 0;
    while (b.coeff(k).is_zero()) ++k;
    Rational c = a.coeff(k) / b.coeff(k);
    return (a == c * b) ? std::optional<Rational>(c) : std::nullopt;
}

// Leading Laurent coefficient of r = N/D at the roots of the squarefree class
// factor g with multiplicity `order`, as an element of Q[z]/(g). At a root c
// the value is N(c)/U(c), with the cofactor U from the normalization
//   order 1: U = D/g           (residue)
//   order 2: U = (D/g^2) g'^2  (coefficient of 1/(z-c)^2).
LaurentCoefficient laurent_leading(const Polynomial& numerator, const Polynomial& denominator,
                                   const Polynomial& g, int order) {
    Polynomial cofactor = exact_divide(denominator, pow(g, static_cast<unsigned>(order)));
    Polynomial u = order == 2 ? cofactor * (g.derivative() * g.derivative()) : cofactor * g.derivative();
    Polynomial ubar = divmod(u, g).remainder;
    Polynomial nbar = divmod(numerator, g).remainder;
    if (auto c = proportionality_constant(nbar, ubar)) return *c;
    auto inv = detail::invert_modulo(ubar, g);
    if (!inv) throw InternalError("laurent data: cofactor not invertible modulo a squarefree factor");
    return QuotientRingElement(nbar * *inv, g);
}

// 1/(z-c) coefficient at the roots of an order-2 class, when it is constant
// across the class. With D''(c) = 2 sigma(c) and D'''(c) = 6 sigma'(c) for
// sigma = D/(z-c)^2:  beta = (6 N' D'' - 2 N D''') / (3 D''^2) at c.
std::optional<Rational> beta_if_constant_order2(const Polynomial& numerator, const Polynomial& denominator,
                                                const Polynomial& g) {
    Polynomial d2 = denominator.derivative().derivative();
    Polynomial d3 = d2.derivative();
    Polynomial a = Rational(6) * (numerator.derivative() * d2) - Rational(2) * (numerator * d3);
    Polynomial b = Rational(3) * (d2 * d2);
    return proportionality_constant(divmod(a, g).remainder, divmod(b, g).remainder);
}

std::optional<Rational> beta_if_constant_order1(const Polynomial& numerator, const Polynomial& denominator,
                                                const Polynomial& g) {
    Polynomial u = divmod(g.derivative() * exact_divide(denominator, g), g).remainder;
    return proportionality_constant(divmod(numerator, g).remainder, u);
}

// Bounded search for rational roots of g. Not guaranteed complete (divisor
// enumeration is capped); used only to attempt class splits.
std::vector<Rational> bounded_rational_roots(const Polynomial& g) {
    std::vector<Rational> roots;
    mpz_class denom;
    detail::ZPoly zg = detail::zprimitive(detail::clear_denominators(g, denom));
    if (zg.size() < 2) return roots;
    if (zg.front() == 0) roots.emplace_back(0);
    while (!zg.empty() && zg.front() == 0) zg.erase(zg.begin());
    if (zg.size() < 2) return roots;

    auto small_divisors = [](const mpz_class& value) {
        std::vector<mpz_class> divs;
        mpz_class v = abs(value);
        if (v == 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 63) return divs;
        unsigned long x = v.get_ui();
        for (unsigned long d = 1; d * d <= x && divs.size() < 512; ++d) {
            if (x % d) continue;
            divs.emplace_back(d);
            divs.emplace_back(x / d);
        }
        return divs;
    };

    for (const mpz_class& p : small_divisors(zg.front())) {
        for (const mpz_class& q : small_divisors(zg.back())) {
            Rational candidate(p, q);
            if (g.evaluate(candidate).is_zero()) roots.push_back(candidate);
            if (g.evaluate(-candidate).is_zero()) roots.push_back(-candidate);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Splits a class with non-constant alpha along rational level sets:
// gcd(g, rep - value) collects every root where alpha takes that value.
std::vector<Polynomial> split_by_alpha(const Polynomial& g, const QuotientRingElement& alpha) {
    std::vector<Polynomial> parts;
    Polynomial rest = g;
    for (const Rational& root : bounded_rational_roots(g)) {
        if (rest.is_constant()) break;
        Rational value = alpha.representative().evaluate(root);
        Polynomial level = poly_gcd(rest, alpha.representative() - Polynomial(value));
        if (level.is_constant()) continue;
        parts.push_back(level);
        rest = exact_divide(rest, level);
    }
    if (!rest.is_constant()) parts.push_back(rest.monic());
    return parts;
}

PoleClass build_pole_class(const Polynomial& numerator, const Polynomial& denominator, Polynomial factor,
                           int order) {
    PoleClass cls;
    cls.factor = std::move(factor);
    cls.order = order;
    cls.root_count = cls.factor.degree();
    if (order == 1) {
        cls.alpha = LaurentCoefficient(Rational(0));
        if (auto b = beta_if_constant_order1(numerator, denominator, cls.factor))
            cls.beta = LaurentCoefficient(*b);
    } else if (order == 2) {
        cls.alpha = laurent_leading(numerator, denominator, cls.factor, 2);
        if (auto b = beta_if_constant_order2(numerator, denominator, cls.factor))
            cls.beta = LaurentCoefficient(*b);
    }
    if (cls.alpha && laurent_is_constant(*cls.alpha)) {
        Rational radicand = Rational(1) + Rational(4) * laurent_constant(*cls.alpha);
        if (auto d = rational_sqrt(radicand))
            cls.delta = *d;
        else
            cls.delta_irrational = true;
    }
    return cls;
}

}  // namespace

SingularityProfile singularity_profile(const RationalFunction& r) {
    if (r.is_zero()) throw std::domain_error("singularity_profile: r must be nonzero");
    SingularityProfile out;
    const Polynomial& numerator = r.numerator();
    const Polynomial& denominator = r.denominator();

    int deg_r = numerator.degree();
    int deg_s = denominator.is_one() ? 0 : denominator.degree();
    out.o_infinity_paper = std::max(0, 4 + deg_r - deg_s);
    out.order_at_infinity = deg_s - deg_r;

    if (!denominator.is_one()) {
        for (const auto& part : squarefree_decomposition(denominator).factors) {
            PoleClass cls = build_pole_class(numerator, denominator, part.factor, part.multiplicity);
            if (cls.alpha && !laurent_is_constant(*cls.alpha) && cls.root_count > 1) {
                for (Polynomial& piece : split_by_alpha(cls.factor, std::get<QuotientRingElement>(*cls.alpha)))
                    out.pole_classes.push_back(
                        build_pole_class(numerator, denominator, std::move(piece), part.multiplicity));
            } else {
                out.pole_classes.push_back(std::move(cls));
            }
        }
    }

    out.m_plus = out.o_infinity_paper;
    for (const auto& cls : out.pole_classes) {
        out.m_plus = std::max(out.m_plus, cls.order);
        out.gamma_counts[cls.order] += cls.root_count;
    }
    out.gamma_counts[out.o_infinity_paper] += 1;

    out.gamma = 0;
    for (const auto& [order, count] : out.gamma_counts) {
        if (order == 2) out.gamma += count;
        if (order >= 3 && order <= out.m_plus && order % 2 == 1) out.gamma += count;
    }
    return out;
}

LaurentCoefficient laurent_alpha(const RationalFunction& r, const PoleClass& cls) {
    if (cls.order != 2) throw std::domain_error("laurent_alpha: class order must be 2");
    return laurent_leading(r.numerator(), r.denominator(), cls.factor, 2);
}

CaseFilter case_filter(const SingularityProfile& profile) {
    CaseFilter out;
    const int inf = profile.order_at_infinity;

    {
        std::optional<std::string> why;
        for (const auto& cls : profile.pole_classes)
            if (cls.order != 1 && cls.order % 2 == 1) {
                why = "case 1 excluded: pole of odd order " + std::to_string(cls.order) + " > 1";
                break;
            }
        if (!why && inf % 2 != 0 && inf <= 2)
            why = "case 1 excluded: order at infinity " + std::to_string(inf) + " is odd and not > 2";
        if (why) {
            out.reasons.push_back(*why);
        } else {
            out.allowed.insert(1);
            out.reasons.push_back("case 1 allowed: pole orders all even or 1; order at infinity " +
                                  std::to_string(inf) + " is even or > 2");
        }
    }

    {
        bool found = false;
        for (const auto& cls : profile.pole_classes)
            if (cls.order == 2 || (cls.order > 2 && cls.order % 2 == 1)) found = true;
        if (found) {
            out.allowed.insert(2);
            out.reasons.push_back("case 2 allowed: found a pole of order 2 or of odd order > 2");
        } else {
            out.reasons.push_back("case 2 excluded: no pole of order 2 or of odd order > 2");
        }
    }

    {
        std::optional<std::string> why;
        for (const auto& cls : profile.pole_classes)
            if (cls.order > 2) {
                why = "case 3 excluded: pole of order " + std::to_string(cls.order) + " > 2";
                break;
            }
        if (!why && inf < 2) why = "case 3 excluded: order at infinity " + std::to_string(inf) + " < 2";
        if (why) {
            out.reasons.push_back(*why);
        } else {
            out.allowed.insert(3);
            out.reasons.push_back("case 3 allowed: all pole orders <= 2 and order at infinity >= 2");
        }
    }

    if (profile.m_plus > 2 && out.allowed == std::set<int>{2})
        out.annotation = "m+ = " + std::to_string(profile.m_plus) +
                         " > 2 and only case 2 admissible: L' = {2}, m = 2, h(2) = 2";
    return out;
}

namespace {

// {2 - (2 - 2j) delta | j = 0, 1, 2} intersected with Z, ascending.
std::optional<std::vector<long long>> order2_exponent_set(const Rational& delta) {
    std::vector<long long> out;
    for (int j = 0; j <= 2; ++j) {
        Rational e = Rational(2) - Rational(2 - 2 * j) * delta;
        if (e.is_integer() && e.numerator().fits_slong_p()) out.push_back(e.numerator().get_si());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) return std::nullopt;
    return out;
}

// z^-2 coefficient of r at infinity (order at infinity >= 2).
Rational infinity_b(const RationalFunction& r, int order_at_infinity) {
    if (order_at_infinity > 2) return Rational(0);
    return r.numerator().leading_coefficient() / r.denominator().leading_coefficient();
}

}  // namespace

ExponentData case2_exponents(const RationalFunction& r, const SingularityProfile& profile) {
    ExponentData out;
    out.per_class.resize(profile.pole_classes.size());
    for (std::size_t i = 0; i < profile.pole_classes.size(); ++i) {
        const PoleClass& cls = profile.pole_classes[i];
        if (cls.order != 2 || !cls.delta) {
            out.undecided_classes.push_back(static_cast<int>(i));
            continue;
        }
        if (auto set = order2_exponent_set(*cls.delta)) {
            out.per_class[i] = std::move(*set);
        } else {
            out.undecided_classes.push_back(static_cast<int>(i));
        }
    }

    if (profile.order_at_infinity < 2) {
        out.at_infinity = {profile.o_infinity_paper};
    } else if (profile.order_at_infinity == 2) {
        auto delta = rational_sqrt(Rational(1) + Rational(4) * infinity_b(r, 2));
        std::optional<std::vector<long long>> set;
        if (delta) set = order2_exponent_set(*delta);
        if (set)
            out.at_infinity = std::move(*set);
        else
            out.infinity_undecided = true;
    } else {
        out.at_infinity = {0, 2, 4};
    }
    return out;
}

namespace {

// Mod-2 reachability of the root-exponent sum. Exclusion here means no
// assignment has an integral degree at all, under either formula (both need
// e_infinity and the root sum to share parity).
bool parity_excludes_case2(const SingularityProfile& profile, const ExponentData& exponents) {
    std::set<int> reachable{0};
    for (std::size_t i = 0; i < exponents.per_class.size(); ++i) {
        std::set<int> parities;
        for (long long e : exponents.per_class[i]) parities.insert(static_cast<int>(((e % 2) + 2) % 2));
        std::set<int> class_sums;
        int k = profile.pole_classes[i].root_count;
        if (parities.size() == 2 && k >= 1)
            class_sums = {0, 1};
        else
            for (int p : parities) class_sums.insert((p * k) % 2);
        std::set<int> next;
        for (int a : reachable)
            for (int b : class_sums) next.insert((a + b) % 2);
        reachable = std::move(next);
    }
    for (long long e : exponents.at_infinity)
        for (int sigma : reachable)
            if (((e % 2) + 2) % 2 == sigma) return false;
    return true;
}

std::optional<std::uint64_t> enumeration_size(const SingularityProfile& profile, const ExponentData& exponents,
                                              std::uint64_t cap) {
    unsigned __int128 total = exponents.at_infinity.size();
    for (std::size_t i = 0; i < exponents.per_class.size(); ++i)
        for (int k = 0; k < profile.pole_classes[i].root_count; ++k) {
            total *= exponents.per_class[i].size();
            if (total > cap) return std::nullopt;
        }
    if (total > cap) return std::nullopt;
    return static_cast<std::uint64_t>(total);
}

// One exponent slot per root of every class plus a final infinity slot.
template <typename Value>
class AssignmentWalker {
public:
    AssignmentWalker(const SingularityProfile& profile, const std::vector<std::vector<Value>>& per_class,
                     const std::vector<Value>& at_infinity)
        : per_class_(per_class), at_infinity_(at_infinity) {
        for (std::size_t i = 0; i < per_class.size(); ++i)
            for (int k = 0; k < profile.pole_classes[i].root_count; ++k) slot_class_.push_back(static_cast<int>(i));
        indices_.assign(slot_class_.size() + 1, 0);
    }

    bool done() const { return done_; }

    void advance() {
        for (std::size_t i = 0; i < indices_.size(); ++i) {
            std::size_t limit = i < slot_class_.size() ? per_class_[slot_class_[i]].size() : at_infinity_.size();
            if (++indices_[i] < limit) return;
            indices_[i] = 0;
        }
        done_ = true;
    }

    Value infinity_value() const { return at_infinity_[indices_.back()]; }

    // Chosen exponents grouped by class, in slot order.
    std::vector<std::vector<Value>> class_values() const {
        std::vector<std::vector<Value>> out(per_class_.size());
        for (std::size_t i = 0; i < slot_class_.size(); ++i)
            out[slot_class_[i]].push_back(per_class_[slot_class_[i]][indices_[i]]);
        return out;
    }

private:
    const std::vector<std::vector<Value>>& per_class_;
    const std::vector<Value>& at_infinity_;
    std::vector<int> slot_class_;
    std::vector<std::size_t> indices_;
    bool done_ = false;
};

std::vector<Polynomial> clear_operator(const std::vector<RationalFunction>& coeffs) {
    Polynomial common(1);
    for (const auto& c : coeffs)
        if (!c.is_zero()) common = poly_lcm(common, c.denominator());
    std::vector<Polynomial> out;
    for (const auto& c : coeffs)
        out.push_back(c.numerator() * exact_divide(common, c.is_zero() ? Polynomial(1) : c.denominator()));
    return out;
}

// Monic P of degree d with sum_j n_j P^(j) = 0, by an exact linear solve on
// the coefficients.
std::optional<Polynomial> solve_monic_completion(const std::vector<Polynomial>& cleared, long long d) {
    auto apply = [&](const Polynomial& p) {
        Polynomial acc;
        Polynomial derivative = p;
        for (const auto& n : cleared) {
            acc += n * derivative;
            derivative = derivative.derivative();
        }
        return acc;
    };
    Polynomial rhs_poly = -apply(Polynomial::monomial(Rational(1), static_cast<int>(d)));
    if (d == 0) return rhs_poly.is_zero() ? std::optional<Polynomial>(Polynomial(1)) : std::nullopt;

    std::vector<Polynomial> columns;
    for (long long i = 0; i < d; ++i)
        columns.push_back(apply(Polynomial::monomial(Rational(1), static_cast<int>(i))));

    int max_deg = rhs_poly.is_zero() ? 0 : rhs_poly.degree();
    for (const auto& col : columns)
        if (!col.is_zero()) max_deg = std::max(max_deg, col.degree());

    std::vector<std::vector<Rational>> m(max_deg + 1, std::vector<Rational>(static_cast<std::size_t>(d)));
    std::vector<Rational> rhs(max_deg + 1);
    for (int row = 0; row <= max_deg; ++row) {
        for (long long col = 0; col < d; ++col) m[row][static_cast<std::size_t>(col)] = columns[col].coeff(row);
        rhs[row] = rhs_poly.coeff(row);
    }
    auto solution = detail::solve_linear(std::move(m), std::move(rhs));
    if (!solution) return std::nullopt;
    std::vector<Rational> coeffs = std::move(*solution);
    coeffs.push_back(Rational(1));
    return Polynomial(std::move(coeffs));
}

std::vector<RationalFunction> case1_operator(const RationalFunction& r, const RationalFunction& omega0) {
    // P'' + 2 w0 P' + (w0' + w0^2 - r) P.
    return {omega0.derivative() + omega0 * omega0 - r, Rational(2) * omega0, RationalFunction(1)};
}

std::vector<RationalFunction> case2_operator(const RationalFunction& r, const RationalFunction& theta) {
    // P''' + 3t P'' + (3t^2 + 3t' - 4r) P' + (t'' + 3tt' + t^3 - 4rt - 2r') P.
    RationalFunction t1 = theta.derivative();
    return {t1.derivative() + Rational(3) * (theta * t1) + theta * theta * theta - Rational(4) * (r * theta) -
                Rational(2) * r.derivative(),
            Rational(3) * (theta * theta) + Rational(3) * t1 - Rational(4) * r, Rational(3) * theta,
            RationalFunction(1)};
}

template <typename Value>
bool class_values_uniform(const std::vector<std::vector<Value>>& values) {
    for (const auto& cls : values)
        for (const auto& v : cls)
            if (v != cls.front()) return false;
    return true;
}

RationalFunction logderiv_combination(const SingularityProfile& profile,
                                      const std::vector<Rational>& class_weights) {
    RationalFunction acc;
    for (std::size_t i = 0; i < class_weights.size(); ++i) {
        if (class_weights[i].is_zero()) continue;
        const Polynomial& g = profile.pole_classes[i].factor;
        acc += class_weights[i] * RationalFunction(g.derivative(), g);
    }
    return acc;
}

}  // namespace

bool validate_case1(const RationalFunction& r, const RationalFunction& omega) {
    return omega.derivative() + omega * omega == r;
}

bool validate_case2(const RationalFunction& r, const RationalFunction& theta, const Polynomial& P) {
    RationalFunction p(P);
    RationalFunction p1 = p.derivative(), p2 = p1.derivative(), p3 = p2.derivative();
    RationalFunction t1 = theta.derivative(), t2 = t1.derivative();
    RationalFunction value = p3 + Rational(3) * (theta * p2) +
                             (Rational(3) * (theta * theta) + Rational(3) * t1 - Rational(4) * r) * p1 +
                             (t2 + Rational(3) * (theta * t1) + theta * theta * theta - Rational(4) * (r * theta) -
                              Rational(2) * r.derivative()) *
                                 p;
    return value.is_zero();
}

Case1Result case1_search(const RationalFunction& r, const SingularityProfile& profile,
                         const AnalyzeOptions& options) {
    Case1Result out;
    out.status = SearchStatus::Undecided;
    if (r.is_zero()) {
        out.status = SearchStatus::Success;
        out.success = Case1Success{RationalFunction(), 0};
        return out;
    }

    for (const auto& cls : profile.pole_classes)
        if (cls.order > 2) {
            out.notes.push_back("pole of order " + std::to_string(cls.order) +
                                " is outside the implemented case-1 scope");
            return out;
        }
    if (profile.order_at_infinity < 2) {
        out.notes.push_back("order at infinity " + std::to_string(profile.order_at_infinity) +
                            " < 2 is outside the implemented case-1 scope");
        return out;
    }

    // Exponent sets, larger root first so the principal family is tried first.
    std::vector<std::vector<Rational>> per_class(profile.pole_classes.size());
    for (std::size_t i = 0; i < profile.pole_classes.size(); ++i) {
        const PoleClass& cls = profile.pole_classes[i];
        if (cls.order == 1) {
            per_class[i] = {Rational(1), Rational(0)};
            continue;
        }
        if (!cls.delta) {
            out.notes.push_back(cls.delta_irrational
                                    ? "irrational exponent difference at a pole class"
                                    : "non-constant Laurent coefficient over a pole class");
            return out;
        }
        Rational half(1, 2);
        per_class[i] = {half * (Rational(1) + *cls.delta), half * (Rational(1) - *cls.delta)};
        if (per_class[i][0] == per_class[i][1]) per_class[i].pop_back();
    }

    std::vector<Rational> at_infinity;
    {
        auto delta = rational_sqrt(Rational(1) + Rational(4) * infinity_b(r, profile.order_at_infinity));
        if (!delta) {
            out.notes.push_back("irrational exponent difference at infinity");
            return out;
        }
        Rational half(1, 2);
        at_infinity = {half * (Rational(1) + *delta), half * (Rational(1) - *delta)};
        if (at_infinity[0] == at_infinity[1]) at_infinity.pop_back();
    }

    {
        unsigned __int128 total = at_infinity.size();
        for (std::size_t i = 0; i < per_class.size(); ++i)
            for (int k = 0; k < profile.pole_classes[i].root_count; ++k) {
                total *= per_class[i].size();
                if (total > options.max_enumeration) {
                    out.notes.push_back("sign-family enumeration exceeds the search bound");
                    return out;
                }
            }
    }

    bool unresolved_mixed = false;
    for (AssignmentWalker<Rational> walker(profile, per_class, at_infinity); !walker.done(); walker.advance()) {
        std::vector<std::vector<Rational>> values = walker.class_values();
        Rational total(0);
        for (const auto& cls : values)
            for (const auto& e : cls) total += e;
        Rational d = walker.infinity_value() - total;
        if (!d.is_integer() || d.sign() < 0 || !d.numerator().fits_slong_p()) continue;

        if (!class_values_uniform(values)) {
            unresolved_mixed = true;
            continue;
        }
        std::vector<Rational> weights(values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            weights[i] = values[i].empty() ? Rational(0) : values[i].front();
        RationalFunction omega0 = logderiv_combination(profile, weights);
        long long degree = d.numerator().get_si();
        auto completion = solve_monic_completion(clear_operator(case1_operator(r, omega0)), degree);
        if (!completion) continue;
        RationalFunction omega = omega0 + RationalFunction(completion->derivative(), *completion);
        if (!validate_case1(r, omega))
            throw InternalError("case 1: completion solved but the Riccati identity fails");
        out.status = SearchStatus::Success;
        out.success = Case1Success{std::move(omega), degree};
        return out;
    }

    if (unresolved_mixed) {
        out.notes.push_back("a mixed per-root sign family had integral degree; class splitting unavailable");
        out.status = SearchStatus::Undecided;
    } else {
        out.status = SearchStatus::Excluded;
    }
    return out;
}

Case2Result case2_search(const RationalFunction& r, const SingularityProfile& profile,
                         const ExponentData& exponents, const AnalyzeOptions& options) {
    Case2Result out;
    out.status = SearchStatus::Undecided;
    if (!exponents.undecided_classes.empty()) {
        for (int idx : exponents.undecided_classes) {
            const PoleClass& cls = profile.pole_classes[static_cast<std::size_t>(idx)];
            if (cls.order != 2)
                out.notes.push_back("pole class of order " + std::to_string(cls.order) +
                                    " is outside the implemented case-2 scope");
            else if (cls.delta_irrational)
                out.notes.push_back("irrational exponent difference at a pole class");
            else
                out.notes.push_back("no usable exponent set for a pole class");
        }
        return out;
    }
    if (exponents.infinity_undecided) {
        out.notes.push_back("irrational exponent difference at infinity");
        return out;
    }

    out.parity_excludes = parity_excludes_case2(profile, exponents);
    out.methods.push_back("parity");

    auto size = enumeration_size(profile, exponents, options.max_enumeration);
    if (size) {
        out.methods.push_back("exhaustive");
        out.assignments_checked = *size;

        std::map<std::pair<std::vector<std::vector<long long>>, long long>, Case2Candidate> found;
        for (AssignmentWalker<long long> walker(profile, exponents.per_class, exponents.at_infinity);
             !walker.done(); walker.advance()) {
            std::vector<std::vector<long long>> values = walker.class_values();
            long long total = 0;
            for (const auto& cls : values)
                for (long long e : cls) total += e;
            long long e_inf = walker.infinity_value();

            std::optional<long long> d_paper, d_classic;
            long long paper_num = 4 - (total + e_inf);
            if (paper_num % 2 == 0 && paper_num >= 0) d_paper = paper_num / 2;
            long long classic_num = e_inf - total;
            if (classic_num % 2 == 0 && classic_num >= 0) d_classic = classic_num / 2;
            if (!d_paper && !d_classic) continue;

            for (auto& cls : values) std::sort(cls.begin(), cls.end());
            found.emplace(std::make_pair(values, e_inf), Case2Candidate{values, e_inf, d_paper, d_classic});
        }
        for (auto& [key, candidate] : found) out.candidates.push_back(std::move(candidate));

        if (out.parity_excludes && !out.candidates.empty())
            throw InternalError("case 2: parity shortcut contradicts the exhaustive enumeration");
    }

    if (out.parity_excludes) {
        out.status = SearchStatus::Excluded;
        return out;
    }
    if (!size) {
        out.notes.push_back("enumeration exceeds the search bound and parity does not exclude");
        return out;
    }

    bool unresolved_mixed = false;
    for (const Case2Candidate& candidate : out.candidates) {
        bool uniform = true;
        std::vector<Rational> weights(candidate.class_exponents.size());
        for (std::size_t i = 0; i < candidate.class_exponents.size(); ++i) {
            const auto& cls = candidate.class_exponents[i];
            for (long long e : cls)
                if (e != cls.front()) uniform = false;
            weights[i] = cls.empty() ? Rational(0) : Rational(1, 2) * Rational(static_cast<long>(cls.front()));
        }
        if (!uniform) {
            unresolved_mixed = true;
            continue;
        }
        RationalFunction theta = logderiv_combination(profile, weights);
        std::vector<Polynomial> cleared = clear_operator(case2_operator(r, theta));
        for (const char* formula : {"paper", "classic"}) {
            std::optional<long long> d =
                formula == std::string("paper") ? candidate.d_paper : candidate.d_classic;
            if (!d) continue;
            if (formula == std::string("classic") && candidate.d_paper == candidate.d_classic) continue;
            auto completion = solve_monic_completion(cleared, *d);
            if (!completion) continue;
            if (!validate_case2(r, theta, *completion))
                throw InternalError("case 2: completion solved but the auxiliary identity fails");
            out.status = SearchStatus::Success;
            out.success = Case2Success{std::move(theta), std::move(*completion), *d, formula};
            return out;
        }
    }

    if (unresolved_mixed) {
        out.notes.push_back("a mixed per-root assignment had integral degree; class splitting unavailable");
        out.status = SearchStatus::Undecided;
    } else {
        out.status = SearchStatus::Excluded;
    }
    return out;
}

GaloisCertificate analyze(const RationalFunction& r, const std::optional<NVEProblem>& context,
                          const AnalyzeOptions& options) {
    GaloisCertificate cert;
    cert.r = r;
    if (context) {
        if (context->r != r) throw InternalError("analyze: context potential differs from r");
        cert.parameter_n = context->parameter_n;
    }

    if (r.is_zero()) {
        cert.filter.allowed = {1};
        cert.filter.reasons = {"zero potential: the equation has the rational solution y = 1"};
        Case1Result c1;
        c1.status = SearchStatus::Success;
        c1.success = Case1Success{RationalFunction(), 0};
        cert.case1 = std::move(c1);
        Case2Result c2;
        c2.status = SearchStatus::FilteredOut;
        cert.case2 = std::move(c2);
        cert.verdict = Verdict::LiouvillianCase1;
        return cert;
    }

    cert.profile = singularity_profile(r);
    cert.filter = case_filter(*cert.profile);

    if (cert.filter.allowed.count(1)) {
        cert.case1 = case1_search(r, *cert.profile, options);
    } else {
        Case1Result c1;
        c1.status = SearchStatus::FilteredOut;
        cert.case1 = std::move(c1);
    }

    if (cert.filter.allowed.count(2)) {
        cert.exponents = case2_exponents(r, *cert.profile);
        cert.case2 = case2_search(r, *cert.profile, *cert.exponents, options);
    } else {
        Case2Result c2;
        c2.status = SearchStatus::FilteredOut;
        cert.case2 = std::move(c2);
    }

    if (cert.case1->status == SearchStatus::Success) {
        cert.verdict = Verdict::LiouvillianCase1;
    } else if (cert.case2->status == SearchStatus::Success) {
        cert.verdict = Verdict::LiouvillianCase2;
    } else if (cert.case1->status == SearchStatus::Undecided || cert.case2->status == SearchStatus::Undecided) {
        cert.verdict = Verdict::Undecided;
    } else if (cert.filter.allowed.count(3)) {
        cert.verdict = Verdict::Case3PossibleUnresolved;
    } else {
        cert.verdict = Verdict::SL2;
    }

    if (cert.verdict == Verdict::SL2 && cert.parameter_n) {
        std::string text;
        if (r == RationalFunction::variable()) text += "Airy equation; ";
        text += "the differential Galois group of the normal variational equation is SL(2,C); its identity "
                "component is not abelian, so no additional meromorphic first integral exists (parameter n = " +
                std::to_string(*cert.parameter_n) + ")";
        cert.conclusion = std::move(text);
    }
    return cert;
}

}  // namespace p2g
