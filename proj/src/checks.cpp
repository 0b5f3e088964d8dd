#include "ppl/checks.hpp"

#include <random>
#include <stdexcept>
#include <utility>

#include "ppl/combinatorics.hpp"
#include "ppl/construct.hpp"
#include "ppl/pseudolog.hpp"
#include "ppl/series.hpp"

namespace ppl::checks {

namespace {

/// Accumulates a report, keeping only the first (minimal) failure.
class CheckRun {
public:
    CheckRun(std::string id, std::size_t n_min, std::size_t n_max, std::vector<Rational> points = {}) {
        report_.check_id = std::move(id);
        report_.n_min = n_min;
        report_.n_max = n_max;
        report_.sample_points = std::move(points);
    }

    void expect(bool ok, std::size_t n, std::optional<Rational> z, const std::string& expected,
                const std::string& actual) {
        if (ok || !report_.passed) return;
        report_.passed = false;
        report_.first_failure = FailureWitness{n, std::move(z), expected, actual};
    }

    void expect_eq(const Rational& expected, const Rational& actual, std::size_t n,
                   std::optional<Rational> z = std::nullopt) {
        expect(expected == actual, n, std::move(z), expected.str(), actual.str());
    }

    CheckReport finish() { return std::move(report_); }

private:
    CheckReport report_;
};

std::string pseudolog_str(const PolyPseudoLog& f) { return f.str(); }

/// Small random integer polynomial; uses raw mt19937 words so the sequence
/// is identical on every platform.
RationalPolynomial random_int_polynomial(std::mt19937& rng, std::size_t degree_max) {
    std::size_t deg = rng() % (degree_max + 1);
    std::vector<Rational> v(deg + 1);
    for (auto& c : v) c = Rational(static_cast<long>(rng() % 19) - 9);
    return RationalPolynomial(std::move(v));
}

Rational random_sample_point(std::mt19937& rng) {
    while (true) {
        long num = static_cast<long>(rng() % 19) - 9;
        long den = static_cast<long>(rng() % 9) + 1;
        Rational z(num, den);
        if (z != Rational(1)) return z;
    }
}

}

CheckOptions CheckOptions::with_randomized_points(unsigned s) const {
    CheckOptions o = *this;
    o.seed = s;
    std::mt19937 rng(s);
    for (auto& z : o.sample_points) z = random_sample_point(rng);
    for (auto& z : o.gf_points) z = random_sample_point(rng);
    return o;
}

Json report_to_json(const CheckReport& r) {
    Json j;
    j["check_id"] = r.check_id;
    j["order_range"] = {r.n_min, r.n_max};
    Json pts = Json::array();
    for (const auto& z : r.sample_points) pts.push_back(z.str());
    j["sample_points"] = std::move(pts);
    j["status"] = r.passed ? "pass" : "fail";
    if (r.first_failure) {
        const auto& w = *r.first_failure;
        Json wj;
        wj["n"] = w.n;
        wj["z"] = w.z ? Json(w.z->str()) : Json(nullptr);
        wj["expected"] = w.expected;
        wj["actual"] = w.actual;
        j["first_failure"] = std::move(wj);
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

CheckReport report_from_json(const Json& j) {
    CheckReport r;
    r.check_id = j.at("check_id").get<std::string>();
    r.n_min = j.at("order_range").at(0).get<std::size_t>();
    r.n_max = j.at("order_range").at(1).get<std::size_t>();
    for (const auto& p : j.at("sample_points")) r.sample_points.push_back(Rational::parse(p.get<std::string>()));
    std::string status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail")
        throw std::invalid_argument("CheckReport: bad status '" + status + "'");
    r.passed = status == "pass";
    if (j.contains("first_failure") && !j.at("first_failure").is_null()) {
        const Json& wj = j.at("first_failure");
        FailureWitness w;
        w.n = wj.at("n").get<std::size_t>();
        if (!wj.at("z").is_null()) w.z = Rational::parse(wj.at("z").get<std::string>());
        w.expected = wj.at("expected").get<std::string>();
        w.actual = wj.at("actual").get<std::string>();
        r.first_failure = std::move(w);
    }
    if (!r.passed && !r.first_failure)
        throw std::invalid_argument("CheckReport: failed report without witness");
    return r;
}

CheckReport check_recurrence(std::size_t n_max) {
    CheckRun run("recurrence", 0, n_max);
    for (std::size_t n = 0; n + 1 <= n_max; ++n) {
        PolyPseudoLog expected = canonical(n + 1);
        PolyPseudoLog actual = euler_operator(canonical(n));
        run.expect(expected == actual, n, std::nullopt, pseudolog_str(expected), pseudolog_str(actual));
    }
    return run.finish();
}

CheckReport check_inversion(std::size_t n_max) {
    CheckRun run("inversion", 1, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        PolyPseudoLog base = canonical(n);
        PolyPseudoLog expected = n % 2 == 1 ? base : base.scaled(-1);  // (-1)^(n+1)
        PolyPseudoLog actual = substitute_reciprocal(base);
        run.expect(expected == actual, n, std::nullopt, pseudolog_str(expected), pseudolog_str(actual));
    }
    return run.finish();
}

CheckReport check_duplication(std::size_t n_max) {
    CheckRun run("duplication", 0, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        PolyPseudoLog f = canonical(n);
        RationalFunction lhs = RationalFunction::from(f) + compose_neg(f);
        RationalFunction rhs = compose_square(f).scaled(ipow(Int(2), n + 1));
        run.expect(lhs == rhs, n, std::nullopt,
                   polynomial_str(rhs.num) + " over " + polynomial_str(rhs.den),
                   polynomial_str(lhs.num) + " over " + polynomial_str(lhs.den));
    }
    return run.finish();
}

CheckReport check_special_values(std::size_t n_max) {
    CheckRun run("special_values", 1, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational direct = eval_exact(n, Rational(-1));
        Rational via_bernoulli = special_value_neg1(n);
        run.expect_eq(direct, via_bernoulli, n, Rational(-1));
        if (n % 2 == 0) run.expect_eq(Rational(0), via_bernoulli, n, Rational(-1));
    }
    return run.finish();
}

CheckReport check_pole_and_factorization(std::size_t n_max) {
    static const IntPolynomial one_plus_z(std::vector<Int>{1, 1});
    CheckRun run("pole_factorization", 0, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        IntPolynomial num = canonical(n).numerator();
        run.expect(num.evaluate(Int(1)) != 0, n, std::nullopt, "numerator nonzero at z=1",
                   polynomial_str(num));
        run.expect(num.coeff(0) == 0, n, std::nullopt, "zero constant term", polynomial_str(num));
        if (n >= 2 && n % 2 == 0)
            run.expect(num.is_divisible_by(one_plus_z), n, std::nullopt,
                       "numerator divisible by 1+z", polynomial_str(num));
    }
    return run.finish();
}

CheckReport check_palindromy(std::size_t n_max) {
    CheckRun run("palindromy", 1, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        IntPolynomial num = canonical(n).numerator();
        bool ok = true;
        for (std::size_t j = 1; j <= n; ++j)
            if (num.coeff(j) != num.coeff(n + 1 - j)) ok = false;
        run.expect(ok, n, std::nullopt, "palindromic coefficients", polynomial_str(num));
    }
    return run.finish();
}

CheckReport check_method_agreement(std::size_t n_max_symbolic, std::size_t n_max_pointwise,
                                   const std::vector<Rational>& sample_points) {
    CheckRun run("method_agreement", 1, n_max_symbolic, sample_points);
    for (std::size_t n = 1; n <= n_max_symbolic; ++n) {
        PolyPseudoLog expected = canonical(n);
        for (ConstructionMethod m : kAllConstructionMethods) {
            PolyPseudoLog actual = construct(m, n);
            run.expect(expected == actual, n, std::nullopt, pseudolog_str(expected),
                       to_string(m) + ": " + pseudolog_str(actual));
        }
    }
    for (std::size_t n = 1; n <= n_max_pointwise; ++n) {
        for (const Rational& z : sample_points) {
            Rational expected = eval_exact(n, z);
            for (DoubleSumVariant v : {DoubleSumVariant::A, DoubleSumVariant::B, DoubleSumVariant::C}) {
                Rational actual = eval_double_sum(v, n, z);
                run.expect(expected == actual, n, z, expected.str(),
                           "double_sum_" + to_string(v) + ": " + actual.str());
            }
        }
    }
    return run.finish();
}

namespace {

void expand_operator_on(CheckRun& run, const RationalPolynomial& psi, std::size_t n_max,
                        std::size_t series_order) {
    // derivatives Psi^(k) once per polynomial
    std::vector<RationalPolynomial> deriv{psi};
    for (std::size_t k = 1; k <= n_max; ++k) deriv.push_back(deriv.back().derivative());

    RationalSeries et = exp_series(series_order);
    RationalSeries composed = evaluate_at(psi, et);  // Psi(e^t)

    Rational n_factorial(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        n_factorial *= Rational(static_cast<long>(n));

        // polynomial identity: (z d/dz)^n Psi = sum_k z^k S(n,k) Psi^(k)
        RationalPolynomial lhs = apply_euler_operator_n(psi, n);
        RationalPolynomial rhs;
        for (std::size_t k = 1; k <= n; ++k)
            rhs += (RationalPolynomial::monomial(Rational(1), k) * deriv[k]).scaled(Rational(stirling2(n, k)));
        run.expect(lhs == rhs, n, std::nullopt, polynomial_str(lhs, "z"), polynomial_str(rhs, "z"));

        // t-series identity: d^n/dt^n Psi(e^t)|_0 = sum_k S(n,k) Psi^(k)(1)
        Rational lhs_t = composed.coeff(n) * n_factorial;
        Rational rhs_t(0);
        for (std::size_t k = 1; k <= n; ++k)
            rhs_t += Rational(stirling2(n, k)) * deriv[k].evaluate(Rational(1));
        run.expect_eq(lhs_t, rhs_t, n);
    }
}

}

CheckReport check_operator_expansions(std::size_t n_max, std::size_t degree_max, unsigned seed,
                                      std::size_t random_trials) {
    CheckRun run("operator_expansions", 1, n_max);
    for (std::size_t m = 0; m <= degree_max; ++m)
        expand_operator_on(run, RationalPolynomial::monomial(Rational(1), m), n_max, n_max);
    std::mt19937 rng(seed);
    for (std::size_t t = 0; t < random_trials; ++t)
        expand_operator_on(run, random_int_polynomial(rng, degree_max), n_max, n_max);
    return run.finish();
}

CheckReport check_gf(std::size_t truncation_order, const std::vector<Rational>& sample_points) {
    CheckRun run("gf", 0, truncation_order, sample_points);
    for (const Rational& z : sample_points) {
        Rational li0 = eval_exact(0, z);
        for (GFKernel kernel : kAllGFKernels) {
            std::vector<Rational> c = gf_taylor(kernel, z, truncation_order);
            Rational n_factorial(1);
            for (std::size_t n = 0; n <= truncation_order; ++n) {
                if (n > 0) n_factorial *= Rational(static_cast<long>(n));
                Rational actual = c[n] * n_factorial;
                std::optional<Rational> expected;
                switch (kernel) {
                    case GFKernel::Ka:
                        expected = n == 0 ? Rational(1) + li0 : eval_exact(n, z);
                        break;
                    case GFKernel::Kb:
                        expected = n % 2 == 0 ? eval_exact(n, z) : -eval_exact(n, z);
                        break;
                    case GFKernel::Kc:
                        expected = n == 0 ? Rational(1) + li0
                                          : (n % 2 == 0 ? eval_exact(n, z) : -eval_exact(n, z));
                        break;
                    case GFKernel::Kd:
                        expected = n == 0 ? Rational(1, 2) + li0 : eval_exact(n, z);
                        break;
                    case GFKernel::KP:
                        if (n >= 1) expected = eval_exact(n, z);
                        break;
                }
                if (!expected) continue;
                run.expect(*expected == actual, n, z, expected->str(),
                           to_string(kernel) + ": " + actual.str());
            }
        }
    }
    return run.finish();
}

CheckReport check_series_oracle() {
    const Rational z(1, 2);
    const Rational tolerance(Int(1), ipow(Int(10), 9));
    const unsigned long term_counts[] = {25, 50, 100, 200};
    CheckRun run("series_oracle", 0, 10, {z});
    for (std::size_t n = 0; n <= 10; ++n) {
        Rational exact = eval_exact(n, z);
        std::optional<Rational> prev_err;
        for (unsigned long terms : term_counts) {
            Rational err = (exact - eval_series_oracle(n, z, terms)).abs();
            if (prev_err)
                run.expect(err < *prev_err, n, z, "error below " + prev_err->str(),
                           "error " + err.str() + " at " + std::to_string(terms) + " terms");
            prev_err = err;
        }
        run.expect(*prev_err < tolerance, n, z, "error below " + tolerance.str(),
                   "error " + prev_err->str() + " at 200 terms");
    }
    return run.finish();
}

const std::vector<std::string>& all_check_ids() {
    static const std::vector<std::string> ids = {
        "recurrence",        "inversion", "duplication",          "special_values",
        "pole_factorization", "palindromy", "method_agreement",   "operator_expansions",
        "gf",                "series_oracle",
    };
    return ids;
}

CheckReport run_check(const std::string& id, const CheckOptions& opts) {
    if (id == "recurrence") return check_recurrence(opts.n_max_symbolic);
    if (id == "inversion") return check_inversion(opts.n_max_symbolic);
    if (id == "duplication") return check_duplication(opts.n_max_symbolic);
    if (id == "special_values") return check_special_values(opts.n_max_symbolic);
    if (id == "pole_factorization") return check_pole_and_factorization(opts.n_max_symbolic);
    if (id == "palindromy") return check_palindromy(opts.n_max_symbolic);
    if (id == "method_agreement")
        return check_method_agreement(opts.n_max_methods, opts.n_max_pointwise, opts.sample_points);
    if (id == "operator_expansions")
        return check_operator_expansions(opts.operator_n_max, opts.operator_degree_max, opts.seed,
                                         opts.random_polynomials);
    if (id == "gf") return check_gf(opts.gf_truncation, opts.gf_points);
    if (id == "series_oracle") return check_series_oracle();
    throw std::invalid_argument("unknown check id '" + id + "'");
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const CheckOptions& opts) {
    std::vector<CheckReport> out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back(run_check(id, opts));
    return out;
}

}
