#ifndef PPL_OUTPUT_HPP
#define PPL_OUTPUT_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ppl/pseudolog.hpp"
#include "ppl/rational.hpp"

namespace ppl::cli {

/// Every command renders to all three; json is the default.
enum class OutputFormat { Json, Csv, Latex };

std::optional<OutputFormat> parse_format(const std::string& s);

/// Exit codes shared by all commands: 0 success, 1 mathematical failure
/// (pole or failed check), 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMathFailure = 1;
inline constexpr int kExitUsage = 2;

/// Canonical table of Li_{-n} for n = 0..n_max: numerator coefficients and
/// denominator exponent per row.
int cmd_table(std::size_t n_max, OutputFormat fmt, std::ostream& out, std::ostream& err);

/// Exact evaluation at a rational literal "p/q"; optional correctly rounded
/// decimal with the given number of digits after the point.
int cmd_eval(std::size_t n, const std::string& z_literal, OutputFormat fmt,
             std::optional<unsigned> approx_digits, std::ostream& out, std::ostream& err);

/// Triangle (stirling2 | eulerian | tangent) or Bernoulli list up to n_max.
int cmd_numbers(const std::string& kind, std::size_t n_max, OutputFormat fmt, std::ostream& out,
                std::ostream& err);

struct VerifyParams {
    std::optional<std::size_t> range;   // overrides per-check default order ranges
    std::vector<std::string> checks;    // empty = full battery
    std::optional<unsigned> seed;       // switches to randomized sample points
    OutputFormat fmt = OutputFormat::Json;
};

/// Runs the identity battery and streams one report per check; exit status
/// is kExitOk only when every selected check passes.
int cmd_verify(const VerifyParams& params, std::ostream& out, std::ostream& err);

/// Decimal rendering of an exact rational with `digits` digits after the
/// point, rounded to nearest (ties away from zero).
std::string decimal_approx(const Rational& value, unsigned digits);

/// One display line in the factored style: the numerator is shown as
/// z (...) for odd orders and z (1+z) (...) for even orders >= 2.
std::string latex_pseudolog_line(const PolyPseudoLog& f);

}

#endif
