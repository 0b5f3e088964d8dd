#ifndef PPL_ERRORS_HPP
#define PPL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ppl {

/// Evaluation at z = 1, where Li_{-n} has a pole of order n+1.
struct PoleAtUnity : std::domain_error {
    explicit PoleAtUnity(const std::string& what) : std::domain_error(what) {}
};

/// The Gaussian-rational construction route produced a nonzero imaginary
/// part.  The imaginary parts cancel identically in exact arithmetic, so
/// this signals an implementation bug, never bad input.
struct NonVanishingImaginaryPart : std::logic_error {
    explicit NonVanishingImaginaryPart(const std::string& what) : std::logic_error(what) {}
};

}

#endif
