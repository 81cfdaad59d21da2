#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lzeta/gaussian.hpp"
#include "lzeta/table.hpp"

namespace lzeta {

/// Canonical zeta method id for zeta(s): resolves aliases ("corollary",
/// "root7_p", ...) and "auto", and checks the method against s mod 4.
/// Throws InvalidArgument for unknown or incompatible methods.
std::string canonical_zeta_method(std::string_view method, long s);

/// Methods available for zeta(s), canonical ids.
std::vector<std::string> zeta_methods(long s);

/// zeta(4k-1): corollary2, root3, root7, root15.
CoefficientTable coeffs_4km1(std::string_view method, long k);
/// zeta(4k+1): corollary3, p2, p3, p5, root3, root7, root15.
CoefficientTable coeffs_4kp1(std::string_view method, long k);
/// Dispatch on s mod 4.
CoefficientTable coeffs_zeta(long s, std::string_view method);

/// Bernoulli-weighted sum that becomes the pi^(4k+1) coefficient of the
/// p2/p3/p5 formulas, before the imaginary part is dropped. Exact.
GaussianRational gaussian_pi_weight(std::string_view method, long k);

/// pi^power from example62 (power = 4k+1, k >= 0), example63 (power = 4k-1),
/// prop_pi5 (p3 with p5), prop_pi3 (corollary2 with root7) or p5_root15.
CoefficientTable coeffs_pi(std::string_view method, long power);
std::vector<std::string> pi_methods(long power);

/// log p for p in {2, 3, 5}: a pi term plus Lambert series at s = -1.
CoefficientTable coeffs_log(long p);

/// Removes zeta between two tables for the same zeta(n):
/// pi^n = (rest_second - rest_first) / (alpha_first - alpha_second).
CoefficientTable eliminate_zeta(const CoefficientTable& first, const CoefficientTable& second,
                                std::string method_id);

/// zeta(4k+1) for p2 or p3 rederived by exact elimination over the
/// transformation and multisection relations, independent of the closed forms.
CoefficientTable derive_zeta_by_elimination(std::string_view method, long k);

}  // namespace lzeta
