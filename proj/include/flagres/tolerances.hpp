#pragma once

namespace flagres {

/// Numerical thresholds shared by every module. All values lie in (0, 1).
struct Tolerances {
    double det = 1e-9;       ///< |det g - 1| for group elements
    double unitary = 1e-10;  ///< ||k^* k - I||_F for the compact Iwasawa factor
    double recon = 1e-10;    ///< ||k a n - g||_F relative to ||g||_F
    double coset = 1e-8;     ///< structural zeros in membership and coset tests
    double value = 1e-9;     ///< entrywise agreement of identities
};

/// Factorization refuses matrices whose Frobenius condition number exceeds this.
inline constexpr double kMaxCondition = 1e12;

}  // namespace flagres
