#ifndef EVENGRAPHS_BIGCOUNT_HPP
#define EVENGRAPHS_BIGCOUNT_HPP

#include <gmpxx.h>
#include <stdexcept>

namespace evengraphs {

// Arbitrary-precision nonnegative integer used for all counts.
using BigCount = mpz_class;

// Raised when an internal identity fails (inexact division, theorem
// violation); always indicates an implementation bug, not bad input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Raised when a request exceeds a configured enumeration cap.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline BigCount factorial(int n) {
    BigCount f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// Exact quotient a / b; throws if b does not divide a.
inline BigCount exact_quotient(const BigCount& a, const BigCount& b, const char* what) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw consistency_error(what);
    BigCount q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace evengraphs

#endif // EVENGRAPHS_BIGCOUNT_HPP
