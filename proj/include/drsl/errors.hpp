#pragma once

#include <stdexcept>
#include <string>

namespace drsl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Projection onto the sphere is set-valued at the origin; we refuse to pick.
class SingularPoint : public Error {
public:
    SingularPoint() : Error("singular point: projection onto the sphere is undefined at the origin") {}
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t got, std::size_t expected)
        : Error("dimension mismatch: got " + std::to_string(got) + ", expected " +
                std::to_string(expected)) {}
};

class UncertifiedRegime : public Error {
public:
    using Error::Error;
    UncertifiedRegime() : Error("operation only valid for alpha = 1/sqrt(2), N = 2") {}
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("zero polynomial has no finite root count") {}
};

class NotExactlyOneRoot : public Error {
public:
    explicit NotExactlyOneRoot(long count)
        : Error("expected exactly one root in the interval, found " + std::to_string(count)) {}
};

} // namespace drsl
