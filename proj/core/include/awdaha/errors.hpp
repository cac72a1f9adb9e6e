#pragma once

#include <stdexcept>
#include <string>

namespace awdaha {

// Every failure the toolkit can signal deliberately.  Verification
// *outcomes* (a relation that does not hold, a criterion that is false)
// are never exceptions; they travel as report entries.  Exceptions are
// reserved for requests that cannot be carried out at all.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// specialize() at a q where the denominator vanishes
struct DenominatorVanishes : Error {
    using Error::Error;
};

// q in {0, 1, -1}: the only rationals that are zero or roots of unity
struct ForbiddenQ : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct Singular : Error {
    Singular() : Error("matrix is singular") {}
};

struct InvalidSpec : Error {
    using Error::Error;
};

struct UnknownSymbol : Error {
    using Error::Error;
};

// composition series needed an eigenvector but the spectrum does not
// split over the working field and no basis-vector spin-up helped
struct NonSplittingSpectrum : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct UnknownPoint : Error {
    using Error::Error;
};

}  // namespace awdaha
