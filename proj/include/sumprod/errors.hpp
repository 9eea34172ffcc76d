#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sumprod {

/// Base class for all workbench errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Modulus failed the primality check.
class CompositeModulus : public Error {
public:
    explicit CompositeModulus(const std::string& what) : Error(what) {}
};

/// Operands belong to fields with different moduli.
class FieldMismatch : public Error {
public:
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

/// Multiplicative inverse of zero requested.
class ZeroInverse : public Error {
public:
    explicit ZeroInverse(const std::string& what) : Error(what) {}
};

/// Ratio-set denominator set contains zero.
class ZeroDenominator : public Error {
public:
    explicit ZeroDenominator(const std::string& what) : Error(what) {}
};

/// Operation requires a nonempty set.
class EmptySet : public Error {
public:
    explicit EmptySet(const std::string& what) : Error(what) {}
};

/// Operation requires a subset of F* but the input contains zero.
class ZeroInSet : public Error {
public:
    explicit ZeroInSet(const std::string& what) : Error(what) {}
};

/// Operation requires at least two elements.
class SingletonSet : public Error {
public:
    explicit SingletonSet(const std::string& what) : Error(what) {}
};

/// B is not contained in the subgroup it must live in.
class NotSubsetOfGroup : public Error {
public:
    explicit NotSubsetOfGroup(const std::string& what) : Error(what) {}
};

/// The map (a,b) -> a + b*xi is injective on A^2; no collision exists.
class NoCollision : public Error {
public:
    explicit NoCollision(const std::string& what) : Error(what) {}
};

/// Set too small for the requested hypothesis (|A|^2 <= q).
class TooSmall : public Error {
public:
    explicit TooSmall(const std::string& what) : Error(what) {}
};

/// A stated hypothesis of the verified statement does not hold.
class HypothesisNotMet : public Error {
public:
    explicit HypothesisNotMet(const std::string& what) : Error(what) {}
};

/// Requested scan exceeds the feasibility envelope or visit budget.
class ScanTooLarge : public Error {
public:
    explicit ScanTooLarge(const std::string& what) : Error(what) {}
};

/// Set-spec text failed to parse; `position` is the byte offset of the fault.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace sumprod
