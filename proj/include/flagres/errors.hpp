#pragma once

#include <stdexcept>
#include <string>

namespace flagres {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// Argument outside its domain: root index out of range, non-positive torus parameter, det != 1, ...
class DomainError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// Non-finite input, det-1 violation, conditioning guard or a failed
/// post-factorization invariant.
class FactorizationError : public Error {
public:
    using Error::Error;
};

/// A matrix was required to lie in a subgroup (B, K, P_s, ...) and does not.
class MembershipError : public Error {
public:
    using Error::Error;
};

class NonReducedWordError : public Error {
public:
    using Error::Error;
};

/// The point lies outside the big cell of some minimal parabolic along the sweep.
class NonGenericPointError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace flagres
