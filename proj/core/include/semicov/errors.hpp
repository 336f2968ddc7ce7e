#pragma once

#include <stdexcept>
#include <string>

namespace semicov {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Numerical semigroup construction and queries.

class EmptyInputError final : public Error {
public:
  using Error::Error;
};

class NotCoprimeError final : public Error {
public:
  using Error::Error;
};

/// Explicit input (element list, gap list, Apery entries) does not describe a
/// numerical semigroup.
class NotASemigroupError final : public Error {
public:
  using Error::Error;
};

class FrobeniusTooLargeError final : public Error {
public:
  using Error::Error;
};

class NotAnElementError final : public Error {
public:
  using Error::Error;
};

class NotSpecialGapError final : public Error {
public:
  using Error::Error;
};

class NotMinimalGeneratorError final : public Error {
public:
  using Error::Error;
};

/// Raised by operations that are undefined for the full set of naturals.
class TrivialSemigroupError final : public Error {
public:
  using Error::Error;
};

class NotMEDError final : public Error {
public:
  using Error::Error;
};

// Covariety validation and queries.

class NoMinimumError final : public Error {
public:
  using Error::Error;
};

class NotIntersectionClosedError final : public Error {
public:
  using Error::Error;
};

class NotMultiplicityRemovalClosedError final : public Error {
public:
  using Error::Error;
};

class NotACSetError final : public Error {
public:
  using Error::Error;
};

class NotMemberError final : public Error {
public:
  using Error::Error;
};

class FrobeniusTooSmallError final : public Error {
public:
  using Error::Error;
};

class EmptyFamilyError final : public Error {
public:
  using Error::Error;
};

// Families with a fixed Frobenius number.

class InvalidFError final : public Error {
public:
  using Error::Error;
};

class NotAnAFSetError final : public Error {
public:
  using Error::Error;
};

class WrongFrobeniusError final : public Error {
public:
  using Error::Error;
};

class NotRank1FormError final : public Error {
public:
  using Error::Error;
};

class NotMaxRankError final : public Error {
public:
  using Error::Error;
};

// Brute-force oracle.

class TooLargeError final : public Error {
public:
  using Error::Error;
};

class DeltaNotMinimumError final : public Error {
public:
  using Error::Error;
};

}  // namespace semicov
