#pragma once

#include <stdexcept>
#include <string>

namespace permudiag {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define PERMUDIAG_ERROR(Name)                  \
  struct Name : Error {                        \
    explicit Name(const std::string& msg = #Name) : Error(msg) {} \
  }

PERMUDIAG_ERROR(NotAPermutation);
PERMUDIAG_ERROR(PatternLongerThanWord);
PERMUDIAG_ERROR(IdentityHasNoDescent);
PERMUDIAG_ERROR(IndexOutOfRange);
PERMUDIAG_ERROR(CannotDeleteFromSingleton);
PERMUDIAG_ERROR(NotHeavyReductionPair);
PERMUDIAG_ERROR(SizeMismatch);
PERMUDIAG_ERROR(SizeBound);
PERMUDIAG_ERROR(NotApplicable);
PERMUDIAG_ERROR(NotFromPermutation);
PERMUDIAG_ERROR(NotAnInversionGraph);
PERMUDIAG_ERROR(BoardTooLarge);
PERMUDIAG_ERROR(BoardMismatch);
PERMUDIAG_ERROR(NotGasharovReiner);
PERMUDIAG_ERROR(SearchTooLarge);
PERMUDIAG_ERROR(NonDivisible);
PERMUDIAG_ERROR(NotPrime);
PERMUDIAG_ERROR(NoConsistentConvention);

#undef PERMUDIAG_ERROR

}  // namespace permudiag
