#pragma once

#include <stdexcept>
#include <string>

namespace qpb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QPB_DEFINE_ERROR(Name)               \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

// exactnum
QPB_DEFINE_ERROR(SubstituteAtPole);
QPB_DEFINE_ERROR(NonSquare);
QPB_DEFINE_ERROR(DimensionTooLarge);
QPB_DEFINE_ERROR(DivisionUndefined);
QPB_DEFINE_ERROR(InexactDivision);

// qkernels / families
QPB_DEFINE_ERROR(IndexOutOfRange);
QPB_DEFINE_ERROR(NotPolynomial);
QPB_DEFINE_ERROR(RowTooShort);

// objects / rook
QPB_DEFINE_ERROR(SizeTooLarge);
QPB_DEFINE_ERROR(DimensionMismatch);
QPB_DEFINE_ERROR(InvalidPlacement);

// verify
QPB_DEFINE_ERROR(UnknownSuite);
QPB_DEFINE_ERROR(OutOfRange);
QPB_DEFINE_ERROR(ZeroQ);

// oeis
QPB_DEFINE_ERROR(MalformedId);
QPB_DEFINE_ERROR(NotFound);
QPB_DEFINE_ERROR(NetworkError);

#undef QPB_DEFINE_ERROR

}  // namespace qpb
