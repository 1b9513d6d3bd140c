#pragma once

#include <stdexcept>
#include <string>

namespace varch {

// Root of the library's exception hierarchy. Every failure mode that a
// caller can trigger with bad (but well-typed) input derives from this.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define VARCH_ERROR_CLASS(Name)                                    \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(what) {}        \
  }

// Malformed external input (JSON documents, rational literals, CLI values).
VARCH_ERROR_CLASS(InputError);

// exact algebra
VARCH_ERROR_CLASS(DivisionByZero);
VARCH_ERROR_CLASS(NotDivisible);
VARCH_ERROR_CLASS(MissingAssignment);

// sign vectors and arrangements
VARCH_ERROR_CLASS(LengthMismatch);
VARCH_ERROR_CLASS(CapExceeded);
VARCH_ERROR_CLASS(ModeError);
VARCH_ERROR_CLASS(NotCentral);
VARCH_ERROR_CLASS(OppositeMissing);
VARCH_ERROR_CLASS(NotNested);
VARCH_ERROR_CLASS(TildeMissing);
VARCH_ERROR_CLASS(EmptyApartment);
VARCH_ERROR_CLASS(UnknownFlat);
VARCH_ERROR_CLASS(NotChamber);

// weights, multiplicities, linear systems
VARCH_ERROR_CLASS(ChamberHasNoWeight);
VARCH_ERROR_CLASS(MultiplicityInconsistent);
VARCH_ERROR_CLASS(DegenerateAssignment);
VARCH_ERROR_CLASS(PoleEncountered);

#undef VARCH_ERROR_CLASS

}  // namespace varch
