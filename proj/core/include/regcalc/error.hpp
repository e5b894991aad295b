#pragma once

#include <stdexcept>
#include <string>

namespace regcalc {

// Root of every error the library raises. `kind()` is a stable tag used by
// the CLI and by tests that need to tell error categories apart.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define REGCALC_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  }

REGCALC_DEFINE_ERROR(DomainError);
REGCALC_DEFINE_ERROR(InvalidExponents);
REGCALC_DEFINE_ERROR(NotInZS);
REGCALC_DEFINE_ERROR(SizeLimit);
REGCALC_DEFINE_ERROR(OrderOverflow);
REGCALC_DEFINE_ERROR(FamilyMismatch);
REGCALC_DEFINE_ERROR(OrderedRequired);
REGCALC_DEFINE_ERROR(NotAbsorbing);
REGCALC_DEFINE_ERROR(NonConvergent);
REGCALC_DEFINE_ERROR(FormatError);

#undef REGCALC_DEFINE_ERROR

}  // namespace regcalc
