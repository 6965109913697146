#pragma once

#include <stdexcept>
#include <string>

namespace sdvisc {

// Base class for all library errors so call sites can catch one type.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SDVISC_DEFINE_ERROR(Name)                                 \
    class Name : public Error {                                   \
      public:                                                     \
        explicit Name(const std::string& what) : Error(what) {}   \
    }

SDVISC_DEFINE_ERROR(ImproperTf);
SDVISC_DEFINE_ERROR(DegenerateDenominator);
SDVISC_DEFINE_ERROR(InconsistentK);
SDVISC_DEFINE_ERROR(RootFindingFailed);
SDVISC_DEFINE_ERROR(ZeroImpedance);
SDVISC_DEFINE_ERROR(ModeDisabled);
SDVISC_DEFINE_ERROR(ClearWithoutFault);
SDVISC_DEFINE_ERROR(UnknownTurbine);
SDVISC_DEFINE_ERROR(ViscDisabled);
SDVISC_DEFINE_ERROR(NoLink);
SDVISC_DEFINE_ERROR(NoBackupConfigured);
SDVISC_DEFINE_ERROR(ParseError);
SDVISC_DEFINE_ERROR(ValidationError);
SDVISC_DEFINE_ERROR(ConfigError);
SDVISC_DEFINE_ERROR(SeriesTooShort);

#undef SDVISC_DEFINE_ERROR

}  // namespace sdvisc
