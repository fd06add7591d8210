#pragma once
#include <stdexcept>
#include <string>

namespace hirota {

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define HIROTA_ERROR(Name)                       \
  struct Name : NumericError {                   \
    explicit Name(const std::string& msg = #Name) : NumericError(msg) {} \
  }

HIROTA_ERROR(ZeroArgument);
HIROTA_ERROR(CutAmbiguity);
HIROTA_ERROR(NearBranchPoint);
HIROTA_ERROR(BranchPointEigenvector);
HIROTA_ERROR(NonremovableSingularity);
HIROTA_ERROR(ZeroEigenvector);
HIROTA_ERROR(SingularGram);
HIROTA_ERROR(PoleHit);
HIROTA_ERROR(Overflow);
HIROTA_ERROR(BranchPointDegeneracy);
HIROTA_ERROR(NonConvergence);
HIROTA_ERROR(StationaryPhase);
HIROTA_ERROR(TieBreak);
HIROTA_ERROR(GridTooSparse);
HIROTA_ERROR(Blowup);

#undef HIROTA_ERROR

}  // namespace hirota
