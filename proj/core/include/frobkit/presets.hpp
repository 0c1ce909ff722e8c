#pragma once

#include <string>
#include <vector>

#include "frobkit/series.hpp"

namespace frobkit {

// A Frobenius lift with a compatible Eisenstein polynomial.
struct Preset {
  std::string name;
  std::string description;
  FrobLift f;
  EisensteinE E;
};

// classical, cyclotomic, lubin-tate, twisted.
const std::vector<std::string>& preset_names();

// Coefficients are known to `prec` uniformizer digits. Throws DomainError for
// an unknown name.
Preset make_preset(const std::string& name, const FieldPtr& field, int prec);

}  // namespace frobkit
