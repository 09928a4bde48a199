#pragma once

#include <string>
#include <vector>

#include "sdual/numeric.hpp"

namespace sdual {

/// One known coefficient of a partition-series Z_n in the counting variable q.
struct ZCoefficient {
  int power;
  Int coefficient;
  std::string provenance;  // literature citation for the value
};

/// Reference data for one series: index n, display label, the known
/// coefficients (absent powers are not asserted to vanish), and a free-form
/// note for series where only qualitative facts are on record.
struct ZSeries {
  int index;
  std::string label;
  std::vector<ZCoefficient> coefficients;
  std::string note;
};

/// The bundled reference table. These values are not computed here: they
/// come from Bott residue-formula computations in the literature
/// (Gorodentsev and Leenson, MPI preprint 96-49) and are shipped as
/// read-only regression data.
const std::vector<ZSeries>& known_z_table();

/// Lookup by index; DomainError when the table has no such series.
const ZSeries& known_z_series(int index);

}  // namespace sdual
