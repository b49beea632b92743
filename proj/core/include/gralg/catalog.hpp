#pragma once

#include "gralg/algebra.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gralg {

// Named constructions; see catalog_names() for the accepted names and parameter counts.
GradedAlgebra paper_catalog(std::string_view name, const std::vector<long>& params = {});

// Accepts "name", "name(p1,p2)" and an optional "catalog:" prefix.
GradedAlgebra catalog_algebra(std::string_view spec);

struct CatalogEntry {
  std::string name;
  std::size_t param_count;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_names();

std::string matrix_unit_label(std::size_t k, std::size_t i, std::size_t j);

} // namespace gralg
