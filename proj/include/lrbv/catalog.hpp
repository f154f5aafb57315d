#pragma once

#include "lrbv/algebra_file.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lrbv {

struct CatalogEntry {
  std::string_view name;
  std::string_view text;
};

// Bundled algebra files, sorted by name.
const std::vector<CatalogEntry>& catalog();
std::optional<std::string_view> catalog_text(std::string_view name);

// Loads a bundled entry; the source is reported as "catalog:<name>".
AlgebraFile load_catalog(std::string_view name);

// "catalog:<name>" loads a bundled entry, anything else is a path.
AlgebraFile load_algebra(const std::string& spec);

}  // namespace lrbv
