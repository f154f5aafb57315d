#include "lrbv/catalog.hpp"

namespace lrbv {

std::optional<std::string_view> catalog_text(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e.text;
  return std::nullopt;
}

AlgebraFile load_catalog(std::string_view name) {
  const std::string source = "catalog:" + std::string(name);
  auto text = catalog_text(name);
  if (!text) throw InputError(source, 0, 0, "no such catalog entry");
  return parse_algebra_file(std::string(*text), source);
}

AlgebraFile load_algebra(const std::string& spec) {
  constexpr std::string_view prefix = "catalog:";
  if (spec.rfind(prefix, 0) == 0) return load_catalog(std::string_view(spec).substr(prefix.size()));
  return load_algebra_file(spec);
}

}  // namespace lrbv
