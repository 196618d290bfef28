#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ppa/model.hpp"

namespace ppa {

using Bindings = std::map<std::string, Rational, std::less<>>;

struct ParamSpec {
  std::string name;
  Rational default_value;
};

struct CatalogInfo {
  std::string name;
  std::string summary;
  std::vector<ParamSpec> params;
  /// Two further bindings the entry is known to pass at.
  std::vector<Bindings> alternates;
};

const std::vector<CatalogInfo>& catalog_entries();
const CatalogInfo& catalog_info(std::string_view name);

/// Builds the named model; unknown names and guard violations throw CatalogError.
ModelSpec build_model(std::string_view name, const Bindings& overrides = {});

}  // namespace ppa
