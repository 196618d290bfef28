#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppa/dynamics.hpp"
#include "ppa/model.hpp"
#include "ppa/structures.hpp"

namespace ppa {

enum class CheckStatus { pass, fail, skipped, info };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::optional<std::string> lambda;
  std::optional<std::string> value;
  std::optional<std::string> witness;
  std::optional<std::string> reason;
  std::int64_t millis = 0;
};

struct CheckReport {
  std::string model;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool failed() const;
};

struct RunOptions {
  std::uint64_t seed = 1;
  bool timings = false;
  std::size_t rank_samples = 16;
};

/// The Poisson or Nambu structure a model declares.
struct BuiltModel {
  std::optional<PoissonStructure> poisson;
  std::optional<NambuStructure> nambu;
};

BuiltModel build_structure(const ModelSpec& spec);

/// Vector field of the model's hamiltonian(s).
PolyVectorField model_vector_field(const ModelSpec& spec, const BuiltModel& built);

CheckReport run_checks(const ModelSpec& spec, const RunOptions& options = {});

std::string report_json(const CheckReport& report);
std::string report_text(const CheckReport& report);

}  // namespace ppa
