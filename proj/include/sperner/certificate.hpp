#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace sperner {

enum class Status { Pass, Fail };

/// Machine-readable verification outcome. `witness` holds a counterexample
/// (or a requested object) and is null when none exists.
struct Certificate {
  std::string kind;
  Status status = Status::Fail;
  std::uint64_t space_size = 0;
  nlohmann::json witness = nullptr;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return status == Status::Pass; }
  nlohmann::json to_json() const;
};

std::string to_string(Status s);

}  // namespace sperner
