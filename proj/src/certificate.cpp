#include "sperner/certificate.hpp"

namespace sperner {

std::string to_string(Status s) { return s == Status::Pass ? "PASS" : "FAIL"; }

nlohmann::json Certificate::to_json() const {
  return {{"kind", kind},
          {"status", to_string(status)},
          {"spaceSize", space_size},
          {"witness", witness},
          {"details", details}};
}

}  // namespace sperner
