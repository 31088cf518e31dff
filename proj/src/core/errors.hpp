#pragma once

#include <stdexcept>
#include <string>

#include "rdmecrit.h"

namespace rdmecrit {

// Core failures carry the C-API status code so the boundary layer can map
// them without string matching.
class Error : public std::runtime_error {
 public:
  Error(rdmec_status code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  rdmec_status code() const noexcept { return code_; }

 private:
  rdmec_status code_;
};

[[noreturn]] inline void fail(rdmec_status code, const std::string &msg) {
  throw Error(code, msg);
}

inline void require(bool ok, rdmec_status code, const std::string &msg) {
  if (!ok) fail(code, msg);
}

}  // namespace rdmecrit
