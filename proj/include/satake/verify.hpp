#pragma once

#include "satake/config.hpp"

#include <cstdint>
#include <string>

namespace satake {

struct VerifyReport {
  int passed = 0;
  int failed = 0;
  std::string text;

  bool ok() const { return failed == 0; }
  void merge(const VerifyReport& other) {
    passed += other.passed;
    failed += other.failed;
    text += other.text;
  }
};

VerifyReport verify_group(const WorkbenchConfig& cfg, std::uint64_t seed, int cases);
VerifyReport verify_hecke(const WorkbenchConfig& cfg, std::uint64_t seed, int cases);
VerifyReport verify_weyl(std::uint64_t seed, int cases);
VerifyReport verify_char(std::uint64_t seed, int cases);
VerifyReport verify_all(const WorkbenchConfig& cfg, std::uint64_t seed, int cases);

}  // namespace satake
