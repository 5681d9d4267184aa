#pragma once

#include <cstddef>
#include <string>

namespace symlift {

// Desk-scale limits on the brute-force routines. Setting the environment
// variable SYMLIFT_GUARD_OVERRIDE to a non-empty value other than "0" lifts
// all of them, at the caller's own risk.
struct Guards {
  static constexpr std::size_t kVertexVars = 8;
  static constexpr std::size_t kVertexConstraints = 40;
  static constexpr std::size_t kExtensionAux = 64;
  static constexpr int kSupportN = 6;
  static constexpr int kManageableN = 4;
  static constexpr int kManageableK = 3;
};

bool guards_overridden();

// Throws GuardError("<what> exceeds desk-scale guard") unless `ok` holds or
// guards are overridden.
void require_guard(bool ok, const std::string& what);

}  // namespace symlift
