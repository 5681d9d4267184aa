#include "symlift/guards.hpp"

#include <cstdlib>
#include <cstring>

#include "symlift/error.hpp"

namespace symlift {

bool guards_overridden() {
  const char* v = std::getenv("SYMLIFT_GUARD_OVERRIDE");
  return v != nullptr && *v != '\0' && std::strcmp(v, "0") != 0;
}

void require_guard(bool ok, const std::string& what) {
  if (ok || guards_overridden()) return;
  throw GuardError(what + " exceeds desk-scale guard (set SYMLIFT_GUARD_OVERRIDE to lift)");
}

}  // namespace symlift
