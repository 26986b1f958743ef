#include "xta/parallel.hpp"

#include <cstdlib>
#include <string>

namespace xta {

unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("XTA_THREADS");
  if (env == nullptr) return hw;
  try {
    const long requested = std::stol(env);
    if (requested > 0) return static_cast<unsigned>(requested);
  } catch (const std::exception&) {
  }
  return hw;
}

}  // namespace xta
