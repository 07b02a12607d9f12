#include "filtforge/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace filtforge {

int configure_threads_from_env() {
  if (const char* raw = std::getenv("FORGE_THREADS")) {
    try {
      const int requested = std::stoi(raw);
      if (requested > 0) omp_set_num_threads(requested);
    } catch (const std::exception&) {
      // unparsable values leave the OpenMP default in place
    }
  }
  return omp_get_max_threads();
}

}  // namespace filtforge
