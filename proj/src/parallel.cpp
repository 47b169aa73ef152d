#include "axcat/parallel.hpp"

namespace axcat {

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace axcat
