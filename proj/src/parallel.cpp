#include "crossmin/parallel.hpp"

#include <omp.h>

namespace crossmin {

namespace {
const int default_threads = omp_get_max_threads();
}

void set_thread_count(int threads) {
  omp_set_num_threads(threads < 1 ? default_threads : threads);
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace crossmin
