#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace bracelab {

/// Dense element index of a finite group; 0 is always the identity.
using Elem = int;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed builder spec, bad file, or invalid arguments.
struct spec_error : error {
  using error::error;
};

/// An order/size bound was exceeded.
struct cap_error : error {
  using error::error;
};

/// A construction-time verification failed (broken table, axiom violation).
struct invariant_error : error {
  using error::error;
};

/// Process-wide worker count for the parallel verification loops.
int default_jobs();
void set_default_jobs(int jobs);

/// Runs fn(begin, end) over disjoint chunks of [0, n). jobs == 0 uses the
/// process default; jobs == 1 runs inline.
void parallel_chunks(int n, const std::function<void(int, int)>& fn, int jobs = 0);

/// True iff pred(i) holds for all i in [0, n). Short-circuits across chunks.
bool parallel_all(int n, const std::function<bool(int)>& pred, int jobs = 0);

}  // namespace bracelab
